#include <doctest.h>

#include "dualhopf/coalgebra.hpp"
#include "dualhopf/errors.hpp"
#include "dualhopf/expression.hpp"
#include "dualhopf/shuffle.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dualhopf;
using test::ge1;
using test::le0;

namespace {

Tensor tensor(Sector sector, std::initializer_list<std::tuple<Composition, Composition, Rational>> terms) {
  Tensor t(sector);
  for (const auto& [u, v, c] : terms) t.add_term(u, v, c);
  return t;
}

}  // namespace

TEST_CASE("GE1 coproduct examples") {
  CHECK(coproduct_ge1(ge1("1")) == tensor(Sector::ge1, {{{}, {}, 1}}));
  CHECK(coproduct_ge1(ge1("[1,1]")) == tensor(Sector::ge1, {{{}, {1, 1}, 1}, {{1}, {1}, 1}, {{1, 1}, {}, 1}}));
  CHECK(coproduct_ge1(ge1("[2]")) == tensor(Sector::ge1, {{{}, {2}, 1}, {{2}, {}, 1}}));
  CHECK(coproduct_ge1(ge1("[2,1]")) == tensor(Sector::ge1, {{{}, {2, 1}, 1}, {{2}, {1}, 1}, {{2, 1}, {}, 1}}));
}

TEST_CASE("deconcatenation on [1_k]") {
  for (int k = 0; k <= 7; ++k) {
    Tensor expected(Sector::ge1);
    for (int j = 0; j <= k; ++j)
      expected.add_term(Composition(std::vector<int>(j, 1)), Composition(std::vector<int>(k - j, 1)), 1);
    CHECK(coproduct_word(Composition(std::vector<int>(k, 1)), Sector::ge1) == expected);
  }
}

TEST_CASE("LE0 coproduct examples") {
  CHECK(coproduct_le0(le0("[-1]")) == tensor(Sector::le0, {{{}, {-1}, 1}, {{-1}, {}, 1}}));
  CHECK(coproduct_le0(le0("[0,0]")) == tensor(Sector::le0, {{{}, {0, 0}, 1}, {{0}, {0}, 2}, {{0, 0}, {}, 1}}));
  CHECK(coproduct_le0(le0("[-1,0]")) ==
        tensor(Sector::le0, {{{}, {-1, 0}, 1}, {{0}, {-1}, 2}, {{-1}, {0}, 2}, {{-1, 0}, {}, 1}}));
}

TEST_CASE("LE0 coproduct agrees with the reference recursion up to grade 7") {
  for (const auto& w : enumerate_basis_up_to(Sector::le0, 7)) {
    CAPTURE(w.str());
    CHECK(coproduct_word(w, Sector::le0) == oracle::coproduct_le0(w));
  }
}

TEST_CASE("LE0 product agrees with the reference recursion up to grade 6") {
  for (const auto& u : enumerate_basis_up_to(Sector::le0, 6))
    for (const auto& v : enumerate_basis_up_to(Sector::le0, 6 - grade(u, Sector::le0))) {
      CAPTURE(u.str());
      CAPTURE(v.str());
      CHECK(shuffle_words(u, v, Sector::le0) == oracle::shuffle_le0(u, v));
    }
}

TEST_CASE("GE1 coproduct is the transpose of the LE0 product up to weight 6") {
  for (const auto& w : enumerate_basis_up_to(Sector::ge1, 6)) {
    CAPTURE(w.str());
    CHECK(coproduct_word(w, Sector::ge1) == oracle::coproduct_ge1(w));
  }
}

TEST_CASE("pivot choice does not matter") {
  const Composition w{3, 1, 2};
  auto last = [](const Composition& x) {
    std::size_t i = x.depth() - 1;
    while (x[i] <= 1) --i;
    return i;
  };
  CHECK(coproduct_ge1_with_pivot(w, last) == coproduct_word(w, Sector::ge1));
  CHECK_THROWS_AS(coproduct_ge1_with_pivot(w, [](const Composition&) { return std::size_t{1}; }), DomainError);
}

TEST_CASE("counit and reduced coproduct") {
  CHECK(counit(le0("1")) == Rational(1));
  CHECK(counit(le0("[0,-3]")) == Rational(0));
  CHECK(counit(ge1("5 + 2[1]")) == Rational(5));
  CHECK(reduced_coproduct(ge1("[2]")).is_zero());
  CHECK(reduced_coproduct(le0("[0,0]")) == tensor(Sector::le0, {{{0}, {0}, 2}}));
  CHECK(reduced_coproduct(ge1("[1,1]")) == tensor(Sector::ge1, {{{1}, {1}, 1}}));
  CHECK_THROWS_AS(reduced_coproduct(ge1("[1] + [2]")), DomainError);
  CHECK_THROWS_AS(reduced_coproduct(ge1("1")), DomainError);
}

TEST_CASE("GE1 coproduct is not cocommutative") {
  const Tensor t = coproduct_ge1(ge1("[2,1]"));
  CHECK_FALSE(flip(t) == t);
}
