#include <doctest.h>

#include "dualhopf/coalgebra.hpp"
#include "dualhopf/duality.hpp"
#include "dualhopf/shuffle.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dualhopf;
using test::ge1;
using test::ge1_dual;
using test::le0;
using test::le0_dual;

namespace {

DualTensor dual_tensor(Sector sector, std::initializer_list<std::tuple<Composition, Composition, Rational>> terms) {
  DualTensor t(sector);
  for (const auto& [u, v, c] : terms) t.add_term(u, v, c);
  return t;
}

// (f·g)(w) = (f ⊗ g)(Δ(w)) with Δ taken from the reference recursion.
DualElement reference_dual_product_le0(const Composition& f, const Composition& g) {
  DualElement out(Sector::le0);
  const int total = grade(f, Sector::le0) + grade(g, Sector::le0);
  for (const auto& w : enumerate_basis(Sector::le0, total))
    out.add_term(w, oracle::coproduct_le0(w).coefficient(f, g));
  return out;
}

}  // namespace

TEST_CASE("phi and its inverse") {
  CHECK(phi(ge1("1")) == le0_dual("1*"));
  CHECK(phi(ge1("[2,1]")) == le0_dual("[-1,0]*"));
  CHECK(phi(ge1("2[1,1]")) == le0_dual("2[0,0]*"));
  CHECK(phi_inverse(le0_dual("[0]*")) == ge1("[1]"));
  CHECK(phi_inverse(le0_dual("[-2,0]*")) == ge1("[3,1]"));
  CHECK(phi_inverse(le0_dual("1*")) == ge1("1"));
}

TEST_CASE("phi* and psi") {
  CHECK(phi_star(le0("[0]")) == ge1_dual("[1]*"));
  CHECK(phi_star(le0("1")) == ge1_dual("1*"));
  CHECK(phi_star(le0("[-1,0]")) == ge1_dual("[2,1]*"));
  for (const auto& w : enumerate_basis_up_to(Sector::le0, 6)) {
    const Element x(Sector::le0, w);
    CHECK(psi(phi_star(x)) == x);
  }
}

TEST_CASE("dual product") {
  CHECK(dual_product(le0_dual("[0]*"), le0_dual("[0]*")) == le0_dual("2[0,0]*"));
  CHECK(dual_product(le0_dual("1*"), le0_dual("[0,-1]* + [0]*")) == le0_dual("[0,-1]* + [0]*"));
  CHECK(dual_product(le0_dual("[0]*"), le0_dual("[-1]*")) == le0_dual("2[-1,0]* + [0,-1]*"));
  for (const auto& f : enumerate_basis_up_to(Sector::le0, 5))
    for (const auto& g : enumerate_basis_up_to(Sector::le0, 5 - grade(f, Sector::le0)))
      CHECK(dual_product(DualElement(Sector::le0, f), DualElement(Sector::le0, g)) ==
            reference_dual_product_le0(f, g));
}

TEST_CASE("dual coproduct") {
  for (int k = 0; k <= 6; ++k) {
    DualTensor expected(Sector::le0);
    for (int j = 0; j <= k; ++j)
      expected.add_term(Composition(std::vector<int>(j, 0)), Composition(std::vector<int>(k - j, 0)), 1);
    CHECK(dual_coproduct(DualElement(Sector::le0, Composition(std::vector<int>(k, 0)))) == expected);
  }
  CHECK(dual_coproduct(le0_dual("1*")) == dual_tensor(Sector::le0, {{{}, {}, 1}}));
  CHECK(dual_coproduct(le0_dual("[-1]*")) == dual_tensor(Sector::le0, {{{}, {-1}, 1}, {{-1}, {}, 1}}));

  // [1_k] = x1^k arises only from [1_j] sh [1_{k-j}], which has C(k, j) interleavings.
  for (int k = 0; k <= 6; ++k) {
    DualTensor expected(Sector::ge1);
    for (int j = 0; j <= k; ++j)
      expected.add_term(Composition(std::vector<int>(j, 1)), Composition(std::vector<int>(k - j, 1)),
                        Rational::binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
    CHECK(dual_coproduct(DualElement(Sector::ge1, Composition(std::vector<int>(k, 1)))) == expected);
  }
}

TEST_CASE("structure coefficients") {
  CHECK(coefficient_A(Composition{1, 1}, Composition{1}, Composition{1}) == Rational(2));
  CHECK(coefficient_a(Composition{0, 0}, Composition{0}, Composition{0}) == Rational(1));
  CHECK(coefficient_a(Composition{-1, 0}, Composition{0}, Composition{-1}) == Rational(0));
  CHECK(coefficient_a(Composition{0, -1}, Composition{-1}, Composition{0}) == Rational(-1));
}

TEST_CASE("phi intertwines the structures on small cases") {
  CHECK(phi(shuffle_ge1(ge1("[1]"), ge1("[1]"))) == dual_product(le0_dual("[0]*"), le0_dual("[0]*")));
  const Tensor d = coproduct_ge1(ge1("[1,1]"));
  CHECK(phi_tensor(d) == dual_coproduct(le0_dual("[0,0]*")));
}

TEST_CASE("duality and coefficient reports pass at grade 5") {
  CHECK(verify_duality(5).passed());
  CHECK(verify_coefficients(5).passed());
}
