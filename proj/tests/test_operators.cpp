#include <doctest.h>

#include "dualhopf/errors.hpp"
#include "dualhopf/operators.hpp"
#include "helpers.hpp"

using namespace dualhopf;
using test::ge1;
using test::le0;
using test::le0_dual;

namespace {

// δ_i straight from its defining sum, on a single word.
Element naive_delta(int i, const Composition& w) {
  Element out(Sector::ge1);
  if (i > static_cast<int>(w.depth())) return out;
  for (int j = 0; j < i; ++j) {
    std::vector<int> e = w.entries();
    const int s = e[j];
    ++e[j];
    out.add_term(Composition(e), Rational(s));
  }
  return out;
}

DualElement naive_tilde_delta(int i, const Composition& w) {
  DualElement out(Sector::le0);
  if (i > static_cast<int>(w.depth())) return out;
  for (int j = 0; j < i; ++j) {
    std::vector<int> e = w.entries();
    const int s = e[j];
    --e[j];
    out.add_term(Composition(e), Rational(1 - s));
  }
  return out;
}

}  // namespace

TEST_CASE("I") {
  CHECK(apply_I(ge1("[1]")) == ge1("[2]"));
  CHECK(apply_I(ge1("[2,1]")) == ge1("[3,1]"));
  CHECK(apply_I(ge1("2[1,1] - [3]")) == ge1("2[2,1] - [4]"));
  CHECK_THROWS_AS(apply_I(ge1("1")), DomainError);
}

TEST_CASE("J on LE0 and GE1") {
  CHECK(apply_J_le0(le0("1")).is_zero());
  CHECK(apply_J_le0(le0("[0,-1]")) == le0("[-1,-1]"));
  CHECK(apply_J_le0(le0("[0] + 3")) == le0("[-1]"));
  CHECK(apply_J_ge1(ge1("[1,2]")).is_zero());
  CHECK(apply_J_ge1(ge1("[3,1]")) == ge1("[2,1]"));
  CHECK(apply_J_ge1(ge1("[2] + [1]")) == ge1("[1]"));
  CHECK_THROWS_AS(apply_J(ge1("[1,2]")), DomainError);
}

TEST_CASE("delta and p") {
  CHECK(apply_delta(1, ge1("[2]")) == ge1("2[3]"));
  CHECK(apply_delta(2, ge1("[1,1]")) == ge1("[2,1] + [1,2]"));
  CHECK(apply_delta(3, ge1("[1,1]")).is_zero());
  CHECK(apply_delta(1, ge1("1")).is_zero());
  CHECK(apply_p(1, ge1("[1]")) == ge1("[2]"));
  CHECK(apply_p(2, ge1("[3,2]")) == ge1("2[3,3]"));
  CHECK(apply_p(0, ge1("[3,2] + [1]")).is_zero());
  for (const auto& w : enumerate_basis_up_to(Sector::ge1, 6))
    for (int i = 1; i <= 6; ++i) {
      CHECK(apply_delta(i, Element(Sector::ge1, w)) == naive_delta(i, w));
      CHECK(apply_p(i, Element(Sector::ge1, w)) == naive_delta(i, w) - naive_delta(i - 1, w));
    }
}

TEST_CASE("shifted tensor") {
  Tensor t(Sector::ge1);
  t.add_term(Composition{1}, Composition{1, 1}, 1);
  Tensor expected(Sector::ge1);
  expected.add_term(Composition{1}, Composition{2, 1}, 1);
  CHECK(shifted_apply(op_identity(), op_delta(2), t) == expected);

  Tensor a(Sector::ge1);
  a.add_term(Composition{1}, Composition{}, 1);
  CHECK(shifted_apply(op_identity(), op_p(1), a).is_zero());

  Tensor b(Sector::ge1);
  b.add_term(Composition{}, Composition{1}, 1);
  Tensor b_expected(Sector::ge1);
  b_expected.add_term(Composition{}, Composition{2}, 1);
  CHECK(shifted_apply(op_identity(), op_p(1), b) == b_expected);
}

TEST_CASE("tilde delta and J* on the duals") {
  CHECK(apply_tilde_delta(1, le0_dual("[-1]*")) == le0_dual("2[-2]*"));
  CHECK(apply_tilde_delta(2, le0_dual("[0,0]*")) == le0_dual("[-1,0]* + [0,-1]*"));
  CHECK(apply_tilde_delta(2, le0_dual("[0]*")).is_zero());
  for (const auto& w : enumerate_basis_up_to(Sector::le0, 6))
    for (int i = 1; i <= 5; ++i)
      CHECK(apply_tilde_delta(i, DualElement(Sector::le0, w)) == naive_tilde_delta(i, w));

  CHECK(apply_J_le0_star(le0_dual("[-1,0]*")) == le0_dual("[0,0]*"));
  CHECK(apply_J_le0_star(le0_dual("[0,-2]*")).is_zero());
  CHECK(apply_J_le0_star(le0_dual("1*")).is_zero());
  CHECK(apply_J_ge1_star(test::ge1_dual("[1,2]*")) == test::ge1_dual("[2,2]*"));
}

TEST_CASE("operator names") {
  CHECK(parse_operator("delta:3") == op_delta(3));
  CHECK(parse_operator("p:0") == op_p(0));
  CHECK(parse_operator("Jstar").kind == OperatorKind::J_le0_star);
  CHECK(parse_operator("J1").kind == OperatorKind::J_ge1);
  CHECK_THROWS_AS(parse_operator("delta:0"), Error);
  CHECK_THROWS_AS(parse_operator("K"), Error);
  CHECK(acts_on(parse_operator("J0"), Space::le0));
  CHECK_FALSE(acts_on(parse_operator("J0"), Space::ge1));
  CHECK_THROWS(apply(parse_operator("J0"), ge1("[1]")));
}
