#include <doctest.h>

#include <algorithm>
#include <set>

#include "dualhopf/composition.hpp"
#include "dualhopf/errors.hpp"
#include "dualhopf/linear.hpp"
#include "dualhopf/rational.hpp"
#include "helpers.hpp"

using namespace dualhopf;

namespace {

// Every tuple with entries in a box around the sector, filtered by grade.
std::set<std::vector<int>> brute_force_basis(Sector sector, int g) {
  std::set<std::vector<int>> out;
  if (g == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  const int lo = sector == Sector::ge1 ? 1 : 1 - g;
  const int hi = sector == Sector::ge1 ? g : 0;
  for (int depth = 1; depth <= g; ++depth) {
    std::vector<int> w(depth, lo);
    while (true) {
      int graded = 0;
      for (int s : w) graded += sector == Sector::ge1 ? s : 1 - s;
      if (graded == g) out.insert(w);
      int i = 0;
      while (i < depth && w[i] == hi) w[i++] = lo;
      if (i == depth) break;
      ++w[i];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rational(3, 6) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational(5).fraction_str() == "5/1");
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::binomial(6, 3) == Rational(20));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  Rational r(1);
  CHECK_THROWS_AS(r /= Rational(0), std::domain_error);
}

TEST_CASE("compositions order by depth then lexicographically") {
  CHECK(Composition{5} < Composition{1, 1});
  CHECK(Composition{1, 2} < Composition{2, 1});
  CHECK(Composition{} < Composition{-3});
  CHECK(Composition{}.str() == "1");
  CHECK(Composition{2, -1}.str() == "[2,-1]");
}

TEST_CASE("grading") {
  CHECK(grade(Composition{2, 1}, Sector::ge1) == 3);
  CHECK(grade(Composition{-1, 0}, Sector::le0) == 3);
  CHECK(grade(Composition{}, Sector::ge1) == 0);
  CHECK(grade(Composition{}, Sector::le0) == 0);
  CHECK_THROWS_AS(grade(Composition{0}, Sector::ge1), SignConstraintError);
  CHECK_THROWS_AS(grade(Composition{1}, Sector::le0), SignConstraintError);
}

TEST_CASE("basis enumeration matches brute force") {
  CHECK(enumerate_basis(Sector::ge1, 3) ==
        std::vector<Composition>{Composition{3}, Composition{1, 2}, Composition{2, 1}, Composition{1, 1, 1}});
  CHECK(enumerate_basis(Sector::le0, 2) == std::vector<Composition>{Composition{-1}, Composition{0, 0}});
  CHECK(enumerate_basis(Sector::le0, 0) == std::vector<Composition>{Composition{}});
  for (Sector sector : {Sector::ge1, Sector::le0})
    for (int g = 0; g <= 8; ++g) {
      const auto basis = enumerate_basis(sector, g);
      CHECK(std::is_sorted(basis.begin(), basis.end()));
      std::set<std::vector<int>> got;
      for (const auto& w : basis) got.insert(w.entries());
      CAPTURE(g);
      CHECK(got == brute_force_basis(sector, g));
    }
}

TEST_CASE("normalize merges, cancels and reduces") {
  const std::vector<std::pair<Composition, Rational>> a{{Composition{1}, 1}, {Composition{1}, 1}};
  CHECK(normalize(a, Sector::ge1) == Element(Sector::ge1, Composition{1}, 2));
  const std::vector<std::pair<Composition, Rational>> b{{Composition{2}, 1}, {Composition{2}, -1}};
  CHECK(normalize(b, Sector::ge1).is_zero());
  const std::vector<std::pair<Composition, Rational>> c{{Composition{0, -1}, Rational(3, 6)}};
  CHECK(normalize(c, Sector::le0).coefficient(Composition{0, -1}).str() == "1/2");
  const std::vector<std::pair<Composition, Rational>> bad{{Composition{2, -1}, 1}};
  CHECK_THROWS_AS(normalize(bad, Sector::ge1), SignConstraintError);
}

TEST_CASE("pairing") {
  CHECK(pair(test::le0_dual("[0]*"), test::le0("[0]")) == Rational(1));
  CHECK(pair(test::le0_dual("[0]*"), test::le0("[-1]")) == Rational(0));
  CHECK(pair(test::le0_dual("2[0,0]* + [-1]*"), test::le0("3[0,0]")) == Rational(6));
  CHECK_THROWS_AS(pair(test::ge1_dual("[1]*"), test::le0("[0]")), SpaceMismatchError);
}

TEST_CASE("flip") {
  Tensor t(Sector::le0);
  t.add_term(Composition{0}, Composition{-1}, 1);
  Tensor expected(Sector::le0);
  expected.add_term(Composition{-1}, Composition{0}, 1);
  CHECK(flip(t) == expected);

  Tensor u(Sector::le0);
  u.add_term(Composition{}, Composition{}, 1);
  CHECK(flip(u) == u);

  Tensor v(Sector::le0);
  v.add_term(Composition{0}, Composition{0, 0}, 2);
  v.add_term(Composition{0, 0}, Composition{0}, 1);
  Tensor w(Sector::le0);
  w.add_term(Composition{0, 0}, Composition{0}, 2);
  w.add_term(Composition{0}, Composition{0, 0}, 1);
  CHECK(flip(v) == w);
}

TEST_CASE("elements from different spaces do not mix") {
  Element a = test::ge1("[1]");
  CHECK_THROWS_AS(a += test::le0("[0]"), SpaceMismatchError);
  CHECK_THROWS_AS(Element(Sector::ge1, Composition{2, -1}), SignConstraintError);
}
