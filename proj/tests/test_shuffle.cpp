#include <doctest.h>

#include <string>

#include "dualhopf/errors.hpp"
#include "dualhopf/shuffle.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dualhopf;
using test::ge1;
using test::le0;

using oracle::interleavings;

TEST_CASE("GE1 products") {
  CHECK(shuffle_ge1(ge1("1"), ge1("[2,1]")) == ge1("[2,1]"));
  CHECK(shuffle_ge1(ge1("[1]"), ge1("[1]")) == ge1("2[1,1]"));
  CHECK(shuffle_ge1(ge1("[2]"), ge1("[2]")) == ge1("2[2,2] + 4[3,1]"));
  CHECK(shuffle_ge1(ge1("[2]"), ge1("[1]")) == interleavings(Composition{2}, Composition{1}));
}

TEST_CASE("GE1 product agrees with interleaving counts up to weight 7") {
  for (const auto& u : enumerate_basis_up_to(Sector::ge1, 7))
    for (const auto& v : enumerate_basis_up_to(Sector::ge1, 7 - grade(u, Sector::ge1))) {
      CAPTURE(u.str());
      CAPTURE(v.str());
      CHECK(shuffle_ge1(Element(Sector::ge1, u), Element(Sector::ge1, v)) == interleavings(u, v));
    }
}

TEST_CASE("binary encoding") {
  CHECK(binary_word_str(encode_word(Composition{2, 1})) == "x0x1x1");
  CHECK(decode_word(encode_word(Composition{3, 1, 2})) == Composition{3, 1, 2});
  CHECK_THROWS_AS(decode_word(BinaryWord{true, false}), DomainError);
}

TEST_CASE("LE0 products") {
  CHECK(shuffle_le0(le0("[0]"), le0("[0]")) == le0("[0,0]"));
  // The J-Leibniz recursion: J([0,0]) - [0] sh J([0]) = [-1,0] - [0,-1].
  CHECK(shuffle_le0(le0("[-1]"), le0("[0]")) == le0("[-1,0] - [0,-1]"));
  CHECK(shuffle_le0(le0("[0]"), le0("[-1]")) == le0("[0,-1]"));
  CHECK_FALSE(shuffle_le0(le0("[-1]"), le0("[0]")) == shuffle_le0(le0("[0]"), le0("[-1]")));
  CHECK(shuffle_le0(le0("3"), le0("[0,-1]")) == le0("3[0,-1]"));
  CHECK_THROWS_AS(shuffle_le0(ge1("[1]"), le0("[0]")), SpaceMismatchError);
}

TEST_CASE("componentwise tensor product") {
  Tensor a(Sector::le0), b(Sector::le0);
  a.add_term(Composition{}, Composition{0}, 1);
  b.add_term(Composition{0}, Composition{}, 1);
  Tensor ab(Sector::le0);
  ab.add_term(Composition{0}, Composition{0}, 1);
  CHECK(tensor_shuffle(a, b) == ab);

  Tensor p(Sector::le0);
  p.add_term(Composition{}, Composition{0}, 1);
  p.add_term(Composition{0}, Composition{}, 1);
  Tensor pp(Sector::le0);
  pp.add_term(Composition{}, Composition{0, 0}, 1);
  pp.add_term(Composition{0}, Composition{0}, 2);
  pp.add_term(Composition{0, 0}, Composition{}, 1);
  CHECK(tensor_shuffle(p, p) == pp);

  Tensor one(Sector::le0);
  one.add_term(Composition{}, Composition{}, 1);
  CHECK(tensor_shuffle(pp, one) == pp);
}
