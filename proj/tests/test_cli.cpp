#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "dualhopf/cli.hpp"
#include "dualhopf/errors.hpp"
#include "dualhopf/expression.hpp"
#include "helpers.hpp"

using namespace dualhopf;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

template <bool Dual>
BasicElement<Dual> random_element(std::mt19937& rng, Sector sector) {
  BasicElement<Dual> x(sector);
  std::uniform_int_distribution<int> count(0, 5), depth(0, 4), entry(0, 3), num(-9, 9), den(1, 4);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> w(static_cast<std::size_t>(depth(rng)));
    for (int& s : w) s = sector == Sector::ge1 ? 1 + entry(rng) : -entry(rng);
    x.add_term(Composition(w), Rational(num(rng), den(rng)));
  }
  return x;
}

void check_schema(const nlohmann::json& doc, const char* list) {
  REQUIRE(doc.contains("space"));
  REQUIRE(doc.contains(list));
  for (const auto& term : doc[list]) {
    const std::string coeff = term.at("coeff");
    CHECK(coeff.find('/') != std::string::npos);
    if (std::string(list) == "terms") {
      CHECK(term.at("word").is_array());
    } else {
      CHECK(term.at("left").is_array());
      CHECK(term.at("right").is_array());
    }
  }
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(test::ge1("[2,1]") == Element(Sector::ge1, Composition{2, 1}));
  DualElement f(Sector::le0);
  f.add_term(Composition{0, 0}, 2);
  f.add_term(Composition{-1}, 1);
  CHECK(test::le0_dual("2[0,0]* + [-1]*") == f);
  CHECK_THROWS_AS(test::ge1("[2,-1]"), SignConstraintError);
  CHECK_THROWS_AS(test::ge1("[2]* + [1]"), SpaceMismatchError);
  try {
    test::ge1("[2,,1]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("text rendering") {
  CHECK(render_text(Element(Sector::ge1, Composition{1, 1}, 2)) == "2[1,1]");
  CHECK(render_text(Element(Sector::le0)) == "0");
  Tensor t(Sector::le0);
  t.add_term(Composition{}, Composition{0, 0}, 1);
  t.add_term(Composition{0}, Composition{0}, 2);
  t.add_term(Composition{0, 0}, Composition{}, 1);
  CHECK(render_text(t) == "1(x)[0,0] + 2[0](x)[0] + [0,0](x)1");
  CHECK(render_latex(test::le0_dual("1/2[0]*")) == "\\frac{1}{2}[0]^{*}");
}

TEST_CASE("parse and render round trip on 1000 random elements per space") {
  std::mt19937 rng(20261015);
  for (Sector sector : {Sector::ge1, Sector::le0})
    for (int i = 0; i < 1000; ++i) {
      const Element x = random_element<false>(rng, sector);
      const DualElement f = random_element<true>(rng, sector);
      CHECK(parse_element(render_text(x), sector) == x);
      CHECK(parse_dual_element(render_text(f), sector) == f);
    }
  CHECK(cli::roundtrip_check(7, 1000, 6).passed());
}

TEST_CASE("computation commands") {
  CHECK(run({"shuffle", "--algebra", "ge1", "[2]", "[2]"}).out == "2[2,2] + 4[3,1]\n");
  CHECK(run({"coproduct", "--algebra", "le0", "[-1,0]"}).out ==
        "1(x)[-1,0] + 2[-1](x)[0] + 2[0](x)[-1] + [-1,0](x)1\n");
  CHECK(run({"antipode", "--algebra", "le0", "[0,0]"}).out == "[0,0]\n");
  CHECK(run({"derive", "--algebra", "le0", "J0", "[0,-1]"}).out == "[-1,-1]\n");
  CHECK(run({"derive", "delta:2", "[1,1]"}).out == "[1,2] + [2,1]\n");
  CHECK(run({"derive", "--algebra", "le0", "Jstar", "[-1,0]*"}).out == "[0,0]*\n");
  CHECK(run({"phi", "[2,1]"}).out == "[-1,0]*\n");
  CHECK(run({"phi", "--inverse", "[-2,0]*"}).out == "[3,1]\n");
  CHECK(run({"phi-star", "[-1,0]"}).out == "[2,1]*\n");
  CHECK(run({"phi-star", "--inverse", "[2,1]*"}).out == "[-1,0]\n");
  CHECK(run({"pair", "--algebra", "le0", "2[0,0]* + [-1]*", "3[0,0]"}).out == "6\n");
  CHECK(run({"dual-product", "--algebra", "le0", "[0]*", "[-1]*"}).out == "2[-1,0]* + [0,-1]*\n");
  CHECK(run({"dual-coproduct", "--algebra", "le0", "[0,0]*"}).out == "1*(x)[0,0]* + [0]*(x)[0]* + [0,0]*(x)1*\n");
  CHECK(run({"coefficient", "--algebra", "le0", "[0,-1]*", "[-1]*", "[0]*"}).out == "-1\n");
  CHECK(run({"enumerate", "--algebra", "ge1", "--grade", "3"}).out == "[3]\n[1,2]\n[2,1]\n[1,1,1]\n");
  CHECK(run({"shuffle", "-[1]", "[1]"}).out == "-2[1,1]\n");
}

TEST_CASE("structured output follows the schema") {
  const auto element = nlohmann::json::parse(run({"shuffle", "-f", "structured", "[2]", "[2]"}).out);
  check_schema(element, "terms");
  CHECK(element["space"] == "ge1");
  CHECK(element["terms"][0]["coeff"] == "2/1");
  const auto tensor = nlohmann::json::parse(run({"coproduct", "-a", "le0", "-f", "structured", "[0,0]"}).out);
  check_schema(tensor, "pairs");
  const auto dual = nlohmann::json::parse(run({"phi", "-f", "structured", "[2,1]"}).out);
  check_schema(dual, "terms");
  CHECK(dual["space"] == "le0-dual");
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "--suite", "all", "--max-grade", "5"}).code == 0);
  const Run structured = run({"verify", "--suite", "hopf", "--max-grade", "3", "--format", "structured"});
  CHECK(structured.code == 0);
  CHECK(nlohmann::json::parse(structured.out)["passed"] == true);
  CHECK(run({"verify", "--suite", "duality", "--max-grade", "3", "--seed", "11"}).code == 0);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--max-grade", "0"}).code == 2);
  CHECK(run({"verify", "--format", "latex"}).code == 2);
  CHECK(run({"shuffle", "[2,-1]", "[1]"}).code == 2);
  CHECK(run({"shuffle", "[2"}).code == 2);
  CHECK(run({"antipode", "[1]*"}).code == 2);
  CHECK(run({"derive", "J", "[1,2]"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"shuffle", "--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "--suite", "coalgebra", "--max-grade", "4"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> product{"dual-coproduct", "--algebra", "ge1", "[2,1,1]*"};
  CHECK(run(product).out == run(product).out);
}
