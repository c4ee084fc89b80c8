#include "dualhopf/cli.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualhopf/coalgebra.hpp"
#include "dualhopf/duality.hpp"
#include "dualhopf/errors.hpp"
#include "dualhopf/expression.hpp"
#include "dualhopf/hopf.hpp"
#include "dualhopf/operators.hpp"
#include "dualhopf/shuffle.hpp"
#include "dualhopf/suites.hpp"

namespace dualhopf::cli {

namespace {

struct Options {
  std::string algebra = "ge1";
  std::string format = "text";
  std::vector<std::string> inputs;
  std::string op;
  bool inverse = false;
  std::string suite = "all";
  int max_grade = 5;
  int grade = 1;
  std::uint64_t seed = 0;
  bool seeded = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Format format_of(const Options& o) { return parse_format(o.format); }

std::string render_rational(const Rational& r, Format format) {
  switch (format) {
    case Format::text: return r.str();
    case Format::structured: return nlohmann::json{{"value", r.fraction_str()}}.dump();
    case Format::latex:
      if (r.is_integer()) return r.str();
      return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + (r.sign() < 0 ? (-r).numerator_str() : r.numerator_str()) +
             "}{" + r.denominator_str() + "}";
  }
  return {};
}

void expect_inputs(const Options& o, std::size_t n) {
  if (o.inputs.size() != n)
    throw UsageError("expected " + std::to_string(n) + " expression argument(s), got " +
                     std::to_string(o.inputs.size()));
}

Element primal(const std::string& src, Sector sector) { return parse_element(src, sector); }
DualElement dual(const std::string& src, Sector sector) { return parse_dual_element(src, sector); }

// Derivations act on the space selected by the expression's trailing "*".
std::string run_derive(const Options& o, Sector sector, Format format) {
  expect_inputs(o, 1);
  OperatorId op = parse_operator(o.op);
  AnyElement x = parse_expression(o.inputs[0], sector);
  if (auto* f = std::get_if<DualElement>(&x)) {
    if (op.kind == OperatorKind::J_le0_star && sector == Sector::ge1) op.kind = OperatorKind::J_ge1_star;
    return render(apply(op, *f), format);
  }
  return render(apply(op, std::get<Element>(x)), format);
}

std::string run_enumerate(const Options& o, Sector sector, Format format) {
  if (o.grade < 0) throw UsageError("--grade must be >= 0");
  const auto words = enumerate_basis(sector, o.grade);
  if (format == Format::structured) {
    nlohmann::json doc{{"space", sector_name(sector)}, {"grade", o.grade}, {"words", nlohmann::json::array()}};
    for (const auto& w : words) doc["words"].push_back(w.entries());
    return doc.dump();
  }
  std::string text;
  for (const auto& w : words) {
    if (!text.empty()) text += '\n';
    text += format == Format::latex ? render_latex(Element(sector, w)) : (w.is_unit() ? std::string("1") : w.str());
  }
  return text;
}

int run_verify(const Options& o, std::ostream& out) {
  if (o.max_grade < 1) throw UsageError("--max-grade must be >= 1");
  Report report = suites::run(o.suite, o.max_grade);
  if (o.seeded) report.append(roundtrip_check(o.seed, 1000, o.max_grade));
  if (o.format == "structured")
    out << report.to_json().dump(2) << '\n';
  else
    out << report.to_text();
  return report.passed() ? 0 : 1;
}

std::string dispatch(const std::string& command, const Options& o) {
  const Sector sector = parse_sector(o.algebra);
  const Format format = format_of(o);
  if (command == "shuffle") {
    expect_inputs(o, 2);
    return render(shuffle(primal(o.inputs[0], sector), primal(o.inputs[1], sector)), format);
  }
  if (command == "coproduct") {
    expect_inputs(o, 1);
    return render(coproduct(primal(o.inputs[0], sector)), format);
  }
  if (command == "antipode") {
    expect_inputs(o, 1);
    return render(antipode(primal(o.inputs[0], sector)), format);
  }
  if (command == "derive") return run_derive(o, sector, format);
  if (command == "phi") {
    expect_inputs(o, 1);
    if (o.inverse) return render(phi_inverse(dual(o.inputs[0], Sector::le0)), format);
    return render(phi(primal(o.inputs[0], Sector::ge1)), format);
  }
  if (command == "phi-star") {
    expect_inputs(o, 1);
    if (o.inverse) return render(psi(dual(o.inputs[0], Sector::ge1)), format);
    return render(phi_star(primal(o.inputs[0], Sector::le0)), format);
  }
  if (command == "pair") {
    expect_inputs(o, 2);
    return render_rational(pair(dual(o.inputs[0], sector), primal(o.inputs[1], sector)), format);
  }
  if (command == "dual-product") {
    expect_inputs(o, 2);
    return render(dual_product(dual(o.inputs[0], sector), dual(o.inputs[1], sector)), format);
  }
  if (command == "dual-coproduct") {
    expect_inputs(o, 1);
    return render(dual_coproduct(dual(o.inputs[0], sector)), format);
  }
  if (command == "coefficient") {
    expect_inputs(o, 3);
    auto word = [&](const std::string& src) {
      const AnyElement x = parse_expression(src, sector);
      const auto* terms = std::get_if<DualElement>(&x);
      if (!terms || terms->size() != 1 || !terms->begin()->second.is_one())
        throw UsageError("coefficient expects single dual basis words such as [0,-1]*, got '" + src + "'");
      return terms->begin()->first;
    };
    return render_rational(
        structure_coefficient(sector, word(o.inputs[0]), word(o.inputs[1]), word(o.inputs[2])), format);
  }
  if (command == "enumerate") return run_enumerate(o, sector, format);
  throw UsageError("unknown command '" + command + "'");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Hopf algebras H>=1 and H<=0 and their graded duals", "dualhopf"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> algebras{"ge1", "le0"};
  const std::vector<std::string> formats{"text", "structured", "latex"};

  // One plain string per expression, so CLI11 does not read "[2,1]" as a list.
  std::array<std::string, 3> slots;
  auto add_inputs = [&](CLI::App* sub, std::size_t inputs, const std::string& what) {
    for (std::size_t i = 0; i < inputs; ++i)
      sub->add_option("X" + std::to_string(i + 1), slots[i], what)->required();
  };

  auto common = [&](CLI::App* sub, std::size_t inputs, const std::string& what) {
    sub->add_option("--algebra,-a", o.algebra, "ge1 or le0")->check(CLI::IsMember(algebras));
    sub->add_option("--format,-f", o.format, "text, structured or latex")->check(CLI::IsMember(formats));
    add_inputs(sub, inputs, what);
    return sub;
  };

  common(app.add_subcommand("shuffle", "Shuffle product of two elements"), 2, "X Y");
  common(app.add_subcommand("coproduct", "Coproduct of an element"), 1, "X");
  common(app.add_subcommand("antipode", "Antipode of an element"), 1, "X");
  auto* derive = common(app.add_subcommand("derive", "Apply I, J, J1, J0, delta:i, p:i, tdelta:i, tp:i or Jstar"),
                        0, "");
  derive->add_option("operator", o.op, "operator name")->required();
  add_inputs(derive, 1, "X");
  auto* phi_cmd = common(app.add_subcommand("phi", "phi: ge1 -> le0-dual"), 1, "X");
  phi_cmd->add_flag("--inverse", o.inverse, "le0-dual -> ge1");
  auto* phi_star_cmd = common(app.add_subcommand("phi-star", "phi*: le0 -> ge1-dual"), 1, "X");
  phi_star_cmd->add_flag("--inverse", o.inverse, "ge1-dual -> le0 (psi)");
  common(app.add_subcommand("pair", "Pairing <F, X> of a dual and a primal element"), 2, "F X");
  common(app.add_subcommand("dual-product", "Product on the graded dual"), 2, "F G");
  common(app.add_subcommand("dual-coproduct", "Coproduct on the graded dual"), 1, "F");
  common(app.add_subcommand("coefficient", "<[s]*, [u] sh [v]> for dual words S U V"), 3, "S U V");
  auto* enumerate = common(app.add_subcommand("enumerate", "List the basis of one grade"), 0, "");
  enumerate->add_option("--grade,-g", o.grade, "grade")->required();

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suite_choices = suites::suite_names();
  verify->add_option("--suite,-s", o.suite, "suite name")->check(CLI::IsMember(suite_choices));
  verify->add_option("--max-grade,-n", o.max_grade, "largest grade checked");
  verify->add_option("--format,-f", o.format, "text or structured")
      ->check(CLI::IsMember(std::vector<std::string>{"text", "structured"}));
  auto* seed = verify->add_option("--seed", o.seed, "also run 1000 random parse/render round trips per space");

  // CLI11 would take "-[2]" for an option name.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  for (auto& a : reversed)
    if (a.rfind("-[", 0) == 0) a.insert(a.begin(), ' ');
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  o.seeded = seed->count() > 0;
  const CLI::App* chosen = app.get_subcommands().front();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const CLI::Option* slot = chosen->get_option_no_throw("X" + std::to_string(i + 1));
    if (slot && slot->count() > 0) o.inputs.push_back(slots[i]);
  }

  const std::string command = chosen->get_name();
  try {
    if (command == "verify") return run_verify(o, out);
    out << dispatch(command, o) << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

namespace {

Composition random_word(std::mt19937_64& rng, Sector sector, int g) {
  std::vector<int> parts;
  // A random composition of g into positive parts, then mapped into the sector.
  int remaining = g;
  while (remaining > 0) {
    const int part = std::uniform_int_distribution<int>(1, remaining)(rng);
    parts.push_back(sector == Sector::ge1 ? part : 1 - part);
    remaining -= part;
  }
  return Composition(parts);
}

template <bool Dual>
BasicElement<Dual> random_element(std::mt19937_64& rng, Sector sector, int max_grade) {
  BasicElement<Dual> x(sector);
  const int terms = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < terms; ++i) {
    const int g = std::uniform_int_distribution<int>(0, max_grade)(rng);
    const long num = std::uniform_int_distribution<long>(-20, 20)(rng);
    const long den = std::uniform_int_distribution<long>(1, 6)(rng);
    x.add_term(random_word(rng, sector, g), Rational(num, den));
  }
  return x;
}

}  // namespace

Report roundtrip_check(std::uint64_t seed, int count, int max_grade) {
  Report report;
  report.suite = "roundtrip";
  std::mt19937_64 rng(seed);
  for (Space space : {Space::ge1, Space::le0, Space::ge1_dual, Space::le0_dual}) {
    const Sector sector = sector_of(space);
    Check& check = report.add("parse(render(x)) = x for " + std::to_string(count) + " random elements (seed " +
                                  std::to_string(seed) + ")",
                              std::string(space_name(space)), max_grade);
    for (int i = 0; i < count; ++i) {
      if (is_dual(space)) {
        const DualElement f = random_element<true>(rng, sector, max_grade);
        const std::string text = render_text(f);
        const DualElement back = parse_dual_element(text, sector);
        check.record(back == f, [&] { return text + " -> " + render_text(back); });
      } else {
        const Element x = random_element<false>(rng, sector, max_grade);
        const std::string text = render_text(x);
        const Element back = parse_element(text, sector);
        check.record(back == x, [&] { return text + " -> " + render_text(back); });
      }
    }
  }
  return report;
}

}  // namespace dualhopf::cli
