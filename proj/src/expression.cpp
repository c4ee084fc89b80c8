#include "dualhopf/expression.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace dualhopf {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "structured") return Format::structured;
  if (name == "latex") return Format::latex;
  throw Error("unknown format '" + std::string(name) + "' (expected text, structured or latex)");
}

namespace {

struct ParsedTerm {
  Composition word;
  Rational coeff;
  bool dual = false;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      ParsedTerm t = term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return terms;
  }

 private:
  ParsedTerm term() {
    ParsedTerm t;
    std::size_t start = pos_;
    std::optional<Rational> coeff = rational();
    skip_ws();
    if (coeff && peek() == '*') {
      // "c*[...]" is a multiplication; "c*" alone marks a multiple of the dual unit.
      std::size_t star = pos_;
      ++pos_;
      skip_ws();
      if (peek() != '[') {
        pos_ = star + 1;
        t.coeff = *coeff;
        t.dual = true;
        return t;
      }
    }
    if (peek() == '[') {
      t.word = word();
      t.coeff = coeff.value_or(Rational(1));
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        t.dual = true;
      }
      return t;
    }
    if (!coeff) fail("expected a coefficient, '[' or '1'", start);
    t.coeff = *coeff;
    return t;
  }

  std::optional<Rational> rational() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) return std::nullopt;
    if (peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == den) fail("expected a denominator");
    }
    try {
      return Rational::parse(src_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what(), start);
    }
  }

  Composition word() {
    ++pos_;  // '['
    std::vector<int> entries;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return Composition{};
    }
    while (true) {
      skip_ws();
      entries.push_back(integer());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    return Composition(std::move(entries));
  }

  int integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected an integer entry", start);
    const char* first = src_.data() + start + (src_[start] == '+' ? 1 : 0);
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, src_.data() + pos_, value);
    if (ec != std::errc() || ptr != src_.data() + pos_) fail("integer entry out of range", start);
    return value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view src_;
  std::size_t pos_ = 0;
};

template <bool Dual>
BasicElement<Dual> build(const std::vector<ParsedTerm>& terms, Sector sector) {
  BasicElement<Dual> x(sector);
  for (const auto& t : terms) x.add_term(t.word, t.coeff);
  return x;
}

}  // namespace

AnyElement parse_expression(std::string_view src, Sector sector) {
  auto terms = Parser(src).parse();
  bool any_dual = false;
  for (const auto& t : terms) any_dual = any_dual || t.dual;
  if (any_dual) {
    // A literal "0" term carries no marker and is neutral.
    for (const auto& t : terms)
      if (!t.dual && !(t.word.is_unit() && t.coeff.is_zero()))
        throw SpaceMismatchError("expression mixes primal and dual (*) terms");
    return build<true>(terms, sector);
  }
  return build<false>(terms, sector);
}

Element parse_element(std::string_view src, Sector sector) {
  auto value = parse_expression(src, sector);
  if (auto* x = std::get_if<Element>(&value)) return *x;
  throw SpaceMismatchError("expected an element of " + std::string(sector_name(sector)) + ", got a dual expression");
}

DualElement parse_dual_element(std::string_view src, Sector sector) {
  auto value = parse_expression(src, sector);
  if (auto* f = std::get_if<DualElement>(&value)) return *f;
  const auto& x = std::get<Element>(value);
  if (x.is_zero()) return DualElement(sector);
  throw SpaceMismatchError("expected an element of " + std::string(space_name(space_of(sector, true))) +
                           " (terms marked with *)");
}

namespace {

std::string word_text(const Composition& w, bool dual) { return w.str() + (dual ? "*" : ""); }

// Coefficient c times basis symbol b in text form; units collapse to the coefficient.
std::string scaled_text(const Rational& c, const Composition& w, bool dual) {
  if (w.is_unit()) return c.str() + (dual ? "*" : "");
  if (c.is_one()) return word_text(w, dual);
  if (c == Rational(-1)) return "-" + word_text(w, dual);
  return c.str() + word_text(w, dual);
}

std::string tensor_term_text(const Rational& c, const WordPair& p, bool dual) {
  std::string left = scaled_text(c, p.first, dual);
  return left + "(x)" + word_text(p.second, dual);
}

template <class Range, class TermFn>
std::string join_signed(const Range& terms, TermFn&& term_text) {
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    if (first) {
      out += term_text(c, key);
      first = false;
      continue;
    }
    if (c.sign() < 0) {
      out += " - " + term_text(-c, key);
    } else {
      out += " + " + term_text(c, key);
    }
  }
  return first ? "0" : out;
}

template <bool Dual>
std::string element_text(const BasicElement<Dual>& x) {
  return join_signed(x, [](const Rational& c, const Composition& w) { return scaled_text(c, w, Dual); });
}

template <bool Dual>
std::string tensor_text(const BasicTensor<Dual>& t) {
  return join_signed(t, [](const Rational& c, const WordPair& p) { return tensor_term_text(c, p, Dual); });
}

nlohmann::json word_json(const Composition& w) { return nlohmann::json(w.entries()); }

template <bool Dual>
nlohmann::json element_json(const BasicElement<Dual>& x) {
  nlohmann::json doc;
  doc["space"] = std::string(space_name(x.space()));
  doc["terms"] = nlohmann::json::array();
  for (const auto& [w, c] : x) doc["terms"].push_back({{"coeff", c.fraction_str()}, {"word", word_json(w)}});
  return doc;
}

template <bool Dual>
nlohmann::json tensor_json(const BasicTensor<Dual>& t) {
  nlohmann::json doc;
  doc["space"] = std::string(space_name(t.space()));
  doc["pairs"] = nlohmann::json::array();
  for (const auto& [p, c] : t)
    doc["pairs"].push_back({{"coeff", c.fraction_str()}, {"left", word_json(p.first)}, {"right", word_json(p.second)}});
  return doc;
}

std::string latex_coeff(const Rational& c) {
  if (c.is_integer()) return c.str();
  std::string sign = c.sign() < 0 ? "-" : "";
  std::string num = c.numerator_str();
  if (!num.empty() && num[0] == '-') num.erase(0, 1);
  return sign + "\\frac{" + num + "}{" + c.denominator_str() + "}";
}

std::string latex_word(const Composition& w, bool dual) {
  std::string s = w.is_unit() ? "\\mathbf{1}" : w.str();
  return dual ? s + "^{*}" : s;
}

std::string latex_scaled(const Rational& c, const std::string& body) {
  if (c.is_one()) return body;
  if (c == Rational(-1)) return "-" + body;
  return latex_coeff(c) + body;
}

template <bool Dual>
std::string element_latex(const BasicElement<Dual>& x) {
  return join_signed(x, [](const Rational& c, const Composition& w) { return latex_scaled(c, latex_word(w, Dual)); });
}

template <bool Dual>
std::string tensor_latex(const BasicTensor<Dual>& t) {
  return join_signed(t, [](const Rational& c, const WordPair& p) {
    return latex_scaled(c, latex_word(p.first, Dual) + " \\otimes " + latex_word(p.second, Dual));
  });
}

}  // namespace

std::string render_text(const Element& x) { return element_text(x); }
std::string render_text(const DualElement& f) { return element_text(f); }
std::string render_text(const Tensor& t) { return tensor_text(t); }
std::string render_text(const DualTensor& t) { return tensor_text(t); }

nlohmann::json render_structured(const Element& x) { return element_json(x); }
nlohmann::json render_structured(const DualElement& f) { return element_json(f); }
nlohmann::json render_structured(const Tensor& t) { return tensor_json(t); }
nlohmann::json render_structured(const DualTensor& t) { return tensor_json(t); }

std::string render_latex(const Element& x) { return element_latex(x); }
std::string render_latex(const DualElement& f) { return element_latex(f); }
std::string render_latex(const Tensor& t) { return tensor_latex(t); }
std::string render_latex(const DualTensor& t) { return tensor_latex(t); }

}  // namespace dualhopf
