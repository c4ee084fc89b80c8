#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "dualhopf/linear.hpp"

namespace dualhopf {

enum class Format { text, structured, latex };

Format parse_format(std::string_view name);

using AnyElement = std::variant<Element, DualElement>;

/// Grammar:
///   expr     := ["+"|"-"] term (("+"|"-") term)*
///   term     := [rational ["*"]] word ["*"] | rational ["*"]
///   word     := "[" [int ("," int)*] "]"
///   rational := digits ["/" digits]
/// A trailing "*" marks a dual basis symbol. A bare rational is that multiple of
/// the unit ("1", "5", "1*", "5*"). Dual-ness is inferred from the markers and
/// must be consistent across terms; "0" parses as the zero primal element.
AnyElement parse_expression(std::string_view src, Sector sector);

/// Like parse_expression, but the result must be primal (resp. dual).
Element parse_element(std::string_view src, Sector sector);
DualElement parse_dual_element(std::string_view src, Sector sector);

std::string render_text(const Element& x);
std::string render_text(const DualElement& f);
std::string render_text(const Tensor& t);
std::string render_text(const DualTensor& t);

nlohmann::json render_structured(const Element& x);
nlohmann::json render_structured(const DualElement& f);
nlohmann::json render_structured(const Tensor& t);
nlohmann::json render_structured(const DualTensor& t);

std::string render_latex(const Element& x);
std::string render_latex(const DualElement& f);
std::string render_latex(const Tensor& t);
std::string render_latex(const DualTensor& t);

template <class T>
std::string render(const T& value, Format format) {
  switch (format) {
    case Format::text: return render_text(value);
    case Format::structured: return render_structured(value).dump();
    case Format::latex: return render_latex(value);
  }
  return {};
}

}  // namespace dualhopf
