#include "dualhopf/linear.hpp"

namespace dualhopf {

std::string_view space_name(Space space) {
  switch (space) {
    case Space::ge1: return "ge1";
    case Space::le0: return "le0";
    case Space::ge1_dual: return "ge1-dual";
    case Space::le0_dual: return "le0-dual";
  }
  return "?";
}

Space parse_space(std::string_view name) {
  for (Space s : {Space::ge1, Space::le0, Space::ge1_dual, Space::le0_dual})
    if (space_name(s) == name) return s;
  throw Error("unknown space '" + std::string(name) + "'");
}

Element normalize(std::span<const std::pair<Composition, Rational>> raw, Sector sector) {
  Element x(sector);
  for (const auto& [w, c] : raw) x.add_term(w, c);
  return x;
}

Rational pair(const DualElement& f, const Element& x) {
  if (f.sector() != x.sector())
    throw SpaceMismatchError("cannot pair " + std::string(space_name(f.space())) + " with " +
                             std::string(space_name(x.space())));
  Rational total;
  const auto& small = f.size() <= x.size() ? f.terms() : x.terms();
  const auto& large = f.size() <= x.size() ? x.terms() : f.terms();
  for (const auto& [w, c] : small) {
    Rational other = large.coefficient(w);
    if (!other.is_zero()) total += c * other;
  }
  return total;
}

Rational pair(const DualTensor& f, const Tensor& x) {
  if (f.sector() != x.sector())
    throw SpaceMismatchError("cannot pair " + std::string(space_name(f.space())) + " with " +
                             std::string(space_name(x.space())));
  Rational total;
  for (const auto& [key, c] : f.terms()) {
    Rational other = x.terms().coefficient(key);
    if (!other.is_zero()) total += c * other;
  }
  return total;
}

}  // namespace dualhopf
