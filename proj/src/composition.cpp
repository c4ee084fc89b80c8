#include "dualhopf/composition.hpp"

#include <algorithm>

#include "dualhopf/errors.hpp"

namespace dualhopf {

std::string_view sector_name(Sector sector) { return sector == Sector::ge1 ? "ge1" : "le0"; }

Sector parse_sector(std::string_view name) {
  if (name == "ge1") return Sector::ge1;
  if (name == "le0") return Sector::le0;
  throw Error("unknown algebra '" + std::string(name) + "' (expected ge1 or le0)");
}

Composition Composition::tail() const {
  return Composition(std::vector<int>(entries_.begin() + 1, entries_.end()));
}

Composition Composition::prepend(int x) const {
  std::vector<int> e;
  e.reserve(entries_.size() + 1);
  e.push_back(x);
  e.insert(e.end(), entries_.begin(), entries_.end());
  return Composition(std::move(e));
}

Composition Composition::with_entry(std::size_t i, int value) const {
  auto e = entries_;
  e.at(i) = value;
  return Composition(std::move(e));
}

Composition Composition::concat(const Composition& other) const {
  auto e = entries_;
  e.insert(e.end(), other.entries_.begin(), other.entries_.end());
  return Composition(std::move(e));
}

std::string Composition::str() const {
  if (is_unit()) return "1";
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + "]";
}

std::size_t CompositionHash::operator()(const Composition& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ w.depth();
  for (int x : w) h = (h ^ static_cast<std::size_t>(x + 0x51ed27)) * 0x100000001b3ULL;
  return h;
}

std::size_t CompositionPairHash::operator()(const std::pair<Composition, Composition>& p) const noexcept {
  CompositionHash h;
  return h(p.first) * 31 + h(p.second);
}

bool satisfies_sign(const Composition& w, Sector sector) {
  for (int x : w)
    if (sector == Sector::ge1 ? x < 1 : x > 0) return false;
  return true;
}

void check_sign(const Composition& w, Sector sector) {
  for (std::size_t i = 0; i < w.depth(); ++i) {
    int x = w[i];
    if (sector == Sector::ge1 ? x < 1 : x > 0) {
      throw SignConstraintError("entry " + std::to_string(x) + " at index " + std::to_string(i) + " of " +
                                w.str() + " violates the " + std::string(sector_name(sector)) +
                                (sector == Sector::ge1 ? " constraint (entries >= 1)"
                                                       : " constraint (entries <= 0)"));
    }
  }
}

int grade(const Composition& w, Sector sector) {
  check_sign(w, sector);
  int sum = 0;
  for (int x : w) sum += x;
  return sector == Sector::ge1 ? sum : static_cast<int>(w.depth()) - sum;
}

namespace {

// Compositions of n into positive parts; each part c maps to c (GE1) or 1 - c (LE0).
void compositions(int remaining, Sector sector, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    prefix.push_back(sector == Sector::ge1 ? part : 1 - part);
    compositions(remaining - part, sector, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_basis(Sector sector, int grade) {
  if (grade < 0) throw DomainError("grade must be nonnegative");
  std::vector<Composition> out;
  std::vector<int> prefix;
  compositions(grade, sector, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> enumerate_basis_up_to(Sector sector, int max_grade) {
  std::vector<Composition> out;
  for (int g = 0; g <= max_grade; ++g) {
    auto part = enumerate_basis(sector, g);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace dualhopf
