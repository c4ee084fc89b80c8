#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "dualhopf/composition.hpp"
#include "dualhopf/errors.hpp"
#include "dualhopf/rational.hpp"

namespace dualhopf {

/// The four spaces values can live in: the two algebras and their graded duals.
enum class Space { ge1, le0, ge1_dual, le0_dual };

std::string_view space_name(Space space);
Space parse_space(std::string_view name);

constexpr Space space_of(Sector sector, bool dual) {
  if (sector == Sector::ge1) return dual ? Space::ge1_dual : Space::ge1;
  return dual ? Space::le0_dual : Space::le0;
}
constexpr Sector sector_of(Space space) {
  return (space == Space::ge1 || space == Space::ge1_dual) ? Sector::ge1 : Sector::le0;
}
constexpr bool is_dual(Space space) { return space == Space::ge1_dual || space == Space::le0_dual; }

/// Finite Q-linear combination of keys; zero coefficients are never stored.
template <class Key>
class LinearCombination {
 public:
  using container_type = std::map<Key, Rational>;
  using const_iterator = typename container_type::const_iterator;

  void add(const Key& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_all(const LinearCombination& other, const Rational& factor = Rational(1)) {
    if (factor.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, factor.is_one() ? c : c * factor);
  }

  void scale(const Rational& factor) {
    if (factor.is_zero()) {
      terms_.clear();
      return;
    }
    for (auto& entry : terms_) entry.second *= factor;
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  container_type terms_;
};

/// A vector of H_{>=1} or H_{<=0} (Dual = false), or of one of their graded duals
/// (Dual = true, keys denote the dual basis functionals [s]*).
template <bool Dual>
class BasicElement {
 public:
  static constexpr bool is_dual_space = Dual;

  explicit BasicElement(Sector sector) : sector_(sector) {}
  BasicElement(Sector sector, const Composition& word, const Rational& c = Rational(1)) : sector_(sector) {
    add_term(word, c);
  }

  static BasicElement unit(Sector sector) { return BasicElement(sector, Composition{}); }

  Sector sector() const { return sector_; }
  Space space() const { return space_of(sector_, Dual); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Composition& w) const { return terms_.coefficient(w); }
  const LinearCombination<Composition>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  void add_term(const Composition& w, const Rational& c) {
    check_sign(w, sector_);
    terms_.add(w, c);
  }

  void add(const BasicElement& other, const Rational& factor = Rational(1)) {
    require_same_space(other);
    terms_.add_all(other.terms_, factor);
  }

  BasicElement& operator+=(const BasicElement& other) {
    add(other);
    return *this;
  }
  BasicElement& operator-=(const BasicElement& other) {
    add(other, Rational(-1));
    return *this;
  }
  BasicElement& operator*=(const Rational& c) {
    terms_.scale(c);
    return *this;
  }

  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
  friend BasicElement operator*(BasicElement a, const Rational& c) { return a *= c; }
  friend BasicElement operator*(const Rational& c, BasicElement a) { return a *= c; }
  BasicElement operator-() const { return BasicElement(*this) *= Rational(-1); }

  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return a.sector_ == b.sector_ && a.terms_ == b.terms_;
  }

  /// Grade-indexed homogeneous parts; the zero element has none.
  std::map<int, BasicElement> homogeneous_components() const {
    std::map<int, BasicElement> parts;
    for (const auto& [w, c] : terms_) parts.try_emplace(grade(w, sector_), sector_).first->second.terms_.add(w, c);
    return parts;
  }

  /// The common grade of all terms, or nullopt for zero or mixed-grade elements.
  std::optional<int> homogeneous_grade() const {
    std::optional<int> g;
    for (const auto& entry : terms_) {
      int gw = grade(entry.first, sector_);
      if (g && *g != gw) return std::nullopt;
      g = gw;
    }
    return g;
  }

  void require_same_space(const BasicElement& other) const {
    if (other.sector_ != sector_)
      throw SpaceMismatchError("cannot combine " + std::string(space_name(space())) + " with " +
                               std::string(space_name(other.space())));
  }

 private:
  Sector sector_;
  LinearCombination<Composition> terms_;
};

using Element = BasicElement<false>;
using DualElement = BasicElement<true>;

/// An element of H ⊗ H (or of H* ⊗ H* when Dual), stored on basis pairs.
template <bool Dual>
class BasicTensor {
 public:
  explicit BasicTensor(Sector sector) : sector_(sector) {}

  /// a ⊗ b
  static BasicTensor product(const BasicElement<Dual>& a, const BasicElement<Dual>& b) {
    a.require_same_space(b);
    BasicTensor t(a.sector());
    for (const auto& [u, cu] : a)
      for (const auto& [v, cv] : b) t.terms_.add({u, v}, cu * cv);
    return t;
  }

  Sector sector() const { return sector_; }
  Space space() const { return space_of(sector_, Dual); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Composition& u, const Composition& v) const { return terms_.coefficient({u, v}); }
  const LinearCombination<WordPair>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  void add_term(const Composition& u, const Composition& v, const Rational& c) {
    check_sign(u, sector_);
    check_sign(v, sector_);
    terms_.add({u, v}, c);
  }

  void add(const BasicTensor& other, const Rational& factor = Rational(1)) {
    require_same_space(other);
    terms_.add_all(other.terms_, factor);
  }

  /// Adds factor * (a ⊗ b).
  void add_product(const BasicElement<Dual>& a, const BasicElement<Dual>& b, const Rational& factor = Rational(1)) {
    if (a.sector() != sector_ || b.sector() != sector_)
      throw SpaceMismatchError("tensor factor from a different space");
    for (const auto& [u, cu] : a)
      for (const auto& [v, cv] : b) terms_.add({u, v}, factor * cu * cv);
  }

  BasicTensor& operator+=(const BasicTensor& other) {
    add(other);
    return *this;
  }
  BasicTensor& operator-=(const BasicTensor& other) {
    add(other, Rational(-1));
    return *this;
  }
  BasicTensor& operator*=(const Rational& c) {
    terms_.scale(c);
    return *this;
  }
  friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }
  friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }
  friend BasicTensor operator*(BasicTensor a, const Rational& c) { return a *= c; }
  friend BasicTensor operator*(const Rational& c, BasicTensor a) { return a *= c; }

  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    return a.sector_ == b.sector_ && a.terms_ == b.terms_;
  }

  void require_same_space(const BasicTensor& other) const {
    if (other.sector_ != sector_)
      throw SpaceMismatchError("cannot combine tensors over " + std::string(space_name(space())) + " and " +
                               std::string(space_name(other.space())));
  }

 private:
  Sector sector_;
  LinearCombination<WordPair> terms_;
};

using Tensor = BasicTensor<false>;
using DualTensor = BasicTensor<true>;

/// Merges duplicate words, drops zeros, and checks the sector's sign constraint.
Element normalize(std::span<const std::pair<Composition, Rational>> raw, Sector sector);

/// Bilinear extension of <[u]*, [v]> = [u == v]. Spaces must match.
Rational pair(const DualElement& f, const Element& x);
Rational pair(const DualTensor& f, const Tensor& x);

/// τ(u ⊗ v) = v ⊗ u
template <bool Dual>
BasicTensor<Dual> flip(const BasicTensor<Dual>& t) {
  BasicTensor<Dual> out(t.sector());
  for (const auto& [key, c] : t) out.add_term(key.second, key.first, c);
  return out;
}

}  // namespace dualhopf
