#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dualhopf {

/// The two sign sectors. GE1 words have every entry >= 1, LE0 words every entry <= 0.
enum class Sector { ge1, le0 };

/// Lower-case name used in the CLI and structured output ("ge1", "le0").
std::string_view sector_name(Sector sector);
Sector parse_sector(std::string_view name);

/// A basis word [s1,...,sk]. The empty composition is the unit 1.
///
/// Ordering is canonical: by depth first, then lexicographic on entries.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> entries) : entries_(entries) {}
  explicit Composition(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::size_t depth() const { return entries_.size(); }
  bool is_unit() const { return entries_.empty(); }
  int front() const { return entries_.front(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Word without its first entry.
  Composition tail() const;
  /// [x, s1, ..., sk]
  Composition prepend(int x) const;
  /// Copy with entry i (0-based) replaced by `value`.
  Composition with_entry(std::size_t i, int value) const;
  /// Concatenation s ++ t.
  Composition concat(const Composition& other) const;

  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (a.depth() != b.depth()) return a.depth() <=> b.depth();
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

struct CompositionHash {
  std::size_t operator()(const Composition& w) const noexcept;
};

struct CompositionPairHash {
  std::size_t operator()(const std::pair<Composition, Composition>& p) const noexcept;
};

/// The ordered pair (u, v) standing for the basis tensor u ⊗ v.
using WordPair = std::pair<Composition, Composition>;

bool satisfies_sign(const Composition& w, Sector sector);

/// Throws SignConstraintError naming the first offending entry.
void check_sign(const Composition& w, Sector sector);

/// Weight s1+...+sk for GE1, k - (s1+...+sk) for LE0. The unit has grade 0.
int grade(const Composition& w, Sector sector);

/// All basis words of the given grade, in canonical order. Grade 0 yields only the unit.
std::vector<Composition> enumerate_basis(Sector sector, int grade);

/// All basis words with grade <= max_grade, grade by grade.
std::vector<Composition> enumerate_basis_up_to(Sector sector, int max_grade);

}  // namespace dualhopf
