#include "dualhopf/coalgebra.hpp"

#include "dualhopf/memo.hpp"
#include "dualhopf/operators.hpp"
#include "dualhopf/shuffle.hpp"

namespace dualhopf {

namespace {

using CoproductCache = MemoCache<Composition, Tensor, CompositionHash>;

CoproductCache& ge1_cache() {
  static CoproductCache cache;
  return cache;
}

CoproductCache& le0_cache() {
  static CoproductCache cache;
  return cache;
}

Tensor deconcatenation(const Composition& w, Sector sector) {
  Tensor t(sector);
  const auto& e = w.entries();
  for (std::size_t j = 0; j <= e.size(); ++j)
    t.add_term(Composition(std::vector<int>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(j))),
               Composition(std::vector<int>(e.begin() + static_cast<std::ptrdiff_t>(j), e.end())), Rational(1));
  return t;
}

std::optional<std::size_t> least_pivot(const Composition& w) {
  for (std::size_t i = 0; i < w.depth(); ++i)
    if (w[i] > 1) return i;
  return std::nullopt;
}

// One pivot step: Δ(w) = (1/(s_i - 1)) (id ⊗̄ p_i + p_i ⊗ id) Δ(w with s_i lowered by one).
Tensor pivot_step(const Composition& w, std::size_t pivot, const Tensor& lowered) {
  const int i = static_cast<int>(pivot) + 1;
  Tensor t = shifted_apply(op_identity(), op_p(i), lowered);
  t += tensor_apply(op_p(i), op_identity(), lowered);
  t *= Rational(1, w[pivot] - 1);
  return t;
}

Tensor ge1_word(const Composition& w) {
  auto pivot = least_pivot(w);
  if (!pivot) return deconcatenation(w, Sector::ge1);
  return ge1_cache().get_or_compute(w, [&] {
    return pivot_step(w, *pivot, ge1_word(w.with_entry(*pivot, w[*pivot] - 1)));
  });
}

Tensor le0_word(const Composition& w) {
  if (w.is_unit() || w == Composition{0}) return deconcatenation(w, Sector::le0);
  return le0_cache().get_or_compute(w, [&] {
    if (w.front() == 0) return tensor_shuffle(le0_word(Composition{0}), le0_word(w.tail()));
    const OperatorId J{OperatorKind::J_le0, 0};
    Tensor lowered = le0_word(w.with_entry(0, w.front() + 1));
    Tensor t = tensor_apply(op_identity(), J, lowered);
    t += tensor_apply(J, op_identity(), lowered);
    return t;
  });
}

Tensor extend(const Element& x, Sector sector) {
  if (x.sector() != sector)
    throw SpaceMismatchError("coproduct for " + std::string(sector_name(sector)) + " applied to " +
                             std::string(space_name(x.space())));
  Tensor out(sector);
  for (const auto& [w, c] : x) out.add(coproduct_word(w, sector), c);
  return out;
}

template <bool Left>
TripleTensor apply_coproduct_on_side(const Tensor& t) {
  TripleTensor out;
  for (const auto& [key, c] : t) {
    const auto& [u, v] = key;
    const Tensor inner = coproduct_word(Left ? u : v, t.sector());
    for (const auto& [ab, k] : inner) {
      if constexpr (Left) {
        out.add(Triple{ab.first, ab.second, v}, c * k);
      } else {
        out.add(Triple{u, ab.first, ab.second}, c * k);
      }
    }
  }
  return out;
}

}  // namespace

Tensor coproduct_word(const Composition& w, Sector sector) {
  check_sign(w, sector);
  return sector == Sector::ge1 ? ge1_word(w) : le0_word(w);
}

Tensor coproduct_ge1(const Element& x) { return extend(x, Sector::ge1); }
Tensor coproduct_le0(const Element& x) { return extend(x, Sector::le0); }
Tensor coproduct(const Element& x) { return extend(x, x.sector()); }

Tensor coproduct_ge1_with_pivot(const Composition& w, const PivotChooser& choose) {
  check_sign(w, Sector::ge1);
  if (!least_pivot(w)) return deconcatenation(w, Sector::ge1);
  const std::size_t pivot = choose(w);
  if (pivot >= w.depth() || w[pivot] <= 1)
    throw DomainError("pivot " + std::to_string(pivot) + " is not an entry > 1 of " + w.str());
  return pivot_step(w, pivot, coproduct_ge1_with_pivot(w.with_entry(pivot, w[pivot] - 1), choose));
}

Rational counit(const Element& x) { return x.coefficient(Composition{}); }

Tensor reduced_coproduct(const Element& x) {
  auto g = x.homogeneous_grade();
  if (!g) throw DomainError("reduced coproduct needs a nonzero homogeneous element");
  if (*g == 0) throw DomainError("reduced coproduct is undefined in grade 0");
  Tensor t = coproduct(x);
  const Element one = Element::unit(x.sector());
  t -= Tensor::product(x, one);
  t -= Tensor::product(one, x);
  return t;
}

TripleTensor coproduct_left(const Tensor& t) { return apply_coproduct_on_side<true>(t); }
TripleTensor coproduct_right(const Tensor& t) { return apply_coproduct_on_side<false>(t); }

}  // namespace dualhopf
