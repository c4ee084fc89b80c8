#pragma once

#include <array>
#include <cstddef>
#include <functional>

#include "dualhopf/linear.hpp"

namespace dualhopf {

/// Δ_{>=1}. Deconcatenation on [1_k]; otherwise the pivot recursion on the least
/// index with an entry > 1. Memoized per basis word.
Tensor coproduct_ge1(const Element& x);

/// Δ_{<=0}. Δ([0, s]) = Δ([0]) ⧢ Δ([s]); Δ([s1, s]) = (id⊗J + J⊗id) Δ([s1+1, s]) for s1 < 0.
/// Memoized per basis word.
Tensor coproduct_le0(const Element& x);

/// Dispatches on the element's sector.
Tensor coproduct(const Element& x);
Tensor coproduct_word(const Composition& w, Sector sector);

/// Picks the 0-based pivot index of a GE1 word that has some entry > 1.
using PivotChooser = std::function<std::size_t(const Composition&)>;

/// Δ_{>=1} of one word through an arbitrary pivot strategy, without memoization.
/// The chooser must return an index whose entry exceeds 1.
Tensor coproduct_ge1_with_pivot(const Composition& w, const PivotChooser& choose);

/// Coefficient of the unit word.
Rational counit(const Element& x);

/// Δ(x) - x⊗1 - 1⊗x for homogeneous x of grade >= 1.
Tensor reduced_coproduct(const Element& x);

using Triple = std::array<Composition, 3>;
using TripleTensor = LinearCombination<Triple>;

/// (Δ ⊗ id)(t) and (id ⊗ Δ)(t).
TripleTensor coproduct_left(const Tensor& t);
TripleTensor coproduct_right(const Tensor& t);

}  // namespace dualhopf
