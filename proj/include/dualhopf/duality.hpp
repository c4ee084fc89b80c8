#pragma once

#include "dualhopf/linear.hpp"
#include "dualhopf/report.hpp"

namespace dualhopf {

/// φ: H_{>=1} -> H*_{<=0}, [s1,...,sk] ↦ [1-s1,...,1-sk]*, 1 ↦ 1*.
DualElement phi(const Element& x);
/// Inverse of φ, entrywise.
Element phi_inverse(const DualElement& f);

/// φ*: H_{<=0} -> H*_{>=1}, the transpose of φ: <φ*(x), y> = <φ(y), x>.
/// Computed by pairing over the enumerated GE1 basis of each grade.
DualElement phi_star(const Element& x);
/// ψ = (φ*)^{-1}: H*_{>=1} -> H_{<=0}, by inverting the matrix of φ* on each grade.
Element psi(const DualElement& f);

DualTensor phi_tensor(const Tensor& t);
Tensor phi_inverse_tensor(const DualTensor& t);
DualTensor phi_star_tensor(const Tensor& t);
Tensor psi_tensor(const DualTensor& t);

/// Product on a graded dual: (f·g)(w) = (f ⊗ g)(Δ(w)).
DualElement dual_product(const DualElement& f, const DualElement& g);
/// The same product applied to a dual tensor: Σ c u*⊗v* ↦ Σ c u*·v*.
DualElement dual_product(const DualTensor& t);

/// Coproduct on a graded dual: ⧢*(f) = Σ f(u ⧢ v) u* ⊗ v* over basis pairs.
DualTensor dual_coproduct(const DualElement& f);

/// S*(f)(w) = f(S(w)), grade by grade.
DualElement dual_antipode(const DualElement& f);

/// <[s]*, [u] ⧢ [v]> in the given sector. Zero unless grade(u) + grade(v) = grade(s).
Rational structure_coefficient(Sector sector, const Composition& s, const Composition& u, const Composition& v);
/// The LE0 coefficient a^{[s]*}_{[u]*,[v]*}.
Rational coefficient_a(const Composition& s, const Composition& u, const Composition& v);
/// The GE1 coefficient A^{[s]*}_{[u]*,[v]*}.
Rational coefficient_A(const Composition& s, const Composition& u, const Composition& v);

/// φ and φ* against products, coproducts, derivations and antipodes, the
/// recomputation of Δ_{>=1} through φ and ⧢*_{<=0}, and its φ* mirror.
Report verify_duality(int max_grade);

/// The recursions satisfied by the coefficients a (LE0) and A (GE1).
Report verify_coefficients(int max_grade);

}  // namespace dualhopf
