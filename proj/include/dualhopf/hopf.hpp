#pragma once

#include <functional>
#include <memory>

#include "dualhopf/linear.hpp"
#include "dualhopf/memo.hpp"
#include "dualhopf/report.hpp"

namespace dualhopf {

using LinearMap = std::function<Element(const Element&)>;
using Product = std::function<Element(const Element&, const Element&)>;
using Coproduct = std::function<Tensor(const Element&)>;

/// The structure maps of one connected graded Hopf algebra, plus its derivation.
/// Unit and counit are the unit word and its coefficient; the grading is the sector's.
struct HopfContext {
  Sector sector = Sector::ge1;
  Product product;
  Coproduct coproduct;
  LinearMap derivation;
  std::shared_ptr<MemoCache<Composition, Element, CompositionHash>> antipode_cache =
      std::make_shared<MemoCache<Composition, Element, CompositionHash>>();

  /// (H_{>=1}, ⧢_{>=1}, Δ_{>=1}, J_{>=1}) or (H_{<=0}, ⧢_{<=0}, Δ_{<=0}, J_{<=0}).
  static HopfContext standard(Sector sector);
};

/// Shared standard contexts, so their antipode caches persist across calls.
const HopfContext& standard_context(Sector sector);

/// S(1) = 1 and S(x) = -x - Σ S(x') x'' over the reduced coproduct.
Element antipode(const Element& x, const HopfContext& ctx);
Element antipode(const Element& x);

/// m ∘ (f ⊗ g) ∘ Δ applied to x.
Element convolve(const LinearMap& f, const LinearMap& g, const Element& x, const HopfContext& ctx);

/// Product of a tensor's two factors: m(Σ c u⊗v) = Σ c u·v.
Element multiply(const Tensor& t, const HopfContext& ctx);

/// Unit/counit laws, associativity, coassociativity, bialgebra compatibility,
/// both antipode identities, and the derivation axioms (Leibniz, coderivation,
/// εd = 0, Sd = dS), on every basis input with grade <= max_grade.
Report check_differential_hopf(const HopfContext& ctx, int max_grade);

}  // namespace dualhopf
