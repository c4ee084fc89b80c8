#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dualhopf/linear.hpp"

namespace dualhopf {

enum class OperatorKind {
  identity,
  I,            // [s1,...] -> [s1+1,...] on nonempty words
  J,            // [s1,...] -> [s1-1,...], 1 -> 0, no sector-specific cut-off
  J_ge1,        // J restricted to H_{>=1}: words with s1 = 1 go to 0
  J_le0,        // J on H_{<=0}
  delta,        // δ_i
  p,            // p_i = δ_i - δ_{i-1}
  tilde_delta,  // δ̃_i on the LE0 dual
  tilde_p,      // p̃_i = δ̃_i - δ̃_{i-1}
  J_le0_star,   // transpose of J_{<=0}
  J_ge1_star,   // transpose of J_{>=1}
};

struct OperatorId {
  OperatorKind kind = OperatorKind::identity;
  int index = 0;  // used by delta, p, tilde_delta and tilde_p

  std::string str() const;
  friend bool operator==(const OperatorId&, const OperatorId&) = default;
};

/// Accepts I, J, J1, J0, delta:i, p:i, tdelta:i, tp:i, Jstar and id.
OperatorId parse_operator(std::string_view name);

/// Whether the operator acts on the given space at all.
bool acts_on(const OperatorId& op, Space space);

using WordTerms = std::vector<std::pair<Composition, Rational>>;

/// The image of one basis word. Throws SpaceMismatchError if the operator does
/// not act on `space`, DomainError if the word is outside the operator's domain.
WordTerms act_on_word(const OperatorId& op, Space space, const Composition& w);

Element apply(const OperatorId& op, const Element& x);
DualElement apply(const OperatorId& op, const DualElement& f);

Element apply_I(const Element& x);
Element apply_J(const Element& x);
Element apply_J_ge1(const Element& x);
Element apply_J_le0(const Element& x);
Element apply_delta(int i, const Element& x);
Element apply_p(int i, const Element& x);
DualElement apply_tilde_delta(int i, const DualElement& f);
DualElement apply_tilde_p(int i, const DualElement& f);
DualElement apply_J_le0_star(const DualElement& f);
DualElement apply_J_ge1_star(const DualElement& f);

/// (A ⊗ B)(t) with no index shift.
Tensor tensor_apply(const OperatorId& left, const OperatorId& right, const Tensor& t);
DualTensor tensor_apply(const OperatorId& left, const OperatorId& right, const DualTensor& t);

/// The shifted tensor A ⊗̄ R: u ⊗ v ↦ A(u) ⊗ R_{i - dep(u)}(v), where R is
/// δ_i or p_i (or their tilde versions on the LE0 dual) and i = right.index.
Tensor shifted_apply(const OperatorId& left, const OperatorId& right, const Tensor& t);
DualTensor shifted_apply(const OperatorId& left, const OperatorId& right, const DualTensor& t);

inline OperatorId op_identity() { return {OperatorKind::identity, 0}; }
inline OperatorId op_delta(int i) { return {OperatorKind::delta, i}; }
inline OperatorId op_p(int i) { return {OperatorKind::p, i}; }
inline OperatorId op_tilde_delta(int i) { return {OperatorKind::tilde_delta, i}; }
inline OperatorId op_tilde_p(int i) { return {OperatorKind::tilde_p, i}; }

}  // namespace dualhopf
