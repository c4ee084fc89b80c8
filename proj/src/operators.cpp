#include "dualhopf/operators.hpp"

#include <charconv>

namespace dualhopf {

namespace {

bool has_index(OperatorKind k) {
  return k == OperatorKind::delta || k == OperatorKind::p || k == OperatorKind::tilde_delta ||
         k == OperatorKind::tilde_p;
}

// δ_i (sign = +1) or δ̃_i (sign = -1) on one word, accumulated into `out` with a factor.
void add_delta_terms(int i, const Composition& w, bool tilde, const Rational& factor,
                     LinearCombination<Composition>& out) {
  if (i <= 0 || w.is_unit() || static_cast<std::size_t>(i) > w.depth()) return;
  for (int j = 0; j < i; ++j) {
    int s = w[j];
    if (tilde) {
      out.add(w.with_entry(j, s - 1), factor * Rational(1 - s));
    } else {
      out.add(w.with_entry(j, s + 1), factor * Rational(s));
    }
  }
}

WordTerms to_terms(const LinearCombination<Composition>& lc) {
  WordTerms out;
  out.reserve(lc.size());
  for (const auto& [w, c] : lc) out.emplace_back(w, c);
  return out;
}

std::string space_label(Space s) { return std::string(space_name(s)); }

}  // namespace

std::string OperatorId::str() const {
  switch (kind) {
    case OperatorKind::identity: return "id";
    case OperatorKind::I: return "I";
    case OperatorKind::J: return "J";
    case OperatorKind::J_ge1: return "J1";
    case OperatorKind::J_le0: return "J0";
    case OperatorKind::delta: return "delta:" + std::to_string(index);
    case OperatorKind::p: return "p:" + std::to_string(index);
    case OperatorKind::tilde_delta: return "tdelta:" + std::to_string(index);
    case OperatorKind::tilde_p: return "tp:" + std::to_string(index);
    case OperatorKind::J_le0_star: return "J0star";
    case OperatorKind::J_ge1_star: return "J1star";
  }
  return "?";
}

OperatorId parse_operator(std::string_view name) {
  if (name == "id") return {OperatorKind::identity, 0};
  if (name == "I") return {OperatorKind::I, 0};
  if (name == "J") return {OperatorKind::J, 0};
  if (name == "J1") return {OperatorKind::J_ge1, 0};
  if (name == "J0") return {OperatorKind::J_le0, 0};
  if (name == "Jstar" || name == "J0star") return {OperatorKind::J_le0_star, 0};
  if (name == "J1star") return {OperatorKind::J_ge1_star, 0};

  auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    std::string_view head = name.substr(0, colon);
    std::string_view tail = name.substr(colon + 1);
    int index = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), index);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty())
      throw Error("invalid operator index in '" + std::string(name) + "'");
    if (head == "p") return {OperatorKind::p, index};
    if (head == "tp") return {OperatorKind::tilde_p, index};
    if (head == "delta" || head == "tdelta") {
      if (index < 1) throw Error("operator '" + std::string(name) + "' needs an index >= 1");
      return {head == "delta" ? OperatorKind::delta : OperatorKind::tilde_delta, index};
    }
  }
  throw Error("unknown operator '" + std::string(name) +
              "' (expected I, J, J1, J0, delta:i, p:i, tdelta:i, tp:i, Jstar)");
}

bool acts_on(const OperatorId& op, Space space) {
  switch (op.kind) {
    case OperatorKind::identity: return true;
    case OperatorKind::I:
    case OperatorKind::J_ge1:
    case OperatorKind::delta:
    case OperatorKind::p: return space == Space::ge1;
    case OperatorKind::J: return space == Space::ge1 || space == Space::le0;
    case OperatorKind::J_le0: return space == Space::le0;
    case OperatorKind::tilde_delta:
    case OperatorKind::tilde_p:
    case OperatorKind::J_le0_star: return space == Space::le0_dual;
    case OperatorKind::J_ge1_star: return space == Space::ge1_dual;
  }
  return false;
}

WordTerms act_on_word(const OperatorId& op, Space space, const Composition& w) {
  if (!acts_on(op, space))
    throw SpaceMismatchError("operator " + op.str() + " does not act on " + space_label(space));
  switch (op.kind) {
    case OperatorKind::identity: return {{w, Rational(1)}};
    case OperatorKind::I:
      if (w.is_unit()) throw DomainError("I is not defined on the unit");
      return {{w.with_entry(0, w[0] + 1), Rational(1)}};
    case OperatorKind::J:
      if (w.is_unit()) return {};
      if (space == Space::ge1 && w[0] == 1)
        throw DomainError("J maps " + w.str() + " outside ge1; use J1 for the truncated operator");
      return {{w.with_entry(0, w[0] - 1), Rational(1)}};
    case OperatorKind::J_ge1:
      if (w.is_unit() || w[0] == 1) return {};
      return {{w.with_entry(0, w[0] - 1), Rational(1)}};
    case OperatorKind::J_le0:
      if (w.is_unit()) return {};
      return {{w.with_entry(0, w[0] - 1), Rational(1)}};
    case OperatorKind::delta:
    case OperatorKind::tilde_delta: {
      LinearCombination<Composition> lc;
      add_delta_terms(op.index, w, op.kind == OperatorKind::tilde_delta, Rational(1), lc);
      return to_terms(lc);
    }
    case OperatorKind::p:
    case OperatorKind::tilde_p: {
      bool tilde = op.kind == OperatorKind::tilde_p;
      LinearCombination<Composition> lc;
      add_delta_terms(op.index, w, tilde, Rational(1), lc);
      add_delta_terms(op.index - 1, w, tilde, Rational(-1), lc);
      return to_terms(lc);
    }
    case OperatorKind::J_le0_star:
      if (w.is_unit() || w[0] == 0) return {};
      return {{w.with_entry(0, w[0] + 1), Rational(1)}};
    case OperatorKind::J_ge1_star:
      if (w.is_unit()) return {};
      return {{w.with_entry(0, w[0] + 1), Rational(1)}};
  }
  return {};
}

namespace {

template <bool Dual>
BasicElement<Dual> apply_generic(const OperatorId& op, const BasicElement<Dual>& x) {
  BasicElement<Dual> out(x.sector());
  for (const auto& [w, c] : x)
    for (const auto& [image, k] : act_on_word(op, x.space(), w)) out.add_term(image, c * k);
  return out;
}

template <bool Dual>
BasicTensor<Dual> tensor_apply_generic(const OperatorId& left, const OperatorId& right, const BasicTensor<Dual>& t,
                                       bool shift) {
  BasicTensor<Dual> out(t.sector());
  Space space = t.space();
  for (const auto& [key, c] : t) {
    const auto& [u, v] = key;
    OperatorId r = right;
    if (shift) r.index -= static_cast<int>(u.depth());
    auto lhs = act_on_word(left, space, u);
    if (lhs.empty()) continue;
    auto rhs = act_on_word(r, space, v);
    for (const auto& [a, ca] : lhs)
      for (const auto& [b, cb] : rhs) out.add_term(a, b, c * ca * cb);
  }
  return out;
}

void require_shift_operator(const OperatorId& right) {
  if (!has_index(right.kind)) throw DomainError("the shifted tensor needs delta_i or p_i on the right, got " + right.str());
}

}  // namespace

Element apply(const OperatorId& op, const Element& x) { return apply_generic(op, x); }
DualElement apply(const OperatorId& op, const DualElement& f) { return apply_generic(op, f); }

Element apply_I(const Element& x) { return apply({OperatorKind::I, 0}, x); }
Element apply_J(const Element& x) { return apply({OperatorKind::J, 0}, x); }
Element apply_J_ge1(const Element& x) { return apply({OperatorKind::J_ge1, 0}, x); }
Element apply_J_le0(const Element& x) { return apply({OperatorKind::J_le0, 0}, x); }
Element apply_delta(int i, const Element& x) { return apply(op_delta(i), x); }
Element apply_p(int i, const Element& x) { return apply(op_p(i), x); }
DualElement apply_tilde_delta(int i, const DualElement& f) { return apply(op_tilde_delta(i), f); }
DualElement apply_tilde_p(int i, const DualElement& f) { return apply(op_tilde_p(i), f); }
DualElement apply_J_le0_star(const DualElement& f) { return apply({OperatorKind::J_le0_star, 0}, f); }
DualElement apply_J_ge1_star(const DualElement& f) { return apply({OperatorKind::J_ge1_star, 0}, f); }

Tensor tensor_apply(const OperatorId& left, const OperatorId& right, const Tensor& t) {
  return tensor_apply_generic(left, right, t, false);
}
DualTensor tensor_apply(const OperatorId& left, const OperatorId& right, const DualTensor& t) {
  return tensor_apply_generic(left, right, t, false);
}

Tensor shifted_apply(const OperatorId& left, const OperatorId& right, const Tensor& t) {
  require_shift_operator(right);
  return tensor_apply_generic(left, right, t, true);
}
DualTensor shifted_apply(const OperatorId& left, const OperatorId& right, const DualTensor& t) {
  require_shift_operator(right);
  return tensor_apply_generic(left, right, t, true);
}

}  // namespace dualhopf
