#include "dualhopf/suites.hpp"

#include <set>

#include "dualhopf/coalgebra.hpp"
#include "dualhopf/duality.hpp"
#include "dualhopf/errors.hpp"
#include "dualhopf/expression.hpp"
#include "dualhopf/hopf.hpp"
#include "dualhopf/operators.hpp"
#include "dualhopf/shuffle.hpp"

namespace dualhopf::suites {

namespace {

template <class T>
auto mismatch(const std::string& input, const T& lhs, const T& rhs) {
  return [&input, &lhs, &rhs] { return input + ": " + render_text(lhs) + " != " + render_text(rhs); };
}

std::string name_of(Sector s) { return std::string(sector_name(s)); }

void require_bound(int n) {
  if (n < 1) throw DomainError("max-grade must be >= 1");
}

// Calls f(u, v) for basis pairs with grade(u) + grade(v) <= max_grade.
template <class F>
void for_each_pair(Sector sector, int max_grade, bool include_unit, F&& f) {
  const auto words = enumerate_basis_up_to(sector, max_grade);
  for (const auto& u : words) {
    if (!include_unit && u.is_unit()) continue;
    for (const auto& v : words) {
      if (!include_unit && v.is_unit()) continue;
      if (grade(u, sector) + grade(v, sector) <= max_grade) f(u, v);
    }
  }
}

template <class F>
void for_each_triple(Sector sector, int max_grade, F&& f) {
  const auto words = enumerate_basis_up_to(sector, max_grade);
  for (const auto& u : words)
    for (const auto& v : words) {
      const int gv = grade(u, sector) + grade(v, sector);
      if (gv > max_grade) continue;
      for (const auto& w : words)
        if (gv + grade(w, sector) <= max_grade) f(u, v, w);
    }
}

Tensor flip_tensor(const Tensor& t) { return flip(t); }

std::string triple_str(const Composition& u, const Composition& v, const Composition& w) {
  return u.str() + ", " + v.str() + ", " + w.str();
}

}  // namespace

Report oracle_equivalence(int max_weight) {
  require_bound(max_weight);
  Report report;
  report.suite = "products";
  Check& check = report.add("shuffle equals word-interleaving oracle", "ge1", max_weight);
  for_each_pair(Sector::ge1, max_weight, true, [&](const Composition& u, const Composition& v) {
    const Element x(Sector::ge1, u), y(Sector::ge1, v);
    const Element lhs = shuffle_ge1(x, y);
    const Element rhs = word_shuffle_oracle(x, y);
    const std::string in = u.str() + ", " + v.str();
    check.record(lhs == rhs, mismatch(in, lhs, rhs));
  });
  return report;
}

Report structural_counts(int max_count_grade, int max_phi_grade) {
  require_bound(max_count_grade);
  Report report;
  report.suite = "structure";
  for (Sector sector : {Sector::ge1, Sector::le0}) {
    Check& count = report.add("|basis of grade m| = 2^(m-1)", name_of(sector), max_count_grade);
    Check& sane = report.add("basis is duplicate-free, canonical and of the stated grade", name_of(sector),
                             max_count_grade);
    for (int m = 0; m <= max_count_grade; ++m) {
      const auto basis = enumerate_basis(sector, m);
      const std::size_t expected = m == 0 ? 1 : (std::size_t{1} << (m - 1));
      count.record(basis.size() == expected, [&] {
        return "m=" + std::to_string(m) + ": " + std::to_string(basis.size()) + " != " + std::to_string(expected);
      });
      bool ok = std::set<Composition>(basis.begin(), basis.end()).size() == basis.size();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        ok = ok && grade(basis[i], sector) == m;
        if (i) ok = ok && basis[i - 1] < basis[i];
      }
      sane.record(ok, [m] { return "m=" + std::to_string(m); });
    }
  }
  Check& bij = report.add("phi is a bijection from the GE1 basis onto the LE0 dual basis", "ge1 -> le0-dual",
                          max_phi_grade);
  for (int m = 0; m <= max_phi_grade; ++m) {
    const auto source = enumerate_basis(Sector::ge1, m);
    const auto target = enumerate_basis(Sector::le0, m);
    std::set<Composition> images;
    bool ok = true;
    for (const auto& w : source) {
      const DualElement f = phi(Element(Sector::ge1, w));
      ok = ok && f.size() == 1 && f.begin()->second.is_one();
      if (f.size() == 1) images.insert(f.begin()->first);
    }
    ok = ok && images == std::set<Composition>(target.begin(), target.end());
    bij.record(ok, [m] { return "m=" + std::to_string(m); });
  }
  return report;
}

Report operator_identities(int max_weight) {
  require_bound(max_weight);
  Report report;
  report.suite = "operators";
  const std::string s = "ge1";
  Check& comm = report.add("(J1 delta_i - delta_i J1)(w) = w, depth <= 5, 1 <= i <= depth", s, max_weight);
  Check& p1 = report.add("(J1 p_1 - p_1 J1)(w) = w, depth <= 5", s, max_weight);
  Check& pi = report.add("J1 p_i = p_i J1, depth <= 5, 2 <= i <= depth", s, max_weight);
  for (const auto& w : enumerate_basis_up_to(Sector::ge1, max_weight)) {
    if (w.is_unit() || w.depth() > 5) continue;
    const Element x(Sector::ge1, w);
    const int k = static_cast<int>(w.depth());
    for (int i = 1; i <= k; ++i) {
      const std::string in = w.str() + " i=" + std::to_string(i);
      const Element c = apply_J_ge1(apply_delta(i, x)) - apply_delta(i, apply_J_ge1(x));
      comm.record(c == x, mismatch(in, c, x));
      const Element l = apply_J_ge1(apply_p(i, x));
      const Element r = apply_p(i, apply_J_ge1(x));
      if (i == 1) {
        const Element d = l - r;
        p1.record(d == x, mismatch(in, d, x));
      } else {
        pi.record(l == r, mismatch(in, l, r));
      }
    }
  }
  return report;
}

Report shifted_coderivation(int max_weight, int max_index) {
  require_bound(max_weight);
  Report report;
  report.suite = "coalgebra";
  Check& d = report.add("(id (x) delta_i + delta_i x id) D = D delta_i, i <= " + std::to_string(max_index), "ge1",
                        max_weight);
  Check& p = report.add("(id (x) p_i + p_i x id) D = D p_i, i <= " + std::to_string(max_index), "ge1", max_weight);
  for (const auto& w : enumerate_basis_up_to(Sector::ge1, max_weight)) {
    const Element x(Sector::ge1, w);
    const Tensor dx = coproduct_ge1(x);
    for (int i = 1; i <= max_index; ++i) {
      const std::string in = w.str() + " i=" + std::to_string(i);
      for (bool use_p : {false, true}) {
        const OperatorId op = use_p ? op_p(i) : op_delta(i);
        const Tensor lhs = shifted_apply(op_identity(), op, dx) + tensor_apply(op, op_identity(), dx);
        const Tensor rhs = coproduct_ge1(apply(op, x));
        (use_p ? p : d).record(lhs == rhs, mismatch(in, lhs, rhs));
      }
    }
  }
  return report;
}

Report sector_witnesses(int max_grade) {
  require_bound(max_grade);
  Report report;
  report.suite = "witnesses";
  {
    const Element a(Sector::le0, Composition{-1}), b(Sector::le0, Composition{0});
    const Element ab = shuffle_le0(a, b), ba = shuffle_le0(b, a);
    Check& w = report.add("[-1] sh [0] != [0] sh [-1]", "le0", 2);
    w.record(!(ab == ba), [&] { return "both sides equal " + render_text(ab); });
  }
  Check& le0_comm = report.add("sh commutative on all basis pairs", "le0", max_grade, CheckKind::observation);
  Check& ge1_comm = report.add("sh commutative on all basis pairs", "ge1", max_grade);
  for (Sector sector : {Sector::le0, Sector::ge1}) {
    Check& c = sector == Sector::le0 ? le0_comm : ge1_comm;
    for_each_pair(sector, max_grade, true, [&](const Composition& u, const Composition& v) {
      const Element l = shuffle_words(u, v, sector), r = shuffle_words(v, u, sector);
      const std::string in = u.str() + ", " + v.str();
      c.record(l == r, mismatch(in, l, r));
    });
  }
  Check& le0_cocomm = report.add("flip D = D (cocommutative)", "le0", max_grade);
  Check& ge1_cocomm = report.add("flip D = D (cocommutative)", "ge1", max_grade, CheckKind::observation);
  for (Sector sector : {Sector::le0, Sector::ge1}) {
    Check& c = sector == Sector::le0 ? le0_cocomm : ge1_cocomm;
    for (const auto& w : enumerate_basis_up_to(sector, max_grade)) {
      const Tensor t = coproduct_word(w, sector);
      const Tensor f = flip_tensor(t);
      const std::string in = w.str();
      c.record(f == t, mismatch(in, f, t));
    }
  }
  return report;
}

Report structure(int max_grade) {
  require_bound(max_grade);
  Report report = structural_counts(max_grade, max_grade);
  report.suite = "structure";
  for (Sector sector : {Sector::ge1, Sector::le0}) {
    Check& add = report.add("grade(s ++ t) = grade(s) + grade(t)", name_of(sector), max_grade);
    Check& norm = report.add("normalize is idempotent", name_of(sector), max_grade);
    Check& flip2 = report.add("flip o flip = id", name_of(sector), max_grade);
    for_each_pair(sector, max_grade, true, [&](const Composition& u, const Composition& v) {
      add.record(grade(u.concat(v), sector) == grade(u, sector) + grade(v, sector),
                 [&] { return u.str() + ", " + v.str(); });
      const Element x = shuffle_words(u, v, sector);
      std::vector<std::pair<Composition, Rational>> raw(x.begin(), x.end());
      const Element once = normalize(raw, sector);
      std::vector<std::pair<Composition, Rational>> raw2(once.begin(), once.end());
      const Element twice = normalize(raw2, sector);
      const std::string in = u.str() + ", " + v.str();
      norm.record(once == x && twice == once, mismatch(in, once, twice));
    });
    for (const auto& w : enumerate_basis_up_to(sector, max_grade)) {
      const Tensor t = coproduct_word(w, sector);
      const Tensor back = flip(flip(t));
      const std::string in = w.str();
      flip2.record(back == t, mismatch(in, back, t));
    }
  }
  return report;
}

Report operators(int max_grade) {
  require_bound(max_grade);
  Report report = operator_identities(max_grade);
  report.suite = "operators";

  Check& ji = report.add("J1 I = id and J I = id on nonempty words", "ge1", max_grade);
  Check& j1_degree = report.add("J1 lowers the weight by exactly 1 or gives 0", "ge1", max_grade);
  Check& p_edge = report.add("p_{k+1}(w) = -delta_k(w) for depth k", "ge1", max_grade);
  for (const auto& w : enumerate_basis_up_to(Sector::ge1, max_grade)) {
    const Element x(Sector::ge1, w);
    const std::string in = w.str();
    if (!w.is_unit()) {
      const Element ix = apply_I(x);
      const Element a = apply_J_ge1(ix), b = apply_J(ix);
      ji.record(a == x && b == x, mismatch(in, a, b));
      const int k = static_cast<int>(w.depth());
      const Element lhs = apply_p(k + 1, x), rhs = -apply_delta(k, x);
      p_edge.record(lhs == rhs, mismatch(in, lhs, rhs));
    }
    const Element jx = apply_J_ge1(x);
    const auto g = jx.homogeneous_grade();
    j1_degree.record(jx.is_zero() || (g && *g == grade(w, Sector::ge1) - 1), [&] { return in + " -> " + render_text(jx); });
  }

  Check& j0_degree = report.add("J0 raises the grade by exactly 1 (1 -> 0)", "le0", max_grade);
  Check& j0_literal = report.add("J0 lowers the grade by exactly 1", "le0", max_grade, CheckKind::observation);
  for (int m = 1; m <= max_grade; ++m) {
    for (const auto& w : enumerate_basis(Sector::le0, m)) {
      const Element jx = apply_J_le0(Element(Sector::le0, w));
      const auto g = jx.homogeneous_grade();
      const std::string in = w.str();
      j0_degree.record(g && *g == m + 1, [&] { return in + " -> " + render_text(jx); });
      j0_literal.record(g && *g == m - 1, [&] { return in + " -> " + render_text(jx); });
    }
  }

  Check& tcomm = report.add("tilde-delta_i tilde-delta_j = tilde-delta_j tilde-delta_i, i, j <= 4", "le0-dual",
                            max_grade);
  Check& j0t = report.add("<J0*(f), x> = <f, J0(x)>", "le0-dual", max_grade);
  Check& j1t = report.add("<J1*(f), x> = <f, J1(x)>", "ge1-dual", max_grade);
  for (const auto& w : enumerate_basis_up_to(Sector::le0, max_grade)) {
    const DualElement f(Sector::le0, w);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        const DualElement l = apply_tilde_delta(i, apply_tilde_delta(j, f));
        const DualElement r = apply_tilde_delta(j, apply_tilde_delta(i, f));
        const std::string in = w.str() + "* i=" + std::to_string(i) + " j=" + std::to_string(j);
        tcomm.record(l == r, mismatch(in, l, r));
      }
  }
  for (Sector sector : {Sector::le0, Sector::ge1}) {
    Check& c = sector == Sector::le0 ? j0t : j1t;
    const auto words = enumerate_basis_up_to(sector, max_grade);
    for (const auto& fw : words) {
      const DualElement f(sector, fw);
      const DualElement jf = sector == Sector::le0 ? apply_J_le0_star(f) : apply_J_ge1_star(f);
      for (const auto& xw : words) {
        const Element x(sector, xw);
        const Element jx = sector == Sector::le0 ? apply_J_le0(x) : apply_J_ge1(x);
        const Rational l = pair(jf, x), r = pair(f, jx);
        c.record(l == r, [&] { return fw.str() + "*, " + xw.str() + ": " + l.str() + " != " + r.str(); });
      }
    }
  }
  return report;
}

Report products(int max_grade) {
  require_bound(max_grade);
  Report report = oracle_equivalence(max_grade);
  report.suite = "products";
  for (const Check& c : sector_witnesses(max_grade).checks)
    if (c.law.find("cocommutative") == std::string::npos) report.checks.push_back(c);

  Check& ge1_assoc = report.add("associativity", "ge1", max_grade);
  Check& le0_assoc = report.add("associativity", "le0", max_grade);
  for (Sector sector : {Sector::ge1, Sector::le0}) {
    Check& c = sector == Sector::ge1 ? ge1_assoc : le0_assoc;
    for_each_triple(sector, max_grade, [&](const Composition& u, const Composition& v, const Composition& w) {
      const Element e(sector, w);
      const Element lhs = shuffle(shuffle_words(u, v, sector), e);
      const Element rhs = shuffle(Element(sector, u), shuffle_words(v, w, sector));
      const std::string in = triple_str(u, v, w);
      c.record(lhs == rhs, mismatch(in, lhs, rhs));
    });
  }

  for (Sector sector : {Sector::ge1, Sector::le0}) {
    Check& graded = report.add("every term of u sh v has grade g(u)+g(v) and depth d(u)+d(v)", name_of(sector),
                               max_grade);
    Check& leibniz = report.add("Leibniz J(x sh y) = J(x) sh y + x sh J(y)", name_of(sector), max_grade);
    const LinearMap J = sector == Sector::ge1 ? LinearMap(apply_J_ge1) : LinearMap(apply_J_le0);
    for_each_pair(sector, max_grade, true, [&](const Composition& u, const Composition& v) {
      const Element x(sector, u), y(sector, v);
      const Element xy = shuffle(x, y);
      bool ok = true;
      for (const auto& [w, c] : xy)
        ok = ok && grade(w, sector) == grade(u, sector) + grade(v, sector) && w.depth() == u.depth() + v.depth();
      const std::string in = u.str() + ", " + v.str();
      graded.record(ok, [&] { return in + " -> " + render_text(xy); });
      const Element l = J(xy), r = shuffle(J(x), y) + shuffle(x, J(y));
      leibniz.record(l == r, mismatch(in, l, r));
    });
  }

  Check& rb = report.add("Rota-Baxter I(x) sh I(y) = I(I(x) sh y) + I(x sh I(y))", "ge1", max_grade);
  for_each_pair(Sector::ge1, max_grade, false, [&](const Composition& u, const Composition& v) {
    const Element x(Sector::ge1, u), y(Sector::ge1, v);
    const Element l = shuffle_ge1(apply_I(x), apply_I(y));
    const Element r = apply_I(shuffle_ge1(apply_I(x), y)) + apply_I(shuffle_ge1(x, apply_I(y)));
    const std::string in = u.str() + ", " + v.str();
    rb.record(l == r, mismatch(in, l, r));
  });
  return report;
}

Report coalgebra(int max_grade) {
  require_bound(max_grade);
  Report report = shifted_coderivation(max_grade, 4);
  report.suite = "coalgebra";
  for (const Check& c : sector_witnesses(max_grade).checks)
    if (c.law.find("cocommutative") != std::string::npos) report.checks.push_back(c);

  Check& pivot = report.add("pivot independence of the GE1 recursion", "ge1", max_grade);
  for (const auto& w : enumerate_basis_up_to(Sector::ge1, max_grade)) {
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < w.depth(); ++i)
      if (w[i] > 1) pivots.push_back(i);
    if (pivots.size() < 2) continue;
    const Tensor reference = coproduct_word(w, Sector::ge1);
    auto least = [](const Composition& x) {
      std::size_t i = 0;
      while (x[i] <= 1) ++i;
      return i;
    };
    auto greatest = [](const Composition& x) {
      std::size_t i = x.depth() - 1;
      while (x[i] <= 1) --i;
      return i;
    };
    std::vector<PivotChooser> strategies{greatest};
    for (std::size_t first : pivots)
      strategies.push_back([first, w, least](const Composition& x) { return x == w ? first : least(x); });
    for (std::size_t k = 0; k < strategies.size(); ++k) {
      const Tensor t = coproduct_ge1_with_pivot(w, strategies[k]);
      const std::string in = w.str() + " strategy " + std::to_string(k);
      pivot.record(t == reference, mismatch(in, t, reference));
    }
  }

  for (Sector sector : {Sector::ge1, Sector::le0}) {
    const std::string name = name_of(sector);
    Check& coassoc = report.add("coassociativity", name, max_grade);
    Check& counit_law = report.add("counit laws", name, max_grade);
    Check& graded = report.add("coproduct terms are grade and depth additive", name, max_grade);
    Check& reduced = report.add("reduced coproduct factors have grades strictly inside (0, g)", name, max_grade);
    Check& coder = report.add("coderivation D J = (J x id + id x J) D", name, max_grade);
    Check* coder0 = sector == Sector::le0 ? &report.add("coderivation on words starting with 0", name, max_grade)
                                          : nullptr;
    Check& eps_j = report.add("eps J = 0", name, max_grade);
    const OperatorId J{sector == Sector::ge1 ? OperatorKind::J_ge1 : OperatorKind::J_le0, 0};
    for (const auto& w : enumerate_basis_up_to(sector, max_grade)) {
      const Element x(sector, w);
      const std::string in = w.str();
      const Tensor dx = coproduct(x);
      const TripleTensor l3 = coproduct_left(dx), r3 = coproduct_right(dx);
      coassoc.record(l3 == r3, [&] { return in; });

      Element left(sector), right(sector);
      bool additive = true;
      for (const auto& [key, c] : dx) {
        if (key.first.is_unit()) left.add_term(key.second, c);
        if (key.second.is_unit()) right.add_term(key.first, c);
        additive = additive && grade(key.first, sector) + grade(key.second, sector) == grade(w, sector) &&
                   key.first.depth() + key.second.depth() == w.depth();
      }
      counit_law.record(left == x && right == x, mismatch(in, left, right));
      graded.record(additive, [&] { return in + " -> " + render_text(dx); });

      if (!w.is_unit()) {
        const Tensor r = reduced_coproduct(x);
        bool inside = true;
        for (const auto& [key, c] : r)
          inside = inside && !key.first.is_unit() && !key.second.is_unit();
        reduced.record(inside, [&] { return in + " -> " + render_text(r); });
      }

      const Element jx = apply(J, x);
      const Tensor lhs = coproduct(jx);
      const Tensor rhs = tensor_apply(J, op_identity(), dx) + tensor_apply(op_identity(), J, dx);
      coder.record(lhs == rhs, mismatch(in, lhs, rhs));
      if (coder0 && !w.is_unit() && w.front() == 0) coder0->record(lhs == rhs, mismatch(in, lhs, rhs));
      eps_j.record(counit(jx).is_zero(), [&] { return in; });
    }

    Check& bialgebra = report.add("bialgebra D(x sh y) = D(x) sh D(y)", name, max_grade);
    for_each_pair(sector, max_grade, true, [&](const Composition& u, const Composition& v) {
      const Tensor lhs = coproduct(shuffle_words(u, v, sector));
      const Tensor rhs = tensor_shuffle(coproduct_word(u, sector), coproduct_word(v, sector));
      const std::string in = u.str() + ", " + v.str();
      bialgebra.record(lhs == rhs, mismatch(in, lhs, rhs));
    });
  }
  return report;
}

Report hopf(int max_grade) {
  require_bound(max_grade);
  Report report;
  report.suite = "hopf";
  for (Sector sector : {Sector::ge1, Sector::le0}) {
    const HopfContext& ctx = standard_context(sector);
    report.append(check_differential_hopf(ctx, max_grade));
    const std::string name = name_of(sector);
    Check& unit = report.add("S(1) = 1 and S preserves the grade", name, max_grade);
    Check& involution = report.add("S o S = id", name, max_grade, CheckKind::observation);
    for (const auto& w : enumerate_basis_up_to(sector, max_grade)) {
      const Element x(sector, w);
      const Element s = antipode(x, ctx);
      const auto g = s.homogeneous_grade();
      const std::string in = w.str();
      bool ok = w.is_unit() ? s == x : (g && *g == grade(w, sector));
      unit.record(ok, [&] { return in + " -> " + render_text(s); });
      const Element ss = antipode(s, ctx);
      involution.record(ss == x, mismatch(in, ss, x));
    }
  }
  report.suite = "hopf";
  return report;
}

Report duality(int max_grade) { return verify_duality(max_grade); }
Report coefficients(int max_grade) { return verify_coefficients(max_grade); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"structure", "operators", "products",     "coalgebra",
                                              "hopf",      "duality",   "coefficients", "all"};
  return names;
}

Report run(std::string_view name, int max_grade) {
  if (name == "structure") return structure(max_grade);
  if (name == "operators") return operators(max_grade);
  if (name == "products") return products(max_grade);
  if (name == "coalgebra") return coalgebra(max_grade);
  if (name == "hopf") return hopf(max_grade);
  if (name == "duality") return duality(max_grade);
  if (name == "coefficients") return coefficients(max_grade);
  if (name == "all") {
    Report all;
    all.suite = "all";
    for (const auto& s : suite_names())
      if (s != "all") all.append(run(s, max_grade));
    return all;
  }
  throw Error("unknown suite '" + std::string(name) + "'");
}

}  // namespace dualhopf::suites
