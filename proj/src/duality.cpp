#include "dualhopf/duality.hpp"

#include <map>
#include <memory>
#include <vector>

#include "dualhopf/coalgebra.hpp"
#include "dualhopf/expression.hpp"
#include "dualhopf/hopf.hpp"
#include "dualhopf/memo.hpp"
#include "dualhopf/operators.hpp"
#include "dualhopf/shuffle.hpp"

namespace dualhopf {

namespace {

Composition reflect(const Composition& w) {
  std::vector<int> e;
  e.reserve(w.depth());
  for (int s : w) e.push_back(1 - s);
  return Composition(std::move(e));
}

void require_space(Space actual, Space expected, const char* what) {
  if (actual != expected)
    throw SpaceMismatchError(std::string(what) + " expects " + std::string(space_name(expected)) + ", got " +
                             std::string(space_name(actual)));
}

// Per-grade tables. Keys are basis words of one grade; values are the images
// of the corresponding dual basis vector (or pair) under a transposed map.
using Column = LinearCombination<Composition>;
using ColumnTable = std::map<Composition, Column>;
using PairTable = std::map<WordPair, Column>;
using CoproductTable = std::map<Composition, LinearCombination<WordPair>>;

template <class Table>
using GradeCache = MemoCache<int, std::shared_ptr<const Table>>;

template <class Table>
GradeCache<Table>& grade_cache(Sector sector, int which) {
  static GradeCache<Table> caches[2][2];
  return caches[sector == Sector::ge1 ? 0 : 1][which];
}

// (u, v) -> Σ_w <Δ(w), u⊗v> w*, for all w of the given grade.
std::shared_ptr<const PairTable> dual_product_table(Sector sector, int n) {
  return grade_cache<PairTable>(sector, 0).get_or_compute(n, [&] {
    auto table = std::make_shared<PairTable>();
    for (const auto& w : enumerate_basis(sector, n))
      for (const auto& [key, c] : coproduct_word(w, sector)) (*table)[key].add(w, c);
    return std::shared_ptr<const PairTable>(table);
  });
}

// s -> Σ_{u,v} <s*, u ⧢ v> u*⊗v*, over all basis pairs with grades summing to n.
std::shared_ptr<const CoproductTable> dual_coproduct_table(Sector sector, int n) {
  return grade_cache<CoproductTable>(sector, 0).get_or_compute(n, [&] {
    auto table = std::make_shared<CoproductTable>();
    for (int a = 0; a <= n; ++a) {
      const auto left = enumerate_basis(sector, a);
      const auto right = enumerate_basis(sector, n - a);
      for (const auto& u : left)
        for (const auto& v : right)
          for (const auto& [w, c] : shuffle_words(u, v, sector)) (*table)[w].add({u, v}, c);
    }
    return std::shared_ptr<const CoproductTable>(table);
  });
}

// s -> Σ_w <s*, S(w)> w*
std::shared_ptr<const ColumnTable> dual_antipode_table(Sector sector, int n) {
  return grade_cache<ColumnTable>(sector, 0).get_or_compute(n, [&] {
    auto table = std::make_shared<ColumnTable>();
    for (const auto& w : enumerate_basis(sector, n))
      for (const auto& [s, c] : antipode(Element(sector, w))) (*table)[s].add(w, c);
    return std::shared_ptr<const ColumnTable>(table);
  });
}

// LE0 word x -> φ*(x) = Σ_y <φ(y), x> y* over the GE1 basis y of the same grade.
std::shared_ptr<const ColumnTable> phi_star_table(int n) {
  return grade_cache<ColumnTable>(Sector::le0, 1).get_or_compute(n, [&] {
    auto table = std::make_shared<ColumnTable>();
    for (const auto& y : enumerate_basis(Sector::ge1, n)) {
      const DualElement image = phi(Element(Sector::ge1, y));
      for (const auto& x : enumerate_basis(Sector::le0, n)) {
        Rational c = pair(image, Element(Sector::le0, x));
        if (!c.is_zero()) (*table)[x].add(y, c);
      }
    }
    return std::shared_ptr<const ColumnTable>(table);
  });
}

// GE1 word y -> ψ(y*), from the inverse of the matrix of φ* on grade n.
std::shared_ptr<const ColumnTable> psi_table(int n) {
  return grade_cache<ColumnTable>(Sector::ge1, 1).get_or_compute(n, [&] {
    const auto rows = enumerate_basis(Sector::ge1, n);
    const auto cols = enumerate_basis(Sector::le0, n);
    const std::size_t dim = rows.size();
    if (cols.size() != dim) throw DomainError("graded pieces of different dimension in grade " + std::to_string(n));
    std::map<Composition, std::size_t> row_index;
    for (std::size_t r = 0; r < dim; ++r) row_index[rows[r]] = r;

    // Augmented [M | I] with M[r][c] = coefficient of rows[r]* in φ*(cols[c]).
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(2 * dim));
    const auto forward = phi_star_table(n);
    for (std::size_t c = 0; c < dim; ++c) {
      auto it = forward->find(cols[c]);
      if (it == forward->end()) continue;
      for (const auto& [y, k] : it->second) m[row_index.at(y)][c] = k;
    }
    for (std::size_t r = 0; r < dim; ++r) m[r][dim + r] = 1;

    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t pivot = col;
      while (pivot < dim && m[pivot][col].is_zero()) ++pivot;
      if (pivot == dim) throw DomainError("phi* is singular in grade " + std::to_string(n));
      std::swap(m[pivot], m[col]);
      const Rational inv = Rational(1) / m[col][col];
      for (auto& entry : m[col]) entry *= inv;
      for (std::size_t r = 0; r < dim; ++r) {
        if (r == col || m[r][col].is_zero()) continue;
        const Rational factor = m[r][col];
        for (std::size_t k = 0; k < 2 * dim; ++k)
          if (!m[col][k].is_zero()) m[r][k] -= factor * m[col][k];
      }
    }
    // The inverse maps GE1-dual coordinates to LE0 coordinates: ψ(rows[r]*) = Σ_c inv[c][r] cols[c].
    auto table = std::make_shared<ColumnTable>();
    for (std::size_t c = 0; c < dim; ++c)
      for (std::size_t r = 0; r < dim; ++r)
        if (!m[c][dim + r].is_zero()) (*table)[rows[r]].add(cols[c], m[c][dim + r]);
    return std::shared_ptr<const ColumnTable>(table);
  });
}

template <bool OutDual, bool InDual>
BasicElement<OutDual> apply_table(const BasicElement<InDual>& x, Sector out_sector,
                                  std::shared_ptr<const ColumnTable> (*table_for)(int)) {
  BasicElement<OutDual> out(out_sector);
  for (const auto& [w, c] : x) {
    auto table = table_for(grade(w, x.sector()));
    auto it = table->find(w);
    if (it == table->end()) continue;
    for (const auto& [image, k] : it->second) out.add_term(image, c * k);
  }
  return out;
}

template <bool OutDual, bool InDual, class F>
BasicTensor<OutDual> map_tensor(const BasicTensor<InDual>& t, Sector out_sector, F&& f) {
  BasicTensor<OutDual> out(out_sector);
  for (const auto& [key, c] : t) {
    auto left = f(BasicElement<InDual>(t.sector(), key.first));
    auto right = f(BasicElement<InDual>(t.sector(), key.second));
    out.add_product(left, right, c);
  }
  return out;
}

}  // namespace

DualElement phi(const Element& x) {
  require_space(x.space(), Space::ge1, "phi");
  DualElement out(Sector::le0);
  for (const auto& [w, c] : x) out.add_term(reflect(w), c);
  return out;
}

Element phi_inverse(const DualElement& f) {
  require_space(f.space(), Space::le0_dual, "phi inverse");
  Element out(Sector::ge1);
  for (const auto& [w, c] : f) out.add_term(reflect(w), c);
  return out;
}

DualElement phi_star(const Element& x) {
  require_space(x.space(), Space::le0, "phi*");
  return apply_table<true>(x, Sector::ge1, &phi_star_table);
}

Element psi(const DualElement& f) {
  require_space(f.space(), Space::ge1_dual, "psi");
  return apply_table<false>(f, Sector::le0, &psi_table);
}

DualTensor phi_tensor(const Tensor& t) {
  require_space(t.space(), Space::ge1, "phi");
  return map_tensor<true>(t, Sector::le0, [](const Element& x) { return phi(x); });
}
Tensor phi_inverse_tensor(const DualTensor& t) {
  require_space(t.space(), Space::le0_dual, "phi inverse");
  return map_tensor<false>(t, Sector::ge1, [](const DualElement& f) { return phi_inverse(f); });
}
DualTensor phi_star_tensor(const Tensor& t) {
  require_space(t.space(), Space::le0, "phi*");
  return map_tensor<true>(t, Sector::ge1, [](const Element& x) { return phi_star(x); });
}
Tensor psi_tensor(const DualTensor& t) {
  require_space(t.space(), Space::ge1_dual, "psi");
  return map_tensor<false>(t, Sector::le0, [](const DualElement& f) { return psi(f); });
}

DualElement dual_product(const DualElement& f, const DualElement& g) {
  f.require_same_space(g);
  const Sector sector = f.sector();
  DualElement out(sector);
  for (const auto& [u, cu] : f) {
    for (const auto& [v, cv] : g) {
      auto table = dual_product_table(sector, grade(u, sector) + grade(v, sector));
      auto it = table->find({u, v});
      if (it == table->end()) continue;
      for (const auto& [w, k] : it->second) out.add_term(w, cu * cv * k);
    }
  }
  return out;
}

DualElement dual_product(const DualTensor& t) {
  DualElement out(t.sector());
  for (const auto& [key, c] : t)
    out.add(dual_product(DualElement(t.sector(), key.first), DualElement(t.sector(), key.second)), c);
  return out;
}

DualTensor dual_coproduct(const DualElement& f) {
  const Sector sector = f.sector();
  DualTensor out(sector);
  for (const auto& [s, c] : f) {
    auto table = dual_coproduct_table(sector, grade(s, sector));
    auto it = table->find(s);
    if (it == table->end()) continue;
    for (const auto& [key, k] : it->second) out.add_term(key.first, key.second, c * k);
  }
  return out;
}

DualElement dual_antipode(const DualElement& f) {
  const Sector sector = f.sector();
  DualElement out(sector);
  for (const auto& [s, c] : f) {
    auto table = dual_antipode_table(sector, grade(s, sector));
    auto it = table->find(s);
    if (it == table->end()) continue;
    for (const auto& [w, k] : it->second) out.add_term(w, c * k);
  }
  return out;
}

Rational structure_coefficient(Sector sector, const Composition& s, const Composition& u, const Composition& v) {
  const int n = grade(s, sector);
  if (grade(u, sector) + grade(v, sector) != n) return Rational(0);
  auto table = dual_coproduct_table(sector, n);
  auto it = table->find(s);
  return it == table->end() ? Rational(0) : it->second.coefficient({u, v});
}

Rational coefficient_a(const Composition& s, const Composition& u, const Composition& v) {
  return structure_coefficient(Sector::le0, s, u, v);
}

Rational coefficient_A(const Composition& s, const Composition& u, const Composition& v) {
  return structure_coefficient(Sector::ge1, s, u, v);
}

namespace {

template <class T>
std::string show(const T& value) {
  return render_text(value);
}

template <class T>
auto mismatch(const std::string& input, const T& lhs, const T& rhs) {
  return [&input, &lhs, &rhs] { return input + ": " + show(lhs) + " != " + show(rhs); };
}

// Calls f(u, v) for every pair of basis words with grade(u) + grade(v) <= max_grade.
template <class F>
void for_each_pair(Sector sector, int max_grade, F&& f) {
  const auto words = enumerate_basis_up_to(sector, max_grade);
  for (const auto& u : words)
    for (const auto& v : words)
      if (grade(u, sector) + grade(v, sector) <= max_grade) f(u, v);
}

}  // namespace

Report verify_duality(int max_grade) {
  if (max_grade < 1) throw DomainError("max_grade must be >= 1");
  Report report;
  report.suite = "duality";
  const int n = max_grade;
  const auto ge1_words = enumerate_basis_up_to(Sector::ge1, n);
  const auto le0_words = enumerate_basis_up_to(Sector::le0, n);
  const OperatorId J0star{OperatorKind::J_le0_star, 0};
  const OperatorId J1star{OperatorKind::J_ge1_star, 0};

  Check& phi_prod = report.add("phi(x sh y) = phi(x) . phi(y)", "ge1 -> le0-dual", n);
  for_each_pair(Sector::ge1, n, [&](const Composition& u, const Composition& v) {
    const DualElement lhs = phi(shuffle_ge1(Element(Sector::ge1, u), Element(Sector::ge1, v)));
    const DualElement rhs = dual_product(phi(Element(Sector::ge1, u)), phi(Element(Sector::ge1, v)));
    const std::string in = u.str() + ", " + v.str();
    phi_prod.record(lhs == rhs, mismatch(in, lhs, rhs));
  });

  Check& phi_star_prod = report.add("phi*(x sh y) = phi*(x) . phi*(y)", "le0 -> ge1-dual", n);
  for_each_pair(Sector::le0, n, [&](const Composition& u, const Composition& v) {
    const DualElement lhs = phi_star(shuffle_le0(Element(Sector::le0, u), Element(Sector::le0, v)));
    const DualElement rhs = dual_product(phi_star(Element(Sector::le0, u)), phi_star(Element(Sector::le0, v)));
    const std::string in = u.str() + ", " + v.str();
    phi_star_prod.record(lhs == rhs, mismatch(in, lhs, rhs));
  });

  Check& phi_cop = report.add("(phi x phi) D = sh*(phi)", "ge1 -> le0-dual", n);
  Check& deltac = report.add("D = (phi^-1 x phi^-1) sh* phi", "ge1", n);
  Check& phi_J = report.add("phi J1 = J0* phi", "ge1 -> le0-dual", n);
  Check& phi_S = report.add("phi S = S* phi", "ge1 -> le0-dual", n);
  Check& tilde_phi = report.add("tilde-delta_i phi = phi delta_i (i <= 3)", "ge1 -> le0-dual", n);
  for (const auto& w : ge1_words) {
    const Element x(Sector::ge1, w);
    const std::string in = w.str();
    const Tensor dx = coproduct_ge1(x);
    const DualTensor lhs = phi_tensor(dx);
    const DualTensor rhs = dual_coproduct(phi(x));
    phi_cop.record(lhs == rhs, mismatch(in, lhs, rhs));

    const Tensor back = phi_inverse_tensor(rhs);
    deltac.record(back == dx, mismatch(in, back, dx));

    const DualElement jl = phi(apply_J_ge1(x));
    const DualElement jr = apply(J0star, phi(x));
    phi_J.record(jl == jr, mismatch(in, jl, jr));

    const DualElement sl = phi(antipode(x));
    const DualElement sr = dual_antipode(phi(x));
    phi_S.record(sl == sr, mismatch(in, sl, sr));

    for (int i = 1; i <= 3; ++i) {
      const DualElement dl = apply_tilde_delta(i, phi(x));
      const DualElement dr = phi(apply_delta(i, x));
      tilde_phi.record(dl == dr, mismatch(in + " i=" + std::to_string(i), dl, dr));
    }
  }

  Check& star_cop = report.add("(phi* x phi*) D = sh*(phi*)", "le0 -> ge1-dual", n);
  Check& deltad = report.add("D = (psi x psi) sh* phi*", "le0", n);
  Check& star_J = report.add("phi* J0 = J1* phi*", "le0 -> ge1-dual", n);
  Check& star_S = report.add("phi* S = S* phi*", "le0 -> ge1-dual", n);
  Check& psi_inv = report.add("psi phi* = id", "le0", n);
  for (const auto& w : le0_words) {
    const Element x(Sector::le0, w);
    const std::string in = w.str();
    const Tensor dx = coproduct_le0(x);
    const DualTensor lhs = phi_star_tensor(dx);
    const DualTensor rhs = dual_coproduct(phi_star(x));
    star_cop.record(lhs == rhs, mismatch(in, lhs, rhs));

    const Tensor back = psi_tensor(rhs);
    deltad.record(back == dx, mismatch(in, back, dx));

    const DualElement jl = phi_star(apply_J_le0(x));
    const DualElement jr = apply(J1star, phi_star(x));
    star_J.record(jl == jr, mismatch(in, jl, jr));

    const DualElement sl = phi_star(antipode(x));
    const DualElement sr = dual_antipode(phi_star(x));
    star_S.record(sl == sr, mismatch(in, sl, sr));

    const Element round = psi(phi_star(x));
    psi_inv.record(round == x, mismatch(in, round, x));
  }

  Check& shifted_phi = report.add("(phi x phi)(A (x) delta_i) = (A~ (x) tilde-delta_i)(phi x phi), i, j <= 3",
                                  "ge1 -> le0-dual", n);
  for_each_pair(Sector::ge1, n, [&](const Composition& u, const Composition& v) {
    Tensor t(Sector::ge1);
    t.add_term(u, v, Rational(1));
    const DualTensor pt = phi_tensor(t);
    for (int j = 0; j <= 3; ++j) {
      const OperatorId a = j == 0 ? op_identity() : op_delta(j);
      const OperatorId at = j == 0 ? op_identity() : op_tilde_delta(j);
      for (int i = 1; i <= 3; ++i) {
        const DualTensor lhs = phi_tensor(shifted_apply(a, op_delta(i), t));
        const DualTensor rhs = shifted_apply(at, op_tilde_delta(i), pt);
        const std::string in = u.str() + "(x)" + v.str() + " A=" + a.str() + " i=" + std::to_string(i);
        shifted_phi.record(lhs == rhs, mismatch(in, lhs, rhs));
      }
    }
  });

  Check& tilde_coder = report.add("(id (x) tilde-delta_i + tilde-delta_i x id) sh* = sh* tilde-delta_i, i <= 3",
                                  "le0-dual", n);
  for (const auto& w : le0_words) {
    const DualElement f(Sector::le0, w);
    const DualTensor cf = dual_coproduct(f);
    for (int i = 1; i <= 3; ++i) {
      const DualTensor lhs = shifted_apply(op_identity(), op_tilde_delta(i), cf) +
                             tensor_apply(op_tilde_delta(i), op_identity(), cf);
      const DualTensor rhs = dual_coproduct(apply_tilde_delta(i, f));
      const std::string in = w.str() + "* i=" + std::to_string(i);
      tilde_coder.record(lhs == rhs, mismatch(in, lhs, rhs));
    }
  }

  for (Sector sector : {Sector::ge1, Sector::le0}) {
    const std::string name(space_name(space_of(sector, true)));
    Check& dual_unit = report.add("dual unit 1* f = f = f 1*", name, n);
    Check& dual_counit = report.add("dual counit laws for sh*", name, n);
    const DualElement one = DualElement::unit(sector);
    for (const auto& w : enumerate_basis_up_to(sector, n)) {
      const DualElement f(sector, w);
      const DualElement l = dual_product(one, f), r = dual_product(f, one);
      dual_unit.record(l == f && r == f, mismatch(w.str() + "*", l, r));
      DualElement left(sector), right(sector);
      for (const auto& [key, c] : dual_coproduct(f)) {
        if (key.first.is_unit()) left.add_term(key.second, c);
        if (key.second.is_unit()) right.add_term(key.first, c);
      }
      dual_counit.record(left == f && right == f, mismatch(w.str() + "*", left, right));
    }
  }
  return report;
}

Report verify_coefficients(int max_grade) {
  if (max_grade < 1) throw DomainError("max_grade must be >= 1");
  Report report;
  report.suite = "coefficients";
  const int n = max_grade;
  const Sector le0 = Sector::le0;
  auto a = [](const Composition& s, const Composition& u, const Composition& v) { return coefficient_a(s, u, v); };
  auto J = [](const Composition& w) { return w.with_entry(0, w.front() - 1); };
  auto describe = [](const Composition& s, const Composition& u, const Composition& v, const Rational& lhs,
                     const Rational& rhs) {
    return [=] { return "s=" + s.str() + " u=" + u.str() + " v=" + v.str() + ": " + lhs.str() + " != " + rhs.str(); };
  };

  Check& ab = report.add("a(s;u,v) = a(Js;Ju,v) + a(Js;u,Jv)", "le0", n);
  Check& zero = report.add("a(s;u,v) = 0 when u1 > s1", "le0", n);
  Check& rel1 = report.add("(s1-u1) a(s;u,v) = u1 a(s;[u1+1,u'],Jv) when u1 <= s1", "le0", n);
  Check& rel2 = report.add("a(s;u,v) = (1-s1)/(1-u1) a([s1-1,s'];[u1-1,u'],v) when u1 <= s1", "le0", n);
  Check& case1 = report.add("prefix 0_i, depth(u) < i", "le0", n);
  Check& case2 = report.add("prefix 0_i, depth(u) = i", "le0", n);
  Check& case3 = report.add("prefix 0_i, depth(u) > i", "le0", n);

  for (int g = 1; g <= n; ++g) {
    const auto targets = enumerate_basis(le0, g);
    for (int gu = 1; gu < g; ++gu) {
      const auto lefts = enumerate_basis(le0, gu);
      const auto rights = enumerate_basis(le0, g - gu);
      for (const auto& s : targets) {
        for (const auto& u : lefts) {
          for (const auto& v : rights) {
            const Rational coeff = a(s, u, v);

            const Rational ab_rhs = a(J(s), J(u), v) + a(J(s), u, J(v));
            ab.record(coeff == ab_rhs, describe(s, u, v, coeff, ab_rhs));

            const int s1 = s.front(), u1 = u.front();
            if (u1 > s1) {
              zero.record(coeff.is_zero(), describe(s, u, v, coeff, Rational(0)));
            } else {
              const Rational lhs1 = Rational(s1 - u1) * coeff;
              // For u1 = 0 the word [u1+1, u'] leaves the sector, but its factor u1 is 0.
              const Rational rhs1 = u1 == 0 ? Rational(0) : Rational(u1) * a(s, u.with_entry(0, u1 + 1), J(v));
              rel1.record(lhs1 == rhs1, describe(s, u, v, lhs1, rhs1));

              const Rational rhs2 = Rational(1 - s1, 1 - u1) * a(J(s), J(u), v);
              rel2.record(coeff == rhs2, describe(s, u, v, coeff, rhs2));
            }

            std::size_t zeros = 0;
            while (zeros < s.depth() && s[zeros] == 0) ++zeros;
            for (std::size_t i = 1; i <= zeros; ++i) {
              const Composition rest(std::vector<int>(s.begin() + static_cast<std::ptrdiff_t>(i), s.end()));
              const std::size_t m = u.depth();
              if (m < i) {
                bool hit = u == Composition(std::vector<int>(m, 0)) &&
                           v == Composition(std::vector<int>(i - m, 0)).concat(rest);
                const Rational expected(hit ? 1 : 0);
                case1.record(coeff == expected, describe(s, u, v, coeff, expected));
                continue;
              }
              int sum = 0;
              for (std::size_t j = 0; j < i; ++j) sum += u[j];
              const Rational sign(sum % 2 == 0 ? 1 : -1);
              const Composition shifted_v = v.with_entry(0, v.front() + sum);
              if (m == i) {
                const Rational expected = shifted_v == rest ? sign : Rational(0);
                case2.record(coeff == expected, describe(s, u, v, coeff, expected));
              } else {
                const Composition u_rest(std::vector<int>(u.begin() + static_cast<std::ptrdiff_t>(i), u.end()));
                const Rational expected = sign * a(rest, u_rest, shifted_v);
                case3.record(coeff == expected, describe(s, u, v, coeff, expected));
              }
            }
          }
        }
      }
    }
  }

  Check& zeros_k = report.add("sh*([0_k]*) = sum_j [0_j]* (x) [0_{k-j}]*", "le0-dual", n);
  for (int k = 0; k <= n; ++k) {
    const DualTensor lhs = dual_coproduct(DualElement(le0, Composition(std::vector<int>(k, 0))));
    DualTensor rhs(le0);
    for (int j = 0; j <= k; ++j)
      rhs.add_term(Composition(std::vector<int>(j, 0)), Composition(std::vector<int>(k - j, 0)), Rational(1));
    zeros_k.record(lhs == rhs, [&] { return "k=" + std::to_string(k) + ": " + show(lhs) + " != " + show(rhs); });
  }

  // A^{[1,t]}_{u,v} in terms of A^{t}; units are allowed on the right-hand side.
  Check& vec1 = report.add("A([1,t];u,v) four-branch recursion", "ge1", n);
  const Sector ge1 = Sector::ge1;
  for (int g = 0; g < n; ++g) {
    for (const auto& t : enumerate_basis(ge1, g)) {
      const Composition target = t.prepend(1);
      for (int gu = 1; gu <= g; ++gu) {
        for (const auto& u : enumerate_basis(ge1, gu)) {
          for (const auto& v : enumerate_basis(ge1, g + 1 - gu)) {
            const Rational lhs = coefficient_A(target, u, v);
            const Composition ut = u.tail(), vt = v.tail();
            Rational rhs;
            if (u.front() > 1 && v.front() > 1) {
              rhs = 0;
            } else if (u.front() == 1 && v.front() > 1) {
              rhs = coefficient_A(t, ut, v);
            } else if (u.front() > 1) {
              rhs = coefficient_A(t, u, vt);
            } else {
              rhs = coefficient_A(t, ut, vt.prepend(1)) + coefficient_A(t, ut.prepend(1), vt);
            }
            vec1.record(lhs == rhs, describe(target, u, v, lhs, rhs));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace dualhopf
