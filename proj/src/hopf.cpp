#include "dualhopf/hopf.hpp"

#include "dualhopf/coalgebra.hpp"
#include "dualhopf/expression.hpp"
#include "dualhopf/operators.hpp"
#include "dualhopf/shuffle.hpp"

namespace dualhopf {

HopfContext HopfContext::standard(Sector sector) {
  HopfContext ctx;
  ctx.sector = sector;
  if (sector == Sector::ge1) {
    ctx.product = shuffle_ge1;
    ctx.coproduct = coproduct_ge1;
    ctx.derivation = apply_J_ge1;
  } else {
    ctx.product = shuffle_le0;
    ctx.coproduct = coproduct_le0;
    ctx.derivation = apply_J_le0;
  }
  return ctx;
}

const HopfContext& standard_context(Sector sector) {
  static const HopfContext ge1 = HopfContext::standard(Sector::ge1);
  static const HopfContext le0 = HopfContext::standard(Sector::le0);
  return sector == Sector::ge1 ? ge1 : le0;
}

namespace {

Element antipode_word(const Composition& w, const HopfContext& ctx) {
  if (w.is_unit()) return Element::unit(ctx.sector);
  return ctx.antipode_cache->get_or_compute(w, [&] {
    Element word(ctx.sector, w);
    Element s = -word;
    Tensor t = ctx.coproduct(word);
    for (const auto& [key, c] : t) {
      const auto& [left, right] = key;
      if (left.is_unit() || right.is_unit()) continue;
      s.add(ctx.product(antipode_word(left, ctx), Element(ctx.sector, right)), -c);
    }
    return s;
  });
}

}  // namespace

Element antipode(const Element& x, const HopfContext& ctx) {
  if (x.sector() != ctx.sector) throw SpaceMismatchError("antipode applied to an element of another sector");
  Element out(ctx.sector);
  for (const auto& [w, c] : x) out.add(antipode_word(w, ctx), c);
  return out;
}

Element antipode(const Element& x) { return antipode(x, standard_context(x.sector())); }

Element multiply(const Tensor& t, const HopfContext& ctx) {
  Element out(ctx.sector);
  for (const auto& [key, c] : t) out.add(ctx.product(Element(ctx.sector, key.first), Element(ctx.sector, key.second)), c);
  return out;
}

Element convolve(const LinearMap& f, const LinearMap& g, const Element& x, const HopfContext& ctx) {
  Element out(ctx.sector);
  for (const auto& [key, c] : ctx.coproduct(x))
    out.add(ctx.product(f(Element(ctx.sector, key.first)), g(Element(ctx.sector, key.second))), c);
  return out;
}

namespace {

std::string show(const Element& x) { return render_text(x); }
std::string show(const Tensor& t) { return render_text(t); }

std::string show(const TripleTensor& t) {
  std::string out;
  for (const auto& [key, c] : t) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")" + key[0].str() + "(x)" + key[1].str() + "(x)" + key[2].str();
  }
  return out.empty() ? "0" : out;
}

// The returned callable refers to its arguments; use it before they go out of scope.
template <class T>
auto mismatch(const std::string& input, const T& lhs, const T& rhs) {
  return [&input, &lhs, &rhs] { return input + ": " + show(lhs) + " != " + show(rhs); };
}

Tensor apply_both_sides(const LinearMap& d, const Tensor& t, bool left) {
  Tensor out(t.sector());
  for (const auto& [key, c] : t) {
    Element side = d(Element(t.sector(), left ? key.first : key.second));
    Element other(t.sector(), left ? key.second : key.first);
    if (left) {
      out.add_product(side, other, c);
    } else {
      out.add_product(other, side, c);
    }
  }
  return out;
}

}  // namespace

Report check_differential_hopf(const HopfContext& ctx, int max_grade) {
  if (max_grade < 1) throw DomainError("max_grade must be >= 1");
  const Sector sector = ctx.sector;
  const std::string name(sector_name(sector));
  Report report;
  report.suite = "hopf";

  const auto words = enumerate_basis_up_to(sector, max_grade);
  auto elem = [&](const Composition& w) { return Element(sector, w); };
  auto g = [&](const Composition& w) { return grade(w, sector); };
  const Element one = Element::unit(sector);
  const LinearMap id = [](const Element& x) { return x; };
  const LinearMap S = [&](const Element& x) { return antipode(x, ctx); };

  Check& unit = report.add("unit laws 1x = x = x1", name, max_grade);
  Check& counit_law = report.add("counit laws (eps x id)D = id = (id x eps)D", name, max_grade);
  Check& coassoc = report.add("coassociativity (D x id)D = (id x D)D", name, max_grade);
  Check& antipode_left = report.add("antipode m(S x id)D = u eps", name, max_grade);
  Check& antipode_right = report.add("antipode m(id x S)D = u eps", name, max_grade);
  Check& coder = report.add("coderivation D d = (d x id + id x d) D", name, max_grade);
  Check& eps_d = report.add("eps d = 0", name, max_grade);
  Check& s_d = report.add("S d = d S", name, max_grade);

  for (const auto& w : words) {
    const Element x = elem(w);
    const std::string in = w.str();
    const Tensor dx = ctx.coproduct(x);

    unit.record(ctx.product(one, x) == x && ctx.product(x, one) == x, [&] {
      return in + ": 1x = " + show(ctx.product(one, x)) + ", x1 = " + show(ctx.product(x, one));
    });

    Element left_counit(sector), right_counit(sector);
    for (const auto& [key, c] : dx) {
      if (key.first.is_unit()) left_counit.add_term(key.second, c);
      if (key.second.is_unit()) right_counit.add_term(key.first, c);
    }
    counit_law.record(left_counit == x && right_counit == x, mismatch(in, left_counit, right_counit));

    const TripleTensor l3 = coproduct_left(dx);
    const TripleTensor r3 = coproduct_right(dx);
    coassoc.record(l3 == r3, mismatch(in, l3, r3));

    const Element expected = w.is_unit() ? one : Element(sector);
    const Element sl = convolve(S, id, x, ctx);
    const Element sr = convolve(id, S, x, ctx);
    antipode_left.record(sl == expected, mismatch(in, sl, expected));
    antipode_right.record(sr == expected, mismatch(in, sr, expected));

    const Element dxw = ctx.derivation(x);
    const Tensor lhs = ctx.coproduct(dxw);
    const Tensor rhs = apply_both_sides(ctx.derivation, dx, true) + apply_both_sides(ctx.derivation, dx, false);
    coder.record(lhs == rhs, mismatch(in, lhs, rhs));

    eps_d.record(counit(dxw).is_zero(), [&] { return in + ": eps(d x) = " + counit(dxw).str(); });

    const Element sd = antipode(dxw, ctx);
    const Element ds = ctx.derivation(antipode(x, ctx));
    s_d.record(sd == ds, mismatch(in, sd, ds));
  }

  Check& leibniz = report.add("Leibniz d(xy) = d(x)y + x d(y)", name, max_grade);
  Check& bialgebra = report.add("bialgebra D(xy) = D(x)D(y)", name, max_grade);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (g(u) + g(v) > max_grade) continue;
      const Element x = elem(u), y = elem(v);
      const Element xy = ctx.product(x, y);

      const Element dl = ctx.derivation(xy);
      const Element dr = ctx.product(ctx.derivation(x), y) + ctx.product(x, ctx.derivation(y));
      leibniz.record(dl == dr, [&] { return u.str() + ", " + v.str() + ": " + show(dl) + " != " + show(dr); });

      const Tensor cl = ctx.coproduct(xy);
      const Tensor dxt = ctx.coproduct(x), dyt = ctx.coproduct(y);
      Tensor cr(sector);
      for (const auto& [a, ca] : dxt)
        for (const auto& [b, cb] : dyt)
          cr.add_product(ctx.product(elem(a.first), elem(b.first)), ctx.product(elem(a.second), elem(b.second)),
                         ca * cb);
      bialgebra.record(cl == cr, [&] { return u.str() + ", " + v.str() + ": " + show(cl) + " != " + show(cr); });
    }
  }

  Check& assoc = report.add("associativity (xy)z = x(yz)", name, max_grade);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (g(u) + g(v) > max_grade) continue;
      const Element uv = ctx.product(elem(u), elem(v));
      for (const auto& w : words) {
        if (g(u) + g(v) + g(w) > max_grade) continue;
        const Element lhs = ctx.product(uv, elem(w));
        const Element rhs = ctx.product(elem(u), ctx.product(elem(v), elem(w)));
        assoc.record(lhs == rhs, [&] { return u.str() + ", " + v.str() + ", " + w.str() + ": " + show(lhs) + " != " + show(rhs); });
      }
    }
  }
  return report;
}

}  // namespace dualhopf
