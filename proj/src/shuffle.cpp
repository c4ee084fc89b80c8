#include "dualhopf/shuffle.hpp"

#include "dualhopf/memo.hpp"

namespace dualhopf {

BinaryWord encode_word(const Composition& w) {
  BinaryWord letters;
  for (int s : w) {
    if (s < 1) throw SignConstraintError("cannot encode " + w.str() + ": entries must be >= 1");
    letters.insert(letters.end(), static_cast<std::size_t>(s - 1), false);
    letters.push_back(true);
  }
  return letters;
}

Composition decode_word(const BinaryWord& letters) {
  if (!letters.empty() && !letters.back()) throw DomainError("binary word does not end in x1");
  std::vector<int> entries;
  int run = 1;
  for (bool letter : letters) {
    if (letter) {
      entries.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  return Composition(std::move(entries));
}

std::string binary_word_str(const BinaryWord& letters) {
  if (letters.empty()) return "e";
  std::string s;
  for (bool letter : letters) s += letter ? "x1" : "x0";
  return s;
}

namespace {

using WordProductCache = MemoCache<WordPair, LinearCombination<Composition>, CompositionPairHash>;

WordProductCache& ge1_cache() {
  static WordProductCache cache;
  return cache;
}

WordProductCache& le0_cache() {
  static WordProductCache cache;
  return cache;
}

LinearCombination<Composition> ge1_words(const Composition& u, const Composition& v);
LinearCombination<Composition> le0_words(const Composition& u, const Composition& v);

// Adds c * [head, terms...] for every term of `tail_product`.
void add_prefixed(LinearCombination<Composition>& out, int head, const LinearCombination<Composition>& tail_product,
                  const Rational& c) {
  for (const auto& [w, k] : tail_product) out.add(w.prepend(head), c * k);
}

LinearCombination<Composition> ge1_words(const Composition& u, const Composition& v) {
  if (u.is_unit() || v.is_unit()) {
    LinearCombination<Composition> out;
    out.add(u.is_unit() ? v : u, Rational(1));
    return out;
  }
  return ge1_cache().get_or_compute({u, v}, [&] {
    LinearCombination<Composition> out;
    const int s1 = u.front();
    const int t1 = v.front();
    const Composition s_tail = u.tail();
    const Composition t_tail = v.tail();
    for (int i = 0; i < t1; ++i)
      add_prefixed(out, s1 + i, ge1_words(s_tail, t_tail.prepend(t1 - i)), Rational::binomial(s1 - 1 + i, i));
    for (int i = 0; i < s1; ++i)
      add_prefixed(out, t1 + i, ge1_words(s_tail.prepend(s1 - i), t_tail), Rational::binomial(t1 - 1 + i, i));
    return out;
  });
}

LinearCombination<Composition> le0_words(const Composition& u, const Composition& v) {
  if (u.is_unit() || v.is_unit()) {
    LinearCombination<Composition> out;
    out.add(u.is_unit() ? v : u, Rational(1));
    return out;
  }
  return le0_cache().get_or_compute({u, v}, [&] {
    LinearCombination<Composition> out;
    if (u.front() == 0) {
      add_prefixed(out, 0, le0_words(u.tail(), v), Rational(1));
      return out;
    }
    // [u1, u'] ⧢ v = J([u1+1, u'] ⧢ v) - [u1+1, u'] ⧢ J(v)
    const Composition raised = u.with_entry(0, u.front() + 1);
    for (const auto& [w, c] : le0_words(raised, v)) out.add(w.with_entry(0, w.front() - 1), c);
    for (const auto& [w, c] : le0_words(raised, v.with_entry(0, v.front() - 1))) out.add(w, -c);
    return out;
  });
}

}  // namespace

Element shuffle_words(const Composition& u, const Composition& v, Sector sector) {
  check_sign(u, sector);
  check_sign(v, sector);
  Element out(sector);
  const auto terms = sector == Sector::ge1 ? ge1_words(u, v) : le0_words(u, v);
  for (const auto& [w, c] : terms) out.add_term(w, c);
  return out;
}

namespace {

Element bilinear_product(const Element& x, const Element& y, Sector sector) {
  if (x.sector() != sector || y.sector() != sector)
    throw SpaceMismatchError("shuffle in " + std::string(sector_name(sector)) + " received operands from " +
                             std::string(space_name(x.space())) + " and " + std::string(space_name(y.space())));
  Element out(sector);
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) out.add(shuffle_words(u, v, sector), cu * cv);
  return out;
}

// All interleavings of a and b, counted with multiplicity.
void interleave(const BinaryWord& a, std::size_t i, const BinaryWord& b, std::size_t j, BinaryWord& prefix,
                LinearCombination<Composition>& out) {
  if (i == a.size() && j == b.size()) {
    out.add(decode_word(prefix), Rational(1));
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    interleave(a, i + 1, b, j, prefix, out);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    interleave(a, i, b, j + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Element shuffle_ge1(const Element& x, const Element& y) { return bilinear_product(x, y, Sector::ge1); }
Element shuffle_le0(const Element& x, const Element& y) { return bilinear_product(x, y, Sector::le0); }

Element shuffle(const Element& x, const Element& y) {
  x.require_same_space(y);
  return bilinear_product(x, y, x.sector());
}

Element word_shuffle_oracle(const Element& x, const Element& y) {
  if (x.sector() != Sector::ge1 || y.sector() != Sector::ge1)
    throw SpaceMismatchError("the word oracle is defined on ge1 only");
  Element out(Sector::ge1);
  for (const auto& [u, cu] : x) {
    for (const auto& [v, cv] : y) {
      LinearCombination<Composition> words;
      BinaryWord prefix;
      interleave(encode_word(u), 0, encode_word(v), 0, prefix, words);
      for (const auto& [w, c] : words) out.add_term(w, c * cu * cv);
    }
  }
  return out;
}

Tensor tensor_shuffle(const Tensor& a, const Tensor& b) {
  a.require_same_space(b);
  const Sector sector = a.sector();
  Tensor out(sector);
  for (const auto& [ab, c1] : a) {
    for (const auto& [cd, c2] : b) {
      Element left = shuffle_words(ab.first, cd.first, sector);
      Element right = shuffle_words(ab.second, cd.second, sector);
      out.add_product(left, right, c1 * c2);
    }
  }
  return out;
}

}  // namespace dualhopf
