#ifndef GARSIDE_ELEMENT_HPP
#define GARSIDE_ELEMENT_HPP

// Monoid elements as left-greedy normal forms (sequences of nonidentity
// simples). Equality is sequence equality; atom-length is the sum of the
// factor lengths. Right-side operations (tail atom, division from the right)
// go through the right-greedy normal form computed on demand from the same
// simple tables.

#include <string>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

struct Element {
  std::vector<int> nf;  // simple indices, left-greedy; empty = identity

  bool is_identity() const { return nf.empty(); }
  bool operator==(const Element& o) const { return nf == o.nf; }
  bool operator<(const Element& o) const { return nf < o.nf; }
};

struct ElementHash {
  size_t operator()(const Element& e) const {
    size_t h = 1469598103934665603ULL;
    for (int s : e.nf) h = hash_combine(h, static_cast<size_t>(s) + 1);
    return h;
  }
};

inline long long length(const GarsideStructure& st, const Element& e) {
  long long n = 0;
  for (int s : e.nf) n += st.lengths[s];
  return n;
}

// delta complement on the right of u: the simple c with u * c = delta
inline int delta_complement(const GarsideStructure& st, int u) {
  return st.left_complement(u, st.delta);
}
// delta complement on the left: c with c * u = delta
inline int delta_complement_left(const GarsideStructure& st, int u) {
  return st.right_complement(u, st.delta);
}

// Left-greedy normalization of an arbitrary simple sequence. The local rule
// moves the largest possible head of the right factor into the left factor:
// (u, v) -> (u * g, g \ v) with g = lgcd(v, u\delta).
inline void normalize_left(const GarsideStructure& st, std::vector<int>& seq) {
  seq.erase(std::remove(seq.begin(), seq.end(), st.identity), seq.end());
  if (seq.size() < 2) return;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      int u = seq[i], v = seq[i + 1];
      if (u == st.delta) continue;
      int g = st.left_gcd(v, delta_complement(st, u));
      if (g == st.identity) continue;
      int u2 = st.product(u, g);
      int v2 = st.left_complement(g, v);
      seq[i] = u2;
      seq[i + 1] = v2;
      changed = true;
    }
    if (changed)
      seq.erase(std::remove(seq.begin(), seq.end(), st.identity), seq.end());
  }
}

// Right-greedy normalization: (u, v) -> (u / g, g * v) with
// g = rgcd(u, delta/v), moving the largest possible tail of u into v.
inline void normalize_right(const GarsideStructure& st, std::vector<int>& seq) {
  seq.erase(std::remove(seq.begin(), seq.end(), st.identity), seq.end());
  if (seq.size() < 2) return;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = seq.size() - 1; i-- > 0;) {
      int u = seq[i], v = seq[i + 1];
      if (v == st.delta) continue;
      int g = st.right_gcd(u, delta_complement_left(st, v));
      if (g == st.identity) continue;
      seq[i] = st.right_complement(g, u);
      seq[i + 1] = st.product(g, v);
      changed = true;
    }
    if (changed)
      seq.erase(std::remove(seq.begin(), seq.end(), st.identity), seq.end());
  }
}

inline Element make_element(const GarsideStructure& st, std::vector<int> simples) {
  normalize_left(st, simples);
  return Element{std::move(simples)};
}

inline Element element_from_simple(const GarsideStructure& st, int s) {
  Element e;
  if (s != st.identity) e.nf.push_back(s);
  return e;
}

inline Element element_from_atom_word(const GarsideStructure& st, const Word& w) {
  std::vector<int> seq;
  seq.reserve(w.size());
  for (int a : w) {
    if (a < 0 || a >= st.num_atoms()) throw error("atom index out of range");
    seq.push_back(st.atom_simple[a]);
  }
  return make_element(st, std::move(seq));
}

inline Element multiply(const GarsideStructure& st, const Element& a, const Element& b) {
  std::vector<int> seq = a.nf;
  seq.insert(seq.end(), b.nf.begin(), b.nf.end());
  return make_element(st, std::move(seq));
}

inline Element multiply_simple_left(const GarsideStructure& st, int s, const Element& b) {
  std::vector<int> seq;
  seq.reserve(b.nf.size() + 1);
  if (s != st.identity) seq.push_back(s);
  seq.insert(seq.end(), b.nf.begin(), b.nf.end());
  return make_element(st, std::move(seq));
}

inline Word atom_word(const GarsideStructure& st, const Element& e) {
  Word w;
  for (int s : e.nf) w.insert(w.end(), st.simple_word[s].begin(), st.simple_word[s].end());
  return w;
}

// least atom left-dividing e; atoms dividing e are exactly those dividing the
// head of the left-greedy normal form
inline int alpha(const GarsideStructure& st, const Element& e) {
  if (e.is_identity()) throw error("alpha of the identity is undefined");
  return st.alpha_simple(e.nf.front());
}

inline bool atom_left_divides(const GarsideStructure& st, int a, const Element& e) {
  if (e.is_identity()) return false;
  return (st.left_atom_mask(e.nf.front()) >> a) & 1;
}

// e with one left atom removed: a \ e
inline Element divide_left_by_atom(const GarsideStructure& st, int a, const Element& e) {
  if (!atom_left_divides(st, a, e)) throw error("atom does not left-divide element");
  std::vector<int> seq = e.nf;
  seq[0] = st.left_complement(st.atom_simple[a], seq[0]);
  normalize_left(st, seq);
  return Element{std::move(seq)};
}

// u left-divides v? peels u's normal form off v factor by factor
inline bool left_divides_element(const GarsideStructure& st, const Element& u, const Element& v,
                                 Element* complement = nullptr) {
  Element cur = v;
  for (int s : u.nf) {
    // s left-divides cur iff s divides the head simple
    if (cur.is_identity()) return false;
    if (!st.left_divides(s, cur.nf.front())) {
      // the head is the maximal simple left-divisor, so failure here is final
      return false;
    }
    std::vector<int> seq = cur.nf;
    seq[0] = st.left_complement(s, seq[0]);
    normalize_left(st, seq);
    cur = Element{std::move(seq)};
  }
  if (complement) *complement = cur;
  return true;
}

// --- right-side operations ---------------------------------------------------

inline std::vector<int> right_normal_form(const GarsideStructure& st, const Element& e) {
  std::vector<int> seq = e.nf;
  normalize_right(st, seq);
  return seq;
}

// least atom right-dividing e
inline int tail_alpha(const GarsideStructure& st, const Element& e) {
  if (e.is_identity()) throw error("tail alpha of the identity is undefined");
  auto rnf = right_normal_form(st, e);
  return st.tail_alpha_simple(rnf.back());
}

inline bool atom_right_divides(const GarsideStructure& st, int a, const Element& e) {
  if (e.is_identity()) return false;
  auto rnf = right_normal_form(st, e);
  return (st.right_atom_mask(rnf.back()) >> a) & 1;
}

// e / a (requires a to right-divide e)
inline Element divide_right_by_atom(const GarsideStructure& st, int a, const Element& e) {
  auto rnf = right_normal_form(st, e);
  if (rnf.empty() || !((st.right_atom_mask(rnf.back()) >> a) & 1))
    throw error("atom does not right-divide element");
  rnf.back() = st.right_complement(st.atom_simple[a], rnf.back());
  normalize_left(st, rnf);
  return Element{std::move(rnf)};
}

// e / s for a simple s (requires s to right-divide e)
inline Element divide_right_by_simple(const GarsideStructure& st, int s, const Element& e) {
  if (s == st.identity) return e;
  Element cur = e;
  Word w = st.simple_word[s];
  for (size_t i = w.size(); i-- > 0;) cur = divide_right_by_atom(st, w[i], cur);
  return cur;
}

inline std::string element_str(const GarsideStructure& st, const Element& e) {
  if (e.is_identity()) return "1";
  std::string s;
  for (size_t i = 0; i < e.nf.size(); ++i) {
    if (i) s += "|";
    s += st.simple_str(e.nf[i]);
  }
  return s;
}

}  // namespace garside

#endif
