#ifndef GARSIDE_SALVETTI_HPP
#define GARSIDE_SALVETTI_HPP

// Homological Salvetti complex of a dihedral Artin group: one 0-cell, two
// 1-cells, one 2-cell. Serves as an independent oracle for the order-complex
// pipeline on the same groups, and carries the explicit rank-2 computation
// with weights (2, 1).
//
// Chains here live in free right modules written with the coefficient on the
// left: composing differentials multiplies the lower differential's letters
// onto the left of the existing coefficient. That is the convention under
// which the alternating-prefix boundary squares to zero.

#include "garside/complex.hpp"
#include "garside/snf.hpp"

namespace garside {

struct SalvettiComplex {
  int m = 0;
  GarsideStructure st;  // the I2(m) monoid provides canonical word arithmetic
  Chain d_a, d_b;       // degree 1 -> 0, cells {} = [0-cell]
  Chain d_ab;           // degree 2 -> 1, cells {0} = [a], {1} = [b]
};

// alternating prefix word of length k starting with `first`
inline Element pi_word(const GarsideStructure& st, int first, int second, int k) {
  return element_from_atom_word(st, alternating_word(first, second, k));
}

inline SalvettiComplex dihedral_complex(int m) {
  if (m < 2) throw error("dihedral_complex: m must be at least 2");
  SalvettiComplex C;
  C.m = m;
  C.st = GarsideStructure::artin_dihedral(m);
  const auto& st = C.st;
  C.d_a = chain_term(Int(1), element_from_atom_word(st, {0}), Cell{});
  chain_add_inplace(C.d_a, chain_term(Int(-1), Element{}, Cell{}));
  C.d_b = chain_term(Int(1), element_from_atom_word(st, {1}), Cell{});
  chain_add_inplace(C.d_b, chain_term(Int(-1), Element{}, Cell{}));
  Chain d;
  for (int k = 0; k < m; ++k) {
    Int s = (k % 2 == 0) ? 1 : -1;
    chain_add_inplace(d, chain_term(s, pi_word(st, 0, 1, k), Cell{1}));
    chain_add_inplace(d, chain_term(-s, pi_word(st, 1, 0, k), Cell{0}));
  }
  C.d_ab = d;
  return C;
}

// d1(d2) with the right-module composition; must normalize to zero in the
// monoid ring.
inline Chain salvetti_dd(const SalvettiComplex& C) {
  const auto& st = C.st;
  Chain out;
  for (auto& t : C.d_ab.terms) {
    const Chain& d1 = (t.cell == Cell{0}) ? C.d_a : C.d_b;
    for (auto& u : d1.terms)
      chain_add_inplace(out, chain_term(t.coeff * u.coeff, multiply(st, u.g, t.g), Cell{}));
  }
  return out;
}

// Specialization by atom weights a -> t^wa, b -> t^wb into F[t] matrices.
// For odd m the two sides of the defining relation have different letter
// counts, so unequal weights are only well-defined for even m.
template <class K>
struct SalvettiMatrices {
  Mat<Pol<K>> d1;  // 1 x 2, columns [a], [b]
  Mat<Pol<K>> d2;  // 2 x 1
};

template <class K>
SalvettiMatrices<K> specialize_salvetti(const K& k, const SalvettiComplex& C, int wa, int wb) {
  if (wa != wb && C.m % 2 != 0)
    throw error("unequal weights need even m (letter counts are not invariant)");
  const auto& st = C.st;
  auto weight = [&](const Element& g) {
    Word w = atom_word(st, g);
    long long n = 0;
    for (int a : w) n += (a == 0 ? wa : wb);
    return static_cast<int>(n);
  };
  auto phi = [&](const Chain& c, const Cell& cell) {
    Pol<K> acc = pzero(k);
    for (auto& t : c.terms)
      if (t.cell == cell)
        acc = padd(k, acc, pmonomial(k, k.from_int(t.coeff), weight(t.g)));
    return acc;
  };
  SalvettiMatrices<K> M;
  M.d1 = Mat<Pol<K>>(1, 2, pzero(k));
  M.d1.at(0, 0) = phi(C.d_a, Cell{});
  M.d1.at(0, 1) = phi(C.d_b, Cell{});
  M.d2 = Mat<Pol<K>>(2, 1, pzero(k));
  M.d2.at(0, 0) = phi(C.d_ab, Cell{0});
  M.d2.at(1, 0) = phi(C.d_ab, Cell{1});
  return M;
}

// Integer matrices at t = e (e = 1: trivial coefficients, e = -1: sign).
inline std::pair<IMat, IMat> salvetti_at(const SalvettiComplex& C, int wa, int wb, int e) {
  QField k;
  auto M = specialize_salvetti(k, C, wa, wb);
  auto ev = [&](const Mat<Pol<QField>>& m) {
    IMat r(m.rows, m.cols, Int(0));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) {
        Rat v = peval(k, m.at(i, j), Rat(e));
        r.at(i, j) = boost::multiprecision::numerator(v);
        if (boost::multiprecision::denominator(v) != 1)
          throw error("non-integral evaluation");
      }
    return r;
  };
  return {ev(M.d1), ev(M.d2)};
}

}  // namespace garside

#endif
