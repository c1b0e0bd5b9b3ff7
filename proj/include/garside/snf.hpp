#ifndef GARSIDE_SNF_HPP
#define GARSIDE_SNF_HPP

// Smith normal form over Z (exact, arbitrary precision) and over F[t] for a
// field context K, plus the kernel-lattice homology computation built on top.

#include <algorithm>
#include <optional>
#include <vector>

#include "garside/matrix.hpp"
#include "garside/poly.hpp"

namespace garside {

struct SmithIntResult {
  std::vector<Int> factors;  // nonzero invariant factors, divisibility chain
  int rank = 0;
  std::optional<IMat> U, V;  // when requested: U * A * V = diag(factors)
};

namespace detail {

// Pivot with minimal nonzero magnitude in the trailing submatrix.
inline bool find_pivot_int(const IMat& m, int t, int& pr, int& pc) {
  bool found = false;
  Int best;
  for (int r = t; r < m.rows; ++r)
    for (int c = t; c < m.cols; ++c) {
      const Int& x = m.at(r, c);
      if (x == 0) continue;
      Int ax = abs_int(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pr = r;
        pc = c;
      }
    }
  return found;
}

inline void row_axpy(IMat& m, int dst, int src, const Int& f, int from_col = 0) {
  if (f == 0) return;
  for (int c = from_col; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
}

inline void col_axpy(IMat& m, int dst, int src, const Int& f, int from_row = 0) {
  if (f == 0) return;
  for (int r = from_row; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
}

}  // namespace detail

inline SmithIntResult snf_integers(IMat m, bool want_transforms = false) {
  SmithIntResult res;
  IMat U, V;
  if (want_transforms) {
    U = identity_mat(m.rows);
    V = identity_mat(m.cols);
  }
  auto do_row = [&](int dst, int src, const Int& f) {
    detail::row_axpy(m, dst, src, f);
    if (want_transforms) detail::row_axpy(U, dst, src, f);
  };
  auto do_col = [&](int dst, int src, const Int& f) {
    detail::col_axpy(m, dst, src, f);
    if (want_transforms) detail::col_axpy(V, dst, src, f);
  };
  auto swap_r = [&](int i, int j) {
    m.swap_rows(i, j);
    if (want_transforms) U.swap_rows(i, j);
  };
  auto swap_c = [&](int i, int j) {
    m.swap_cols(i, j);
    if (want_transforms) V.swap_cols(i, j);
  };

  int n = std::min(m.rows, m.cols);
  int t = 0;
  for (; t < n; ++t) {
    int pr, pc;
    if (!detail::find_pivot_int(m, t, pr, pc)) break;
    swap_r(t, pr);
    swap_c(t, pc);
    for (;;) {
      bool clean = true;
      for (int r = t + 1; r < m.rows; ++r) {
        if (m.at(r, t) == 0) continue;
        Int q = m.at(r, t) / m.at(t, t);
        do_row(r, t, -q);
        if (m.at(r, t) != 0) {  // remainder becomes the smaller pivot
          swap_r(t, r);
          clean = false;
        }
      }
      for (int c = t + 1; c < m.cols; ++c) {
        if (m.at(t, c) == 0) continue;
        Int q = m.at(t, c) / m.at(t, t);
        do_col(c, t, -q);
        if (m.at(t, c) != 0) {
          swap_c(t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot now divides its cleared row/column. Enforce divisibility of the
      // rest of the submatrix before moving on.
      bool fixed = false;
      for (int r = t + 1; r < m.rows && !fixed; ++r)
        for (int c = t + 1; c < m.cols && !fixed; ++c)
          if (m.at(r, c) % m.at(t, t) != 0) {
            do_row(t, r, Int(1));
            fixed = true;
          }
      if (!fixed) break;
    }
  }
  // Diagonal sign normalization.
  for (int i = 0; i < t; ++i)
    if (m.at(i, i) < 0) {
      for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
      if (want_transforms)
        for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    }
  res.rank = t;
  res.factors.reserve(t);
  for (int i = 0; i < t; ++i) res.factors.push_back(m.at(i, i));
  if (want_transforms) {
    res.U = std::move(U);
    res.V = std::move(V);
  }
  return res;
}

// Kernel lattice basis of A: columns of the returned (cols x k) matrix span
// ker(A) as a direct summand of Z^cols.
inline IMat kernel_basis_int(const IMat& A) {
  auto s = snf_integers(A, true);
  int k = A.cols - s.rank;
  IMat K(A.cols, k, Int(0));
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < A.cols; ++r) K.at(r, j) = s.V->at(r, s.rank + j);
  return K;
}

// Solve K * X = B exactly over Z; throws if any column has no integral
// solution. Used with K a kernel-lattice basis, where solvability is
// guaranteed by d∘d = 0.
inline IMat solve_int(const IMat& K, const IMat& B) {
  if (K.rows != B.rows) throw error("solve_int: shape mismatch");
  auto s = snf_integers(K, true);
  IMat UB = mat_mul(*s.U, B);
  IMat Y(K.cols, B.cols, Int(0));
  for (int j = 0; j < B.cols; ++j) {
    for (int i = 0; i < s.rank; ++i) {
      if (UB.at(i, j) % s.factors[i] != 0)
        throw error("solve_int: no integral solution");
      Y.at(i, j) = UB.at(i, j) / s.factors[i];
    }
    for (int i = s.rank; i < K.rows; ++i)
      if (UB.at(i, j) != 0) throw error("solve_int: inconsistent system");
  }
  return mat_mul(*s.V, Y);
}

struct IntHomology {
  int free_rank = 0;
  std::vector<Int> torsion;  // entries > 1, divisibility order
};

// H = ker(d_low) / im(d_high), where d_low has the n-cells as columns and
// d_high has them as rows.
inline IntHomology homology_int(const IMat& d_low, const IMat& d_high) {
  if (d_low.cols != d_high.rows) throw error("homology_int: degree mismatch");
  IntHomology h;
  IMat K = kernel_basis_int(d_low);
  if (K.cols == 0) return h;
  if (d_high.cols == 0) {
    h.free_rank = K.cols;
    return h;
  }
  IMat X = solve_int(K, d_high);
  auto s = snf_integers(X);
  h.free_rank = K.cols - s.rank;
  for (auto& f : s.factors)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

// ---------------------------------------------------------------------------
// The same machinery over F[t] for a field context K.

template <class K>
struct SmithPolyResult {
  std::vector<Pol<K>> factors;  // monic, divisibility chain
  int rank = 0;
  std::optional<Mat<Pol<K>>> U, V;
};

namespace detail {

template <class K>
bool find_pivot_poly(const K& k, const Mat<Pol<K>>& m, int t, int& pr, int& pc) {
  bool found = false;
  int best = 0;
  for (int r = t; r < m.rows; ++r)
    for (int c = t; c < m.cols; ++c) {
      const auto& x = m.at(r, c);
      if (pis_zero(x)) continue;
      int d = pdeg(x);
      if (!found || d < best) {
        found = true;
        best = d;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace detail

template <class K>
SmithPolyResult<K> snf_poly(const K& k, Mat<Pol<K>> m, bool want_transforms = false) {
  SmithPolyResult<K> res;
  Mat<Pol<K>> U, V;
  auto ident = [&](int n) {
    Mat<Pol<K>> I(n, n, pzero(k));
    for (int i = 0; i < n; ++i) I.at(i, i) = pconst(k, k.one());
    return I;
  };
  if (want_transforms) {
    U = ident(m.rows);
    V = ident(m.cols);
  }
  auto row_axpy = [&](Mat<Pol<K>>& mm, int dst, int src, const Pol<K>& f) {
    if (pis_zero(f)) return;
    for (int c = 0; c < mm.cols; ++c)
      mm.at(dst, c) = padd(k, mm.at(dst, c), pmul(k, f, mm.at(src, c)));
  };
  auto col_axpy = [&](Mat<Pol<K>>& mm, int dst, int src, const Pol<K>& f) {
    if (pis_zero(f)) return;
    for (int r = 0; r < mm.rows; ++r)
      mm.at(r, dst) = padd(k, mm.at(r, dst), pmul(k, f, mm.at(r, src)));
  };
  auto do_row = [&](int dst, int src, const Pol<K>& f) {
    row_axpy(m, dst, src, f);
    if (want_transforms) row_axpy(U, dst, src, f);
  };
  auto do_col = [&](int dst, int src, const Pol<K>& f) {
    col_axpy(m, dst, src, f);
    if (want_transforms) col_axpy(V, dst, src, f);
  };
  auto swap_r = [&](int i, int j) {
    m.swap_rows(i, j);
    if (want_transforms) U.swap_rows(i, j);
  };
  auto swap_c = [&](int i, int j) {
    m.swap_cols(i, j);
    if (want_transforms) V.swap_cols(i, j);
  };

  int n = std::min(m.rows, m.cols);
  int t = 0;
  for (; t < n; ++t) {
    int pr, pc;
    if (!detail::find_pivot_poly(k, m, t, pr, pc)) break;
    swap_r(t, pr);
    swap_c(t, pc);
    for (;;) {
      bool clean = true;
      for (int r = t + 1; r < m.rows; ++r) {
        if (pis_zero(m.at(r, t))) continue;
        auto [q, rem] = pdivmod(k, m.at(r, t), m.at(t, t));
        do_row(r, t, pneg(k, q));
        if (!pis_zero(m.at(r, t))) {
          swap_r(t, r);
          clean = false;
        }
      }
      for (int c = t + 1; c < m.cols; ++c) {
        if (pis_zero(m.at(t, c))) continue;
        auto [q, rem] = pdivmod(k, m.at(t, c), m.at(t, t));
        do_col(c, t, pneg(k, q));
        if (!pis_zero(m.at(t, c))) {
          swap_c(t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      bool fixed = false;
      for (int r = t + 1; r < m.rows && !fixed; ++r)
        for (int c = t + 1; c < m.cols && !fixed; ++c)
          if (!pdivides(k, m.at(t, t), m.at(r, c))) {
            do_row(t, r, pconst(k, k.one()));
            fixed = true;
          }
      if (!fixed) break;
    }
  }
  // Monic normalization of the diagonal.
  for (int i = 0; i < t; ++i) {
    auto lead = m.at(i, i).c.back();
    if (!k.is_zero(k.sub(lead, k.one()))) {
      auto inv_lead = k.div(k.one(), lead);
      for (int c = 0; c < m.cols; ++c) m.at(i, c) = pscale(k, m.at(i, c), inv_lead);
      if (want_transforms)
        for (int c = 0; c < U.cols; ++c) U.at(i, c) = pscale(k, U.at(i, c), inv_lead);
    }
  }
  res.rank = t;
  for (int i = 0; i < t; ++i) res.factors.push_back(m.at(i, i));
  if (want_transforms) {
    res.U = std::move(U);
    res.V = std::move(V);
  }
  return res;
}

template <class K>
Mat<Pol<K>> kernel_basis_poly(const K& k, const Mat<Pol<K>>& A) {
  auto s = snf_poly(k, A, true);
  int kk = A.cols - s.rank;
  Mat<Pol<K>> Kb(A.cols, kk, pzero(k));
  for (int j = 0; j < kk; ++j)
    for (int r = 0; r < A.cols; ++r) Kb.at(r, j) = s.V->at(r, s.rank + j);
  return Kb;
}

template <class K>
Mat<Pol<K>> mat_mul_poly(const K& k, const Mat<Pol<K>>& x, const Mat<Pol<K>>& y) {
  if (x.cols != y.rows) throw error("mat_mul_poly: shape mismatch");
  Mat<Pol<K>> r(x.rows, y.cols, pzero(k));
  for (int i = 0; i < x.rows; ++i)
    for (int t = 0; t < x.cols; ++t) {
      if (pis_zero(x.at(i, t))) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = padd(k, r.at(i, j), pmul(k, x.at(i, t), y.at(t, j)));
    }
  return r;
}

template <class K>
Mat<Pol<K>> solve_poly(const K& k, const Mat<Pol<K>>& Kb, const Mat<Pol<K>>& B) {
  if (Kb.rows != B.rows) throw error("solve_poly: shape mismatch");
  auto s = snf_poly(k, Kb, true);
  auto UB = mat_mul_poly(k, *s.U, B);
  Mat<Pol<K>> Y(Kb.cols, B.cols, pzero(k));
  for (int j = 0; j < B.cols; ++j) {
    for (int i = 0; i < s.rank; ++i) {
      auto [q, rem] = pdivmod(k, UB.at(i, j), s.factors[i]);
      if (!pis_zero(rem)) throw error("solve_poly: no polynomial solution");
      Y.at(i, j) = q;
    }
    for (int i = s.rank; i < Kb.rows; ++i)
      if (!pis_zero(UB.at(i, j))) throw error("solve_poly: inconsistent system");
  }
  return mat_mul_poly(k, *s.V, Y);
}

template <class K>
struct PolyHomology {
  int free_rank = 0;                  // free rank over F[t]
  std::vector<Pol<K>> invariants;     // nonunit monic invariant factors
};

// Laurent-aware variant: t is a unit in F[t,t^-1], so powers of t are
// stripped from the invariant factors and factors reducing to units vanish.
template <class K>
PolyHomology<K> homology_poly(const K& k, const Mat<Pol<K>>& d_low,
                              const Mat<Pol<K>>& d_high, bool laurent = true) {
  if (d_low.cols != d_high.rows) throw error("homology_poly: degree mismatch");
  PolyHomology<K> h;
  auto Kb = kernel_basis_poly(k, d_low);
  if (Kb.cols == 0) return h;
  if (d_high.cols == 0) {
    h.free_rank = Kb.cols;
    return h;
  }
  auto X = solve_poly(k, Kb, d_high);
  auto s = snf_poly(k, X);
  h.free_rank = Kb.cols - s.rank;
  for (auto& f : s.factors) {
    Pol<K> g = laurent ? pmonic(k, pstrip_t(k, f)) : f;
    if (pdeg(g) >= 1) h.invariants.push_back(g);
  }
  return h;
}

// Rank of an integer matrix over F_p (Gaussian elimination).
inline int rank_mod_p(const IMat& m, long long p) {
  ZpField f(p);
  Mat<long long> a(m.rows, m.cols, 0);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) a.at(r, c) = f.from_int(m.at(r, c));
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (a.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    a.swap_rows(rank, piv);
    long long inv = f.inv(a.at(rank, c));
    for (int cc = c; cc < m.cols; ++cc) a.at(rank, cc) = f.mul(a.at(rank, cc), inv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || a.at(r, c) == 0) continue;
      long long fac = a.at(r, c);
      for (int cc = c; cc < m.cols; ++cc)
        a.at(r, cc) = f.sub(a.at(r, cc), f.mul(fac, a.at(rank, cc)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace garside

#endif
