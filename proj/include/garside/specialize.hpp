#ifndef GARSIDE_SPECIALIZE_HPP
#define GARSIDE_SPECIALIZE_HPP

// Turns a completed differential store into matrices over a coefficient
// ring. The three module structures: trivial (b -> 1), sign (b -> (-1)^|b|),
// and Laurent (b -> t^|b|; all atom lengths are nonnegative so entries are
// ordinary polynomials, and t stays invertible downstream).

#include "garside/complex.hpp"
#include "garside/snf.hpp"

namespace garside {

enum class CoeffKind { trivial, sign, laurent };

struct CoefficientSpec {
  CoeffKind kind = CoeffKind::trivial;
  long long p = 0;  // 0 = characteristic zero; else a prime
};

inline const char* coeff_kind_name(CoeffKind k) {
  switch (k) {
    case CoeffKind::trivial: return "trivial";
    case CoeffKind::sign: return "sign";
    default: return "laurent";
  }
}

struct IntComplex {
  std::vector<long long> cell_counts;  // per degree 0..top
  std::vector<IMat> d;                 // d[k]: counts[k-1] x counts[k], k >= 1; d[0] = 0 x counts[0]
};

template <class K>
struct LaurentComplex {
  K field;
  std::vector<long long> cell_counts;
  std::vector<Mat<Pol<K>>> d;
};

namespace detail {

inline void require_complete(const DifferentialStore& store, int top) {
  for (int k = 1; k <= top; ++k)
    if (!store.degree_complete(k))
      throw error("specialize: store incomplete at degree " + std::to_string(k));
}

}  // namespace detail

// The sign module needs atoms of order 2 in the reflection group; with
// permutation data this is checkable, otherwise it is trusted (the paper's
// groups all qualify).
inline void check_sign_applicable(const GarsideStructure& st) {
  if (!st.has_perms()) return;
  for (int a = 0; a < st.num_atoms(); ++a) {
    const Perm& p = st.perms[st.atom_simple[a]];
    if (perm_compose(p, p) != perm_identity(st.perm_degree))
      throw error("sign coefficients need order-2 atom images; atom " +
                  st.atom_names[a] + " fails");
  }
}

inline IntComplex specialize_int(const GarsideStructure& st, const DifferentialStore& store,
                                 CoeffKind kind, int top) {
  if (kind == CoeffKind::laurent) throw error("specialize_int: laurent needs a field");
  if (kind == CoeffKind::sign) check_sign_applicable(st);
  detail::require_complete(store, top);
  IntComplex C;
  for (int k = 0; k <= top; ++k)
    C.cell_counts.push_back(static_cast<long long>(store.cells[k].size()));
  C.d.push_back(IMat(0, static_cast<int>(store.cells[0].size()), Int(0)));
  for (int k = 1; k <= top; ++k) {
    IMat m(static_cast<int>(store.cells[k - 1].size()),
           static_cast<int>(store.cells[k].size()), Int(0));
    for (int j = 0; j < m.cols; ++j)
      for (auto& t : store.diff[k][j].terms) {
        int i = store.cell_index(k - 1, t.cell);
        Int phi = 1;
        if (kind == CoeffKind::sign && (length(st, t.g) & 1)) phi = -1;
        m.at(i, j) += t.coeff * phi;
      }
    C.d.push_back(std::move(m));
  }
  // consecutive matrices must compose to zero
  for (int k = 1; k + 1 <= top; ++k) {
    IMat z = mat_mul(C.d[k], C.d[k + 1]);
    for (auto& x : z.a)
      if (x != 0) throw error("specialized complex fails d o d = 0 at degree " + std::to_string(k + 1));
  }
  return C;
}

template <class K>
LaurentComplex<K> specialize_laurent(const K& field, const GarsideStructure& st,
                                     const DifferentialStore& store, int top) {
  detail::require_complete(store, top);
  LaurentComplex<K> C{field};
  for (int k = 0; k <= top; ++k)
    C.cell_counts.push_back(static_cast<long long>(store.cells[k].size()));
  C.d.push_back(Mat<Pol<K>>(0, static_cast<int>(store.cells[0].size()), pzero(field)));
  for (int k = 1; k <= top; ++k) {
    Mat<Pol<K>> m(static_cast<int>(store.cells[k - 1].size()),
                  static_cast<int>(store.cells[k].size()), pzero(field));
    for (int j = 0; j < m.cols; ++j)
      for (auto& t : store.diff[k][j].terms) {
        int i = store.cell_index(k - 1, t.cell);
        int w = static_cast<int>(length(st, t.g));
        m.at(i, j) = padd(field, m.at(i, j), pmonomial(field, field.from_int(t.coeff), w));
      }
    C.d.push_back(std::move(m));
  }
  for (int k = 1; k + 1 <= top; ++k) {
    auto z = mat_mul_poly(field, C.d[k], C.d[k + 1]);
    for (auto& x : z.a)
      if (!pis_zero(x))
        throw error("laurent complex fails d o d = 0 at degree " + std::to_string(k + 1));
  }
  return C;
}

// Evaluating the Laurent matrices at t = 1 (resp. t = -1) must reproduce the
// trivial (resp. sign) matrices entry by entry.
inline bool laurent_matches_at(const LaurentComplex<QField>& L, const IntComplex& Zc, int e) {
  QField k;
  if (L.d.size() != Zc.d.size()) return false;
  for (size_t i = 1; i < L.d.size(); ++i) {
    if (L.d[i].rows != Zc.d[i].rows || L.d[i].cols != Zc.d[i].cols) return false;
    for (int r = 0; r < L.d[i].rows; ++r)
      for (int c = 0; c < L.d[i].cols; ++c)
        if (peval(k, L.d[i].at(r, c), Rat(e)) != Rat(Zc.d[i].at(r, c))) return false;
  }
  return true;
}

inline long long chain_terms_total(const DifferentialStore& store, int top) {
  long long n = 0;
  for (int k = 1; k <= top; ++k)
    for (auto& c : store.diff[k]) n += static_cast<long long>(c.terms.size());
  return n;
}

inline long long nnz_int(const IntComplex& C) {
  long long n = 0;
  for (auto& m : C.d)
    for (auto& x : m.a)
      if (x != 0) ++n;
  return n;
}

}  // namespace garside

#endif
