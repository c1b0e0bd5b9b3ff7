#ifndef GARSIDE_HOMOLOGY_HPP
#define GARSIDE_HOMOLOGY_HPP

// Homology of specialized complexes, invariant-factor reporting, cyclotomic
// decomposition, Poincare polynomials and the mod-p torsion scan.

#include <sstream>

#include "garside/specialize.hpp"

namespace garside {

struct IntegerRow {
  int degree = 0;
  int free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const IntegerRow& o) const {
    return degree == o.degree && free_rank == o.free_rank && torsion == o.torsion;
  }
  std::string str() const {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : torsion) {
      if (!first) os << " x ";
      os << "Z" << t.str();
      first = false;
    }
    if (free_rank > 0) {
      if (!first) os << " x ";
      os << "Z";
      if (free_rank > 1) os << "^" << free_rank;
    }
    return os.str();
  }
};

template <class K>
struct LaurentRow {
  int degree = 0;
  int free_rank = 0;               // rank over F[t, t^-1]
  std::vector<Pol<K>> invariants;  // monic, t-stripped, divisibility chain

  long long dim() const {  // F-dimension, defined when there is no free part
    long long d = 0;
    for (auto& f : invariants) d += pdeg(f);
    return d;
  }
};

inline std::vector<IntegerRow> homology_integer(const IntComplex& C) {
  std::vector<IntegerRow> rows;
  int top = static_cast<int>(C.d.size()) - 1;
  for (int k = 0; k <= top; ++k) {
    const IMat& dlow = C.d[k];
    IMat dhigh =
        k + 1 <= top ? C.d[k + 1] : IMat(static_cast<int>(C.cell_counts[k]), 0, Int(0));
    auto h = homology_int(dlow, dhigh);
    rows.push_back({k, h.free_rank, h.torsion});
  }
  return rows;
}

template <class K>
std::vector<LaurentRow<K>> homology_laurent(const LaurentComplex<K>& C) {
  const K& k = C.field;
  std::vector<LaurentRow<K>> rows;
  int top = static_cast<int>(C.d.size()) - 1;
  for (int deg = 0; deg <= top; ++deg) {
    const auto& dlow = C.d[deg];
    Mat<Pol<K>> dhigh = deg + 1 <= top
                            ? C.d[deg + 1]
                            : Mat<Pol<K>>(static_cast<int>(C.cell_counts[deg]), 0, pzero(k));
    auto h = homology_poly(k, dlow, dhigh, /*laurent=*/true);
    LaurentRow<K> row;
    row.degree = deg;
    row.free_rank = h.free_rank;
    row.invariants = h.invariants;
    rows.push_back(std::move(row));
  }
  return rows;
}

// --- cyclotomic reporting ----------------------------------------------------

template <class K>
struct CyclotomicReport {
  std::vector<std::pair<int, int>> phis;  // (n, multiplicity), ascending n
  Pol<K> remainder;                       // what greedy division left over
  bool clean() const { return pdeg(remainder) <= 0; }
};

template <class K>
CyclotomicReport<K> cyclotomic_report(const K& k, Pol<K> f, int n_max = 100) {
  CyclotomicReport<K> rep;
  if (pis_zero(f)) {
    rep.remainder = f;
    return rep;
  }
  f = pmonic(k, pstrip_t(k, f));
  for (int n = 1; n <= n_max && pdeg(f) > 0; ++n) {
    auto phi = cyclotomic(k, n);
    if (pdeg(phi) > pdeg(f)) continue;
    int count = 0;
    for (;;) {
      auto [q, r] = pdivmod(k, f, phi);
      if (!pis_zero(r)) break;
      f = q;
      ++count;
    }
    if (count) rep.phis.emplace_back(n, count);
  }
  rep.remainder = f;
  return rep;
}

template <class K>
std::string laurent_row_str(const K& k, const LaurentRow<K>& row, int n_max = 100) {
  if (row.free_rank == 0 && row.invariants.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  if (row.free_rank) {
    os << "free^" << row.free_rank;
    first = false;
  }
  for (auto& f : row.invariants) {
    if (!first) os << " + ";
    first = false;
    auto rep = cyclotomic_report(k, f, n_max);
    if (rep.clean() && !rep.phis.empty()) {
      bool inner = true;
      for (auto& [n, m] : rep.phis) {
        if (!inner) os << "*";
        inner = false;
        os << "Phi" << n;
        if (m > 1) os << "^" << m;
      }
    } else {
      os << "(" << pstr(k, f) << ")";
    }
  }
  return os.str();
}

// Canonical invariant-factor chain of a direct sum of cyclic modules
// R/(P_1) + ... + R/(P_r): feed diag(P_i) to the Smith machinery.
template <class K>
std::vector<Pol<K>> invariant_chain_of_sum(const K& k, const std::vector<Pol<K>>& summands) {
  int n = static_cast<int>(summands.size());
  Mat<Pol<K>> m(n, n, pzero(k));
  for (int i = 0; i < n; ++i) m.at(i, i) = summands[i];
  auto s = snf_poly(k, m);
  std::vector<Pol<K>> out;
  for (auto& f : s.factors) {
    auto g = pmonic(k, pstrip_t(k, f));
    if (pdeg(g) >= 1) out.push_back(g);
  }
  return out;
}

template <class K>
bool laurent_rows_equal(const K& k, const LaurentRow<K>& a, const LaurentRow<K>& b) {
  if (a.free_rank != b.free_rank) return false;
  if (a.invariants.size() != b.invariants.size()) return false;
  for (size_t i = 0; i < a.invariants.size(); ++i)
    if (!peq(k, a.invariants[i], b.invariants[i])) return false;
  return true;
}

// --- Poincare polynomial -----------------------------------------------------

// coefficient of x^n = total degree of the invariant factors of H_n; only
// defined when no free summands occur.
inline std::vector<long long> poincare_polynomial(const std::vector<LaurentRow<QField>>& rows) {
  std::vector<long long> coeffs;
  for (auto& r : rows) {
    if (r.free_rank != 0)
      throw error("Poincare polynomial undefined: free summand in degree " +
                  std::to_string(r.degree));
    coeffs.push_back(r.dim());
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

inline std::string poincare_str(const std::vector<long long>& c) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i];
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

// --- mod-p torsion scan -------------------------------------------------------

struct TorsionFlag {
  long long p = 0;
  int degree = 0;
  long long dim_rational = 0;
  long long dim_modp = 0;
};

// Dimensions may only grow mod p; strict growth flags p-torsion in the
// integral homology of the fiber.
inline std::vector<TorsionFlag> torsion_scan(const std::vector<LaurentRow<QField>>& rational,
                                             const std::vector<std::pair<long long, std::vector<LaurentRow<ZpField>>>>& modp) {
  std::vector<TorsionFlag> flags;
  for (auto& [p, rows] : modp) {
    for (size_t k = 0; k < rows.size() && k < rational.size(); ++k) {
      if (rational[k].free_rank != 0 || rows[k].free_rank != 0)
        throw error("torsion scan with free summands is not meaningful");
      long long dq = rational[k].dim(), dp = rows[k].dim();
      if (dp < dq)
        throw error("mod-" + std::to_string(p) + " dimension dropped below rational in degree " +
                    std::to_string(k));
      if (dp > dq)
        flags.push_back({p, static_cast<int>(k), dq, dp});
    }
  }
  return flags;
}

// --- Euler identity -----------------------------------------------------------

inline bool euler_identity_holds(const std::vector<long long>& cell_counts,
                                 const std::vector<long long>& field_dims) {
  long long lhs = 0, rhs = 0;
  int sign = 1;
  for (auto n : cell_counts) {
    lhs += sign * n;
    sign = -sign;
  }
  sign = 1;
  for (auto d : field_dims) {
    rhs += sign * d;
    sign = -sign;
  }
  return lhs == rhs;
}

}  // namespace garside

#endif
