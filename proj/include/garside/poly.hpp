#ifndef GARSIDE_POLY_HPP
#define GARSIDE_POLY_HPP

// Dense univariate polynomials over a field, parameterized by a small field
// context so the same code serves Q and F_p. Coefficient index = power of t.

#include <map>
#include <sstream>
#include <vector>

#include "garside/numeric.hpp"

namespace garside {

struct QField {
  using E = Rat;
  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat from_int(const Int& n) const { return Rat(n); }
  Rat add(const Rat& a, const Rat& b) const { return a + b; }
  Rat sub(const Rat& a, const Rat& b) const { return a - b; }
  Rat mul(const Rat& a, const Rat& b) const { return a * b; }
  Rat div(const Rat& a, const Rat& b) const { return a / b; }
  Rat neg(const Rat& a) const { return -a; }
  bool is_zero(const Rat& a) const { return a == 0; }
  std::string str(const Rat& a) const { return a.str(); }
};

struct ZpField {
  long long p = 2;
  using E = long long;
  ZpField() = default;
  explicit ZpField(long long prime) : p(prime) {
    if (p < 2) throw error("ZpField: modulus must be at least 2");
  }
  long long norm(long long a) const {
    a %= p;
    if (a < 0) a += p;
    return a;
  }
  long long zero() const { return 0; }
  long long one() const { return 1; }
  long long from_int(const Int& n) const {
    Int r = n % p;
    if (r < 0) r += p;
    return static_cast<long long>(r);
  }
  long long add(long long a, long long b) const { return norm(a + b); }
  long long sub(long long a, long long b) const { return norm(a - b); }
  long long mul(long long a, long long b) const { return norm(a * b); }
  long long inv(long long a) const {
    a = norm(a);
    if (a == 0) throw error("ZpField: division by zero");
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return norm(t);
  }
  long long div(long long a, long long b) const { return mul(a, inv(b)); }
  long long neg(long long a) const { return norm(-a); }
  bool is_zero(long long a) const { return norm(a) == 0; }
  std::string str(long long a) const { return std::to_string(norm(a)); }
};

template <class K>
struct Pol {
  std::vector<typename K::E> c;  // c[i] is the coefficient of t^i
};

template <class K>
void pnormalize(const K& k, Pol<K>& f) {
  while (!f.c.empty() && k.is_zero(f.c.back())) f.c.pop_back();
}

template <class K>
bool pis_zero(const Pol<K>& f) {
  return f.c.empty();
}

template <class K>
int pdeg(const Pol<K>& f) {
  return static_cast<int>(f.c.size()) - 1;  // -1 for the zero polynomial
}

template <class K>
Pol<K> pzero(const K&) {
  return Pol<K>{};
}

template <class K>
Pol<K> pconst(const K& k, const typename K::E& a) {
  Pol<K> f;
  if (!k.is_zero(a)) f.c.push_back(a);
  return f;
}

template <class K>
Pol<K> pmonomial(const K& k, const typename K::E& a, int n) {
  Pol<K> f;
  if (k.is_zero(a)) return f;
  f.c.assign(n + 1, k.zero());
  f.c[n] = a;
  return f;
}

template <class K>
Pol<K> padd(const K& k, const Pol<K>& a, const Pol<K>& b) {
  Pol<K> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = k.add(r.c[i], b.c[i]);
  pnormalize(k, r);
  return r;
}

template <class K>
Pol<K> pneg(const K& k, const Pol<K>& a) {
  Pol<K> r = a;
  for (auto& x : r.c) x = k.neg(x);
  return r;
}

template <class K>
Pol<K> psub(const K& k, const Pol<K>& a, const Pol<K>& b) {
  return padd(k, a, pneg(k, b));
}

template <class K>
Pol<K> pmul(const K& k, const Pol<K>& a, const Pol<K>& b) {
  if (pis_zero(a) || pis_zero(b)) return Pol<K>{};
  Pol<K> r;
  r.c.assign(a.c.size() + b.c.size() - 1, k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (k.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
  }
  pnormalize(k, r);
  return r;
}

template <class K>
Pol<K> pscale(const K& k, const Pol<K>& a, const typename K::E& s) {
  if (k.is_zero(s)) return Pol<K>{};
  Pol<K> r = a;
  for (auto& x : r.c) x = k.mul(x, s);
  pnormalize(k, r);
  return r;
}

// Euclidean division: a = q*b + r with deg r < deg b.
template <class K>
std::pair<Pol<K>, Pol<K>> pdivmod(const K& k, Pol<K> a, const Pol<K>& b) {
  if (pis_zero(b)) throw error("polynomial division by zero");
  Pol<K> q;
  int db = pdeg(b);
  if (pdeg(a) >= db) q.c.assign(pdeg(a) - db + 1, k.zero());
  while (pdeg(a) >= db) {
    int sh = pdeg(a) - db;
    typename K::E f = k.div(a.c.back(), b.c.back());
    q.c[sh] = f;
    for (int i = 0; i <= db; ++i)
      a.c[i + sh] = k.sub(a.c[i + sh], k.mul(f, b.c[i]));
    pnormalize(k, a);
  }
  pnormalize(k, q);
  return {q, a};
}

template <class K>
bool pdivides(const K& k, const Pol<K>& d, const Pol<K>& a) {
  if (pis_zero(d)) return pis_zero(a);
  return pis_zero(pdivmod(k, a, d).second);
}

template <class K>
Pol<K> pmonic(const K& k, Pol<K> f) {
  if (pis_zero(f)) return f;
  auto lead = f.c.back();
  for (auto& x : f.c) x = k.div(x, lead);
  return f;
}

template <class K>
Pol<K> pgcd(const K& k, Pol<K> a, Pol<K> b) {
  while (!pis_zero(b)) {
    Pol<K> r = pdivmod(k, a, b).second;
    a = b;
    b = r;
  }
  return pmonic(k, a);
}

template <class K>
bool peq(const K& k, const Pol<K>& a, const Pol<K>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!k.is_zero(k.sub(a.c[i], b.c[i]))) return false;
  return true;
}

template <class K>
typename K::E peval(const K& k, const Pol<K>& f, const typename K::E& x) {
  typename K::E r = k.zero();
  for (size_t i = f.c.size(); i-- > 0;) r = k.add(k.mul(r, x), f.c[i]);
  return r;
}

// Lowest nonzero power of t; 0 for the zero polynomial.
template <class K>
int pvaluation(const K& k, const Pol<K>& f) {
  for (size_t i = 0; i < f.c.size(); ++i)
    if (!k.is_zero(f.c[i])) return static_cast<int>(i);
  return 0;
}

// Strip t^v: the Laurent ring makes t a unit, so invariant factors are
// reported without their power-of-t content.
template <class K>
Pol<K> pstrip_t(const K& k, const Pol<K>& f) {
  if (pis_zero(f)) return f;
  int v = pvaluation(k, f);
  Pol<K> r;
  r.c.assign(f.c.begin() + v, f.c.end());
  return r;
}

template <class K>
std::string pstr(const K& k, const Pol<K>& f, const std::string& var = "t") {
  if (pis_zero(f)) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.c.size(); i-- > 0;) {
    if (k.is_zero(f.c[i])) continue;
    std::string cs = k.str(f.c[i]);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// n-th cyclotomic polynomial over Z, by repeated exact division of t^n - 1.
inline std::vector<Int> cyclotomic_int(int n) {
  if (n < 1) throw error("cyclotomic: n must be positive");
  static std::map<int, std::vector<Int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // t^n - 1
  std::vector<Int> f(n + 1, Int(0));
  f[0] = -1;
  f[n] = 1;
  auto divide_exact = [](std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
      size_t sh = a.size() - b.size();
      Int c = a.back() / b.back();
      q[sh] = c;
      for (size_t i = 0; i < b.size(); ++i) a[i + sh] -= c * b[i];
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    a.swap(q);
  };
  for (int d = 1; d < n; ++d)
    if (n % d == 0) {
      auto phi_d = cyclotomic_int(d);
      divide_exact(f, phi_d);
    }
  cache[n] = f;
  return f;
}

template <class K>
Pol<K> cyclotomic(const K& k, int n) {
  auto zi = cyclotomic_int(n);
  Pol<K> f;
  f.c.reserve(zi.size());
  for (auto& a : zi) f.c.push_back(k.from_int(a));
  pnormalize(k, f);
  return f;
}

// t^n - 1
template <class K>
Pol<K> tn_minus_one(const K& k, int n) {
  Pol<K> f;
  f.c.assign(n + 1, k.zero());
  f.c[0] = k.neg(k.one());
  f.c[n] = k.one();
  return f;
}

}  // namespace garside

#endif
