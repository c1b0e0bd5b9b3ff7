#ifndef GARSIDE_COMPLEX_HPP
#define GARSIDE_COMPLEX_HPP

// The order complex of a Garside structure: cells are strictly increasing
// atom tuples whose suffix lcms are governed by the least dividing atom, and
// the differential is defined by a recursion through a contracting homotopy.
//
// Conventions are fixed by two requirements: d1[a] = a[0] - [0] with the
// monoid acting on the left, and the degree-2 formulas of the rank-2
// structures must come out exactly as published. That pins the homotopy to
// peel least atoms from the right of the coefficient, cells to use left lcms
// of suffixes, and the cell condition to read: the least atom right-dividing
// the left lcm of each suffix is the suffix head.

#include <array>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#include "garside/chain.hpp"

namespace garside {

// left lcm of the atoms of a cell (the identity for the empty cell)
inline int cell_lambda(const GarsideStructure& st, const Cell& c) {
  int l = st.identity;
  for (int a : c) l = st.left_lcm(l, st.atom_simple[a]);
  return l;
}

inline bool is_cell(const GarsideStructure& st, const Cell& c) {
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] >= c[i + 1]) return false;
  for (size_t i = 0; i < c.size(); ++i) {
    int l = st.identity;
    for (size_t j = i; j < c.size(); ++j) l = st.left_lcm(l, st.atom_simple[c[j]]);
    if (st.tail_alpha_simple(l) != c[i]) return false;
  }
  return true;
}

inline std::vector<Cell> enumerate_cells(const GarsideStructure& st, int degree,
                                         const std::vector<Cell>* lower = nullptr) {
  if (degree < 0) throw error("cell degree must be nonnegative");
  if (degree == 0) return {Cell{}};
  if (degree == 1) {
    std::vector<Cell> out;
    for (int a = 0; a < st.num_atoms(); ++a) out.push_back(Cell{a});
    return out;
  }
  std::vector<Cell> prev =
      lower ? *lower : enumerate_cells(st, degree - 1);
  std::vector<Cell> out;
  for (int a = 0; a < st.num_atoms(); ++a)
    for (const auto& c : prev) {
      if (c.front() <= a) continue;
      int l = st.left_lcm(st.atom_simple[a], cell_lambda(st, c));
      if (st.tail_alpha_simple(l) != a) continue;
      Cell nc;
      nc.reserve(c.size() + 1);
      nc.push_back(a);
      nc.insert(nc.end(), c.begin(), c.end());
      out.push_back(std::move(nc));
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline Int euler_characteristic(const std::vector<long long>& cell_counts) {
  Int chi = 0;
  int sign = 1;
  for (long long n : cell_counts) {
    chi += sign * Int(n);
    sign = -sign;
  }
  return chi;
}

// Greedy chain: peels the least left-dividing atom; satisfies
// d1 Gamma(g) = g[0] - [0].
inline Chain greedy_chain(const GarsideStructure& st, const Element& g) {
  Chain out;
  Element prefix;  // identity
  Element cur = g;
  while (!cur.is_identity()) {
    int a = alpha(st, cur);
    out.terms.push_back({Int(1), prefix, Cell{a}});
    prefix = multiply(st, prefix, element_from_simple(st, st.atom_simple[a]));
    cur = divide_left_by_atom(st, a, cur);
  }
  chain_normalize(out);
  return out;
}

// Tail chain: the degree-0 homotopy, peeling least right-dividing atoms.
inline Chain tail_chain(const GarsideStructure& st, const Element& g) {
  Chain out;
  Element cur = g;
  while (!cur.is_identity()) {
    int c = tail_alpha(st, cur);
    Element rest = divide_right_by_atom(st, c, cur);
    out.terms.push_back({Int(1), rest, Cell{c}});
    cur = std::move(rest);
  }
  chain_normalize(out);
  return out;
}

struct DifferentialStore {
  std::vector<std::vector<Cell>> cells;  // cells[k]
  std::vector<std::unordered_map<Cell, int, CellHash>> index;
  std::vector<std::vector<Chain>> diff;  // diff[k][i] = d(cells[k][i]), k >= 1
  std::vector<char> complete;            // degree k fully stored?
  std::vector<std::string> provenance;   // "computed" or "imported"

  void ensure_degree_slot(size_t k) {
    if (cells.size() <= k) {
      cells.resize(k + 1);
      index.resize(k + 1);
      diff.resize(k + 1);
      complete.resize(k + 1, 0);
      provenance.resize(k + 1);
    }
  }
  bool degree_complete(int k) const {
    if (k <= 0) return true;
    return k < static_cast<int>(complete.size()) && complete[k];
  }
  int cell_index(int k, const Cell& c) const {
    auto it = index[k].find(c);
    if (it == index[k].end()) throw error("not a cell of degree " + std::to_string(k));
    return it->second;
  }
};

inline void ensure_cells(const GarsideStructure& st, DifferentialStore& store, int degree) {
  store.ensure_degree_slot(degree);
  for (int k = 0; k <= degree; ++k) {
    if (!store.cells[k].empty() || (k > 0 && store.index[k].size())) continue;
    store.cells[k] =
        k == 0 ? enumerate_cells(st, 0) : enumerate_cells(st, k, &store.cells[k - 1]);
    for (int i = 0; i < static_cast<int>(store.cells[k].size()); ++i)
      store.index[k][store.cells[k][i]] = i;
  }
}

// Highest degree with cells (cell degrees are bounded by the atom count).
inline int max_cell_degree(const GarsideStructure& st, DifferentialStore& store) {
  int k = 1;
  ensure_cells(st, store, 1);
  while (true) {
    ensure_cells(st, store, k + 1);
    if (store.cells[k + 1].empty()) return k;
    ++k;
  }
}

// Concurrent idempotent memo for homotopy values, sharded. Values are pure
// functions of the key, so double insertion is harmless.
class HomotopyMemo {
 public:
  struct Key {
    Element g;
    Cell a;
    bool operator==(const Key& o) const { return g == o.g && a == o.a; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      return hash_combine(ElementHash{}(k.g), CellHash{}(k.a));
    }
  };

  std::optional<Chain> lookup(const Key& k) const {
    auto& sh = shard(k);
    std::shared_lock lock(sh.mu);
    auto it = sh.map.find(k);
    if (it == sh.map.end()) return std::nullopt;
    return it->second;
  }
  void insert(const Key& k, const Chain& v) {
    auto& sh = shard(k);
    std::unique_lock lock(sh.mu);
    sh.map.emplace(k, v);
  }
  void clear() {
    for (auto& sh : shards_) {
      std::unique_lock lock(sh.mu);
      sh.map.clear();
    }
  }

 private:
  struct Shard {
    mutable std::shared_mutex mu;
    std::unordered_map<Key, Chain, KeyHash> map;
  };
  static constexpr size_t kShards = 64;
  mutable std::array<Shard, kShards> shards_;
  Shard& shard(const Key& k) const { return shards_[KeyHash{}(k) % kShards]; }
};

namespace detail {

struct SContext {
  const GarsideStructure& st;
  const DifferentialStore& store;
  HomotopyMemo* memo;  // may be null
};

inline Chain s_flag(const SContext& ctx, const Element& g, const Cell& A);

inline Chain s_chain(const SContext& ctx, const Chain& x) {
  Chain out;
  for (auto& t : x.terms)
    chain_add_inplace(out, chain_scale(s_flag(ctx, t.g, t.cell), t.coeff));
  return out;
}

inline thread_local std::unordered_set<HomotopyMemo::Key, HomotopyMemo::KeyHash>*
    s_in_progress = nullptr;

inline Chain s_flag_compute(const SContext& ctx, const Element& g, const Cell& A) {
  const GarsideStructure& st = ctx.st;
  if (A.empty()) return tail_chain(st, g);
  if (g.is_identity()) return Chain{};
  int lamA = cell_lambda(st, A);
  Element e = multiply(st, g, element_from_simple(st, lamA));
  int c = tail_alpha(st, e);
  int a1 = A.front();
  if (c > a1) throw error("homotopy: tail atom exceeds cell head; conventions broken");
  if (c == a1) return Chain{};
  // T = [c] + A is automatically a cell
  Cell T;
  T.reserve(A.size() + 1);
  T.push_back(c);
  T.insert(T.end(), A.begin(), A.end());
  int lamT = cell_lambda(st, T);
  if (st.tail_alpha_simple(lamT) != c)
    throw error("homotopy: extended tuple is not a cell; conventions broken");
  int degT = static_cast<int>(T.size());
  if (!ctx.store.degree_complete(degT))
    throw error("homotopy needs completed differentials in degree " + std::to_string(degT));
  const Chain& dT = ctx.store.diff[degT][ctx.store.cell_index(degT, T)];
  Element h = divide_right_by_simple(st, lamT, e);

  // X = g[A] - h * d[T]; the g[A] term cancels against the leading term of
  // h * d[T], which is the well-foundedness of the recursion.
  Chain X = chain_term(Int(1), g, A);
  chain_add_inplace(X, chain_negate(element_times_chain(st, h, dT)));
  for (auto& t : X.terms)
    if (t.cell == A && t.g == g)
      throw error("homotopy: leading flag failed to cancel; conventions broken");
  Chain out = chain_term(Int(1), h, T);
  chain_add_inplace(out, s_chain(ctx, X));
  return out;
}

inline Chain s_flag(const SContext& ctx, const Element& g, const Cell& A) {
  if (A.empty()) return tail_chain(ctx.st, g);  // cheap, not memoized
  if (g.is_identity()) return Chain{};
  HomotopyMemo::Key key{g, A};
  if (ctx.memo) {
    auto hit = ctx.memo->lookup(key);
    if (hit) return *hit;
  }
  std::unordered_set<HomotopyMemo::Key, HomotopyMemo::KeyHash> local;
  bool own = false;
  if (!s_in_progress) {
    s_in_progress = &local;
    own = true;
  }
  if (!s_in_progress->insert(key).second)
    throw error("homotopy recursion cycle detected");
  Chain v;
  try {
    v = s_flag_compute(ctx, g, A);
  } catch (...) {
    s_in_progress->erase(key);
    if (own) s_in_progress = nullptr;
    throw;
  }
  s_in_progress->erase(key);
  if (own) s_in_progress = nullptr;
  if (ctx.memo) ctx.memo->insert(key, v);
  return v;
}

}  // namespace detail

// Differential of a single cell. Degrees above 1 need all lower degrees
// complete in the store; the recursion consumes them.
inline Chain cell_differential(const GarsideStructure& st, const DifferentialStore& store,
                               const Cell& cell, HomotopyMemo* memo = nullptr) {
  int k = static_cast<int>(cell.size());
  if (k == 0) throw error("the 0-cell has no differential");
  if (k == 1) {
    Chain c = chain_term(Int(1), element_from_simple(st, st.atom_simple[cell[0]]), Cell{});
    chain_add_inplace(c, chain_term(Int(-1), Element{}, Cell{}));
    return c;
  }
  for (int j = 1; j < k; ++j)
    if (!store.degree_complete(j))
      throw error("differential of degree " + std::to_string(k) +
                  " requires completed degree " + std::to_string(j));
  if (!is_cell(st, cell)) throw error("not a cell");
  Cell A(cell.begin() + 1, cell.end());
  int lamB = cell_lambda(st, cell);
  int lamA = cell_lambda(st, A);
  int uB = st.right_complement(lamA, lamB);  // uB * lamA = lamB
  const Chain& dA = store.diff[k - 1][store.cell_index(k - 1, A)];
  detail::SContext ctx{st, store, memo};
  Chain corr = detail::s_chain(ctx, element_times_chain(st, element_from_simple(st, uB), dA));
  Chain out = chain_term(Int(1), element_from_simple(st, uB), A);
  chain_add_inplace(out, chain_negate(corr));
  return out;
}

// d applied to a chain of degree k (k >= 1), using stored differentials.
inline Chain boundary(const GarsideStructure& st, const DifferentialStore& store,
                      const Chain& c, int degree) {
  Chain out;
  for (auto& t : c.terms) {
    const Chain& d = store.diff[degree][store.cell_index(degree, t.cell)];
    chain_add_inplace(out, chain_scale(element_times_chain(st, t.g, d), t.coeff));
  }
  return out;
}

// Fill one degree single-threaded (the parallel route lives in journal.hpp).
inline void compute_degree(const GarsideStructure& st, DifferentialStore& store, int degree,
                           HomotopyMemo* memo = nullptr) {
  ensure_cells(st, store, degree);
  if (degree == 0) return;
  store.diff[degree].resize(store.cells[degree].size());
  for (size_t i = 0; i < store.cells[degree].size(); ++i)
    store.diff[degree][i] = cell_differential(st, store, store.cells[degree][i], memo);
  store.complete[degree] = 1;
  store.provenance[degree] = "computed";
}

inline void compute_through_degree(const GarsideStructure& st, DifferentialStore& store,
                                   int degree, HomotopyMemo* memo = nullptr) {
  for (int k = 1; k <= degree; ++k)
    if (!store.degree_complete(k)) compute_degree(st, store, k, memo);
}

struct DDReport {
  int degree = 0;
  std::vector<int> violations;  // cell indices with d(d(cell)) != 0
  bool ok() const { return violations.empty(); }
};

// d o d = 0 at `degree`: expands d(d(cell)) over the degree below. Degree 1
// composes with the augmentation.
inline DDReport check_dd_zero(const GarsideStructure& st, const DifferentialStore& store,
                              int degree) {
  DDReport rep;
  rep.degree = degree;
  if (degree < 1 || !store.degree_complete(degree))
    throw error("check_dd_zero: degree not available");
  for (int i = 0; i < static_cast<int>(store.cells[degree].size()); ++i) {
    const Chain& d = store.diff[degree][i];
    if (degree == 1) {
      Int aug = 0;
      for (auto& t : d.terms) aug += t.coeff;
      if (aug != 0) rep.violations.push_back(i);
      continue;
    }
    if (!store.degree_complete(degree - 1)) throw error("check_dd_zero: lower degree missing");
    Chain dd = boundary(st, store, d, degree - 1);
    if (!dd.is_zero()) rep.violations.push_back(i);
  }
  return rep;
}

// Contracting homotopy identity on one flag:
// d(s(g[A])) + s(d(g[A])) = g[A]. The degree-0 case is the Gamma identity.
inline bool check_homotopy_identity(const GarsideStructure& st, const DifferentialStore& store,
                                    const Element& g, const Cell& A,
                                    HomotopyMemo* memo = nullptr) {
  detail::SContext ctx{st, store, memo};
  int n = static_cast<int>(A.size());
  Chain sg = detail::s_flag(ctx, g, A);
  Chain d_sg;
  for (auto& t : sg.terms) {
    Chain dc = cell_differential(st, store, t.cell, memo);
    chain_add_inplace(d_sg, chain_scale(element_times_chain(st, t.g, dc), t.coeff));
  }
  Chain rhs = chain_term(Int(1), g, A);
  if (n == 0) {
    // s(eps(g[0])) = [0]
    chain_add_inplace(d_sg, chain_term(Int(1), Element{}, Cell{}));
    return d_sg == rhs;
  }
  const Chain& dA = store.diff[n][store.cell_index(n, A)];
  Chain s_dg = detail::s_chain(ctx, element_times_chain(st, g, dA));
  chain_add_inplace(d_sg, s_dg);
  return d_sg == rhs;
}

}  // namespace garside

#endif
