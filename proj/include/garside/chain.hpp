#ifndef GARSIDE_CHAIN_HPP
#define GARSIDE_CHAIN_HPP

// Chains of the order complex: Z-linear combinations of (element, cell)
// pairs, kept sparse, normalized and canonically ordered so serialized
// chains are unique.

#include <sstream>
#include <vector>

#include "garside/element.hpp"

namespace garside {

using Cell = std::vector<int>;  // strictly increasing atom indices; empty = the 0-cell

struct ChainTerm {
  Int coeff;
  Element g;
  Cell cell;
};

struct Chain {
  std::vector<ChainTerm> terms;  // sorted by (cell, element), no zeros

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Chain& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
      if (terms[i].coeff != o.terms[i].coeff || !(terms[i].g == o.terms[i].g) ||
          terms[i].cell != o.terms[i].cell)
        return false;
    return true;
  }
};

inline bool term_order(const ChainTerm& a, const ChainTerm& b) {
  if (a.cell != b.cell) return a.cell < b.cell;
  return a.g < b.g;
}

inline void chain_normalize(Chain& c) {
  std::sort(c.terms.begin(), c.terms.end(), term_order);
  std::vector<ChainTerm> out;
  out.reserve(c.terms.size());
  for (auto& t : c.terms) {
    if (!out.empty() && out.back().cell == t.cell && out.back().g == t.g)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  c.terms = std::move(out);
}

inline Chain chain_term(Int coeff, Element g, Cell cell) {
  Chain c;
  if (coeff != 0) c.terms.push_back({std::move(coeff), std::move(g), std::move(cell)});
  return c;
}

inline void chain_add_inplace(Chain& a, const Chain& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  chain_normalize(a);
}

inline Chain chain_add(Chain a, const Chain& b) {
  chain_add_inplace(a, b);
  return a;
}

inline Chain chain_negate(Chain a) {
  for (auto& t : a.terms) t.coeff = -t.coeff;
  return a;
}

inline Chain chain_sub(Chain a, const Chain& b) {
  return chain_add(std::move(a), chain_negate(b));
}

inline Chain chain_scale(Chain a, const Int& s) {
  if (s == 0) return Chain{};
  for (auto& t : a.terms) t.coeff *= s;
  return a;
}

// left action of the monoid
inline Chain element_times_chain(const GarsideStructure& st, const Element& g, const Chain& c) {
  if (g.is_identity()) return c;
  Chain r;
  r.terms.reserve(c.terms.size());
  for (auto& t : c.terms) r.terms.push_back({t.coeff, multiply(st, g, t.g), t.cell});
  chain_normalize(r);
  return r;
}

// canonical text form, also the journal payload
inline std::string chain_serialize(const Chain& c) {
  std::ostringstream os;
  bool first = true;
  for (auto& t : c.terms) {
    if (!first) os << ";";
    first = false;
    os << t.coeff.str() << "*";
    if (t.g.is_identity()) {
      os << "e";
    } else {
      for (size_t i = 0; i < t.g.nf.size(); ++i) os << (i ? "." : "") << t.g.nf[i];
    }
    os << "*(";
    for (size_t i = 0; i < t.cell.size(); ++i) os << (i ? "," : "") << t.cell[i];
    os << ")";
  }
  return os.str();
}

inline Chain chain_deserialize(const std::string& s) {
  Chain c;
  if (s.empty()) return c;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ';')) {
    size_t p1 = part.find('*');
    size_t p2 = part.find('*', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw error("bad chain text: " + part);
    ChainTerm t;
    t.coeff = Int(part.substr(0, p1));
    std::string gs = part.substr(p1 + 1, p2 - p1 - 1);
    if (gs != "e") {
      std::stringstream gss(gs);
      std::string tok;
      while (std::getline(gss, tok, '.')) t.g.nf.push_back(std::stoi(tok));
    }
    std::string cs = part.substr(p2 + 1);
    if (cs.size() < 2 || cs.front() != '(' || cs.back() != ')')
      throw error("bad chain cell text: " + part);
    cs = cs.substr(1, cs.size() - 2);
    if (!cs.empty()) {
      std::stringstream css(cs);
      std::string tok;
      while (std::getline(css, tok, ',')) t.cell.push_back(std::stoi(tok));
    }
    c.terms.push_back(std::move(t));
  }
  chain_normalize(c);
  return c;
}

inline std::string chain_pretty(const GarsideStructure& st, const Chain& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : c.terms) {
    Int a = t.coeff;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int aa = abs_int(a);
    if (aa != 1) os << aa.str() << " ";
    if (!t.g.is_identity()) os << element_str(st, t.g) << " ";
    os << "[";
    for (size_t i = 0; i < t.cell.size(); ++i)
      os << (i ? "," : "") << st.atom_names[t.cell[i]];
    os << "]";
  }
  return os.str();
}

struct CellHash {
  size_t operator()(const Cell& c) const {
    size_t h = 0x9e3779b97f4a7c15ULL;
    for (int a : c) h = hash_combine(h, static_cast<size_t>(a) + 17);
    return h;
  }
};

}  // namespace garside

#endif
