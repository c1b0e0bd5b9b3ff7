#ifndef GARSIDE_TESTS_SUPPORT_HPP
#define GARSIDE_TESTS_SUPPORT_HPP

// Shared fixtures for the test suite: the rank-2 presentations, a braid
// presentation, and a word-enumeration oracle kept independent of the
// library's own closure (plain fixed-point rewriting over explicit word
// sets, no divisibility machinery).

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "garside/structure.hpp"

namespace testsupport {

inline garside::Presentation g12_presentation() {
  garside::Presentation p;
  p.atoms = {"x1", "x2", "x3"};
  // x1 x2 x3 x1 = x2 x3 x1 x2 = x3 x1 x2 x3
  p.relations = {{{0, 1, 2, 0}, {1, 2, 0, 1}}, {{1, 2, 0, 1}, {2, 0, 1, 2}}};
  p.delta = {0, 1, 2, 0};
  return p;
}

inline garside::Presentation g22_presentation() {
  garside::Presentation p;
  p.atoms = {"x1", "x2", "x3"};
  // x1 x2 x3 x1 x2 = x2 x3 x1 x2 x3 = x3 x1 x2 x3 x1
  p.relations = {{{0, 1, 2, 0, 1}, {1, 2, 0, 1, 2}}, {{1, 2, 0, 1, 2}, {2, 0, 1, 2, 0}}};
  p.delta = {0, 1, 2, 0, 1};
  return p;
}

// positive braid monoid on 4 strands (three atoms), delta = half twist
inline garside::Presentation braid4_presentation() {
  garside::Presentation p;
  p.atoms = {"s1", "s2", "s3"};
  p.relations = {{{0, 1, 0}, {1, 0, 1}}, {{1, 2, 1}, {2, 1, 2}}, {{0, 2}, {2, 0}}};
  p.delta = {0, 1, 0, 2, 1, 0};
  return p;
}

// ---------------------------------------------------------------------------
// Oracle: enumerate words of length <= maxlen as strings, close under single
// relation replacements until a fixed point, and expose class queries.

struct WordOracle {
  int natoms;
  std::vector<std::pair<std::string, std::string>> rules;  // both directions
  std::map<std::string, int> cls;
  std::vector<std::vector<std::string>> classes;

  WordOracle(const garside::Presentation& p, int maxlen) {
    natoms = static_cast<int>(p.atoms.size());
    for (auto& [l, r] : p.relations) {
      rules.emplace_back(str(l), str(r));
      rules.emplace_back(str(r), str(l));
    }
    std::vector<std::string> all{""};
    for (int len = 1; len <= maxlen; ++len) {
      std::vector<std::string> next;
      for (auto& w : all)
        if (static_cast<int>(w.size()) == len - 1)
          for (int a = 0; a < natoms; ++a) next.push_back(w + char('a' + a));
      all.insert(all.end(), next.begin(), next.end());
    }
    // iterate merging until stable
    std::map<std::string, int> id;
    for (auto& w : all) id[w] = static_cast<int>(id.size());
    std::vector<int> parent(id.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [w, i] : id)
        for (auto& [lhs, rhs] : rules)
          for (size_t pos = 0; pos + lhs.size() <= w.size(); ++pos)
            if (w.compare(pos, lhs.size(), lhs) == 0) {
              std::string w2 = w;
              w2.replace(pos, lhs.size(), rhs);
              int a = find(i), b = find(id.at(w2));
              if (a != b) {
                parent[a] = b;
                changed = true;
              }
            }
    }
    std::map<int, int> root_to_class;
    for (auto& [w, i] : id) {
      int r = find(i);
      auto [it, fresh] = root_to_class.emplace(r, static_cast<int>(classes.size()));
      if (fresh) classes.push_back({});
      cls[w] = it->second;
      classes[it->second].push_back(w);
    }
    for (auto& c : classes) std::sort(c.begin(), c.end());
  }

  static std::string str(const garside::Word& w) {
    std::string s;
    for (int a : w) s.push_back(char('a' + a));
    return s;
  }

  int class_of(const std::string& w) const { return cls.at(w); }

  // distinct left divisor classes of the class of `top` (prefix classes)
  std::set<int> divisor_classes(const std::string& top) const {
    std::set<int> out;
    for (auto& w : classes[class_of(top)])
      for (size_t k = 0; k <= w.size(); ++k) out.insert(class_of(w.substr(0, k)));
    return out;
  }

  bool same(const std::string& a, const std::string& b) const {
    return class_of(a) == class_of(b);
  }
};

}  // namespace testsupport

#endif
