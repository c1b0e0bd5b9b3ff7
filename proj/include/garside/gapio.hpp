#ifndef GARSIDE_GAPIO_HPP
#define GARSIDE_GAPIO_HPP

// Reader/writer for the published data-file layout: assignments of nested
// integer lists and cycle-notation permutations, `name := value;`. The
// grammar is deliberately tolerant (arbitrary whitespace, `:=` or `=`,
// optional trailing semicolon, # comments) since the files target a
// computer-algebra system. All indices are 1-based on disk and 0-based in
// memory; the conversion happens here and nowhere else.

#include <filesystem>
#include <fstream>

#include "garside/complex.hpp"

namespace garside::gapio {

struct Value {
  enum class Kind { integer, perm, list };
  Kind kind = Kind::integer;
  Int num;
  Perm perm;                // 0-based images
  std::vector<Value> list;

  bool operator==(const Value& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case Kind::integer: return num == o.num;
      case Kind::perm: return perm == o.perm;
      case Kind::list: return list == o.list;
    }
    return false;
  }
};

struct DataFile {
  std::vector<std::string> order;
  std::map<std::string, Value> values;

  const Value& get(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw error("missing variable " + name);
    return it->second;
  }
  bool has(const std::string& name) const { return values.count(name) != 0; }
};

struct ParseError : error {
  int line, col;
  ParseError(const std::string& msg, int l, int c)
      : error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
        line(l),
        col(c) {}
};

namespace detail {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& text) : s(text) {}

  void advance() {
    if (pos < s.size()) {
      if (s[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }
  void skip_ws() {
    while (pos < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        advance();
      } else if (s[pos] == '#') {
        while (pos < s.size() && s[pos] != '\n') advance();
      } else {
        break;
      }
    }
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      fail("expected identifier");
    std::string out;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      out.push_back(s[pos]);
      advance();
    }
    return out;
  }
  Int integer() {
    skip_ws();
    std::string digits;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      digits.push_back(s[pos]);
      advance();
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer");
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits.push_back(s[pos]);
      advance();
    }
    return Int(digits);
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      advance();
      return true;
    }
    return false;
  }
};

inline Value parse_value(Lexer& lx);

inline Value parse_perm(Lexer& lx) {
  // one or more cycles over positive 1-based points; "()" is the identity
  std::vector<std::vector<long long>> cycles;
  long long maxpt = 0;
  while (lx.peek() == '(') {
    lx.expect('(');
    std::vector<long long> cyc;
    if (!lx.accept(')')) {
      for (;;) {
        Int p = lx.integer();
        if (p < 1) lx.fail("permutation points must be positive");
        long long pt = static_cast<long long>(p);
        cyc.push_back(pt);
        maxpt = std::max(maxpt, pt);
        if (lx.accept(')')) break;
        lx.expect(',');
      }
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  Value v;
  v.kind = Value::Kind::perm;
  v.perm = perm_identity(static_cast<int>(maxpt));
  std::vector<char> seen(maxpt + 1, 0);
  for (auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      long long from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (seen[from]) lx.fail("cycles are not disjoint");
      seen[from] = 1;
      v.perm[from - 1] = static_cast<int>(to - 1);
    }
  }
  return v;
}

inline Value parse_value(Lexer& lx) {
  char c = lx.peek();
  if (c == '[') {
    lx.expect('[');
    Value v;
    v.kind = Value::Kind::list;
    if (!lx.accept(']')) {
      for (;;) {
        v.list.push_back(parse_value(lx));
        if (lx.accept(']')) break;
        lx.expect(',');
      }
    }
    return v;
  }
  if (c == '(') return parse_perm(lx);
  Value v;
  v.kind = Value::Kind::integer;
  v.num = lx.integer();
  return v;
}

}  // namespace detail

inline DataFile parse(const std::string& text) {
  detail::Lexer lx(text);
  DataFile f;
  while (!lx.eof()) {
    std::string name = lx.ident();
    if (f.values.count(name)) lx.fail("duplicate variable " + name);
    lx.skip_ws();
    if (lx.accept(':')) {
      lx.expect('=');
    } else {
      lx.expect('=');
    }
    Value v = detail::parse_value(lx);
    lx.accept(';');
    f.order.push_back(name);
    f.values.emplace(name, std::move(v));
  }
  return f;
}

inline std::string serialize_value(const Value& v) {
  switch (v.kind) {
    case Value::Kind::integer:
      return v.num.str();
    case Value::Kind::perm: {
      // canonical disjoint cycles, each starting at its least point
      std::string out;
      std::vector<char> seen(v.perm.size(), 0);
      for (size_t i = 0; i < v.perm.size(); ++i) {
        if (seen[i] || v.perm[i] == static_cast<int>(i)) continue;
        out += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
          seen[j] = 1;
          out += (first ? "" : ",") + std::to_string(j + 1);
          first = false;
          j = v.perm[j];
        }
        out += ")";
      }
      return out.empty() ? "()" : out;
    }
    case Value::Kind::list: {
      std::string out = "[";
      for (size_t i = 0; i < v.list.size(); ++i) {
        if (i) out += ",";
        out += serialize_value(v.list[i]);
      }
      out += "]";
      return out;
    }
  }
  return {};
}

inline std::string serialize(const DataFile& f) {
  std::string out;
  for (auto& name : f.order) {
    out += name;
    out += " := ";
    out += serialize_value(f.get(name));
    out += ";\n";
  }
  return out;
}

// --- typed accessors ----------------------------------------------------------

inline std::vector<Perm> as_perm_list(const Value& v) {
  if (v.kind != Value::Kind::list) throw error("expected a list of permutations");
  std::vector<Perm> out;
  for (auto& x : v.list) {
    if (x.kind != Value::Kind::perm) throw error("expected a permutation");
    out.push_back(x.perm);
  }
  return out;
}

inline std::vector<int> as_int_list(const Value& v) {
  if (v.kind != Value::Kind::list) throw error("expected a list of integers");
  std::vector<int> out;
  for (auto& x : v.list) {
    if (x.kind != Value::Kind::integer) throw error("expected an integer");
    out.push_back(static_cast<int>(x.num));
  }
  return out;
}

// --- differential encoding -----------------------------------------------------
//
// A differential is a list of terms [a, [beta, gamma]] where a is the integer
// coefficient, beta lists 1-based simple positions whose ordered product is
// the monoid element, and gamma is the target cell as 1-based atom positions.

inline Chain decode_differential(const Value& entry, const GarsideStructure& st) {
  if (entry.kind != Value::Kind::list) throw error("differential entry must be a list");
  Chain c;
  for (auto& term : entry.list) {
    if (term.kind != Value::Kind::list || term.list.size() != 2 ||
        term.list[0].kind != Value::Kind::integer || term.list[1].kind != Value::Kind::list ||
        term.list[1].list.size() != 2)
      throw error("differential term must be [coeff, [beta, gamma]]");
    Int coeff = term.list[0].num;
    auto beta = as_int_list(term.list[1].list[0]);
    auto gamma = as_int_list(term.list[1].list[1]);
    std::vector<int> simples;
    for (int b : beta) {
      if (b < 1 || b > st.S) throw error("simple index out of range: " + std::to_string(b));
      simples.push_back(b - 1);
    }
    Cell cell;
    for (int gidx : gamma) {
      if (gidx < 1 || gidx > st.num_atoms())
        throw error("atom index out of range: " + std::to_string(gidx));
      cell.push_back(gidx - 1);
    }
    for (size_t i = 0; i + 1 < cell.size(); ++i)
      if (cell[i] >= cell[i + 1]) throw error("cell atoms must be strictly increasing");
    if (!is_cell(st, cell)) throw error("gamma does not satisfy the cell condition");
    c.terms.push_back({coeff, make_element(st, std::move(simples)), std::move(cell)});
  }
  chain_normalize(c);
  return c;
}

inline Value encode_differential(const Chain& c) {
  Value out;
  out.kind = Value::Kind::list;
  for (auto& t : c.terms) {
    Value term, pair, beta, gamma, coeff;
    coeff.kind = Value::Kind::integer;
    coeff.num = t.coeff;
    beta.kind = Value::Kind::list;
    for (int s : t.g.nf) {
      Value v;
      v.kind = Value::Kind::integer;
      v.num = s + 1;
      beta.list.push_back(v);
    }
    gamma.kind = Value::Kind::list;
    for (int a : t.cell) {
      Value v;
      v.kind = Value::Kind::integer;
      v.num = a + 1;
      gamma.list.push_back(v);
    }
    pair.kind = Value::Kind::list;
    pair.list = {beta, gamma};
    term.kind = Value::Kind::list;
    term.list = {coeff, pair};
    out.list.push_back(std::move(term));
  }
  return out;
}

// --- whole-directory layout ------------------------------------------------------

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream os(p);
  if (!os) throw error("cannot write " + p.string());
  os << text;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream is(p);
  if (!is) throw error("cannot read " + p.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

// Emits atoms<g>.gap, simples<g>.gap, cells{k}N.gap and Dcells{k}.gap for the
// computed degrees. Permutation files need permutation images; cells_only
// skips them for structures that lack any.
inline void emit_structure(const std::filesystem::path& dir, const GarsideStructure& st,
                           const DifferentialStore& store, const std::string& gname,
                           bool cells_only = false) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  if (!cells_only) {
    if (!st.has_perms())
      throw error(
          "structure has no permutation images; use cells-only export "
          "(atoms/simples files need permutations)");
    DataFile fa;
    Value atoms;
    atoms.kind = Value::Kind::list;
    for (int a = 0; a < st.num_atoms(); ++a) {
      Value v;
      v.kind = Value::Kind::perm;
      v.perm = st.perms[st.atom_simple[a]];
      atoms.list.push_back(std::move(v));
    }
    fa.order = {"allatoms"};
    fa.values.emplace("allatoms", std::move(atoms));
    write_file(dir / ("atoms" + gname + ".gap"), serialize(fa));

    DataFile fsima;
    Value simples, lens;
    simples.kind = Value::Kind::list;
    lens.kind = Value::Kind::list;
    for (int i = 0; i < st.S; ++i) {
      Value v;
      v.kind = Value::Kind::perm;
      v.perm = st.perms[i];
      simples.list.push_back(std::move(v));
      Value l;
      l.kind = Value::Kind::integer;
      l.num = st.lengths[i];
      lens.list.push_back(std::move(l));
    }
    fsima.order = {"allsimples", "simpleslengths"};
    fsima.values.emplace("allsimples", std::move(simples));
    fsima.values.emplace("simpleslengths", std::move(lens));
    write_file(dir / ("simples" + gname + ".gap"), serialize(fsima));
  }
  for (int k = 2; k < static_cast<int>(store.cells.size()); ++k) {
    if (store.cells[k].empty()) break;
    DataFile fc;
    Value cells;
    cells.kind = Value::Kind::list;
    for (auto& c : store.cells[k]) {
      Value row;
      row.kind = Value::Kind::list;
      for (int a : c) {
        Value v;
        v.kind = Value::Kind::integer;
        v.num = a + 1;
        row.list.push_back(std::move(v));
      }
      cells.list.push_back(std::move(row));
    }
    std::string var = "cells" + std::to_string(k) + "N";
    fc.order = {var};
    fc.values.emplace(var, std::move(cells));
    write_file(dir / (var + ".gap"), serialize(fc));

    if (store.degree_complete(k)) {
      DataFile fd;
      Value diffs;
      diffs.kind = Value::Kind::list;
      for (auto& d : store.diff[k]) diffs.list.push_back(encode_differential(d));
      std::string dvar = "Dcells" + std::to_string(k) + "P";
      fd.order = {dvar};
      fd.values.emplace(dvar, std::move(diffs));
      write_file(dir / ("Dcells" + std::to_string(k) + ".gap"), serialize(fd));
    }
  }
}

struct ImportResult {
  GarsideStructure st;
  DifferentialStore store;
  std::string gname;
  std::vector<int> imported_degrees;
  bool cells_matched = true;  // imported cell lists equal re-enumerated ones
};

inline ImportResult load_structure(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::string gname;
  fs::path atoms_path;
  for (auto& e : fs::directory_iterator(dir)) {
    auto fn = e.path().filename().string();
    if (fn.rfind("atoms", 0) == 0 && fn.size() > 9 && fn.substr(fn.size() - 4) == ".gap") {
      atoms_path = e.path();
      gname = fn.substr(5, fn.size() - 9);
    }
  }
  if (atoms_path.empty()) throw error("no atoms*.gap file in " + dir.string());
  auto fa = parse(read_file(atoms_path));
  auto fsima = parse(read_file(dir / ("simples" + gname + ".gap")));
  auto atoms = as_perm_list(fa.get("allatoms"));
  auto simples = as_perm_list(fsima.get("allsimples"));
  auto lens = as_int_list(fsima.get("simpleslengths"));
  ImportResult res{GarsideStructure::from_data(atoms, simples, lens, gname), {}, gname, {}, true};
  auto& st = res.st;
  auto& store = res.store;
  int top = max_cell_degree(st, store);
  compute_through_degree(st, store, 1);

  for (int k = 2; k <= top; ++k) {
    fs::path cpath = dir / ("cells" + std::to_string(k) + "N.gap");
    if (fs::exists(cpath)) {
      auto fc = parse(read_file(cpath));
      const Value& lists = fc.get("cells" + std::to_string(k) + "N");
      std::vector<Cell> imported;
      for (auto& row : lists.list) {
        auto v = as_int_list(row);
        Cell c;
        for (int x : v) c.push_back(x - 1);
        imported.push_back(std::move(c));
      }
      if (imported != store.cells[k]) res.cells_matched = false;
    }
    fs::path dpath = dir / ("Dcells" + std::to_string(k) + ".gap");
    if (fs::exists(dpath)) {
      auto fd = parse(read_file(dpath));
      const Value& entries = fd.get("Dcells" + std::to_string(k) + "P");
      if (entries.list.size() != store.cells[k].size())
        throw error("Dcells" + std::to_string(k) + " has " +
                    std::to_string(entries.list.size()) + " entries, expected " +
                    std::to_string(store.cells[k].size()));
      store.diff[k].clear();
      store.diff[k].reserve(entries.list.size());
      for (auto& e : entries.list) store.diff[k].push_back(decode_differential(e, st));
      store.complete[k] = 1;
      store.provenance[k] = "imported";
      res.imported_degrees.push_back(k);
    }
  }
  return res;
}

}  // namespace garside::gapio

#endif
