#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <random>

#include "garside/gapio.hpp"
#include "garside/homology.hpp"
#include "support.hpp"

using namespace garside;
namespace fs = std::filesystem;

namespace {
fs::path temp_dir(const std::string& tag) {
  auto p = fs::temp_directory_path() / ("garside_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}
}  // namespace

TEST_CASE("parser basics") {
  SECTION("integer list") {
    auto f = gapio::parse("x := [1,2,3];");
    CHECK(gapio::as_int_list(f.get("x")) == std::vector<int>{1, 2, 3});
  }
  SECTION("assignment variants, whitespace, comments") {
    auto f = gapio::parse("# header comment\n  y =  [ [1, -2] ,\n [3] ]\nz := 42");
    CHECK(f.order == std::vector<std::string>{"y", "z"});
    CHECK(f.get("z").num == 42);
    CHECK(f.get("y").list.size() == 2);
  }
  SECTION("permutations in cycle notation") {
    auto f = gapio::parse("p := (1,2)(3,4); q := (); r := [(1,2,3)];");
    CHECK(f.get("p").perm == Perm{1, 0, 3, 2});
    CHECK(f.get("q").perm == Perm{});
    CHECK(gapio::as_perm_list(f.get("r"))[0] == Perm{1, 2, 0});
  }
  SECTION("big integers survive") {
    auto f = gapio::parse("n := [123456789012345678901234567890];");
    CHECK(f.get("n").list[0].num == Int("123456789012345678901234567890"));
  }
  SECTION("syntax errors carry line and column") {
    try {
      gapio::parse("a := [1,\n2,,3];");
      FAIL("expected ParseError");
    } catch (const gapio::ParseError& e) {
      CHECK(e.line == 2);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SECTION("non-disjoint cycles rejected") {
    CHECK_THROWS_AS(gapio::parse("p := (1,2)(2,3);"), gapio::ParseError);
  }
  SECTION("duplicate names rejected") {
    CHECK_THROWS_AS(gapio::parse("a := 1; a := 2;"), gapio::ParseError);
  }
}

TEST_CASE("round-trip on random values") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> kind(0, 2), ival(-50, 50), len(0, 4);
  std::function<gapio::Value(int)> make = [&](int depth) {
    gapio::Value v;
    int k = depth > 2 ? 0 : kind(rng);
    if (k == 0) {
      v.kind = gapio::Value::Kind::integer;
      v.num = ival(rng);
    } else if (k == 1) {
      v.kind = gapio::Value::Kind::perm;
      Perm p = perm_identity(6);
      std::shuffle(p.begin(), p.end(), rng);
      while (!p.empty() && p.back() == static_cast<int>(p.size()) - 1) p.pop_back();
      v.perm = p;
    } else {
      v.kind = gapio::Value::Kind::list;
      int n = len(rng);
      for (int i = 0; i < n; ++i) v.list.push_back(make(depth + 1));
    }
    return v;
  };
  for (int iter = 0; iter < 200; ++iter) {
    gapio::DataFile f;
    f.order = {"v"};
    f.values.emplace("v", make(0));
    auto text = gapio::serialize(f);
    auto f2 = gapio::parse(text);
    REQUIRE(f2.get("v") == f.get("v"));
    REQUIRE(gapio::serialize(f2) == text);
  }
}

TEST_CASE("differential encoding") {
  auto st = GarsideStructure::from_presentation(testsupport::g12_presentation(), "G12");
  SECTION("empty list decodes to the zero chain") {
    gapio::Value v;
    v.kind = gapio::Value::Kind::list;
    CHECK(gapio::decode_differential(v, st).is_zero());
  }
  SECTION("[-1, [[delta], [1,2]]] decodes to -delta [x1,x2]") {
    auto f = gapio::parse("d := [[-1, [[" + std::to_string(st.delta + 1) + "], [1,2]]]];");
    Chain c = gapio::decode_differential(f.get("d").list[0], st);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0].coeff == -1);
    CHECK(c.terms[0].g == element_from_simple(st, st.delta));
    CHECK(c.terms[0].cell == Cell{0, 1});
  }
  SECTION("encode/decode round-trips the computed differentials") {
    DifferentialStore store;
    compute_through_degree(st, store, 2);
    for (auto& d : store.diff[2]) {
      auto enc = gapio::encode_differential(d);
      CHECK(gapio::decode_differential(enc, st) == d);
    }
  }
  SECTION("bad indices and bad cells rejected") {
    auto bad1 = gapio::parse("d := [[1, [[999], [1,2]]]];");
    CHECK_THROWS_WITH(gapio::decode_differential(bad1.get("d").list[0], st),
                      Catch::Matchers::ContainsSubstring("out of range"));
    auto bad2 = gapio::parse("d := [[1, [[2], [2,1]]]];");
    CHECK_THROWS_WITH(gapio::decode_differential(bad2.get("d").list[0], st),
                      Catch::Matchers::ContainsSubstring("strictly increasing"));
    auto bad3 = gapio::parse("d := [[1, [[2], [2,3]]]];");  // [x2,x3] is not a cell
    CHECK_THROWS_WITH(gapio::decode_differential(bad3.get("d").list[0], st),
                      Catch::Matchers::ContainsSubstring("cell condition"));
  }
}

TEST_CASE("directory export/import round-trip for a permutation-backed structure") {
  auto dir = temp_dir("roundtrip");
  auto st = GarsideStructure::artin_dihedral(6);
  DifferentialStore store;
  int top = max_cell_degree(st, store);
  compute_through_degree(st, store, top);
  gapio::emit_structure(dir, st, store, "I26");

  auto imp = gapio::load_structure(dir);
  CHECK(imp.gname == "I26");
  CHECK(imp.st.S == st.S);
  CHECK(imp.st.lengths == st.lengths);
  CHECK(imp.cells_matched);
  CHECK(imp.imported_degrees == std::vector<int>{2});
  // imported differentials equal locally computed ones
  for (size_t i = 0; i < store.diff[2].size(); ++i)
    CHECK(imp.store.diff[2][i] == store.diff[2][i]);
  // homology computed from the import matches
  auto hi = homology_integer(specialize_int(imp.st, imp.store, CoeffKind::trivial, top));
  auto hr = homology_integer(specialize_int(st, store, CoeffKind::trivial, top));
  CHECK(hi == hr);
  // dd gate over imported store
  CHECK(check_dd_zero(imp.st, imp.store, 2).ok());
  fs::remove_all(dir);
}

TEST_CASE("cells-only export for presentation structures") {
  auto dir = temp_dir("cellsonly");
  auto st = GarsideStructure::from_presentation(testsupport::g12_presentation(), "G12");
  DifferentialStore store;
  compute_through_degree(st, store, 2);
  CHECK_THROWS_WITH(gapio::emit_structure(dir, st, store, "G12"),
                    Catch::Matchers::ContainsSubstring("no permutation images"));
  gapio::emit_structure(dir, st, store, "G12", /*cells_only=*/true);
  CHECK(fs::exists(dir / "cells2N.gap"));
  CHECK(fs::exists(dir / "Dcells2.gap"));
  CHECK_FALSE(fs::exists(dir / "atomsG12.gap"));
  // the emitted cells file lists both 2-cells, 1-based
  auto fc = gapio::parse(gapio::read_file(dir / "cells2N.gap"));
  auto rows = fc.get("cells2N").list;
  REQUIRE(rows.size() == 2);
  CHECK(gapio::as_int_list(rows[0]) == std::vector<int>{1, 2});
  CHECK(gapio::as_int_list(rows[1]) == std::vector<int>{1, 3});
  fs::remove_all(dir);
}

TEST_CASE("import validates cross-file consistency") {
  auto dir = temp_dir("badlen");
  auto st = GarsideStructure::artin_dihedral(4);
  DifferentialStore store;
  compute_through_degree(st, store, 2);
  gapio::emit_structure(dir, st, store, "I24");
  // tamper with one stated length
  auto text = gapio::read_file(dir / "simplesI24.gap");
  auto f = gapio::parse(text);
  f.values["simpleslengths"].list[st.delta].num += 1;
  gapio::write_file(dir / "simplesI24.gap", gapio::serialize(f));
  CHECK_THROWS(gapio::load_structure(dir));
  fs::remove_all(dir);
}

TEST_CASE("braid data generated from symmetric-group theory imports cleanly") {
  // Independent construction: permutations of S4 with Coxeter length, the
  // weak-order data of the 4-strand braid monoid.
  std::vector<Perm> elements;
  Perm p = perm_identity(4);
  std::sort(p.begin(), p.end());
  do {
    elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto coxlen = [](const Perm& q) {
    int inv = 0;
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = i + 1; j < q.size(); ++j)
        if (q[i] > q[j]) ++inv;
    return inv;
  };
  std::vector<int> lens;
  for (auto& q : elements) lens.push_back(coxlen(q));
  std::vector<Perm> atoms{{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}};
  auto st = GarsideStructure::from_data(atoms, elements, lens, "B4data");
  CHECK(st.S == 24);
  CHECK(st.delta_length() == 6);

  // agrees with the presentation-built braid monoid degree by degree
  auto stp = GarsideStructure::from_presentation(testsupport::braid4_presentation(), "B4");
  DifferentialStore sd, sp;
  int top_d = max_cell_degree(st, sd), top_p = max_cell_degree(stp, sp);
  REQUIRE(top_d == top_p);
  for (int k = 0; k <= top_d; ++k)
    CHECK(sd.cells[k].size() == sp.cells[k].size());
  compute_through_degree(st, sd, top_d);
  compute_through_degree(stp, sp, top_p);
  auto hd = homology_integer(specialize_int(st, sd, CoeffKind::trivial, top_d));
  auto hp = homology_integer(specialize_int(stp, sp, CoeffKind::trivial, top_p));
  CHECK(hd == hp);
}
