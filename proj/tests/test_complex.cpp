#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "garside/complex.hpp"
#include "support.hpp"

using namespace garside;

namespace {

struct TermSpec {
  int coeff;
  Word g;  // atom word
  Cell cell;
};

Chain build_chain(const GarsideStructure& st, std::initializer_list<TermSpec> specs) {
  Chain c;
  for (auto& s : specs)
    c.terms.push_back({Int(s.coeff), element_from_atom_word(st, s.g), s.cell});
  chain_normalize(c);
  return c;
}

Element rand_element(const GarsideStructure& st, std::mt19937& rng, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen), atom(0, st.num_atoms() - 1);
  Word w;
  int l = len(rng);
  for (int i = 0; i < l; ++i) w.push_back(atom(rng));
  return element_from_atom_word(st, w);
}

}  // namespace

TEST_CASE("cell enumeration") {
  SECTION("G12: degree lists match the published ones") {
    auto st = GarsideStructure::from_presentation(testsupport::g12_presentation(), "G12");
    CHECK(enumerate_cells(st, 0) == std::vector<Cell>{{}});
    CHECK(enumerate_cells(st, 1) == std::vector<Cell>{{0}, {1}, {2}});
    CHECK(enumerate_cells(st, 2) == std::vector<Cell>{{0, 1}, {0, 2}});
    CHECK(enumerate_cells(st, 3).empty());
  }
  SECTION("G22 same cell pattern") {
    auto st = GarsideStructure::from_presentation(testsupport::g22_presentation(), "G22");
    CHECK(enumerate_cells(st, 2) == std::vector<Cell>{{0, 1}, {0, 2}});
    CHECK(enumerate_cells(st, 3).empty());
  }
  SECTION("braid on 4 strands: 1,3,3,1") {
    auto st = GarsideStructure::from_presentation(testsupport::braid4_presentation(), "B4");
    CHECK(enumerate_cells(st, 1).size() == 3);
    CHECK(enumerate_cells(st, 2).size() == 3);
    CHECK(enumerate_cells(st, 3) == std::vector<Cell>{{0, 1, 2}});
    CHECK(enumerate_cells(st, 4).empty());
  }
  SECTION("single atom: degrees 0 and 1 only") {
    Presentation p;
    p.atoms = {"a"};
    p.delta = {0};
    auto st = GarsideStructure::from_presentation(p);
    CHECK(enumerate_cells(st, 1).size() == 1);
    CHECK(enumerate_cells(st, 2).empty());
  }
  SECTION("suffix closure") {
    auto st = GarsideStructure::from_presentation(testsupport::braid4_presentation(), "B4");
    for (int k = 2; k <= 3; ++k)
      for (auto& c : enumerate_cells(st, k)) {
        Cell suffix(c.begin() + 1, c.end());
        REQUIRE(is_cell(st, suffix));
      }
  }
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic({1, 1}) == 0);
  CHECK(euler_characteristic({1, 3, 2}) == 0);
  CHECK(euler_characteristic({1, 56, 711, 3448, 7520, 7414, 2686}) == 0);
}

TEST_CASE("greedy chain") {
  auto st = GarsideStructure::from_presentation(testsupport::g12_presentation(), "G12");
  SECTION("atom") {
    Element a = element_from_atom_word(st, {1});
    CHECK(greedy_chain(st, a) == build_chain(st, {{1, {}, {1}}}));
  }
  SECTION("Gamma(delta) climbs x1,x2,x3,x1") {
    Element d = element_from_atom_word(st, {0, 1, 2, 0});
    CHECK(greedy_chain(st, d) == build_chain(st, {{1, {}, {0}},
                                                  {1, {0}, {1}},
                                                  {1, {0, 1}, {2}},
                                                  {1, {0, 1, 2}, {0}}}));
  }
  SECTION("Gamma(x2x3) peels twice") {
    Element g = element_from_atom_word(st, {1, 2});
    CHECK(greedy_chain(st, g) == build_chain(st, {{1, {}, {1}}, {1, {1}, {2}}}));
  }
  SECTION("Gamma(1) = 0") { CHECK(greedy_chain(st, Element{}).is_zero()); }
  SECTION("d1 Gamma(g) = g[0] - [0] on random elements") {
    DifferentialStore store;
    ensure_cells(st, store, 1);
    compute_through_degree(st, store, 1);
    std::mt19937 rng(2024);
    for (int i = 0; i < 500; ++i) {
      Element g = rand_element(st, rng, 8);
      Chain gamma = greedy_chain(st, g);
      Chain d = boundary(st, store, gamma, 1);
      Chain expect = chain_term(Int(1), g, Cell{});
      chain_add_inplace(expect, chain_term(Int(-1), Element{}, Cell{}));
      REQUIRE(d == expect);
    }
  }
}

TEST_CASE("degree-1 differential") {
  auto st = GarsideStructure::artin_dihedral(4);
  DifferentialStore store;
  ensure_cells(st, store, 1);
  Chain d = cell_differential(st, store, Cell{0});
  Chain expect = chain_term(Int(1), element_from_atom_word(st, {0}), Cell{});
  chain_add_inplace(expect, chain_term(Int(-1), Element{}, Cell{}));
  CHECK(d == expect);
}

TEST_CASE("published degree-2 differentials, exact formal chains") {
  SECTION("G12") {
    auto st = GarsideStructure::from_presentation(testsupport::g12_presentation(), "G12");
    DifferentialStore store;
    compute_through_degree(st, store, 2);
    Chain d12 = store.diff[2][store.cell_index(2, {0, 1})];
    Chain expect12 = build_chain(st, {{1, {1, 2, 0}, {1}},
                                      {-1, {0, 1, 2}, {0}},
                                      {-1, {0, 1}, {2}},
                                      {-1, {0}, {1}},
                                      {-1, {}, {0}},
                                      {1, {1, 2}, {0}},
                                      {1, {1}, {2}},
                                      {1, {}, {1}}});
    CHECK(d12 == expect12);

    Chain d13 = store.diff[2][store.cell_index(2, {0, 2})];
    Chain expect13 = build_chain(st, {{1, {2, 0, 1}, {2}},
                                      {-1, {0, 1, 2}, {0}},
                                      {-1, {0, 1}, {2}},
                                      {-1, {0}, {1}},
                                      {-1, {}, {0}},
                                      {1, {2, 0}, {1}},
                                      {1, {2}, {0}},
                                      {1, {}, {2}}});
    CHECK(d13 == expect13);
  }
  SECTION("G22") {
    auto st = GarsideStructure::from_presentation(testsupport::g22_presentation(), "G22");
    DifferentialStore store;
    compute_through_degree(st, store, 2);
    Chain d12 = store.diff[2][store.cell_index(2, {0, 1})];
    Chain expect12 = build_chain(st, {{1, {0, 1, 2, 0}, {1}},
                                      {-1, {2, 0, 1, 2}, {0}},
                                      {-1, {2, 0, 1}, {2}},
                                      {-1, {2, 0}, {1}},
                                      {-1, {2}, {0}},
                                      {-1, {}, {2}},
                                      {1, {0, 1, 2}, {0}},
                                      {1, {0, 1}, {2}},
                                      {1, {0}, {1}},
                                      {1, {}, {0}}});
    CHECK(d12 == expect12);

    Chain d13 = store.diff[2][store.cell_index(2, {0, 2})];
    Chain expect13 = build_chain(st, {{1, {1, 2, 0, 1}, {2}},
                                      {-1, {2, 0, 1, 2}, {0}},
                                      {-1, {2, 0, 1}, {2}},
                                      {-1, {2, 0}, {1}},
                                      {-1, {2}, {0}},
                                      {-1, {}, {2}},
                                      {1, {1, 2, 0}, {1}},
                                      {1, {1, 2}, {0}},
                                      {1, {1}, {2}},
                                      {1, {}, {1}}});
    CHECK(d13 == expect13);
  }
}

TEST_CASE("d o d = 0 across structures and degrees") {
  auto check_all = [](const GarsideStructure& st) {
    DifferentialStore store;
    int top = max_cell_degree(st, store);
    compute_through_degree(st, store, top);
    for (int k = 1; k <= top; ++k) {
      auto rep = check_dd_zero(st, store, k);
      INFO(st.name << " degree " << k);
      REQUIRE(rep.ok());
    }
  };
  check_all(GarsideStructure::from_presentation(testsupport::g12_presentation(), "G12"));
  check_all(GarsideStructure::from_presentation(testsupport::g22_presentation(), "G22"));
  check_all(GarsideStructure::from_presentation(testsupport::braid4_presentation(), "B4"));
  for (int m : {2, 3, 4, 5, 6, 7}) check_all(GarsideStructure::artin_dihedral(m));
}

TEST_CASE("dd gate catches corrupted differentials") {
  auto st = GarsideStructure::from_presentation(testsupport::g12_presentation(), "G12");
  DifferentialStore store;
  compute_through_degree(st, store, 2);
  // corrupt one stored chain
  store.diff[2][0].terms[0].coeff += 1;
  auto rep = check_dd_zero(st, store, 2);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("homotopy identity on random flags") {
  std::mt19937 rng(31337);
  auto run = [&](const GarsideStructure& st) {
    DifferentialStore store;
    int top = max_cell_degree(st, store);
    compute_through_degree(st, store, top);
    HomotopyMemo memo;
    // degree-0 flags
    for (int i = 0; i < 60; ++i) {
      Element g = rand_element(st, rng, 6);
      REQUIRE(check_homotopy_identity(st, store, g, Cell{}, &memo));
    }
    // higher flags, wherever s is defined (degree of A below top)
    for (int k = 1; k < top; ++k)
      for (auto& A : store.cells[k])
        for (int i = 0; i < 25; ++i) {
          Element g = rand_element(st, rng, 5);
          REQUIRE(check_homotopy_identity(st, store, g, A, &memo));
        }
  };
  run(GarsideStructure::from_presentation(testsupport::g12_presentation(), "G12"));
  run(GarsideStructure::from_presentation(testsupport::g22_presentation(), "G22"));
  run(GarsideStructure::from_presentation(testsupport::braid4_presentation(), "B4"));
  run(GarsideStructure::artin_dihedral(6));
}

TEST_CASE("differential determinism") {
  auto st = GarsideStructure::from_presentation(testsupport::g22_presentation(), "G22");
  DifferentialStore s1, s2;
  compute_through_degree(st, s1, 2);
  HomotopyMemo memo;
  compute_through_degree(st, s2, 2, &memo);
  for (int k = 1; k <= 2; ++k) {
    REQUIRE(s1.diff[k].size() == s2.diff[k].size());
    for (size_t i = 0; i < s1.diff[k].size(); ++i) {
      REQUIRE(s1.diff[k][i] == s2.diff[k][i]);
      REQUIRE(chain_serialize(s1.diff[k][i]) == chain_serialize(s2.diff[k][i]));
    }
  }
}

TEST_CASE("differential needs lower degrees") {
  auto st = GarsideStructure::from_presentation(testsupport::g12_presentation(), "G12");
  DifferentialStore store;
  ensure_cells(st, store, 2);
  CHECK_THROWS_WITH(cell_differential(st, store, Cell{0, 1}),
                    Catch::Matchers::ContainsSubstring("requires completed degree"));
  CHECK_THROWS_AS(cell_differential(st, store, Cell{}), error);
}

TEST_CASE("chain serialization round-trip") {
  auto st = GarsideStructure::from_presentation(testsupport::g12_presentation(), "G12");
  DifferentialStore store;
  compute_through_degree(st, store, 2);
  for (int k = 1; k <= 2; ++k)
    for (auto& d : store.diff[k]) {
      auto text = chain_serialize(d);
      CHECK(chain_deserialize(text) == d);
    }
}
