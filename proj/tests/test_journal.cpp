#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "garside/journal.hpp"
#include "support.hpp"

using namespace garside;
namespace fs = std::filesystem;

namespace {
fs::path temp_dir(const std::string& tag) {
  auto p = fs::temp_directory_path() / ("garside_journal_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}
}  // namespace

TEST_CASE("worker counts produce byte-identical stores") {
  auto st = GarsideStructure::from_presentation(testsupport::g12_presentation(), "G12");
  DifferentialStore s1, s8;
  compute_through_degree(st, s1, 1);
  compute_through_degree(st, s8, 1);
  HomotopyMemo m1, m8;
  run_degree(st, s1, 2, 1, {}, &m1);
  run_degree(st, s8, 2, 8, {}, &m8);
  CHECK(serialize_degree(s1, 2) == serialize_degree(s8, 2));
}

TEST_CASE("journal records and markers") {
  auto dir = temp_dir("basic");
  auto st = GarsideStructure::artin_dihedral(6);
  DifferentialStore store;
  compute_through_degree(st, store, 1);
  size_t progress_calls = 0;
  auto rep = run_degree(st, store, 2, 2, dir, nullptr,
                        [&](size_t done, size_t total) {
                          ++progress_calls;
                          CHECK(done <= total);
                        });
  CHECK(rep.total == 1);
  CHECK(rep.computed == 1);
  CHECK(rep.resumed == 0);
  CHECK(progress_calls >= 1);
  auto js = load_journal(dir / "deg2.journal", 2);
  CHECK(js.accepted.size() == 1);
  CHECK(js.done_marker);
  CHECK(js.discarded == 0);
  fs::remove_all(dir);
}

TEST_CASE("resume after interruption equals an uninterrupted run") {
  auto dir1 = temp_dir("kill");
  auto dir2 = temp_dir("clean");
  auto st = GarsideStructure::from_presentation(testsupport::g22_presentation(), "G22");
  DifferentialStore full;
  compute_through_degree(st, full, 1);
  run_degree(st, full, 2, 2, dir2);

  // simulate a mid-run kill: keep only the first record of the journal
  {
    DifferentialStore tmp;
    compute_through_degree(st, tmp, 1);
    run_degree(st, tmp, 2, 1, dir1);
    std::ifstream is(dir1 / "deg2.journal");
    std::string first_line;
    std::getline(is, first_line);
    is.close();
    std::ofstream os(dir1 / "deg2.journal", std::ios::trunc);
    os << first_line << "\n";
  }
  DifferentialStore resumed;
  compute_through_degree(st, resumed, 1);
  auto rep = run_degree(st, resumed, 2, 4, dir1);
  CHECK(rep.resumed == 1);
  CHECK(rep.computed == 1);
  CHECK(serialize_degree(resumed, 2) == serialize_degree(full, 2));
  // a second resume does no work at all
  DifferentialStore again;
  compute_through_degree(st, again, 1);
  auto rep2 = run_degree(st, again, 2, 4, dir1);
  CHECK(rep2.computed == 0);
  CHECK(rep2.resumed == 2);
  CHECK(serialize_degree(again, 2) == serialize_degree(full, 2));
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("corrupted records are discarded and recomputed") {
  auto dir = temp_dir("corrupt");
  auto st = GarsideStructure::artin_dihedral(5);
  DifferentialStore store;
  compute_through_degree(st, store, 1);
  run_degree(st, store, 2, 1, dir);

  // flip a byte inside the chain text of the record
  auto path = dir / "deg2.journal";
  std::ifstream is(path);
  std::string all((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  is.close();
  size_t mid = all.find('*');
  REQUIRE(mid != std::string::npos);
  all[mid + 1] = (all[mid + 1] == '1') ? '2' : '1';
  std::ofstream(path, std::ios::trunc) << all;

  auto js = load_journal(path, 2);
  CHECK(js.discarded >= 1);
  DifferentialStore redo;
  compute_through_degree(st, redo, 1);
  auto rep = run_degree(st, redo, 2, 1, dir);
  CHECK(rep.discarded >= 1);
  CHECK(rep.computed == 1);
  DifferentialStore clean;
  compute_through_degree(st, clean, 1);
  run_degree(st, clean, 2, 1);
  CHECK(serialize_degree(redo, 2) == serialize_degree(clean, 2));
  fs::remove_all(dir);
}

TEST_CASE("truncated tail lines are dropped") {
  auto dir = temp_dir("trunc");
  auto st = GarsideStructure::artin_dihedral(4);
  DifferentialStore store;
  compute_through_degree(st, store, 1);
  run_degree(st, store, 2, 1, dir);
  auto path = dir / "deg2.journal";
  auto size = fs::file_size(path);
  fs::resize_file(path, size - 5);
  auto js = load_journal(path, 2);
  CHECK(js.accepted.size() + js.discarded >= 1);
  DifferentialStore redo;
  compute_through_degree(st, redo, 1);
  CHECK_NOTHROW(run_degree(st, redo, 2, 2, dir));
  CHECK(redo.degree_complete(2));
  fs::remove_all(dir);
}

TEST_CASE("lower degree incomplete is refused") {
  auto st = GarsideStructure::from_presentation(testsupport::braid4_presentation(), "B4");
  DifferentialStore store;
  compute_through_degree(st, store, 1);
  CHECK_THROWS_WITH(run_degree(st, store, 3, 2),
                    Catch::Matchers::ContainsSubstring("refusing"));
}

TEST_CASE("parallel degree-3 run matches the serial one") {
  auto st = GarsideStructure::from_presentation(testsupport::braid4_presentation(), "B4");
  DifferentialStore serial, parallel;
  compute_through_degree(st, serial, 3);
  compute_through_degree(st, parallel, 2);
  HomotopyMemo memo;
  run_degree(st, parallel, 3, 8, {}, &memo);
  CHECK(serialize_degree(parallel, 3) == serialize_degree(serial, 3));
}
