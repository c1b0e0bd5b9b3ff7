#ifndef GARSIDE_JOURNAL_HPP
#define GARSIDE_JOURNAL_HPP

// Checkpointed parallel computation of one degree of differentials.
//
// The journal is a flat append-only text file, one record per line:
//   R <degree> <cell-index> <chain-text> <fnv64-hex>
//   D <degree> <count> <fnv64-hex>
// The digest covers everything before it on the line. A corrupted or
// truncated line is discarded (and the cell recomputed); accepted records
// are first-wins, so replaying never duplicates work. The final store is a
// pure function of (structure, degree) regardless of worker count: workers
// race only on journal append order, never on chain values.

#include <atomic>
#include <condition_variable>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

#include "garside/complex.hpp"

namespace garside {

namespace journal_detail {

inline std::string record_line(int degree, int cell, const std::string& chain_text) {
  std::string body =
      "R " + std::to_string(degree) + " " + std::to_string(cell) + " " + chain_text;
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx",
           static_cast<unsigned long long>(fnv1a64(body)));
  return body + " " + buf + "\n";
}

inline std::string done_line(int degree, size_t count) {
  std::string body = "D " + std::to_string(degree) + " " + std::to_string(count);
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx",
           static_cast<unsigned long long>(fnv1a64(body)));
  return body + " " + buf + "\n";
}

}  // namespace journal_detail

struct JournalState {
  std::map<int, std::string> accepted;  // cell index -> chain text
  bool done_marker = false;
  int discarded = 0;
};

inline JournalState load_journal(const std::filesystem::path& path, int degree) {
  JournalState st;
  std::ifstream is(path);
  if (!is) return st;
  std::string line;
  while (std::getline(is, line)) {
    size_t sp = line.rfind(' ');
    if (sp == std::string::npos || line.size() - sp - 1 != 16) {
      ++st.discarded;
      continue;
    }
    std::string body = line.substr(0, sp);
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
    if (line.substr(sp + 1) != buf) {
      ++st.discarded;
      continue;
    }
    std::istringstream bs(body);
    std::string tag;
    bs >> tag;
    if (tag == "R") {
      int deg, cell;
      bs >> deg >> cell;
      if (!bs || deg != degree || cell < 0) {
        ++st.discarded;
        continue;
      }
      std::string chain_text;
      bs >> chain_text;  // chain text has no spaces
      if (chain_text.empty() && !bs.eof()) {
        ++st.discarded;
        continue;
      }
      st.accepted.emplace(cell, chain_text);  // first record wins
    } else if (tag == "D") {
      int deg;
      size_t count;
      bs >> deg >> count;
      if (bs && deg == degree && count == st.accepted.size()) st.done_marker = true;
    } else {
      ++st.discarded;
    }
  }
  return st;
}

struct RunReport {
  int degree = 0;
  size_t total = 0;
  size_t resumed = 0;   // accepted from the journal
  size_t computed = 0;  // computed this run
  int discarded = 0;    // corrupted journal records dropped
};

using ProgressFn = std::function<void(size_t done, size_t total)>;

// Computes (or resumes) all differentials of `degree`. Lower degrees must be
// complete. Pass an empty journal_dir to run purely in memory.
inline RunReport run_degree(const GarsideStructure& st, DifferentialStore& store, int degree,
                            int workers, const std::filesystem::path& journal_dir = {},
                            HomotopyMemo* memo = nullptr, ProgressFn progress = {}) {
  if (degree < 1) throw error("run_degree: degree must be positive");
  for (int j = 1; j < degree; ++j)
    if (!store.degree_complete(j))
      throw error("run_degree: lower degree " + std::to_string(j) + " incomplete; refusing");
  ensure_cells(st, store, degree);
  const auto& cells = store.cells[degree];
  RunReport rep;
  rep.degree = degree;
  rep.total = cells.size();
  store.diff[degree].assign(cells.size(), Chain{});
  std::vector<char> have(cells.size(), 0);

  std::filesystem::path jpath;
  std::ofstream jout;
  if (!journal_dir.empty()) {
    std::filesystem::create_directories(journal_dir);
    jpath = journal_dir / ("deg" + std::to_string(degree) + ".journal");
    auto loaded = load_journal(jpath, degree);
    rep.discarded = loaded.discarded;
    for (auto& [cell, text] : loaded.accepted) {
      if (cell >= static_cast<int>(cells.size()))
        throw error("journal names cell " + std::to_string(cell) + " beyond this degree");
      Chain c = chain_deserialize(text);
      store.diff[degree][cell] = std::move(c);
      have[cell] = 1;
      ++rep.resumed;
    }
    jout.open(jpath, std::ios::app);
    if (!jout) throw error("cannot append to journal " + jpath.string());
  }

  std::vector<int> todo;
  for (size_t i = 0; i < cells.size(); ++i)
    if (!have[i]) todo.push_back(static_cast<int>(i));
  rep.computed = todo.size();

  if (!todo.empty()) {
    workers = std::max(1, workers);
    std::atomic<size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;
    std::deque<std::pair<int, Chain>> results;
    std::atomic<int> active{workers};
    std::exception_ptr first_error;

    auto work = [&]() {
      try {
        for (;;) {
          size_t k = next.fetch_add(1);
          if (k >= todo.size()) break;
          int cell_idx = todo[k];
          Chain d = cell_differential(st, store, cells[cell_idx], memo);
          {
            std::lock_guard<std::mutex> lock(mu);
            results.emplace_back(cell_idx, std::move(d));
          }
          cv.notify_one();
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
      }
      active.fetch_sub(1);
      cv.notify_one();
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);

    // single journal writer: this thread
    size_t done = rep.resumed;
    for (;;) {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return !results.empty() || active.load() == 0; });
      while (!results.empty()) {
        auto [idx, chain] = std::move(results.front());
        results.pop_front();
        lock.unlock();
        if (jout) {
          jout << journal_detail::record_line(degree, idx, chain_serialize(chain));
          jout.flush();
        }
        store.diff[degree][idx] = std::move(chain);
        have[idx] = 1;
        ++done;
        if (progress) progress(done, cells.size());
        lock.lock();
      }
      if (active.load() == 0 && results.empty()) break;
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (size_t i = 0; i < cells.size(); ++i)
    if (!have[i]) throw error("cell " + std::to_string(i) + " missing after run");
  if (jout) {
    jout << journal_detail::done_line(degree, cells.size());
    jout.flush();
  }
  store.complete[degree] = 1;
  store.provenance[degree] = "computed";
  return rep;
}

// Canonical serialization of one completed degree; identical for any worker
// count or resume history.
inline std::string serialize_degree(const DifferentialStore& store, int degree) {
  std::ostringstream os;
  for (size_t i = 0; i < store.diff[degree].size(); ++i)
    os << i << " " << chain_serialize(store.diff[degree][i]) << "\n";
  return os.str();
}

}  // namespace garside

#endif
