#include "legmosaic/enumeration.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "legmosaic/invariants.hpp"

namespace legmosaic {

namespace {

struct Candidate {
  Tile tile;
  bool south;
  bool east;
};

// Candidate tiles for a cell, keyed by (required north bit, required west
// bit, south forced blank, east forced blank), in ascending digit order.
struct CandidateTable {
  std::vector<Candidate> lists[16];

  CandidateTable() {
    for (int key = 0; key < 16; ++key) {
      bool req_n = key & 1, req_w = key & 2, force_s0 = key & 4, force_e0 = key & 8;
      for (int d = 0; d < kTileCount; ++d) {
        Tile t = static_cast<Tile>(d);
        if (connection_profile(t, Edge::N) != req_n) continue;
        if (connection_profile(t, Edge::W) != req_w) continue;
        bool s = connection_profile(t, Edge::S);
        bool e = connection_profile(t, Edge::E);
        if (force_s0 && s) continue;
        if (force_e0 && e) continue;
        lists[key].push_back({t, s, e});
      }
    }
  }
};

const CandidateTable& candidates() {
  static const CandidateTable table;
  return table;
}

struct Search {
  int rows, cols, cells;
  EnumFilter filter;
  int prefix_cells;
  int worker_index, worker_total;
  long long resume_after;
  const MosaicVisitor* visit;
  const PrefixCheckpoint* checkpoint;

  std::vector<Tile> assignment;
  std::vector<bool> south;  // pending S bits of the row above, per column
  long long prefix_index = -1;
  long long emitted = 0;

  bool leaf() {
    Mosaic m(rows, cols, assignment);
    if (filter == EnumFilter::knots_only && !is_knot(m)) return true;
    ++emitted;
    return (*visit)(m);
  }

  // Returns false when the visitor asked to stop.
  bool descend(int idx, bool east_in) {
    if (idx != prefix_cells) return subtree(idx, east_in);
    ++prefix_index;
    if (prefix_index % worker_total != worker_index) return true;
    if (prefix_index <= resume_after) return true;
    bool keep_going = subtree(idx, east_in);
    if (keep_going && *checkpoint) (*checkpoint)(prefix_index);
    return keep_going;
  }

  bool subtree(int idx, bool east_in) {
    if (idx == cells) return leaf();
    int i = idx / cols, j = idx % cols;  // 0-based here
    int key = (i > 0 && south[j] ? 1 : 0) | (j > 0 && east_in ? 2 : 0) |
              (i == rows - 1 ? 4 : 0) | (j == cols - 1 ? 8 : 0);
    bool saved_south = south[j];
    for (const Candidate& c : candidates().lists[key]) {
      assignment[idx] = c.tile;
      south[j] = c.south;
      if (!descend(idx + 1, c.east)) {
        south[j] = saved_south;
        return false;
      }
    }
    south[j] = saved_south;
    return true;
  }
};

int auto_prefix_depth(int cells, int workers) {
  if (workers <= 1) return 0;
  int depth = static_cast<int>(std::ceil(std::log2(4.0 * workers))) + 2;
  return std::min(depth, cells / 2);
}

}  // namespace

long long enumerate(const EnumerationRequest& request, const MosaicVisitor& visit,
                    const PrefixCheckpoint& checkpoint) {
  if (request.rows < 1 || request.cols < 1)
    throw domain_error("DomainError", "mosaic dimensions must be positive");
  long long cells = static_cast<long long>(request.rows) * request.cols;
  if (cells > request.max_cells)
    throw resource_error("BudgetExceeded",
                         std::to_string(request.rows) + "x" +
                             std::to_string(request.cols) +
                             " exceeds the enumeration budget of " +
                             std::to_string(request.max_cells) + " cells");
  if (request.worker_total < 1 || request.worker_index < 0 ||
      request.worker_index >= request.worker_total)
    throw usage_error("DomainError", "invalid worker partition");

  Search s;
  s.rows = request.rows;
  s.cols = request.cols;
  s.cells = static_cast<int>(cells);
  s.filter = request.filter;
  s.prefix_cells = request.prefix_cells > 0
                       ? std::min(request.prefix_cells, s.cells)
                       : auto_prefix_depth(s.cells, request.worker_total);
  s.worker_index = request.worker_index;
  s.worker_total = request.worker_total;
  s.resume_after = request.resume_after;
  s.visit = &visit;
  s.checkpoint = &checkpoint;
  s.assignment.assign(s.cells, Tile::T0);
  s.south.assign(request.cols, false);
  if (s.prefix_cells == 0) {
    // Whole tree is one prefix; only worker 0 owns it.
    s.prefix_index = 0;
    if (request.worker_total > 1 && request.worker_index != 0) return 0;
    if (request.resume_after >= 0) return 0;
    s.prefix_cells = -1;  // never triggers again
  }
  s.descend(0, false);
  return s.emitted;
}

long long enumerate_count(const EnumerationRequest& request) {
  return enumerate(request, [](const Mosaic&) { return true; });
}

long long enumerate_count_parallel(int rows, int cols, EnumFilter filter,
                                   int workers, long long max_cells) {
  if (workers < 1) workers = 1;
  std::atomic<long long> total{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        EnumerationRequest req;
        req.rows = rows;
        req.cols = cols;
        req.filter = filter;
        req.worker_index = w;
        req.worker_total = workers;
        req.max_cells = max_cells;
        total += enumerate_count(req);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return total.load();
}

bool is_knot(const Mosaic& m) {
  return trace(m).size() == 1;
}

}  // namespace legmosaic
