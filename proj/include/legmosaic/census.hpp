#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "legmosaic/tiles.hpp"

namespace legmosaic {

/// One Legendrian knot found by the census: a smooth type with classical
/// invariants, the smallest square size realising it, and the witness.
/// rot is canonicalised to |rot|: a mosaic realises both signs (reverse the
/// orientation), so signed counts are derived, never stored twice.
struct CensusEntry {
  std::string type;
  int tb = 0;
  int rot = 0;  // >= 0
  int min_size = 0;
  std::string witness;       // lexicographically least encoding at min_size
  long long count_at_min = 0;  // mosaics of that size with this triple
};

struct CensusSizeSummary {
  int n = 0;
  long long knot_mosaics = 0;  // n x n mosaics depicting knots
  int max_tb = 0;
  int min_tb = 0;
  int max_abs_rot = 0;
  /// Distinct (type, tb, rot) triples realisable on a mosaic of size <= n,
  /// under both sign conventions for rot.
  long long triples_unsigned = 0;
  long long triples_signed = 0;
  std::vector<std::string> types;  // realisable smooth types, sorted
};

struct CensusResult {
  int max_size = 0;
  std::vector<CensusEntry> entries;  // sorted by type, tb desc, rot asc
  std::vector<CensusSizeSummary> summaries;
};

struct CensusOptions {
  int max_size = 5;
  int workers = 1;
  int crossing_cap = 24;
  long long max_cells = 25;  // enumeration budget; raise explicitly for 6
  std::string out_dir;       // when set, per-size shards for resuming
  bool resume = false;
  std::function<void(const std::string&)> progress;
};

CensusResult run_census(const CensusOptions& options);

/// A stabilisation whose target needs a strictly smaller mosaic than its
/// source: (tb, rot) -> (tb - 1, rot') with rot' = rot +- 1.
struct StabilizationAnomaly {
  std::string type;
  int source_tb = 0, source_rot = 0, source_size = 0;
  int target_tb = 0, target_rot = 0, target_size = 0;
};

std::vector<StabilizationAnomaly> stabilization_anomalies(const CensusResult& census);

/// Mountain-range table of one type: rows are tb descending, columns rot
/// ascending from 0. Cells hold the minimal size, a ">=k" lower bound for
/// triples inside the stabilisation cone that no searched size realised, and
/// are empty outside the cone. CSV text.
std::string mountain_range_csv(const CensusResult& census, const std::string& type);

}  // namespace legmosaic
