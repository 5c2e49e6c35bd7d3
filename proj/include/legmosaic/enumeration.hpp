#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "legmosaic/tiles.hpp"

namespace legmosaic {

enum class EnumFilter { all_links, knots_only };

struct EnumerationRequest {
  int rows = 0;
  int cols = 0;
  EnumFilter filter = EnumFilter::all_links;
  /// Optional worker partition: this worker handles the prefixes whose index
  /// is congruent to worker_index modulo worker_total.
  int worker_index = 0;
  int worker_total = 1;
  /// Cells scanned before the search space is split across workers. 0 picks a
  /// depth automatically (at least 4x the worker count in prefixes).
  int prefix_cells = 0;
  /// Resume support: prefixes with index <= resume_after are skipped.
  long long resume_after = -1;
  /// Maximum rows*cols accepted (BudgetExceeded beyond it).
  long long max_cells = 25;
};

/// Visitor for enumerated mosaics. `prefix_index` identifies the completed
/// search prefix (for checkpointing); return false to stop the enumeration.
using MosaicVisitor = std::function<bool(const Mosaic&)>;

/// Called after every completed prefix with its index.
using PrefixCheckpoint = std::function<void(long long prefix_index)>;

/// Emit every suitably connected rows x cols mosaic exactly once, in
/// lexicographic order of encodings (within one worker). Tiles are tried in
/// ascending digit order; a tile is rejected as soon as it contradicts the
/// upper neighbour's south edge, the left neighbour's east edge, or the outer
/// boundary. Returns the number of emitted mosaics.
long long enumerate(const EnumerationRequest& request, const MosaicVisitor& visit,
                    const PrefixCheckpoint& checkpoint = nullptr);

/// Count-only variant (parallel across the requested worker range is the
/// caller's business; this runs a single worker).
long long enumerate_count(const EnumerationRequest& request);

/// Multi-threaded count across all workers of the request.
long long enumerate_count_parallel(int rows, int cols, EnumFilter filter,
                                   int workers, long long max_cells = 64);

/// True iff the mosaic is non-blank and traces to exactly one component.
/// Throws NotSuitablyConnected.
bool is_knot(const Mosaic& m);

}  // namespace legmosaic
