#pragma once

#include <optional>

#include "legmosaic/errors.hpp"

namespace legmosaic {

struct InvariantPair {
  long long tb = 0;
  long long rot = 0;
};

/// Lower bounds on the mosaic number of a Legendrian knot from its classical
/// invariants, and the constructive upper bound for unknots. Each bound is
/// present iff its hypothesis holds.
struct BoundReport {
  /// ceil(sqrt(4|rot| + tb)), defined when 4|rot| + tb >= 0. Comes from
  /// counting cusp against crossing tiles.
  std::optional<long long> lower_combinatorial;
  /// ceil(sqrt(-tb - 3/4) + 3/2), defined when tb < 0. Comes from the
  /// extremal contribution of boundary and inner-board tiles.
  std::optional<long long> lower_board;
  /// Cone bound i: same formula as lower_combinatorial, derived from the
  /// image of the nonnegative orthant under the tile-attribute matrix.
  std::optional<long long> lower_cone_rot;
  /// Cone bound ii: ceil(sqrt(-tb)), defined when tb <= 0.
  std::optional<long long> lower_cone_tb;
  long long best_lower = 1;
  /// Constructive upper bound, filled only for valid unknot pairs.
  std::optional<long long> upper_unknot;
};

/// Exact integer square-root helpers: no floating point anywhere near the
/// perfect-square boundary cases.
long long isqrt_floor(long long x);
long long isqrt_ceil(long long x);

/// Smallest integer >= sqrt(quarters/4) + 3/2, with the radicand given in
/// quarter units so values like 30.25 stay exact.
long long ceil_sqrt_quarters_plus_3_2(long long quarters);

BoundReport lower_bounds(const InvariantPair& inv);

/// True iff (tb, rot) is realised by some Legendrian unknot:
/// tb <= -1, tb + |rot| <= -1 and tb + rot odd.
bool is_unknot_pair(const InvariantPair& inv);

/// Upper bound on the mosaic number of the Legendrian unknot with these
/// invariants: ceil(sqrt(3|rot| - tb - 11/4) + 3/2) for rot != 0 and
/// ceil(sqrt(-tb + 5/4) + 3/2) for rot = 0. Throws NotAnUnknotPair.
long long unknot_upper_bound(const InvariantPair& inv);

/// Specialised bound for unknots on the outer boundary of the mountain range
/// (tb = -|rot| - 1): ceil(sqrt(-4 tb - 23/4) + 3/2). Throws NotAnUnknotPair
/// when the hypothesis fails.
long long unknot_upper_bound_extremal(const InvariantPair& inv);

/// tb of the n-th crab bucket: -(n-1)(n-2) for odd n, -n^2+3n+1 for even n.
/// Throws DomainError for n < 5.
long long crab_tb(int n);

}  // namespace legmosaic
