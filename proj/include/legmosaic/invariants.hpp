#pragma once

#include <array>
#include <vector>

#include "legmosaic/tiles.hpp"

namespace legmosaic {

/// Exact half-integer, stored as its double.
struct Half {
  int twice = 0;
  bool is_integer() const { return twice % 2 == 0; }
  int as_integer() const { return twice / 2; }
  friend bool operator==(Half a, Half b) { return a.twice == b.twice; }
};

/// One traversal step: strand `strand` of cell (row, col) entered through
/// `entry` and left through `exit`.
struct TraceStep {
  int row = 0;
  int col = 0;
  int strand = 0;
  Edge entry = Edge::N;
  Edge exit = Edge::N;
};

using TraceCycle = std::vector<TraceStep>;

/// Decompose a suitably connected mosaic into closed strand cycles. Every
/// strand of every non-blank tile appears in exactly one cycle; the two
/// strands of a crossing may belong to different cycles. The blank mosaic
/// yields no cycles. Throws NotSuitablyConnected.
std::vector<TraceCycle> trace(const Mosaic& m);

/// A mosaic together with a direction for every strand, grouped by component.
struct OrientedMosaic {
  Mosaic base;
  std::vector<TraceCycle> components;
};

/// Orient a mosaic. `reverse[k]` flips the traversal direction of component k
/// (as produced by trace). `reverse` may be empty (all components as traced)
/// but otherwise must have one entry per component.
OrientedMosaic orient(const Mosaic& m, const std::vector<bool>& reverse = {});

struct LegendrianInvariants {
  int tb = 0;
  int rot = 0;
  int writhe = 0;
  int positive = 0;   // P
  int negative = 0;   // N
  int cusps = 0;      // C = U + D
  int up = 0;         // U
  int down = 0;       // D
  int components = 0;

  bool operator==(const LegendrianInvariants&) const = default;
};

LegendrianInvariants classical_invariants(const OrientedMosaic& om);

/// trace + orient with the as-traced orientation + classical_invariants.
LegendrianInvariants invariants_of(const Mosaic& m);

/// Attributes of one of the 25 oriented tiles.
struct OrientedTileAttributes {
  Tile base = Tile::T0;
  unsigned dir_bits = 0;  // bit k set: strand k runs b -> a
  Half tb_star;           // crossing sign minus half the cusp count
  Half rot_star;          // half of (down cusps - up cusps)
  int h = 0;              // net horizontal displacement, in half-diagonal units
  int v = 0;              // net vertical displacement
  int cusp_count = 0;     // 0, 1 or 2
  int crossing_sign = 0;  // -1, 0, +1
};

/// The fixed table of all 25 oriented tiles. Order: tiles by digit, then
/// direction bits ascending; index 0 is the blank.
const std::array<OrientedTileAttributes, 25>& oriented_tile_table();

/// Index into the oriented tile table.
int oriented_tile_id(Tile base, unsigned dir_bits);

/// Occurrence counts of each oriented tile (and each base tile) in an
/// oriented mosaic. Blanks are counted, so the total is rows*cols.
struct TileCountVector {
  std::array<long long, 25> oriented{};
  std::array<long long, kTileCount> per_tile{};
};

TileCountVector tile_counts(const OrientedMosaic& om);

/// The 5 x 25 matrix whose column i is (tb*, rot*, h, v, 1) of oriented tile
/// i, with every entry doubled so the matrix is integral.
using PMatrixDoubled = std::array<std::array<int, 25>, 5>;
const PMatrixDoubled& p_matrix_doubled();

/// P * c. For an oriented knot mosaic on an n x n grid this equals
/// (tb, rot, 0, 0, n^2).
std::array<Half, 5> p_matrix_product(const TileCountVector& counts);

/// Rank of the attribute matrix over the rationals (expected: 5).
int p_matrix_rank();

}  // namespace legmosaic
