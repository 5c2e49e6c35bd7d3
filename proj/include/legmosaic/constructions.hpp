#pragma once

#include <vector>

#include "legmosaic/tiles.hpp"

namespace legmosaic {

/// A barn tile of the default configuration, identified by the top-left cell
/// (i, j) of the 2x2 block of mosaic tiles it is inscribed in. In the rotated
/// display the block's four tiles sit left (i,j), top (i,j+1), bottom
/// (i+1,j) and right (i+1,j+1) around the barn square.
struct BarnTile {
  int i = 0;
  int j = 0;
  bool operator==(const BarnTile&) const = default;
};

/// Default barn configuration of an n-mosaic: the blocks with i + j = n + 1
/// (mod 2), arranged in n-2 display rows; the corner tile (1, n) lies in no
/// barn tile. Rows are listed top to bottom, barns left to right.
std::vector<std::vector<BarnTile>> default_barn_rows(int n);

/// Display row (j - i) of the soil row for an n-mosaic soil setup.
int soil_row_display_y(int n);

/// Which existing strand a move grabs: from_below requires the relevant
/// bottom tile to carry the lower arc (T1), from_above the upper arc (T3).
enum class MoveReflection { from_below, from_above };

/// Which barn of a fish pair holds the anchoring strand tile.
enum class FishAnchor { left, right };

/// The seeded unknot configuration: cusps at the ends of the main diagonal,
/// arcs along it, and the n-2-i diagonal cells filled with crossings except
/// for `t7_count` double-arc tiles placed leftmost (i is the parity offset,
/// 0 for odd n and 1 for even n). Accepts n >= 3. The depicted unknot has
/// tb = -(#crossings) - 1 and rot = 0 iff the crossing count is even.
Mosaic soil_setup(int n, int t7_count);

/// Fill one empty barn tile with a two-cusp lobe hanging off the strand
/// beneath (or above) it. tb drops by 2, rot is unchanged.
/// Throws OccupiedBarnTile / MoveHypothesisViolated.
Mosaic apply_kraken(const Mosaic& m, BarnTile barn, MoveReflection reflection);

/// Fill two horizontally adjacent empty barn tiles with a kinked lobe: one
/// positive and one negative trivial crossing plus two cusps of equal
/// orientation. tb drops by 1, |rot| changes by 1. `left_barn` is the left
/// member of the pair. Throws OccupiedBarnTile / MoveHypothesisViolated.
Mosaic apply_fish(const Mosaic& m, BarnTile left_barn, MoveReflection reflection,
                  FishAnchor anchor);

/// The n-th crab bucket: the densest nonadjacent crossing lattice on the
/// inner board, double arcs elsewhere, and the unique boundary closure.
/// Suitably connected single-component mosaic with tb = crab_tb(n) and
/// |rot| = 1. Throws DomainError for n < 5.
Mosaic crab_bucket(int n);

/// Construct a mosaic of the Legendrian unknot with the requested classical
/// invariants (rot is matched up to sign; reverse the orientation for the
/// other sign). The mosaic has size unknot_upper_bound(tb, rot) whenever the
/// soil-and-moves machinery fits at that size; the rare capacity shortfalls
/// escalate to the next size. Throws NotAnUnknotPair.
Mosaic build_unknot(long long tb, long long rot);

}  // namespace legmosaic
