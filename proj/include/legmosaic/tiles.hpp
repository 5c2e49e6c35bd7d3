#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "legmosaic/errors.hpp"

namespace legmosaic {

/// The ten tiles a Legendrian mosaic may contain. Each tile occupies one
/// grid cell; the whole grid is displayed rotated 45 degrees counterclockwise,
/// which turns the four grid edges into the four diagonal directions of the
/// front projection. T9 (the crossing whose displayed horizontal strand would
/// be on top) does not exist in this tile set: the strand of more negative
/// slope is always the overstrand, which is the T10 crossing.
enum class Tile : std::uint8_t {
  T0 = 0,  // blank
  T1,      // arc S-W   (displayed: lower horizontal strand)
  T2,      // arc S-E   (displayed: right cusp)
  T3,      // arc N-E   (displayed: upper horizontal strand)
  T4,      // arc N-W   (displayed: left cusp)
  T5,      // line E-W  (displayed: strand of slope -1)
  T6,      // line N-S  (displayed: strand of slope +1)
  T7,      // double arc N-E / S-W (two parallel horizontal strands)
  T8,      // double arc N-W / S-E (left cusp back to back with right cusp)
  T10,     // crossing: N-S strand over, E-W strand under
};

constexpr int kTileCount = 10;

/// Grid-edge directions of a cell. Row index grows downward, so N is toward
/// row i-1 and S toward row i+1.
enum class Edge : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

constexpr std::array<Edge, 4> kEdges = {Edge::N, Edge::E, Edge::S, Edge::W};

/// Displayed role of each grid edge after the 45-degree rotation, as a
/// half-unit coordinate of the edge midpoint relative to the tile center.
/// N -> upper-left, E -> upper-right, S -> lower-right, W -> lower-left.
/// Values are doubled so everything stays integral: x,y in {-1,+1}.
constexpr int display_x(Edge e) {
  return (e == Edge::E || e == Edge::S) ? +1 : -1;
}
constexpr int display_y(Edge e) {
  return (e == Edge::N || e == Edge::E) ? +1 : -1;
}

/// One strand of a tile: an unordered pair of distinct edges. Tiles own 0, 1
/// or 2 strands; for T10 the first strand (N-S) is the overstrand.
struct Strand {
  Edge a;
  Edge b;
};

/// Strands of a tile, in canonical order.
const std::vector<Strand>& tile_strands(Tile t);

/// True iff the tile has a connection point on the given edge.
bool connection_profile(Tile t, Edge e);

/// Number of connection points (0, 2 or 4).
int connection_count(Tile t);

/// Digit used by the string encoding ('9' stands for T10).
char tile_digit(Tile t);
Tile tile_from_digit(char c);  // throws InvalidCharacter

/// A rectangular grid of tiles. Cells are addressed (i, j) with 1-based row i
/// and column j; row 1 is the top row.
class Mosaic {
 public:
  Mosaic(int rows, int cols);  // all blank
  Mosaic(int rows, int cols, std::vector<Tile> cells);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Tile at(int i, int j) const { return cells_[index(i, j)]; }
  void set(int i, int j, Tile t) { cells_[index(i, j)] = t; }

  const std::vector<Tile>& cells() const { return cells_; }

  bool operator==(const Mosaic& other) const = default;

 private:
  int index(int i, int j) const;

  int rows_;
  int cols_;
  std::vector<Tile> cells_;
};

/// Digit-string form of a mosaic. Leading zeros are significant and the
/// string may exceed any machine-integer range, so it is never parsed as a
/// number.
struct MosaicEncoding {
  std::string digits;
  int rows = 0;
  int cols = 0;
};

/// Parse the canonical text format "<rows>x<cols>:<digits>". The dimension
/// prefix may be omitted for square mosaics (the side is inferred from the
/// length). Throws InvalidEncoding / LengthMismatch / InvalidCharacter.
MosaicEncoding parse_encoding(const std::string& text);

Mosaic decode(const MosaicEncoding& enc);
Mosaic decode(const std::string& text);
MosaicEncoding encode(const Mosaic& m);

/// Canonical text of an encoding: bare digits when square, otherwise the
/// "<rows>x<cols>:<digits>" form.
std::string encoding_text(const MosaicEncoding& enc);

/// True iff every interior edge is matched (both incident tiles agree on the
/// presence of a connection point) and no connection point lies on the outer
/// boundary.
bool is_suitably_connected(const Mosaic& m);

}  // namespace legmosaic
