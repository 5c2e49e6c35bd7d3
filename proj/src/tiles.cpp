#include "legmosaic/tiles.hpp"

#include <cctype>
#include <cmath>

namespace legmosaic {

namespace {

int tile_index(Tile t) { return static_cast<int>(t); }

// Function-local statics throughout: these tables are consulted while other
// translation units build their own static tables, so construction must be
// on first use, not at load order.
const std::array<std::vector<Strand>, kTileCount>& strand_table() {
  static const std::array<std::vector<Strand>, kTileCount> table = {{
      /* T0  */ {},
      /* T1  */ {{Edge::S, Edge::W}},
      /* T2  */ {{Edge::S, Edge::E}},
      /* T3  */ {{Edge::N, Edge::E}},
      /* T4  */ {{Edge::N, Edge::W}},
      /* T5  */ {{Edge::E, Edge::W}},
      /* T6  */ {{Edge::N, Edge::S}},
      /* T7  */ {{Edge::N, Edge::E}, {Edge::S, Edge::W}},
      /* T8  */ {{Edge::N, Edge::W}, {Edge::S, Edge::E}},
      /* T10 */ {{Edge::N, Edge::S}, {Edge::E, Edge::W}},  // first strand over
  }};
  return table;
}

// profile[tile] bit k set iff the tile touches edge k
const std::array<std::uint8_t, kTileCount>& profile_table() {
  static const std::array<std::uint8_t, kTileCount> table = [] {
    std::array<std::uint8_t, kTileCount> p{};
    for (int t = 0; t < kTileCount; ++t) {
      for (const Strand& s : strand_table()[t]) {
        p[t] |= std::uint8_t(1u << static_cast<int>(s.a));
        p[t] |= std::uint8_t(1u << static_cast<int>(s.b));
      }
    }
    return p;
  }();
  return table;
}

constexpr char kDigits[kTileCount + 1] = "0123456789";

}  // namespace

const std::vector<Strand>& tile_strands(Tile t) {
  return strand_table()[tile_index(t)];
}

bool connection_profile(Tile t, Edge e) {
  return (profile_table()[tile_index(t)] >> static_cast<int>(e)) & 1u;
}

int connection_count(Tile t) {
  int n = 0;
  for (Edge e : kEdges) n += connection_profile(t, e) ? 1 : 0;
  return n;
}

char tile_digit(Tile t) { return kDigits[tile_index(t)]; }

Tile tile_from_digit(char c) {
  if (c < '0' || c > '9')
    throw domain_error("InvalidCharacter",
                       std::string("not a mosaic digit: '") + c + "'");
  return static_cast<Tile>(c - '0');
}

Mosaic::Mosaic(int rows, int cols)
    : rows_(rows), cols_(cols),
      cells_(static_cast<std::size_t>(rows) * cols, Tile::T0) {
  if (rows < 1 || cols < 1)
    throw domain_error("DomainError", "mosaic dimensions must be positive");
}

Mosaic::Mosaic(int rows, int cols, std::vector<Tile> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows < 1 || cols < 1)
    throw domain_error("DomainError", "mosaic dimensions must be positive");
  if (cells_.size() != static_cast<std::size_t>(rows) * cols)
    throw domain_error("LengthMismatch", "cell count does not match dimensions");
}

int Mosaic::index(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw domain_error("DomainError", "cell index out of range");
  return (i - 1) * cols_ + (j - 1);
}

MosaicEncoding parse_encoding(const std::string& text) {
  MosaicEncoding enc;
  auto colon = text.find(':');
  std::string digits;
  if (colon == std::string::npos) {
    digits = text;
    double side = std::sqrt(static_cast<double>(digits.size()));
    int n = static_cast<int>(std::lround(side));
    if (digits.empty() || static_cast<std::size_t>(n) * n != digits.size())
      throw domain_error("InvalidEncoding",
                         "length " + std::to_string(digits.size()) +
                             " is not a perfect square; use <rows>x<cols>:<digits>");
    enc.rows = enc.cols = n;
  } else {
    std::string dims = text.substr(0, colon);
    digits = text.substr(colon + 1);
    auto x = dims.find('x');
    if (x == std::string::npos)
      throw domain_error("InvalidEncoding", "expected <rows>x<cols>:<digits>");
    try {
      enc.rows = std::stoi(dims.substr(0, x));
      enc.cols = std::stoi(dims.substr(x + 1));
    } catch (const std::exception&) {
      throw domain_error("InvalidEncoding", "bad dimension prefix: " + dims);
    }
    if (enc.rows < 1 || enc.cols < 1)
      throw domain_error("InvalidEncoding", "dimensions must be positive");
    if (digits.size() != static_cast<std::size_t>(enc.rows) * enc.cols)
      throw domain_error("LengthMismatch",
                         "digit count " + std::to_string(digits.size()) +
                             " does not match " + std::to_string(enc.rows) + "x" +
                             std::to_string(enc.cols));
  }
  for (char c : digits)
    if (c < '0' || c > '9')
      throw domain_error("InvalidCharacter",
                         std::string("not a mosaic digit: '") + c + "'");
  enc.digits = digits;
  return enc;
}

Mosaic decode(const MosaicEncoding& enc) {
  if (enc.digits.size() != static_cast<std::size_t>(enc.rows) * enc.cols)
    throw domain_error("LengthMismatch", "digit count does not match dimensions");
  std::vector<Tile> cells;
  cells.reserve(enc.digits.size());
  for (char c : enc.digits) cells.push_back(tile_from_digit(c));
  return Mosaic(enc.rows, enc.cols, std::move(cells));
}

Mosaic decode(const std::string& text) { return decode(parse_encoding(text)); }

MosaicEncoding encode(const Mosaic& m) {
  MosaicEncoding enc;
  enc.rows = m.rows();
  enc.cols = m.cols();
  enc.digits.reserve(m.cells().size());
  for (Tile t : m.cells()) enc.digits.push_back(tile_digit(t));
  return enc;
}

std::string encoding_text(const MosaicEncoding& enc) {
  if (enc.rows == enc.cols) return enc.digits;
  return std::to_string(enc.rows) + "x" + std::to_string(enc.cols) + ":" +
         enc.digits;
}

bool is_suitably_connected(const Mosaic& m) {
  const int rows = m.rows(), cols = m.cols();
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      Tile t = m.at(i, j);
      // Boundary edges must carry no connection point (no loose ends).
      if (i == 1 && connection_profile(t, Edge::N)) return false;
      if (j == cols && connection_profile(t, Edge::E)) return false;
      if (i == rows && connection_profile(t, Edge::S)) return false;
      if (j == 1 && connection_profile(t, Edge::W)) return false;
      // Interior edges must be matched; checking S and E once per cell
      // covers every interior edge exactly once.
      if (i < rows && connection_profile(t, Edge::S) !=
                          connection_profile(m.at(i + 1, j), Edge::N))
        return false;
      if (j < cols && connection_profile(t, Edge::E) !=
                          connection_profile(m.at(i, j + 1), Edge::W))
        return false;
    }
  }
  return true;
}

}  // namespace legmosaic
