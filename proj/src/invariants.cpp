#include "legmosaic/invariants.hpp"

#include <algorithm>
#include <map>

namespace legmosaic {

namespace {

Edge opposite(Edge e) {
  switch (e) {
    case Edge::N: return Edge::S;
    case Edge::E: return Edge::W;
    case Edge::S: return Edge::N;
    case Edge::W: return Edge::E;
  }
  return Edge::N;
}

// Strand index of `t` having an endpoint on `e`, or -1.
int strand_at(Tile t, Edge e) {
  const auto& strands = tile_strands(t);
  for (int k = 0; k < static_cast<int>(strands.size()); ++k)
    if (strands[k].a == e || strands[k].b == e) return k;
  return -1;
}

struct StrandRef {
  int row, col, strand;
  bool operator<(const StrandRef& o) const {
    return std::tie(row, col, strand) < std::tie(o.row, o.col, o.strand);
  }
};

}  // namespace

std::vector<TraceCycle> trace(const Mosaic& m) {
  if (!is_suitably_connected(m))
    throw domain_error("NotSuitablyConnected",
                       "mosaic has mismatched or boundary connection points");

  std::map<StrandRef, bool> visited;
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      for (int k = 0; k < static_cast<int>(tile_strands(m.at(i, j)).size()); ++k)
        visited[{i, j, k}] = false;

  std::vector<TraceCycle> cycles;
  for (auto& [start, seen] : visited) {
    if (seen) continue;
    TraceCycle cycle;
    int row = start.row, col = start.col, strand = start.strand;
    // Enter the first strand through its canonical first endpoint.
    Edge entry = tile_strands(m.at(row, col))[strand].a;
    while (true) {
      auto it = visited.find({row, col, strand});
      if (it->second) break;
      it->second = true;
      const Strand& s = tile_strands(m.at(row, col))[strand];
      Edge exit = (s.a == entry) ? s.b : s.a;
      cycle.push_back({row, col, strand, entry, exit});
      // Cross the shared edge into the neighbouring tile.
      switch (exit) {
        case Edge::N: --row; break;
        case Edge::S: ++row; break;
        case Edge::E: ++col; break;
        case Edge::W: --col; break;
      }
      entry = opposite(exit);
      strand = strand_at(m.at(row, col), entry);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

OrientedMosaic orient(const Mosaic& m, const std::vector<bool>& reverse) {
  OrientedMosaic om{m, trace(m)};
  if (!reverse.empty() && reverse.size() != om.components.size())
    throw domain_error("DomainError",
                       "orientation flag count does not match component count");
  for (std::size_t k = 0; k < reverse.size(); ++k) {
    if (!reverse[k]) continue;
    auto& cycle = om.components[k];
    std::reverse(cycle.begin(), cycle.end());
    for (TraceStep& step : cycle) std::swap(step.entry, step.exit);
  }
  return om;
}

namespace {

struct StrandGeometry {
  int h;     // (x_exit - x_entry) / 2
  int v;     // (y_exit - y_entry) / 2
  bool cusp; // both endpoints on the same lateral side
};

StrandGeometry strand_geometry(Edge entry, Edge exit) {
  StrandGeometry g;
  g.h = (display_x(exit) - display_x(entry)) / 2;
  g.v = (display_y(exit) - display_y(entry)) / 2;
  g.cusp = display_x(entry) == display_x(exit);
  return g;
}

int crossing_sign_from_dirs(Edge over_entry, Edge over_exit, Edge under_entry,
                            Edge under_exit) {
  // Positive iff (over direction, under direction) is a positively oriented
  // basis of the displayed plane. This is the unique convention under which
  // crossings whose strands move in the same vertical sense come out
  // negative.
  int ox = display_x(over_exit) - display_x(over_entry);
  int oy = display_y(over_exit) - display_y(over_entry);
  int ux = display_x(under_exit) - display_x(under_entry);
  int uy = display_y(under_exit) - display_y(under_entry);
  int det = ox * uy - oy * ux;
  return det > 0 ? +1 : -1;
}

OrientedTileAttributes make_attributes(Tile base, unsigned dir_bits) {
  OrientedTileAttributes a;
  a.base = base;
  a.dir_bits = dir_bits;
  const auto& strands = tile_strands(base);
  std::vector<std::pair<Edge, Edge>> dirs;  // entry, exit per strand
  for (int k = 0; k < static_cast<int>(strands.size()); ++k) {
    bool rev = (dir_bits >> k) & 1u;
    Edge entry = rev ? strands[k].b : strands[k].a;
    Edge exit = rev ? strands[k].a : strands[k].b;
    dirs.emplace_back(entry, exit);
    StrandGeometry g = strand_geometry(entry, exit);
    a.h += g.h;
    a.v += g.v;
    if (g.cusp) {
      ++a.cusp_count;
      a.rot_star.twice += (g.v < 0) ? +1 : -1;  // down cusps count +1/2
    }
  }
  if (base == Tile::T10)
    a.crossing_sign = crossing_sign_from_dirs(dirs[0].first, dirs[0].second,
                                              dirs[1].first, dirs[1].second);
  a.tb_star.twice = 2 * a.crossing_sign - a.cusp_count;
  return a;
}

const std::array<int, kTileCount>& id_offsets() {
  static const std::array<int, kTileCount> offsets = [] {
    std::array<int, kTileCount> off{};
    int id = 0;
    for (int d = 0; d < kTileCount; ++d) {
      off[d] = id;
      id += 1 << tile_strands(static_cast<Tile>(d)).size();
    }
    return off;
  }();
  return offsets;
}

}  // namespace

const std::array<OrientedTileAttributes, 25>& oriented_tile_table() {
  static const std::array<OrientedTileAttributes, 25> table = [] {
    std::array<OrientedTileAttributes, 25> t;
    int id = 0;
    for (int d = 0; d < kTileCount; ++d) {
      Tile tile = static_cast<Tile>(d);
      unsigned combos = 1u << tile_strands(tile).size();
      for (unsigned bits = 0; bits < combos; ++bits)
        t[id++] = make_attributes(tile, bits);
    }
    return t;
  }();
  return table;
}

int oriented_tile_id(Tile base, unsigned dir_bits) {
  return id_offsets()[static_cast<int>(base)] + static_cast<int>(dir_bits);
}

namespace {

// Direction bits per cell, reconstructed from an orientation assignment.
std::vector<unsigned> cell_dir_bits(const OrientedMosaic& om) {
  std::vector<unsigned> bits(om.base.rows() * om.base.cols(), 0u);
  for (const TraceCycle& cycle : om.components) {
    for (const TraceStep& step : cycle) {
      const Strand& s = tile_strands(om.base.at(step.row, step.col))[step.strand];
      bool rev = (step.entry == s.b);
      if (rev)
        bits[(step.row - 1) * om.base.cols() + (step.col - 1)] |=
            (1u << step.strand);
    }
  }
  return bits;
}

}  // namespace

LegendrianInvariants classical_invariants(const OrientedMosaic& om) {
  LegendrianInvariants inv;
  inv.components = static_cast<int>(om.components.size());

  // Crossing signs need both strand directions of each T10 cell.
  std::map<std::pair<int, int>, std::array<std::pair<Edge, Edge>, 2>> crossings;
  for (const TraceCycle& cycle : om.components) {
    for (const TraceStep& step : cycle) {
      Tile t = om.base.at(step.row, step.col);
      StrandGeometry g = strand_geometry(step.entry, step.exit);
      if (g.cusp) {
        if (g.v > 0)
          ++inv.up;
        else
          ++inv.down;
      }
      if (t == Tile::T10)
        crossings[{step.row, step.col}][step.strand] = {step.entry, step.exit};
    }
  }
  for (const auto& [cell, dirs] : crossings) {
    int sign = crossing_sign_from_dirs(dirs[0].first, dirs[0].second,
                                       dirs[1].first, dirs[1].second);
    if (sign > 0)
      ++inv.positive;
    else
      ++inv.negative;
  }
  inv.cusps = inv.up + inv.down;
  inv.writhe = inv.positive - inv.negative;
  inv.tb = inv.writhe - inv.cusps / 2;
  inv.rot = (inv.down - inv.up) / 2;
  return inv;
}

LegendrianInvariants invariants_of(const Mosaic& m) {
  return classical_invariants(orient(m));
}

TileCountVector tile_counts(const OrientedMosaic& om) {
  TileCountVector counts;
  std::vector<unsigned> bits = cell_dir_bits(om);
  for (int i = 1; i <= om.base.rows(); ++i) {
    for (int j = 1; j <= om.base.cols(); ++j) {
      Tile t = om.base.at(i, j);
      unsigned b = bits[(i - 1) * om.base.cols() + (j - 1)];
      ++counts.oriented[oriented_tile_id(t, b)];
      ++counts.per_tile[static_cast<int>(t)];
    }
  }
  return counts;
}

const PMatrixDoubled& p_matrix_doubled() {
  static const PMatrixDoubled matrix = [] {
    PMatrixDoubled p{};
    for (int i = 0; i < 25; ++i) {
      const OrientedTileAttributes& a = oriented_tile_table()[i];
      p[0][i] = a.tb_star.twice;
      p[1][i] = a.rot_star.twice;
      p[2][i] = 2 * a.h;
      p[3][i] = 2 * a.v;
      p[4][i] = 2;
    }
    return p;
  }();
  return matrix;
}

std::array<Half, 5> p_matrix_product(const TileCountVector& counts) {
  const PMatrixDoubled& p = p_matrix_doubled();
  std::array<Half, 5> out{};
  for (int r = 0; r < 5; ++r) {
    long long acc = 0;
    for (int i = 0; i < 25; ++i) acc += static_cast<long long>(p[r][i]) * counts.oriented[i];
    out[r].twice = static_cast<int>(acc);
  }
  return out;
}

int p_matrix_rank() {
  // Fraction-free Gaussian elimination on the doubled (integer) matrix.
  const PMatrixDoubled& p = p_matrix_doubled();
  std::array<std::array<long long, 25>, 5> m{};
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 25; ++c) m[r][c] = p[r][c];
  int rank = 0;
  for (int col = 0; col < 25 && rank < 5; ++col) {
    int pivot = -1;
    for (int r = rank; r < 5; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < 5; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      long long a = m[rank][col], b = m[r][col];
      for (int c = 0; c < 25; ++c) m[r][c] = m[r][c] * a - m[rank][c] * b;
    }
    ++rank;
  }
  return rank;
}

}  // namespace legmosaic
