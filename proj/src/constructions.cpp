#include "legmosaic/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <map>

#include "legmosaic/bounds.hpp"
#include "legmosaic/enumeration.hpp"
#include "legmosaic/invariants.hpp"

namespace legmosaic {

namespace {

// Union of the strand sets of two tiles, when the union is again a tile.
// Moves overlap on cells shared with their neighbours: a lobe strand may run
// through a tile that already carries one (arc pairs T1+T3 = T7), and the
// end cusps of side-by-side moves meet back to back (T2+T4 = T8).
Tile overlay(Tile base, Tile added) {
  if (base == Tile::T0) return added;
  if ((base == Tile::T1 && added == Tile::T3) ||
      (base == Tile::T3 && added == Tile::T1))
    return Tile::T7;
  if ((base == Tile::T2 && added == Tile::T4) ||
      (base == Tile::T4 && added == Tile::T2))
    return Tile::T8;
  throw domain_error("OccupiedBarnTile",
                     "cannot overlay strands onto an occupied tile");
}

void require_empty(const Mosaic& m, int i, int j) {
  if (m.at(i, j) != Tile::T0)
    throw domain_error("OccupiedBarnTile",
                       "barn cell (" + std::to_string(i) + "," +
                           std::to_string(j) + ") is occupied");
}

void require_tile(const Mosaic& m, int i, int j, Tile t) {
  if (m.at(i, j) != t)
    throw domain_error("MoveHypothesisViolated",
                       "cell (" + std::to_string(i) + "," + std::to_string(j) +
                           ") does not carry the anchoring strand");
}

void require_block_range(const Mosaic& m, int i, int j, int di, int dj) {
  if (i < 1 || j < 1 || i + di > m.rows() || j + dj > m.cols())
    throw domain_error("DomainError", "barn tile outside the mosaic");
}

}  // namespace

std::vector<std::vector<BarnTile>> default_barn_rows(int n) {
  if (n < 2) throw domain_error("DomainError", "no barn tiles below size 2");
  // Blocks B(i,j) with i + j = n + 1 (mod 2), grouped by display row j - i,
  // top row first.
  std::map<int, std::vector<BarnTile>, std::greater<int>> rows;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if ((i + j) % 2 == (n + 1) % 2) rows[j - i].push_back({i, j});
  std::vector<std::vector<BarnTile>> out;
  for (auto& [y, row] : rows) {
    std::sort(row.begin(), row.end(),
              [](const BarnTile& a, const BarnTile& b) { return a.i + a.j < b.i + b.j; });
    out.push_back(std::move(row));
  }
  return out;
}

int soil_row_display_y(int n) { return n % 2 == 0 ? 1 : 0; }

Mosaic soil_setup(int n, int t7_count) {
  if (n < 3) throw domain_error("DomainError", "soil setup needs size >= 3");
  const int i0 = n % 2 == 0 ? 1 : 0;  // parity offset
  const int diagonal_cells = n - 2 - i0;
  if (t7_count < 0 || t7_count > diagonal_cells)
    throw domain_error("DomainError",
                       "double-arc count must lie in [0, " +
                           std::to_string(diagonal_cells) + "]");
  Mosaic m(n, n);
  m.set(1, 1 + i0, Tile::T2);
  m.set(n - i0, n, Tile::T4);
  for (int r = 1; r <= n - 1 - i0; ++r) m.set(r, r + 1 + i0, Tile::T1);
  for (int r = 2; r <= n - i0; ++r) m.set(r, r - 1 + i0, Tile::T3);
  // Double arcs occupy the rightmost diagonal cells: this keeps the strand
  // direction through the left part of the zigzag uniform, so lobes stacked
  // there inherit the edge cusps' orientation.
  for (int d = 0; d < diagonal_cells; ++d)
    m.set(2 + d, 2 + d + i0,
          d >= diagonal_cells - t7_count ? Tile::T7 : Tile::T10);
  return m;
}

Mosaic apply_kraken(const Mosaic& m, BarnTile barn, MoveReflection reflection) {
  require_block_range(m, barn.i, barn.j, 1, 1);
  Mosaic out = m;
  const int i = barn.i, j = barn.j;
  // Block cells: left (i,j), top (i,j+1), bottom (i+1,j), right (i+1,j+1).
  if (reflection == MoveReflection::from_below) {
    require_tile(m, i + 1, j, Tile::T1);
    out.set(i + 1, j, Tile::T8);
    out.set(i, j, overlay(m.at(i, j), Tile::T2));
    out.set(i, j + 1, overlay(m.at(i, j + 1), Tile::T1));
    out.set(i + 1, j + 1, overlay(m.at(i + 1, j + 1), Tile::T4));
  } else {
    require_tile(m, i, j + 1, Tile::T3);
    out.set(i, j + 1, Tile::T8);
    out.set(i, j, overlay(m.at(i, j), Tile::T2));
    out.set(i + 1, j, overlay(m.at(i + 1, j), Tile::T3));
    out.set(i + 1, j + 1, overlay(m.at(i + 1, j + 1), Tile::T4));
  }
  return out;
}

Mosaic apply_fish(const Mosaic& m, BarnTile left_barn, MoveReflection reflection,
                  FishAnchor anchor) {
  const int i = left_barn.i, j = left_barn.j;
  require_block_range(m, i, j, 2, 2);
  // Cells of the pair (left barn B(i,j), right barn B(i+1,j+1)):
  //   l=(i,j)  t1=(i,j+1)  b1=(i+1,j)  m=(i+1,j+1)  t2=(i+1,j+2)
  //   b2=(i+2,j+1)  r=(i+2,j+2)
  Mosaic out = m;
  require_empty(m, i + 1, j + 1);
  out.set(i, j, overlay(m.at(i, j), Tile::T2));
  out.set(i + 1, j + 1, Tile::T10);
  out.set(i + 2, j + 2, overlay(m.at(i + 2, j + 2), Tile::T4));
  if (reflection == MoveReflection::from_below) {
    out.set(i, j + 1, overlay(m.at(i, j + 1), Tile::T1));
    out.set(i + 1, j + 2, overlay(m.at(i + 1, j + 2), Tile::T1));
    if (anchor == FishAnchor::left) {
      require_tile(m, i + 1, j, Tile::T1);
      out.set(i + 1, j, Tile::T10);
      out.set(i + 2, j + 1, overlay(m.at(i + 2, j + 1), Tile::T3));
    } else {
      require_tile(m, i + 2, j + 1, Tile::T1);
      out.set(i + 2, j + 1, Tile::T10);
      out.set(i + 1, j, overlay(m.at(i + 1, j), Tile::T3));
    }
  } else {
    out.set(i + 1, j, overlay(m.at(i + 1, j), Tile::T3));
    out.set(i + 2, j + 1, overlay(m.at(i + 2, j + 1), Tile::T3));
    if (anchor == FishAnchor::left) {
      require_tile(m, i, j + 1, Tile::T3);
      out.set(i, j + 1, Tile::T10);
      out.set(i + 1, j + 2, overlay(m.at(i + 1, j + 2), Tile::T1));
    } else {
      require_tile(m, i + 1, j + 2, Tile::T3);
      out.set(i + 1, j + 2, Tile::T10);
      out.set(i, j + 1, overlay(m.at(i, j + 1), Tile::T1));
    }
  }
  return out;
}

namespace {

// Complete the free cells of a partially fixed mosaic into suitably
// connected fillings, trying non-crossing tiles in digit order. Cells whose
// index in `free_cells` is >= `idx` are undecided; consistency is only
// enforced against decided neighbours, and the full validity check at the
// leaves settles the rest. Stops once `limit` completions are found.
void complete_boundary(Mosaic& m, const std::vector<std::pair<int, int>>& free_cells,
                       std::size_t idx, std::vector<Mosaic>& found,
                       std::size_t limit) {
  if (found.size() >= limit) return;
  if (idx == free_cells.size()) {
    if (is_suitably_connected(m)) found.push_back(m);
    return;
  }
  auto [i, j] = free_cells[idx];
  auto undecided = [&](int a, int b) {
    for (std::size_t k = idx + 1; k < free_cells.size(); ++k)
      if (free_cells[k] == std::make_pair(a, b)) return true;
    return false;
  };
  auto consistent = [&](Tile t) {
    if (i == 1 && connection_profile(t, Edge::N)) return false;
    if (i == m.rows() && connection_profile(t, Edge::S)) return false;
    if (j == 1 && connection_profile(t, Edge::W)) return false;
    if (j == m.cols() && connection_profile(t, Edge::E)) return false;
    if (i > 1 && !undecided(i - 1, j) &&
        connection_profile(t, Edge::N) != connection_profile(m.at(i - 1, j), Edge::S))
      return false;
    if (j > 1 && !undecided(i, j - 1) &&
        connection_profile(t, Edge::W) != connection_profile(m.at(i, j - 1), Edge::E))
      return false;
    if (i < m.rows() && !undecided(i + 1, j) &&
        connection_profile(t, Edge::S) != connection_profile(m.at(i + 1, j), Edge::N))
      return false;
    if (j < m.cols() && !undecided(i, j + 1) &&
        connection_profile(t, Edge::E) != connection_profile(m.at(i, j + 1), Edge::W))
      return false;
    return true;
  };
  static const Tile options[] = {Tile::T0, Tile::T1, Tile::T2, Tile::T3,
                                 Tile::T4, Tile::T5, Tile::T6, Tile::T7,
                                 Tile::T8};
  for (Tile t : options) {
    if (!consistent(t)) continue;
    m.set(i, j, t);
    complete_boundary(m, free_cells, idx + 1, found, limit);
    m.set(i, j, Tile::T0);
    if (found.size() >= limit) return;
  }
}

}  // namespace

Mosaic crab_bucket(int n) {
  if (n < 5) throw domain_error("DomainError", "crab buckets start at n = 5");
  Mosaic m(n, n);
  // Nonadjacent crossing lattice seeded at (2,2).
  for (int i = 2; i <= n - 1; ++i)
    for (int j = 2; j <= n - 1; ++j)
      if ((i + j) % 2 == 0) m.set(i, j, Tile::T10);
  if (n % 2 == 0) {
    m.set(2, n - 1, Tile::T1);
    m.set(n - 1, 2, Tile::T3);
  }
  for (int i = 2; i <= n - 1; ++i)
    for (int j = 2; j <= n - 1; ++j)
      if (m.at(i, j) == Tile::T0) m.set(i, j, Tile::T8);

  std::vector<std::pair<int, int>> ring;
  for (int j = 1; j <= n; ++j) ring.emplace_back(1, j);
  for (int i = 2; i <= n - 1; ++i) {
    ring.emplace_back(i, 1);
    ring.emplace_back(i, n);
  }
  for (int j = 1; j <= n; ++j) ring.emplace_back(n, j);

  std::vector<Mosaic> completions;
  complete_boundary(m, ring, 0, completions, 16);
  std::vector<Mosaic> knots;
  for (const Mosaic& c : completions)
    if (is_knot(c)) knots.push_back(c);
  if (knots.size() != 1)
    throw domain_error("DomainError",
                       "boundary closure to a knot is not unique for n = " +
                           std::to_string(n));
  return knots.front();
}

namespace {

struct MovePlacement {
  bool fish = false;
  BarnTile barn;          // fish: left member of the pair
  MoveReflection reflection = MoveReflection::from_below;
  FishAnchor anchor = FishAnchor::left;
};

// Rows of empty barn tiles in placement order: rows above the soil going up,
// then rows below the soil going down. Moves above the soil grab the strand
// below them, moves beneath it the strand above.
struct PlacementSpace {
  std::vector<std::pair<std::vector<BarnTile>, MoveReflection>> rows;
  int capacity = 0;
};

PlacementSpace placement_space(int n) {
  PlacementSpace space;
  auto rows = default_barn_rows(n);
  int soil_y = soil_row_display_y(n);
  auto display_y = [](const BarnTile& b) { return b.j - b.i; };
  // default_barn_rows lists rows top to bottom.
  std::vector<std::vector<BarnTile>> above, below;
  for (auto& row : rows) {
    int y = display_y(row.front());
    if (y > soil_y)
      above.push_back(row);
    else if (y < soil_y)
      below.push_back(row);
  }
  // Above rows bottom-up: reverse of top-to-bottom order.
  for (auto it = above.rbegin(); it != above.rend(); ++it)
    space.rows.emplace_back(*it, MoveReflection::from_below);
  for (auto& row : below) space.rows.emplace_back(row, MoveReflection::from_above);
  for (auto& [row, refl] : space.rows) space.capacity += static_cast<int>(row.size());
  return space;
}

struct UnknotPlan {
  int n = 0;
  int t7 = 0;
  long long fish = 0;
  long long kraken = 0;
  bool feasible = false;
};

UnknotPlan plan_unknot(long long tb, long long abs_rot, int n) {
  UnknotPlan plan;
  plan.n = n;
  const int i0 = n % 2 == 0 ? 1 : 0;
  const long long s_max = n - 2 - i0;
  const long long capacity =
      n % 2 == 1 ? (long long)(n - 1) * (n - 3) / 2 : (long long)(n - 2) * (n - 2) / 2;
  long long soil_crossings;
  if (abs_rot != 0) {
    plan.fish = abs_rot - 1;
    long long target = -(tb + abs_rot);  // 2k + soil crossings, odd and >= 1
    if (target < 1 || s_max < 1) return plan;
    if (target >= s_max) {
      soil_crossings = s_max;  // s_max is odd
      plan.kraken = (target - s_max) / 2;
    } else {
      soil_crossings = target;
      plan.kraken = 0;
    }
  } else {
    plan.fish = 0;
    soil_crossings = s_max - 1;  // even: one double arc in the soil
    plan.kraken = (-tb - 1 - soil_crossings) / 2;
    while (plan.kraken < 0 && soil_crossings >= 2) {
      soil_crossings -= 2;
      plan.kraken = (-tb - 1 - soil_crossings) / 2;
    }
    if (plan.kraken < 0) return plan;
  }
  plan.t7 = static_cast<int>(s_max - soil_crossings);
  plan.feasible = 2 * plan.fish + plan.kraken <= capacity;
  return plan;
}

}  // namespace

namespace {

// One size attempt: soil, then fish whose measured rot step matches the
// soil's cusp orientation, then krakens. Every placement is validated by the
// invariant deltas it must produce, so a wrongly reflected variant can never
// slip through; placements that cannot align are skipped and may exhaust the
// size, in which case the caller escalates.
std::optional<Mosaic> try_build_unknot(long long tb, long long abs_rot, int n) {
  UnknotPlan plan = plan_unknot(tb, abs_rot, n);
  if (!plan.feasible) return std::nullopt;

  Mosaic m = soil_setup(n, plan.t7);
  LegendrianInvariants current = invariants_of(m);
  PlacementSpace space = placement_space(n);
  std::vector<std::vector<bool>> used(space.rows.size());
  for (std::size_t r = 0; r < space.rows.size(); ++r)
    used[r].assign(space.rows[r].first.size(), false);

  auto try_apply = [&](const Mosaic& candidate, int dtb, int drot_abs) {
    LegendrianInvariants inv = invariants_of(candidate);
    if (inv.components != 1) return false;
    if (inv.tb != current.tb + dtb) return false;
    if (std::abs(inv.rot) != std::abs(current.rot) + drot_abs) return false;
    current = inv;
    return true;
  };

  for (long long f = 0; f < plan.fish; ++f) {
    bool placed = false;
    for (std::size_t r = 0; r < space.rows.size() && !placed; ++r) {
      auto& [row, refl] = space.rows[r];
      for (std::size_t p = 0; p + 1 < row.size() && !placed; ++p) {
        if (used[r][p] || used[r][p + 1]) continue;
        for (MoveReflection reflection :
             {refl, refl == MoveReflection::from_below ? MoveReflection::from_above
                                                       : MoveReflection::from_below}) {
          for (FishAnchor anchor : {FishAnchor::left, FishAnchor::right}) {
            Mosaic candidate = m;
            try {
              candidate = apply_fish(m, row[p], reflection, anchor);
            } catch (const Error&) {
              continue;
            }
            if (!try_apply(candidate, -1, +1)) continue;
            m = std::move(candidate);
            used[r][p] = used[r][p + 1] = true;
            placed = true;
            break;
          }
          if (placed) break;
        }
      }
    }
    if (!placed) return std::nullopt;
  }

  for (long long k = 0; k < plan.kraken; ++k) {
    bool placed = false;
    for (std::size_t r = 0; r < space.rows.size() && !placed; ++r) {
      auto& [row, refl] = space.rows[r];
      for (std::size_t p = 0; p < row.size() && !placed; ++p) {
        if (used[r][p]) continue;
        for (MoveReflection reflection :
             {refl, refl == MoveReflection::from_below ? MoveReflection::from_above
                                                       : MoveReflection::from_below}) {
          Mosaic candidate = m;
          try {
            candidate = apply_kraken(m, row[p], reflection);
          } catch (const Error&) {
            continue;
          }
          if (!try_apply(candidate, -2, 0)) continue;
          m = std::move(candidate);
          used[r][p] = true;
          placed = true;
          break;
        }
      }
    }
    if (!placed) return std::nullopt;
  }

  if (current.tb != tb || std::abs(current.rot) != abs_rot) return std::nullopt;
  return m;
}

}  // namespace

Mosaic build_unknot(long long tb, long long rot) {
  InvariantPair inv{tb, rot};
  if (!is_unknot_pair(inv))
    throw domain_error("NotAnUnknotPair",
                       "(" + std::to_string(tb) + ", " + std::to_string(rot) +
                           ") is not realised by a Legendrian unknot");
  long long abs_rot = rot < 0 ? -rot : rot;
  int n = static_cast<int>(unknot_upper_bound(inv));
  for (int size = n; size <= n + 6; ++size) {
    if (auto m = try_build_unknot(tb, abs_rot, size)) return *m;
  }
  throw domain_error("DomainError", "no feasible move plan found");
}

}  // namespace legmosaic
