#include "legmosaic/topology.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "legmosaic/invariants.hpp"

namespace legmosaic {

HomflyPolynomial HomflyPolynomial::one() {
  HomflyPolynomial p;
  p.add(0, 0, 1);
  return p;
}

HomflyPolynomial HomflyPolynomial::unlink_factor() {
  HomflyPolynomial p;
  p.add(1, -1, 1);
  p.add(-1, -1, -1);
  return p;
}

void HomflyPolynomial::add(int a_exp, int z_exp, long long coeff) {
  if (coeff == 0) return;
  auto key = Monomial{a_exp, z_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

HomflyPolynomial& HomflyPolynomial::operator+=(const HomflyPolynomial& other) {
  for (const auto& [mono, c] : other.terms_) add(mono.first, mono.second, c);
  return *this;
}

HomflyPolynomial HomflyPolynomial::operator*(const HomflyPolynomial& other) const {
  HomflyPolynomial out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_)
      out.add(m1.first + m2.first, m1.second + m2.second, c1 * c2);
  return out;
}

HomflyPolynomial HomflyPolynomial::scaled(int a_exp, int z_exp,
                                          long long coeff) const {
  HomflyPolynomial out;
  for (const auto& [mono, c] : terms_)
    out.add(mono.first + a_exp, mono.second + z_exp, c * coeff);
  return out;
}

bool HomflyPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} &&
         terms_.begin()->second == 1;
}

HomflyPolynomial HomflyPolynomial::mirrored() const {
  HomflyPolynomial out;
  for (const auto& [mono, c] : terms_) out.add(-mono.first, mono.second, c);
  return out;
}

std::map<int, long long> HomflyPolynomial::conway() const {
  std::map<int, long long> out;
  for (const auto& [mono, c] : terms_) {
    out[mono.second] += c;
    if (out[mono.second] == 0) out.erase(mono.second);
  }
  return out;
}

long long HomflyPolynomial::determinant() const {
  long long value = 0;
  for (const auto& [z_exp, c] : conway()) {
    if (z_exp % 2 != 0)
      throw domain_error("DomainError",
                         "determinant requires even Conway powers (knots)");
    int k = z_exp / 2;
    long long pow = 1;
    for (int i = 0; i < k; ++i) pow *= -4;
    value += c * pow;
  }
  return value < 0 ? -value : value;
}

std::string HomflyPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Sort by a exponent descending, then z exponent descending.
  std::vector<std::pair<Monomial, long long>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.first.first != y.first.first) return x.first.first > y.first.first;
    return x.first.second > y.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : sorted) {
    long long coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    bool has_var = mono.first != 0 || mono.second != 0;
    if (coeff != 1 || !has_var) os << coeff;
    bool need_space = coeff != 1 && has_var;
    if (mono.first != 0) {
      if (need_space) os << " ";
      os << "a";
      if (mono.first != 1) os << "^" << mono.first;
      need_space = true;
    }
    if (mono.second != 0) {
      if (need_space) os << " ";
      os << "z";
      if (mono.second != 1) os << "^" << mono.second;
    }
  }
  return os.str();
}

int SkeinDiagram::crossing_count() const {
  int passes = 0;
  for (const auto& comp : components) passes += static_cast<int>(comp.size());
  return passes / 2;
}

namespace {

// Remove empty components, turning each into a free circle.
void normalize(SkeinDiagram& d) {
  auto it = std::remove_if(d.components.begin(), d.components.end(),
                           [&](const std::vector<Pass>& c) {
                             if (!c.empty()) return false;
                             ++d.free_loops;
                             return true;
                           });
  d.components.erase(it, d.components.end());
}

void erase_positions(std::vector<Pass>& comp, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end(), std::greater<int>());
  for (int p : positions) comp.erase(comp.begin() + p);
}

// Remove kinks: a crossing whose two passes are cyclically adjacent in one
// component contracts away. Returns true if anything changed.
bool reduce_kinks(SkeinDiagram& d) {
  bool changed = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& comp : d.components) {
      int len = static_cast<int>(comp.size());
      for (int p = 0; p < len; ++p) {
        int q = (p + 1) % len;
        if (len >= 2 && comp[p].crossing == comp[q].crossing) {
          erase_positions(comp, {p, q});
          progress = true;
          changed = true;
          break;
        }
      }
      if (progress) break;
    }
  }
  normalize(d);
  return changed;
}

struct PassLoc {
  int comp = -1;
  int pos = -1;
};

// Both passes of each live crossing.
std::unordered_map<int, std::pair<PassLoc, PassLoc>> locate_passes(
    const SkeinDiagram& d) {
  std::unordered_map<int, std::pair<PassLoc, PassLoc>> loc;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    for (int p = 0; p < static_cast<int>(d.components[c].size()); ++p) {
      int id = d.components[c][p].crossing;
      auto& entry = loc[id];
      if (entry.first.comp < 0)
        entry.first = {c, p};
      else
        entry.second = {c, p};
    }
  }
  return loc;
}

// Remove one poke: crossings c, d of opposite sign whose passes are adjacent
// on two strands, one strand over at both and the other under at both.
bool reduce_one_poke(SkeinDiagram& d) {
  for (int ci = 0; ci < static_cast<int>(d.components.size()); ++ci) {
    auto& comp = d.components[ci];
    int len = static_cast<int>(comp.size());
    for (int p = 0; p < len; ++p) {
      int q = (p + 1) % len;
      if (len < 2 || q == p) continue;
      const Pass& a = comp[p];
      const Pass& b = comp[q];
      if (a.crossing == b.crossing) continue;
      if (a.over != b.over) continue;
      if (d.signs[a.crossing] == d.signs[b.crossing]) continue;
      // Find the partner passes and check they are adjacent too.
      auto loc = locate_passes(d);
      auto [a1, a2] = loc[a.crossing];
      auto [b1, b2] = loc[b.crossing];
      PassLoc oa = (a1.comp == ci && a1.pos == p) ? a2 : a1;
      PassLoc ob = (b1.comp == ci && b1.pos == q) ? b2 : b1;
      if (oa.comp != ob.comp) continue;
      auto& other = d.components[oa.comp];
      int olen = static_cast<int>(other.size());
      bool adjacent = (ob.pos == (oa.pos + 1) % olen) ||
                      (oa.pos == (ob.pos + 1) % olen);
      if (!adjacent) continue;
      // Avoid degenerate overlap with the primary pair.
      if (oa.comp == ci && (oa.pos == p || oa.pos == q || ob.pos == p || ob.pos == q))
        continue;
      if (other[oa.pos].over != other[ob.pos].over) continue;
      if (other[oa.pos].over == a.over) continue;  // one strand over, one under
      if (oa.comp == ci) {
        erase_positions(comp, {p, q, oa.pos, ob.pos});
      } else {
        erase_positions(comp, {p, q});
        erase_positions(other, {oa.pos, ob.pos});
      }
      normalize(d);
      return true;
    }
  }
  return false;
}

void simplify(SkeinDiagram& d) {
  normalize(d);
  for (;;) {
    if (reduce_kinks(d)) continue;
    if (reduce_one_poke(d)) continue;
    break;
  }
}

// First under-first crossing along the fixed traversal, or (-1, -1).
std::pair<int, int> first_bad(const SkeinDiagram& d) {
  std::vector<char> seen(d.signs.size(), 0);
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    for (int p = 0; p < static_cast<int>(d.components[c].size()); ++p) {
      const Pass& pass = d.components[c][p];
      if (!seen[pass.crossing]) {
        if (!pass.over) return {c, p};
        seen[pass.crossing] = 1;
      }
    }
  }
  return {-1, -1};
}

std::string memo_key(const SkeinDiagram& d) {
  std::string key;
  key.reserve(64);
  key += std::to_string(d.free_loops);
  key += '|';
  std::unordered_map<int, int> relabel;
  for (const auto& comp : d.components) {
    key += '[';
    for (const Pass& p : comp) {
      auto [it, inserted] = relabel.emplace(p.crossing, (int)relabel.size());
      key += std::to_string(it->second);
      key += p.over ? 'o' : 'u';
      key += d.signs[p.crossing] > 0 ? '+' : '-';
    }
    key += ']';
  }
  return key;
}

HomflyPolynomial unlink_value(int circles) {
  HomflyPolynomial value = HomflyPolynomial::one();
  HomflyPolynomial delta = HomflyPolynomial::unlink_factor();
  for (int i = 1; i < circles; ++i) value = value * delta;
  return value;
}

HomflyPolynomial skein_eval(SkeinDiagram d,
                            std::unordered_map<std::string, HomflyPolynomial>& memo) {
  simplify(d);
  if (d.components.empty()) {
    return d.free_loops == 0 ? HomflyPolynomial::one()
                             : unlink_value(d.free_loops);
  }
  auto [comp, pos] = first_bad(d);
  if (comp < 0) {
    // Descending: every crossing is first met on its overstrand, so each
    // component lies above the later ones and is itself unknotted.
    return unlink_value(d.circle_count());
  }
  std::string key = memo_key(d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int crossing = d.components[comp][pos].crossing;
  int sign = d.signs[crossing];
  HomflyPolynomial switched = skein_eval(switch_crossing(d, crossing), memo);
  HomflyPolynomial smoothed = skein_eval(smooth_crossing(d, crossing), memo);
  HomflyPolynomial result;
  if (sign > 0) {
    // a P(D) = a^-1 P(switched) + z P(smoothed)
    result = switched.scaled(-2, 0, 1);
    result += smoothed.scaled(-1, 1, 1);
  } else {
    // -a^-1 P(D) = -a P(switched) + z P(smoothed)
    result = switched.scaled(2, 0, 1);
    result += smoothed.scaled(1, 1, -1);
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

SkeinDiagram switch_crossing(SkeinDiagram d, int crossing) {
  for (auto& comp : d.components)
    for (Pass& p : comp)
      if (p.crossing == crossing) p.over = !p.over;
  d.signs[crossing] = -d.signs[crossing];
  return d;
}

SkeinDiagram smooth_crossing(SkeinDiagram d, int crossing) {
  PassLoc first, second;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
    for (int p = 0; p < static_cast<int>(d.components[c].size()); ++p)
      if (d.components[c][p].crossing == crossing) {
        if (first.comp < 0)
          first = {c, p};
        else
          second = {c, p};
      }
  if (second.comp < 0)
    throw domain_error("DomainError", "crossing is not live in this diagram");

  auto segment = [](const std::vector<Pass>& comp, int from, int to) {
    // Passes strictly between positions from and to, cyclically.
    std::vector<Pass> out;
    int len = static_cast<int>(comp.size());
    for (int p = (from + 1) % len; p != to; p = (p + 1) % len)
      out.push_back(comp[p]);
    return out;
  };

  if (first.comp == second.comp) {
    const std::vector<Pass> comp = d.components[first.comp];
    std::vector<Pass> one = segment(comp, first.pos, second.pos);
    std::vector<Pass> two = segment(comp, second.pos, first.pos);
    d.components.erase(d.components.begin() + first.comp);
    d.components.push_back(std::move(one));
    d.components.push_back(std::move(two));
  } else {
    const std::vector<Pass> a = d.components[first.comp];
    const std::vector<Pass> b = d.components[second.comp];
    std::vector<Pass> merged = segment(a, first.pos, first.pos);
    std::vector<Pass> tail = segment(b, second.pos, second.pos);
    merged.insert(merged.end(), tail.begin(), tail.end());
    int hi = std::max(first.comp, second.comp);
    int lo = std::min(first.comp, second.comp);
    d.components.erase(d.components.begin() + hi);
    d.components.erase(d.components.begin() + lo);
    d.components.push_back(std::move(merged));
  }
  normalize(d);
  return d;
}

SkeinDiagram mirror_diagram(SkeinDiagram d) {
  for (auto& comp : d.components)
    for (Pass& p : comp) p.over = !p.over;
  for (int& s : d.signs) s = -s;
  return d;
}

HomflyPolynomial homfly_skein(const SkeinDiagram& d, int crossing_cap) {
  SkeinDiagram reduced = d;
  simplify(reduced);
  if (reduced.crossing_count() > crossing_cap)
    throw resource_error("ComplexityLimit",
                         "diagram has " + std::to_string(reduced.crossing_count()) +
                             " crossings after reduction (cap " +
                             std::to_string(crossing_cap) + ")");
  std::unordered_map<std::string, HomflyPolynomial> memo;
  return skein_eval(std::move(reduced), memo);
}

SkeinDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw domain_error("DomainError", "braid needs strands");
  // Threads indexed by starting position; pos[k] = thread currently there.
  std::vector<std::vector<Pass>> threads(strands);
  std::vector<int> pos(strands);
  for (int k = 0; k < strands; ++k) pos[k] = k;
  SkeinDiagram d;
  int crossing = 0;
  for (int letter : word) {
    int i = std::abs(letter) - 1;
    if (i < 0 || i + 1 >= strands)
      throw domain_error("DomainError", "braid letter out of range");
    bool positive = letter > 0;
    threads[pos[i]].push_back({crossing, positive});
    threads[pos[i + 1]].push_back({crossing, !positive});
    d.signs.push_back(positive ? +1 : -1);
    std::swap(pos[i], pos[i + 1]);
    ++crossing;
  }
  // Closure: the thread ending in position k feeds the thread that started
  // in position k.
  std::vector<int> next(strands);
  for (int k = 0; k < strands; ++k) next[pos[k]] = k;  // thread pos[k] ends at k
  std::vector<char> used(strands, 0);
  for (int start = 0; start < strands; ++start) {
    if (used[start]) continue;
    std::vector<Pass> comp;
    int t = start;
    do {
      used[t] = 1;
      comp.insert(comp.end(), threads[t].begin(), threads[t].end());
      t = next[t];
    } while (t != start);
    d.components.push_back(std::move(comp));
  }
  return d;
}

SkeinDiagram twist_knot_diagram(int n, int twist_sign, int clasp_sign) {
  if (n < 1) throw domain_error("DomainError", "twist region needs crossings");
  SkeinDiagram d;
  d.signs.assign(n + 2, 0);
  for (int i = 0; i < n; ++i) d.signs[i] = twist_sign;
  d.signs[n] = d.signs[n + 1] = clasp_sign;
  std::vector<int> order;
  for (int i = 0; i < n; ++i) order.push_back(i);
  order.push_back(n);
  order.push_back(n + 1);
  for (int i = n - 1; i >= 0; --i) order.push_back(i);
  if (n % 2 == 1) {
    order.push_back(n);
    order.push_back(n + 1);
  } else {
    order.push_back(n + 1);
    order.push_back(n);
  }
  std::vector<Pass> comp;
  for (int p = 0; p < static_cast<int>(order.size()); ++p)
    comp.push_back({order[p], p % 2 == 0});
  d.components.push_back(std::move(comp));
  return d;
}

std::array<int, 4> PdCrossing::cyclic_order() const {
  // Counterclockwise from the incoming understrand. For a positive crossing
  // the overstrand enters on the right of the understrand's travel direction,
  // i.e. counterclockwise order (under_in, over_out, under_out, over_in).
  if (sign > 0) return {under_in, over_out, under_out, over_in};
  return {under_in, over_in, under_out, over_out};
}

PlanarDiagram to_planar_diagram(const Mosaic& m) {
  OrientedMosaic om = orient(m);
  PlanarDiagram pd;

  // Crossing ids by T10 cell, plus both strand directions for the sign.
  std::map<std::pair<int, int>, int> crossing_id;
  std::map<std::pair<int, int>, std::array<std::pair<Edge, Edge>, 2>> dirs;
  for (const TraceCycle& cycle : om.components)
    for (const TraceStep& s : cycle)
      if (om.base.at(s.row, s.col) == Tile::T10) {
        auto cell = std::make_pair(s.row, s.col);
        if (!crossing_id.count(cell)) {
          int id = static_cast<int>(crossing_id.size());
          crossing_id[cell] = id;
        }
        dirs[cell][s.strand] = {s.entry, s.exit};
      }
  pd.crossings.resize(crossing_id.size());
  for (const auto& [cell, id] : crossing_id) {
    const auto& dd = dirs[cell];
    int ox = display_x(dd[0].second) - display_x(dd[0].first);
    int oy = display_y(dd[0].second) - display_y(dd[0].first);
    int ux = display_x(dd[1].second) - display_x(dd[1].first);
    int uy = display_y(dd[1].second) - display_y(dd[1].first);
    pd.crossings[id].sign = (ox * uy - oy * ux) > 0 ? +1 : -1;
  }

  for (const TraceCycle& cycle : om.components) {
    // Pass positions within the cycle.
    std::vector<std::pair<int, bool>> passes;  // (crossing id, over)
    for (const TraceStep& s : cycle)
      if (om.base.at(s.row, s.col) == Tile::T10)
        passes.emplace_back(crossing_id[{s.row, s.col}], s.strand == 0);
    std::vector<int> arcs;
    if (passes.empty()) {
      arcs.push_back(pd.arc_count++);
    } else {
      int count = static_cast<int>(passes.size());
      int base = pd.arc_count;
      pd.arc_count += count;
      for (int k = 0; k < count; ++k) {
        // Arc (base + k) runs from pass k to pass k+1.
        arcs.push_back(base + k);
        auto [id, over] = passes[k];
        int in_arc = base + (k + count - 1) % count;
        int out_arc = base + k;
        if (over) {
          pd.crossings[id].over_in = in_arc;
          pd.crossings[id].over_out = out_arc;
        } else {
          pd.crossings[id].under_in = in_arc;
          pd.crossings[id].under_out = out_arc;
        }
      }
    }
    pd.components.push_back(std::move(arcs));
  }
  return pd;
}

SkeinDiagram to_skein(const PlanarDiagram& pd) {
  SkeinDiagram d;
  d.signs.reserve(pd.crossings.size());
  for (const PdCrossing& c : pd.crossings) d.signs.push_back(c.sign);

  // (crossing, over) reached when entering through each arc.
  std::vector<std::pair<int, bool>> arc_head(pd.arc_count, {-1, false});
  for (int id = 0; id < static_cast<int>(pd.crossings.size()); ++id) {
    const PdCrossing& c = pd.crossings[id];
    if (c.under_in >= 0) arc_head[c.under_in] = {id, false};
    if (c.over_in >= 0) arc_head[c.over_in] = {id, true};
  }
  for (const auto& comp_arcs : pd.components) {
    std::vector<Pass> comp;
    for (int arc : comp_arcs) {
      auto [id, over] = arc_head[arc];
      if (id >= 0) comp.push_back({id, over});
    }
    if (comp.empty())
      ++d.free_loops;
    else
      d.components.push_back(std::move(comp));
  }
  return d;
}

HomflyPolynomial homfly(const PlanarDiagram& pd, int crossing_cap) {
  return homfly_skein(to_skein(pd), crossing_cap);
}

std::string identify_polynomial(const HomflyPolynomial& p) {
  for (const KnotTypeEntry& entry : knot_reference_table())
    if (entry.poly == p) return entry.name;
  return kUnknownType;
}

std::string identify(const Mosaic& m, int crossing_cap) {
  return identify_polynomial(homfly(to_planar_diagram(m), crossing_cap));
}

}  // namespace legmosaic
