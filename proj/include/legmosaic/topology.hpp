#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "legmosaic/tiles.hpp"

namespace legmosaic {

/// Laurent polynomial in (a, z) with integer coefficients, the value of the
/// skein invariant defined by  a P(L+) - a^-1 P(L-) = z P(L0),  P(unknot) = 1.
/// A k-component unlink evaluates to ((a - a^-1)/z)^(k-1), so negative z
/// powers occur for split links.
class HomflyPolynomial {
 public:
  using Monomial = std::pair<int, int>;  // (a exponent, z exponent)

  static HomflyPolynomial zero() { return {}; }
  static HomflyPolynomial one();
  /// The unlink factor (a - a^-1) / z.
  static HomflyPolynomial unlink_factor();

  void add(int a_exp, int z_exp, long long coeff);
  HomflyPolynomial& operator+=(const HomflyPolynomial& other);
  HomflyPolynomial operator*(const HomflyPolynomial& other) const;
  /// Multiply by coeff * a^ae * z^ze.
  HomflyPolynomial scaled(int a_exp, int z_exp, long long coeff) const;

  bool operator==(const HomflyPolynomial& other) const {
    return terms_ == other.terms_;
  }
  bool is_one() const;

  /// Substitute a -> a^-1 (the polynomial of the mirror link).
  HomflyPolynomial mirrored() const;

  /// Specialisation a := 1, i.e. the Conway polynomial; keys are z exponents.
  std::map<int, long long> conway() const;

  /// |Conway at z^2 = -4| (the knot determinant). Requires even z powers.
  long long determinant() const;

  /// Canonical text: terms sorted by a exponent descending then z exponent
  /// descending, e.g. "-a^4 + 2 a^2 + a^2 z^2".
  std::string to_string() const;

  const std::map<Monomial, long long>& terms() const { return terms_; }

 private:
  std::map<Monomial, long long> terms_;
};

/// Crossing-level diagram used by the skein evaluator: each component is the
/// cyclic sequence of its crossing passes. A crossing appears in exactly two
/// passes, once over and once under.
struct Pass {
  int crossing = 0;
  bool over = false;
  bool operator==(const Pass&) const = default;
};

struct SkeinDiagram {
  std::vector<std::vector<Pass>> components;
  std::vector<int> signs;  // indexed by crossing id; entries of dead ids stay
  int free_loops = 0;      // crossing-free circles

  int crossing_count() const;
  int circle_count() const {
    return free_loops + static_cast<int>(components.size());
  }
};

/// Structural skein operations (exposed for the fixture suites).
SkeinDiagram switch_crossing(SkeinDiagram d, int crossing);
SkeinDiagram smooth_crossing(SkeinDiagram d, int crossing);
SkeinDiagram mirror_diagram(SkeinDiagram d);

/// Evaluate the skein invariant of a diagram. The crossing cap applies after
/// kink (R1) and poke (R2) reduction; beyond it a ComplexityLimit error is
/// thrown.
HomflyPolynomial homfly_skein(const SkeinDiagram& d, int crossing_cap = 24);

/// Closure of a braid word. Letter +i (1-based) crosses the strand in
/// position i over the strand in position i+1; letter -i crosses it under.
SkeinDiagram braid_closure(int strands, const std::vector<int>& word);

/// Standard alternating twist-knot diagram: n half twists closed by a
/// two-crossing clasp. twist_sign / clasp_sign are the crossing signs of the
/// two regions (+1 or -1).
SkeinDiagram twist_knot_diagram(int n, int twist_sign, int clasp_sign);

/// Oriented planar diagram of a mosaic: arcs are maximal crossing-free strand
/// runs; each crossing records its four incident arcs by role. Closed arcs
/// (components through no crossing) appear in no crossing slot.
struct PdCrossing {
  int under_in = -1;
  int under_out = -1;
  int over_in = -1;
  int over_out = -1;
  int sign = 0;
  /// Incident arcs in counterclockwise rotational order starting from the
  /// incoming understrand.
  std::array<int, 4> cyclic_order() const;
};

struct PlanarDiagram {
  int arc_count = 0;
  std::vector<PdCrossing> crossings;
  /// Arcs of each component, in traversal order.
  std::vector<std::vector<int>> components;
};

/// Convert a suitably connected mosaic (knot or link). The crossing count
/// equals the number of T10 cells. Throws NotSuitablyConnected.
PlanarDiagram to_planar_diagram(const Mosaic& m);

SkeinDiagram to_skein(const PlanarDiagram& pd);

HomflyPolynomial homfly(const PlanarDiagram& pd, int crossing_cap = 24);

/// Smooth knot types the reference table can name.
inline const char* kUnknownType = "UNKNOWN";

struct KnotTypeEntry {
  std::string name;
  HomflyPolynomial poly;
};

/// Reference polynomials for every knot type realisable on mosaics of size
/// up to 6, computed from independently entered braid and twist diagrams.
const std::vector<KnotTypeEntry>& knot_reference_table();

/// Name of the knot with this polynomial, or UNKNOWN.
std::string identify_polynomial(const HomflyPolynomial& p);

/// Identify the smooth type of a knot mosaic via its skein invariant.
std::string identify(const Mosaic& m, int crossing_cap = 24);

}  // namespace legmosaic
