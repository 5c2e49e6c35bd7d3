#include "legmosaic/topology.hpp"

namespace legmosaic {

namespace {

// Reference diagrams for every smooth type the censuses can meet, entered as
// braid closures and standard alternating twist diagrams, never via mosaics.
// Chirality labels follow the census convention: the chiral partner whose
// Legendrian representatives reach the higher maximal Thurston-Bennequin
// number carries the m() name for the odd torus knots, and the labels of the
// twist-knot pairs are pinned against the minimal-mosaic catalog.
std::vector<KnotTypeEntry> build_table() {
  std::vector<KnotTypeEntry> table;
  auto add = [&table](const std::string& name, const SkeinDiagram& d) {
    table.push_back({name, homfly_skein(d, 32)});
  };

  table.push_back({"0_1", HomflyPolynomial::one()});

  add("m(3_1)", braid_closure(2, {1, 1, 1}));
  add("3_1", braid_closure(2, {-1, -1, -1}));
  add("m(5_1)", braid_closure(2, {1, 1, 1, 1, 1}));
  add("5_1", braid_closure(2, {-1, -1, -1, -1, -1}));
  add("m(7_1)", braid_closure(2, {1, 1, 1, 1, 1, 1, 1}));
  add("7_1", braid_closure(2, {-1, -1, -1, -1, -1, -1, -1}));
  add("4_1", braid_closure(3, {1, -2, 1, -2}));
  add("m(3_1)#m(3_1)", braid_closure(3, {1, 1, 1, 2, 2, 2}));
  add("3_1#3_1", braid_closure(3, {-1, -1, -1, -2, -2, -2}));

  // Twist knots: n half twists plus a clasp. The clasp shares the twist sign
  // for odd n and opposes it for even n; the remaining sign choice selects
  // the chirality.
  add("5_2", twist_knot_diagram(3, -1, -1));
  add("m(5_2)", twist_knot_diagram(3, +1, +1));
  add("6_1", twist_knot_diagram(4, -1, +1));
  add("m(6_1)", twist_knot_diagram(4, +1, -1));
  add("7_2", twist_knot_diagram(5, -1, -1));
  add("m(7_2)", twist_knot_diagram(5, +1, +1));
  add("8_1", twist_knot_diagram(6, -1, +1));
  add("m(8_1)", twist_knot_diagram(6, +1, -1));

  return table;
}

}  // namespace

const std::vector<KnotTypeEntry>& knot_reference_table() {
  static const std::vector<KnotTypeEntry> table = build_table();
  return table;
}

}  // namespace legmosaic
