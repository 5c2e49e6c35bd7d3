#include "legmosaic/render.hpp"

#include <cstdio>
#include <sstream>

#include "legmosaic/invariants.hpp"

namespace legmosaic {

namespace {

// 3x3 glyph blocks in grid orientation (north up). The crossing keeps its
// vertical (overstrand) unbroken.
const char* kBlocks[kTileCount][3] = {
    /* T0  */ {"   ", "   ", "   "},
    /* T1  */ {"   ", "~+ ", " | "},
    /* T2  */ {"   ", " +~", " | "},
    /* T3  */ {" | ", " +~", "   "},
    /* T4  */ {" | ", "~+ ", "   "},
    /* T5  */ {"   ", "~~~", "   "},
    /* T6  */ {" | ", " | ", " | "},
    /* T7  */ {" +~", "~+ ", " | "},
    /* T8  */ {"~+ ", " +~", " | "},
    /* T10 */ {" | ", "~|~", " | "},
};

struct Point {
  double x, y;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

}  // namespace

std::string render_ascii(const Mosaic& m) {
  std::ostringstream os;
  for (int i = 1; i <= m.rows(); ++i) {
    for (int line = 0; line < 3; ++line) {
      for (int j = 1; j <= m.cols(); ++j)
        os << kBlocks[static_cast<int>(m.at(i, j))][line];
      os << "\n";
    }
  }
  os << "legend: ~| strands, + arc corner, crossing keeps its vertical "
        "overstrand unbroken\n";
  return os.str();
}

namespace {

constexpr double kHalf = 20.0;  // half tile diagonal in px
constexpr const char* kStyleVersion = "legmosaic-svg-1";

// Display position of fractional grid coordinates (row i, column j).
Point display(double i, double j, double x0, double y0) {
  return {(i + j) * kHalf + x0, (i - j) * kHalf + y0};
}

Point edge_midpoint(int i, int j, Edge e, double x0, double y0) {
  switch (e) {
    case Edge::N: return display(i - 0.5, j, x0, y0);
    case Edge::E: return display(i, j + 0.5, x0, y0);
    case Edge::S: return display(i + 0.5, j, x0, y0);
    case Edge::W: return display(i, j - 0.5, x0, y0);
  }
  return {0, 0};
}

// Sharp cusp corner of a cusp strand: the lateral tile corner on the side
// both endpoints share.
Point cusp_corner(int i, int j, Edge entry, double x0, double y0) {
  bool left = display_x(entry) < 0;
  return left ? display(i - 0.5, j - 0.5, x0, y0) : display(i + 0.5, j + 0.5, x0, y0);
}

}  // namespace

std::string render_svg(const Mosaic& m) {
  const double x0 = 0.0;
  const double y0 = (m.cols() + 1) * kHalf;
  const double width = (m.rows() + m.cols() + 2) * kHalf;
  const double height = (m.rows() + m.cols() + 2) * kHalf;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
     << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
     << fmt(height) << "\" data-style=\"" << kStyleVersion << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
        "stroke-linejoin=\"miter\">\n";

  std::vector<TraceCycle> cycles = trace(m);
  int comp = 0;
  for (const TraceCycle& cycle : cycles) {
    int cusps = 0;
    std::ostringstream d;
    bool first = true;
    for (const TraceStep& s : cycle) {
      Point from = edge_midpoint(s.row, s.col, s.entry, x0, y0);
      if (first) {
        d << "M " << fmt(from.x) << " " << fmt(from.y);
        first = false;
      }
      if (display_x(s.entry) == display_x(s.exit)) {
        // Cusp strand: run through the sharp lateral corner.
        Point c = cusp_corner(s.row, s.col, s.entry, x0, y0);
        d << " L " << fmt(c.x) << " " << fmt(c.y);
        ++cusps;
      }
      Point to = edge_midpoint(s.row, s.col, s.exit, x0, y0);
      d << " L " << fmt(to.x) << " " << fmt(to.y);
    }
    d << " Z";
    os << "<path data-component=\"" << comp++ << "\" data-cusps=\"" << cusps
       << "\" d=\"" << d.str() << "\"/>\n";
  }
  os << "</g>\n";

  // Crossing gaps: blank the understrand around the centre, then restore the
  // overstrand on top.
  os << "<g>\n";
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) {
      if (m.at(i, j) != Tile::T10) continue;
      Point c = display(i, j, x0, y0);
      Point e = edge_midpoint(i, j, Edge::E, x0, y0);
      Point w = edge_midpoint(i, j, Edge::W, x0, y0);
      Point n = edge_midpoint(i, j, Edge::N, x0, y0);
      Point s = edge_midpoint(i, j, Edge::S, x0, y0);
      auto lerp = [&](Point a, double t) {
        return Point{c.x + (a.x - c.x) * t, c.y + (a.y - c.y) * t};
      };
      Point g1 = lerp(e, 0.4), g2 = lerp(w, 0.4);
      Point o1 = lerp(n, 0.6), o2 = lerp(s, 0.6);
      os << "<line class=\"gap\" stroke=\"white\" stroke-width=\"6\" x1=\""
         << fmt(g1.x) << "\" y1=\"" << fmt(g1.y) << "\" x2=\"" << fmt(g2.x)
         << "\" y2=\"" << fmt(g2.y) << "\"/>\n";
      os << "<line class=\"over\" stroke=\"black\" stroke-width=\"2\" x1=\""
         << fmt(o1.x) << "\" y1=\"" << fmt(o1.y) << "\" x2=\"" << fmt(o2.x)
         << "\" y2=\"" << fmt(o2.y) << "\"/>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace legmosaic
