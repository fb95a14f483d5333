#pragma once

#include <sstream>

#include "checkers.hpp"

namespace cbsg {

// Deterministic SVG rendering of the first k_max dilations, the extremal
// rays, members (filled) against cone gaps (hollow), and, when the polygon
// apparatus is available, the nu lines, the apex point and the Apery points.
// Coordinates are truncated decimals of exact rationals, display only.

namespace svg_detail {

constexpr int kDigits = 5;
constexpr double kScale = 40.0;  // user units per lattice step

inline std::string fx(const Rational& x) { return to_decimal(x * Rational(40), kDigits); }
// y is flipped into screen coordinates by the caller via a group transform.

inline void polyline(std::ostringstream& out, const std::vector<Point>& pts, bool close,
                     const std::string& style) {
  out << (close ? "<polygon" : "<polyline") << " points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) out << " ";
    out << fx(pts[i].x) << "," << fx(pts[i].y);
  }
  out << "\" " << style << "/>\n";
}

}  // namespace svg_detail

struct PlotDecorations {
  const PolygonApparatus* apparatus = nullptr;
  const AperyIntersection* apery = nullptr;
};

inline std::string render_svg(const BodySemigroup& s, const Int& k_max,
                              const PlotDecorations& deco = {}) {
  if (k_max < 1) throw InvalidArgument("k_max must be at least 1");
  using svg_detail::fx;
  // View bounds from the largest dilation.
  Rational max_x(1), max_y(1);
  if (s.is_polygon()) {
    for (const auto& v : s.polygon().vertices()) {
      max_x = std::max(max_x, v.x * Rational(k_max));
      max_y = std::max(max_y, v.y * Rational(k_max));
    }
  } else {
    const auto& c = s.circle();
    max_x = std::max(max_x, (c.center().x + c.radius()) * Rational(k_max));
    max_y = std::max(max_y, (c.center().y + c.radius()) * Rational(k_max));
  }
  max_x += 1;
  max_y += 1;

  std::ostringstream out;
  std::string w = svg_detail::fx(max_x), h = svg_detail::fx(max_y);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h
      << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
  out << "<g transform=\"translate(0," << h << ") scale(1,-1)\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\"/>\n";

  // Extremal rays.
  Rational reach = (max_x + max_y) * Rational(2);
  for (int i = 1; i <= 2; ++i) {
    const Direction& t = s.tau(i);
    Rational len = Rational(t.dx * t.dx + t.dy * t.dy);
    Rational scale = reach / len;
    out << "<line x1=\"0\" y1=\"0\" x2=\"" << fx(Rational(t.dx) * scale) << "\" y2=\""
        << fx(Rational(t.dy) * scale)
        << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  }

  // Dilations.
  for (Int k = 1; k <= k_max; ++k) {
    if (s.is_polygon()) {
      std::vector<Point> pts;
      for (const auto& v : s.polygon().vertices()) pts.push_back(v * Rational(k));
      svg_detail::polyline(out, pts, true,
                           "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"");
    } else {
      const auto& c = s.circle();
      out << "<circle cx=\"" << fx(c.center().x * Rational(k)) << "\" cy=\""
          << fx(c.center().y * Rational(k)) << "\" r=\"" << fx(c.radius() * Rational(k))
          << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"/>\n";
    }
  }

  // Decorations from the polygon apparatus.
  if (deco.apparatus) {
    const auto& ap = *deco.apparatus;
    for (const RayStructure* rs : {&ap.rs1, &ap.rs2}) {
      if (rs->segment_contact) continue;
      // nu is parallel to the contact ray; draw it across the view.
      Point v0 = rs->v_point;
      Point dir = rs->p1;
      Rational len = dot(dir, dir);
      Rational scale = reach / len;
      Point a = v0 - dir * scale, b = v0 + dir * scale;
      out << "<line x1=\"" << fx(a.x) << "\" y1=\"" << fx(a.y) << "\" x2=\"" << fx(b.x)
          << "\" y2=\"" << fx(b.y)
          << "\" stroke=\"#2ca02c\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }
    out << "<path d=\"M " << fx(ap.q.x - Rational(1, 4)) << " " << fx(ap.q.y) << " L "
        << fx(ap.q.x + Rational(1, 4)) << " " << fx(ap.q.y) << " M " << fx(ap.q.x) << " "
        << fx(ap.q.y - Rational(1, 4)) << " L " << fx(ap.q.x) << " "
        << fx(ap.q.y + Rational(1, 4))
        << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
  }

  // Lattice: members filled, cone gaps hollow.
  Int xmax = rceil(max_x), ymax = rceil(max_y);
  for (Int x = 0; x <= xmax; ++x)
    for (Int y = 0; y <= ymax; ++y) {
      if (!s.in_cone(x, y)) continue;
      bool m = s.membership(x, y).has_value();
      out << "<circle cx=\"" << fx(Rational(x)) << "\" cy=\"" << fx(Rational(y))
          << "\" r=\"3\" ";
      if (m)
        out << "fill=\"#111111\"";
      else
        out << "fill=\"white\" stroke=\"#111111\" stroke-width=\"1\"";
      out << "/>\n";
    }

  if (deco.apery) {
    for (const auto& p : deco.apery->points) {
      out << "<circle cx=\"" << fx(Rational(p.x)) << "\" cy=\"" << fx(Rational(p.y))
          << "\" r=\"5\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    }
  }

  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace cbsg
