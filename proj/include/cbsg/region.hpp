#pragma once

#include <optional>
#include <vector>

#include "geometry.hpp"

namespace cbsg {

// a*x + b*y <= c, or strictly < when strict is set.
struct HalfPlane {
  Rational a, b, c;
  bool strict = false;
  bool contains(const Rational& x, const Rational& y) const {
    Rational v = a * x + b * y;
    return strict ? v < c : v <= c;
  }
  bool contains(const Point& p) const { return contains(p.x, p.y); }
  bool contains(const LatticePoint& p) const { return contains(Rational(p.x), Rational(p.y)); }
};

// Conjunction of half-planes; used both as the base region and as an
// excluded subregion.
struct ConvexClause {
  std::vector<HalfPlane> planes;
  bool contains(const LatticePoint& p) const {
    for (const auto& h : planes)
      if (!h.contains(p)) return false;
    return true;
  }
  bool contains(const Point& p) const {
    for (const auto& h : planes)
      if (!h.contains(p)) return false;
    return true;
  }
};

// Bounded convex region minus a finite list of convex subregions, queried
// for its lattice points in N^2.
struct LatticeRegion {
  std::vector<HalfPlane> include;
  std::vector<ConvexClause> exclude;
};

namespace detail {

// Two half-planes oriented so that `inside` satisfies them; the pair pins the
// segment's supporting line.
inline void append_line_pair(std::vector<HalfPlane>& out, const Point& p, const Point& q) {
  Line l = line_through(p, q);
  out.push_back({l.a, l.b, l.c, false});
  out.push_back({-l.a, -l.b, -l.c, false});
}

inline HalfPlane edge_constraint(const Point& p, const Point& q, const Point& inside,
                                 bool strict) {
  Line l = line_through(p, q);
  Rational side = l.a * inside.x + l.b * inside.y;
  if (side == l.c) throw InvalidArgument("degenerate edge constraint");
  if (side < l.c) return {l.a, l.b, l.c, strict};
  return {-l.a, -l.b, -l.c, strict};
}

}  // namespace detail

// Closed convex hull of the given points as an include-set. Degenerate hulls
// (segments, points) are representable.
inline std::vector<HalfPlane> hull_constraints(const std::vector<Point>& pts, bool strict = false) {
  std::vector<Point> h = convex_hull(pts);
  std::vector<HalfPlane> out;
  if (h.empty()) throw InvalidArgument("empty hull");
  if (h.size() == 1) {
    out.push_back({Rational(1), Rational(0), h[0].x, strict});
    out.push_back({Rational(-1), Rational(0), -h[0].x, strict});
    out.push_back({Rational(0), Rational(1), h[0].y, strict});
    out.push_back({Rational(0), Rational(-1), -h[0].y, strict});
    return out;
  }
  if (h.size() == 2) {
    detail::append_line_pair(out, h[0], h[1]);
    Point d = h[1] - h[0];
    out.push_back({-d.x, -d.y, -dot(d, h[0]), strict});
    out.push_back({d.x, d.y, dot(d, h[1]), strict});
    return out;
  }
  for (size_t i = 0; i < h.size(); ++i) {
    const Point& p = h[i];
    const Point& q = h[(i + 1) % h.size()];
    const Point& inside = h[(i + 2) % h.size()];
    out.push_back(detail::edge_constraint(p, q, inside, strict));
  }
  return out;
}

inline ConvexClause open_triangle(const Point& a, const Point& b, const Point& c) {
  if (collinear(a, b, c)) throw InvalidArgument("degenerate triangle");
  ConvexClause cl;
  cl.planes.push_back(detail::edge_constraint(a, b, c, true));
  cl.planes.push_back(detail::edge_constraint(b, c, a, true));
  cl.planes.push_back(detail::edge_constraint(c, a, b, true));
  return cl;
}

// Segment (p,q) without its endpoints.
inline ConvexClause open_segment(const Point& p, const Point& q) {
  ConvexClause cl;
  detail::append_line_pair(cl.planes, p, q);
  Point d = q - p;
  cl.planes.push_back({-d.x, -d.y, -dot(d, p), true});
  cl.planes.push_back({d.x, d.y, dot(d, q), true});
  return cl;
}

inline ConvexClause closed_segment(const Point& p, const Point& q) {
  ConvexClause cl;
  if (p == q) {
    cl.planes.push_back({Rational(1), Rational(0), p.x, false});
    cl.planes.push_back({Rational(-1), Rational(0), -p.x, false});
    cl.planes.push_back({Rational(0), Rational(1), p.y, false});
    cl.planes.push_back({Rational(0), Rational(-1), -p.y, false});
    return cl;
  }
  detail::append_line_pair(cl.planes, p, q);
  Point d = q - p;
  cl.planes.push_back({-d.x, -d.y, -dot(d, p), false});
  cl.planes.push_back({d.x, d.y, dot(d, q), false});
  return cl;
}

namespace detail {

// A nonzero recession direction of the closed include-set proves the region
// unbounded. If the recession cone is nontrivial it contains a boundary
// direction of one of the constraints, so those candidates suffice.
inline bool include_set_unbounded(const std::vector<HalfPlane>& planes) {
  if (planes.empty()) return true;
  auto feasible_dir = [&](const Rational& ux, const Rational& uy) {
    if (ux == 0 && uy == 0) return false;
    for (const auto& h : planes)
      if (h.a * ux + h.b * uy > 0) return false;
    return true;
  };
  for (const auto& h : planes) {
    if (feasible_dir(-h.b, h.a)) return true;
    if (feasible_dir(h.b, -h.a)) return true;
  }
  return false;
}

struct BBox {
  Int xlo, xhi, ylo, yhi;
};

inline std::optional<BBox> include_bbox(const std::vector<HalfPlane>& planes) {
  // Vertices of the closure: pairwise boundary intersections that satisfy
  // every constraint (non-strictly).
  std::vector<Point> verts;
  size_t n = planes.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Line li{planes[i].a, planes[i].b, planes[i].c};
      Line lj{planes[j].a, planes[j].b, planes[j].c};
      auto r = line_intersect(li, lj);
      if (r.kind != LineIntersection::kPoint) continue;
      bool ok = true;
      for (const auto& h : planes)
        if (h.a * r.p.x + h.b * r.p.y > h.c) {
          ok = false;
          break;
        }
      if (ok) verts.push_back(r.p);
    }
  if (verts.empty()) return std::nullopt;
  BBox box{rfloor(verts[0].x), rceil(verts[0].x), rfloor(verts[0].y), rceil(verts[0].y)};
  for (const auto& v : verts) {
    box.xlo = std::min(box.xlo, rfloor(v.x));
    box.xhi = std::max(box.xhi, rceil(v.x));
    box.ylo = std::min(box.ylo, rfloor(v.y));
    box.yhi = std::max(box.yhi, rceil(v.y));
  }
  return box;
}

}  // namespace detail

// Lattice points of the region within N^2, by integer bounding box with exact
// per-row interval solving. Throws UnboundedRegion when the include-set has a
// recession direction.
inline std::vector<LatticePoint> enumerate_lattice(const LatticeRegion& region) {
  if (detail::include_set_unbounded(region.include))
    throw UnboundedRegion("lattice enumeration over an unbounded region");
  auto box = detail::include_bbox(region.include);
  std::vector<LatticePoint> out;
  if (!box) return out;
  Int ylo = std::max(box->ylo, Int(0));
  Int yhi = box->yhi;
  for (Int y = ylo; y <= yhi; ++y) {
    // Solve the x-interval for this row.
    Rational ry(y);
    std::optional<Rational> xlo, xhi;
    bool xlo_strict = false, xhi_strict = false, empty = false;
    for (const auto& h : region.include) {
      Rational rhs = h.c - h.b * ry;
      if (h.a == 0) {
        if (h.strict ? !(0 < rhs) : !(0 <= rhs)) {
          empty = true;
          break;
        }
        continue;
      }
      Rational bound = rhs / h.a;
      if (h.a > 0) {
        if (!xhi || bound < *xhi || (bound == *xhi && h.strict)) {
          xhi = bound;
          xhi_strict = h.strict;
        }
      } else {
        if (!xlo || bound > *xlo || (bound == *xlo && h.strict)) {
          xlo = bound;
          xlo_strict = h.strict;
        }
      }
    }
    if (empty) continue;
    Int ixlo = std::max(box->xlo, Int(0));
    Int ixhi = box->xhi;
    if (xlo) {
      Int v = rceil(*xlo);
      if (xlo_strict && Rational(v) == *xlo) ++v;
      ixlo = std::max(ixlo, v);
    }
    if (xhi) {
      Int v = rfloor(*xhi);
      if (xhi_strict && Rational(v) == *xhi) --v;
      ixhi = std::min(ixhi, v);
    }
    for (Int x = ixlo; x <= ixhi; ++x) {
      LatticePoint p{x, y};
      bool excluded = false;
      for (const auto& cl : region.exclude)
        if (cl.contains(p)) {
          excluded = true;
          break;
        }
      if (!excluded) out.push_back(p);
    }
  }
  return sorted_unique(std::move(out));
}

}  // namespace cbsg
