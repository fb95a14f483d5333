#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace cbsg {

struct Point {
  Rational x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(const Rational& s) const { return {x * s, y * s}; }
};

// A lattice point of N^2 in all public interfaces; intermediate arithmetic
// (Apery differences and the like) may hold negative coordinates, which every
// membership test treats as non-members.
struct LatticePoint {
  Int x, y;
  bool operator==(const LatticePoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const LatticePoint& o) const { return !(*this == o); }
  bool operator<(const LatticePoint& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
};

inline Point to_point(const LatticePoint& p) { return {Rational(p.x), Rational(p.y)}; }

// Primitive direction in the closed first quadrant.
struct Direction {
  Int dx, dy;
  bool operator==(const Direction& o) const { return dx == o.dx && dy == o.dy; }
};

inline Int cross(const Int& ax, const Int& ay, const Int& bx, const Int& by) {
  return ax * by - ay * bx;
}
inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Int cross(const Direction& d, const LatticePoint& p) {
  return d.dx * p.y - d.dy * p.x;
}
inline Rational cross(const Direction& d, const Point& p) {
  return Rational(d.dx) * p.y - Rational(d.dy) * p.x;
}
inline Point dir_point(const Direction& d) { return {Rational(d.dx), Rational(d.dy)}; }

inline Direction reduce_primitive(const Int& vx, const Int& vy) {
  if (vx == 0 && vy == 0) throw InvalidArgument("zero vector has no direction");
  if (vx < 0 || vy < 0) throw InvalidArgument("direction must be in the first quadrant");
  Int g = boost::multiprecision::gcd(vx, vy);
  return Direction{vx / g, vy / g};
}

// Primitive lattice direction of the ray through a rational point.
inline Direction ray_direction(const Point& p) {
  Int nx = num(p.x) * den(p.y);
  Int ny = num(p.y) * den(p.x);
  return reduce_primitive(nx, ny);
}

// a*x + b*y = c
struct Line {
  Rational a, b, c;
};

inline Line line_through(const Point& p, const Point& q) {
  if (p == q) throw InvalidArgument("line through coincident points");
  Rational a = q.y - p.y;
  Rational b = p.x - q.x;
  return Line{a, b, a * p.x + b * p.y};
}

inline bool on_line(const Line& l, const Point& p) { return l.a * p.x + l.b * p.y == l.c; }

struct LineIntersection {
  enum Kind { kPoint, kParallel, kCoincident } kind;
  Point p;  // valid when kind == kPoint
};

inline LineIntersection line_intersect(const Line& l1, const Line& l2) {
  Rational det = l1.a * l2.b - l1.b * l2.a;
  if (det == 0) {
    bool coincident = (l1.a * l2.c - l2.a * l1.c) == 0 && (l1.b * l2.c - l2.b * l1.c) == 0;
    return {coincident ? LineIntersection::kCoincident : LineIntersection::kParallel, {}};
  }
  Rational x = (l1.c * l2.b - l1.b * l2.c) / det;
  Rational y = (l1.a * l2.c - l1.c * l2.a) / det;
  return {LineIntersection::kPoint, {x, y}};
}

inline bool collinear(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a) == 0;
}

inline bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (!collinear(a, b, p)) return false;
  Rational lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
  Rational lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
  return lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y;
}

// Intersection of two closed segments when it is a single point. Parallel or
// collinear-overlapping configurations yield nullopt.
inline std::optional<Point> segment_intersect_point(const Point& a1, const Point& a2,
                                                    const Point& b1, const Point& b2) {
  Point r = a2 - a1, s = b2 - b1;
  Rational denom = cross(r, s);
  if (denom == 0) return std::nullopt;
  Point d = b1 - a1;
  Rational t = cross(d, s) / denom;
  Rational u = cross(d, r) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
  return a1 + r * t;
}

// Monotone chain; returns the hull in counterclockwise order without
// collinear intermediates. Degenerate inputs collapse to 1 or 2 points.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  return h;
}

inline std::vector<LatticePoint> sorted_unique(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace cbsg
