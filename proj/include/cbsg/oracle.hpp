#pragma once

#include <set>

#include "semigroup.hpp"

namespace cbsg {

struct Box {
  Int max_x, max_y;
};

namespace detail {

// Rational lower bound on the squared distance from the origin to the body;
// zero only when the origin lies in the body.
inline Rational min_dist2_lower_bound(const ConvexBody& body) {
  if (std::holds_alternative<Circle>(body)) {
    const auto& c = std::get<Circle>(body);
    // (|c| - r)^2 = (|c|^2 - r^2)^2 / (|c| + r)^2 >= M^2 / (2(|c|^2 + r^2))
    Rational M = c.center_norm2() - c.radius2();
    return M * M / (Rational(2) * (c.center_norm2() + c.radius2()));
  }
  const auto& poly = std::get<ConvexPolygon>(body);
  const auto& v = poly.vertices();
  if (poly.contains_point(Point{Rational(0), Rational(0)})) return Rational(0);
  auto seg_dist2 = [](const Point& a, const Point& b) {
    Point d = b - a;
    Rational dd = dot(d, d);
    if (dd == 0) return dot(a, a);
    Rational t = -dot(a, d) / dd;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Point p = a + d * t;
    return dot(p, p);
  };
  size_t n = v.size();
  Rational best = seg_dist2(v[0], v[n > 1 ? 1 : 0]);
  for (size_t i = 0; i < n; ++i) best = std::min(best, seg_dist2(v[i], v[(i + 1) % n]));
  return best;
}

// When the origin lies in the body, dilations are nested and F contains the
// cone clipped to a ball of this radius (squared, rational lower bound).
inline Rational origin_core_radius2(const ConvexPolygon& poly) {
  Rational best(-1);
  const auto& v = poly.vertices();
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    Line l = line_through(a, b);
    if (l.c == 0) continue;  // edge line through the origin
    Rational d2 = l.c * l.c / (l.a * l.a + l.b * l.b);
    if (best < 0 || d2 < best) best = d2;
  }
  if (best <= 0) throw InternalError("degenerate polygon core");
  return best;
}

}  // namespace detail

// All members within the box, computed by a dilation sweep with the direct
// point-in-dilated-body test. Deliberately independent of the per-point ray
// membership algorithm.
inline std::set<LatticePoint> oracle_enumerate(const BodySemigroup& s, const Box& box) {
  std::set<LatticePoint> out;
  out.insert(LatticePoint{0, 0});
  const ConvexBody& body = s.body();
  Rational diag2 = Rational(box.max_x * box.max_x + box.max_y * box.max_y);
  Rational min2 = detail::min_dist2_lower_bound(body);
  Int kmax;
  if (min2 > 0) {
    // k*min > diag  =>  k*F misses the box entirely.
    Int k = 1;
    while (Rational(k) * Rational(k) * min2 <= diag2) ++k;
    kmax = k;
  } else {
    Rational core2 = detail::origin_core_radius2(std::get<ConvexPolygon>(body));
    Int k = 1;
    while (Rational(k) * Rational(k) * core2 < diag2) ++k;
    kmax = k;
  }
  for (Int k = 1; k <= kmax; ++k) {
    // Bounding box of k*F clipped to the query box.
    Rational xlo, xhi, ylo, yhi;
    if (std::holds_alternative<ConvexPolygon>(body)) {
      const auto& verts = std::get<ConvexPolygon>(body).vertices();
      xlo = xhi = verts[0].x;
      ylo = yhi = verts[0].y;
      for (const auto& p : verts) {
        xlo = std::min(xlo, p.x);
        xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y);
        yhi = std::max(yhi, p.y);
      }
    } else {
      const auto& c = std::get<Circle>(body);
      xlo = c.center().x - c.radius();
      xhi = c.center().x + c.radius();
      ylo = c.center().y - c.radius();
      yhi = c.center().y + c.radius();
    }
    Int x0 = std::max(rceil(xlo * Rational(k)), Int(0));
    Int x1 = std::min(rfloor(xhi * Rational(k)), box.max_x);
    Int y0 = std::max(rceil(ylo * Rational(k)), Int(0));
    Int y1 = std::min(rfloor(yhi * Rational(k)), box.max_y);
    for (Int x = x0; x <= x1; ++x)
      for (Int y = y0; y <= y1; ++y) {
        LatticePoint p{x, y};
        if (out.count(p)) continue;
        if (point_in_dilation(body, p, k)) out.insert(p);
      }
  }
  return out;
}

// Box-relative Cohen-Macaulay falsifier: a gap a in the cone whose two
// translates a+n1, a+n2 are both members. The verdict is relative to the box
// and never a global claim.
inline std::optional<LatticePoint> oracle_cm_witness(const BodySemigroup& s, const Box& box,
                                                     const std::set<LatticePoint>* members = nullptr) {
  std::set<LatticePoint> local;
  if (!members) {
    local = oracle_enumerate(s, box);
    members = &local;
  }
  LatticePoint n1 = s.n(1), n2 = s.n(2);
  for (Int x = 0; x <= box.max_x; ++x)
    for (Int y = 0; y <= box.max_y; ++y) {
      LatticePoint a{x, y};
      if (!s.in_cone(a.x, a.y)) continue;
      if (members->count(a)) continue;
      LatticePoint a1 = a + n1, a2 = a + n2;
      if (a1.x > box.max_x || a1.y > box.max_y) continue;
      if (a2.x > box.max_x || a2.y > box.max_y) continue;
      if (members->count(a1) && members->count(a2)) return a;
    }
  return std::nullopt;
}

inline std::vector<LatticePoint> oracle_apery(const BodySemigroup& s, const LatticePoint& n,
                                              const Box& box,
                                              const std::set<LatticePoint>* members = nullptr) {
  std::set<LatticePoint> local;
  if (!members) {
    local = oracle_enumerate(s, box);
    members = &local;
  }
  if (!members->count(n)) throw InvalidArgument("Apery base element is not a member");
  std::vector<LatticePoint> out;
  for (const auto& p : *members) {
    Int dx = p.x - n.x, dy = p.y - n.y;
    if (dx >= 0 && dy >= 0 && members->count(LatticePoint{dx, dy})) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace cbsg
