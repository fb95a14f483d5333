#pragma once

#include <optional>

#include "body.hpp"

namespace cbsg {

// How the body meets an extremal ray. Polygon contacts carry exact rational
// data; a circle chord on an axis has irrational endpoints and is kept
// implicit (all queries against it go through membership).
struct RayContact {
  enum Kind { kVertexPoint, kTangentPoint, kSegment, kAxisChord } kind;
  Direction v;              // primitive lattice direction of the ray
  Point p1;                 // kVertexPoint / kTangentPoint contact point
  int vertex_index = -1;    // polygon vertex index for kVertexPoint
  Point a, b;               // kSegment endpoints, |a| <= |b|
  Rational alpha, beta;     // kSegment: a = alpha*v, b = beta*v
  bool is_point() const { return kind == kVertexPoint || kind == kTangentPoint; }
};

class BodySemigroup {
 public:
  static BodySemigroup create(ConvexBody body);

  const ConvexBody& body() const { return body_; }
  bool is_polygon() const { return std::holds_alternative<ConvexPolygon>(body_); }
  const ConvexPolygon& polygon() const { return std::get<ConvexPolygon>(body_); }
  const Circle& circle() const { return std::get<Circle>(body_); }

  const Direction& tau(int i) const { return i == 1 ? tau1_ : tau2_; }
  const RayContact& contact(int i) const { return contacts_[i - 1]; }
  const LatticePoint& n(int i) const { return n_[i - 1]; }
  // Point contact: n_i = mult * P1. Segment/axis contact: n_i = mult * v.
  const Int& n_mult(int i) const { return mult_[i - 1]; }

  bool in_cone(const Int& x, const Int& y) const {
    return cross(tau1_.dx, tau1_.dy, x, y) <= 0 && cross(tau2_.dx, tau2_.dy, x, y) >= 0;
  }
  bool strictly_in_cone(const Int& x, const Int& y) const {
    return cross(tau1_.dx, tau1_.dy, x, y) < 0 && cross(tau2_.dx, tau2_.dy, x, y) > 0;
  }
  bool in_cone(const LatticePoint& p) const { return in_cone(p.x, p.y); }

  // Membership witness: the dilation index k with P in k*F (k = 0 for O).
  std::optional<Int> membership(const Int& x, const Int& y) const {
    if (x < 0 || y < 0) return std::nullopt;
    if (x == 0 && y == 0) return Int(0);
    if (!in_cone(x, y)) return std::nullopt;
    return integer_in_interval(ray_body_interval(LatticePoint{x, y}, body_));
  }
  std::optional<Int> membership(const LatticePoint& p) const { return membership(p.x, p.y); }
  bool member(const LatticePoint& p) const { return membership(p).has_value(); }

  bool is_interior(const LatticePoint& p) const {
    if (p.x < 0 || p.y < 0) return false;
    return strictly_in_cone(p.x, p.y);
  }

  // x <=_S y  iff  y - x is a member.
  bool leq(const LatticePoint& x, const LatticePoint& y) const {
    Int dx = y.x - x.x, dy = y.y - x.y;
    if (dx < 0 || dy < 0) return false;
    return membership(dx, dy).has_value();
  }

  // True iff every member on tau_i is a multiple of n_i; a witness member
  // that is not a multiple is reported otherwise.
  bool ray_generated(int i, LatticePoint* witness = nullptr) const;

 private:
  BodySemigroup(ConvexBody b, Direction t1, Direction t2)
      : body_(std::move(b)), tau1_(t1), tau2_(t2) {}

  RayContact classify_contact(int i) const;
  void compute_generator(int i);

  ConvexBody body_;
  Direction tau1_, tau2_;
  RayContact contacts_[2];
  LatticePoint n_[2];
  Int mult_[2];
};

namespace detail {

inline Int lcm_den(const Point& p) {
  return boost::multiprecision::lcm(den(p.x), den(p.y));
}

// Parameter of a ray point along the primitive direction v.
inline Rational ray_param(const Point& p, const Direction& v) {
  if (v.dx != 0) return p.x / Rational(v.dx);
  return p.y / Rational(v.dy);
}

}  // namespace detail

inline RayContact BodySemigroup::classify_contact(int i) const {
  const Direction& t = tau(i);
  RayContact rc;
  rc.v = t;
  if (is_polygon()) {
    const auto& verts = polygon().vertices();
    std::vector<int> on_ray;
    for (int k = 0; k < static_cast<int>(verts.size()); ++k)
      if (cross(t, verts[k]) == 0) on_ray.push_back(k);
    if (on_ray.empty()) throw InternalError("extremal ray misses every vertex");
    if (on_ray.size() == 1) {
      rc.kind = RayContact::kVertexPoint;
      rc.vertex_index = on_ray[0];
      rc.p1 = verts[on_ray[0]];
      return rc;
    }
    if (on_ray.size() != 2) throw InternalError("more than two vertices on an extremal ray");
    Point u = verts[on_ray[0]], w = verts[on_ray[1]];
    Rational pu = detail::ray_param(u, t), pw = detail::ray_param(w, t);
    rc.kind = RayContact::kSegment;
    if (pu <= pw) {
      rc.a = u;
      rc.b = w;
      rc.alpha = pu;
      rc.beta = pw;
    } else {
      rc.a = w;
      rc.b = u;
      rc.alpha = pw;
      rc.beta = pu;
    }
    return rc;
  }
  const Circle& c = circle();
  // Tangential iff dist(center, ray line) equals the radius.
  Rational cr = cross(t, c.center());
  Rational v2 = Rational(t.dx * t.dx + t.dy * t.dy);
  if (cr * cr == c.radius2() * v2) {
    rc.kind = RayContact::kTangentPoint;
    Rational s = dot(dir_point(t), c.center()) / v2;
    rc.p1 = dir_point(t) * s;
    if (rc.p1.x < 0 || rc.p1.y < 0) throw InternalError("tangency point outside the quadrant");
    return rc;
  }
  rc.kind = RayContact::kAxisChord;
  return rc;
}

inline void BodySemigroup::compute_generator(int i) {
  const RayContact& rc = contacts_[i - 1];
  if (rc.is_point()) {
    // Members on the ray are exactly the integral multiples of P1.
    Int c = detail::lcm_den(rc.p1);
    n_[i - 1] = LatticePoint{num(rc.p1.x) * (c / den(rc.p1.x)),
                             num(rc.p1.y) * (c / den(rc.p1.y))};
    mult_[i - 1] = c;
    return;
  }
  if (rc.kind == RayContact::kSegment) {
    // m is a member iff some dilation k has k*alpha <= m <= k*beta; the first
    // interval of length >= 1 bounds the search.
    Rational width = rc.beta - rc.alpha;
    if (width <= 0) throw InternalError("segment contact with empty chord");
    Int k1 = rceil(Rational(1) / width);
    if (k1 < 1) k1 = 1;
    std::optional<Int> best;
    for (Int k = 1; k <= k1; ++k) {
      Rational lo = Rational(k) * rc.alpha, hi = Rational(k) * rc.beta;
      Int m = rceil(lo);
      if (m < 1) m = 1;
      if (Rational(m) <= hi && (!best || m < *best)) best = m;
    }
    if (!best) throw GeneratorNotFound("no lattice member on the contact segment");
    n_[i - 1] = LatticePoint{rc.v.dx * *best, rc.v.dy * *best};
    mult_[i - 1] = *best;
    return;
  }
  // Axis chord with irrational endpoints: scan multiples of v; the scan is
  // bounded because the dilation interval of m*v has width >= 1 once
  // 4 m^2 ((v.c)^2 - M |v|^2) >= M^2.
  const Circle& c = circle();
  Rational M = c.center_norm2() - c.radius2();
  Rational vc = dot(dir_point(rc.v), c.center());
  Rational v2 = Rational(rc.v.dx * rc.v.dx + rc.v.dy * rc.v.dy);
  Rational W = vc * vc - M * v2;
  if (W <= 0) throw InternalError("transversal ray with nonpositive chord width");
  for (Int m = 1; m <= 1000000; ++m) {
    LatticePoint p{rc.v.dx * m, rc.v.dy * m};
    if (membership(p)) {
      n_[i - 1] = p;
      mult_[i - 1] = m;
      return;
    }
    if (Rational(4) * Rational(m) * Rational(m) * W >= M * M && Rational(m) * vc >= M)
      throw InternalError("width-one dilation interval without a member");
  }
  throw GeneratorNotFound("ray generator search exhausted");
}

inline BodySemigroup BodySemigroup::create(ConvexBody body) {
  ConeRays rays = cone_rays(body);
  if (std::holds_alternative<ConvexPolygon>(body) &&
      std::get<ConvexPolygon>(body).is_segment())
    throw UnsupportedSegmentPolygon("polygon degenerates to a segment");
  BodySemigroup s(std::move(body), rays.tau1, rays.tau2);
  s.contacts_[0] = s.classify_contact(1);
  s.contacts_[1] = s.classify_contact(2);
  s.compute_generator(1);
  s.compute_generator(2);
  return s;
}

inline bool BodySemigroup::ray_generated(int i, LatticePoint* witness) const {
  const RayContact& rc = contacts_[i - 1];
  if (rc.is_point()) return true;
  const Int& m1 = mult_[i - 1];
  if (m1 == 1) return true;
  if (rc.kind == RayContact::kSegment) {
    // Intervals of length >= 2 contain consecutive integers, hence a
    // non-multiple; only shorter dilation chords need inspection.
    Rational width = rc.beta - rc.alpha;
    Int kmax = rceil(Rational(2) / width) + 1;
    for (Int k = 1; k <= kmax; ++k) {
      Rational lo = Rational(k) * rc.alpha, hi = Rational(k) * rc.beta;
      Int m = rceil(lo);
      if (m < 1) m = 1;
      for (; Rational(m) <= hi; ++m)
        if (m % m1 != 0) {
          if (witness) *witness = LatticePoint{rc.v.dx * m, rc.v.dy * m};
          return false;
        }
    }
    return true;
  }
  // Axis chord: scan members past n_i until a non-multiple appears or the
  // width bound proves every residue reachable.
  const Circle& c = circle();
  Rational M = c.center_norm2() - c.radius2();
  Rational vc = dot(dir_point(rc.v), c.center());
  Rational v2 = Rational(rc.v.dx * rc.v.dx + rc.v.dy * rc.v.dy);
  Rational W = vc * vc - M * v2;
  Int m = m1 + 1;
  Int consecutive_bound = -1;
  for (; m <= m1 * 1000000; ++m) {
    LatticePoint p{rc.v.dx * m, rc.v.dy * m};
    if (member(p) && m % m1 != 0) {
      if (witness) *witness = p;
      return false;
    }
    if (consecutive_bound < 0 && Rational(4) * Rational(m) * Rational(m) * W >= M * M &&
        Rational(m) * vc >= M)
      consecutive_bound = Int(m + 2 * m1);
    if (consecutive_bound >= 0 && m >= consecutive_bound) break;
  }
  return true;
}

}  // namespace cbsg
