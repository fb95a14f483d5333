#pragma once

#include "semigroup.hpp"

namespace cbsg {

inline Line ray_line(const Direction& d) {
  return Line{Rational(d.dy), Rational(-d.dx), Rational(0)};
}

// Per-ray structural data for a polygon side whose contact is a vertex P1:
// the escape index j (first dilation at which the two P1-adjacent sides of
// consecutive dilations meet in a point V), the line nu through those meeting
// points, the gap triangle T = {O, P1, W} with W = V - j*P1, the index j1
// with j1*P1 = j*P1 + n_i, the stripe base segment, and the finite set
// Upsilon_i. A segment-contact side collapses to nu = tau_i, Upsilon = {O}.
struct RayStructure {
  int side = 0;
  bool segment_contact = false;
  Point p1;
  Int j = 0, j1 = 0;
  Point v_point, w;  // V and W = V - j*P1
  Line nu;
  Point g;                 // nu ∩ tau_other
  Point base0, base1;      // stripe base: j1*P1 and V + n_i
  std::vector<LatticePoint> upsilon;
};

struct EscapeData {
  Int j;
  Point v;
  Point w;
  Line nu;
};

namespace detail {

inline Point scale(const Point& p, const Int& k) { return p * Rational(k); }

// Meeting point of h*(P1->side_a) with (h+1)*(P1->side_b), as closed
// segments, when it is a single point.
inline std::optional<Point> escape_meet(const Point& p1, const Point& side_a,
                                        const Point& side_b, const Int& h) {
  Point a1 = scale(p1, h), a2 = scale(side_a, h);
  Point b1 = scale(p1, h + 1), b2 = scale(side_b, h + 1);
  return segment_intersect_point(a1, a2, b1, b2);
}

}  // namespace detail

// Search for the escape index of a vertex-contact side. For side 1 the
// previous (counterclockwise) side dilates by h and the next side by h+1;
// side 2 swaps the roles.
inline EscapeData vertex_escape(const BodySemigroup& s, int side) {
  const RayContact& rc = s.contact(side);
  if (!rc.is_point() || rc.vertex_index < 0)
    throw InvalidArgument("vertex escape requires a polygon vertex contact");
  const auto& verts = s.polygon().vertices();
  int n = static_cast<int>(verts.size());
  const Point& p1 = verts[rc.vertex_index];
  const Point& next = verts[(rc.vertex_index + 1) % n];
  const Point& prev = verts[(rc.vertex_index + n - 1) % n];
  const Point& side_a = (side == 1) ? prev : next;
  const Point& side_b = (side == 1) ? next : prev;

  constexpr long long kCap = 1000000;
  for (Int h = 1; h <= kCap; ++h) {
    auto v = detail::escape_meet(p1, side_a, side_b, h);
    if (!v) continue;
    auto v2 = detail::escape_meet(p1, side_a, side_b, h + 1);
    auto v3 = detail::escape_meet(p1, side_a, side_b, h + 2);
    if (!v2 || !v3) throw InternalError("escape meeting points do not persist");
    Line nu = line_through(*v, *v2);
    if (!on_line(nu, *v3)) throw InternalError("escape meeting points are not collinear");
    return EscapeData{h, *v, *v - detail::scale(p1, h), nu};
  }
  throw StructureSearchOverflow("escape index exceeds search cap");
}

// Completes a RayStructure from the escape data: j1, the stripe base, and
// the lattice set Upsilon_i (hull minus the translated gap triangles and the
// open ray segments below j1).
inline RayStructure stripe_sets(const BodySemigroup& s, int side, const EscapeData& esc) {
  const RayContact& rc = s.contact(side);
  RayStructure rs;
  rs.side = side;
  rs.segment_contact = false;
  rs.p1 = rc.p1;
  rs.j = esc.j;
  rs.v_point = esc.v;
  rs.w = esc.w;
  rs.nu = esc.nu;
  rs.j1 = esc.j + s.n_mult(side);
  Point n_i = to_point(s.n(side));
  // j1*P1 = j*P1 + n_i holds by construction; keep the identity checked.
  if (!(detail::scale(rs.p1, rs.j1) == detail::scale(rs.p1, rs.j) + n_i))
    throw InternalError("j1 identity violated");
  rs.base0 = detail::scale(rs.p1, rs.j1);
  rs.base1 = esc.v + n_i;

  const Direction& other = s.tau(side == 1 ? 2 : 1);
  auto g = line_intersect(esc.nu, ray_line(other));
  if (g.kind != LineIntersection::kPoint)
    throw NuTauParallel("nu parallel to the opposite extremal ray");
  rs.g = g.p;

  LatticeRegion region;
  region.include = hull_constraints(
      {Point{Rational(0), Rational(0)}, rs.base0, rs.base1, rs.g});
  for (Int h = 0; h < rs.j1; ++h) {
    Point a = detail::scale(rs.p1, h);
    Point b = detail::scale(rs.p1, h + 1);
    region.exclude.push_back(open_triangle(a, b, rs.w + a));
    region.exclude.push_back(open_segment(a, b));
  }
  rs.upsilon = enumerate_lattice(region);
  return rs;
}

inline RayStructure segment_ray_structure(const BodySemigroup& s, int side) {
  RayStructure rs;
  rs.side = side;
  rs.segment_contact = true;
  rs.nu = ray_line(s.tau(side));
  rs.upsilon = {LatticePoint{0, 0}};
  return rs;
}

inline RayStructure build_ray_structure(const BodySemigroup& s, int side) {
  if (s.contact(side).kind == RayContact::kSegment) return segment_ray_structure(s, side);
  return stripe_sets(s, side, vertex_escape(s, side));
}

struct ApexRegion {
  Point q;
};

inline ApexRegion apex_region(const BodySemigroup& s, const RayStructure& rs1,
                              const RayStructure& rs2) {
  auto r = line_intersect(rs1.nu, rs2.nu);
  Point q;
  if (r.kind == LineIntersection::kPoint) {
    q = r.p;
  } else if (r.kind == LineIntersection::kCoincident && rs1.segment_contact &&
             rs2.segment_contact) {
    q = Point{Rational(0), Rational(0)};
  } else {
    throw NuTauParallel("nu lines do not meet in a single point");
  }
  Rational c1 = cross(s.tau(1), q), c2 = cross(s.tau(2), q);
  if (c1 > 0 || c2 < 0) throw InternalError("apex point escapes the cone");
  return ApexRegion{q};
}

// Membership of a lattice point in the stripe B_i (base segment swept by
// nonnegative multiples of n_i). Exposed for property checks.
inline bool in_stripe(const BodySemigroup& s, const RayStructure& rs, const LatticePoint& p) {
  if (rs.segment_contact) return false;
  Point n_i = to_point(s.n(rs.side));
  Point d = rs.base1 - rs.base0;
  Rational det = cross(d, n_i);
  if (det == 0) throw InternalError("degenerate stripe basis");
  Point rel = to_point(p) - rs.base0;
  Rational t = cross(rel, n_i) / det;
  Rational lam = cross(d, rel) / det;
  return t >= 0 && t <= 1 && lam >= 0;
}

inline std::pair<std::vector<LatticePoint>, std::vector<LatticePoint>> upsilon_primes(
    const BodySemigroup& s, const RayStructure& rs1, const RayStructure& rs2) {
  auto filt = [&](const std::vector<LatticePoint>& ups) {
    std::vector<LatticePoint> out;
    for (const auto& p : ups)
      if (s.member(p + s.n(1)) && s.member(p + s.n(2))) out.push_back(p);
    return out;
  };
  return {filt(rs1.upsilon), filt(rs2.upsilon)};
}

// H: lattice points of the parallelogram spanned by n1 and n2, minus the
// closed segments O-n1 and O-n2 and the far corner, with O put back.
inline std::vector<LatticePoint> circle_H_points(const LatticePoint& n1,
                                                 const LatticePoint& n2) {
  Point o{Rational(0), Rational(0)};
  Point p1 = to_point(n1), p2 = to_point(n2);
  Point corner = p1 + p2;
  LatticeRegion region;
  region.include = hull_constraints({o, p1, p2, corner});
  auto pts = enumerate_lattice(region);
  std::vector<LatticePoint> out;
  out.push_back(LatticePoint{0, 0});
  LatticePoint far = n1 + n2;
  for (const auto& p : pts) {
    if (p == far) continue;
    Point rp = to_point(p);
    if (point_on_segment(rp, o, p1) || point_on_segment(rp, o, p2)) continue;
    out.push_back(p);
  }
  return sorted_unique(std::move(out));
}

inline std::vector<LatticePoint> circle_H(const BodySemigroup& s) {
  return circle_H_points(s.n(1), s.n(2));
}

struct PolygonH {
  std::vector<LatticePoint> h1, h2, h3;
};

inline PolygonH polygon_H(const BodySemigroup& s, const RayStructure& rs1,
                          const RayStructure& rs2, const Point& q) {
  auto fails_both = [&](const LatticePoint& p) {
    LatticePoint n1 = s.n(1), n2 = s.n(2);
    bool m1 = s.membership(p.x - n1.x, p.y - n1.y).has_value();
    bool m2 = s.membership(p.x - n2.x, p.y - n2.y).has_value();
    return !m1 && !m2;
  };
  PolygonH h;
  for (const auto& p : rs1.upsilon)
    if (fails_both(p)) h.h1.push_back(p);
  for (const auto& p : rs2.upsilon)
    if (fails_both(p)) h.h2.push_back(p);
  Point n1 = to_point(s.n(1)), n2 = to_point(s.n(2));
  LatticeRegion region;
  region.include = hull_constraints({q, q + n1, q + n2, q + n1 + n2});
  for (const auto& p : enumerate_lattice(region))
    if (fails_both(p)) h.h3.push_back(p);
  return h;
}

// ---------------------------------------------------------------------------
// Gap triangle scan. Lattice points strictly inside the cone that sit in a
// translated open gap triangle T̊ + h*P1 are gaps of the semigroup. The
// pattern of such points is a pure n_i-translate from the first index h0 at
// which W + h*P1 lies (weakly) in the cone and the quadrant, so scanning
// h in [0, h0 + c) is exhaustive (c the integrality step of P1).

inline std::vector<LatticePoint> gap_triangle_scan(const BodySemigroup& s,
                                                   const RayStructure& rs) {
  if (rs.segment_contact) return {};
  Int c = s.n_mult(rs.side);
  Int h0 = 0;
  for (;; ++h0) {
    if (h0 > 1000000) throw InternalError("gap triangle stabilization search overflow");
    Point p = rs.w + detail::scale(rs.p1, h0);
    if (p.x < 0 || p.y < 0) continue;
    if (cross(s.tau(1), p) > 0 || cross(s.tau(2), p) < 0) continue;
    break;
  }
  std::vector<LatticePoint> gaps;
  for (Int h = 0; h < h0 + c; ++h) {
    Point a = detail::scale(rs.p1, h);
    Point b = detail::scale(rs.p1, h + 1);
    LatticeRegion region;
    region.include = open_triangle(a, b, rs.w + a).planes;
    for (const auto& p : enumerate_lattice(region))
      if (s.strictly_in_cone(p.x, p.y)) gaps.push_back(p);
  }
  return sorted_unique(std::move(gaps));
}

// ---------------------------------------------------------------------------
// Coverage of the apex wedge Q + cone(F). Beyond a computable dilation
// index, consecutive dilations cover the wedge: per direction the overlap
// condition k*dB >= (k+1)*dA is monotone in k, the nu-chords of consecutive
// dilations always meet at the escape points V(h), and the pockets between
// consecutive dilations near a vertex-contact ray stay on the stripe side of
// nu. The index below collects the per-vertex and per-ray thresholds; the
// rim condition is then re-verified at the index and its successor.

namespace detail {

inline ConvexPolygon star_hull(const ConvexPolygon& poly) {
  std::vector<Point> pts = poly.vertices();
  pts.push_back(Point{Rational(0), Rational(0)});
  return ConvexPolygon::create(convex_hull(pts));
}

inline std::vector<HalfPlane> wedge_constraints(const BodySemigroup& s, const Point& q) {
  const Direction& t1 = s.tau(1);
  const Direction& t2 = s.tau(2);
  std::vector<HalfPlane> out;
  out.push_back({Rational(-t1.dy), Rational(t1.dx),
                 Rational(-t1.dy) * q.x + Rational(t1.dx) * q.y, false});
  out.push_back({Rational(t2.dy), Rational(-t2.dx),
                 Rational(t2.dy) * q.x + Rational(-t2.dx) * q.y, false});
  return out;
}

// Clip a segment to a list of half-planes; returns endpoints if nonempty.
inline std::optional<std::pair<Point, Point>> clip_segment(
    Point a, Point b, const std::vector<HalfPlane>& planes) {
  Rational t0(0), t1(1);
  Point d = b - a;
  for (const auto& h : planes) {
    Rational va = h.a * a.x + h.b * a.y - h.c;
    Rational dv = h.a * d.x + h.b * d.y;
    if (dv == 0) {
      if (va > 0) return std::nullopt;
      continue;
    }
    Rational t = -va / dv;
    if (dv > 0) {
      t1 = std::min(t1, t);
    } else {
      t0 = std::max(t0, t);
    }
  }
  if (t0 > t1) return std::nullopt;
  return std::make_pair(a + d * t0, a + d * t1);
}

inline bool in_dilated_polygon(const ConvexPolygon& f, const Point& p, const Int& k) {
  Point q{p.x / Rational(k), p.y / Rational(k)};
  return f.contains_point(q);
}

}  // namespace detail

struct WedgeCoverage {
  Int index;                          // certified coverage index
  std::vector<LatticePoint> points;   // wedge lattice points inside (index+1)*star hull
};

inline WedgeCoverage wedge_coverage(const BodySemigroup& s, const RayStructure& rs1,
                                    const RayStructure& rs2, const Point& q) {
  const ConvexPolygon& f = s.polygon();
  const auto& verts = f.vertices();
  size_t n = verts.size();
  Int index = 1;
  auto bump = [&](const Rational& r) {
    Int v = rceil(r);
    if (v > index) index = v;
  };

  for (const RayStructure* rs : {&rs1, &rs2}) {
    const RayContact& rc = s.contact(rs->side);
    if (!rs->segment_contact) {
      if (rs->j > index) index = rs->j;
      // V(h) passes Q along nu at a linear threshold.
      Rational p2 = dot(rs->p1, rs->p1);
      bump((dot(q, rs->p1) - dot(rs->w, rs->p1)) / p2);
    } else {
      // On-ray chords [k*alpha, k*beta] overlap from alpha/(beta-alpha) on,
      // and the far endpoint passes Q at Qparam/beta.
      Rational width = rc.beta - rc.alpha;
      if (rc.alpha > 0) bump(rc.alpha / width);
      Rational qpar = detail::ray_param(q, rc.v);
      if (qpar > 0) bump(qpar / rc.beta);
    }
  }

  // Outward edges are those whose supporting line has the origin strictly on
  // the inner side; their endpoints need i*Pv in (i+1)*F from a per-vertex
  // threshold on the inner reach of the ray through Pv.
  for (size_t i = 0; i < n; ++i) {
    const Point& a = verts[i];
    const Point& b = verts[(i + 1) % n];
    const Point& inside = verts[(i + 2) % n];
    HalfPlane h = detail::edge_constraint(a, b, inside, false);
    if (!(h.c > 0)) continue;
    for (const Point* pv : {&a, &b}) {
      if (pv->x == 0 && pv->y == 0) continue;
      auto iv = f.lambda_interval(*pv);
      if (!iv) throw InternalError("vertex ray misses its own polygon");
      Rational lo = iv->first;
      if (lo >= 1) continue;  // ray contact vertices never enter the wedge
      bump(lo / (Rational(1) - lo));
    }
  }

  // Guard: the outer rim clipped to the wedge must lie in the next dilation,
  // at the certified index and at its successor.
  auto wedge = detail::wedge_constraints(s, q);
  auto cov_check = [&](const Int& i) {
    for (size_t e = 0; e < n; ++e) {
      const Point& a = verts[e];
      const Point& b = verts[(e + 1) % n];
      const Point& inside = verts[(e + 2) % n];
      HalfPlane h = detail::edge_constraint(a, b, inside, false);
      if (!(h.c > 0)) continue;
      auto clipped =
          detail::clip_segment(detail::scale(a, i), detail::scale(b, i), wedge);
      if (!clipped) continue;
      if (!detail::in_dilated_polygon(f, clipped->first, i + 1) ||
          !detail::in_dilated_polygon(f, clipped->second, i + 1))
        return false;
    }
    return true;
  };
  if (!cov_check(index) || !cov_check(index + 1))
    throw InternalError("wedge coverage guard failed");

  ConvexPolygon star = detail::star_hull(f);
  std::vector<Point> scaled;
  for (const auto& v : star.vertices()) scaled.push_back(detail::scale(v, index + 1));
  LatticeRegion region;
  region.include = hull_constraints(scaled);
  for (const auto& h : wedge) region.include.push_back(h);
  return WedgeCoverage{index, enumerate_lattice(region)};
}

// ---------------------------------------------------------------------------
// Circle scan window. Outside the window, membership is forced: either the
// chord-width criterion 4(r^2 |x|^2 - cross(x,c)^2) >= (|c|^2-r^2)^2 holds,
// or the point hugs a tangent ray where inter-dilation pockets are provably
// too shallow to contain off-ray lattice points.

struct CircleCert {
  Int k_overlap;   // first k with kC ∩ (k+1)C nonempty
  Int k_cert;      // pockets lattice-free and high crossings clear of the strip
  Rational r_t2;   // transversal-side window radius (squared), 0 if none
};

namespace detail {

inline Int first_odd_exceeding(const Rational& bound) {
  // least u = 2k+1 with u^2 > bound, returned as k
  if (bound < 0) return 0;
  Int u = isqrt_floor(rfloor(bound));
  while (Rational(u) * Rational(u) <= bound) ++u;
  if (u % 2 == 0) ++u;
  return Int((u - 1) / 2);
}

}  // namespace detail

inline CircleCert circle_cert(const BodySemigroup& s) {
  const Circle& c = s.circle();
  Rational M = c.center_norm2() - c.radius2();
  Rational r2 = c.radius2();
  CircleCert out;
  {
    // overlap: least k with |c|^2 <= (2k+1)^2 r^2
    Int k = 0;
    while (c.center_norm2() > Rational((2 * k + 1) * (2 * k + 1)) * r2) ++k;
    out.k_overlap = k;
  }
  out.k_cert = out.k_overlap;
  out.r_t2 = Rational(0);
  for (int i = 1; i <= 2; ++i) {
    const RayContact& rc = s.contact(i);
    if (rc.kind == RayContact::kTangentPoint) {
      Rational t2 = dot(rc.p1, rc.p1);
      Rational v2 = Rational(rc.v.dx * rc.v.dx + rc.v.dy * rc.v.dy);
      // pocket height below lattice clearance: t^4 |v|^2 < 4 r^2 (2k+1)^2
      Int kp = detail::first_odd_exceeding(t2 * t2 * v2 / (Rational(4) * r2));
      // the upper circle crossing above the strip: r^2 t^4 (2k+1)^2 > M (t^2+r^2)^2
      Int kb = detail::first_odd_exceeding(M * (t2 + r2) * (t2 + r2) / (r2 * t2 * t2));
      if (kp > out.k_cert) out.k_cert = kp;
      if (kb > out.k_cert) out.k_cert = kb;
    } else if (rc.kind == RayContact::kAxisChord) {
      Rational p2 = (rc.v.dy == 0) ? c.center().y * c.center().y
                                   : c.center().x * c.center().x;
      Rational denom = r2 - p2;
      if (denom <= 0) throw InternalError("transversal axis with tangential distance");
      Rational rt2 = M * M / (Rational(4) * denom);
      if (rt2 > out.r_t2) out.r_t2 = rt2;
    }
  }
  return out;
}

struct CircleScanResult {
  std::vector<LatticePoint> gaps;  // interior lattice points not in the semigroup
  bool exhaustive;
  Int k_max;
};

inline CircleScanResult circle_interior_gaps(const BodySemigroup& s,
                                             std::optional<Int> override_bound) {
  const Circle& c = s.circle();
  CircleCert cert = circle_cert(s);
  Int k_default = std::max(Int(4 * cert.k_overlap), Int(cert.k_cert + 2));
  Int k_max = override_bound ? std::max(Int(4 * cert.k_overlap), *override_bound) : k_default;
  bool exhaustive = k_max >= cert.k_cert + 2;
  Rational r2 = Rational(k_max) * Rational(k_max) * Rational(2) *
                (c.center_norm2() + c.radius2());
  if (exhaustive && cert.r_t2 > r2) r2 = cert.r_t2;
  Int lim = isqrt_floor(rfloor(r2)) + 1;
  std::vector<LatticePoint> gaps;
  for (Int x = 0; x <= lim; ++x)
    for (Int y = 0; y <= lim; ++y) {
      if (Rational(x * x + y * y) > r2) continue;
      if (!s.strictly_in_cone(x, y)) continue;
      if (!s.membership(x, y)) gaps.push_back(LatticePoint{x, y});
    }
  return {sorted_unique(std::move(gaps)), exhaustive, k_max};
}

}  // namespace cbsg
