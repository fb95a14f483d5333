#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "region.hpp"

namespace cbsg {

// Compact convex polygon in the nonnegative quadrant. Vertices are stored in
// counterclockwise order; collinear runs are merged at construction so that
// edges are genuine. A two-vertex instance (a segment) is representable so
// that ray classification can reject it with the proper diagnosis.
class ConvexPolygon {
 public:
  static ConvexPolygon create(std::vector<Point> verts) {
    std::vector<Point> v;
    for (const auto& p : verts) {
      if (p.x < 0 || p.y < 0) throw InvalidBody("polygon vertex outside the quadrant");
      if (v.empty() || !(v.back() == p)) v.push_back(p);
    }
    while (v.size() > 1 && v.front() == v.back()) v.pop_back();
    if (v.size() < 2) throw InvalidBody("polygon needs at least two distinct vertices");
    if (v.size() == 2) return ConvexPolygon(std::move(v));

    // Orientation: the signed area decides, mixed turn signs reject.
    Rational area2(0);
    size_t n = v.size();
    for (size_t i = 0; i < n; ++i) area2 += cross(v[i], v[(i + 1) % n]);
    if (area2 < 0) std::reverse(v.begin(), v.end());
    if (area2 == 0) {
      // All vertices collinear: collapse to the extreme pair.
      auto h = convex_hull(v);
      if (h.size() < 2) throw InvalidBody("degenerate polygon");
      return ConvexPolygon(std::move(h));
    }
    // Merge collinear consecutive vertices, then verify strict convexity.
    std::vector<Point> m;
    for (size_t i = 0; i < n; ++i) {
      const Point& prev = v[(i + n - 1) % n];
      const Point& cur = v[i];
      const Point& next = v[(i + 1) % n];
      if (cross(cur - prev, next - cur) != 0) m.push_back(cur);
    }
    if (m.size() < 3) {
      auto h = convex_hull(v);
      return ConvexPolygon(std::move(h));
    }
    n = m.size();
    for (size_t i = 0; i < n; ++i) {
      const Point& a = m[i];
      const Point& b = m[(i + 1) % n];
      const Point& c = m[(i + 2) % n];
      if (cross(b - a, c - b) <= 0) throw InvalidBody("polygon is not convex");
    }
    return ConvexPolygon(std::move(m));
  }

  const std::vector<Point>& vertices() const { return verts_; }
  bool is_segment() const { return verts_.size() == 2; }

  bool contains_point(const Point& p) const {
    if (is_segment()) return point_on_segment(p, verts_[0], verts_[1]);
    size_t n = verts_.size();
    for (size_t i = 0; i < n; ++i) {
      const Point& a = verts_[i];
      const Point& b = verts_[(i + 1) % n];
      if (cross(b - a, p - a) < 0) return false;
    }
    return true;
  }

  // {lambda >= 0 : lambda*d in F} as a closed interval, empty when the ray
  // misses the body.
  std::optional<std::pair<Rational, Rational>> lambda_interval(const Point& d) const {
    Rational lo(0);
    std::optional<Rational> hi;
    size_t n = verts_.size();
    auto constrain = [&](const Point& a, const Point& b, const Point& inside) -> bool {
      HalfPlane h = detail::edge_constraint(a, b, inside, false);
      // h.a*(l*dx) + h.b*(l*dy) <= h.c
      Rational coef = h.a * d.x + h.b * d.y;
      if (coef == 0) return h.c >= 0;
      Rational bound = h.c / coef;
      if (coef > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        lo = std::max(lo, bound);
      }
      return true;
    };
    if (is_segment()) {
      ConvexClause seg = closed_segment(verts_[0], verts_[1]);
      for (const auto& h : seg.planes) {
        Rational coef = h.a * d.x + h.b * d.y;
        if (coef == 0) {
          if (h.c < 0) return std::nullopt;
          continue;
        }
        Rational bound = h.c / coef;
        if (coef > 0) {
          if (!hi || bound < *hi) hi = bound;
        } else {
          lo = std::max(lo, bound);
        }
      }
    } else {
      for (size_t i = 0; i < n; ++i)
        if (!constrain(verts_[i], verts_[(i + 1) % n], verts_[(i + 2) % n]))
          return std::nullopt;
    }
    if (!hi || *hi < lo) return std::nullopt;
    return std::make_pair(lo, *hi);
  }

 private:
  explicit ConvexPolygon(std::vector<Point> v) : verts_(std::move(v)) {}
  std::vector<Point> verts_;
};

// Closed disk with rational center and radius; the origin is strictly
// outside and the disk meets the nonnegative quadrant.
class Circle {
 public:
  static Circle create(Point center, Rational radius) {
    if (radius <= 0) throw InvalidBody("circle radius must be positive");
    Rational c2 = dot(center, center);
    Rational r2 = radius * radius;
    if (c2 <= r2) throw InvalidBody("origin must lie strictly outside the disk");
    Rational nx = std::max(center.x, Rational(0));
    Rational ny = std::max(center.y, Rational(0));
    Point nearest{nx, ny};
    Point d = nearest - center;
    if (dot(d, d) > r2) throw InvalidBody("disk does not meet the nonnegative quadrant");
    return Circle(center, std::move(radius), std::move(c2), std::move(r2));
  }

  const Point& center() const { return center_; }
  const Rational& radius() const { return radius_; }
  const Rational& center_norm2() const { return c2_; }
  const Rational& radius2() const { return r2_; }

  bool contains_point(const Point& p) const {
    Point d = p - center_;
    return dot(d, d) <= r2_;
  }

 private:
  Circle(Point c, Rational r, Rational c2, Rational r2)
      : center_(std::move(c)), radius_(std::move(r)), c2_(std::move(c2)), r2_(std::move(r2)) {}
  Point center_;
  Rational radius_;
  Rational c2_, r2_;
};

using ConvexBody = std::variant<ConvexPolygon, Circle>;

inline bool body_contains(const ConvexBody& body, const Point& p) {
  return std::visit([&](const auto& b) { return b.contains_point(p); }, body);
}

// Exact description of {k real > 0 : P in k*body}. Polygon intervals have
// rational bounds (unbounded above when O lies in the body); circle intervals
// are the nonpositivity set of an integer quadratic with positive leading
// coefficient, kept symbolic because its roots need not be rational.
struct PolyInterval {
  Rational lo;
  std::optional<Rational> hi;  // nullopt = +infinity
};
struct CircleQuad {
  Int a, b, c;  // q(k) = a*k^2 + b*k + c, a > 0
  Int eval_sign(const Int& k) const {
    Int v = a * k * k + b * k + c;
    return v == 0 ? Int(0) : (v < 0 ? Int(-1) : Int(1));
  }
};

struct ScalingInterval {
  std::variant<std::monostate, PolyInterval, CircleQuad> v;
  bool empty() const { return std::holds_alternative<std::monostate>(v); }
};

inline ScalingInterval ray_body_interval(const LatticePoint& p, const ConvexBody& body) {
  if (p.x == 0 && p.y == 0) throw InvalidArgument("ray through the origin is undefined");
  if (std::holds_alternative<ConvexPolygon>(body)) {
    const auto& poly = std::get<ConvexPolygon>(body);
    auto iv = poly.lambda_interval(to_point(p));
    if (!iv) return {};
    auto [lo, hi] = *iv;
    if (hi <= 0) return {};
    PolyInterval out;
    out.lo = Rational(1) / hi;
    if (lo > 0) out.hi = Rational(1) / lo;
    return {out};
  }
  const auto& c = std::get<Circle>(body);
  // |P - k*c|^2 <= (k*r)^2  <=>  (|c|^2 - r^2) k^2 - 2(P.c) k + |P|^2 <= 0
  Rational A = c.center_norm2() - c.radius2();
  Rational B = Rational(-2) * dot(to_point(p), c.center());
  Rational C = dot(to_point(p), to_point(p));
  Int d = boost::multiprecision::lcm(boost::multiprecision::lcm(den(A), den(B)), den(C));
  CircleQuad q{num(A) * (d / den(A)), num(B) * (d / den(B)), num(C) * (d / den(C))};
  // Empty detection is deferred to the integer query; callers may also ask
  // for emptiness over the reals via the discriminant.
  Int disc = q.b * q.b - 4 * q.a * q.c;
  if (disc < 0) return {};
  return {q};
}

// Least integer k >= 1 in the interval, decided by exact sign evaluations.
inline std::optional<Int> integer_in_interval(const ScalingInterval& iv) {
  if (iv.empty()) return std::nullopt;
  if (std::holds_alternative<PolyInterval>(iv.v)) {
    const auto& p = std::get<PolyInterval>(iv.v);
    Int k = rceil(p.lo);
    if (k < 1) k = 1;
    if (p.hi && Rational(k) > *p.hi) return std::nullopt;
    return k;
  }
  const auto& q = std::get<CircleQuad>(iv.v);
  Int disc = q.b * q.b - 4 * q.a * q.c;
  if (disc < 0) return std::nullopt;
  Int s = isqrt_floor(disc);
  // Lower root in ((-b-s-1)/(2a), (-b-s)/(2a)]; scan the short window.
  Int start = ceil_div(-q.b - s - 1, 2 * q.a);
  if (start < 1) start = 1;
  Int stop = ceil_div(-q.b - s, 2 * q.a) + 1;
  if (stop < 1) stop = 1;
  for (Int k = start; k <= stop; ++k)
    if (q.eval_sign(k) <= 0) return k;
  return std::nullopt;
}

// Direct dilation test, independent of the interval machinery.
inline bool point_in_dilation(const ConvexBody& body, const LatticePoint& p, const Int& k) {
  if (k == 0) return p.x == 0 && p.y == 0;
  if (k < 0) return false;
  if (std::holds_alternative<ConvexPolygon>(body)) {
    Point q{make_rational(p.x, k), make_rational(p.y, k)};
    return std::get<ConvexPolygon>(body).contains_point(q);
  }
  const auto& c = std::get<Circle>(body);
  Rational dx = Rational(p.x) - Rational(k) * c.center().x;
  Rational dy = Rational(p.y) - Rational(k) * c.center().y;
  return dx * dx + dy * dy <= Rational(k) * Rational(k) * c.radius2();
}

// ---------------------------------------------------------------------------
// Extremal rays of the cone spanned by body ∪ {O}.

struct ConeRays {
  Direction tau1;  // greater slope
  Direction tau2;
};

namespace detail {

inline int slope_compare(const Direction& a, const Direction& b) {
  Int c = cross(a.dx, a.dy, b.dx, b.dy);
  return c == 0 ? 0 : (c > 0 ? -1 : 1);  // c > 0: b steeper than a
}

inline ConeRays pick_extremes(std::vector<Direction> cands) {
  if (cands.empty()) throw NotSimplicial("body spans no direction");
  Direction hi = cands[0], lo = cands[0];
  for (const auto& d : cands) {
    if (cross(hi.dx, hi.dy, d.dx, d.dy) > 0) hi = d;
    if (cross(lo.dx, lo.dy, d.dx, d.dy) < 0) lo = d;
  }
  if (hi == lo) throw NotSimplicial("body and origin have fewer than three non-aligned points");
  return {hi, lo};
}

}  // namespace detail

inline ConeRays cone_rays(const ConvexBody& body) {
  if (std::holds_alternative<ConvexPolygon>(body)) {
    const auto& poly = std::get<ConvexPolygon>(body);
    std::vector<Direction> dirs;
    for (const auto& v : poly.vertices())
      if (!(v.x == 0 && v.y == 0)) dirs.push_back(ray_direction(v));
    return detail::pick_extremes(std::move(dirs));
  }
  const auto& c = std::get<Circle>(body);
  const Rational a = c.center().x, b = c.center().y;
  const Rational r2 = c.radius2();
  // Simplicial iff the disk meets the open quadrant.
  bool simplicial = (a > 0 && b > 0) || (a <= 0 && a * a < r2 && b > 0) ||
                    (b <= 0 && b * b < r2 && a > 0);
  if (!simplicial) throw NotSimplicial("disk does not meet the open quadrant");
  bool y_hit = a * a <= r2 && b > 0;
  bool x_hit = b * b <= r2 && a > 0;
  std::vector<Direction> cands;
  if (y_hit) cands.push_back({0, 1});
  if (x_hit) cands.push_back({1, 0});
  if (!y_hit || !x_hit) {
    // Tangent lines from the origin: (a^2-r^2) m^2 - 2ab m + (b^2-r^2) = 0.
    Rational qa = a * a - r2;
    Rational qb = Rational(-2) * a * b;
    Rational qc = b * b - r2;
    std::vector<Rational> slopes;
    if (qa == 0) {
      if (qb != 0) slopes.push_back(-qc / qb);
    } else {
      Rational disc4 = r2 * (c.center_norm2() - r2);  // (Δ/4)
      auto s = exact_sqrt(disc4);
      if (!s) throw IrrationalRays("tangent slopes are irrational");
      slopes.push_back((a * b + *s) / qa);
      slopes.push_back((a * b - *s) / qa);
    }
    for (const auto& m : slopes) {
      if (m < 0) continue;
      // Tangency point: projection of the center onto the line y = m x.
      Rational t = (a + b * m) / (1 + m * m);
      Point tp{t, t * m};
      if (tp.x < 0 || tp.y < 0) continue;
      cands.push_back(reduce_primitive(den(m), num(m)));
    }
  }
  return detail::pick_extremes(std::move(cands));
}

}  // namespace cbsg
