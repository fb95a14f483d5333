#pragma once

#include <random>

#include "semigroup.hpp"

namespace cbsg {

// Triangles (4,0), (4+2k,0), (4+k,k); their semigroups are Gorenstein for
// every k >= 2 with unique maximal Apery element (10+k, k-1).
inline ConvexBody gorenstein_triangle(const Int& k) {
  if (k < 2) throw InvalidArgument("family requires k >= 2");
  std::vector<Point> v{{Rational(4), Rational(0)},
                       {Rational(4 + 2 * k), Rational(0)},
                       {Rational(4 + k), Rational(k)}};
  return ConvexPolygon::create(std::move(v));
}

// The Apery intersection of the family triangle, written out row by row; an
// independent fixture against the structural computation.
inline std::vector<LatticePoint> expected_apery(const Int& k) {
  if (k < 2) throw InvalidArgument("family requires k >= 2");
  std::vector<LatticePoint> out;
  out.push_back({0, 0});
  out.push_back({5, 0});
  out.push_back({6, 0});
  out.push_back({7, 0});
  for (Int y = 1; y <= k - 2; ++y)
    for (Int j = 0; j <= 3; ++j) out.push_back({4 + y + j, y});
  out.push_back({3 + k, k - 1});
  out.push_back({4 + k, k - 1});
  out.push_back({5 + k, k - 1});
  out.push_back({10 + k, k - 1});
  return sorted_unique(std::move(out));
}

namespace detail {

// Portable bounded draw; uniformity beyond determinism is not needed here.
inline long long draw(std::mt19937_64& gen, long long lo, long long hi) {
  return lo + static_cast<long long>(gen() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Point random_point(std::mt19937_64& gen, long long bound, long long max_den) {
  long long d = draw(gen, 1, max_den);
  long long nx = draw(gen, 0, bound * d);
  long long ny = draw(gen, 0, bound * d);
  return Point{make_rational(Int(nx), Int(d)), make_rational(Int(ny), Int(d))};
}

}  // namespace detail

// Deterministic per seed; resamples until the triangle is a valid simplicial
// body away from the degenerate configurations.
inline ConvexBody random_triangle(unsigned long long seed, long long bound,
                                  long long max_den = 2) {
  if (bound <= 0) throw InvalidArgument("bound must be positive");
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Point a = detail::random_point(gen, bound, max_den);
    Point b = detail::random_point(gen, bound, max_den);
    Point c = detail::random_point(gen, bound, max_den);
    if (collinear(a, b, c)) continue;
    try {
      ConvexBody body = ConvexPolygon::create({a, b, c});
      BodySemigroup::create(body);
      return body;
    } catch (const Error&) {
      continue;
    }
  }
  throw InternalError("random triangle sampling failed to converge");
}

}  // namespace cbsg
