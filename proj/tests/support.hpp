#pragma once

#include <fstream>
#include <random>
#include <string>

#include <cbsg/families.hpp>
#include <cbsg/io.hpp>

namespace cbsg_test {

inline std::string fixture_path(const std::string& name) {
  return std::string(CBSG_FIXTURE_DIR) + "/" + name;
}

inline cbsg::ConvexBody load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  cbsg::Json j;
  in >> j;
  return cbsg::parse_body(j);
}

inline cbsg::BodySemigroup fixture_semigroup(const std::string& name) {
  return cbsg::BodySemigroup::create(load_fixture(name));
}

inline cbsg::LatticePoint lp(long long x, long long y) {
  return cbsg::LatticePoint{cbsg::Int(x), cbsg::Int(y)};
}

inline cbsg::Point pt(const std::string& x, const std::string& y) {
  return cbsg::Point{cbsg::parse_rational(x), cbsg::parse_rational(y)};
}

// Random convex quadrilateral with rational vertices; resamples until the
// hull has four corners and the semigroup is valid.
inline cbsg::ConvexBody random_quadrilateral(unsigned long long seed, long long bound,
                                             long long max_den = 2) {
  std::mt19937_64 gen(seed);
  auto draw = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(gen() % static_cast<unsigned long long>(hi - lo + 1));
  };
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<cbsg::Point> pts;
    for (int i = 0; i < 4; ++i) {
      long long d = draw(1, max_den);
      pts.push_back(cbsg::Point{cbsg::make_rational(cbsg::Int(draw(0, bound * d)), cbsg::Int(d)),
                                cbsg::make_rational(cbsg::Int(draw(0, bound * d)), cbsg::Int(d))});
    }
    auto hull = cbsg::convex_hull(pts);
    if (hull.size() != 4) continue;
    try {
      cbsg::ConvexBody body = cbsg::ConvexPolygon::create(hull);
      cbsg::BodySemigroup::create(body);
      return body;
    } catch (const cbsg::Error&) {
      continue;
    }
  }
  throw cbsg::InternalError("quadrilateral sampling failed to converge");
}

}  // namespace cbsg_test
