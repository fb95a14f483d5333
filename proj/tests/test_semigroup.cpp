#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <cbsg/semigroup.hpp>

#include "support.hpp"

using namespace cbsg;
using cbsg_test::fixture_semigroup;
using cbsg_test::lp;
using cbsg_test::pt;

TEST_CASE("membership on the triangle fixture", "[semigroup]") {
  auto s = fixture_semigroup("fig3_triangle.json");
  auto w = s.membership(lp(5, 0));
  REQUIRE(w.has_value());
  REQUIRE(*w == 1);
  REQUIRE(*s.membership(lp(0, 0)) == 0);
  REQUIRE_FALSE(s.membership(lp(1, 0)).has_value());
  REQUIRE_FALSE(s.membership(Int(-1), Int(2)).has_value());
}

TEST_CASE("transversal segment polygons are rejected", "[semigroup]") {
  ConvexBody seg = ConvexPolygon::create({pt("1", "0"), pt("0", "1")});
  REQUIRE_THROWS_AS(BodySemigroup::create(seg), UnsupportedSegmentPolygon);
}

TEST_CASE("ray generators of the triangle fixture", "[semigroup]") {
  auto s = fixture_semigroup("fig3_triangle.json");
  REQUIRE(s.n(1) == lp(7, 3));
  REQUIRE(s.n(2) == lp(4, 0));
  REQUIRE(s.contact(1).kind == RayContact::kVertexPoint);
  REQUIRE(s.contact(2).kind == RayContact::kSegment);
  REQUIRE(s.contact(2).alpha == parse_rational("4"));
  REQUIRE(s.contact(2).beta == parse_rational("10"));
}

TEST_CASE("ray generators of the circle fixture", "[semigroup]") {
  auto s = fixture_semigroup("fig1_circle.json");
  REQUIRE(s.n(1) == lp(8, 6));
  REQUIRE(s.n(2) == lp(24, 10));
  REQUIRE(s.contact(1).kind == RayContact::kTangentPoint);
  REQUIRE(s.contact(1).p1 == pt("8/5", "6/5"));
  REQUIRE(s.contact(2).p1 == pt("24/13", "10/13"));
}

TEST_CASE("integral ray vertex gives multiplier one", "[semigroup]") {
  auto s = BodySemigroup::create(
      ConvexPolygon::create({pt("1", "1"), pt("2", "1"), pt("2", "2")}));
  REQUIRE(s.n(1) == lp(1, 1));
  REQUIRE(s.n_mult(1) == 1);
}

TEST_CASE("generator minimality along the rays", "[semigroup]") {
  for (const char* name : {"fig3_triangle.json", "fig1_circle.json"}) {
    auto s = fixture_semigroup(name);
    for (int i = 1; i <= 2; ++i) {
      const Direction& v = s.tau(i);
      REQUIRE(cross(v, s.n(i)) == 0);
      REQUIRE(s.member(s.n(i)));
      // no smaller positive multiple of the primitive direction is a member
      Int m = (v.dx != 0) ? Int(s.n(i).x / v.dx) : Int(s.n(i).y / v.dy);
      for (Int t = 1; t < m; ++t)
        REQUIRE_FALSE(s.member(LatticePoint{v.dx * t, v.dy * t}));
    }
  }
}

TEST_CASE("ray generatedness", "[semigroup]") {
  auto fig3 = fixture_semigroup("fig3_triangle.json");
  LatticePoint w;
  REQUIRE_FALSE(fig3.ray_generated(2, &w));
  REQUIRE(w == lp(5, 0));  // member of the chord not a multiple of (4,0)
  REQUIRE(fig3.ray_generated(1));

  auto fig1 = fixture_semigroup("fig1_circle.json");
  REQUIRE(fig1.ray_generated(1));
  REQUIRE(fig1.ray_generated(2));

  // segment contact reaching the origin: multiplier one, generated
  auto simplex = fixture_semigroup("unit_simplex.json");
  REQUIRE(simplex.n_mult(1) == 1);
  REQUIRE(simplex.ray_generated(1));
  REQUIRE(simplex.ray_generated(2));
}

TEST_CASE("interiority", "[semigroup]") {
  auto s = fixture_semigroup("fig3_triangle.json");
  REQUIRE(s.is_interior(lp(5, 1)));
  REQUIRE_FALSE(s.is_interior(lp(4, 0)));
  REQUIRE_FALSE(s.is_interior(lp(0, 0)));
  REQUIRE_FALSE(s.is_interior(lp(7, 3)));
}

TEST_CASE("semigroup order", "[semigroup]") {
  auto s = fixture_semigroup("fig3_triangle.json");
  REQUIRE(s.leq(lp(5, 0), lp(5, 0)));
  REQUIRE(s.leq(lp(5, 0), lp(13, 2)));  // difference (8,2) is a member
  REQUIRE_FALSE(s.leq(lp(4, 0), lp(5, 0)));
  REQUIRE_FALSE(s.leq(lp(5, 0), lp(4, 0)));
}

TEST_CASE("membership witnesses satisfy the dilation test", "[semigroup]") {
  for (const char* name : {"fig3_triangle.json", "fig1_circle.json", "fig2_polygon.json"}) {
    auto s = fixture_semigroup(name);
    for (long long x = 0; x <= 14; ++x)
      for (long long y = 0; y <= 9; ++y) {
        auto w = s.membership(lp(x, y));
        if (!w) continue;
        REQUIRE(point_in_dilation(s.body(), lp(x, y), *w));
        for (Int k = 1; k < *w; ++k)
          REQUIRE_FALSE(point_in_dilation(s.body(), lp(x, y), k));
      }
  }
}

TEST_CASE("closure under addition", "[semigroup][property]") {
  std::mt19937_64 gen(7);
  for (const char* name : {"fig3_triangle.json", "fig1_circle.json"}) {
    auto s = fixture_semigroup(name);
    std::vector<LatticePoint> members;
    for (long long x = 0; x <= 40 && members.size() < 120; ++x)
      for (long long y = 0; y <= 40 && members.size() < 120; ++y)
        if (s.member(lp(x, y))) members.push_back(lp(x, y));
    REQUIRE(members.size() >= 20);
    for (int trial = 0; trial < 200; ++trial) {
      const auto& p = members[gen() % members.size()];
      const auto& q = members[gen() % members.size()];
      REQUIRE(s.member(p + q));
    }
  }
}

TEST_CASE("order properties on sampled members", "[semigroup][property]") {
  auto s = fixture_semigroup("fig3_triangle.json");
  std::vector<LatticePoint> members;
  for (long long x = 0; x <= 25; ++x)
    for (long long y = 0; y <= 10; ++y)
      if (s.member(lp(x, y))) members.push_back(lp(x, y));
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& a = members[gen() % members.size()];
    const auto& b = members[gen() % members.size()];
    const auto& c = members[gen() % members.size()];
    REQUIRE(s.leq(a, a));
    if (s.leq(a, b) && s.leq(b, a)) REQUIRE(a == b);
    if (s.leq(a, b) && s.leq(b, c)) REQUIRE(s.leq(a, c));
  }
}

TEST_CASE("point contact rays are always generated", "[semigroup][property]") {
  for (unsigned long long seed = 100; seed < 140; ++seed) {
    auto body = random_triangle(seed, 8, 2);
    auto s = BodySemigroup::create(body);
    for (int i = 1; i <= 2; ++i)
      if (s.contact(i).is_point()) REQUIRE(s.ray_generated(i));
  }
}
