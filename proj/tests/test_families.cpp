#include <catch2/catch_amalgamated.hpp>

#include <cbsg/families.hpp>

#include "support.hpp"

using namespace cbsg;
using cbsg_test::lp;
using cbsg_test::pt;

TEST_CASE("family triangles have the published vertices", "[families]") {
  auto t3 = std::get<ConvexPolygon>(gorenstein_triangle(3));
  std::vector<Point> expect3{pt("4", "0"), pt("10", "0"), pt("7", "3")};
  REQUIRE(t3.vertices() == expect3);
  auto t2 = std::get<ConvexPolygon>(gorenstein_triangle(2));
  std::vector<Point> expect2{pt("4", "0"), pt("8", "0"), pt("6", "2")};
  REQUIRE(t2.vertices() == expect2);
  REQUIRE_THROWS_AS(gorenstein_triangle(1), InvalidArgument);
}

TEST_CASE("expected apery table", "[families]") {
  auto a3 = expected_apery(3);
  std::vector<LatticePoint> fig3 = {lp(0, 0), lp(5, 0), lp(6, 0), lp(7, 0),
                                    lp(5, 1), lp(6, 1), lp(7, 1), lp(8, 1),
                                    lp(6, 2), lp(7, 2), lp(8, 2), lp(13, 2)};
  REQUIRE(a3 == sorted_unique(std::move(fig3)));

  auto a2 = expected_apery(2);
  std::vector<LatticePoint> row1;
  for (const auto& p : a2)
    if (p.y == 1) row1.push_back(p);
  REQUIRE(row1 == std::vector<LatticePoint>{lp(5, 1), lp(6, 1), lp(7, 1), lp(12, 1)});

  for (Int k = 2; k <= 10; ++k) {
    auto a = expected_apery(k);
    // nothing at or above y = k, unique point with x = 10+k
    for (const auto& p : a) REQUIRE(p.y < k);
    REQUIRE(std::count(a.begin(), a.end(), LatticePoint{10 + k, k - 1}) == 1);
  }
  REQUIRE_THROWS_AS(expected_apery(0), InvalidArgument);
}

TEST_CASE("random triangles are deterministic and valid", "[families]") {
  auto a = random_triangle(42, 8);
  auto b = random_triangle(42, 8);
  REQUIRE(std::get<ConvexPolygon>(a).vertices() == std::get<ConvexPolygon>(b).vertices());
  for (unsigned long long seed = 1; seed <= 20; ++seed) {
    auto body = random_triangle(seed, 8);
    REQUIRE_NOTHROW(BodySemigroup::create(body));
  }
}
