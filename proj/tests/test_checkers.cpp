#include <catch2/catch_amalgamated.hpp>

#include <cbsg/checkers.hpp>
#include <cbsg/families.hpp>

#include "support.hpp"

using namespace cbsg;
using cbsg_test::fixture_semigroup;
using cbsg_test::lp;

TEST_CASE("interior equality on the circle fixture", "[checkers]") {
  auto s = fixture_semigroup("fig1_circle.json");
  auto ir = interior_equality(s);
  REQUIRE(ir.equal);
  REQUIRE(ir.gaps.empty());
  REQUIRE(ir.certificate.exhaustive);
}

TEST_CASE("interior inequality on the triangle fixture", "[checkers]") {
  auto s = fixture_semigroup("fig3_triangle.json");
  auto ir = interior_equality(s);
  REQUIRE_FALSE(ir.equal);
  REQUIRE_FALSE(ir.gaps.empty());
  REQUIRE(std::count(ir.gaps.begin(), ir.gaps.end(), lp(3, 1)) == 1);
  for (const auto& g : ir.gaps) {
    REQUIRE(s.strictly_in_cone(g.x, g.y));
    REQUIRE_FALSE(s.member(g));
  }
}

TEST_CASE("interior equality is trivial for the full cone", "[checkers]") {
  auto s = fixture_semigroup("unit_simplex.json");
  auto ir = interior_equality(s);
  REQUIRE(ir.equal);
}

TEST_CASE("check_cm fixtures", "[checkers]") {
  auto fig1 = fixture_semigroup("fig1_circle.json");
  auto rep1 = check_cm(fig1);
  REQUIRE(rep1.verdict == Verdict::yes);
  REQUIRE(rep1.branch == "circle");
  REQUIRE(rep1.certificate.exhaustive);

  auto fig3 = fixture_semigroup("fig3_triangle.json");
  auto rep3 = check_cm(fig3);
  REQUIRE(rep3.verdict == Verdict::yes);
  REQUIRE(rep3.branch == "polygon-case2");

  auto fam5 = BodySemigroup::create(gorenstein_triangle(5));
  REQUIRE(check_cm(fam5).verdict == Verdict::yes);

  auto simplex = fixture_semigroup("unit_simplex.json");
  auto repS = check_cm(simplex);
  REQUIRE(repS.verdict == Verdict::yes);
  REQUIRE(repS.branch == "polygon-both-segments");
}

TEST_CASE("lowered circle scan bound yields an honest inconclusive", "[checkers]") {
  auto s = fixture_semigroup("fig1_circle.json");
  CheckOptions opts;
  opts.scan_bound = Int(1);
  auto rep = check_cm(s, opts);
  REQUIRE(rep.verdict == Verdict::inconclusive);
  REQUIRE_FALSE(rep.certificate.exhaustive);
}

TEST_CASE("apery intersection of the triangle fixture", "[checkers]") {
  auto s = fixture_semigroup("fig3_triangle.json");
  auto ap = apery_intersection(s);
  REQUIRE(ap.points == expected_apery(3));
  REQUIRE(ap.maximals == std::vector<LatticePoint>{lp(13, 2)});
}

TEST_CASE("apery intersection of the circle fixture matches the oracle", "[checkers]") {
  auto s = fixture_semigroup("fig1_circle.json");
  auto ap = apery_intersection(s);
  Box box{60, 60};
  auto members = oracle_enumerate(s, box);
  auto o1 = oracle_apery(s, s.n(1), box, &members);
  auto o2 = oracle_apery(s, s.n(2), box, &members);
  std::set<LatticePoint> set1(o1.begin(), o1.end());
  std::vector<LatticePoint> inter;
  for (const auto& p : o2)
    if (set1.count(p)) inter.push_back(p);
  REQUIRE(ap.points == sorted_unique(std::move(inter)));
  REQUIRE_FALSE(ap.maximals.empty());
}

TEST_CASE("check_gorenstein on family members", "[checkers]") {
  auto rep3 = check_gorenstein(BodySemigroup::create(gorenstein_triangle(3)));
  REQUIRE(rep3.verdict == Verdict::yes);
  REQUIRE(rep3.witnesses == std::vector<LatticePoint>{lp(13, 2)});

  auto rep7 = check_gorenstein(BodySemigroup::create(gorenstein_triangle(7)));
  REQUIRE(rep7.verdict == Verdict::yes);
  REQUIRE(rep7.witnesses == std::vector<LatticePoint>{lp(17, 6)});
}

TEST_CASE("four-vertex fixture verdict agrees with the oracle", "[checkers]") {
  auto s = fixture_semigroup("fig2_polygon.json");
  auto rep = check_cm(s);
  Box box{40, 40};
  auto witness = oracle_cm_witness(s, box);
  REQUIRE((rep.verdict == Verdict::no) == witness.has_value());
  if (rep.verdict == Verdict::no) {
    REQUIRE_FALSE(rep.witnesses.empty());
    for (const auto& g : rep.witnesses) {
      REQUIRE_FALSE(s.member(g));
      REQUIRE(s.member(g + s.n(1)));
      REQUIRE(s.member(g + s.n(2)));
    }
  }
}

TEST_CASE("gorenstein never holds without cohen-macaulay", "[checkers][property]") {
  for (unsigned long long seed = 500; seed < 520; ++seed) {
    auto body = cbsg_test::random_quadrilateral(seed, 6, 2);
    auto s = BodySemigroup::create(body);
    auto g = check_gorenstein(s);
    if (g.verdict == Verdict::yes) REQUIRE(check_cm(s).verdict == Verdict::yes);
  }
}

TEST_CASE("structural verdict matches the boxed oracle on random bodies",
          "[checkers][property]") {
  int done = 0;
  for (unsigned long long seed = 900; done < 12; ++seed) {
    ConvexBody body = (seed % 2 == 0) ? random_triangle(seed, 5, 2)
                                      : cbsg_test::random_quadrilateral(seed, 5, 2);
    auto s = BodySemigroup::create(body);
    Int side = 3 * (s.n(1).x + s.n(1).y + s.n(2).x + s.n(2).y) + 12;
    if (side > 130) continue;
    auto rep = check_cm(s);
    auto witness = oracle_cm_witness(s, Box{side, side});
    REQUIRE((rep.verdict == Verdict::no) == witness.has_value());
    ++done;
  }
}
