// Acceptance suite: every criterion prints one PASS/FAIL line. All values are
// exact (rational arithmetic); the only tolerances are the two wall-clock
// budgets stated inline.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <cbsg/cli.hpp>
#include <cbsg/oracle.hpp>

#include "support.hpp"

using namespace cbsg;
using cbsg_test::fixture_path;
using cbsg_test::fixture_semigroup;
using cbsg_test::lp;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<LatticePoint> oracle_apery_intersection(const BodySemigroup& s, const Box& box) {
  auto members = oracle_enumerate(s, box);
  auto a1 = oracle_apery(s, s.n(1), box, &members);
  auto a2 = oracle_apery(s, s.n(2), box, &members);
  std::set<LatticePoint> set1(a1.begin(), a1.end());
  std::vector<LatticePoint> inter;
  for (const auto& p : a2)
    if (set1.count(p)) inter.push_back(p);
  return sorted_unique(std::move(inter));
}

Int validation_side(const BodySemigroup& s, const Point& q) {
  Int side = 3 * (s.n(1).x + s.n(1).y + s.n(2).x + s.n(2).y + rceil(q.x) + rceil(q.y)) + 12;
  return side;
}

}  // namespace

int main() {
  int failures = 0;
  auto criterion = [&](int num, const std::string& name,
                       const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
  };

  criterion(1, "circle fixture is Cohen-Macaulay with oracle-validated generators",
            [&](std::string& detail) {
              auto t0 = std::chrono::steady_clock::now();
              auto s = fixture_semigroup("fig1_circle.json");
              if (!(s.n(1) == lp(8, 6) && s.n(2) == lp(24, 10))) return false;
              auto rep = check_cm(s);
              if (rep.verdict != Verdict::yes) return false;
              Box box{60, 60};
              auto members = oracle_enumerate(s, box);
              if (!members.count(s.n(1)) || !members.count(s.n(2))) return false;
              // minimality along the rays within the box
              if (members.count(lp(4, 3)) || members.count(lp(12, 5))) return false;
              for (Int t = 1; t < 2; ++t)
                if (members.count(lp(4, 3))) return false;
              if (oracle_cm_witness(s, box, &members)) return false;
              double dt = seconds_since(t0);
              std::ostringstream os;
              os.precision(2);
              os << std::fixed << dt << "s";
              detail = os.str();
              return dt < 5.0;
            });

  criterion(2, "k=3 family triangle is Gorenstein with the published Apery set",
            [&](std::string&) {
              auto s = fixture_semigroup("family_k3.json");
              auto rep = check_gorenstein(s);
              if (rep.verdict != Verdict::yes) return false;
              if (!rep.apery) return false;
              if (rep.apery->points != expected_apery(3)) return false;
              return rep.apery->maximals == std::vector<LatticePoint>{lp(13, 2)};
            });

  criterion(3, "family sweep k=2..10 matches the expected table", [&](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    for (Int k = 2; k <= 10; ++k) {
      auto s = BodySemigroup::create(gorenstein_triangle(k));
      auto rep = check_gorenstein(s);
      if (rep.verdict != Verdict::yes) return false;
      if (!rep.apery || rep.apery->points != expected_apery(k)) return false;
      if (rep.apery->maximals != std::vector<LatticePoint>{LatticePoint{10 + k, k - 1}})
        return false;
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << dt << "s";
    detail = os.str();
    return dt < 60.0;
  });

  criterion(4, "50 random rational triangles are Cohen-Macaulay with clean oracles",
            [&](std::string&) {
              int done = 0;
              for (unsigned long long seed = 1; done < 50; ++seed) {
                auto body = random_triangle(seed, 5, 2);
                auto s = BodySemigroup::create(body);
                PolygonApparatus ap = build_apparatus(s);
                Int side = validation_side(s, ap.q);
                if (side > 150) continue;  // redraw when the box leaves desk scale
                auto rep = check_cm(s);
                if (rep.verdict != Verdict::yes) return false;
                if (oracle_cm_witness(s, Box{side, side})) return false;
                ++done;
              }
              return true;
            });

  criterion(5, "structural verdict equals the boxed oracle on fixtures and 50 random polygons",
            [&](std::string&) {
              std::vector<BodySemigroup> bodies;
              for (const char* name : {"fig1_circle.json", "fig2_polygon.json",
                                       "fig3_triangle.json", "unit_simplex.json",
                                       "noncm_quad.json"})
                bodies.push_back(fixture_semigroup(name));
              int done = 0;
              for (unsigned long long seed = 1000; done < 50; ++seed) {
                ConvexBody body = (done % 2 == 0)
                                      ? random_triangle(seed, 5, 2)
                                      : cbsg_test::random_quadrilateral(seed, 5, 2);
                auto s = BodySemigroup::create(body);
                PolygonApparatus ap = build_apparatus(s);
                if (validation_side(s, ap.q) > 150) continue;
                bodies.push_back(std::move(s));
                ++done;
              }
              for (const auto& s : bodies) {
                Point q{Rational(0), Rational(0)};
                if (s.is_polygon()) q = build_apparatus(s).q;
                Int side = validation_side(s, q);
                if (side > 200) side = 200;
                auto rep = check_cm(s);
                if (rep.verdict == Verdict::inconclusive) return false;
                auto witness = oracle_cm_witness(s, Box{side, side});
                if ((rep.verdict == Verdict::no) != witness.has_value()) return false;
              }
              return true;
            });

  criterion(6, "membership closure and agreement with the dilation sweep",
            [&](std::string&) {
              std::mt19937_64 gen(424242);
              for (const char* name : {"fig1_circle.json", "fig2_polygon.json",
                                       "fig3_triangle.json", "unit_simplex.json"}) {
                auto s = fixture_semigroup(name);
                Box box{40, 40};
                auto members = oracle_enumerate(s, box);
                for (Int x = 0; x <= box.max_x; ++x)
                  for (Int y = 0; y <= box.max_y; ++y)
                    if (members.count(LatticePoint{x, y}) !=
                        (s.membership(x, y).has_value() ? 1u : 0u))
                      return false;
                std::vector<LatticePoint> pool(members.begin(), members.end());
                for (int trial = 0; trial < 200; ++trial) {
                  const auto& p = pool[gen() % pool.size()];
                  const auto& q = pool[gen() % pool.size()];
                  if (!s.member(p + q)) return false;
                }
              }
              return true;
            });

  criterion(7, "structural identities hold on every vertex-contact side",
            [&](std::string&) {
              std::vector<BodySemigroup> bodies;
              for (const char* name : {"fig2_polygon.json", "fig3_triangle.json"})
                bodies.push_back(fixture_semigroup(name));
              for (Int k = 2; k <= 6; ++k)
                bodies.push_back(BodySemigroup::create(gorenstein_triangle(k)));
              for (const auto& s : bodies) {
                for (int i = 1; i <= 2; ++i) {
                  if (!s.contact(i).is_point()) continue;
                  auto rs = build_ray_structure(s, i);
                  Point n_i = to_point(s.n(i));
                  if (!(rs.p1 * Rational(rs.j1) == rs.p1 * Rational(rs.j) + n_i))
                    return false;
                  // the three consecutive escape points lie on nu
                  if (!on_line(rs.nu, rs.v_point)) return false;
                  if (!on_line(rs.nu, rs.v_point + rs.p1)) return false;
                  if (!on_line(rs.nu, rs.v_point + rs.p1 + rs.p1)) return false;
                  for (Int h = 0; h <= rs.j1 + 3; ++h) {
                    Point a = rs.p1 * Rational(h);
                    Point b = rs.p1 * Rational(h + 1);
                    LatticeRegion region;
                    region.include = open_triangle(a, b, rs.w + a).planes;
                    for (const auto& p : enumerate_lattice(region))
                      if (s.member(p)) return false;
                    LatticeRegion seg;
                    seg.include = open_segment(a, b).planes;
                    for (const auto& p : enumerate_lattice(seg))
                      if (s.member(p)) return false;
                  }
                }
              }
              return true;
            });

  criterion(8, "stored non-Cohen-Macaulay polygon fails with a two-translate witness",
            [&](std::string&) {
              auto s = fixture_semigroup("noncm_quad.json");
              auto rep = check_cm(s);
              if (rep.verdict != Verdict::no) return false;
              if (rep.witnesses.empty()) return false;
              for (const auto& g : rep.witnesses) {
                if (s.member(g)) return false;
                if (!s.member(g + s.n(1))) return false;
                if (!s.member(g + s.n(2))) return false;
              }
              Point q = build_apparatus(s).q;
              Int side = validation_side(s, q);
              auto witness = oracle_cm_witness(s, Box{side, side});
              return witness.has_value();
            });

  criterion(9, "CLI contract: exit codes, JSON round-trip, SVG determinism",
            [&](std::string&) {
              auto run = [&](std::vector<std::string> args) {
                std::ostringstream out, err;
                int code = run_cli(args, out, err);
                return std::pair<int, std::string>(code, out.str());
              };
              if (run({"check-cm", fixture_path("fig1_circle.json"), "--json"}).first != 0)
                return false;
              if (run({"check-cm", fixture_path("noncm_quad.json"), "--json"}).first != 0)
                return false;
              if (run({"check-cm", fixture_path("bad.json")}).first != 1) return false;
              if (run({"check-cm", fixture_path("segment_polygon.json")}).first != 2)
                return false;
              if (run({"check-cm", fixture_path("irrational_circle.json")}).first != 2)
                return false;
              if (run({"check-cm", fixture_path("fig1_circle.json"), "--scan-bound", "1"})
                      .first != 3)
                return false;
              for (const char* name : {"fig1_circle.json", "fig2_polygon.json",
                                       "fig3_triangle.json", "unit_simplex.json",
                                       "noncm_quad.json"}) {
                std::vector<std::string> ja{"check-gorenstein", fixture_path(name), "--json",
                                            "--no-timing"};
                auto a = run(ja);
                auto b = run(ja);
                if (a.second != b.second) return false;
                Json j = Json::parse(a.second);
                if (j["schema_version"] != 1) return false;
                try {
                  parse_body(j["input"]);
                } catch (const Error&) {
                  return false;
                }
                std::vector<std::string> pa{"plot", fixture_path(name), "--k-max", "4"};
                auto p1 = run(pa);
                auto p2 = run(pa);
                if (p1.first != 0 || p1.second != p2.second) return false;
                if (p1.second.find("<svg") != 0) return false;
              }
              return true;
            });

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: FAILURES present")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
