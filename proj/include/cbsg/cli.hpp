#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "families.hpp"
#include "io.hpp"
#include "svg.hpp"

namespace cbsg {

// Exit codes: 0 verdict computed, 1 input/parse error, 2 precondition
// violated, 3 inconclusive within the configured bound.

namespace cli_detail {

inline Json load_body_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

inline LatticePoint parse_point_arg(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("expected X,Y");
  try {
    Int x(s.substr(0, comma)), y(s.substr(comma + 1));
    if (x < 0 || y < 0) throw ParseError("point must be nonnegative");
    return LatticePoint{x, y};
  } catch (const std::runtime_error&) {
    throw ParseError("expected integer pair X,Y");
  }
}

inline Box parse_box_arg(const std::string& s) {
  auto x = s.find('x');
  if (x == std::string::npos) throw ParseError("expected WxH");
  try {
    Box b{Int(s.substr(0, x)), Int(s.substr(x + 1))};
    if (b.max_x <= 0 || b.max_y <= 0) throw ParseError("box sides must be positive");
    return b;
  } catch (const std::runtime_error&) {
    throw ParseError("expected integer box WxH");
  }
}

struct Emitter {
  bool json = false;
  bool timing = true;
  std::ostream& out;
  std::string command;
  Json doc;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Emitter(std::ostream& o, std::string cmd, bool as_json, bool with_timing)
      : json(as_json), timing(with_timing), out(o), command(std::move(cmd)) {
    doc["schema_version"] = 1;
    doc["command"] = command;
  }
  void echo_input(const Json& j) { doc["input"] = j; }
  void finish() {
    if (timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      doc["timing_ms"] = ms;
    }
    if (json) out << doc.dump(2) << "\n";
  }
};

inline int verdict_exit(Verdict v) { return v == Verdict::inconclusive ? 3 : 0; }

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"convex body semigroup toolkit"};
  app.require_subcommand(1);
  bool as_json = false, no_timing = false, plain = false, fam_emit = false, fam_check = false;
  std::string body_path, point_arg, box_arg, out_path, family_name;
  long long scan_bound = -1, seed = 0, k_arg = -1, k_max = 4;
  app.add_flag("--json", as_json, "emit a JSON report");
  app.add_flag("--no-timing", no_timing, "omit the timing field");
  app.add_option("--scan-bound", scan_bound, "override the circle gap-scan bound");
  app.add_option("--seed", seed, "seed for randomized helpers");

  auto* member = app.add_subcommand("member", "membership of a lattice point");
  member->add_option("body", body_path)->required();
  member->add_option("--point", point_arg)->required();

  auto* generators = app.add_subcommand("generators", "extremal ray generators");
  generators->add_option("body", body_path)->required();

  auto* check_cm_cmd = app.add_subcommand("check-cm", "Cohen-Macaulay check");
  check_cm_cmd->add_option("body", body_path)->required();

  auto* check_g_cmd = app.add_subcommand("check-gorenstein", "Gorenstein check");
  check_g_cmd->add_option("body", body_path)->required();

  auto* apery_cmd = app.add_subcommand("apery", "Apery intersection of n1 and n2");
  apery_cmd->add_option("body", body_path)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "members within a box (oracle sweep)");
  enum_cmd->add_option("body", body_path)->required();
  enum_cmd->add_option("--box", box_arg)->required();

  auto* ocm_cmd = app.add_subcommand("oracle-cm", "box-relative brute-force C-M check");
  ocm_cmd->add_option("body", body_path)->required();
  ocm_cmd->add_option("--box", box_arg)->required();

  auto* family_cmd = app.add_subcommand("family", "built-in example families");
  family_cmd->add_option("name", family_name)->required();
  family_cmd->add_option("--k", k_arg);
  family_cmd->add_flag("--emit-body", fam_emit);
  family_cmd->add_flag("--check", fam_check);

  auto* plot_cmd = app.add_subcommand("plot", "SVG figure of dilations and lattice");
  plot_cmd->add_option("body", body_path)->required();
  plot_cmd->add_option("--k-max", k_max);
  plot_cmd->add_option("--out", out_path);
  plot_cmd->add_flag("--plain", plain, "skip check decorations");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  CheckOptions opts;
  if (scan_bound >= 0) opts.scan_bound = Int(scan_bound);

  try {
    auto make_body = [&]() {
      Json j = cli_detail::load_body_doc(body_path);
      return std::pair<Json, BodySemigroup>(j, BodySemigroup::create(parse_body(j)));
    };

    if (*member) {
      cli_detail::Emitter em(out, "member", as_json, !no_timing);
      auto [j, s] = make_body();
      em.echo_input(j);
      LatticePoint p = cli_detail::parse_point_arg(point_arg);
      auto w = s.membership(p);
      Json r;
      r["point"] = lattice_json(p);
      r["member"] = w.has_value();
      if (w) r["witness_k"] = w->convert_to<long long>();
      em.doc["derived"] = derived_json(s);
      em.doc["result"] = r;
      em.finish();
      if (!as_json)
        out << "member: " << (w ? "yes (k = " + w->str() + ")" : "no") << "\n";
      return 0;
    }

    if (*generators) {
      cli_detail::Emitter em(out, "generators", as_json, !no_timing);
      auto [j, s] = make_body();
      em.echo_input(j);
      em.doc["derived"] = derived_json(s);
      em.doc["result"] = Json{{"n1", lattice_json(s.n(1))}, {"n2", lattice_json(s.n(2))}};
      em.finish();
      if (!as_json)
        out << "n1 = (" << s.n(1).x << "," << s.n(1).y << "), n2 = (" << s.n(2).x << ","
            << s.n(2).y << ")\n";
      return 0;
    }

    if (*check_cm_cmd || *check_g_cmd) {
      bool gorenstein = static_cast<bool>(*check_g_cmd);
      cli_detail::Emitter em(out, gorenstein ? "check-gorenstein" : "check-cm", as_json,
                             !no_timing);
      auto [j, s] = make_body();
      em.echo_input(j);
      em.doc["derived"] = derived_json(s);
      if (s.is_polygon()) {
        PolygonApparatus ap = build_apparatus(s);
        em.doc["derived"]["structure"] = structure_json(s, ap);
      }
      CheckReport rep = gorenstein ? check_gorenstein(s, opts) : check_cm(s, opts);
      em.doc["result"] = report_json(rep);
      em.finish();
      if (!as_json)
        out << rep.property << ": " << to_string(rep.verdict) << " (branch " << rep.branch
            << ", " << rep.certificate.level() << ")\n";
      return cli_detail::verdict_exit(rep.verdict);
    }

    if (*apery_cmd) {
      cli_detail::Emitter em(out, "apery", as_json, !no_timing);
      auto [j, s] = make_body();
      em.echo_input(j);
      em.doc["derived"] = derived_json(s);
      AperyIntersection ap = apery_intersection(s, opts);
      em.doc["result"] = Json{{"points", lattice_list_json(ap.points)},
                              {"maximals", lattice_list_json(ap.maximals)}};
      em.finish();
      if (!as_json) {
        out << "apery points:";
        for (const auto& p : ap.points) out << " (" << p.x << "," << p.y << ")";
        out << "\nmaximals:";
        for (const auto& p : ap.maximals) out << " (" << p.x << "," << p.y << ")";
        out << "\n";
      }
      return 0;
    }

    if (*enum_cmd) {
      cli_detail::Emitter em(out, "enumerate", as_json, !no_timing);
      auto [j, s] = make_body();
      em.echo_input(j);
      Box box = cli_detail::parse_box_arg(box_arg);
      auto members = oracle_enumerate(s, box);
      std::vector<LatticePoint> pts(members.begin(), members.end());
      em.doc["derived"] = derived_json(s);
      em.doc["result"] =
          Json{{"box", Json::array({box.max_x.convert_to<long long>(),
                                    box.max_y.convert_to<long long>()})},
               {"count", pts.size()},
               {"points", lattice_list_json(pts)}};
      em.finish();
      if (!as_json) out << "members in box: " << pts.size() << "\n";
      return 0;
    }

    if (*ocm_cmd) {
      cli_detail::Emitter em(out, "oracle-cm", as_json, !no_timing);
      auto [j, s] = make_body();
      em.echo_input(j);
      Box box = cli_detail::parse_box_arg(box_arg);
      auto witness = oracle_cm_witness(s, box);
      Json r;
      r["box"] = Json::array(
          {box.max_x.convert_to<long long>(), box.max_y.convert_to<long long>()});
      r["box_relative"] = true;
      r["witness"] = witness ? lattice_json(*witness) : Json(nullptr);
      em.doc["derived"] = derived_json(s);
      em.doc["result"] = r;
      em.finish();
      if (!as_json)
        out << "oracle witness: "
            << (witness ? "(" + witness->x.str() + "," + witness->y.str() + ")" : "none")
            << "\n";
      return 0;
    }

    if (*family_cmd) {
      if (family_name != "gorenstein-triangle")
        throw InvalidArgument("unknown family '" + family_name + "'");
      if (k_arg < 0) throw InvalidArgument("family requires --k");
      ConvexBody body = gorenstein_triangle(Int(k_arg));
      if (!fam_check) {
        // Default action emits the body document.
        out << body_json(body).dump(2) << "\n";
        return 0;
      }
      cli_detail::Emitter em(out, "family", as_json, !no_timing);
      em.echo_input(body_json(body));
      BodySemigroup s = BodySemigroup::create(body);
      CheckReport rep = check_gorenstein(s, opts);
      bool match = rep.apery && rep.apery->points == expected_apery(Int(k_arg));
      em.doc["derived"] = derived_json(s);
      em.doc["result"] = Json{{"k", k_arg},
                              {"gorenstein", rep.verdict == Verdict::yes},
                              {"maximals", lattice_list_json(rep.witnesses)},
                              {"apery_matches_expected", match}};
      em.finish();
      if (!as_json)
        out << "gorenstein: " << to_string(rep.verdict)
            << ", apery matches expected: " << (match ? "yes" : "no") << "\n";
      return cli_detail::verdict_exit(rep.verdict);
    }

    if (*plot_cmd) {
      auto [j, s] = make_body();
      PlotDecorations deco;
      PolygonApparatus ap;
      AperyIntersection apery;
      bool have_ap = false, have_apery = false;
      if (!plain) {
        try {
          if (s.is_polygon()) {
            ap = build_apparatus(s);
            have_ap = true;
          }
          apery = apery_intersection(s, opts);
          have_apery = true;
        } catch (const Error&) {
          // decoration-free fallback
        }
      }
      if (have_ap) deco.apparatus = &ap;
      if (have_apery) deco.apery = &apery;
      std::string svg = render_svg(s, Int(k_max), deco);
      if (out_path.empty()) {
        out << svg;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + out_path + "'");
        f << svg;
        if (!as_json) out << "wrote " << out_path << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    Json ej;
    ej["schema_version"] = 1;
    ej["error"] = Json{{"kind", e.kind()}, {"message", e.what()}};
    if (as_json)
      out << ej.dump(2) << "\n";
    else
      err << e.kind() << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cbsg
