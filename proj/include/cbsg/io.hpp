#pragma once

#include <json.hpp>

#include "checkers.hpp"

namespace cbsg {

using Json = nlohmann::ordered_json;

// Body documents:
//   {"type":"polygon","vertices":[["p/q","p/q"],...]}
//   {"type":"circle","center":["p/q","p/q"],"radius":"p/q"}
// Rationals always travel as strings; lattice points as integer pairs.

inline Json rational_json(const Rational& q) { return to_string(q); }
inline Json point_json(const Point& p) {
  return Json::array({to_string(p.x), to_string(p.y)});
}
inline Json lattice_json(const LatticePoint& p) {
  return Json::array({p.x.convert_to<long long>(), p.y.convert_to<long long>()});
}
inline Json lattice_list_json(const std::vector<LatticePoint>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(lattice_json(p));
  return a;
}
inline Json direction_json(const Direction& d) {
  return Json::array({d.dx.convert_to<long long>(), d.dy.convert_to<long long>()});
}

inline Point parse_point(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("point must be a pair of rationals");
  return Point{parse_rational(j[0].get<std::string>()),
               parse_rational(j[1].get<std::string>())};
}

inline LatticePoint parse_lattice(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("lattice point must be a pair of integers");
  LatticePoint p{Int(j[0].get<long long>()), Int(j[1].get<long long>())};
  if (p.x < 0 || p.y < 0) throw ParseError("lattice point must be nonnegative");
  return p;
}

inline ConvexBody parse_body(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw ParseError("body document needs a type");
  std::string type = j["type"].get<std::string>();
  if (type == "polygon") {
    if (!j.contains("vertices") || !j["vertices"].is_array())
      throw ParseError("polygon needs a vertices array");
    std::vector<Point> verts;
    for (const auto& v : j["vertices"]) verts.push_back(parse_point(v));
    return ConvexPolygon::create(std::move(verts));
  }
  if (type == "circle") {
    if (!j.contains("center") || !j.contains("radius"))
      throw ParseError("circle needs center and radius");
    return Circle::create(parse_point(j["center"]),
                          parse_rational(j["radius"].get<std::string>()));
  }
  throw ParseError("unknown body type '" + type + "'");
}

inline Json body_json(const ConvexBody& body) {
  Json j;
  if (std::holds_alternative<ConvexPolygon>(body)) {
    j["type"] = "polygon";
    Json verts = Json::array();
    for (const auto& v : std::get<ConvexPolygon>(body).vertices()) verts.push_back(point_json(v));
    j["vertices"] = verts;
  } else {
    const auto& c = std::get<Circle>(body);
    j["type"] = "circle";
    j["center"] = point_json(c.center());
    j["radius"] = rational_json(c.radius());
  }
  return j;
}

inline const char* contact_name(const RayContact& rc) {
  switch (rc.kind) {
    case RayContact::kVertexPoint: return "vertex";
    case RayContact::kTangentPoint: return "tangent-point";
    case RayContact::kSegment: return "segment";
    default: return "axis-chord";
  }
}

inline Json derived_json(const BodySemigroup& s) {
  Json d;
  d["tau1"] = direction_json(s.tau(1));
  d["tau2"] = direction_json(s.tau(2));
  d["n1"] = lattice_json(s.n(1));
  d["n2"] = lattice_json(s.n(2));
  d["contact1"] = contact_name(s.contact(1));
  d["contact2"] = contact_name(s.contact(2));
  return d;
}

inline Json structure_json(const BodySemigroup& s, const PolygonApparatus& ap) {
  Json st;
  Json sides = Json::array();
  for (const RayStructure* rs : {&ap.rs1, &ap.rs2}) {
    Json sj;
    sj["side"] = rs->side;
    if (rs->segment_contact) {
      sj["contact"] = "segment";
    } else {
      sj["contact"] = "vertex";
      sj["j"] = rs->j.convert_to<long long>();
      sj["j1"] = rs->j1.convert_to<long long>();
      sj["V"] = point_json(rs->v_point);
      sj["nu"] = Json::array({to_string(rs->nu.a), to_string(rs->nu.b), to_string(rs->nu.c)});
    }
    sj["upsilon"] = lattice_list_json(rs->upsilon);
    sides.push_back(sj);
  }
  st["sides"] = sides;
  st["Q"] = point_json(ap.q);
  st["coverage_index"] = ap.wedge.index.convert_to<long long>();
  return st;
}

inline Json report_json(const CheckReport& rep) {
  Json r;
  r["property"] = rep.property;
  r["verdict"] = to_string(rep.verdict);
  r["branch"] = rep.branch;
  if (!rep.note.empty()) r["note"] = rep.note;
  r["witnesses"] = lattice_list_json(rep.witnesses);
  r["certificate"] =
      Json{{"level", rep.certificate.level()},
           {"bound", rep.certificate.bound.convert_to<long long>()}};
  if (rep.apery) {
    r["apery"] = Json{{"points", lattice_list_json(rep.apery->points)},
                      {"maximals", lattice_list_json(rep.apery->maximals)}};
  }
  return r;
}

}  // namespace cbsg
