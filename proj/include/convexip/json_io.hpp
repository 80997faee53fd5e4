// JSON encodings of bodies, inner-product specs, point sets and results.
#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "convexip/axioms.hpp"
#include "convexip/body.hpp"
#include "convexip/diversity.hpp"
#include "convexip/geometry.hpp"
#include "convexip/inner_product.hpp"
#include "convexip/phylo.hpp"

namespace cvx {

using Json = nlohmann::json;

namespace detail {

inline void write_json(std::ostringstream& out, const Json& j, bool pretty, int depth) {
  auto indent = [&](int d) {
    if (pretty) out << '\n' << std::string(static_cast<std::size_t>(2 * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        break;
      }
      out << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ',';
        first = false;
        indent(depth + 1);
        out << Json(it.key()).dump() << (pretty ? ": " : ":");
        write_json(out, it.value(), pretty, depth + 1);
      }
      indent(depth);
      out << '}';
      break;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        break;
      }
      out << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out << ',';
        first = false;
        indent(depth + 1);
        write_json(out, v, pretty, depth + 1);
      }
      indent(depth);
      out << ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out << "null";
        break;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
      out << buf;
      break;
    }
    default:
      out << j.dump();
  }
}

}  // namespace detail

/// Serializes with every double printed to 17 significant digits, so equal
/// values always produce byte-identical text.
inline std::string dump_json(const Json& j, bool pretty = false) {
  std::ostringstream out;
  detail::write_json(out, j, pretty, 0);
  return out.str();
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline double number_at(const Json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  return j.get<double>();
}

inline Vec vector_at(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a nonempty array of numbers");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(number_at(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

}  // namespace detail

inline Body body_from_json(const Json& j, const std::string& where = "body") {
  using detail::field;
  const Json& kind_j = field(j, "kind", where);
  if (!kind_j.is_string()) throw InputError(where + ".kind: expected a string");
  const auto kind = kind_j.get<std::string>();
  if (kind == "point") return Body::point(detail::vector_at(field(j, "coords", where), where + ".coords"));
  if (kind == "polytope") {
    const Json& vs = field(j, "vertices", where);
    if (!vs.is_array() || vs.empty()) throw InputError(where + ".vertices: expected a nonempty array");
    std::vector<Vec> verts;
    for (std::size_t i = 0; i < vs.size(); ++i)
      verts.push_back(detail::vector_at(vs[i], where + ".vertices[" + std::to_string(i) + "]"));
    return polytope_from_points(verts);
  }
  if (kind == "ball")
    return Body::ball(detail::vector_at(field(j, "center", where), where + ".center"),
                      detail::number_at(field(j, "radius", where), where + ".radius"));
  if (kind == "sum") {
    const Json& ts = field(j, "terms", where);
    if (!ts.is_array() || ts.empty()) throw InputError(where + ".terms: expected a nonempty array");
    std::vector<Body> terms;
    for (std::size_t i = 0; i < ts.size(); ++i)
      terms.push_back(body_from_json(ts[i], where + ".terms[" + std::to_string(i) + "]"));
    return Body::sum(std::move(terms));
  }
  if (kind == "scaled")
    return Body::scaled(detail::number_at(field(j, "factor", where), where + ".factor"),
                        body_from_json(field(j, "body", where), where + ".body"));
  throw InputError(where + ": unknown body kind '" + kind + "'");
}

inline Json to_json(const Body& body) {
  return std::visit(Overloaded{
                        [](const Body::Point& p) { return Json{{"kind", "point"}, {"coords", p.coords}}; },
                        [](const Body::Polytope& p) { return Json{{"kind", "polytope"}, {"vertices", p.vertices}}; },
                        [](const Body::Ball& b) {
                          return Json{{"kind", "ball"}, {"center", b.center}, {"radius", b.radius}};
                        },
                        [](const Body::Sum& s) {
                          Json terms = Json::array();
                          for (const auto& t : *s.terms) terms.push_back(to_json(t));
                          return Json{{"kind", "sum"}, {"terms", terms}};
                        },
                        [](const Body::Scaled& s) {
                          return Json{{"kind", "scaled"}, {"factor", s.factor}, {"body", to_json(*s.inner)}};
                        },
                    },
                    body.node());
}

inline SetIP setip_from_json(const Json& j, const std::string& where = "setip") {
  using detail::field;
  const Json& kind_j = field(j, "kind", where);
  if (!kind_j.is_string()) throw InputError(where + ".kind: expected a string");
  const auto kind = kind_j.get<std::string>();
  SetIP out;
  if (kind == "spherical_l2") {
    SphericalL2 s;
    s.dim = static_cast<std::size_t>(detail::number_at(field(j, "dim", where), where + ".dim"));
    if (j.contains("grid")) s.grid = static_cast<std::size_t>(detail::number_at(j["grid"], where + ".grid"));
    if (j.contains("seed")) s.seed = static_cast<std::uint64_t>(detail::number_at(j["seed"], where + ".seed"));
    if (j.contains("normalization") && !j["normalization"].is_null())
      s.normalization = detail::number_at(j["normalization"], where + ".normalization");
    if (j.contains("weight") && !j["weight"].is_null()) s.weight = detail::vector_at(j["weight"], where + ".weight");
    out = s;
  } else if (kind == "matrix1d") {
    const Json& m = field(j, "m", where);
    if (!m.is_array() || m.size() != 2) throw InputError(where + ".m: expected a 2x2 matrix");
    Matrix1D mat;
    for (std::size_t r = 0; r < 2; ++r) {
      const Vec row = detail::vector_at(m[r], where + ".m[" + std::to_string(r) + "]");
      if (row.size() != 2) throw InputError(where + ".m: expected a 2x2 matrix");
      mat.m[r] = {row[0], row[1]};
    }
    out = mat;
  } else {
    throw InputError(where + ": unknown set inner product kind '" + kind + "'");
  }
  validate(out);
  return out;
}

inline Json to_json(const SetIP& spec) {
  return std::visit(Overloaded{
                        [](const SphericalL2& s) {
                          Json j{{"kind", "spherical_l2"}, {"dim", s.dim}, {"grid", s.grid}, {"seed", s.seed}};
                          j["weight"] = s.weight ? Json(*s.weight) : Json(nullptr);
                          if (s.normalization) j["normalization"] = *s.normalization;
                          return j;
                        },
                        [](const Matrix1D& m) {
                          return Json{{"kind", "matrix1d"},
                                      {"m", {{m.m[0][0], m.m[0][1]}, {m.m[1][0], m.m[1][1]}}}};
                        },
                    },
                    spec);
}

inline PointSet point_set_from_json(const Json& j, const std::string& where = "points") {
  const Json& ps = detail::field(j, "points", where);
  if (!ps.is_array() || ps.empty()) throw InputError(where + ".points: expected a nonempty array");
  PointSet s;
  for (std::size_t i = 0; i < ps.size(); ++i)
    s.add(detail::vector_at(ps[i], where + ".points[" + std::to_string(i) + "]"));
  return s;
}

inline LeafAssignment leaves_from_json(const Json& j, const std::string& where = "leaves") {
  const Json& ls = detail::field(j, "leaves", where);
  if (!ls.is_object() || ls.empty()) throw InputError(where + ".leaves: expected a nonempty object");
  LeafAssignment out;
  for (auto it = ls.begin(); it != ls.end(); ++it)
    out.emplace(it.key(), body_from_json(it.value(), where + ".leaves." + it.key()));
  return out;
}

inline Json to_json(const AxiomReport& r) {
  Json axioms = Json::object();
  for (const auto& a : r.axioms) {
    Json e{{"passed", a.passed}, {"violations", a.violations}, {"worst", a.worst}};
    if (!a.passed && a.witness) {
      Json bodies = Json::array();
      for (const auto& b : a.witness->bodies) bodies.push_back(to_json(b));
      e["witness"] = {{"bodies", bodies}, {"coefficients", a.witness->coefficients}};
    }
    axioms[a.name] = e;
  }
  return {{"trials", r.trials}, {"all_passed", r.all_passed()}, {"axioms", axioms}};
}

inline Json to_json(const DiversityReport& r) {
  Json checks = Json::object();
  for (const auto& c : r.checks)
    checks[c.name] = {{"passed", c.passed}, {"violations", c.violations}, {"worst_margin", c.worst}};
  return {{"trials", r.trials}, {"all_passed", r.all_passed()}, {"checks", checks}};
}

inline Json to_json(const LineClass& c) {
  return std::visit(Overloaded{
                        [](const Translation& t) {
                          return Json{{"class", "translation"}, {"direction", {t.direction.x, t.direction.y}}};
                        },
                        [](const Ray& r) {
                          return Json{{"class", "ray"},
                                      {"parameter", r.parameter},
                                      {"endpoint", to_json(r.endpoint)},
                                      {"generator", to_json(r.generator)}};
                        },
                        [](const Segment& s) {
                          return Json{{"class", "segment"},
                                      {"t_a", s.t_a},
                                      {"t_b", s.t_b},
                                      {"end_a", to_json(s.end_a)},
                                      {"end_b", to_json(s.end_b)}};
                        },
                    },
                    c);
}

inline Json to_json(const LambdaMatrix& m) {
  Json out = Json::object();
  for (std::size_t v = 0; v < m.rows.size(); ++v) {
    Json row = Json::object();
    for (std::size_t j = 0; j < m.leaf_names.size(); ++j) row[m.leaf_names[j]] = m.rows[v][j];
    out[m.node_ids[v]] = row;
  }
  return out;
}

inline Json to_json(const Extension& e) {
  Json out = Json::object();
  for (std::size_t v = 0; v < e.bodies.size(); ++v) out[e.node_ids[v]] = to_json(e.bodies[v]);
  return out;
}

}  // namespace cvx
