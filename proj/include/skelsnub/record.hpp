#pragma once

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "catalog.hpp"
#include "combinatorics.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "polygon.hpp"
#include "uniformity.hpp"

namespace skelsnub {

struct SnubAnalysis {
  FVector fvector;
  long euler = 0;
  std::optional<std::string> symbol;
  std::optional<bool> orientable;
  std::optional<std::array<double, 2>> residuals;
  bool valid = false;
};

struct SnubRecord {
  std::string name;
  Vector3 vertex;
  TypeSet type_set;
  SkeletalPolyhedron poly;
  SnubAnalysis analysis;
};

inline SnubAnalysis analyze(const SkeletalPolyhedron& poly, const GeneratorTriple* gens = nullptr) {
  SnubAnalysis a;
  a.fvector = f_vector(poly);
  a.euler = euler_characteristic(poly);
  a.valid = validate(poly).ok();
  try {
    a.symbol = vertex_symbol(poly).str();
  } catch (const Error&) {
  }
  if (a.valid) a.orientable = orientable(poly);
  if (gens && poly.source) a.residuals = uniformity_residual(*gens, poly.source->initial_vertex);
  return a;
}

inline SnubRecord make_record(const SkeletalPolyhedron& poly, const GeneratorTriple* gens = nullptr) {
  if (!poly.source) throw Error(ErrorCode::PreconditionViolated, "polyhedron has no snub source");
  SnubRecord r;
  r.name = poly.source->name;
  r.vertex = poly.source->initial_vertex;
  r.type_set = poly.source->type_set;
  r.poly = poly;
  r.analysis = analyze(poly, gens);
  return r;
}

inline nlohmann::json to_json(const SnubRecord& r) {
  using nlohmann::json;
  auto vec = [](Vector3 v) { return json::array({v.x, v.y, v.z}); };
  json j;
  j["name"] = r.name;
  j["vertex"] = vec(r.vertex);
  j["typeSet"] = r.type_set.list();
  json verts = json::array();
  for (auto v : r.poly.vertices) verts.push_back(vec(v));
  j["vertices"] = verts;
  json edges = json::array();
  for (const auto& e : r.poly.edges) edges.push_back({{"a", e.ends[0]}, {"b", e.ends[1]}, {"type", e.type}});
  j["edges"] = edges;
  json faces = json::array();
  for (const auto& f : r.poly.faces) faces.push_back({{"cycle", f.cycle}, {"type", f.type}});
  j["faces"] = faces;
  if (r.poly.merged_edge_types) j["mergedEdgeTypes"] = true;

  const auto& a = r.analysis;
  auto slots = [](const std::array<std::optional<std::size_t>, 3>& s) {
    json out = json::array();
    for (const auto& x : s) out.push_back(x ? json(*x) : json(nullptr));
    return out;
  };
  json an;
  an["fvector"] = {{"f0", a.fvector.f0}, {"f1", slots(a.fvector.f1)}, {"f2", slots(a.fvector.f2)},
                   {"f1Total", a.fvector.f1_total}, {"f2Total", a.fvector.f2_total}};
  an["euler"] = a.euler;
  an["symbol"] = a.symbol ? json(*a.symbol) : json(nullptr);
  an["orientable"] = a.orientable ? json(*a.orientable) : json(nullptr);
  an["residuals"] = a.residuals ? json::array({(*a.residuals)[0], (*a.residuals)[1]}) : json(nullptr);
  an["valid"] = a.valid;
  j["analysis"] = an;
  return j;
}

inline SnubRecord record_from_json(const nlohmann::json& j) {
  try {
    SnubRecord r;
    auto vec = [](const nlohmann::json& a) { return Vector3{a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<double>()}; };
    r.name = j.at("name").get<std::string>();
    r.vertex = vec(j.at("vertex"));
    for (int t : j.at("typeSet").get<std::vector<int>>()) {
      if (t < 0 || t > 2) throw Error(ErrorCode::BadInput, "type out of range");
      r.type_set.members[static_cast<std::size_t>(t)] = true;
    }
    for (const auto& v : j.at("vertices")) r.poly.vertices.push_back(vec(v));
    const std::size_t n = r.poly.vertices.size();
    for (const auto& e : j.at("edges")) {
      auto a = e.at("a").get<std::size_t>(), b = e.at("b").get<std::size_t>();
      if (a >= n || b >= n) throw Error(ErrorCode::BadInput, "edge endpoint out of range");
      auto k = edge_key(a, b);
      r.poly.edges.push_back({{k.first, k.second}, e.at("type").get<int>()});
    }
    for (const auto& f : j.at("faces")) {
      Face face{f.at("cycle").get<std::vector<std::size_t>>(), f.at("type").get<int>()};
      for (auto i : face.cycle)
        if (i >= n) throw Error(ErrorCode::BadInput, "face vertex out of range");
      r.poly.faces.push_back(face);
    }
    r.poly.merged_edge_types = j.value("mergedEdgeTypes", false);
    r.poly.source = SnubSource{r.name, r.vertex, r.type_set};
    const GeneratorTriple* gens = nullptr;
    try {
      gens = &lookup(r.name).generators;
    } catch (const Error&) {
    }
    r.analysis = analyze(r.poly, gens);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed record: ") + e.what());
  }
}

inline SnubRecord parse_record(const std::string& text) {
  try {
    return record_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("invalid JSON: ") + e.what());
  }
}

inline void export_obj(const SkeletalPolyhedron& poly, std::ostream& out) {
  std::ostringstream buf;
  buf << std::setprecision(17);
  if (poly.source) buf << "# " << poly.source->name << "\n";
  for (auto v : poly.vertices) buf << "v " << v.x << " " << v.y << " " << v.z << "\n";
  for (std::size_t f = 0; f < poly.faces.size(); ++f) {
    bool skew = false;
    try {
      skew = classify_face(poly, f).kind == PolygonKind::Skew;
    } catch (const Error&) {
    }
    if (skew) buf << "# skew\n";
    buf << "f";
    for (auto i : poly.faces[f].cycle) buf << " " << i + 1;
    buf << "\n";
  }
  out << buf.str();
}

}  // namespace skelsnub
