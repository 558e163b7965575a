#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "group.hpp"

namespace skelsnub {

struct BaseComplex {
  Vector3 base_vertex;
  TypeSet type_set;
  std::map<int, std::array<Vector3, 2>> base_edges;
  std::map<int, std::vector<Vector3>> base_faces;
};

inline std::vector<Vector3> rotation_cycle(const Isometry& s, Vector3 v, int cap = 1000) {
  std::vector<Vector3> out{v};
  Vector3 cur = apply(s, v);
  while (!approx_equal(cur, v)) {
    if (static_cast<int>(out.size()) >= cap) throw Error(ErrorCode::DegenerateFace, "generator orbit does not close");
    out.push_back(cur);
    cur = apply(s, cur);
  }
  return out;
}

inline BaseComplex base_complex(const GeneratorTriple& gens, Vector3 v, TypeSet types) {
  BaseComplex bc;
  bc.base_vertex = v;
  bc.type_set = types;
  const std::array<const Isometry*, 3> s{&gens.s0, &gens.s1, &gens.s2};
  for (int i : types.list()) bc.base_edges[i] = {v, apply(*s[static_cast<std::size_t>(i)], v)};
  if (types.contains(0)) bc.base_faces[0] = {v, apply(gens.s0, v), apply(gens.s1, v)};
  if (types.contains(1)) bc.base_faces[1] = rotation_cycle(gens.s1, v);
  if (types.contains(2)) bc.base_faces[2] = rotation_cycle(gens.s2, v);
  return bc;
}

inline SkeletalPolyhedron build_snub(const FiniteGroup& group, const GeneratorTriple& gens, Vector3 v,
                                     const std::string& name = {}) {
  if (orbit(group, v).size() == 1) throw Error(ErrorCode::CenterPoint, "point is fixed by the whole group");
  const TypeSet types = type_set(gens, v);
  const bool ipc = satisfies_ipc(group, v);
  const BaseComplex bc = base_complex(gens, v, types);

  SkeletalPolyhedron poly;
  poly.source = SnubSource{name, v, types};
  PointIndex vidx;
  for (std::size_t g = 0; g < group.size(); ++g) {
    std::size_t before = vidx.size();
    vidx.insert(apply(group.element(g), v));
    if (vidx.size() > before) poly.vertex_group_element.push_back(g);
  }
  poly.vertices = vidx.points();

  auto locate = [&](Vector3 p) {
    auto i = vidx.find(p);
    if (!i) throw Error(ErrorCode::PreconditionViolated, "image point missing from the vertex orbit");
    return *i;
  };

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;
  for (const auto& [type, ends] : bc.base_edges)
    for (const auto& g : group.elements()) {
      auto key = edge_key(locate(apply(g, ends[0])), locate(apply(g, ends[1])));
      if (key.first == key.second) throw Error(ErrorCode::DegenerateFace, "edge collapses to a point");
      auto it = edges.find(key);
      if (it == edges.end()) {
        edges[key] = poly.edges.size();
        poly.edges.push_back({{key.first, key.second}, type});
      } else if (poly.edges[it->second].type != type) {
        if (ipc) throw Error(ErrorCode::TypeConflict, "edge lies in two type orbits");
        poly.merged_edge_types = true;
      }
    }

  std::map<std::vector<std::size_t>, std::size_t> faces;
  for (const auto& [type, pts] : bc.base_faces)
    for (const auto& g : group.elements()) {
      std::vector<std::size_t> cyc;
      for (const auto& p : pts) cyc.push_back(locate(apply(g, p)));
      std::set<std::size_t> distinct(cyc.begin(), cyc.end());
      if (cyc.size() < 3 || distinct.size() != cyc.size())
        throw Error(ErrorCode::DegenerateFace, "face of type " + std::to_string(type) + " repeats a vertex");
      auto canon = canonical_cycle(cyc);
      auto it = faces.find(canon);
      if (it == faces.end()) {
        faces[canon] = poly.faces.size();
        poly.faces.push_back({cyc, type});
      } else if (poly.faces[it->second].type != type && ipc) {
        throw Error(ErrorCode::TypeConflict, "face lies in two type orbits");
      }
    }

  std::vector<int> coverage(poly.edges.size(), 0);
  for (const auto& f : poly.faces)
    for (std::size_t j = 0; j < f.cycle.size(); ++j) {
      auto it = edges.find(edge_key(f.cycle[j], f.cycle[(j + 1) % f.cycle.size()]));
      if (it == edges.end()) throw Error(ErrorCode::PreconditionViolated, "face side is not an edge");
      if (++coverage[it->second] > 2) throw Error(ErrorCode::MultiCoverage, "edge lies in more than two faces");
    }
  return poly;
}

inline SkeletalPolyhedron build_snub(const CatalogEntry& entry, Vector3 v) {
  return build_snub(FiniteGroup::close(entry.generators), entry.generators, v, entry.spec.name);
}

// projection onto the fixed set of s_i; a point fixed by the whole group collapses
inline Vector3 degenerate_point(const GeneratorTriple& gens, int i, Vector3 v) {
  const Isometry& s = i == 0 ? gens.s0 : (i == 1 ? gens.s1 : gens.s2);
  FixedSet fs = classify_fixed_set(s);
  if (fs.kind == FixedSet::Kind::Empty) throw Error(ErrorCode::DegenerateCollapse, "generator has no fixed point");
  Vector3 p = project_onto(fs, v);
  if (fixes(gens.s1, p) && fixes(gens.s2, p))
    throw Error(ErrorCode::DegenerateCollapse, "fixed set of s" + std::to_string(i) + " is the group center");
  return p;
}

struct DegenerateReport {
  int fixed_generator = -1;  // which s_i fixes the base vertex, -1 if none
  std::size_t f0 = 0, f1 = 0;
  std::array<std::size_t, 3> f2{};
  std::size_t vertex_degree = 0;
  std::size_t face_size = 0;
  bool faces_regular = false;
  bool equal_edges = false;
  bool matches = false;
  std::string detail;
};

inline bool regular_polygon(const std::vector<Vector3>& pts, double tol = 1e-7) {
  const std::size_t n = pts.size();
  double side = distance(pts[0], pts[1]);
  double chord = distance(pts[0], pts[2 % n]);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(distance(pts[i], pts[(i + 1) % n]) - side) > tol * side) return false;
    if (std::abs(distance(pts[i], pts[(i + 2) % n]) - chord) > tol * side) return false;
  }
  return true;
}

// identifies S^0 / S^1 / S^2 and checks the expected shape against the parent
inline DegenerateReport degenerate_identity_check(const SkeletalPolyhedron& poly, const PolyhedronSpec& parent) {
  DegenerateReport r;
  if (!poly.source) throw Error(ErrorCode::PreconditionViolated, "polyhedron has no snub source");
  const TypeSet& t = poly.source->type_set;
  if (t == TypeSet{{false, true, true}}) r.fixed_generator = 0;
  else if (t == TypeSet{{false, false, true}}) r.fixed_generator = 1;
  else if (t == TypeSet{{false, true, false}}) r.fixed_generator = 2;
  r.f0 = poly.vertices.size();
  r.f1 = poly.edges.size();
  for (const auto& f : poly.faces) ++r.f2[static_cast<std::size_t>(f.type)];
  auto vf = vertex_figure(poly, 0);
  r.vertex_degree = vf ? vf->faces.size() : 0;

  double side = distance(poly.vertices[poly.edges[0].ends[0]], poly.vertices[poly.edges[0].ends[1]]);
  r.equal_edges = std::all_of(poly.edges.begin(), poly.edges.end(), [&](const Edge& e) {
    return std::abs(distance(poly.vertices[e.ends[0]], poly.vertices[e.ends[1]]) - side) < 1e-7 * side;
  });
  r.faces_regular = true;
  for (const auto& f : poly.faces) {
    std::vector<Vector3> pts;
    for (auto i : f.cycle) pts.push_back(poly.vertices[i]);
    r.faces_regular = r.faces_regular && regular_polygon(pts);
  }
  if (r.fixed_generator == 0) {
    r.face_size = 0;
    r.matches = r.vertex_degree == 4 && r.f2[0] == 0 && 2 * r.f1 == 4 * r.f0;
    r.detail = "two faces of each parent type meet at every vertex";
  } else if (r.fixed_generator == 1 || r.fixed_generator == 2) {
    // S^2 resembles the parent, S^1 its dual
    const int face_size = r.fixed_generator == 2 ? parent.p.num : parent.q.num;
    const int degree = r.fixed_generator == 2 ? parent.q.num : parent.p.num;
    r.face_size = poly.faces.front().cycle.size();
    bool uniform_faces = std::all_of(poly.faces.begin(), poly.faces.end(),
                                     [&](const Face& f) { return f.cycle.size() == r.face_size; });
    std::size_t f2 = poly.faces.size();
    r.matches = uniform_faces && r.faces_regular && r.equal_edges && static_cast<int>(r.face_size) == face_size &&
                static_cast<int>(r.vertex_degree) == degree && r.f0 * r.vertex_degree == 2 * r.f1 &&
                f2 * r.face_size == 2 * r.f1;
    r.detail = r.fixed_generator == 2 ? "similar to the parent" : "similar to the dual of the parent";
  } else {
    r.detail = "base vertex is not fixed by a generator";
  }
  return r;
}

}  // namespace skelsnub
