#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "skelsnub/skelsnub.hpp"

namespace fixtures {

using skelsnub::Face;
using skelsnub::SkeletalPolyhedron;
using skelsnub::Vector3;

inline SkeletalPolyhedron make(std::vector<Vector3> verts, std::vector<std::vector<std::size_t>> faces) {
  SkeletalPolyhedron p;
  p.vertices = std::move(verts);
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (auto& c : faces) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      auto k = skelsnub::edge_key(c[j], c[(j + 1) % c.size()]);
      if (!seen[k]) {
        seen[k] = true;
        p.edges.push_back({{k.first, k.second}, 1});
      }
    }
    p.faces.push_back({c, 1});
  }
  return p;
}

inline SkeletalPolyhedron tetrahedron() {
  return make({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}});
}

inline SkeletalPolyhedron cube() {
  // index = 4*(x>0) + 2*(y>0) + (z>0)
  std::vector<Vector3> v;
  for (int i = 0; i < 8; ++i) v.push_back({i & 4 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 1 ? 1.0 : -1.0});
  return make(v, {{0, 1, 3, 2}, {4, 6, 7, 5}, {0, 4, 5, 1}, {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 5, 7, 3}});
}

inline SkeletalPolyhedron octahedron() {
  std::vector<Vector3> v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<std::vector<std::size_t>> f;
  for (std::size_t x : {0, 1})
    for (std::size_t y : {2, 3})
      for (std::size_t z : {4, 5}) f.push_back({x, y, z});
  return make(v, f);
}

inline SkeletalPolyhedron icosahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Vector3> v;
  for (double s : {-1.0, 1.0})
    for (double t : {-phi, phi}) {
      v.push_back({0, s, t});
      v.push_back({s, t, 0});
      v.push_back({t, 0, s});
    }
  std::vector<std::vector<std::size_t>> f;
  auto adj = [&](std::size_t a, std::size_t b) { return std::abs(skelsnub::distance(v[a], v[b]) - 2.0) < 1e-9; };
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      for (std::size_t c = b + 1; c < v.size(); ++c)
        if (adj(a, b) && adj(b, c) && adj(a, c)) f.push_back({a, b, c});
  return make(v, f);
}

// face centroids become vertices; the faces around each vertex become a face
inline SkeletalPolyhedron combinatorial_dual(const SkeletalPolyhedron& p) {
  std::vector<Vector3> v;
  for (const auto& f : p.faces) {
    Vector3 c{};
    for (auto i : f.cycle) c += p.vertices[i];
    v.push_back(c / static_cast<double>(f.cycle.size()));
  }
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) faces.push_back(skelsnub::vertex_figure(p, i)->faces);
  return make(v, faces);
}

inline SkeletalPolyhedron dodecahedron() { return combinatorial_dual(icosahedron()); }

// pentagons through the neighbors of each icosahedron vertex
inline SkeletalPolyhedron great_dodecahedron() {
  auto ico = icosahedron();
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t i = 0; i < ico.vertices.size(); ++i) faces.push_back(skelsnub::vertex_figure(ico, i)->neighbors);
  return make(ico.vertices, faces);
}

// three skew quadrilaterals on four points; non-orientable
inline SkeletalPolyhedron hemicube() {
  return make({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}, {{0, 1, 3, 2}, {0, 3, 2, 1}, {0, 2, 1, 3}});
}

}  // namespace fixtures
