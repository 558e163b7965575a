#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"
#include "group.hpp"

namespace skelsnub {

struct Edge {
  std::array<std::size_t, 2> ends{};  // sorted
  int type = 1;
};

struct Face {
  std::vector<std::size_t> cycle;
  int type = 1;
};

struct SnubSource {
  std::string name;
  Vector3 initial_vertex;
  TypeSet type_set;
};

struct SkeletalPolyhedron {
  std::vector<Vector3> vertices;
  std::vector<std::size_t> vertex_group_element;  // empty unless built from a group
  std::vector<Edge> edges;
  std::vector<Face> faces;
  std::optional<SnubSource> source;
  bool merged_edge_types = false;
};

// rotate to the smallest index, then pick the direction with the smaller successor
inline std::vector<std::size_t> canonical_cycle(std::span<const std::size_t> c) {
  std::vector<std::size_t> out(c.begin(), c.end());
  if (out.size() < 2) return out;
  auto it = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), it, out.end());
  if (out.size() > 2 && out.back() < out[1]) std::reverse(out.begin() + 1, out.end());
  return out;
}

inline std::pair<std::size_t, std::size_t> edge_key(std::size_t a, std::size_t b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

inline std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index(const SkeletalPolyhedron& p) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> m;
  for (std::size_t i = 0; i < p.edges.size(); ++i) m[{p.edges[i].ends[0], p.edges[i].ends[1]}] = i;
  return m;
}

// faces meeting each edge, in face order
inline std::vector<std::vector<std::size_t>> faces_per_edge(const SkeletalPolyhedron& p) {
  auto idx = edge_index(p);
  std::vector<std::vector<std::size_t>> out(p.edges.size());
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& c = p.faces[f].cycle;
    for (std::size_t j = 0; j < c.size(); ++j) {
      auto it = idx.find(edge_key(c[j], c[(j + 1) % c.size()]));
      if (it != idx.end()) out[it->second].push_back(f);
    }
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> vertex_neighbors(const SkeletalPolyhedron& p) {
  std::vector<std::vector<std::size_t>> out(p.vertices.size());
  for (const auto& e : p.edges) {
    out[e.ends[0]].push_back(e.ends[1]);
    out[e.ends[1]].push_back(e.ends[0]);
  }
  return out;
}

// faces around a vertex: face faces[k] contains edges {v, neighbors[k]} and {v, neighbors[k+1]}
struct VertexFigure {
  std::size_t vertex = 0;
  std::vector<std::size_t> faces;
  std::vector<std::size_t> neighbors;
};

inline std::optional<VertexFigure> vertex_figure(const SkeletalPolyhedron& p, std::size_t v) {
  struct Incidence {
    std::size_t face, a, b;
  };
  std::vector<Incidence> inc;
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& c = p.faces[f].cycle;
    const std::size_t n = c.size();
    for (std::size_t j = 0; j < n; ++j)
      if (c[j] == v) inc.push_back({f, c[(j + n - 1) % n], c[(j + 1) % n]});
  }
  if (inc.empty()) return std::nullopt;
  std::map<std::size_t, std::vector<std::size_t>> by_neighbor;
  for (std::size_t i = 0; i < inc.size(); ++i) {
    by_neighbor[inc[i].a].push_back(i);
    by_neighbor[inc[i].b].push_back(i);
  }
  for (const auto& [n, list] : by_neighbor)
    if (list.size() != 2) return std::nullopt;

  VertexFigure vf;
  vf.vertex = v;
  std::vector<bool> used(inc.size(), false);
  std::size_t cur = 0;
  std::size_t entry = inc[0].a;
  while (!used[cur]) {
    used[cur] = true;
    vf.faces.push_back(inc[cur].face);
    vf.neighbors.push_back(entry);
    std::size_t exit = inc[cur].a == entry ? inc[cur].b : inc[cur].a;
    const auto& list = by_neighbor[exit];
    std::size_t next = list[0] == cur ? list[1] : list[0];
    entry = exit;
    cur = next;
  }
  if (vf.faces.size() != inc.size()) return std::nullopt;
  return vf;
}

}  // namespace skelsnub
