#pragma once

#include <array>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "complex.hpp"
#include "error.hpp"

namespace skelsnub {

struct Flag {
  std::size_t face = 0;
  std::size_t position = 0;  // side from cycle[position] to cycle[position + 1]
  int end = 0;               // 0 -> cycle[position], 1 -> cycle[position + 1]
};

struct FlagGraph {
  std::vector<Flag> flags;
  std::vector<std::array<std::size_t, 3>> adj;  // r0, r1, r2
  std::vector<std::size_t> vertex;
  std::vector<std::size_t> face_size;
  std::vector<std::size_t> degree;  // degree of the flag's vertex

  std::size_t size() const { return flags.size(); }
};

// requires every edge to lie in exactly two faces
inline FlagGraph build_flags(const SkeletalPolyhedron& p) {
  FlagGraph g;
  std::vector<std::size_t> offset(p.faces.size() + 1, 0);
  for (std::size_t f = 0; f < p.faces.size(); ++f) offset[f + 1] = offset[f] + 2 * p.faces[f].cycle.size();
  auto id = [&](std::size_t f, std::size_t j, int e) { return offset[f] + 2 * j + static_cast<std::size_t>(e); };

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> sides;
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& c = p.faces[f].cycle;
    for (std::size_t j = 0; j < c.size(); ++j) sides[edge_key(c[j], c[(j + 1) % c.size()])].push_back({f, j});
  }
  std::vector<std::size_t> deg(p.vertices.size(), 0);
  for (const auto& e : p.edges) {
    ++deg[e.ends[0]];
    ++deg[e.ends[1]];
  }

  g.flags.resize(offset.back());
  g.adj.resize(offset.back());
  g.vertex.resize(offset.back());
  g.face_size.resize(offset.back());
  g.degree.resize(offset.back());
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& c = p.faces[f].cycle;
    const std::size_t n = c.size();
    for (std::size_t j = 0; j < n; ++j)
      for (int e = 0; e < 2; ++e) {
        std::size_t me = id(f, j, e);
        std::size_t v = e == 0 ? c[j] : c[(j + 1) % n];
        g.flags[me] = {f, j, e};
        g.vertex[me] = v;
        g.face_size[me] = n;
        g.degree[me] = deg[v];
        g.adj[me][0] = id(f, j, 1 - e);
        g.adj[me][1] = e == 0 ? id(f, (j + n - 1) % n, 1) : id(f, (j + 1) % n, 0);
        const auto& pair = sides[edge_key(c[j], c[(j + 1) % n])];
        if (pair.size() != 2)
          throw Error(ErrorCode::PreconditionViolated, "edge does not lie in exactly two faces");
        auto other = pair[0].first == f && pair[0].second == j ? pair[1] : pair[0];
        const auto& oc = p.faces[other.first].cycle;
        int oe = oc[other.second] == v ? 0 : 1;
        g.adj[me][2] = id(other.first, other.second, oe);
      }
  }
  return g;
}

struct FVector {
  std::size_t f0 = 0;
  std::array<std::optional<std::size_t>, 3> f1;
  std::array<std::optional<std::size_t>, 3> f2;
  std::size_t f1_total = 0;
  std::size_t f2_total = 0;
};

inline FVector f_vector(const SkeletalPolyhedron& p) {
  FVector fv;
  fv.f0 = p.vertices.size();
  fv.f1_total = p.edges.size();
  fv.f2_total = p.faces.size();
  std::array<std::size_t, 3> e{}, f{};
  for (const auto& x : p.edges) ++e[static_cast<std::size_t>(x.type)];
  for (const auto& x : p.faces) ++f[static_cast<std::size_t>(x.type)];
  for (std::size_t i = 0; i < 3; ++i) {
    bool present = p.source ? p.source->type_set.contains(static_cast<int>(i)) : (e[i] + f[i] > 0);
    if (!present) continue;
    if (!p.merged_edge_types) fv.f1[i] = e[i];
    fv.f2[i] = f[i];
  }
  return fv;
}

inline long euler_characteristic(const SkeletalPolyhedron& p) {
  return static_cast<long>(p.vertices.size()) - static_cast<long>(p.edges.size()) + static_cast<long>(p.faces.size());
}

struct ValidationReport {
  bool faces_use_edges = true;
  bool faces_simple = true;
  bool two_faces_per_edge = true;
  bool cyclic_vertex_figures = true;
  bool connected = true;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

inline ValidationReport validate(const SkeletalPolyhedron& p) {
  ValidationReport r;
  auto idx = edge_index(p);
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& c = p.faces[f].cycle;
    std::vector<std::size_t> sorted(c.begin(), c.end());
    std::sort(sorted.begin(), sorted.end());
    if (c.size() < 3 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) r.faces_simple = false;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!idx.count(edge_key(c[j], c[(j + 1) % c.size()]))) r.faces_use_edges = false;
  }
  if (!r.faces_simple) r.problems.push_back("a face repeats a vertex or has fewer than three sides");
  if (!r.faces_use_edges) r.problems.push_back("a face side is not an edge");

  for (const auto& list : faces_per_edge(p))
    if (list.size() != 2) r.two_faces_per_edge = false;
  if (!r.two_faces_per_edge) r.problems.push_back("an edge does not lie in exactly two faces");

  for (std::size_t v = 0; v < p.vertices.size(); ++v)
    if (!vertex_figure(p, v)) r.cyclic_vertex_figures = false;
  if (!r.cyclic_vertex_figures) r.problems.push_back("a vertex figure is not a single cycle");

  if (r.two_faces_per_edge && r.faces_use_edges && !p.faces.empty()) {
    FlagGraph g = build_flags(p);
    std::vector<bool> seen(g.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (auto y : g.adj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          q.push(y);
        }
    }
    r.connected = count == g.size();
  } else {
    r.connected = false;
  }
  if (!r.connected) r.problems.push_back("the polyhedron is not flag-connected");
  return r;
}

inline bool orientable(const FlagGraph& g) {
  std::vector<int> color(g.size(), -1);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (auto y : g.adj[x]) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          q.push(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool orientable(const SkeletalPolyhedron& p) { return orientable(build_flags(p)); }

// combinatorial isomorphism, mirror images included
inline bool isomorphic(const FlagGraph& a, const FlagGraph& b) {
  if (a.size() != b.size() || a.size() == 0) return false;
  auto sig = [](const FlagGraph& g, std::size_t x) {
    return std::array<std::size_t, 3>{g.face_size[x], g.degree[x], g.face_size[g.adj[x][2]]};
  };
  auto multiset = [&](const FlagGraph& g) {
    std::map<std::array<std::size_t, 3>, std::size_t> m;
    for (std::size_t x = 0; x < g.size(); ++x) ++m[sig(g, x)];
    return m;
  };
  if (multiset(a) != multiset(b)) return false;

  const auto target = sig(a, 0);
  std::vector<std::size_t> fwd(a.size()), back(b.size());
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (sig(b, t) != target) continue;
    std::fill(fwd.begin(), fwd.end(), none);
    std::fill(back.begin(), back.end(), none);
    fwd[0] = t;
    back[t] = 0;
    std::queue<std::size_t> q;
    q.push(0);
    std::size_t mapped = 1;
    bool ok = true;
    while (ok && !q.empty()) {
      auto x = q.front();
      q.pop();
      for (int k = 0; k < 3 && ok; ++k) {
        auto xa = a.adj[x][static_cast<std::size_t>(k)];
        auto yb = b.adj[fwd[x]][static_cast<std::size_t>(k)];
        if (fwd[xa] == none) {
          if (back[yb] != none) {
            ok = false;
            break;
          }
          fwd[xa] = yb;
          back[yb] = xa;
          ++mapped;
          q.push(xa);
        } else if (fwd[xa] != yb) {
          ok = false;
        }
      }
    }
    if (ok && mapped == a.size()) return true;
  }
  return false;
}

inline bool isomorphic(const SkeletalPolyhedron& a, const SkeletalPolyhedron& b) {
  return isomorphic(build_flags(a), build_flags(b));
}

// length of the Petrie polygon through a flag: steps of r0 r1 r2 until the flag recurs
inline std::size_t trace_petrie(const FlagGraph& g, std::size_t start = 0) {
  std::size_t cur = start;
  std::size_t steps = 0;
  do {
    cur = g.adj[g.adj[g.adj[cur][0]][1]][2];
    ++steps;
    if (steps > g.size()) throw Error(ErrorCode::PreconditionViolated, "Petrie walk does not close");
  } while (cur != start);
  return steps;
}

inline std::size_t trace_petrie(const SkeletalPolyhedron& p, std::size_t start = 0) {
  return trace_petrie(build_flags(p), start);
}

}  // namespace skelsnub
