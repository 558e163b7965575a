#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "combinatorics.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "group.hpp"
#include "polygon.hpp"
#include "snub.hpp"

namespace skelsnub {

namespace detail {

struct Lookup {
  PointIndex points{1e-7};
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::vector<std::size_t>> faces;

  explicit Lookup(const SkeletalPolyhedron& p) {
    for (auto v : p.vertices) points.push(v);
    for (const auto& e : p.edges) edges.insert({e.ends[0], e.ends[1]});
    for (const auto& f : p.faces) faces.insert(canonical_cycle(f.cycle));
  }
};

inline bool preserves(const SkeletalPolyhedron& p, const Lookup& lk, const Isometry& g) {
  std::vector<std::size_t> image(p.vertices.size());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    auto j = lk.points.find(apply(g, p.vertices[i]));
    if (!j) return false;
    image[i] = *j;
  }
  for (const auto& e : p.edges)
    if (!lk.edges.count(edge_key(image[e.ends[0]], image[e.ends[1]]))) return false;
  for (const auto& f : p.faces) {
    std::vector<std::size_t> c;
    for (auto i : f.cycle) c.push_back(image[i]);
    if (!lk.faces.count(canonical_cycle(c))) return false;
  }
  return true;
}

inline std::set<std::size_t> face_vertex_set(const SkeletalPolyhedron& p, std::size_t f) {
  return {p.faces[f].cycle.begin(), p.faces[f].cycle.end()};
}

}  // namespace detail

// full symmetry group, found by matching a frame at vertex 0 against every vertex
inline FiniteGroup detect_symmetries(const SkeletalPolyhedron& poly) {
  if (poly.vertices.empty()) throw Error(ErrorCode::PreconditionViolated, "empty polyhedron");
  const auto nbrs = vertex_neighbors(poly);
  const Vector3 v0 = poly.vertices[0];
  if (nbrs[0].size() < 2) throw Error(ErrorCode::PreconditionViolated, "vertex 0 has fewer than two neighbors");
  std::size_t n1 = nbrs[0][0], n2 = nbrs[0][1];
  const Vector3 a = poly.vertices[n1] - v0;
  bool found_frame = false;
  for (auto cand : nbrs[0]) {
    if (norm(cross(a, poly.vertices[cand] - v0)) > 1e-6 * dot(a, a)) {
      n2 = cand;
      found_frame = true;
      break;
    }
  }
  if (!found_frame) throw Error(ErrorCode::PreconditionViolated, "neighbors of vertex 0 are collinear");
  const Vector3 b = poly.vertices[n2] - v0;
  const auto frame_inv = inverse(from_columns(a, b, cross(a, b)));
  const double la = norm(a), lb = norm(b), lab = distance(poly.vertices[n1], poly.vertices[n2]);
  const double tol = 1e-7 * std::max({la, lb, 1.0});

  detail::Lookup lk(poly);
  std::vector<Isometry> found;
  for (std::size_t w = 0; w < poly.vertices.size(); ++w) {
    bool any = false;
    const Vector3 pw = poly.vertices[w];
    for (auto m1 : nbrs[w])
      for (auto m2 : nbrs[w]) {
        if (m1 == m2) continue;
        const Vector3 a2 = poly.vertices[m1] - pw, b2 = poly.vertices[m2] - pw;
        if (std::abs(norm(a2) - la) > tol || std::abs(norm(b2) - lb) > tol ||
            std::abs(distance(poly.vertices[m1], poly.vertices[m2]) - lab) > tol)
          continue;
        for (double sign : {1.0, -1.0}) {
          Isometry g;
          g.linear = from_columns(a2, b2, sign * cross(a2, b2)) * (*frame_inv);
          g.translation = pw - g.linear * v0;
          if (!is_orthogonal(g, 1e-7)) continue;
          if (!detail::preserves(poly, lk, g)) continue;
          any = true;
          found.push_back(g);
        }
      }
    if (!any) throw Error(ErrorCode::NotVertexTransitive, "no symmetry maps vertex 0 to vertex " + std::to_string(w));
  }
  return FiniteGroup::from_elements(found);
}

struct SpecialMarking {
  std::vector<std::size_t> per_vertex;  // special triangle at each vertex
  std::set<std::size_t> special_faces;
};

// for symbol p.3.3.3.3: the triangle at each vertex with no edge on a p-gon
inline SpecialMarking mark_special_triangles(const SkeletalPolyhedron& poly) {
  const auto fpe = faces_per_edge(poly);
  std::vector<bool> touches_big(poly.faces.size(), false);
  for (const auto& list : fpe) {
    bool big = std::any_of(list.begin(), list.end(), [&](std::size_t f) { return poly.faces[f].cycle.size() != 3; });
    if (!big) continue;
    for (auto f : list) touches_big[f] = true;
  }
  SpecialMarking m;
  for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
    auto vf = vertex_figure(poly, v);
    if (!vf || vf->faces.size() != 5) throw Error(ErrorCode::PreconditionViolated, "vertex is not 5-valent");
    std::size_t big = 0;
    for (auto f : vf->faces) big += poly.faces[f].cycle.size() != 3;
    if (big != 1) throw Error(ErrorCode::PreconditionViolated, "vertex symbol is not p.3.3.3.3");
    std::vector<std::size_t> cands;
    for (auto f : vf->faces)
      if (poly.faces[f].cycle.size() == 3 && !touches_big[f]) cands.push_back(f);
    if (cands.size() != 1)
      throw Error(ErrorCode::MarkingInconsistent, std::to_string(cands.size()) + " special triangles at vertex " + std::to_string(v));
    m.per_vertex.push_back(cands[0]);
    m.special_faces.insert(cands[0]);
  }
  for (auto f : m.special_faces)
    for (auto v : poly.faces[f].cycle)
      if (m.per_vertex[v] != f) throw Error(ErrorCode::MarkingInconsistent, "special triangle not marked at all its vertices");
  return m;
}

struct SnubTypeWitness {
  std::size_t vertex = 0;
  std::array<std::size_t, 5> neighbors{};  // v1..v5
  std::array<std::size_t, 5> faces{};      // F_p, then triangles (v,v2,v3), (v,v3,v4), F_q, (v,v5,v1)
  std::size_t face_p = 0, face_q = 0;
  bool special_q = false;
};

// variant picks the starting face when every face is a triangle (0..9)
inline SnubTypeWitness build_witness(const SkeletalPolyhedron& poly, std::size_t vertex = 0, std::size_t variant = 0) {
  auto vf = vertex_figure(poly, vertex);
  if (!vf || vf->faces.size() != 5) throw Error(ErrorCode::PreconditionViolated, "vertex is not 5-valent");
  const auto& fs = vf->faces;
  auto size = [&](std::size_t k) { return poly.faces[fs[k % 5]].cycle.size(); };
  std::vector<std::size_t> big;
  for (std::size_t k = 0; k < 5; ++k)
    if (size(k) != 3) big.push_back(k);

  std::size_t ip = variant % 5, iq = (ip + (variant >= 5 ? 2 : 3)) % 5;
  bool special = false;
  if (big.size() == 2) {
    auto key = [&](std::size_t k) {
      auto pc = classify_face(poly, fs[k]);
      return std::make_tuple(pc.size, pc.density, static_cast<int>(pc.kind), -static_cast<long>(fs[k]));
    };
    ip = key(big[0]) > key(big[1]) ? big[0] : big[1];
    iq = ip == big[0] ? big[1] : big[0];
  } else if (big.size() == 1) {
    ip = big[0];
    auto m = mark_special_triangles(poly);
    auto it = std::find(fs.begin(), fs.end(), m.per_vertex[vertex]);
    iq = static_cast<std::size_t>(it - fs.begin());
    special = true;
  } else if (!big.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "vertex symbol is not of snub type");
  }
  const std::size_t gap = (iq + 5 - ip) % 5;
  if (gap != 2 && gap != 3) throw Error(ErrorCode::PreconditionViolated, "large faces are adjacent");
  SnubTypeWitness w;
  w.vertex = vertex;
  w.face_p = fs[ip];
  w.face_q = fs[iq];
  w.special_q = special;
  const auto& n = vf->neighbors;
  for (std::size_t m = 0; m < 5; ++m) {
    if (gap == 3) {
      w.faces[m] = fs[(ip + m) % 5];
      w.neighbors[m] = n[(ip + m) % 5];
    } else {
      w.faces[m] = fs[(ip + 5 - m) % 5];
      w.neighbors[m] = n[(ip + 6 - m) % 5];
    }
  }
  for (std::size_t m : {1, 2, 4})
    if (poly.faces[w.faces[m]].cycle.size() != 3) throw Error(ErrorCode::PreconditionViolated, "vertex symbol is not p.3.3.q.3");
  return w;
}

struct RotationPair {
  Isometry sigma1, sigma2;
  Vector3 base_vertex;
  std::size_t p = 0, q = 0;
  std::size_t rotation_group_order = 0;
  std::size_t symmetry_group_order = 0;
  bool faces_congruent = false;
};

inline RotationPair find_rotations(const SkeletalPolyhedron& poly, const SnubTypeWitness& w, const FiniteGroup& sym) {
  const std::size_t p = poly.faces[w.face_p].cycle.size(), q = poly.faces[w.face_q].cycle.size();
  const Vector3 v = poly.vertices[w.vertex];
  const auto stab = stabilizer(sym, v);
  if (p == 3 && q == 3 && stab.size() > 2)
    throw Error(ErrorCode::NonUnique, "all faces are triangles and the vertex stabilizer has order " + std::to_string(stab.size()));

  auto pick = [&](std::size_t to, std::size_t from, std::size_t face, const char* label) {
    const auto target = detail::face_vertex_set(poly, face);
    std::vector<Isometry> hits;
    for (const auto& g : sym.elements()) {
      if (!approx_equal(apply(g, v), poly.vertices[to], 1e-7)) continue;
      if (!approx_equal(apply(g, poly.vertices[from]), v, 1e-7)) continue;
      bool keeps = true;
      for (auto i : target) {
        bool inside = std::any_of(target.begin(), target.end(), [&](std::size_t j) {
          return approx_equal(apply(g, poly.vertices[i]), poly.vertices[j], 1e-7);
        });
        keeps = keeps && inside;
      }
      if (keeps) hits.push_back(g);
    }
    if (hits.empty()) throw Error(ErrorCode::NoSuchSymmetry, std::string("no symmetry plays the role of ") + label);
    if (hits.size() > 1) throw Error(ErrorCode::NonUnique, std::to_string(hits.size()) + " candidates for " + label);
    return hits[0];
  };

  RotationPair r;
  r.sigma1 = pick(w.neighbors[1], w.neighbors[0], w.face_p, "sigma1");
  r.sigma2 = pick(w.neighbors[4], w.neighbors[3], w.face_q, "sigma2");
  r.base_vertex = v;
  r.p = p;
  r.q = q;
  if (iso_order(r.sigma1, 1000) != static_cast<int>(p) || iso_order(r.sigma2, 1000) != static_cast<int>(q))
    throw Error(ErrorCode::NoSuchSymmetry, "recovered rotations have the wrong periods");
  if (iso_order(compose(r.sigma1, r.sigma2)) != 2) throw Error(ErrorCode::NoSuchSymmetry, "sigma1 sigma2 is not an involution");
  if (!approx_equal(apply(compose(r.sigma1, r.sigma2), v), poly.vertices[w.neighbors[2]], 1e-7))
    throw Error(ErrorCode::NoSuchSymmetry, "sigma1 sigma2 does not carry v to v3");
  r.rotation_group_order = FiniteGroup::generated_by({r.sigma1, r.sigma2}).size();
  r.symmetry_group_order = sym.size();

  auto profile = [&](std::size_t f) {
    std::vector<double> d;
    const auto& c = poly.faces[f].cycle;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) d.push_back(distance(poly.vertices[c[i]], poly.vertices[c[j]]));
    std::sort(d.begin(), d.end());
    return d;
  };
  auto dp = profile(w.face_p), dq = profile(w.face_q);
  r.faces_congruent = dp.size() == dq.size() &&
                      std::equal(dp.begin(), dp.end(), dq.begin(), [](double x, double y) { return std::abs(x - y) < 1e-7; });
  return r;
}

// tries every admissible witness at vertex 0 when the faces are all triangles
inline RotationPair find_rotations(const SkeletalPolyhedron& poly, const FiniteGroup& sym) {
  SnubTypeWitness w = build_witness(poly);
  const bool all_triangles = poly.faces[w.face_p].cycle.size() == 3 && poly.faces[w.face_q].cycle.size() == 3;
  if (!all_triangles) return find_rotations(poly, w, sym);
  std::optional<Error> last;
  for (std::size_t variant = 0; variant < 10; ++variant) {
    try {
      return find_rotations(poly, build_witness(poly, 0, variant), sym);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSuchSymmetry) throw;
      last = e;
    }
  }
  throw *last;
}

struct ParentReconstruction {
  SkeletalPolyhedron parent;
  ValidationReport parent_report;
  GeneratorTriple generators;
  SkeletalPolyhedron snub;  // rebuilt from the recovered data
  std::array<std::size_t, 3> stabilizer_orders{};
  bool identical_to_input = false;
  bool isomorphic_to_input = false;
};

inline bool same_complex(const SkeletalPolyhedron& a, const SkeletalPolyhedron& b) {
  if (a.vertices.size() != b.vertices.size() || a.faces.size() != b.faces.size()) return false;
  PointIndex idx(1e-7);
  for (auto v : b.vertices) idx.push(v);
  std::vector<std::size_t> map(a.vertices.size());
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    auto j = idx.find(a.vertices[i]);
    if (!j) return false;
    map[i] = *j;
  }
  std::set<std::vector<std::size_t>> fb;
  for (const auto& f : b.faces) fb.insert(canonical_cycle(f.cycle));
  for (const auto& f : a.faces) {
    std::vector<std::size_t> c;
    for (auto i : f.cycle) c.push_back(map[i]);
    if (!fb.count(canonical_cycle(c))) return false;
  }
  return true;
}

inline ParentReconstruction reconstruct_parent(const SkeletalPolyhedron& poly, const RotationPair& rot) {
  ParentReconstruction out;
  out.generators = {rot.sigma1, rot.sigma2, compose(rot.sigma1, rot.sigma2)};
  const FiniteGroup a = FiniteGroup::close(out.generators);
  const Vector3 v = rot.base_vertex;
  const auto fq = rotation_cycle(rot.sigma2, v);
  Vector3 u{};
  for (auto x : fq) u += x;
  u = u / static_cast<double>(fq.size());

  const auto fp_cycle = rotation_cycle(rot.sigma1, u);
  const Vector3 su = apply(rot.sigma1, u);
  auto setwise = [&](const std::vector<Vector3>& pts) {
    std::size_t count = 0;
    for (const auto& g : a.elements()) {
      bool ok = std::all_of(pts.begin(), pts.end(), [&](Vector3 x) {
        Vector3 y = apply(g, x);
        return std::any_of(pts.begin(), pts.end(), [&](Vector3 z) { return approx_equal(y, z, 1e-7); });
      });
      count += ok;
    }
    return count;
  };
  out.stabilizer_orders = {setwise({u}), setwise({u, su}), setwise(fp_cycle)};
  const std::array<std::size_t, 3> expected = {rot.q, 2, rot.p};
  if (out.stabilizer_orders != expected) {
    std::string msg = "stabilizers of (vertex, edge, face) have orders (";
    for (std::size_t i = 0; i < 3; ++i) msg += std::to_string(out.stabilizer_orders[i]) + (i < 2 ? "," : "");
    msg += "), expected (" + std::to_string(rot.q) + ",2," + std::to_string(rot.p) + ")";
    throw Error(ErrorCode::StabilizerMismatch, msg);
  }
  out.parent = build_snub(a, out.generators, u, "parent");
  out.parent_report = validate(out.parent);
  out.snub = build_snub(a, out.generators, v, poly.source ? poly.source->name : std::string{});
  out.identical_to_input = same_complex(out.snub, poly);
  out.isomorphic_to_input = isomorphic(out.snub, poly);
  return out;
}

}  // namespace skelsnub
