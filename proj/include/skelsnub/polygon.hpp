#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "geometry.hpp"

namespace skelsnub {

enum class PolygonKind { Convex, Star, Skew };

struct PolygonClass {
  PolygonKind kind = PolygonKind::Convex;
  int size = 0;
  int density = 1;
  bool planar = true;
  bool regular = true;
  bool ambiguous = false;  // planarity residual sits close to the threshold
  double edge_length = 0;
  double planarity_residual = 0;

  std::string token() const {
    if (size == 3) return "3";
    const std::string n = std::to_string(size);
    switch (kind) {
      case PolygonKind::Convex: return n + "_c";
      case PolygonKind::Star: return n + "/" + std::to_string(density);
      case PolygonKind::Skew:
        return density > 1 ? "(" + n + "/" + std::to_string(density) + ")_s" : n + "_s";
    }
    return n;
  }

  auto order_key() const { return std::make_tuple(size, density, static_cast<int>(kind)); }
};

namespace detail {

inline void orthonormal_complement(Vector3 n, Vector3& e1, Vector3& e2) {
  Vector3 t = std::abs(n.x) < 0.9 ? Vector3{1, 0, 0} : Vector3{0, 1, 0};
  e1 = normalized(t - dot(t, n) * n);
  e2 = cross(n, e1);
}

// smallest-eigenvalue direction of the scatter matrix by inverse power iteration
inline Vector3 pca_normal(const std::vector<Vector3>& pts, Vector3 c) {
  Matrix3 s{};
  for (auto p : pts) {
    Vector3 d = p - c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += d[i] * d[j];
  }
  double shift = 1e-12 * (s[0][0] + s[1][1] + s[2][2] + 1e-300);
  for (int i = 0; i < 3; ++i) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += shift;
  auto inv = inverse(s);
  Vector3 v{0.577, 0.577, 0.577};
  if (!inv) return {0, 0, 1};
  for (int k = 0; k < 100; ++k) v = normalized((*inv) * v);
  return v;
}

}  // namespace detail

inline PolygonClass classify_polygon(const std::vector<Vector3>& pts) {
  const std::size_t n = pts.size();
  if (n < 3) throw Error(ErrorCode::DegeneratePolygon, "fewer than three vertices");
  Vector3 c{};
  for (auto p : pts) c += p;
  c = c / static_cast<double>(n);
  double diameter = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) diameter = std::max(diameter, distance(pts[i], pts[j]));
  if (diameter < 1e-12) throw Error(ErrorCode::DegeneratePolygon, "vertices coincide");

  Vector3 newell{};
  for (std::size_t i = 0; i < n; ++i) newell += cross(pts[i] - c, pts[(i + 1) % n] - c);
  Vector3 axis = norm(newell) > 1e-9 * diameter * diameter ? normalized(newell) : detail::pca_normal(pts, c);

  PolygonClass pc;
  pc.size = static_cast<int>(n);
  for (auto p : pts) pc.planarity_residual = std::max(pc.planarity_residual, std::abs(dot(p - c, axis)));
  const double tol = 1e-7 * diameter;
  pc.planar = pc.planarity_residual < tol;
  pc.ambiguous = pc.planarity_residual > 0.1 * tol && pc.planarity_residual < 10 * tol;

  Vector3 e1, e2;
  detail::orthonormal_complement(axis, e1, e2);
  double winding = 0;
  double prev = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    Vector3 d = pts[i % n] - c;
    double ang = std::atan2(dot(d, e2), dot(d, e1));
    if (i > 0) {
      double delta = ang - prev;
      while (delta > std::numbers::pi) delta -= 2 * std::numbers::pi;
      while (delta < -std::numbers::pi) delta += 2 * std::numbers::pi;
      winding += delta;
    }
    prev = ang;
  }
  pc.density = static_cast<int>(std::lround(std::abs(winding) / (2 * std::numbers::pi)));

  pc.edge_length = distance(pts[0], pts[1]);
  double chord = distance(pts[0], pts[2 % n]);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(distance(pts[i], pts[(i + 1) % n]) - pc.edge_length) > 1e-7 * diameter) pc.regular = false;
    if (std::abs(distance(pts[i], pts[(i + 2) % n]) - chord) > 1e-7 * diameter) pc.regular = false;
  }

  if (!pc.planar) pc.kind = PolygonKind::Skew;
  else if (pc.density >= 2) pc.kind = PolygonKind::Star;
  else pc.kind = PolygonKind::Convex;
  if (pc.planar && pc.density == 0) throw Error(ErrorCode::DegeneratePolygon, "planar polygon with zero winding");
  return pc;
}

inline PolygonClass classify_face(const SkeletalPolyhedron& poly, std::size_t face) {
  std::vector<Vector3> pts;
  for (auto i : poly.faces[face].cycle) pts.push_back(poly.vertices[i]);
  return classify_polygon(pts);
}

struct VertexSymbol {
  std::vector<PolygonClass> faces;  // in the order met around the vertex
  std::vector<std::string> tokens;  // display order

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < tokens.size(); ++i) s += (i ? "." : "") + tokens[i];
    return s;
  }
};

// rotation starting at a maximal face; ties go to the smallest continuation
inline std::vector<std::size_t> display_order(const std::vector<PolygonClass>& faces) {
  const std::size_t n = faces.size();
  std::vector<std::size_t> best;
  auto seq = [&](std::size_t start, bool fwd) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(fwd ? (start + k) % n : (start + n - k) % n);
    return out;
  };
  auto key_less = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (faces[a[0]].order_key() != faces[b[0]].order_key()) return faces[a[0]].order_key() > faces[b[0]].order_key();
    for (std::size_t k = 1; k < n; ++k) {
      const auto ka = faces[a[k]].order_key(), kb = faces[b[k]].order_key();
      if (ka != kb) return ka < kb;
    }
    return false;
  };
  for (std::size_t s = 0; s < n; ++s)
    for (bool fwd : {true, false}) {
      auto cand = seq(s, fwd);
      if (best.empty() || key_less(cand, best)) best = cand;
    }
  return best;
}

inline VertexSymbol vertex_symbol(const SkeletalPolyhedron& poly, std::size_t vertex = 0) {
  auto vf = vertex_figure(poly, vertex);
  if (!vf) throw Error(ErrorCode::NonCyclicVertexFigure, "faces at vertex " + std::to_string(vertex) + " do not form one cycle");
  VertexSymbol vs;
  for (auto f : vf->faces) vs.faces.push_back(classify_face(poly, f));
  for (auto i : display_order(vs.faces)) vs.tokens.push_back(vs.faces[i].token());
  return vs;
}

inline bool same_symbol(const VertexSymbol& a, const VertexSymbol& b) { return a.tokens == b.tokens; }

struct QuadrilateralShape {
  bool crossed = false;
  bool planar = false;
  double planarity_residual = 0;
};

namespace detail {

inline double orient2(double ax, double ay, double bx, double by, double cx, double cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

inline bool segments_cross(std::array<double, 2> a, std::array<double, 2> b, std::array<double, 2> c,
                           std::array<double, 2> d, double eps) {
  double o1 = orient2(a[0], a[1], b[0], b[1], c[0], c[1]);
  double o2 = orient2(a[0], a[1], b[0], b[1], d[0], d[1]);
  double o3 = orient2(c[0], c[1], d[0], d[1], a[0], a[1]);
  double o4 = orient2(c[0], c[1], d[0], d[1], b[0], b[1]);
  return ((o1 > eps && o2 < -eps) || (o1 < -eps && o2 > eps)) && ((o3 > eps && o4 < -eps) || (o3 < -eps && o4 > eps));
}

}  // namespace detail

inline QuadrilateralShape classify_quadrilateral(const std::array<Vector3, 4>& q) {
  Vector3 c = (q[0] + q[1] + q[2] + q[3]) / 4.0;
  double diameter = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) diameter = std::max(diameter, distance(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)]));
  if (diameter < 1e-12) throw Error(ErrorCode::NotQuadrilateral, "vertices coincide");
  std::vector<Vector3> pts(q.begin(), q.end());
  Vector3 axis = detail::pca_normal(pts, c);
  Vector3 e1, e2;
  detail::orthonormal_complement(axis, e1, e2);
  std::array<std::array<double, 2>, 4> p2{};
  double spread = 0;
  QuadrilateralShape out;
  for (std::size_t i = 0; i < 4; ++i) {
    Vector3 d = q[i] - c;
    p2[i] = {dot(d, e1), dot(d, e2)};
    out.planarity_residual = std::max(out.planarity_residual, std::abs(dot(d, axis)));
  }
  // collinear: the in-plane scatter has rank one
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        spread = std::max(spread, std::abs(detail::orient2(p2[i][0], p2[i][1], p2[j][0], p2[j][1], p2[k][0], p2[k][1])));
  if (spread < 1e-9 * diameter * diameter) throw Error(ErrorCode::NotQuadrilateral, "vertices are collinear");
  out.planar = out.planarity_residual < 1e-7 * diameter;
  const double eps = 1e-12 * diameter * diameter;
  out.crossed = detail::segments_cross(p2[0], p2[1], p2[2], p2[3], eps) || detail::segments_cross(p2[1], p2[2], p2[3], p2[0], eps);
  return out;
}

inline QuadrilateralShape vertex_figure_shape(const SkeletalPolyhedron& poly, std::size_t vertex = 0) {
  auto vf = vertex_figure(poly, vertex);
  if (!vf || vf->neighbors.size() != 4) throw Error(ErrorCode::NotQuadrilateral, "vertex figure is not a 4-cycle");
  std::array<Vector3, 4> q{};
  for (std::size_t i = 0; i < 4; ++i) q[i] = poly.vertices[vf->neighbors[i]];
  return classify_quadrilateral(q);
}

}  // namespace skelsnub
