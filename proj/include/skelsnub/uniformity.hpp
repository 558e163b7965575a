#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "geometry.hpp"
#include "group.hpp"
#include "polygon.hpp"
#include "snub.hpp"

namespace skelsnub {

// r1 = |s1 v - v|^2 - |s0 v - v|^2, r2 = |s0 v - v|^2 - |s1 v - s0 v|^2
inline std::array<double, 2> uniformity_residual(const GeneratorTriple& g, Vector3 v) {
  Vector3 w1 = apply(g.s1, v) - v, w2 = apply(g.s0, v) - v, w3 = apply(g.s1, v) - apply(g.s0, v);
  return {dot(w1, w1) - dot(w2, w2), dot(w2, w2) - dot(w3, w3)};
}

inline std::array<Vector3, 2> uniformity_gradient(const GeneratorTriple& g, Vector3 v) {
  // grad |A v + t|^2 = 2 A^T (A v + t)
  const Matrix3 i3 = identity_matrix();
  const Matrix3 a1 = g.s1.linear - i3, a2 = g.s0.linear - i3, a3 = g.s1.linear - g.s0.linear;
  Vector3 w1 = apply(g.s1, v) - v, w2 = apply(g.s0, v) - v, w3 = apply(g.s1, v) - apply(g.s0, v);
  Vector3 g1 = 2.0 * (transpose(a1) * w1), g2 = 2.0 * (transpose(a2) * w2), g3 = 2.0 * (transpose(a3) * w3);
  return {g1 - g2, g2 - g3};
}

struct UniformityRoot {
  Vector3 vertex;
  std::array<double, 2> residual{};
  std::string symbol;
  bool ambiguous = false;
};

struct UniformityOptions {
  int grid = 200;
  int max_iterations = 60;
  double residual_tol = 1e-12;
  double dedup_tol = 1e-8;
};

inline std::vector<UniformityRoot> solve_uniformity(const CatalogEntry& entry, const UniformityOptions& opt = {}) {
  const GeneratorTriple& gens = entry.generators;
  const FundamentalCone& cone = entry.cone;
  Vector3 c{};
  for (const auto& s : cone.spanning) c += normalized(s);
  c = normalized(c);
  Vector3 e1, e2;
  detail::orthonormal_complement(c, e1, e2);
  double theta_max = 0;
  for (const auto& s : cone.spanning) theta_max = std::max(theta_max, std::acos(std::clamp(dot(c, normalized(s)), -1.0, 1.0)));

  auto point = [&](double t, double f) {
    return std::cos(t) * c + std::sin(t) * (std::cos(f) * e1 + std::sin(f) * e2);
  };

  std::vector<Vector3> roots;
  for (int i = 0; i < opt.grid; ++i)
    for (int j = 0; j < opt.grid; ++j) {
      double t = (i + 0.5) / opt.grid * theta_max;
      double f = (j + 0.5) / opt.grid * 2 * std::numbers::pi;
      if (!cone_contains(cone, point(t, f))) continue;
      bool converged = false;
      for (int it = 0; it < opt.max_iterations; ++it) {
        Vector3 p = point(t, f);
        auto r = uniformity_residual(gens, p);
        if (std::abs(r[0]) < opt.residual_tol && std::abs(r[1]) < opt.residual_tol) {
          converged = true;
          break;
        }
        auto gr = uniformity_gradient(gens, p);
        Vector3 dt = -std::sin(t) * c + std::cos(t) * (std::cos(f) * e1 + std::sin(f) * e2);
        Vector3 df = std::sin(t) * (-std::sin(f) * e1 + std::cos(f) * e2);
        double j11 = dot(gr[0], dt), j12 = dot(gr[0], df), j21 = dot(gr[1], dt), j22 = dot(gr[1], df);
        double det = j11 * j22 - j12 * j21;
        double scale = std::abs(j11 * j22) + std::abs(j12 * j21);
        if (std::abs(det) <= 1e-13 * std::max(scale, 1e-300) || std::abs(det) < 1e-300) break;
        t -= (j22 * r[0] - j12 * r[1]) / det;
        f -= (-j21 * r[0] + j11 * r[1]) / det;
        if (!std::isfinite(t) || !std::isfinite(f)) break;
      }
      if (!converged) continue;
      Vector3 p = point(t, f);
      if (!cone_contains(cone, p)) continue;
      bool dup = std::any_of(roots.begin(), roots.end(), [&](Vector3 q) { return approx_equal(p, q, opt.dedup_tol); });
      if (!dup) roots.push_back(p);
    }
  std::sort(roots.begin(), roots.end(), lex_less);

  const FiniteGroup group = FiniteGroup::close(gens);
  std::vector<UniformityRoot> out;
  for (auto p : roots) {
    if (!satisfies_ipc(group, p)) continue;
    UniformityRoot r;
    r.vertex = p;
    r.residual = uniformity_residual(gens, p);
    try {
      SkeletalPolyhedron poly = build_snub(group, gens, p, entry.spec.name);
      VertexSymbol vs = vertex_symbol(poly);
      r.symbol = vs.str();
      r.ambiguous = std::any_of(vs.faces.begin(), vs.faces.end(), [](const PolygonClass& pc) { return pc.ambiguous; });
    } catch (const Error& e) {
      r.symbol = "?";
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace skelsnub
