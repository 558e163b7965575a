#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"
#include "group.hpp"

namespace skelsnub {

struct Fraction {
  int num = 0;
  int den = 1;

  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
  bool operator==(const Fraction&) const = default;
};

struct PolyhedronSpec {
  std::string name;
  std::string slug;
  Fraction p, q;
  std::optional<int> petrie_length;  // subscript of Petrie duals
  bool index2 = false;               // G+ has index 2 in G
  std::optional<std::string> dual_of;
  std::optional<std::string> petrie_dual_of;
  bool is_petrie_dual = false;
};

struct FundamentalCone {
  std::vector<Vector3> spanning;
  std::vector<Vector3> facet_normals;  // inward
  Vector3 seed;
};

struct CatalogEntry {
  PolyhedronSpec spec;
  GeneratorTriple generators;
  FundamentalCone cone;
};

namespace detail {

inline Isometry lin(Matrix3 m) { return {m, {}}; }

inline std::vector<Vector3> facet_normals(const std::vector<Vector3>& span, Vector3 interior) {
  std::vector<Vector3> out;
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = i + 1; j < span.size(); ++j) {
      Vector3 n = cross(span[i], span[j]);
      if (norm(n) < 1e-12) continue;
      n = normalized(n);
      if (dot(n, interior) < 0) n = -n;
      bool facet = true;
      for (std::size_t k = 0; k < span.size(); ++k)
        if (dot(n, span[k]) < -1e-12) facet = false;
      if (!facet) continue;
      bool dup = std::any_of(out.begin(), out.end(), [&](Vector3 m) { return approx_equal(m, n, 1e-12); });
      if (!dup) out.push_back(n);
    }
  return out;
}

inline FundamentalCone make_cone(std::vector<Vector3> span, Vector3 seed) {
  FundamentalCone c;
  c.facet_normals = facet_normals(span, seed);
  c.spanning = std::move(span);
  c.seed = seed;
  return c;
}

struct Raw {
  const char* name;
  const char* slug;
  Fraction p, q;
  std::optional<int> petrie;
  bool index2;
  const char* dual_of;
  const char* petrie_dual_of;
  bool is_petrie_dual;
};

inline std::vector<CatalogEntry> build_catalog() {
  const double r = 1.0 / std::sqrt(2.0);
  const double s5 = std::sqrt(5.0);
  const double a = (1 + s5) / 4, b = (s5 - 1) / 4, h = 0.5;
  const double phi = (1 + s5) / 2;

  const Isometry t_s2 = lin({{{h, h, -r}, {-h, -h, -r}, {-r, r, 0}}});
  const Isometry i_s2 = lin({{{a, -h, b}, {h, b, -a}, {b, a, h}}});
  const Isometry i_s1_petrie = lin({{{a, h, b}, {-h, b, a}, {-b, a, -h}}});
  const Isometry gd_s2 = lin({{{h, -b, a}, {b, -a, -h}, {a, h, -b}}});
  const Isometry hex_s1 = lin({{{h, b, a}, {-b, -a, h}, {-a, h, b}}});
  const Isometry gi_s2 = lin({{{-b, a, -h}, {a, h, b}, {h, -b, -a}}});
  const Isometry dec_s1 = lin({{{-b, a, h}, {-a, -h, b}, {-h, b, -a}}});

  const Isometry x_yz = lin({{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}});   // (x,-y,-z)
  const Isometry x_y = lin({{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}});     // (x,-y,z)
  const Isometry xy_z = lin({{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}});    // (x,y,-z)

  // cones
  const std::vector<Vector3> v1 = {{1, 0, -r}, {h, h, 0}, {h, -h, 0}, {1.0 / 3, 0, r / 3}};
  const std::vector<Vector3> v2 = {{1, 0, -r}, {h, h, 0}, {1.0 / 3, 0, r / 3}};
  const std::vector<Vector3> v3 = {{0, 0, -1}, {1, 0, -1}, {1, 1, -1}, {0, 1, -1}};
  const std::vector<Vector3> v4 = {{1, 1, -1}, {1, 0, -1}, {0, 0, -1}};
  const std::vector<Vector3> v5 = {
      {phi, 0, 1}, {phi, 0, 0}, {(2 + s5) / 3, (1 + s5) / 6, 0}, {(3 + s5) / 4, (1 + s5) / 4, 0.5}};
  const std::vector<Vector3> v6(v5.begin(), v5.begin() + 3);

  const Vector3 w1{4.0 / 9, 0, -2.0 / (9 * std::sqrt(2.0))};
  const Vector3 w2{11.0 / 24, 1.0 / 8, -std::sqrt(2.0) / 12};
  const Vector3 w3{1.0 / 3, 1.0 / 3, -2.0 / 3};
  const Vector3 w4{0.5, 0.25, -0.75};
  const Vector3 w5{(7 + 5 * s5) / 18, (1 + s5) / 18, 1.0 / 3};
  const Vector3 w6{(5 + 4 * s5) / 12, (1 + s5) / 24, 0.25};

  auto entry = [](Raw raw, GeneratorTriple g, FundamentalCone c) {
    CatalogEntry e;
    e.spec.name = raw.name;
    e.spec.slug = raw.slug;
    e.spec.p = raw.p;
    e.spec.q = raw.q;
    e.spec.petrie_length = raw.petrie;
    e.spec.index2 = raw.index2;
    if (raw.dual_of) e.spec.dual_of = raw.dual_of;
    if (raw.petrie_dual_of) e.spec.petrie_dual_of = raw.petrie_dual_of;
    e.spec.is_petrie_dual = raw.is_petrie_dual;
    e.generators = g;
    e.cone = std::move(c);
    return e;
  };

  std::vector<CatalogEntry> out;
  auto add = [&](Raw raw, Isometry s1, Isometry s2, Isometry s0, FundamentalCone c) {
    out.push_back(entry(raw, {s1, s2, s0}, std::move(c)));
  };
  auto add_dual = [&](Raw raw, const CatalogEntry& partner) {
    out.push_back(entry(raw, dual_generators(partner.generators), partner.cone));
  };

  const auto cone1 = make_cone(v1, w1), cone2 = make_cone(v2, w2), cone3 = make_cone(v3, w3),
             cone4 = make_cone(v4, w4), cone5 = make_cone(v5, w5), cone6 = make_cone(v6, w6);

  add({"{3,3}", "3-3", {3}, {3}, {}, true, "{3,3}", "{4,3}_3", false},
      lin({{{h, -h, r}, {h, -h, -r}, {r, r, 0}}}), t_s2, lin({{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}}), cone1);
  add({"{4,3}_3", "4-3_3", {4}, {3}, 3, false, nullptr, "{3,3}", true},
      lin({{{0, -1, 0}, {1, 0, 0}, {0, 0, -1}}}), t_s2, lin({{{h, h, r}, {h, h, -r}, {r, -r, 0}}}), cone2);
  add({"{4,3}", "4-3", {4}, {3}, {}, true, "{3,4}", "{6,3}_4", false},
      lin({{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}}), lin({{{0, 1, 0}, {0, 0, -1}, {-1, 0, 0}}}),
      lin({{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}}}), cone3);
  add_dual({"{3,4}", "3-4", {3}, {4}, {}, true, "{4,3}", "{6,4}_3", false}, out.back());
  add({"{6,3}_4", "6-3_4", {6}, {3}, 4, true, nullptr, "{4,3}", true},
      lin({{{0, 0, -1}, {-1, 0, 0}, {0, -1, 0}}}), lin({{{0, 1, 0}, {0, 0, -1}, {-1, 0, 0}}}), x_y, cone3);
  add({"{6,4}_3", "6-4_3", {6}, {4}, 3, false, nullptr, "{3,4}", true},
      lin({{{0, 0, -1}, {-1, 0, 0}, {0, -1, 0}}}), lin({{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}),
      lin({{{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}}}), cone4);
  add({"{3,5}", "3-5", {3}, {5}, {}, true, "{5,3}", "{10,5}_3", false},
      lin({{{a, h, b}, {h, -b, -a}, {-b, a, -h}}}), i_s2, x_yz, cone5);
  add_dual({"{5,3}", "5-3", {5}, {3}, {}, true, "{3,5}", "{10,3}_5", false}, out.back());
  add({"{10,5}_3", "10-5_3", {10}, {5}, 3, false, nullptr, "{3,5}", true}, i_s1_petrie, i_s2, xy_z, cone6);
  add({"{10,3}_5", "10-3_5", {10}, {3}, 5, false, nullptr, "{5,3}", true},
      i_s1_petrie, lin({{{a, h, -b}, {h, -b, a}, {b, -a, -h}}}), x_y, cone6);
  add({"{5,5/2}", "5-5-2", {5}, {5, 2}, {}, true, "{5/2,5}", "{6,5/2}", false},
      lin({{{h, b, a}, {b, a, -h}, {-a, h, b}}}), gd_s2, x_yz, cone5);
  add_dual({"{5/2,5}", "5-2-5", {5, 2}, {5}, {}, true, "{5,5/2}", "{6,5}", false}, out.back());
  add({"{6,5/2}", "6-5-2", {6}, {5, 2}, {}, false, nullptr, "{5,5/2}", true}, hex_s1, gd_s2, xy_z, cone6);
  add({"{6,5}", "6-5", {6}, {5}, {}, false, nullptr, "{5/2,5}", true},
      hex_s1, lin({{{h, b, -a}, {b, a, h}, {a, -h, b}}}), x_y, cone6);
  add({"{3,5/2}", "3-5-2", {3}, {5, 2}, {}, true, "{5/2,3}", "{10/3,5/2}", false},
      lin({{{-b, a, h}, {-a, -h, b}, {h, -b, a}}}), gi_s2, x_yz, cone5);
  add_dual({"{5/2,3}", "5-2-3", {5, 2}, {3}, {}, true, "{3,5/2}", "{10/3,3}", false}, out.back());
  add({"{10/3,5/2}", "10-3-5-2", {10, 3}, {5, 2}, {}, false, nullptr, "{3,5/2}", true}, dec_s1, gi_s2, x_y, cone6);
  add({"{10/3,3}", "10-3-3", {10, 3}, {3}, {}, false, nullptr, "{5/2,3}", true},
      dec_s1, lin({{{-b, -a, h}, {a, -h, -b}, {h, b, a}}}), xy_z, cone6);
  return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.spec.name);
  return out;
}

inline std::string normalize_name(std::string_view raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ' && c != '{' && c != '}') s.push_back(c);
  for (auto& c : s)
    if (c == ',' || c == '/') c = '-';
  return s;
}

inline const CatalogEntry& lookup(std::string_view name) {
  const std::string key = normalize_name(name);
  for (const auto& e : catalog())
    if (e.spec.slug == key) return e;
  throw Error(ErrorCode::UnknownPolyhedron, "no catalog entry named '" + std::string(name) + "'");
}

inline bool cone_contains(const FundamentalCone& cone, Vector3 v, bool strict = false, double tol = 1e-9) {
  double scale = std::max(norm(v), 1e-300);
  for (const auto& n : cone.facet_normals) {
    double d = dot(n, v) / scale;
    if (strict ? d <= tol : d < -tol) return false;
  }
  return true;
}

// checks that the cone is a fundamental region: sampled interior points are never
// carried back into the open cone by a nontrivial element
inline bool verify_dirichlet(const CatalogEntry& entry, const FiniteGroup& group, int samples = 200,
                             unsigned seed = 12345) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto& span = entry.cone.spanning;
  int accepted = 0;
  for (int attempt = 0; attempt < samples * 20 && accepted < samples; ++attempt) {
    Vector3 p{};
    for (const auto& s : span) p += (0.05 + unit(rng)) * normalized(s);
    if (!cone_contains(entry.cone, p, true, 1e-6)) continue;
    ++accepted;
    for (std::size_t i = 1; i < group.size(); ++i)
      if (cone_contains(entry.cone, apply(group.element(i), p), true, 1e-9)) return false;
  }
  return accepted >= std::min(samples, 100);
}

}  // namespace skelsnub
