#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace skelsnub;

TEST(Uniformity, GradientMatchesFiniteDifferences) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const double h = 1e-6;
  for (const auto& e : catalog()) {
    for (int trial = 0; trial < 5; ++trial) {
      Vector3 v{u(rng), u(rng), u(rng)};
      auto grad = uniformity_gradient(e.generators, v);
      for (int i = 0; i < 3; ++i) {
        Vector3 dv{};
        dv[i] = h;
        auto rp = uniformity_residual(e.generators, v + dv), rm = uniformity_residual(e.generators, v - dv);
        for (int k = 0; k < 2; ++k) {
          double fd = (rp[static_cast<std::size_t>(k)] - rm[static_cast<std::size_t>(k)]) / (2 * h);
          double an = grad[static_cast<std::size_t>(k)][i];
          EXPECT_LE(std::abs(fd - an), 1e-5 * std::max(1.0, std::abs(an))) << e.spec.name;
        }
      }
    }
  }
}

TEST(Uniformity, ResidualIsQuadratic) {
  const auto& e = lookup("{5,3}");
  Vector3 v{0.3, 0.4, -0.2};
  auto r1 = uniformity_residual(e.generators, v), r3 = uniformity_residual(e.generators, 3.0 * v);
  EXPECT_NEAR(r3[0], 9 * r1[0], 1e-12);
  EXPECT_NEAR(r3[1], 9 * r1[1], 1e-12);
}

TEST(Uniformity, SnubCube) {
  auto roots = solve_uniformity(lookup("{4,3}"));
  ASSERT_FALSE(roots.empty());
  const auto& e = lookup("{4,3}");
  auto p = build_snub(e, roots[0].vertex);
  EXPECT_EQ(p.edges.size(), 60u);
  double len = distance(p.vertices[p.edges[0].ends[0]], p.vertices[p.edges[0].ends[1]]);
  for (const auto& x : p.edges) EXPECT_NEAR(distance(p.vertices[x.ends[0]], p.vertices[x.ends[1]]), len, 1e-9);
  EXPECT_EQ(roots[0].symbol, "4_c.3.3.3.3");
  EXPECT_LT(std::abs(roots[0].residual[0]), 1e-12);
  EXPECT_TRUE(cone_contains(e.cone, roots[0].vertex));
}

TEST(Uniformity, SnubTetrahedronIsIcosahedron) {
  const auto& e = lookup("{3,3}");
  auto roots = solve_uniformity(e);
  ASSERT_FALSE(roots.empty());
  for (const auto& r : roots) {
    EXPECT_EQ(r.symbol, "3.3.3.3.3");
    EXPECT_TRUE(isomorphic(build_snub(e, r.vertex), fixtures::icosahedron()));
  }
}

TEST(Uniformity, NoSolutionsForPetrieDuals) {
  for (const auto& e : catalog()) {
    if (e.spec.is_petrie_dual) {
      EXPECT_TRUE(solve_uniformity(e).empty()) << e.spec.name;
    }
  }
}

TEST(Uniformity, RootsAreSortedAndDistinct) {
  auto roots = solve_uniformity(lookup("{5,5/2}"));
  for (std::size_t i = 1; i < roots.size(); ++i) EXPECT_TRUE(lex_less(roots[i - 1].vertex, roots[i].vertex));
}
