#include <gtest/gtest.h>

#include <map>
#include <set>

#include "skelsnub/combinatorics.hpp"
#include "skelsnub/snub.hpp"

using namespace skelsnub;

TEST(Snub, CanonicalCycle) {
  std::vector<std::size_t> a{4, 2, 7, 1}, b{1, 7, 2, 4}, c{7, 1, 4, 2};
  EXPECT_EQ(canonical_cycle(a), (std::vector<std::size_t>{1, 4, 2, 7}));
  EXPECT_EQ(canonical_cycle(a), canonical_cycle(b));
  EXPECT_EQ(canonical_cycle(a), canonical_cycle(c));
}

TEST(Snub, BaseComplexShape) {
  const auto& e = lookup("{6,4}_3");
  auto bc = base_complex(e.generators, e.cone.seed, type_set(e.generators, e.cone.seed));
  EXPECT_EQ(bc.base_edges.size(), 3u);
  EXPECT_EQ(bc.base_faces.at(0).size(), 3u);
  EXPECT_EQ(bc.base_faces.at(1).size(), 6u);
  EXPECT_EQ(bc.base_faces.at(2).size(), 4u);
  EXPECT_TRUE(approx_equal(bc.base_faces.at(0)[1], apply(e.generators.s0, e.cone.seed)));
}

TEST(Snub, GenuineCountsAndLocalStructure) {
  for (const auto& e : catalog()) {
    SCOPED_TRACE(e.spec.name);
    auto g = FiniteGroup::close(e.generators);
    auto p = build_snub(g, e.generators, e.cone.seed, e.spec.name);
    const std::size_t n = g.size();
    EXPECT_EQ(p.vertices.size(), n);
    std::array<std::size_t, 3> edges{}, faces{};
    for (const auto& x : p.edges) ++edges[static_cast<std::size_t>(x.type)];
    for (const auto& x : p.faces) ++faces[static_cast<std::size_t>(x.type)];
    EXPECT_EQ(edges, (std::array<std::size_t, 3>{n / 2, n, n}));
    EXPECT_EQ(faces[0], n);
    EXPECT_EQ(faces[1] * static_cast<std::size_t>(e.spec.p.num), n);
    EXPECT_EQ(faces[2] * static_cast<std::size_t>(e.spec.q.num), n);
    EXPECT_FALSE(p.merged_edge_types);
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
      auto vf = vertex_figure(p, v);
      ASSERT_TRUE(vf.has_value());
      EXPECT_EQ(vf->faces.size(), 5u);
    }
    for (const auto& list : faces_per_edge(p)) EXPECT_EQ(list.size(), 2u);
    EXPECT_TRUE(validate(p).ok());
  }
}

TEST(Snub, FaceOrderAroundBaseVertex) {
  const auto& e = lookup("{4,3}");
  auto p = build_snub(e, e.cone.seed);
  auto vf = vertex_figure(p, 0);
  ASSERT_TRUE(vf.has_value());
  std::vector<std::size_t> sizes;
  for (auto f : vf->faces) sizes.push_back(p.faces[f].cycle.size());
  // the square is followed (one way or the other) by triangle, triangle, triangle, triangle
  EXPECT_EQ(std::count(sizes.begin(), sizes.end(), 4u), 1);
  EXPECT_EQ(std::count(sizes.begin(), sizes.end(), 3u), 4);
}

TEST(Snub, Deterministic) {
  const auto& e = lookup("{10/3,3}");
  auto a = build_snub(e, e.cone.seed), b = build_snub(e, e.cone.seed);
  ASSERT_EQ(a.vertices.size(), b.vertices.size());
  for (std::size_t i = 0; i < a.vertices.size(); ++i) EXPECT_TRUE(approx_equal(a.vertices[i], b.vertices[i], 0.0));
  for (std::size_t i = 0; i < a.faces.size(); ++i) EXPECT_EQ(a.faces[i].cycle, b.faces[i].cycle);
}

TEST(Snub, MedialDegenerateMergesEdgeOrbits) {
  const auto& e = lookup("{6,4}_3");
  Vector3 v = degenerate_point(e.generators, 0, e.cone.seed);
  auto p = build_snub(e, v);
  EXPECT_EQ(p.source->type_set.str(), "{1,2}");
  EXPECT_TRUE(p.merged_edge_types);
  EXPECT_EQ(p.vertices.size(), 24u);
  EXPECT_EQ(p.edges.size(), 48u);
  auto r = degenerate_identity_check(p, e.spec);
  EXPECT_EQ(r.fixed_generator, 0);
  EXPECT_EQ(r.vertex_degree, 4u);
  EXPECT_TRUE(r.matches);
}

TEST(Snub, FixedBySecondGeneratorGivesParent) {
  for (const char* name : {"{4,3}", "{3,5}", "{5/2,3}", "{4,3}_3", "{10,5}_3"}) {
    const auto& e = lookup(name);
    auto p = build_snub(e, degenerate_point(e.generators, 2, e.cone.seed));
    auto r = degenerate_identity_check(p, e.spec);
    EXPECT_EQ(r.fixed_generator, 2) << name;
    EXPECT_TRUE(r.matches) << name;
  }
}

TEST(Snub, FixedByFirstGeneratorGivesDualOrCollapses) {
  const auto& cube = lookup("{4,3}");
  auto p = build_snub(cube, degenerate_point(cube.generators, 1, cube.cone.seed));
  auto r = degenerate_identity_check(p, cube.spec);
  EXPECT_TRUE(r.matches);
  EXPECT_EQ(r.f0, 6u);  // octahedron

  for (const auto& e : catalog()) {
    if (!e.spec.is_petrie_dual) continue;
    try {
      degenerate_point(e.generators, 1, e.cone.seed);
      ADD_FAILURE() << e.spec.name;
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::DegenerateCollapse) << e.spec.name;
    }
  }
}

TEST(Snub, CenterPointRejected) {
  const auto& e = lookup("{3,3}");
  try {
    build_snub(e, {0, 0, 0});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::CenterPoint);
  }
}
