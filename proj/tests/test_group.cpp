#include <gtest/gtest.h>

#include <map>
#include <set>

#include "skelsnub/catalog.hpp"
#include "skelsnub/group.hpp"

using namespace skelsnub;

TEST(Group, ClosureOrders) {
  const std::map<std::string, std::size_t> want = {
      {"{3,3}", 12},    {"{4,3}_3", 24},  {"{4,3}", 24},   {"{3,4}", 24},     {"{6,3}_4", 24},   {"{6,4}_3", 48},
      {"{3,5}", 60},    {"{5,3}", 60},    {"{10,5}_3", 120}, {"{10,3}_5", 120}, {"{5,5/2}", 60}, {"{5/2,5}", 60},
      {"{6,5/2}", 120}, {"{6,5}", 120},   {"{3,5/2}", 60},  {"{5/2,3}", 60},   {"{10/3,5/2}", 120}, {"{10/3,3}", 120}};
  for (const auto& [name, order] : want) EXPECT_EQ(FiniteGroup::close(lookup(name).generators).size(), order) << name;
}

TEST(Group, CayleyTableIsLatinAndAssociative) {
  auto g = FiniteGroup::close(lookup("{6,4}_3").generators);
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::size_t> row, col;
    for (std::size_t j = 0; j < n; ++j) {
      row.insert(g.product(i, j));
      col.insert(g.product(j, i));
    }
    EXPECT_EQ(row.size(), n);
    EXPECT_EQ(col.size(), n);
    EXPECT_EQ(g.product(i, g.inverse_of(i)), 0u);
  }
  for (std::size_t a = 0; a < n; a += 5)
    for (std::size_t b = 0; b < n; b += 3)
      for (std::size_t c = 0; c < n; c += 7)
        EXPECT_EQ(g.product(g.product(a, b), c), g.product(a, g.product(b, c)));
  EXPECT_TRUE(approx_equal(g.element(0), Isometry::identity()));
}

TEST(Group, GeneratorIndicesAndCyclicSubgroups) {
  auto g = FiniteGroup::close(lookup("{10,3}_5").generators);
  ASSERT_TRUE(g.s1() && g.s2() && g.s0());
  EXPECT_EQ(g.order_of(*g.s1()), 10u);
  EXPECT_EQ(g.order_of(*g.s2()), 3u);
  EXPECT_EQ(g.order_of(*g.s0()), 2u);
  EXPECT_EQ(g.product(*g.s1(), *g.s2()), *g.s0());
}

TEST(Group, OrbitStabilizer) {
  for (const auto& e : catalog()) {
    auto g = FiniteGroup::close(e.generators);
    for (Vector3 v : {e.cone.seed, Vector3{0.3, -0.2, 0.9}, apply(e.generators.s1, Vector3{0, 0, 0}) + e.cone.spanning[0]}) {
      EXPECT_EQ(orbit(g, v).size() * stabilizer(g, v).size(), g.size()) << e.spec.name;
    }
  }
}

TEST(Group, IpcAtSeedsOnly) {
  const auto& e = lookup("{4,3}");
  auto g = FiniteGroup::close(e.generators);
  EXPECT_TRUE(satisfies_ipc(g, e.cone.seed));
  EXPECT_FALSE(satisfies_ipc(g, {0, 0, 1}));
}

TEST(Group, TypeSets) {
  const auto& e = lookup("{4,3}_3");
  const auto& gens = e.generators;
  EXPECT_EQ(type_set(gens, e.cone.seed).str(), "{0,1,2}");
  FixedSet f0 = classify_fixed_set(gens.s0), f2 = classify_fixed_set(gens.s2);
  EXPECT_EQ(type_set(gens, project_onto(f0, e.cone.seed)).str(), "{1,2}");
  EXPECT_EQ(type_set(gens, project_onto(f2, e.cone.seed)).str(), "{1}");
  const auto& cube = lookup("{4,3}");
  Vector3 axis1 = project_onto(classify_fixed_set(cube.generators.s1), cube.cone.seed);
  EXPECT_EQ(type_set(cube.generators, axis1).str(), "{2}");
  try {
    type_set(gens, {0, 0, 0});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::CenterPoint);
  }
}

TEST(Group, ClosureCap) {
  try {
    FiniteGroup::close(lookup("{10,5}_3").generators, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupTooLarge);
  }
}

TEST(Group, FromElementsRejectsNonClosedSets) {
  const auto& g = lookup("{4,3}").generators;
  EXPECT_THROW(FiniteGroup::from_elements({g.s1}), Error);
  auto cyc = FiniteGroup::from_elements({g.s0});
  EXPECT_EQ(cyc.size(), 2u);
}
