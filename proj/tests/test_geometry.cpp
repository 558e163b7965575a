#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "skelsnub/geometry.hpp"

using namespace skelsnub;

namespace {

Isometry rotation_z(double angle) {
  Isometry g;
  g.linear = {{{std::cos(angle), -std::sin(angle), 0}, {std::sin(angle), std::cos(angle), 0}, {0, 0, 1}}};
  return g;
}

Isometry reflection_z(double offset = 0) {
  Isometry g;
  g.linear = {{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
  g.translation = {0, 0, 2 * offset};
  return g;
}

}  // namespace

TEST(Geometry, ComposeAppliesRightFactorFirst) {
  Isometry r = rotation_z(std::numbers::pi / 2);
  Isometry t;
  t.translation = {1, 0, 0};
  Vector3 p{1, 2, 3};
  Vector3 direct = apply(r, apply(t, p));
  EXPECT_TRUE(approx_equal(apply(compose(r, t), p), direct, 1e-12));
  EXPECT_FALSE(approx_equal(apply(compose(t, r), p), direct, 1e-12));
}

TEST(Geometry, InverseUndoes) {
  Isometry g = compose(rotation_z(0.7), reflection_z(0.3));
  EXPECT_TRUE(approx_equal(compose(g, inverse(g)), Isometry::identity(), 1e-12));
  EXPECT_TRUE(is_orthogonal(g));
  EXPECT_LT(determinant(g), 0);
}

TEST(Geometry, IsoOrder) {
  EXPECT_EQ(iso_order(Isometry::identity()), 1);
  EXPECT_EQ(iso_order(rotation_z(2 * std::numbers::pi / 5)), 5);
  EXPECT_EQ(iso_order(rotation_z(4 * std::numbers::pi / 5)), 5);
  EXPECT_EQ(iso_order(reflection_z()), 2);
  Isometry t;
  t.translation = {0.5, 0, 0};
  EXPECT_FALSE(iso_order(t).has_value());
  EXPECT_FALSE(iso_order(rotation_z(1.0)).has_value());
}

TEST(Geometry, FixedSetKinds) {
  EXPECT_EQ(classify_fixed_set(Isometry::identity()).kind, FixedSet::Kind::All);

  auto plane = classify_fixed_set(reflection_z(0.25));
  EXPECT_EQ(plane.kind, FixedSet::Kind::Plane);
  EXPECT_TRUE(plane.orientation_reversing);
  EXPECT_NEAR(plane.anchor.z, 0.25, 1e-12);

  auto line = classify_fixed_set(rotation_z(1.0));
  EXPECT_EQ(line.kind, FixedSet::Kind::Line);
  ASSERT_EQ(line.directions.size(), 1u);
  EXPECT_NEAR(std::abs(line.directions[0].z), 1.0, 1e-12);

  Isometry rotoreflection = compose(rotation_z(std::numbers::pi / 2), reflection_z());
  EXPECT_EQ(classify_fixed_set(rotoreflection).kind, FixedSet::Kind::Point);

  Isometry t;
  t.translation = {1, 0, 0};
  EXPECT_EQ(classify_fixed_set(t).kind, FixedSet::Kind::Empty);
  Isometry glide = compose(t, reflection_z());
  EXPECT_EQ(classify_fixed_set(glide).kind, FixedSet::Kind::Empty);
}

TEST(Geometry, ProjectOntoFixedSet) {
  auto line = classify_fixed_set(rotation_z(1.0));
  Vector3 p = project_onto(line, {3, -2, 5});
  EXPECT_TRUE(approx_equal(p, {0, 0, 5}, 1e-12));
  auto plane = classify_fixed_set(reflection_z(1.0));
  EXPECT_TRUE(approx_equal(project_onto(plane, {3, -2, 5}), {3, -2, 1}, 1e-12));
}

TEST(Geometry, CanonicalKeyQuantizes) {
  EXPECT_EQ(canonical_key({1e-6 * 3.5, 0, 0}), canonical_key({1e-6 * 3.7, 0, 0}));
  EXPECT_FALSE(canonical_key({1e-6 * 3.5, 0, 0}) == canonical_key({1e-6 * 4.5, 0, 0}));
}

TEST(Geometry, PointIndexMatchesAcrossCellBoundary) {
  PointIndex idx(1e-9);
  const double edge = 5e-6;  // a grid boundary
  std::size_t a = idx.insert({edge - 1e-10, 0.25, -0.5});
  std::size_t b = idx.insert({edge + 1e-10, 0.25, -0.5});
  EXPECT_EQ(a, b);
  std::size_t c = idx.insert({edge + 1e-8, 0.25, -0.5});
  EXPECT_NE(a, c);
  EXPECT_EQ(idx.size(), 2u);
}

TEST(Geometry, PointToleranceIsAdjustable) {
  const double saved = point_tolerance();
  set_point_tolerance(1e-3);
  EXPECT_TRUE(approx_equal(Vector3{0, 0, 0}, Vector3{5e-4, 0, 0}));
  set_point_tolerance(saved);
  EXPECT_FALSE(approx_equal(Vector3{0, 0, 0}, Vector3{5e-4, 0, 0}));
}
