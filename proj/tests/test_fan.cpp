#include <gtest/gtest.h>

#include "fanlat/corpus.hpp"
#include "fanlat/errors.hpp"
#include "fanlat/fan.hpp"
#include "fanlat/polyhedral.hpp"
#include "test_support.hpp"

using namespace fanlat;
using fanlat::testing::rows;
using fanlat::testing::vec;

namespace {

Fan p2() { return catalog_entry("p2").fan; }
Fan p2xp1() { return catalog_entry("p2xp1").fan; }

std::size_t count_dim(const Fan& f, std::size_t dim) {
  std::size_t n = 0;
  for (const auto& c : f.cones()) n += c.dim == dim;
  return n;
}

}  // namespace

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive(vec({2, 4})), vec({1, 2}));
  EXPECT_EQ(primitive(vec({-3, 0, 6})), vec({-1, 0, 2}));
  EXPECT_EQ(primitive(vec({0, 0, -5})), vec({0, 0, -1}));
  EXPECT_THROW(primitive(vec({0, 0})), FanError);
}

TEST(BuildFan, ProjectivePlane) {
  const Fan f = build_fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(f.ray_count(), 3u);
  EXPECT_EQ(f.maximal_cones().size(), 3u);
  EXPECT_EQ(count_dim(f, 0), 1u);
  EXPECT_EQ(f.cones().size(), 7u);
  EXPECT_TRUE(f.zero_cone().rays.empty());
  EXPECT_EQ(f.zero_cone().codim, 2u);
  EXPECT_TRUE(f.simplicial());
  EXPECT_EQ(f.validation(), Validation::full);
}

TEST(BuildFan, ProductFan) {
  const Fan f = p2xp1();
  EXPECT_EQ(f.ray_count(), 5u);
  EXPECT_EQ(f.maximal_cones().size(), 6u);
  EXPECT_EQ(count_dim(f, 2), 9u);
  EXPECT_EQ(f.validation(), Validation::full);
}

TEST(BuildFan, NormalizesRays) {
  const Fan f = build_fan(2, {vec({2, 4}), vec({1, 0})}, {{0, 1}});
  EXPECT_EQ(f.ray(0), vec({1, 2}));
}

TEST(BuildFan, RejectsBadInput) {
  EXPECT_THROW(build_fan(2, {vec({1, 0}), vec({2, 0})}, {{0}, {1}}), FanError);          // duplicate after normalizing
  EXPECT_THROW(build_fan(2, {vec({0, 0})}, {{0}}), FanError);                            // zero ray
  EXPECT_THROW(build_fan(2, {vec({1, 0}), vec({-1, 0})}, {{0, 1}}), FanError);           // dependent simplicial cone
  EXPECT_THROW(build_fan(2, {vec({1, 0, 0})}, {{0}}), DimensionError);                   // wrong length
  EXPECT_THROW(build_fan(2, {vec({1, 0})}, {{0, 3}}), FanError);                         // index out of range
  EXPECT_THROW(build_fan(2, {vec({1, 0}), vec({0, 1})}, {{0}}), FanError);               // ray 1 unused
  EXPECT_THROW(build_fan(0, {}, {}), FanError);
}

TEST(BuildFan, RejectsOverlappingCones) {
  // <(1,0),(0,1)> and <(1,1),(1,-1)> overlap in their interiors.
  EXPECT_THROW(build_fan(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({1, -1})}, {{0, 1}, {2, 3}}), FanError);
  // Same cone described twice through different rays in rank 3.
  EXPECT_THROW(build_fan(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 1, 1})},
                         {{0, 1, 2}, {0, 1, 3}}),
               FanError);
}

TEST(BuildFan, AcceptsConesMeetingInFaces) {
  const Fan f = build_fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, 0})}, {{0, 1}, {1, 2}});
  EXPECT_EQ(f.maximal_cones().size(), 2u);
}

TEST(BuildFan, NonSimplicialNeedsTrust) {
  const std::vector<IntVector> rays{vec({1, 0, 1}), vec({0, 1, 1}), vec({-1, 0, 1}), vec({0, -1, 1})};
  std::vector<RaySet> cones{{}, {0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 1, 2, 3}};
  FanOptions options;
  options.cones = cones;
  EXPECT_THROW(build_fan(3, rays, {{0, 1, 2, 3}}, options), FanError);
  options.trust = true;
  const Fan f = build_fan(3, rays, {{0, 1, 2, 3}}, options);
  EXPECT_FALSE(f.simplicial());
  EXPECT_EQ(f.validation(), Validation::trusted);
  EXPECT_THROW(is_complete(f), FanError);  // completeness was not asserted
}

TEST(BuildFan, HighRankIsPartiallyValidated) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < 5; ++i) {
    IntVector e(5);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(vec({-1, -1, -1, -1, -1}));
  std::vector<RaySet> maximal;
  for (std::size_t skip = 0; skip < 6; ++skip) {
    RaySet c;
    for (std::size_t i = 0; i < 6; ++i)
      if (i != skip) c.push_back(i);
    maximal.push_back(c);
  }
  const Fan f = build_fan(5, rays, maximal);
  EXPECT_EQ(f.validation(), Validation::partial);
  EXPECT_TRUE(is_complete(f));
}

TEST(Star, ProjectivePlaneRay) {
  const Fan f = p2();
  const Star s = star(f, f.cone_of({0}));
  EXPECT_EQ(s.rays, (RaySet{0, 1, 2}));
  EXPECT_EQ(s.cones.size(), 3u);  // the ray and two 2-cones
}

TEST(Star, ProductFanRay) {
  const Fan f = p2xp1();
  EXPECT_EQ(star(f, f.cone_of({0})).rays, (RaySet{0, 1, 2, 3, 4}));
  EXPECT_EQ(star(f, f.cone_of({0, 3})).rays, (RaySet{0, 1, 2, 3}));
}

TEST(Star, MaximalConeIsItsOwnStar) {
  const Fan f = p2();
  const Cone& top = f.cone_of({0, 1});
  const Star s = star(f, top);
  EXPECT_EQ(s.rays, (RaySet{0, 1}));
  ASSERT_EQ(s.cones.size(), 1u);
  EXPECT_EQ(f.cone(s.cones[0]), top);
}

TEST(Star, UnknownCone) {
  const Fan f = p2();
  EXPECT_THROW(f.cone_of({0, 2, 1}), FanError);
  EXPECT_THROW(star(f, Cone{{0, 1, 2}, 3, 0}), FanError);
}

TEST(Completeness, Examples) {
  EXPECT_TRUE(is_complete(p2()));
  EXPECT_TRUE(is_complete(p2xp1()));
  EXPECT_FALSE(is_complete(build_fan(2, {vec({1, 0}), vec({0, 1})}, {{0, 1}})));
  // Three of the four quadrants.
  EXPECT_FALSE(is_complete(build_fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})},
                                     {{0, 1}, {1, 2}, {2, 3}})));
  // Lower-dimensional maximal cone.
  EXPECT_FALSE(is_complete(build_fan(2, {vec({1, 0})}, {{0}})));
}

TEST(Localize, ZeroConeGivesWholeFan) {
  const Fan f = p2();
  const QuotientFan q = localize(f, f.cone_of({}));
  EXPECT_EQ(q.quotient_rank, 2u);
  EXPECT_EQ(q.ray_origin, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(q.rays, f.rays());
}

TEST(Localize, ProjectivePlaneAtRay) {
  const Fan f = p2();
  const QuotientFan q = localize(f, f.cone_of({0}));
  EXPECT_EQ(q.quotient_rank, 1u);
  ASSERT_EQ(q.rays.size(), 2u);
  EXPECT_EQ(q.ray_origin, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(q.rays[0].size(), 1u);
  EXPECT_EQ(abs(q.rays[0][0]), 1);
  EXPECT_EQ(q.rays[1][0], -q.rays[0][0]);
  EXPECT_TRUE((q.projection * f.ray_matrix({0})).is_zero());
}

TEST(Localize, MaximalConeGivesRankZero) {
  const Fan f = p2xp1();
  const QuotientFan q = localize(f, f.cone_of({0, 1, 3}));
  EXPECT_EQ(q.quotient_rank, 0u);
  EXPECT_TRUE(q.rays.empty());
}

TEST(Localize, ProductFanAtTwoCone) {
  const Fan f = p2xp1();
  const QuotientFan q = localize(f, f.cone_of({0, 3}));
  EXPECT_EQ(q.quotient_rank, 1u);
  ASSERT_EQ(q.ray_origin, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(abs(q.rays[0][0]), 1);
  EXPECT_EQ(q.rays[1][0], -q.rays[0][0]);
}

TEST(Localize, ProjectionIsSurjectiveOntoQuotient) {
  const Fan f = p2xp1();
  for (const auto& c : f.cones()) {
    const QuotientFan q = localize(f, c);
    EXPECT_EQ(q.projection.rows(), f.rank() - c.dim);
    if (q.projection.rows() > 0) {
      const auto image = Sublattice::generated_by(q.projection.rows(), q.projection.transpose());
      EXPECT_EQ(sublattice_index(image), Integer(1));
    }
  }
}

TEST(ApplyUnimodular, IdentityAndShear) {
  const Fan f = p2();
  const Fan same = apply_unimodular(f, IntMatrix::identity(2));
  EXPECT_EQ(same.rays(), f.rays());
  EXPECT_EQ(same.cones(), f.cones());

  const IntMatrix u = rows({{1, 1}, {0, 1}}, 2);
  const Fan g = apply_unimodular(f, u);
  EXPECT_EQ(g.ray(0), vec({1, 0}));
  EXPECT_EQ(g.ray(1), vec({1, 1}));
  EXPECT_EQ(g.ray(2), vec({-2, -1}));
  EXPECT_EQ(g.cones(), f.cones());
  EXPECT_TRUE(is_complete(g));
}

TEST(ApplyUnimodular, RejectsNonUnimodular) {
  EXPECT_THROW(apply_unimodular(p2(), rows({{2, 0}, {0, 1}}, 2)), FanError);
  EXPECT_THROW(apply_unimodular(p2(), IntMatrix::identity(3)), DimensionError);
}

TEST(ConeContains, ClosedAndRelativeInterior) {
  const Fan f = p2();
  const Cone& c = f.cone_of({0, 1});
  EXPECT_TRUE(cone_contains(f, c, vec({1, 1})));
  EXPECT_TRUE(cone_contains(f, c, vec({1, 0})));
  EXPECT_FALSE(cone_contains(f, c, vec({-1, 1})));
  EXPECT_TRUE(cone_relative_interior_contains(f, c, vec({1, 2})));
  EXPECT_FALSE(cone_relative_interior_contains(f, c, vec({1, 0})));
  EXPECT_TRUE(cone_relative_interior_contains(f, f.cone_of({0}), vec({3, 0})));
}

TEST(Polyhedral, NonnegativeFeasibility) {
  const IntMatrix a = IntMatrix::from_columns({vec({1, 0}), vec({0, 1})}, 2);
  EXPECT_EQ(nonnegative_feasible(a, vec({2, 3}), 100), true);
  EXPECT_EQ(nonnegative_feasible(a, vec({-1, 3}), 100), false);
  const IntMatrix b = IntMatrix::from_columns({vec({1, 1}), vec({1, -1}), vec({1, 0})}, 2);
  EXPECT_EQ(nonnegative_feasible(b, vec({3, 0}), 100), true);
  EXPECT_EQ(nonnegative_feasible(b, vec({-1, 0}), 100), false);
  EXPECT_EQ(nonnegative_feasible(b, vec({1, 2}), 100), false);
}

TEST(Polyhedral, RationalSolve) {
  const IntMatrix a = IntMatrix::from_columns({vec({2, 0}), vec({0, 3})}, 2);
  auto x = rational_solve(a, vec({1, 1}));
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(1, 2));
  EXPECT_EQ((*x)[1], Rational(1, 3));
  const IntMatrix line = IntMatrix::from_columns({vec({1, 1})}, 2);
  EXPECT_FALSE(rational_solve(line, vec({1, 0})));
}
