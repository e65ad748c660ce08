// Copyright 2026 The lenskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "lenskit/census.hpp"
#include "lenskit/errors.hpp"
#include "lenskit/generators.hpp"
#include "lenskit/geometry.hpp"
#include "oracles.hpp"

namespace lenskit {
namespace {

Circle circ(long x, long y, long r) { return Circle::with_radius({x, y}, r); }

bool on_circle(const AlgebraicPoint& p, const Circle& c) { return qn_sign(power(p, c)) == 0; }

TEST(ClassifyPair, Examples) {
  EXPECT_EQ(classify_pair(circ(0, 0, 2), circ(4, 0, 2)), PairRelation::ExternallyTangent);
  EXPECT_EQ(classify_pair(circ(0, 0, 2), circ(3, 0, 2)), PairRelation::TwoPoints);
  EXPECT_EQ(classify_pair(circ(0, 0, 3), circ(1, 0, 1)), PairRelation::Contained);
  EXPECT_EQ(classify_pair(circ(0, 0, 3), circ(2, 0, 1)), PairRelation::InternallyTangent);
  EXPECT_EQ(classify_pair(circ(0, 0, 1), circ(5, 0, 1)), PairRelation::DisjointOutside);
  EXPECT_EQ(classify_pair(circ(1, 1, 1), circ(1, 1, 1)), PairRelation::Identical);
}

TEST(ClassifyPair, IsSymmetric) {
  for (const Family& f : testing::corpus(40)) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (i != j) ASSERT_EQ(classify_pair(f[i], f[j]), classify_pair(f[j], f[i]));
      }
    }
  }
}

TEST(IntersectionPoints, SymmetricPair) {
  const auto pts = intersection_points(circ(1, 0, 2), circ(-1, 0, 2));
  ASSERT_EQ(pts.size(), 2u);
  for (const AlgebraicPoint& p : pts) {
    EXPECT_EQ(qn_sign(p.x().a() == 0 ? QuadraticNumber(0) : p.x()), 0);
    EXPECT_EQ(qn_compare(p.y() * p.y(), QuadraticNumber(3)), std::strong_ordering::equal);
  }
  EXPECT_EQ(qn_sign(pts[0].y()), -qn_sign(pts[1].y()));
}

TEST(IntersectionPoints, OffsetPair) {
  const Circle a = circ(0, 0, 2), b = circ(3, 0, 2);
  const auto pts = intersection_points(a, b);
  ASSERT_EQ(pts.size(), 2u);
  for (const AlgebraicPoint& p : pts) {
    EXPECT_EQ(p.x().to_rational(), Rational(3, 2));
    EXPECT_EQ(qn_compare(p.y() * p.y(), QuadraticNumber(Rational(7, 4))),
              std::strong_ordering::equal);
    EXPECT_TRUE(on_circle(p, a));
    EXPECT_TRUE(on_circle(p, b));
  }
  // Plus lies left of the directed line from the first center to the second.
  EXPECT_EQ(pts[0].branch(), Branch::Plus);
  EXPECT_GT(qn_sign(pts[0].y()), 0);
}

TEST(IntersectionPoints, TangentPairGivesRationalPoint) {
  const auto pts = intersection_points(circ(0, 0, 2), circ(4, 0, 2));
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].rational_point(), (Point{2, 0}));
  const auto inner = intersection_points(circ(0, 0, 3), circ(2, 0, 1));
  ASSERT_EQ(inner.size(), 1u);
  EXPECT_EQ(inner[0].rational_point(), (Point{3, 0}));
}

TEST(IntersectionPoints, IdenticalCirclesRejected) {
  EXPECT_THROW(intersection_points(circ(0, 0, 1), circ(0, 0, 1)), InvalidInput);
  EXPECT_TRUE(intersection_points(circ(0, 0, 1), circ(5, 0, 1)).empty());
}

TEST(IntersectionPoints, ResidualIsExactlyZero) {
  for (const Family& f : testing::corpus(60)) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        for (const AlgebraicPoint& p : intersection_points(f[i], f[j], i, j)) {
          ASSERT_TRUE(on_circle(p, f[i]));
          ASSERT_TRUE(on_circle(p, f[j]));
        }
      }
    }
  }
}

TEST(SideOfCircle, Examples) {
  const auto sym = intersection_points(circ(1, 0, 2), circ(-1, 0, 2));
  EXPECT_EQ(side_of_circle(sym[0], circ(0, 0, 2)), Side::Inside);
  EXPECT_EQ(side_of_circle(Point{2, 0}, circ(0, 0, 2)), Side::On);
  const auto off = intersection_points(circ(0, 0, 2), circ(3, 0, 2));
  EXPECT_EQ(side_of_circle(off[0], circ(0, 0, 1)), Side::Outside);
  EXPECT_EQ(side_of_circle(off[0], circ(0, 0, 2)), Side::On);
}

TEST(ValidateFamily, AcceptsCrossingAndTangentPairs) {
  EXPECT_TRUE(validate_family({circ(0, 0, 2), circ(3, 0, 2)}));
  EXPECT_TRUE(validate_family({circ(0, 0, 2), circ(4, 0, 2)}));
  EXPECT_TRUE(validate_family({circ(0, 0, 3), circ(2, 0, 1)}));
}

TEST(ValidateFamily, ReportsViolations) {
  const ValidationResult contained = validate_family({circ(0, 0, 3), circ(1, 0, 1), circ(2, 0, 2)});
  ASSERT_FALSE(contained);
  ASSERT_EQ(contained.violations.size(), 1u);
  EXPECT_EQ(contained.violations[0].i, 0u);
  EXPECT_EQ(contained.violations[0].j, 1u);
  EXPECT_EQ(contained.violations[0].relation, PairRelation::Contained);

  const ValidationResult identical = validate_family({circ(0, 0, 1), circ(0, 0, 1)});
  ASSERT_FALSE(identical);
  EXPECT_EQ(identical.violations[0].relation, PairRelation::Identical);
  EXPECT_THROW(make_family({circ(0, 0, 1), circ(9, 0, 1)}), InvalidInput);
}

TEST(ReduceInternalTangencies, RemovesOuterCircle) {
  const Family f = make_family({circ(0, 0, 3), circ(2, 0, 1), circ(1, 2, 2)});
  const Reduction r = reduce_internal_tangencies(f);
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(r.family.size(), 2u);
}

TEST(ReduceInternalTangencies, IdentityWithoutInternalTangency) {
  const Family f = make_family({circ(0, 0, 2), circ(3, 0, 2), circ(1, 2, 2)});
  const Reduction r = reduce_internal_tangencies(f);
  EXPECT_EQ(r.family, f);
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ReduceInternalTangencies, NestedChain) {
  // Radii 4, 3, 2 all tangent internally at (4, 0); a crossing circle keeps
  // the family valid.
  const Family f =
      make_family({circ(0, 0, 4), circ(1, 0, 3), circ(2, 0, 2), circ(3, 1, 2)});
  const Reduction r = reduce_internal_tangencies(f);
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{2, 3}));
  for (std::size_t i = 0; i < r.family.size(); ++i) {
    for (std::size_t j = i + 1; j < r.family.size(); ++j) {
      EXPECT_NE(classify_pair(r.family[i], r.family[j]), PairRelation::InternallyTangent);
    }
  }
}

TEST(ReduceInternalTangencies, PreservesLensesOfSurvivors) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenConfig cfg;
    cfg.n = 6 + seed % 5;
    cfg.seed = seed;
    cfg.internal_tangencies = 1 + seed % 2;
    const Family f = gen_random(cfg);
    const Reduction r = reduce_internal_tangencies(f);
    const CensusEngine before(f), after(r.family);
    for (std::size_t a = 0; a < r.kept.size(); ++a) {
      for (std::size_t b = a + 1; b < r.kept.size(); ++b) {
        ASSERT_EQ(before.is_lens(r.kept[a], r.kept[b]), after.is_lens(a, b)) << seed;
      }
    }
  }
}

TEST(InvertFamily, Example) {
  const Inversion inv = invert_family(make_family({circ(3, 0, 1)}), Point{0, 0}, 1);
  EXPECT_EQ(inv.family[0].center(), (Point{Rational(3, 8), 0}));
  EXPECT_EQ(inv.family[0].radius(), Rational(1, 8));
  EXPECT_TRUE(inv.invariance_contract);
}

TEST(InvertFamily, RejectsDegenerateArguments) {
  const Family f = make_family({circ(3, 0, 1)});
  EXPECT_THROW(invert_family(f, Point{0, 0}, 0), InvalidInput);
  EXPECT_THROW(invert_family(f, Point{2, 0}, 1), InvalidInput);
}

TEST(InvertFamily, FlagsCenterInsideADisc) {
  const Inversion inv = invert_family(make_family({circ(0, 0, 2), circ(3, 0, 2)}), Point{0, 0}, 1);
  EXPECT_FALSE(inv.invariance_contract);
}

TEST(InvertFamily, IsAnInvolution) {
  for (const Family& f : testing::corpus(30)) {
    const Point p{-100, Rational(37, 3)};
    const Rational k(5, 2);
    const Inversion once = invert_family(f, p, k);
    EXPECT_EQ(invert_family(once.family, p, k).family, f);
  }
}

TEST(InflateUntilIncidence, SymmetricExample) {
  const Family f = make_family({circ(0, 0, 1), circ(1, 0, 2), circ(-1, 0, 2)});
  const Inflation inf = inflate_until_incidence(f, 0);
  EXPECT_EQ(inf.radius_sq.to_rational(), Rational(3));
  ASSERT_TRUE(inf.radius.has_value());
  EXPECT_EQ(*inf.radius, qn_sqrt(3));
  EXPECT_FALSE(inf.rational_radius.has_value());
  const Circle c = inf.circle(f[0], Rational(1, 1000));
  EXPECT_EQ(c.radius_sq(), Rational(3));
}

TEST(InflateUntilIncidence, AlreadyThroughAPoint) {
  // Circles 1 and 2 cross at (0, +-sqrt(3)); circle 0 passes through them.
  const Family f = make_family({Circle({0, 0}, 3), circ(1, 0, 2), circ(-1, 0, 2)});
  const Inflation inf = inflate_until_incidence(f, 0);
  EXPECT_EQ(inf.radius_sq.to_rational(), Rational(3));
}

TEST(InflateUntilIncidence, Preconditions) {
  EXPECT_THROW(inflate_until_incidence(make_family({circ(0, 0, 2), circ(3, 0, 2)}), 0),
               InvalidInput);
  const Family inside = make_family({circ(0, 0, 2), circ(1, 0, 2), circ(-1, 0, 2)});
  EXPECT_THROW(inflate_until_incidence(inside, 0), InvalidInput);
}

TEST(InflateUntilIncidence, MatchesExhaustiveScan) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenConfig cfg;
    cfg.n = 4;
    cfg.seed = seed;
    cfg.region = 3;
    cfg.radius_max = 5;
    const Family f = gen_random(cfg);
    for (std::size_t i = 0; i < 4; ++i) {
      std::optional<Inflation> inf;
      try {
        inf = inflate_until_incidence(f, i);
      } catch (const InvalidInput&) {
        continue;
      }
      ++checked;
      const double cx = f[i].center().x.get_d(), cy = f[i].center().y.get_d();
      std::optional<double> best;
      for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = j + 1; k < 4; ++k) {
          if (j == i || k == i) continue;
          for (const AlgebraicPoint& p : intersection_points(f[j], f[k])) {
            const auto [x, y] = p.to_double();
            const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
            if (!best || d2 < *best) best = d2;
          }
        }
      }
      EXPECT_NEAR(inf->radius_sq.to_double(), *best, 1e-9 * *best);
      // The inflated family stays pairwise intersecting.
      std::vector<Circle> grown(f.circles().begin(), f.circles().end());
      grown[i] = inf->circle(f[i], Rational(1, 1 << 20));
      EXPECT_TRUE(validate_family(grown)) << seed;
    }
  }
  EXPECT_GT(checked, 5);
}

TEST(CollinearTriple, Examples) {
  const std::vector<Point> line{{0, 0}, {1, 1}, {2, 2}};
  EXPECT_EQ(collinear_triple_exists(line), (std::array<std::size_t, 3>{0, 1, 2}));
  const std::vector<Point> tri{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_FALSE(collinear_triple_exists(tri).has_value());
}

}  // namespace
}  // namespace lenskit
