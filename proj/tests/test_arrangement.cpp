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

#include <algorithm>
#include <fstream>
#include <numeric>

#include "lenskit/arrangement.hpp"
#include "lenskit/census.hpp"
#include "lenskit/errors.hpp"
#include "lenskit/generators.hpp"
#include "oracles.hpp"

namespace lenskit {
namespace {

Circle circ(long x, long y, long r) { return Circle::with_radius({x, y}, r); }

std::vector<std::size_t> edge_counts(const Arrangement& a) {
  std::vector<std::size_t> out;
  for (const ArrFace& f : a.faces) out.push_back(f.edge_count);
  std::sort(out.begin(), out.end());
  return out;
}

void expect_same_census(const DigonCensus& a, const DigonCensus& b) {
  EXPECT_EQ(a.n, b.n);
  EXPECT_EQ(a.lens_pairs, b.lens_pairs);
  EXPECT_EQ(a.lune_pairs, b.lune_pairs);
  EXPECT_EQ(a.tangent_pairs.size(), b.tangent_pairs.size());
}

TEST(BuildArrangement, TwoCircles) {
  const Arrangement a = build_arrangement(make_family({circ(0, 0, 2), circ(3, 0, 2)}));
  EXPECT_EQ(a.vertices.size(), 2u);
  EXPECT_EQ(a.edge_count(), 4u);
  EXPECT_EQ(a.faces.size(), 4u);
  EXPECT_EQ(edge_counts(a), (std::vector<std::size_t>{2, 2, 2, 2}));
  const DigonCensus c = census_via_faces(a);
  EXPECT_EQ(c.lens_count(), 1u);
  EXPECT_EQ(c.lune_pairs.size(), 2u);
}

TEST(BuildArrangement, SingleCircle) {
  const Arrangement a = build_arrangement(make_family({circ(0, 0, 1)}));
  EXPECT_EQ(a.vertices.size(), 0u);
  EXPECT_EQ(a.edge_count(), 1u);
  EXPECT_EQ(a.faces.size(), 2u);
  EXPECT_TRUE(euler_check(a).bypassed);
}

TEST(BuildArrangement, TwinsAndCycles) {
  for (const Family& f : testing::generic_corpus(20, 4000)) {
    const Arrangement a = build_arrangement(f);
    std::vector<int> seen(a.half_edges.size(), 0);
    for (std::size_t h = 0; h < a.half_edges.size(); ++h) {
      EXPECT_EQ(a.half_edges[a.half_edges[h].twin].twin, h);
      EXPECT_NE(a.half_edges[h].twin, h);
    }
    std::size_t total = 0, unbounded = 0;
    for (std::size_t fi = 0; fi < a.faces.size(); ++fi) {
      const ArrFace& face = a.faces[fi];
      total += face.edge_count;
      unbounded += !face.bounded;
      EXPECT_EQ(face.boundary.size(), face.edge_count);
      for (std::size_t t = 0; t < face.boundary.size(); ++t) {
        const std::size_t h = face.boundary[t];
        ++seen[h];
        EXPECT_EQ(a.half_edges[h].face, fi);
        EXPECT_EQ(a.half_edges[h].next, face.boundary[(t + 1) % face.boundary.size()]);
      }
    }
    // Next pointers partition the half-edges into face cycles.
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    EXPECT_EQ(total, 2 * a.edge_count());
    EXPECT_EQ(unbounded, 1u);
  }
}

TEST(EulerCheck, RandomFamilies) {
  GenConfig cfg;
  cfg.n = 8;
  cfg.seed = 3;
  EXPECT_FALSE(euler_check(build_arrangement(gen_random(cfg))).bypassed);
  cfg.n = 10;
  const EulerVerdict v = euler_check(build_arrangement(gen_random(cfg)));
  EXPECT_EQ(v.vertices + v.faces, v.edges + 2);
  const EulerVerdict two = euler_check(build_arrangement(make_family({circ(0, 0, 2), circ(3, 0, 2)})));
  EXPECT_EQ(two.vertices, 2u);
  EXPECT_EQ(two.edges, 4u);
  EXPECT_EQ(two.faces, 4u);
}

TEST(CensusViaFaces, MatchesExactCensus) {
  for (const Family& f : testing::generic_corpus(100, 1)) {
    const Arrangement a = build_arrangement(f);
    euler_check(a);
    expect_same_census(census_via_faces(a), digon_census(f));
  }
}

TEST(CensusViaFaces, Pencil) {
  const Family f = gen_pencil(3, {-2, 0, 2});
  const DigonCensus c = census_via_faces(build_arrangement(f));
  EXPECT_EQ(c.lens_pairs, (std::vector<IndexPair>{{0, 2}}));
  expect_same_census(c, digon_census(f));
}

TEST(CensusViaFaces, TightFamilies) {
  EXPECT_EQ(census_via_faces(build_arrangement(gen_tight(5))).lens_count(), 8u);
  for (std::size_t n = 4; n <= 8; ++n) {
    expect_same_census(census_via_faces(build_arrangement(gen_tight(n))),
                       digon_census(gen_tight(n)));
  }
}

TEST(BuildArrangement, RelabelingKeepsFaceStructure) {
  for (const Family& f : testing::generic_corpus(10, 200)) {
    std::vector<Circle> c(f.circles().begin(), f.circles().end());
    std::reverse(c.begin(), c.end());
    std::rotate(c.begin(), c.begin() + 1, c.end());
    EXPECT_EQ(edge_counts(build_arrangement(f)), edge_counts(build_arrangement(make_family(c))));
  }
}

TEST(BuildArrangement, TangencyIsDegenerate) {
  const Family f = make_family({circ(0, 0, 2), circ(4, 0, 2), circ(2, 1, 3)});
  EXPECT_THROW(build_arrangement(f), DegenerateInput);
}

TEST(ArrangementJson, GoldenTwoCircles) {
  const Arrangement a = build_arrangement(make_family({circ(0, 0, 2), circ(3, 0, 2)}));
  std::ifstream in(std::string(LENSKIT_TEST_DATA) + "/two_circles_arrangement.json");
  ASSERT_TRUE(in.good());
  const Json golden = Json::parse(in);
  EXPECT_EQ(arrangement_to_json(a).dump(1), golden.dump(1));
}

}  // namespace
}  // namespace lenskit
