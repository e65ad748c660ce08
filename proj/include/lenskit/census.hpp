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

#pragma once

// Exact lens / lune / tangency census of a pairwise intersecting family.
//
// A candidate digon is bounded by arcs of circles i and j between their two
// intersection points v1, v2. It is a face of the arrangement with two edges
// exactly when no third circle meets the closed region anywhere except at v1
// and v2. Because every circle meets every other one, a third circle can only
// reach the region by crossing or touching its boundary, so the test reduces
// to side-of-circle predicates on the pairwise intersection points; the only
// configuration left open is a third circle through both v1 and v2, decided
// by one exact sample on each of its two arcs.

#include <cstddef>
#include <vector>

#include "lenskit/geometry.hpp"
#include "lenskit/graphs.hpp"

namespace lenskit {

enum class DigonKind { Lens, Lune };

struct CensusOptions {
  // Ignore third circles that only touch a digon edge from outside the face.
  bool lenient_tangency_faces = false;
};

struct TangentPair {
  IndexPair pair;
  Point point;
  bool internal = false;

  friend bool operator==(const TangentPair&, const TangentPair&) = default;
};

struct DigonCensus {
  std::size_t n = 0;
  std::vector<IndexPair> lens_pairs;  // unordered, i < j, sorted
  std::vector<IndexPair> lune_pairs;  // ordered: D_i minus int D_j is a face
  std::vector<TangentPair> tangent_pairs;

  std::size_t lens_count() const { return lens_pairs.size(); }
  // Lune faces, one per ordered pair.
  std::size_t lune_count() const { return lune_pairs.size(); }
  // Unordered pairs admitting at least one lune.
  std::size_t lune_pair_count() const;

  friend bool operator==(const DigonCensus&, const DigonCensus&) = default;
};

// Precomputed pair relations and intersection points of one family, shared
// by all predicates. Immutable after construction and safe to query from
// several threads.
class CensusEngine {
 public:
  explicit CensusEngine(const Family& f, int threads = 1);

  const Family& family() const { return family_; }
  PairRelation relation(std::size_t i, std::size_t j) const { return pair(i, j).relation; }
  // Points of circle i meeting circle j.
  const std::vector<AlgebraicPoint>& points(std::size_t i, std::size_t j) const {
    return pair(i, j).points;
  }

  // Circle k meets the closed candidate region of (i, j) outside its two
  // vertices. For a lune the region is D_i minus int D_j.
  bool region_blocked(std::size_t k, std::size_t i, std::size_t j, DigonKind kind,
                      const CensusOptions& opts = {}) const;
  bool is_lens(std::size_t i, std::size_t j, const CensusOptions& opts = {}) const;
  bool is_lune(std::size_t i, std::size_t j, const CensusOptions& opts = {}) const;

  DigonCensus census_serial(const CensusOptions& opts = {}) const;
  DigonCensus census_parallel(int threads, const CensusOptions& opts = {}) const;

 private:
  struct CircleApprox {
    FloatInterval cx, cy, r2;
  };
  struct PointApprox {
    FloatInterval x, y;
  };
  struct PairData {
    PairRelation relation = PairRelation::Identical;
    std::vector<AlgebraicPoint> points;
    std::vector<PointApprox> approx;
  };

  const PairData& pair(std::size_t i, std::size_t j) const;
  Side side(const PairData& pd, std::size_t point, std::size_t circle) const;
  Side side(const AlgebraicPoint& p, std::size_t circle) const;
  bool disc_inside(std::size_t k, std::size_t m) const;
  bool digon(std::size_t i, std::size_t j, DigonKind kind, const CensusOptions& opts) const;
  void check_pair(std::size_t i, std::size_t j, DigonKind kind) const;

  Family family_;
  std::vector<CircleApprox> circles_;
  std::vector<PairData> pairs_;  // row-major n x n, both orders stored
};

bool region_blocked(const Family& f, std::size_t k, std::size_t i, std::size_t j, DigonKind kind,
                    const CensusOptions& opts = {});
bool is_lens(const Family& f, std::size_t i, std::size_t j, const CensusOptions& opts = {});
bool is_lune(const Family& f, std::size_t i, std::size_t j, const CensusOptions& opts = {});

// Exhaustive over pairs. Uses the parallel kernel with configured_threads().
DigonCensus digon_census(const Family& f, const CensusOptions& opts = {});
// Sequential reference; identical output.
DigonCensus digon_census_serial(const Family& f, const CensusOptions& opts = {});

CentersGraph centers_graph(const Family& f, const DigonCensus& census);

// One edge per unordered pair admitting at least one lune.
GeoGraph lune_graph(const Family& f, const DigonCensus& census);

struct BoundReport {
  std::size_t n = 0;
  std::size_t lens_count = 0;
  std::size_t lens_max = 0;  // 2n - 2
  bool lens_ok = true;
  std::size_t lune_count = 0;       // faces
  std::size_t lune_pair_count = 0;  // lune graph edges, the bounded quantity
  std::size_t lune_max = 0;         // 2n - 4, meaningful for n >= 3
  bool lune_ok = true;
  bool lune_vacuous = false;  // n < 3
  std::vector<IndexPair> lens_witness;  // filled on a lens violation
  std::vector<IndexPair> lune_witness;  // filled on a lune violation

  bool ok() const { return lens_ok && lune_ok; }
};

BoundReport check_bounds(const DigonCensus& census);

}  // namespace lenskit
