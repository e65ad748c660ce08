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

// Geometric graphs on circle centers: avoiding pairs, the edge bound for
// avoiding-free graphs, the touching-quadrilateral structure of avoiding
// lens pairs, and the charging pipeline that removes them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lenskit/geometry.hpp"

namespace lenskit {

struct Segment {
  Point a;
  Point b;
};

enum class EdgeColor { Red, Blue };

std::string_view to_string(EdgeColor c);

struct GeoEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<EdgeColor> color;

  friend bool operator==(const GeoEdge&, const GeoEdge&) = default;
};

struct GeoGraph {
  std::vector<Point> vertices;
  std::vector<GeoEdge> edges;

  Segment segment(std::size_t edge) const {
    return {vertices[edges[edge].i], vertices[edges[edge].j]};
  }
  std::size_t count(EdgeColor c) const;
};

// Red edges join centers of lens-creating circles, blue edges centers of
// touching circles.
using CentersGraph = GeoGraph;

// Opposite edges of a convex quadrilateral: each segment lies strictly on one
// side of the other's supporting line. Shared endpoints and collinear
// configurations are never avoiding.
bool is_avoiding(const Segment& e, const Segment& f);

// Indices into GeoGraph::edges, first < second.
struct EdgePair {
  std::size_t first = 0;
  std::size_t second = 0;

  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

// All avoiding edge pairs, sorted. Dispatches to the parallel kernel.
std::vector<EdgePair> find_avoiding_pairs(const GeoGraph& g);
std::vector<EdgePair> find_avoiding_pairs_serial(const GeoGraph& g);
std::vector<EdgePair> find_avoiding_pairs_parallel(const GeoGraph& g, int threads);

enum class KlvStatus { Pass, NotApplicable };

struct KlvVerdict {
  KlvStatus status = KlvStatus::Pass;
  std::size_t edges = 0;
  std::size_t bound = 0;
};

// An avoiding-free graph must have at most 2|V| - 2 edges; a violation throws
// Falsification. Graphs with avoiding pairs are NotApplicable.
KlvVerdict klv_check(const GeoGraph& g);

// Vertex order A1 A2 A3 A4 of the convex quadrilateral spanned by an avoiding
// pair, clockwise, with the first edge equal to A1A2.
std::array<std::size_t, 4> clockwise_quadrilateral(const GeoGraph& g, EdgePair pair);

struct QuadCertificate {
  EdgePair pair;
  std::array<std::size_t, 4> quad{};  // A1..A4, clockwise
  Point touching_point;               // common point M of all four circles
};

struct MainTheoremReport {
  std::size_t avoiding_pairs = 0;
  std::vector<QuadCertificate> certificates;
};

// Every avoiding pair must consist of two red edges whose four circles pass
// through one point M where C1, C3 and C2, C4 touch externally. Anything else
// throws Falsification.
MainTheoremReport verify_main_theorem(const Family& f, const CentersGraph& g);

struct Charge {
  EdgePair pair;          // indices into the original graph
  GeoEdge removed;        // the lexicographically larger red edge
  IndexPair blue_edge;    // diagonal A1A3 of the clockwise quadrilateral
  bool conflict = false;  // blue edge was already charged
};

struct Resolution {
  GeoGraph graph;
  std::vector<Charge> charges;
};

// Removes one red edge per avoiding pair and charges the pair to the blue
// diagonal A1A3. Throws Falsification on a residual avoiding pair, a missing
// blue diagonal, a double charge, or a graph with fewer edges than the input
// has red edges.
Resolution resolve_avoiding_pairs(const CentersGraph& g);

bool is_bipartite(const GeoGraph& g);

// Straight-line plane embedding: no crossings, no overlaps, no contact other
// than shared endpoints.
bool is_plane_embedding(const GeoGraph& g);

// Closed segments share a point.
bool segments_intersect(const Segment& s, const Segment& t);

// Moves each point by less than (minimum pairwise distance) / 2^16 until no
// three are collinear. Points already in general position are returned as is.
// Throws InvalidInput on duplicate points and Error when the budget runs out.
std::vector<Point> perturb_general_position(std::span<const Point> points, std::uint64_t seed,
                                            std::size_t budget = 64);

}  // namespace lenskit
