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

// Floating-point arrangement of a family of circles: vertices, arcs as twin
// half-edges, and faces traced through the rotation system. Serves as an
// independent oracle for the exact census on generic inputs.

#include <cstddef>
#include <optional>
#include <vector>

#include "lenskit/census.hpp"
#include "lenskit/geometry.hpp"
#include "lenskit/io.hpp"

namespace lenskit {

struct ArrVertex {
  double x = 0.0;
  double y = 0.0;
  std::vector<std::size_t> circles;  // incident circles, ascending
  double merge_radius = 0.0;
};

// Arc of one circle between consecutive vertices. Counterclockwise half-edges
// have the disc on their left.
struct HalfEdge {
  std::size_t circle = 0;
  std::optional<std::size_t> source;  // empty for the loop of a vertexless circle
  std::optional<std::size_t> target;
  bool ccw = true;
  double theta0 = 0.0;  // start angle about the circle center
  double sweep = 0.0;   // signed angular length
  std::size_t twin = 0;
  std::size_t next = 0;
  std::size_t face = 0;
};

struct ArrFace {
  std::vector<std::size_t> boundary;  // half-edges of the single boundary cycle
  std::size_t edge_count = 0;
  bool bounded = false;
  double area = 0.0;  // signed, positive for bounded faces
  double px = 0.0;    // representative interior point
  double py = 0.0;
  std::vector<bool> inside;  // inside[k]: face lies in disc k
};

struct Arrangement {
  std::size_t n = 0;
  double scale = 1.0;  // working coordinates = (input - shift) * scale
  double shift_x = 0.0;
  double shift_y = 0.0;
  double eps = 0.0;
  std::vector<double> cx, cy, r;  // working circles
  std::vector<ArrVertex> vertices;
  std::vector<HalfEdge> half_edges;
  std::vector<ArrFace> faces;

  std::size_t edge_count() const { return half_edges.size() / 2; }
};

// Rescales the family so its bounding box has diameter 2 and merges vertices
// closer than eps. Throws DegenerateInput on tangent pairs, vertex clusters
// that eps cannot separate cleanly, or coincident arc directions.
Arrangement build_arrangement(const Family& f, double eps = 1e-9);

// Two-edge bounded faces: lenses lie in both supporting discs, lunes in one.
DigonCensus census_via_faces(const Arrangement& arr);

struct EulerVerdict {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  bool bypassed = false;  // n = 1
};

// V - E + F = 2, else InternalInconsistency carrying the JSON dump.
EulerVerdict euler_check(const Arrangement& arr);

Json arrangement_to_json(const Arrangement& arr);

}  // namespace lenskit
