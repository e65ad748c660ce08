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

// Constructors of pairwise intersecting families and the annealing search for
// lens-extremal ones.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lenskit/census.hpp"
#include "lenskit/geometry.hpp"

namespace lenskit {

struct GenConfig {
  std::size_t n = 8;
  std::uint64_t seed = 1;
  Rational radius_min = 1;
  Rational radius_max = 3;
  // Centers are drawn from the square [-region, region]^2.
  Rational region = 1;
  // Coordinates and radii live on the grid 1/denominator.
  long denominator = 1000;
  // Circles placed exactly tangent to an earlier one.
  std::size_t external_tangencies = 0;
  std::size_t internal_tangencies = 0;
  std::size_t attempts_per_circle = 20000;
};

// Sequential rejection sampling; every pair not injected as a tangency crosses
// at two points. Throws Error when a circle cannot be placed.
Family gen_random(const GenConfig& cfg);

// Unit circles with centers in the disc of radius 9/10 about the origin.
Family gen_unit(std::size_t n, std::uint64_t seed);

// Circles through (0, 1) and (0, -1) centered at (a, 0). Without abscissas the
// centers are -(n-1), -(n-3), ..., n-1. Throws InvalidInput on n < 2 or
// repeated abscissas.
Family gen_pencil(std::size_t n, const std::vector<Rational>& abscissas = {});

// C1 = ((0, a), a), C2 = ((c, 0), c), C3 = ((0, -b), b), C4 = ((-d, 0), d): C1
// and C3 touch at the origin, as do C2 and C4.
Family gen_touching_quad(const Rational& a = 1, const Rational& b = 1, const Rational& c = 2,
                         const Rational& d = 2);

// A family with exactly 2n - 2 lenses. Throws InvalidInput for n < 4.
Family gen_tight(std::size_t n);

struct SearchSchedule {
  double initial_temperature = 1.0;
  double cooling = 0.999;
  std::size_t restart_every = 20000;
  // Move size is max(temperature, min_step) times the circle radius.
  double min_step = 0.3;
  // Chance that a move replaces the whole family by an inverted copy.
  double inversion_probability = 0.2;
  bool stop_at_target = true;
};

struct TraceRecord {
  std::size_t iteration = 0;
  double temperature = 0.0;
  std::size_t lens_count = 0;
  bool accepted = false;
};

struct SearchState {
  std::vector<double> params;  // cx, cy, r per circle
  Family family;               // current, always valid
  std::size_t lens_count = 0;
  double temperature = 0.0;
  std::size_t iteration = 0;
  std::mt19937_64 rng;
};

struct SearchResult {
  Family best;
  DigonCensus census;
  std::vector<TraceRecord> trace;
  std::size_t iterations = 0;
};

// Deterministic in (n, seed, iters, schedule). Throws InvalidInput for n < 2
// and Falsification if a candidate ever exceeds 2n - 2 lenses.
SearchResult extremal_search(std::size_t n, std::uint64_t seed, std::size_t iters,
                             const SearchSchedule& schedule = {});

// The starting family of extremal_search.
Family search_initial_family(std::size_t n, std::uint64_t seed);

}  // namespace lenskit
