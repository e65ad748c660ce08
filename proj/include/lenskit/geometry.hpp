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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lenskit/kernel.hpp"

namespace lenskit {

struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

Rational squared_distance(const Point& p, const Point& q);

// Sign of the cross product (b - a) x (c - a): +1 counterclockwise, -1
// clockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

// A circle stored by its squared radius, so circles with irrational radii
// (pencil members, for example) are exact. Predicates never take a square root
// of the radius.
class Circle {
 public:
  Circle(Point center, Rational radius_sq);
  static Circle with_radius(Point center, const Rational& radius);

  const Point& center() const { return center_; }
  const Rational& radius_sq() const { return radius_sq_; }
  // The radius when it is rational.
  std::optional<Rational> radius() const { return rational_sqrt(radius_sq_); }
  double approx_radius() const;

  friend bool operator==(const Circle&, const Circle&) = default;

 private:
  Point center_;
  Rational radius_sq_;
};

enum class PairRelation {
  TwoPoints,
  ExternallyTangent,
  InternallyTangent,
  DisjointOutside,
  Contained,
  Identical,
};

std::string_view to_string(PairRelation r);
inline bool is_tangent(PairRelation r) {
  return r == PairRelation::ExternallyTangent || r == PairRelation::InternallyTangent;
}

// Exact, from the signs of d^2 - (r1 + r2)^2 and d^2 - (r1 - r2)^2.
PairRelation classify_pair(const Circle& c1, const Circle& c2);

enum class Branch { Plus, Minus };

// Intersection point of two circles: (x0 + dx*sqrt(c), y0 + dy*sqrt(c)). Both
// coordinates share the radicand c, so polynomial predicates in the point stay
// inside one quadratic extension.
class AlgebraicPoint {
 public:
  AlgebraicPoint(Point base, Point offset, Rational radicand, std::size_t i, std::size_t j,
                 Branch branch);

  QuadraticNumber x() const { return QuadraticNumber(base_.x, offset_.x, radicand_); }
  QuadraticNumber y() const { return QuadraticNumber(base_.y, offset_.y, radicand_); }
  const Point& base() const { return base_; }
  const Point& offset() const { return offset_; }
  const Rational& radicand() const { return radicand_; }

  bool is_rational() const { return sgn(radicand_) == 0; }
  std::optional<Point> rational_point() const;

  std::pair<std::size_t, std::size_t> parents() const { return {i_, j_}; }
  Branch branch() const { return branch_; }

  std::pair<FloatInterval, FloatInterval> approx() const;
  std::pair<double, double> to_double() const;

 private:
  Point base_;
  Point offset_;
  Rational radicand_;
  std::size_t i_ = 0;
  std::size_t j_ = 0;
  Branch branch_ = Branch::Plus;
};

// Value equality (coordinates may use different radicands).
bool same_point(const AlgebraicPoint& p, const AlgebraicPoint& q);

// Zero, one (tangency, rational coordinates), or two points sharing one
// radicand; the Plus branch lies to the left of the directed line c1 -> c2.
// i and j only label the provenance. Throws InvalidInput for identical circles.
std::vector<AlgebraicPoint> intersection_points(const Circle& c1, const Circle& c2,
                                                std::size_t i = 0, std::size_t j = 1);

enum class Side { Inside, On, Outside };

std::string_view to_string(Side s);

Side side_of_circle(const AlgebraicPoint& p, const Circle& c);
Side side_of_circle(const Point& p, const Circle& c);

// |p - center|^2 - radius^2 as an exact quadratic number.
QuadraticNumber power(const AlgebraicPoint& p, const Circle& c);

struct ValidationResult;
class Family;
ValidationResult validate_family(std::vector<Circle> circles);

// A validated list of pairwise intersecting circles (tangencies allowed).
class Family {
 public:
  Family() = default;

  std::span<const Circle> circles() const { return circles_; }
  std::size_t size() const { return circles_.size(); }
  const Circle& operator[](std::size_t i) const { return circles_[i]; }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  friend ValidationResult validate_family(std::vector<Circle> circles);
  explicit Family(std::vector<Circle> circles) : circles_(std::move(circles)) {}

  std::vector<Circle> circles_;
};

struct Violation {
  std::size_t i = 0;
  std::size_t j = 0;
  PairRelation relation = PairRelation::TwoPoints;
};

struct ValidationResult {
  std::optional<Family> family;
  std::vector<Violation> violations;

  explicit operator bool() const { return family.has_value(); }
};

// validate_family accepts iff every pair is TwoPoints, ExternallyTangent or
// InternallyTangent.

// validate_family, throwing InvalidInput with the violation list on failure.
Family make_family(std::vector<Circle> circles);

std::string describe(std::span<const Violation> violations);

struct Reduction {
  Family family;
  std::vector<std::size_t> kept;  // original index of each surviving circle
};

// Repeatedly drops the outer circle of an internally tangent pair.
Reduction reduce_internal_tangencies(const Family& f);

struct Inversion {
  Family family;
  // True iff the inversion center lies strictly outside every disc, the
  // setting in which digon counts are preserved.
  bool invariance_contract = false;
};

// Inversion x -> p + k^2 (x - p) / |x - p|^2 applied to every circle.
// Throws InvalidInput when k = 0 or p lies on a circle.
Inversion invert_family(const Family& f, const Point& p, const Rational& k);

struct Inflation {
  QuadraticNumber radius_sq;               // exact squared radius reached
  std::optional<QuadraticNumber> radius;   // when radius_sq is rational
  std::optional<Rational> rational_radius; // when the radius itself is rational
  AlgebraicPoint witness;                  // first intersection point met

  // The inflated circle with a rational squared radius in
  // [radius_sq - tolerance, radius_sq]; exact when radius_sq is rational.
  Circle circle(const Circle& original, const Rational& tolerance) const;
};

// Grows circle i about its center until it first passes through an
// intersection point of two other circles.
// Throws InvalidInput when f has fewer than 3 circles or such a point already
// lies strictly inside disc i; Error("no incidence reachable") when the other
// circles have no intersection point.
Inflation inflate_until_incidence(const Family& f, std::size_t i);

// First collinear triple (indices ascending) found by exact orientation tests.
std::optional<std::array<std::size_t, 3>> collinear_triple_exists(std::span<const Point> points);

}  // namespace lenskit
