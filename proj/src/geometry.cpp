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

#include "lenskit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lenskit/errors.hpp"

namespace lenskit {

Rational squared_distance(const Point& p, const Point& q) {
  const Rational dx = q.x - p.x;
  const Rational dy = q.y - p.y;
  return dx * dx + dy * dy;
}

int orientation(const Point& a, const Point& b, const Point& c) {
  const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

// ---------------------------------------------------------------------------
// Circle and pair relations

Circle::Circle(Point center, Rational radius_sq)
    : center_(std::move(center)), radius_sq_(std::move(radius_sq)) {
  // Callers may hand in unreduced fractions such as mpq_class(16, 10).
  center_.x.canonicalize();
  center_.y.canonicalize();
  radius_sq_.canonicalize();
  if (sgn(radius_sq_) <= 0) {
    throw InvalidInput("circle radius must be positive (squared radius " +
                       to_string(radius_sq_) + ")");
  }
}

Circle Circle::with_radius(Point center, const Rational& radius) {
  if (sgn(radius) <= 0) throw InvalidInput("circle radius must be positive");
  Rational r = radius;
  r.canonicalize();
  return Circle(std::move(center), r * r);
}

double Circle::approx_radius() const { return std::sqrt(radius_sq_.get_d()); }

std::string_view to_string(PairRelation r) {
  switch (r) {
    case PairRelation::TwoPoints: return "TwoPoints";
    case PairRelation::ExternallyTangent: return "ExternallyTangent";
    case PairRelation::InternallyTangent: return "InternallyTangent";
    case PairRelation::DisjointOutside: return "DisjointOutside";
    case PairRelation::Contained: return "Contained";
    case PairRelation::Identical: return "Identical";
  }
  return "?";
}

PairRelation classify_pair(const Circle& c1, const Circle& c2) {
  if (c1.center() == c2.center()) {
    return c1.radius_sq() == c2.radius_sq() ? PairRelation::Identical : PairRelation::Contained;
  }
  const Rational d2 = squared_distance(c1.center(), c2.center());
  const Rational s = d2 - c1.radius_sq() - c2.radius_sq();
  const Rational p = c1.radius_sq() * c2.radius_sq();
  // d^2 - (r1 + r2)^2 = s - 2 sqrt(p)
  const int outer = filtered_sign(QuadraticNumber(s, -2, p));
  if (outer > 0) return PairRelation::DisjointOutside;
  if (outer == 0) return PairRelation::ExternallyTangent;
  // d^2 - (r1 - r2)^2 = s + 2 sqrt(p)
  const int inner = filtered_sign(QuadraticNumber(s, 2, p));
  if (inner > 0) return PairRelation::TwoPoints;
  if (inner == 0) return PairRelation::InternallyTangent;
  return PairRelation::Contained;
}

// ---------------------------------------------------------------------------
// Intersection points

AlgebraicPoint::AlgebraicPoint(Point base, Point offset, Rational radicand, std::size_t i,
                               std::size_t j, Branch branch)
    : base_(std::move(base)),
      offset_(std::move(offset)),
      radicand_(std::move(radicand)),
      i_(i),
      j_(j),
      branch_(branch) {
  if (sgn(radicand_) < 0) throw InvalidInput("negative radicand in point");
  if (sgn(radicand_) == 0) {
    offset_ = Point{0, 0};
  }
}

std::optional<Point> AlgebraicPoint::rational_point() const {
  if (is_rational()) return base_;
  return std::nullopt;
}

std::pair<FloatInterval, FloatInterval> AlgebraicPoint::approx() const {
  const FloatInterval bx = FloatInterval::enclose(base_.x);
  const FloatInterval by = FloatInterval::enclose(base_.y);
  if (is_rational()) return {bx, by};
  const FloatInterval root = sqrt(FloatInterval::enclose(radicand_));
  return {bx + FloatInterval::enclose(offset_.x) * root,
          by + FloatInterval::enclose(offset_.y) * root};
}

std::pair<double, double> AlgebraicPoint::to_double() const {
  const double root = std::sqrt(radicand_.get_d());
  return {base_.x.get_d() + offset_.x.get_d() * root, base_.y.get_d() + offset_.y.get_d() * root};
}

bool same_point(const AlgebraicPoint& p, const AlgebraicPoint& q) {
  return qn_compare(p.x(), q.x()) == 0 && qn_compare(p.y(), q.y()) == 0;
}

std::vector<AlgebraicPoint> intersection_points(const Circle& c1, const Circle& c2, std::size_t i,
                                                std::size_t j) {
  const PairRelation rel = classify_pair(c1, c2);
  if (rel == PairRelation::Identical) {
    throw InvalidInput("intersection of identical circles is not a finite point set");
  }
  if (rel != PairRelation::TwoPoints && !is_tangent(rel)) return {};

  const Rational dx = c2.center().x - c1.center().x;
  const Rational dy = c2.center().y - c1.center().y;
  const Rational d2 = dx * dx + dy * dy;
  const Rational along = (d2 + c1.radius_sq() - c2.radius_sq()) / (2 * d2);
  Point base{c1.center().x + along * dx, c1.center().y + along * dy};
  if (is_tangent(rel)) {
    return {AlgebraicPoint(std::move(base), Point{0, 0}, 0, i, j, Branch::Plus)};
  }

  // Offset from the chord midpoint is +-sqrt(h^2 / d^2) * (-dy, dx).
  const Rational h2 = c1.radius_sq() - along * along * d2;
  const Rational t2 = h2 / d2;
  std::vector<AlgebraicPoint> out;
  out.reserve(2);
  if (auto t = rational_sqrt(t2)) {
    out.emplace_back(Point{base.x - *t * dy, base.y + *t * dx}, Point{0, 0}, 0, i, j,
                     Branch::Plus);
    out.emplace_back(Point{base.x + *t * dy, base.y - *t * dx}, Point{0, 0}, 0, i, j,
                     Branch::Minus);
    return out;
  }
  // Rewrite sqrt(p/q) as scale * sqrt(radicand) with an integer radicand.
  const QuadraticNumber root = qn_sqrt(t2);
  const Rational& scale = root.b();
  const Rational& radicand = root.c();
  out.emplace_back(base, Point{-scale * dy, scale * dx}, radicand, i, j, Branch::Plus);
  out.emplace_back(std::move(base), Point{scale * dy, -scale * dx}, radicand, i, j,
                   Branch::Minus);
  return out;
}

// ---------------------------------------------------------------------------
// Sides

std::string_view to_string(Side s) {
  switch (s) {
    case Side::Inside: return "inside";
    case Side::On: return "on";
    case Side::Outside: return "outside";
  }
  return "?";
}

namespace {

Side side_from_sign(int s) {
  if (s < 0) return Side::Inside;
  if (s > 0) return Side::Outside;
  return Side::On;
}

}  // namespace

QuadraticNumber power(const AlgebraicPoint& p, const Circle& c) {
  const Rational ux = p.base().x - c.center().x;
  const Rational uy = p.base().y - c.center().y;
  if (p.is_rational()) return QuadraticNumber(ux * ux + uy * uy - c.radius_sq());
  const Rational& dx = p.offset().x;
  const Rational& dy = p.offset().y;
  return QuadraticNumber(ux * ux + uy * uy + (dx * dx + dy * dy) * p.radicand() - c.radius_sq(),
                         2 * (ux * dx + uy * dy), p.radicand());
}

Side side_of_circle(const AlgebraicPoint& p, const Circle& c) {
  return side_from_sign(filtered_sign(power(p, c)));
}

Side side_of_circle(const Point& p, const Circle& c) {
  return side_from_sign(sgn(Rational(squared_distance(p, c.center()) - c.radius_sq())));
}

// ---------------------------------------------------------------------------
// Families

ValidationResult validate_family(std::vector<Circle> circles) {
  ValidationResult result;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      const PairRelation rel = classify_pair(circles[i], circles[j]);
      if (rel != PairRelation::TwoPoints && !is_tangent(rel)) {
        result.violations.push_back({i, j, rel});
      }
    }
  }
  if (result.violations.empty()) result.family = Family(std::move(circles));
  return result;
}

Family make_family(std::vector<Circle> circles) {
  ValidationResult r = validate_family(std::move(circles));
  if (!r) throw InvalidInput("not a pairwise intersecting family: " + describe(r.violations));
  return std::move(*r.family);
}

std::string describe(std::span<const Violation> violations) {
  std::ostringstream out;
  for (std::size_t t = 0; t < violations.size(); ++t) {
    if (t != 0) out << "; ";
    out << "(" << violations[t].i << ", " << violations[t].j << ") "
        << to_string(violations[t].relation);
  }
  return out.str();
}

Reduction reduce_internal_tangencies(const Family& f) {
  std::vector<std::size_t> kept(f.size());
  for (std::size_t t = 0; t < kept.size(); ++t) kept[t] = t;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < kept.size() && !changed; ++a) {
      for (std::size_t b = a + 1; b < kept.size() && !changed; ++b) {
        const Circle& ca = f[kept[a]];
        const Circle& cb = f[kept[b]];
        if (classify_pair(ca, cb) != PairRelation::InternallyTangent) continue;
        const std::size_t outer = ca.radius_sq() > cb.radius_sq() ? a : b;
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(outer));
        changed = true;
      }
    }
  }

  std::vector<Circle> circles;
  circles.reserve(kept.size());
  for (std::size_t t : kept) circles.push_back(f[t]);
  return {make_family(std::move(circles)), std::move(kept)};
}

Inversion invert_family(const Family& f, const Point& p_in, const Rational& k_in) {
  Point p = p_in;
  p.x.canonicalize();
  p.y.canonicalize();
  Rational k = k_in;
  k.canonicalize();
  if (sgn(k) == 0) throw InvalidInput("inversion radius k must be nonzero");
  const Rational k2 = k * k;
  bool outside_all = true;
  std::vector<Circle> image;
  image.reserve(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) {
    const Circle& c = f[t];
    const Rational pw = squared_distance(p, c.center()) - c.radius_sq();
    if (sgn(pw) == 0) {
      throw InvalidInput("inversion center lies on circle " + std::to_string(t));
    }
    if (sgn(pw) < 0) outside_all = false;
    const Rational s = k2 / pw;
    Point center{p.x + s * (c.center().x - p.x), p.y + s * (c.center().y - p.y)};
    image.emplace_back(std::move(center), s * s * c.radius_sq());
  }
  return {make_family(std::move(image)), outside_all};
}

// ---------------------------------------------------------------------------
// Inflation

namespace {

// Largest multiple of 2^-bits that is <= v.
Rational floor_to_grid(const Rational& v, unsigned bits) {
  mpz_class scale = 1;
  scale <<= bits;
  mpz_class scaled = v.get_num() * scale;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.get_den_mpz_t());
  return Rational(q, scale);
}

}  // namespace

Circle Inflation::circle(const Circle& original, const Rational& tolerance) const {
  if (auto r2 = radius_sq.to_rational()) return Circle(original.center(), *r2);
  if (sgn(tolerance) <= 0) throw InvalidInput("tolerance must be positive");
  unsigned bits = 1;
  while (Rational(1, mpz_class(1) << bits) > tolerance) ++bits;
  const Rational step(1, mpz_class(1) << bits);
  Rational guess = floor_to_grid(Rational(radius_sq.approx().lo), bits);
  while (qn_compare(QuadraticNumber(guess), radius_sq) > 0) guess -= step;
  while (qn_compare(QuadraticNumber(guess + step), radius_sq) <= 0) guess += step;
  if (guess < original.radius_sq()) guess = original.radius_sq();
  return Circle(original.center(), guess);
}

Inflation inflate_until_incidence(const Family& f, std::size_t i) {
  if (f.size() < 3) throw InvalidInput("inflation needs at least 3 circles");
  if (i >= f.size()) throw InvalidInput("circle index out of range");
  const Circle& target = f[i];
  std::optional<QuadraticNumber> best;
  std::optional<AlgebraicPoint> witness;
  for (std::size_t j = 0; j < f.size(); ++j) {
    for (std::size_t k = j + 1; k < f.size(); ++k) {
      if (j == i || k == i) continue;
      for (const AlgebraicPoint& q : intersection_points(f[j], f[k], j, k)) {
        const QuadraticNumber pw = power(q, target);
        if (filtered_sign(pw) < 0) {
          throw InvalidInput("intersection point of circles " + std::to_string(j) + " and " +
                             std::to_string(k) + " lies strictly inside disc " +
                             std::to_string(i));
        }
        QuadraticNumber dist2 = pw + QuadraticNumber(target.radius_sq());
        if (!best || qn_compare(dist2, *best) < 0) {
          best = std::move(dist2);
          witness = q;
        }
      }
    }
  }
  if (!best) throw Error("no incidence reachable");

  Inflation out{*best, std::nullopt, std::nullopt, *witness};
  if (auto r2 = best->to_rational()) {
    out.radius_sq = QuadraticNumber(*r2);
    out.radius = qn_sqrt(*r2);
    out.rational_radius = rational_sqrt(*r2);
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> collinear_triple_exists(std::span<const Point> points) {
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      for (std::size_t c = b + 1; c < points.size(); ++c) {
        if (orientation(points[a], points[b], points[c]) == 0) return std::array{a, b, c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace lenskit
