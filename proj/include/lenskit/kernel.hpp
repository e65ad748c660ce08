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

// Exact number types: arbitrary-precision rationals, quadratic numbers
// a + b*sqrt(c), and a certified floating-point interval filter.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace lenskit {

using Rational = mpq_class;

// Accepts "p/q", an integer, or an exact decimal ("1.25", "-0.5", "3.").
// Throws InvalidInput on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" for integers); parse_rational inverts it exactly.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

// Closed interval [lo, hi] of doubles that contains the exact value it
// approximates. Every operation rounds its endpoints outward by one ulp.
struct FloatInterval {
  double lo = 0.0;
  double hi = 0.0;

  static FloatInterval exact(double v) { return {v, v}; }
  static FloatInterval enclose(const Rational& q);
  static FloatInterval whole();

  bool is_point_zero() const { return lo == 0.0 && hi == 0.0; }
  // +1 / -1 when the interval excludes zero, 0 for the exact interval [0,0],
  // nullopt when it straddles zero.
  std::optional<int> certain_sign() const;
  double mid() const { return 0.5 * (lo + hi); }

  friend FloatInterval operator+(const FloatInterval& a, const FloatInterval& b);
  friend FloatInterval operator-(const FloatInterval& a, const FloatInterval& b);
  friend FloatInterval operator*(const FloatInterval& a, const FloatInterval& b);
  friend FloatInterval operator-(const FloatInterval& a) { return {-a.hi, -a.lo}; }
};

FloatInterval square(const FloatInterval& a);
// Square root of the nonnegative part of the interval.
FloatInterval sqrt(const FloatInterval& a);

// Exact value a + b*sqrt(c) with rational a, b and radicand c >= 0.
//
// Arithmetic between two quadratic numbers requires compatible radicands:
// equal radicands, or at least one operand rational. Incompatible operands
// throw InvalidInput; comparisons across radicands go through qn_compare.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational a);  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational a, Rational b, Rational c);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  bool is_rational() const { return sgn(b_) == 0 || sgn(c_) == 0; }
  // The value when it is rational, including perfect-square radicands.
  std::optional<Rational> to_rational() const;

  FloatInterval approx() const;
  double to_double() const { return approx().mid(); }

  QuadraticNumber operator-() const;
  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);

  // Structural equality of (a, b, c) after normalization; use qn_compare for
  // value equality across radicands.
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  void normalize();

  Rational a_;
  Rational b_;
  Rational c_;
};

// sqrt(q) for rational q >= 0, as a quadratic number with an integer radicand
// whenever the denominator of q is a perfect square.
QuadraticNumber qn_sqrt(const Rational& q);

std::string to_string(const QuadraticNumber& x);

int qn_sign(const QuadraticNumber& x);

// Exact ordering of two quadratic numbers whose radicands may differ.
std::strong_ordering qn_compare(const QuadraticNumber& x, const QuadraticNumber& y);

struct FilterStats {
  std::size_t filtered = 0;  // decided by the interval
  std::size_t exact = 0;     // fell back to exact arithmetic
};

// Same result as qn_sign; evaluates the interval first.
int filtered_sign(const QuadraticNumber& x, FilterStats* stats = nullptr);

}  // namespace lenskit
