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

#include "lenskit/kernel.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "lenskit/errors.hpp"

namespace lenskit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double v) { return std::nextafter(v, -kInf); }
double up(double v) { return std::nextafter(v, kInf); }

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) {
    throw InvalidInput("malformed rational '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

FloatInterval checked(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi)) return FloatInterval::whole();
  return {lo, hi};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) {
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !is_digits(int_part)) ||
        (!frac_part.empty() && !is_digits(frac_part))) {
      throw InvalidInput("malformed decimal '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

// ---------------------------------------------------------------------------
// FloatInterval

FloatInterval FloatInterval::enclose(const Rational& q) {
  if (sgn(q) == 0) return {0.0, 0.0};
  // mpq_get_d truncates, so the exact value is within one ulp of d.
  const double d = q.get_d();
  if (!std::isfinite(d)) return whole();
  return {down(d), up(d)};
}

FloatInterval FloatInterval::whole() { return {-kInf, kInf}; }

std::optional<int> FloatInterval::certain_sign() const {
  if (lo > 0.0) return 1;
  if (hi < 0.0) return -1;
  if (lo == 0.0 && hi == 0.0) return 0;
  return std::nullopt;
}

FloatInterval operator+(const FloatInterval& a, const FloatInterval& b) {
  if (a.is_point_zero()) return b;
  if (b.is_point_zero()) return a;
  return checked(down(a.lo + b.lo), up(a.hi + b.hi));
}

FloatInterval operator-(const FloatInterval& a, const FloatInterval& b) { return a + (-b); }

FloatInterval operator*(const FloatInterval& a, const FloatInterval& b) {
  if (a.is_point_zero() || b.is_point_zero()) return {0.0, 0.0};
  const double p1 = a.lo * b.lo;
  const double p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo;
  const double p4 = a.hi * b.hi;
  if (std::isnan(p1) || std::isnan(p2) || std::isnan(p3) || std::isnan(p4)) {
    return FloatInterval::whole();
  }
  return {down(std::min({p1, p2, p3, p4})), up(std::max({p1, p2, p3, p4}))};
}

FloatInterval square(const FloatInterval& a) {
  if (a.is_point_zero()) return a;
  const double l2 = a.lo * a.lo;
  const double h2 = a.hi * a.hi;
  if (a.lo >= 0.0) return checked(down(l2), up(h2));
  if (a.hi <= 0.0) return checked(down(h2), up(l2));
  return checked(0.0, up(std::max(l2, h2)));
}

FloatInterval sqrt(const FloatInterval& a) {
  if (a.hi <= 0.0) return {0.0, 0.0};
  const double lo = a.lo > 0.0 ? std::max(0.0, down(std::sqrt(a.lo))) : 0.0;
  return checked(lo, up(std::sqrt(a.hi)));
}

// ---------------------------------------------------------------------------
// QuadraticNumber

QuadraticNumber::QuadraticNumber(Rational a) : a_(std::move(a)) {}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (sgn(c_) < 0) {
    throw InvalidInput("negative radicand " + to_string(c_));
  }
  normalize();
}

void QuadraticNumber::normalize() {
  if (sgn(b_) == 0 || sgn(c_) == 0) {
    b_ = 0;
    c_ = 0;
  }
}

std::optional<Rational> QuadraticNumber::to_rational() const {
  if (is_rational()) return a_;
  if (auto root = rational_sqrt(c_)) return Rational(a_ + b_ * *root);
  return std::nullopt;
}

FloatInterval QuadraticNumber::approx() const {
  const FloatInterval a = FloatInterval::enclose(a_);
  if (is_rational()) return a;
  return a + FloatInterval::enclose(b_) * sqrt(FloatInterval::enclose(c_));
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.c_ = c_;
  return r;
}

namespace {

const Rational& shared_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational()) return y.c();
  if (y.is_rational() || x.c() == y.c()) return x.c();
  throw InvalidInput("arithmetic on quadratic numbers with different radicands " +
                     to_string(x.c()) + " and " + to_string(y.c()));
}

}  // namespace

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Rational& c = shared_radicand(x, y);
  return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, c);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Rational& c = shared_radicand(x, y);
  return QuadraticNumber(x.a_ - y.a_, x.b_ - y.b_, c);
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Rational& c = shared_radicand(x, y);
  return QuadraticNumber(x.a_ * y.a_ + x.b_ * y.b_ * c, x.a_ * y.b_ + y.a_ * x.b_, c);
}

QuadraticNumber qn_sqrt(const Rational& q) {
  if (sgn(q) < 0) throw InvalidInput("square root of negative rational " + to_string(q));
  if (auto root = rational_sqrt(q)) return QuadraticNumber(*root);
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(den.get_mpz_t()) != 0) {
    mpz_class root_den;
    mpz_sqrt(root_den.get_mpz_t(), den.get_mpz_t());
    return QuadraticNumber(0, Rational(1, root_den), Rational(num));
  }
  return QuadraticNumber(0, Rational(1, den), Rational(num * den));
}

std::string to_string(const QuadraticNumber& x) {
  if (x.is_rational()) return to_string(x.a());
  std::string root = "sqrt(" + to_string(x.c()) + ")";
  Rational mag = abs(x.b());
  std::string term = mag == 1 ? root : to_string(mag) + "*" + root;
  if (sgn(x.a()) == 0) return sgn(x.b()) < 0 ? "-" + term : term;
  return to_string(x.a()) + (sgn(x.b()) < 0 ? " - " : " + ") + term;
}

int qn_sign(const QuadraticNumber& x) {
  if (x.is_rational()) return sgn(x.a());
  const int sa = sgn(x.a());
  const int sb = sgn(x.b());
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger of a^2 and b^2 c decides.
  const int cmp_sq = cmp(Rational(x.a() * x.a()), Rational(x.b() * x.b() * x.c()));
  if (cmp_sq > 0) return sa;
  if (cmp_sq < 0) return sb;
  return 0;
}

namespace {

std::strong_ordering to_ordering(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering qn_compare(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational() || y.is_rational() || x.c() == y.c()) {
    return to_ordering(qn_sign(x - y));
  }
  // sign(P + v) with P = (a - a') + b sqrt(c) and v = -b' sqrt(c').
  const Rational diff = x.a() - y.a();
  const QuadraticNumber p(diff, x.b(), x.c());
  const int sp = qn_sign(p);
  const int sv = -sgn(y.b());
  if (sp == 0) return to_ordering(sv);
  if (sp == sv) return to_ordering(sp);
  // P^2 - v^2 = diff^2 + b^2 c - b'^2 c' + 2 diff b sqrt(c)
  const QuadraticNumber gap(diff * diff + x.b() * x.b() * x.c() - y.b() * y.b() * y.c(),
                            2 * diff * x.b(), x.c());
  const int sg = qn_sign(gap);
  if (sg > 0) return to_ordering(sp);
  if (sg < 0) return to_ordering(sv);
  return std::strong_ordering::equal;
}

int filtered_sign(const QuadraticNumber& x, FilterStats* stats) {
  if (x.is_rational()) {
    if (stats != nullptr) ++stats->filtered;
    return sgn(x.a());
  }
  if (auto s = x.approx().certain_sign()) {
    if (stats != nullptr) ++stats->filtered;
    return *s;
  }
  if (stats != nullptr) ++stats->exact;
  return qn_sign(x);
}

}  // namespace lenskit
