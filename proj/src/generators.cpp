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

#include "lenskit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "lenskit/errors.hpp"
#include "lenskit/io.hpp"

namespace lenskit {

namespace {

// Portable replacements for the std distributions, whose output differs
// between standard libraries.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return lo + static_cast<std::int64_t>(v % range);
}

double uniform_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform_real(rng);
  const double u2 = uniform_real(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
}

// Uniform on the grid {lo, lo + 1/den, ..., hi}.
Rational grid_value(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long den) {
  const Rational lo_s = lo * den;
  const Rational hi_s = hi * den;
  mpz_class a, b;
  mpz_cdiv_q(a.get_mpz_t(), lo_s.get_num_mpz_t(), lo_s.get_den_mpz_t());
  mpz_fdiv_q(b.get_mpz_t(), hi_s.get_num_mpz_t(), hi_s.get_den_mpz_t());
  if (b < a) throw InvalidInput("empty sampling range");
  const mpz_class span = b - a;
  if (!span.fits_slong_p()) throw InvalidInput("sampling range too wide for the grid");
  const std::int64_t k = uniform_int(rng, 0, span.get_si());
  Rational v(a + k, den);
  v.canonicalize();
  return v;
}

// Rational point on the unit circle from the parametrization
// ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)).
Point rational_direction(std::mt19937_64& rng) {
  const Rational t = grid_value(rng, -1, 1, 1000);
  const Rational w = 1 + t * t;
  Point u{(1 - t * t) / w, 2 * t / w};
  if (uniform_int(rng, 0, 1) == 1) u = {-u.x, -u.y};
  return u;
}

bool crosses_all(const std::vector<Circle>& placed, const Circle& c, std::size_t skip) {
  for (std::size_t t = 0; t < placed.size(); ++t) {
    if (t == skip) continue;
    if (classify_pair(placed[t], c) != PairRelation::TwoPoints) return false;
  }
  return true;
}

Rational snap(double v) {
  Rational q(static_cast<long>(std::llround(v * 1e6)), 1000000);
  q.canonicalize();
  return q;
}

std::optional<Family> realize(const std::vector<double>& params) {
  std::vector<Circle> circles;
  for (std::size_t t = 0; t + 2 < params.size(); t += 3) {
    const Rational r = snap(params[t + 2]);
    if (sgn(r) <= 0) return std::nullopt;
    circles.push_back(Circle::with_radius({snap(params[t]), snap(params[t + 1])}, r));
  }
  ValidationResult v = validate_family(std::move(circles));
  if (!v) return std::nullopt;
  return std::move(*v.family);
}

std::vector<double> parameters(const Family& f) {
  std::vector<double> p;
  for (const Circle& c : f.circles()) {
    p.push_back(c.center().x.get_d());
    p.push_back(c.center().y.get_d());
    p.push_back(c.approx_radius());
  }
  return p;
}

struct Score {
  std::size_t lenses = 0;
  // Candidate pairs blocked by a single circle; breaks ties between families
  // with equal lens counts in favor of those one move away from another lens.
  std::size_t near = 0;

  double value(std::size_t pairs) const {
    return static_cast<double>(lenses) + static_cast<double>(near) / static_cast<double>(pairs + 1);
  }
};

Score score(const Family& f) {
  const CensusEngine engine(f);
  Score s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (engine.relation(i, j) != PairRelation::TwoPoints) continue;
      std::size_t blockers = 0;
      for (std::size_t k = 0; k < f.size() && blockers < 2; ++k) {
        if (k != i && k != j && engine.region_blocked(k, i, j, DigonKind::Lens)) ++blockers;
      }
      if (blockers == 0) ++s.lenses;
      if (blockers == 1) ++s.near;
    }
  }
  return s;
}

// Inversion about a random point of the bounding box, followed by the
// similarity that restores unit mean radius and a centered bounding box.
std::vector<double> invert_parameters(const std::vector<double>& params, std::mt19937_64& rng) {
  const std::size_t n = params.size() / 3;
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (std::size_t t = 0; t < n; ++t) {
    x0 = std::min(x0, params[3 * t] - params[3 * t + 2]);
    x1 = std::max(x1, params[3 * t] + params[3 * t + 2]);
    y0 = std::min(y0, params[3 * t + 1] - params[3 * t + 2]);
    y1 = std::max(y1, params[3 * t + 1] + params[3 * t + 2]);
  }
  const double px = x0 + (x1 - x0) * uniform_real(rng);
  const double py = y0 + (y1 - y0) * uniform_real(rng);
  std::vector<double> out(params.size());
  for (std::size_t t = 0; t < n; ++t) {
    const double dx = params[3 * t] - px, dy = params[3 * t + 1] - py, r = params[3 * t + 2];
    const double s = 1.0 / (dx * dx + dy * dy - r * r);
    out[3 * t] = px + s * dx;
    out[3 * t + 1] = py + s * dy;
    out[3 * t + 2] = std::abs(s) * r;
  }
  double cx = 0, cy = 0, mean_r = 0;
  for (std::size_t t = 0; t < n; ++t) {
    cx += out[3 * t] / static_cast<double>(n);
    cy += out[3 * t + 1] / static_cast<double>(n);
    mean_r += out[3 * t + 2] / static_cast<double>(n);
  }
  for (std::size_t t = 0; t < n; ++t) {
    out[3 * t] = (out[3 * t] - cx) / mean_r;
    out[3 * t + 1] = (out[3 * t + 1] - cy) / mean_r;
    out[3 * t + 2] /= mean_r;
  }
  return out;
}

}  // namespace

Family gen_random(const GenConfig& cfg) {
  if (cfg.n == 0) throw InvalidInput("n must be positive");
  if (sgn(cfg.radius_min) <= 0 || cfg.radius_max < cfg.radius_min || sgn(cfg.region) <= 0 ||
      cfg.denominator <= 0) {
    throw InvalidInput("invalid generator ranges");
  }
  const std::size_t injected = cfg.external_tangencies + cfg.internal_tangencies;
  if (injected >= cfg.n && cfg.n > 1) throw InvalidInput("too many tangency injections for n");

  std::mt19937_64 rng(cfg.seed);
  std::vector<Circle> placed;
  // The last `injected` circles are the tangent ones: external first.
  for (std::size_t t = 0; t < cfg.n; ++t) {
    const std::size_t from_end = cfg.n - t;
    const bool internal = t > 0 && from_end <= cfg.internal_tangencies;
    const bool external = t > 0 && !internal && from_end <= injected;
    bool done = false;
    for (std::size_t attempt = 0; attempt < cfg.attempts_per_circle && !done; ++attempt) {
      Rational r = grid_value(rng, cfg.radius_min, cfg.radius_max, cfg.denominator);
      std::size_t partner = placed.size();
      Point center;
      if (external || internal) {
        partner = uniform_index(rng, placed.size());
        const Circle& p = placed[partner];
        const Rational pr = *p.radius();
        if (internal && r >= pr) continue;
        const Point u = rational_direction(rng);
        const Rational d = internal ? Rational(pr - r) : Rational(pr + r);
        center = {p.center().x + d * u.x, p.center().y + d * u.y};
      } else {
        center = {grid_value(rng, -cfg.region, cfg.region, cfg.denominator),
                  grid_value(rng, -cfg.region, cfg.region, cfg.denominator)};
      }
      Circle c = Circle::with_radius(center, r);
      if (crosses_all(placed, c, partner)) {
        placed.push_back(std::move(c));
        done = true;
      }
    }
    if (!done) {
      throw Error("could not place circle " + std::to_string(t) + " after " +
                  std::to_string(cfg.attempts_per_circle) +
                  " attempts; try wider radii or a smaller region");
    }
  }
  return make_family(std::move(placed));
}

Family gen_unit(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Rational bound(9, 10);
  std::vector<Circle> circles;
  std::set<std::pair<Rational, Rational>> used;
  while (circles.size() < n) {
    const Rational x = grid_value(rng, -bound, bound, 1000);
    const Rational y = grid_value(rng, -bound, bound, 1000);
    if (x * x + y * y >= bound * bound || !used.insert({x, y}).second) continue;
    circles.emplace_back(Point{x, y}, Rational(1));
  }
  return make_family(std::move(circles));
}

Family gen_pencil(std::size_t n, const std::vector<Rational>& abscissas) {
  if (n < 2) throw InvalidInput("a pencil needs at least 2 circles");
  std::vector<Rational> a = abscissas;
  if (a.empty()) {
    for (std::size_t t = 0; t < n; ++t) {
      a.emplace_back(2 * static_cast<long>(t) - static_cast<long>(n) + 1);
    }
  }
  if (a.size() != n) throw InvalidInput("expected " + std::to_string(n) + " abscissas");
  for (Rational& v : a) v.canonicalize();
  std::vector<Rational> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("pencil abscissas must be distinct");
  }
  std::vector<Circle> circles;
  for (const Rational& x : a) circles.emplace_back(Point{x, 0}, x * x + 1);
  return make_family(std::move(circles));
}

Family gen_touching_quad(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d) {
  if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0 || sgn(d) <= 0) {
    throw InvalidInput("touching quadrilateral parameters must be positive");
  }
  return make_family({Circle::with_radius({0, a}, a), Circle::with_radius({c, 0}, c),
                      Circle::with_radius({0, -b}, b), Circle::with_radius({-d, 0}, d)});
}

Family gen_tight(std::size_t n) {
  if (n < 4) throw InvalidInput("the 2n - 2 lens bound is attained only for n >= 4");
  // Two large circles B1, B2 through the origin whose tangent lines there make
  // angles +phi and -phi with the x-axis, and m = n - 2 homothetic circles
  // S_t centered at (q^(t-1), 0) with angular radius slightly above phi. Each
  // S_t forms a small cap lens with B1 and with B2; B1 B2 and the extreme pair
  // S_1 S_m add one lens each.
  const std::size_t m = n - 2;
  const Rational q(17, 10);
  const Rational last = [&] {
    Rational v = 1;
    for (std::size_t t = 1; t < m; ++t) v *= q;
    return v;
  }();
  // cos(phi) = 2k / (k^2 + 1), sin(phi) = (k^2 - 1) / (k^2 + 1), and the small
  // circles satisfy radius^2 = (sin^2 + cos^2 / 16) * center^2. k grows until
  // S_1 and S_m still cross with room to spare.
  for (long k = 2;; ++k) {
    const Rational denom(k * k + 1);
    const Rational cs(2 * k, k * k + 1);
    const Rational sn(k * k - 1, k * k + 1);
    const Rational ratio_sq = sn * sn + cs * cs / 16;
    const Rational spread = 2 * last;
    if ((spread - 1) * (spread - 1) >= ratio_sq * (spread + 1) * (spread + 1)) continue;

    const Rational big = 8 * last / (cs * cs);
    std::vector<Circle> circles;
    circles.emplace_back(Point{-big * sn, big * cs}, big * big);
    circles.emplace_back(Point{-big * sn, -big * cs}, big * big);
    Rational d = 1;
    for (std::size_t t = 0; t < m; ++t) {
      circles.emplace_back(Point{d, 0}, ratio_sq * d * d);
      d *= q;
    }
    return make_family(std::move(circles));
  }
}

Family search_initial_family(std::size_t n, std::uint64_t seed) {
  // Radii spread over two orders of magnitude so that both nested and
  // cap-like configurations are reachable.
  std::mt19937_64 rng(seed);
  std::vector<Circle> placed;
  while (placed.size() < n) {
    const double r = std::exp(std::log(0.2) + uniform_real(rng) * std::log(25.0));
    const double x = 4 * uniform_real(rng) - 2;
    const double y = 4 * uniform_real(rng) - 2;
    Circle c = Circle::with_radius({snap(x), snap(y)}, snap(r));
    if (crosses_all(placed, c, placed.size())) placed.push_back(std::move(c));
  }
  return make_family(std::move(placed));
}

SearchResult extremal_search(std::size_t n, std::uint64_t seed, std::size_t iters,
                             const SearchSchedule& schedule) {
  if (n < 2) throw InvalidInput("search needs n >= 2");
  const std::size_t target = 2 * n - 2;
  SearchState state;
  state.rng.seed(seed);
  const std::size_t pairs = n * (n - 1) / 2;
  double current = 0.0;
  auto start = [&](Family f) {
    state.params = parameters(f);
    const Score s = score(f);
    state.lens_count = s.lenses;
    current = s.value(pairs);
    state.family = std::move(f);
    state.temperature = schedule.initial_temperature;
  };
  start(search_initial_family(n, seed));

  SearchResult result;
  result.best = state.family;
  std::size_t best_lenses = state.lens_count;

  for (state.iteration = 1; state.iteration <= iters; ++state.iteration) {
    if (schedule.stop_at_target && best_lenses >= target) break;
    if (schedule.restart_every > 0 && state.iteration > 1 &&
        (state.iteration - 1) % schedule.restart_every == 0) {
      start(search_initial_family(n, state.rng()));
    }
    // Move sizes span two decades below the temperature-driven scale.
    const double step = std::max(state.temperature, schedule.min_step) *
                        std::pow(10.0, -2.0 * uniform_real(state.rng));
    std::vector<double> trial = state.params;
    const std::size_t c = uniform_index(state.rng, n);
    const double r = trial[3 * c + 2];
    const double kind = uniform_real(state.rng);
    if (kind < 0.7) {
      trial[3 * c] += gaussian(state.rng) * step * r;
      trial[3 * c + 1] += gaussian(state.rng) * step * r;
    }
    if (kind > 0.4) trial[3 * c + 2] = r * std::exp(gaussian(state.rng) * step);
    if (uniform_real(state.rng) < schedule.inversion_probability) {
      trial = invert_parameters(state.params, state.rng);
    }

    TraceRecord rec{state.iteration, state.temperature, state.lens_count, false};
    if (std::optional<Family> f = realize(trial)) {
      const Score s = score(*f);
      const std::size_t lenses = s.lenses;
      if (lenses > target) {
        throw Falsification("family with " + std::to_string(lenses) + " lenses on " +
                                std::to_string(n) + " circles",
                            family_to_json(*f).dump());
      }
      const double delta = s.value(pairs) - current;
      const bool accept =
          delta >= 0 || uniform_real(state.rng) < std::exp(delta / state.temperature);
      if (accept) {
        state.params = std::move(trial);
        state.family = std::move(*f);
        state.lens_count = lenses;
        current = s.value(pairs);
        rec.accepted = true;
        rec.lens_count = lenses;
        if (lenses > best_lenses) {
          best_lenses = lenses;
          result.best = state.family;
        }
      }
    }
    result.trace.push_back(rec);
    state.temperature *= schedule.cooling;
  }
  result.iterations = result.trace.size();
  result.census = digon_census_serial(result.best);
  return result;
}

}  // namespace lenskit
