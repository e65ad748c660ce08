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

#include "lenskit/census.hpp"

#include <algorithm>

#include "lenskit/errors.hpp"
#include "lenskit/parallel.hpp"

namespace lenskit {

namespace {

std::vector<IndexPair> upper_pairs(std::size_t n) {
  std::vector<IndexPair> out;
  out.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back({i, j});
  }
  return out;
}

}  // namespace

std::size_t DigonCensus::lune_pair_count() const {
  std::vector<IndexPair> unordered;
  unordered.reserve(lune_pairs.size());
  for (const IndexPair& p : lune_pairs) {
    unordered.push_back({std::min(p.i, p.j), std::max(p.i, p.j)});
  }
  std::sort(unordered.begin(), unordered.end());
  return static_cast<std::size_t>(std::unique(unordered.begin(), unordered.end()) -
                                  unordered.begin());
}

// ---------------------------------------------------------------------------
// CensusEngine

CensusEngine::CensusEngine(const Family& f, int threads) : family_(f) {
  const std::size_t n = family_.size();
  circles_.reserve(n);
  for (const Circle& c : family_.circles()) {
    circles_.push_back({FloatInterval::enclose(c.center().x), FloatInterval::enclose(c.center().y),
                        FloatInterval::enclose(c.radius_sq())});
  }
  pairs_.resize(n * n);
  const std::vector<IndexPair> work = upper_pairs(n);
  const auto count = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    const auto [i, j] = work[static_cast<std::size_t>(t)];
    for (const auto& [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      PairData& pd = pairs_[a * n + b];
      pd.relation = classify_pair(family_[a], family_[b]);
      pd.points = intersection_points(family_[a], family_[b], a, b);
      for (const AlgebraicPoint& p : pd.points) {
        const auto [x, y] = p.approx();
        pd.approx.push_back({x, y});
      }
    }
  }
}

const CensusEngine::PairData& CensusEngine::pair(std::size_t i, std::size_t j) const {
  return pairs_[i * family_.size() + j];
}

Side CensusEngine::side(const PairData& pd, std::size_t point, std::size_t circle) const {
  const PointApprox& p = pd.approx[point];
  const CircleApprox& c = circles_[circle];
  const FloatInterval pw = square(p.x - c.cx) + square(p.y - c.cy) - c.r2;
  if (auto s = pw.certain_sign(); s && *s != 0) return *s < 0 ? Side::Inside : Side::Outside;
  return side_of_circle(pd.points[point], family_[circle]);
}

Side CensusEngine::side(const AlgebraicPoint& p, std::size_t circle) const {
  return side_of_circle(p, family_[circle]);
}

bool CensusEngine::disc_inside(std::size_t k, std::size_t m) const {
  return relation(k, m) == PairRelation::InternallyTangent &&
         family_[k].radius_sq() < family_[m].radius_sq();
}

void CensusEngine::check_pair(std::size_t i, std::size_t j, DigonKind kind) const {
  const std::size_t n = family_.size();
  if (i >= n || j >= n || i == j) throw InvalidInput("bad circle indices for a digon");
  if (relation(i, j) != PairRelation::TwoPoints) {
    throw InvalidInput(std::string(kind == DigonKind::Lens ? "lens" : "lune") +
                       " candidate needs two intersection points, got " +
                       std::string(to_string(relation(i, j))));
  }
}

bool CensusEngine::region_blocked(std::size_t k, std::size_t i, std::size_t j, DigonKind kind,
                                  const CensusOptions& opts) const {
  check_pair(i, j, kind);
  if (k >= family_.size() || k == i || k == j) throw InvalidInput("bad blocking circle index");
  const bool lens = kind == DigonKind::Lens;

  // Edge on C_i: C_i inside D_j for a lens, outside for a lune. The face lies
  // inside D_i in both cases.
  const PairData& ki = pair(k, i);
  int vertex_hits = 0;
  for (std::size_t t = 0; t < ki.points.size(); ++t) {
    const Side s = side(ki, t, j);
    if (s == Side::On) {
      ++vertex_hits;
      continue;
    }
    if (s != (lens ? Side::Inside : Side::Outside)) continue;
    if (ki.points.size() == 2 || !opts.lenient_tangency_faces) return true;
    if (disc_inside(k, i)) return true;
  }

  // Edge on C_j: C_j inside D_i. The face is inside D_j for a lens, outside
  // for a lune. Vertices were already seen from the C_i side.
  const PairData& kj = pair(k, j);
  for (std::size_t t = 0; t < kj.points.size(); ++t) {
    if (side(kj, t, i) != Side::Inside) continue;
    if (kj.points.size() == 2 || !opts.lenient_tangency_faces) return true;
    if (disc_inside(k, j) == lens) return true;
  }

  if (vertex_hits < 2) return false;

  // C_k passes through both vertices. The common chord is perpendicular to
  // c_j - c_i, so the midpoints of the two arcs of C_k are
  // o_k +- sqrt(r_k^2 / |c_j - c_i|^2) (c_j - c_i).
  const Circle& ck = family_[k];
  const Point& ci = family_[i].center();
  const Point& cj = family_[j].center();
  const Rational ux = cj.x - ci.x;
  const Rational uy = cj.y - ci.y;
  const QuadraticNumber scale = qn_sqrt(ck.radius_sq() / (ux * ux + uy * uy));
  const Rational& radicand = scale.c();
  const Rational s = scale.is_rational() ? scale.a() : scale.b();
  int chord_side = 0;
  for (const Branch b : {Branch::Plus, Branch::Minus}) {
    const Rational sign_s = b == Branch::Plus ? s : Rational(-s);
    const AlgebraicPoint sample =
        scale.is_rational()
            ? AlgebraicPoint(Point{ck.center().x + sign_s * ux, ck.center().y + sign_s * uy},
                             Point{0, 0}, 0, k, k, b)
            : AlgebraicPoint(ck.center(), Point{sign_s * ux, sign_s * uy}, radicand, k, k, b);
    // The sample is exactly on C_k and strictly on one side of the chord line
    // (the radical axis of C_i and C_j); the two samples lie on opposite sides.
    const int across = qn_sign(power(sample, family_[i]) - power(sample, family_[j]));
    if (qn_sign(power(sample, ck)) != 0 || across == 0 || across == chord_side) {
      throw InternalInconsistency("arc sample of circle " + std::to_string(k) +
                                  " failed exact verification");
    }
    chord_side = across;
    if (side(sample, i) == Side::Inside &&
        side(sample, j) == (lens ? Side::Inside : Side::Outside)) {
      return true;
    }
  }
  return false;
}

bool CensusEngine::digon(std::size_t i, std::size_t j, DigonKind kind,
                         const CensusOptions& opts) const {
  for (std::size_t k = 0; k < family_.size(); ++k) {
    if (k == i || k == j) continue;
    if (region_blocked(k, i, j, kind, opts)) return false;
  }
  return true;
}

bool CensusEngine::is_lens(std::size_t i, std::size_t j, const CensusOptions& opts) const {
  if (i == j || relation(i, j) != PairRelation::TwoPoints) return false;
  return digon(i, j, DigonKind::Lens, opts);
}

bool CensusEngine::is_lune(std::size_t i, std::size_t j, const CensusOptions& opts) const {
  check_pair(i, j, DigonKind::Lune);
  return digon(i, j, DigonKind::Lune, opts);
}

namespace {

// Per unordered pair: lens, lune (i, j), lune (j, i).
struct PairFlags {
  bool lens = false;
  bool lune_ij = false;
  bool lune_ji = false;
};

DigonCensus assemble(const CensusEngine& engine, const std::vector<IndexPair>& work,
                     const std::vector<PairFlags>& flags) {
  DigonCensus out;
  out.n = engine.family().size();
  for (std::size_t t = 0; t < work.size(); ++t) {
    const auto [i, j] = work[t];
    if (flags[t].lens) out.lens_pairs.push_back({i, j});
    if (flags[t].lune_ij) out.lune_pairs.push_back({i, j});
    if (flags[t].lune_ji) out.lune_pairs.push_back({j, i});
    const PairRelation rel = engine.relation(i, j);
    if (is_tangent(rel)) {
      out.tangent_pairs.push_back({{i, j}, *engine.points(i, j).front().rational_point(),
                                   rel == PairRelation::InternallyTangent});
    }
  }
  std::sort(out.lune_pairs.begin(), out.lune_pairs.end());
  return out;
}

PairFlags evaluate(const CensusEngine& engine, IndexPair p, const CensusOptions& opts) {
  PairFlags flags;
  if (engine.relation(p.i, p.j) != PairRelation::TwoPoints) return flags;
  flags.lens = engine.is_lens(p.i, p.j, opts);
  flags.lune_ij = engine.is_lune(p.i, p.j, opts);
  flags.lune_ji = engine.is_lune(p.j, p.i, opts);
  return flags;
}

}  // namespace

DigonCensus CensusEngine::census_serial(const CensusOptions& opts) const {
  const std::vector<IndexPair> work = upper_pairs(family_.size());
  std::vector<PairFlags> flags(work.size());
  for (std::size_t t = 0; t < work.size(); ++t) flags[t] = evaluate(*this, work[t], opts);
  return assemble(*this, work, flags);
}

DigonCensus CensusEngine::census_parallel(int threads, const CensusOptions& opts) const {
  const std::vector<IndexPair> work = upper_pairs(family_.size());
  std::vector<PairFlags> flags(work.size());
  const auto count = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    flags[static_cast<std::size_t>(t)] = evaluate(*this, work[static_cast<std::size_t>(t)], opts);
  }
  return assemble(*this, work, flags);
}

// ---------------------------------------------------------------------------
// Free functions

bool region_blocked(const Family& f, std::size_t k, std::size_t i, std::size_t j, DigonKind kind,
                    const CensusOptions& opts) {
  return CensusEngine(f).region_blocked(k, i, j, kind, opts);
}

bool is_lens(const Family& f, std::size_t i, std::size_t j, const CensusOptions& opts) {
  return CensusEngine(f).is_lens(i, j, opts);
}

bool is_lune(const Family& f, std::size_t i, std::size_t j, const CensusOptions& opts) {
  return CensusEngine(f).is_lune(i, j, opts);
}

DigonCensus digon_census(const Family& f, const CensusOptions& opts) {
  const int threads = configured_threads();
  return CensusEngine(f, threads).census_parallel(threads, opts);
}

DigonCensus digon_census_serial(const Family& f, const CensusOptions& opts) {
  return CensusEngine(f).census_serial(opts);
}

CentersGraph centers_graph(const Family& f, const DigonCensus& census) {
  CentersGraph g;
  for (const Circle& c : f.circles()) g.vertices.push_back(c.center());
  for (const IndexPair& p : census.lens_pairs) g.edges.push_back({p.i, p.j, EdgeColor::Red});
  for (const TangentPair& t : census.tangent_pairs) {
    g.edges.push_back({t.pair.i, t.pair.j, EdgeColor::Blue});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GeoEdge& a, const GeoEdge& b) {
    return std::pair{a.i, a.j} < std::pair{b.i, b.j};
  });
  return g;
}

GeoGraph lune_graph(const Family& f, const DigonCensus& census) {
  GeoGraph g;
  for (const Circle& c : f.circles()) g.vertices.push_back(c.center());
  std::vector<IndexPair> unordered;
  for (const IndexPair& p : census.lune_pairs) {
    unordered.push_back({std::min(p.i, p.j), std::max(p.i, p.j)});
  }
  std::sort(unordered.begin(), unordered.end());
  unordered.erase(std::unique(unordered.begin(), unordered.end()), unordered.end());
  for (const IndexPair& p : unordered) g.edges.push_back({p.i, p.j, std::nullopt});
  return g;
}

BoundReport check_bounds(const DigonCensus& census) {
  BoundReport r;
  r.n = census.n;
  r.lens_count = census.lens_count();
  r.lens_max = census.n >= 1 ? 2 * census.n - 2 : 0;
  r.lens_ok = r.lens_count <= r.lens_max;
  if (!r.lens_ok) r.lens_witness = census.lens_pairs;
  r.lune_count = census.lune_count();
  r.lune_pair_count = census.lune_pair_count();
  r.lune_vacuous = census.n < 3;
  r.lune_max = r.lune_vacuous ? 0 : 2 * census.n - 4;
  r.lune_ok = r.lune_vacuous || r.lune_pair_count <= r.lune_max;
  if (!r.lune_ok) r.lune_witness = census.lune_pairs;
  return r;
}

}  // namespace lenskit
