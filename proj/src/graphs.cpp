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

#include "lenskit/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "lenskit/errors.hpp"
#include "lenskit/parallel.hpp"

namespace lenskit {

namespace {

using nlohmann::ordered_json;

ordered_json point_json(const Point& p) { return {to_string(p.x), to_string(p.y)}; }

ordered_json edge_json(const GeoGraph& g, std::size_t e) {
  const GeoEdge& edge = g.edges[e];
  ordered_json out = {{"i", edge.i}, {"j", edge.j}};
  if (edge.color) out["color"] = std::string(to_string(*edge.color));
  return out;
}

ordered_json pair_json(const GeoGraph& g, EdgePair p) {
  return {{"first", edge_json(g, p.first)}, {"second", edge_json(g, p.second)}};
}

bool strictly_one_side(const Point& a, const Point& b, const Point& p, const Point& q) {
  const int s = orientation(a, b, p);
  return s != 0 && s == orientation(a, b, q);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orientation(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

IndexPair sorted_ends(const GeoEdge& e) { return {std::min(e.i, e.j), std::max(e.i, e.j)}; }

void scan_row(const GeoGraph& g, std::size_t a, std::vector<EdgePair>& out) {
  const Segment s = g.segment(a);
  for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
    if (is_avoiding(s, g.segment(b))) out.push_back({a, b});
  }
}

}  // namespace

std::string_view to_string(EdgeColor c) { return c == EdgeColor::Red ? "red" : "blue"; }

std::size_t GeoGraph::count(EdgeColor c) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [c](const GeoEdge& e) { return e.color == c; }));
}

bool is_avoiding(const Segment& e, const Segment& f) {
  if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) return false;
  return strictly_one_side(e.a, e.b, f.a, f.b) && strictly_one_side(f.a, f.b, e.a, e.b);
}

std::vector<EdgePair> find_avoiding_pairs_serial(const GeoGraph& g) {
  std::vector<EdgePair> out;
  for (std::size_t a = 0; a < g.edges.size(); ++a) scan_row(g, a, out);
  return out;
}

std::vector<EdgePair> find_avoiding_pairs_parallel(const GeoGraph& g, int threads) {
  const auto m = static_cast<std::ptrdiff_t>(g.edges.size());
  std::vector<std::vector<EdgePair>> rows(g.edges.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (std::ptrdiff_t a = 0; a < m; ++a) {
    scan_row(g, static_cast<std::size_t>(a), rows[static_cast<std::size_t>(a)]);
  }
  std::vector<EdgePair> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<EdgePair> find_avoiding_pairs(const GeoGraph& g) {
  return find_avoiding_pairs_parallel(g, configured_threads());
}

KlvVerdict klv_check(const GeoGraph& g) {
  KlvVerdict v;
  v.edges = g.edges.size();
  v.bound = g.vertices.empty() ? 0 : 2 * g.vertices.size() - 2;
  if (!find_avoiding_pairs(g).empty()) {
    v.status = KlvStatus::NotApplicable;
    return v;
  }
  if (v.edges > v.bound) {
    ordered_json w = {{"vertices", g.vertices.size()}, {"edges", v.edges}, {"bound", v.bound}};
    throw Falsification("avoiding-free graph with " + std::to_string(v.edges) + " edges on " +
                            std::to_string(g.vertices.size()) + " vertices",
                        w.dump());
  }
  return v;
}

std::array<std::size_t, 4> clockwise_quadrilateral(const GeoGraph& g, EdgePair pair) {
  const GeoEdge& e = g.edges[pair.first];
  const GeoEdge& f = g.edges[pair.second];
  for (const auto& [a1, a2] : {std::pair{e.i, e.j}, std::pair{e.j, e.i}}) {
    for (const auto& [a3, a4] : {std::pair{f.i, f.j}, std::pair{f.j, f.i}}) {
      const std::array<std::size_t, 4> q{a1, a2, a3, a4};
      bool clockwise = true;
      for (std::size_t t = 0; t < 4 && clockwise; ++t) {
        clockwise = orientation(g.vertices[q[t]], g.vertices[q[(t + 1) % 4]],
                                g.vertices[q[(t + 2) % 4]]) < 0;
      }
      if (clockwise) return q;
    }
  }
  throw InvalidInput("edges " + std::to_string(pair.first) + " and " +
                     std::to_string(pair.second) + " are not avoiding");
}

MainTheoremReport verify_main_theorem(const Family& f, const CentersGraph& g) {
  MainTheoremReport report;
  const std::vector<EdgePair> pairs = find_avoiding_pairs(g);
  report.avoiding_pairs = pairs.size();
  for (const EdgePair& p : pairs) {
    ordered_json w = pair_json(g, p);
    auto fail = [&](const std::string& why) { throw Falsification(why, w.dump()); };
    if (g.edges[p.first].color != EdgeColor::Red || g.edges[p.second].color != EdgeColor::Red) {
      fail("avoiding pair involves a non-red edge");
    }
    const std::array<std::size_t, 4> q = clockwise_quadrilateral(g, p);
    w["quadrilateral"] = q;
    const Circle& c1 = f[q[0]];
    const Circle& c2 = f[q[1]];
    const Circle& c3 = f[q[2]];
    const Circle& c4 = f[q[3]];
    if (classify_pair(c1, c3) != PairRelation::ExternallyTangent) {
      fail("circles A1 and A3 of an avoiding pair do not touch externally");
    }
    if (classify_pair(c2, c4) != PairRelation::ExternallyTangent) {
      fail("circles A2 and A4 of an avoiding pair do not touch externally");
    }
    const Point m = *intersection_points(c1, c3).front().rational_point();
    const Point m24 = *intersection_points(c2, c4).front().rational_point();
    w["M"] = point_json(m);
    if (!(m == m24)) fail("the two tangency points of an avoiding pair differ");
    report.certificates.push_back({p, q, m});
  }
  return report;
}

Resolution resolve_avoiding_pairs(const CentersGraph& g) {
  Resolution res;
  res.graph = g;
  std::vector<std::size_t> origin(g.edges.size());
  for (std::size_t e = 0; e < origin.size(); ++e) origin[e] = e;

  std::set<IndexPair> blue;
  for (const GeoEdge& e : g.edges) {
    if (e.color == EdgeColor::Blue) blue.insert(sorted_ends(e));
  }
  std::set<IndexPair> charged;

  for (;;) {
    const std::vector<EdgePair> pairs = find_avoiding_pairs(res.graph);
    if (pairs.empty()) break;
    const EdgePair local = pairs.front();
    const EdgePair p{origin[local.first], origin[local.second]};
    ordered_json w = pair_json(g, p);
    const GeoEdge& e = res.graph.edges[local.first];
    const GeoEdge& f = res.graph.edges[local.second];
    if (e.color != EdgeColor::Red || f.color != EdgeColor::Red) {
      throw Falsification("avoiding pair involves a non-red edge", w.dump());
    }
    const std::array<std::size_t, 4> q = clockwise_quadrilateral(res.graph, local);
    const IndexPair diagonal{std::min(q[0], q[2]), std::max(q[0], q[2])};
    if (!blue.contains(diagonal)) {
      w["quadrilateral"] = q;
      throw Falsification("avoiding pair without a blue diagonal A1A3", w.dump());
    }
    const std::size_t drop =
        sorted_ends(e) < sorted_ends(f) ? local.second : local.first;
    Charge c{p, res.graph.edges[drop], diagonal, !charged.insert(diagonal).second};
    res.charges.push_back(c);
    res.graph.edges.erase(res.graph.edges.begin() + static_cast<std::ptrdiff_t>(drop));
    origin.erase(origin.begin() + static_cast<std::ptrdiff_t>(drop));
  }

  for (const Charge& c : res.charges) {
    if (c.conflict) {
      ordered_json w = pair_json(g, c.pair);
      w["blue_edge"] = {c.blue_edge.i, c.blue_edge.j};
      throw Falsification("blue edge charged twice", w.dump());
    }
  }
  if (g.count(EdgeColor::Red) > res.graph.edges.size()) {
    ordered_json w = {{"red_edges", g.count(EdgeColor::Red)},
                      {"resolved_edges", res.graph.edges.size()}};
    throw Falsification("resolution lost more edges than it charged", w.dump());
  }
  return res;
}

bool is_bipartite(const GeoGraph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const GeoEdge& e : g.edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<int> color(n, -1);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool segments_intersect(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(s.a, s.b, t.a) || on_segment(s.a, s.b, t.b) || on_segment(t.a, t.b, s.a) ||
         on_segment(t.a, t.b, s.b);
}

bool is_plane_embedding(const GeoGraph& g) {
  for (std::size_t a = 0; a < g.edges.size(); ++a) {
    const GeoEdge& e = g.edges[a];
    const Segment s = g.segment(a);
    for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
      const GeoEdge& f = g.edges[b];
      const Segment t = g.segment(b);
      const bool shares_i = e.i == f.i || e.i == f.j;
      const bool shares_j = e.j == f.i || e.j == f.j;
      if (shares_i && shares_j) return false;
      if (!shares_i && !shares_j) {
        if (segments_intersect(s, t)) return false;
        continue;
      }
      // One common endpoint: the far ends must not lie on the other segment.
      const Point& far_s = shares_i ? s.b : s.a;
      const Point& far_t = (f.i == e.i || f.i == e.j) ? t.b : t.a;
      if (on_segment(s.a, s.b, far_t) || on_segment(t.a, t.b, far_s)) return false;
    }
  }
  return true;
}

std::vector<Point> perturb_general_position(std::span<const Point> points, std::uint64_t seed,
                                            std::size_t budget) {
  std::vector<Point> base(points.begin(), points.end());
  if (base.size() < 3) return base;
  std::optional<Rational> min_d2;
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = a + 1; b < base.size(); ++b) {
      const Rational d2 = squared_distance(base[a], base[b]);
      if (sgn(d2) == 0) throw InvalidInput("duplicate points cannot be put in general position");
      if (!min_d2 || d2 < *min_d2) min_d2 = d2;
    }
  }
  if (!collinear_triple_exists(base)) return base;

  // Rational lower bound on the minimum distance.
  Rational dist(std::nextafter(std::sqrt(min_d2->get_d()), 0.0));
  while (dist * dist > *min_d2) dist /= 2;
  // Per-coordinate steps of at most dist / 2^17 keep every move below dist / 2^16.
  const Rational unit = dist / Rational(mpz_class(1) << 27);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(-1023, 1023);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<Point> moved = base;
    for (Point& p : moved) {
      p.x += unit * draw(rng);
      p.y += unit * draw(rng);
    }
    if (!collinear_triple_exists(moved)) return moved;
  }
  throw Error("general position not reached within " + std::to_string(budget) + " attempts");
}

}  // namespace lenskit
