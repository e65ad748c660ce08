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

#include "lenskit/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "lenskit/errors.hpp"

namespace lenskit {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
// Distances in [eps, kAmbiguity * eps) make vertex clustering unreliable.
constexpr double kAmbiguity = 1000.0;
constexpr double kDirectionTie = 1e-8;

struct RawPoint {
  double x, y;
  std::size_t i, j;
  Branch branch;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

double wrap(double a) {
  while (a < 0) a += kTwoPi;
  while (a >= kTwoPi) a -= kTwoPi;
  return a;
}

double arc_area(const Arrangement& arr, const HalfEdge& h) {
  const double c = arr.cx[h.circle], d = arr.cy[h.circle], r = arr.r[h.circle];
  const double t0 = h.theta0, t1 = h.theta0 + h.sweep;
  return 0.5 * (r * r * h.sweep + r * c * (std::sin(t1) - std::sin(t0)) -
                r * d * (std::cos(t1) - std::cos(t0)));
}

void add_vertices(const Family& f, Arrangement& arr) {
  std::vector<RawPoint> raw;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const PairRelation rel = classify_pair(f[i], f[j]);
      if (is_tangent(rel)) {
        throw DegenerateInput("circles " + std::to_string(i) + " and " + std::to_string(j) +
                              " touch; float mode needs transversal crossings, use the exact "
                              "census");
      }
      for (const AlgebraicPoint& p : intersection_points(f[i], f[j], i, j)) {
        const auto [x, y] = p.to_double();
        raw.push_back({(x - arr.shift_x) * arr.scale, (y - arr.shift_y) * arr.scale, i, j,
                       p.branch()});
      }
    }
  }
  std::vector<std::size_t> parent(raw.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t a = 0; a < raw.size(); ++a) {
    for (std::size_t b = a + 1; b < raw.size(); ++b) {
      const double d = std::hypot(raw[a].x - raw[b].x, raw[a].y - raw[b].y);
      if (d < arr.eps) {
        parent[find_root(parent, a)] = find_root(parent, b);
      } else if (d < kAmbiguity * arr.eps) {
        throw DegenerateInput("intersection points at distance " + std::to_string(d) +
                              " cannot be clustered reliably in float mode; use the exact "
                              "census");
      }
    }
  }
  std::vector<std::size_t> cluster(raw.size(), std::numeric_limits<std::size_t>::max());
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t a = 0; a < raw.size(); ++a) {
    const std::size_t root = find_root(parent, a);
    if (cluster[root] == std::numeric_limits<std::size_t>::max()) {
      cluster[root] = members.size();
      members.emplace_back();
    }
    members[cluster[root]].push_back(a);
  }
  for (const auto& group : members) {
    ArrVertex v;
    for (std::size_t a : group) {
      v.x += raw[a].x / static_cast<double>(group.size());
      v.y += raw[a].y / static_cast<double>(group.size());
      v.circles.push_back(raw[a].i);
      v.circles.push_back(raw[a].j);
    }
    for (std::size_t a : group) {
      for (std::size_t b : group) {
        if (a != b && raw[a].i == raw[b].i && raw[a].j == raw[b].j) {
          throw DegenerateInput("both crossings of circles " + std::to_string(raw[a].i) + " and " +
                                std::to_string(raw[a].j) + " fall within eps");
        }
      }
      v.merge_radius = std::max(v.merge_radius, std::hypot(raw[a].x - v.x, raw[a].y - v.y));
    }
    std::sort(v.circles.begin(), v.circles.end());
    v.circles.erase(std::unique(v.circles.begin(), v.circles.end()), v.circles.end());
    arr.vertices.push_back(std::move(v));
  }
}

void add_half_edges(Arrangement& arr) {
  for (std::size_t k = 0; k < arr.n; ++k) {
    std::vector<std::pair<double, std::size_t>> around;
    for (std::size_t v = 0; v < arr.vertices.size(); ++v) {
      const auto& cs = arr.vertices[v].circles;
      if (std::binary_search(cs.begin(), cs.end(), k)) {
        around.emplace_back(
            wrap(std::atan2(arr.vertices[v].y - arr.cy[k], arr.vertices[v].x - arr.cx[k])), v);
      }
    }
    std::sort(around.begin(), around.end());
    if (around.empty()) {
      const std::size_t h = arr.half_edges.size();
      arr.half_edges.push_back({k, std::nullopt, std::nullopt, true, 0.0, kTwoPi, h + 1, h, 0});
      arr.half_edges.push_back({k, std::nullopt, std::nullopt, false, 0.0, -kTwoPi, h, h + 1, 0});
      continue;
    }
    const std::size_t m = around.size();
    for (std::size_t t = 0; t < m; ++t) {
      const auto [a0, v0] = around[t];
      const auto [a1, v1] = around[(t + 1) % m];
      double sweep = a1 - a0;
      if (sweep <= 0) sweep += kTwoPi;
      const std::size_t h = arr.half_edges.size();
      arr.half_edges.push_back({k, v0, v1, true, a0, sweep, h + 1, 0, 0});
      arr.half_edges.push_back({k, v1, v0, false, a0 + sweep, -sweep, h, 0, 0});
    }
  }
}

void link_rotation(Arrangement& arr) {
  std::vector<std::vector<std::pair<double, std::size_t>>> outgoing(arr.vertices.size());
  for (std::size_t h = 0; h < arr.half_edges.size(); ++h) {
    const HalfEdge& e = arr.half_edges[h];
    if (!e.source) continue;
    const double dir = e.theta0 + (e.ccw ? 0.5 : -0.5) * std::numbers::pi;
    outgoing[*e.source].emplace_back(std::atan2(std::sin(dir), std::cos(dir)), h);
  }
  std::vector<std::size_t> position(arr.half_edges.size(), 0);
  for (auto& out : outgoing) {
    std::sort(out.begin(), out.end());
    for (std::size_t t = 0; t < out.size(); ++t) {
      const double gap = t + 1 < out.size() ? out[t + 1].first - out[t].first
                                            : out[0].first + kTwoPi - out[t].first;
      if (gap < kDirectionTie) {
        throw DegenerateInput("arcs leave a vertex in the same direction; use the exact census");
      }
      position[out[t].second] = t;
    }
  }
  for (HalfEdge& h : arr.half_edges) {
    if (!h.target) continue;
    const auto& out = outgoing[*h.target];
    const std::size_t t = position[h.twin];
    h.next = out[(t + out.size() - 1) % out.size()].second;
  }
}

void trace_faces(Arrangement& arr) {
  std::vector<bool> seen(arr.half_edges.size(), false);
  for (std::size_t start = 0; start < arr.half_edges.size(); ++start) {
    if (seen[start]) continue;
    ArrFace face;
    std::size_t h = start;
    do {
      if (seen[h]) throw InternalInconsistency("half-edge cycles overlap");
      seen[h] = true;
      arr.half_edges[h].face = arr.faces.size();
      face.boundary.push_back(h);
      face.area += arc_area(arr, arr.half_edges[h]);
      h = arr.half_edges[h].next;
    } while (h != start);
    face.edge_count = face.boundary.size();
    face.bounded = face.area > 0;

    const HalfEdge& e = arr.half_edges[face.boundary.front()];
    const double mid = e.theta0 + 0.5 * e.sweep;
    const double mx = arr.cx[e.circle] + arr.r[e.circle] * std::cos(mid);
    const double my = arr.cy[e.circle] + arr.r[e.circle] * std::sin(mid);
    double clearance = arr.r[e.circle];
    for (std::size_t k = 0; k < arr.n; ++k) {
      if (k == e.circle) continue;
      clearance = std::min(clearance, std::abs(std::hypot(mx - arr.cx[k], my - arr.cy[k]) - arr.r[k]));
    }
    // Step off the arc toward its left side, where the face lies.
    const double toward = e.ccw ? -0.5 * clearance : 0.5 * clearance;
    face.px = mx + toward * std::cos(mid);
    face.py = my + toward * std::sin(mid);
    face.inside.resize(arr.n);
    for (std::size_t k = 0; k < arr.n; ++k) {
      face.inside[k] = k == e.circle
                           ? e.ccw
                           : std::hypot(face.px - arr.cx[k], face.py - arr.cy[k]) < arr.r[k];
    }
    arr.faces.push_back(std::move(face));
  }
}

}  // namespace

Arrangement build_arrangement(const Family& f, double eps) {
  if (!(eps > 0)) throw InvalidInput("eps must be positive");
  Arrangement arr;
  arr.n = f.size();
  arr.eps = eps;
  if (arr.n == 0) return arr;
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  for (const Circle& c : f.circles()) {
    const double x = c.center().x.get_d(), y = c.center().y.get_d(), r = c.approx_radius();
    x0 = std::min(x0, x - r);
    x1 = std::max(x1, x + r);
    y0 = std::min(y0, y - r);
    y1 = std::max(y1, y + r);
  }
  arr.shift_x = 0.5 * (x0 + x1);
  arr.shift_y = 0.5 * (y0 + y1);
  arr.scale = 2.0 / std::hypot(x1 - x0, y1 - y0);
  for (const Circle& c : f.circles()) {
    arr.cx.push_back((c.center().x.get_d() - arr.shift_x) * arr.scale);
    arr.cy.push_back((c.center().y.get_d() - arr.shift_y) * arr.scale);
    arr.r.push_back(c.approx_radius() * arr.scale);
  }
  add_vertices(f, arr);
  add_half_edges(arr);
  link_rotation(arr);
  trace_faces(arr);
  const auto unbounded = std::count_if(arr.faces.begin(), arr.faces.end(),
                                       [](const ArrFace& face) { return !face.bounded; });
  if (unbounded != 1) {
    throw InternalInconsistency("arrangement has " + std::to_string(unbounded) +
                                " unbounded faces");
  }
  return arr;
}

DigonCensus census_via_faces(const Arrangement& arr) {
  DigonCensus out;
  out.n = arr.n;
  for (const ArrFace& face : arr.faces) {
    if (!face.bounded || face.edge_count != 2) continue;
    const std::size_t a = arr.half_edges[face.boundary[0]].circle;
    const std::size_t b = arr.half_edges[face.boundary[1]].circle;
    if (a == b) continue;
    if (face.inside[a] && face.inside[b]) {
      out.lens_pairs.push_back({std::min(a, b), std::max(a, b)});
    } else if (face.inside[a]) {
      out.lune_pairs.push_back({a, b});
    } else if (face.inside[b]) {
      out.lune_pairs.push_back({b, a});
    }
  }
  for (auto* list : {&out.lens_pairs, &out.lune_pairs}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  return out;
}

EulerVerdict euler_check(const Arrangement& arr) {
  EulerVerdict v{arr.vertices.size(), arr.edge_count(), arr.faces.size(), arr.n <= 1};
  if (v.bypassed) return v;
  const auto chi = static_cast<long>(v.vertices) - static_cast<long>(v.edges) +
                   static_cast<long>(v.faces);
  if (chi != 2) {
    throw InternalInconsistency("V - E + F = " + std::to_string(chi) + "\n" +
                                arrangement_to_json(arr).dump());
  }
  return v;
}

Json arrangement_to_json(const Arrangement& arr) {
  Json vertices = Json::array();
  for (const ArrVertex& v : arr.vertices) {
    vertices.push_back({{"x", v.x}, {"y", v.y}, {"circles", v.circles}});
  }
  Json half_edges = Json::array();
  for (const HalfEdge& h : arr.half_edges) {
    half_edges.push_back({{"circle", h.circle},
                          {"source", h.source ? Json(*h.source) : Json()},
                          {"target", h.target ? Json(*h.target) : Json()},
                          {"ccw", h.ccw},
                          {"twin", h.twin},
                          {"next", h.next},
                          {"face", h.face}});
  }
  Json faces = Json::array();
  for (const ArrFace& face : arr.faces) {
    Json inside = Json::array();
    for (std::size_t k = 0; k < face.inside.size(); ++k) {
      if (face.inside[k]) inside.push_back(k);
    }
    faces.push_back({{"edges", face.edge_count},
                     {"bounded", face.bounded},
                     {"boundary", face.boundary},
                     {"point", {face.px, face.py}},
                     {"inside", inside}});
  }
  return {{"n", arr.n},
          {"scale", arr.scale},
          {"vertices", vertices},
          {"half_edges", half_edges},
          {"faces", faces}};
}

}  // namespace lenskit
