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

#include "lenskit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "lenskit/errors.hpp"

namespace lenskit {

namespace {

Rational field(const Json& circle, const char* key, std::size_t index) {
  const auto it = circle.find(key);
  if (it == circle.end()) {
    throw InvalidInput("circle " + std::to_string(index) + " lacks \"" + key + "\"");
  }
  if (it->is_string()) return parse_rational(it->get<std::string>());
  if (it->is_number_integer()) return parse_rational(std::to_string(it->get<long long>()));
  throw InvalidInput("circle " + std::to_string(index) + " field \"" + key +
                     "\" must be a rational string");
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Disc {
  double x, y, r;
};

Disc approx_disc(const Circle& c) {
  return {c.center().x.get_d(), c.center().y.get_d(), c.approx_radius()};
}

bool inside(const Disc& d, double x, double y) {
  return std::hypot(x - d.x, y - d.y) < d.r;
}

// SVG arc from p to q along circle `on`, taking the arc whose midpoint is
// inside `other` when want_inside holds, outside otherwise. Coordinates are
// written with y flipped.
std::string arc_to(const Disc& on, const std::pair<double, double>& p,
                   const std::pair<double, double>& q, const Disc& other, bool want_inside) {
  const double tp = std::atan2(p.second - on.y, p.first - on.x);
  const double tq = std::atan2(q.second - on.y, q.first - on.x);
  double span = tq - tp;
  while (span <= 0) span += 2 * std::numbers::pi;
  const double mid = tp + span / 2;
  const bool mid_inside = inside(other, on.x + on.r * std::cos(mid), on.y + on.r * std::sin(mid));
  const bool ccw = mid_inside == want_inside;
  if (!ccw) span = 2 * std::numbers::pi - span;
  // Flipping y turns counterclockwise into the negative SVG sweep.
  return "A " + fixed(on.r) + " " + fixed(on.r) + " 0 " + (span > std::numbers::pi ? "1" : "0") +
         " " + (ccw ? "0" : "1") + " " + fixed(q.first) + " " + fixed(-q.second);
}

std::string digon_path(const Family& f, std::size_t i, std::size_t j, bool lens) {
  const std::vector<AlgebraicPoint> pts = intersection_points(f[i], f[j]);
  const auto p = pts[0].to_double();
  const auto q = pts[1].to_double();
  const Disc di = approx_disc(f[i]);
  const Disc dj = approx_disc(f[j]);
  return "M " + fixed(p.first) + " " + fixed(-p.second) + " " + arc_to(di, p, q, dj, lens) + " " +
         arc_to(dj, q, p, di, true) + " Z";
}

}  // namespace

Json family_to_json(const Family& f) {
  Json circles = Json::array();
  for (const Circle& c : f.circles()) {
    Json item = {{"cx", to_string(c.center().x)}, {"cy", to_string(c.center().y)}};
    if (const auto r = c.radius()) {
      item["r"] = to_string(*r);
    } else {
      item["r2"] = to_string(c.radius_sq());
    }
    circles.push_back(std::move(item));
  }
  return {{"circles", std::move(circles)}};
}

Family family_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("circles") || !doc["circles"].is_array()) {
    throw InvalidInput("family file must be an object with a \"circles\" array");
  }
  std::vector<Circle> circles;
  std::size_t index = 0;
  for (const Json& item : doc["circles"]) {
    if (!item.is_object()) throw InvalidInput("circle " + std::to_string(index) + " is not an object");
    const Point center{field(item, "cx", index), field(item, "cy", index)};
    const bool has_r = item.contains("r");
    if (has_r == item.contains("r2")) {
      throw InvalidInput("circle " + std::to_string(index) + " needs exactly one of \"r\", \"r2\"");
    }
    if (has_r) {
      const Rational r = field(item, "r", index);
      if (sgn(r) <= 0) throw InvalidInput("circle " + std::to_string(index) + " has radius <= 0");
      circles.push_back(Circle::with_radius(center, r));
    } else {
      circles.emplace_back(center, field(item, "r2", index));
    }
    ++index;
  }
  return make_family(std::move(circles));
}

Family read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path.string());
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw InvalidInput(path.string() + " is not valid JSON");
  return family_from_json(doc);
}

void write_family_file(const std::filesystem::path& path, const Family& f) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << family_to_json(f).dump(2) << '\n';
}

Json pair_list_json(const std::vector<IndexPair>& pairs) {
  Json out = Json::array();
  for (const IndexPair& p : pairs) out.push_back({p.i, p.j});
  return out;
}

Json tangent_list_json(const std::vector<TangentPair>& pairs) {
  Json out = Json::array();
  for (const TangentPair& t : pairs) {
    out.push_back({{"pair", {t.pair.i, t.pair.j}},
                   {"point", {to_string(t.point.x), to_string(t.point.y)}},
                   {"internal", t.internal}});
  }
  return out;
}

Json trace_record_json(const TraceRecord& r) {
  return {{"iteration", r.iteration},
          {"temperature", r.temperature},
          {"lens_count", r.lens_count},
          {"accepted", r.accepted}};
}

std::string render_svg(const Family& f, const DigonCensus& census, Highlight highlight) {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (std::size_t t = 0; t < f.size(); ++t) {
    const Disc d = approx_disc(f[t]);
    x0 = t == 0 ? d.x - d.r : std::min(x0, d.x - d.r);
    x1 = t == 0 ? d.x + d.r : std::max(x1, d.x + d.r);
    y0 = t == 0 ? d.y - d.r : std::min(y0, d.y - d.r);
    y1 = t == 0 ? d.y + d.r : std::max(y1, d.y + d.r);
  }
  const double mx = 0.1 * (x1 - x0);
  const double my = 0.1 * (y1 - y0);
  const double stroke = 0.002 * std::hypot(x1 - x0, y1 - y0);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fixed(x0 - mx)
      << " " << fixed(-(y1 + my)) << " " << fixed(x1 - x0 + 2 * mx) << " "
      << fixed(y1 - y0 + 2 * my) << "\">\n";
  if (highlight == Highlight::Lenses) {
    for (const IndexPair& p : census.lens_pairs) {
      svg << "  <path class=\"lens\" d=\"" << digon_path(f, p.i, p.j, true)
          << "\" fill=\"#f4a261\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
    }
  } else if (highlight == Highlight::Lunes) {
    for (const IndexPair& p : census.lune_pairs) {
      svg << "  <path class=\"lune\" d=\"" << digon_path(f, p.i, p.j, false)
          << "\" fill=\"#8ecae6\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
    }
  }
  for (std::size_t t = 0; t < f.size(); ++t) {
    const Disc d = approx_disc(f[t]);
    svg << "  <circle cx=\"" << fixed(d.x) << "\" cy=\"" << fixed(-d.y) << "\" r=\"" << fixed(d.r)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fixed(stroke) << "\"/>\n";
  }
  if (highlight == Highlight::Graph) {
    const CentersGraph g = centers_graph(f, census);
    for (const GeoEdge& e : g.edges) {
      const Disc a = approx_disc(f[e.i]);
      const Disc b = approx_disc(f[e.j]);
      svg << "  <line x1=\"" << fixed(a.x) << "\" y1=\"" << fixed(-a.y) << "\" x2=\"" << fixed(b.x)
          << "\" y2=\"" << fixed(-b.y) << "\" stroke=\"" << to_string(*e.color)
          << "\" stroke-width=\"" << fixed(2 * stroke) << "\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lenskit
