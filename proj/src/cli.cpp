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


#include "lenskit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "lenskit/arrangement.hpp"
#include "lenskit/census.hpp"
#include "lenskit/errors.hpp"
#include "lenskit/generators.hpp"
#include "lenskit/graphs.hpp"
#include "lenskit/io.hpp"

namespace lenskit {

namespace {

Json index_pair(std::size_t i, std::size_t j) { return Json::array({i, j}); }

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

// Theorem checks on the family left after dropping outer circles of
// internally tangent pairs; indices in the output refer to the input family.
struct TheoremRun {
  Json lenses;
  Json lunes;
  Json main;
  Json klv;
  std::size_t avoiding_pairs = 0;
};

TheoremRun run_theorems(const Family& f, const DigonCensus& census) {
  TheoremRun run;
  const BoundReport bounds = check_bounds(census);
  run.lenses = {{"status", "pass"}, {"lens_count", bounds.lens_count}, {"bound", bounds.lens_max}};
  if (!bounds.lens_ok) {
    throw Falsification("more than 2n - 2 lenses",
                        Json{{"family", family_to_json(f)},
                             {"lens_pairs", pair_list_json(bounds.lens_witness)}}
                            .dump());
  }

  const GeoGraph lunes = lune_graph(f, census);
  const bool bipartite = is_bipartite(lunes);
  const bool plane = is_plane_embedding(lunes);
  run.lunes = {{"status", bounds.lune_vacuous ? "vacuous" : "pass"},
               {"lune_pairs", bounds.lune_pair_count},
               {"bound", bounds.lune_max},
               {"bipartite", bipartite},
               {"plane", plane}};
  if (!bounds.lune_ok || !bipartite || !plane) {
    throw Falsification("lune graph violates the lune theorem",
                        Json{{"family", family_to_json(f)},
                             {"lune_pairs", pair_list_json(census.lune_pairs)},
                             {"bipartite", bipartite},
                             {"plane", plane}}
                            .dump());
  }

  const Reduction red = reduce_internal_tangencies(f);
  const DigonCensus rc = red.family.size() == f.size() ? census : digon_census(red.family);
  const CentersGraph g = centers_graph(red.family, rc);
  const MainTheoremReport main = verify_main_theorem(red.family, g);
  run.avoiding_pairs = main.avoiding_pairs;
  Json removed = Json::array();
  {
    std::vector<bool> kept(f.size(), false);
    for (std::size_t k : red.kept) kept[k] = true;
    for (std::size_t t = 0; t < f.size(); ++t) {
      if (!kept[t]) removed.push_back(t);
    }
  }
  Json certs = Json::array();
  for (const QuadCertificate& c : main.certificates) {
    const GeoEdge& e = g.edges[c.pair.first];
    const GeoEdge& h = g.edges[c.pair.second];
    Json quad = Json::array();
    for (std::size_t v : c.quad) quad.push_back(red.kept[v]);
    certs.push_back({{"edges", Json::array({index_pair(red.kept[e.i], red.kept[e.j]),
                                            index_pair(red.kept[h.i], red.kept[h.j])})},
                     {"quadrilateral", quad},
                     {"M", point_json(c.touching_point)}});
  }
  run.main = {{"status", "pass"},
              {"removed_internal", removed},
              {"avoiding_pairs", main.avoiding_pairs},
              {"certificates", certs}};

  const Resolution res = resolve_avoiding_pairs(g);
  const KlvVerdict klv = klv_check(res.graph);
  Json charges = Json::array();
  for (const Charge& c : res.charges) {
    charges.push_back({{"removed", index_pair(red.kept[c.removed.i], red.kept[c.removed.j])},
                       {"blue", index_pair(red.kept[c.blue_edge.i], red.kept[c.blue_edge.j])},
                       {"conflict", c.conflict}});
  }
  const std::size_t red_edges = g.count(EdgeColor::Red);
  run.klv = {{"status", klv.status == KlvStatus::Pass ? "pass" : "not_applicable"},
             {"red_edges", red_edges},
             {"edges_after_resolution", klv.edges},
             {"bound", klv.bound},
             {"charges", charges}};
  return run;
}

Json census_report(const Family& f, const DigonCensus& c, const TheoremRun& t) {
  const BoundReport b = check_bounds(c);
  Json lunes = Json::array();
  for (const IndexPair& p : c.lune_pairs) lunes.push_back(index_pair(p.i, p.j));
  return {{"n", f.size()},
          {"lens_pairs", pair_list_json(c.lens_pairs)},
          {"lune_pairs", lunes},
          {"tangent_pairs", tangent_list_json(c.tangent_pairs)},
          {"lens_count", c.lens_count()},
          {"lune_count", c.lune_count()},
          {"bounds",
           {{"lens_max", b.lens_max},
            {"lens_ok", b.lens_ok},
            {"lune_max", b.lune_max},
            {"lune_ok", b.lune_ok},
            {"vacuous", b.lune_vacuous}}},
          {"avoiding_pairs", t.avoiding_pairs},
          {"theorem_verdicts",
           {{"lenses", t.lenses["status"]},
            {"lunes", t.lunes["status"]},
            {"main", t.main["status"]},
            {"klv", t.klv["status"]}}},
          {"lune_pair_count", b.lune_pair_count}};
}

bool same_digons(const DigonCensus& a, const DigonCensus& b) {
  return a.lens_pairs == b.lens_pairs && a.lune_pairs == b.lune_pairs &&
         a.tangent_pairs.size() == b.tangent_pairs.size();
}

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path);
  if (!file) throw InvalidInput("cannot write " + *path);
  file << text;
}

std::string family_text(const Family& f) { return family_to_json(f).dump(2) + "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lenskit: lenses, lunes and tangencies in pairwise intersecting circle families"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lenskit 0.1.0");

  std::string path;
  std::optional<std::string> output;

  CLI::App* census = app.add_subcommand("census", "Exact digon census of a family file");
  bool oracle = false, lenient = false;
  std::string engine = "exact";
  census->add_option("family", path, "Family JSON file")->required();
  census->add_flag("--oracle", oracle, "Cross-check against the float arrangement");
  census->add_option("--engine", engine, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  census->add_flag("--lenient-tangency-faces", lenient,
                   "Touching from outside does not destroy a digon");

  CLI::App* verify = app.add_subcommand("verify", "Check the bounds and structure theorems");
  std::vector<std::string> theorems{"lenses", "lunes", "main", "klv"};
  verify->add_option("family", path, "Family JSON file")->required();
  verify->add_option("--theorems", theorems, "Subset of lenses,lunes,main,klv")
      ->delimiter(',')
      ->check(CLI::IsMember({"lenses", "lunes", "main", "klv"}));

  CLI::App* generate = app.add_subcommand("generate", "Write a generated family");
  std::string kind;
  std::size_t n = 8;
  std::uint64_t seed = 1;
  std::size_t ext = 0, in = 0;
  std::vector<std::string> abscissas;
  std::string qa = "1", qb = "1", qc = "2", qd = "2";
  generate->add_option("kind", kind, "random, unit, pencil, touching-quad or tight")
      ->required()
      ->check(CLI::IsMember({"random", "unit", "pencil", "touching-quad", "tight"}));
  generate->add_option("--n", n, "Number of circles");
  generate->add_option("--seed", seed, "Random seed");
  generate->add_option("--external-tangencies", ext, "random: injected external tangencies");
  generate->add_option("--internal-tangencies", in, "random: injected internal tangencies");
  generate->add_option("--abscissas", abscissas, "pencil: center abscissas")->delimiter(',');
  generate->add_option("--a", qa, "touching-quad: radius of C1");
  generate->add_option("--b", qb, "touching-quad: radius of C3");
  generate->add_option("--c", qc, "touching-quad: radius of C2");
  generate->add_option("--d", qd, "touching-quad: radius of C4");
  generate->add_option("-o,--output", output, "Output file (default stdout)");

  CLI::App* search = app.add_subcommand("search", "Annealing search for 2n - 2 lenses");
  std::size_t iters = 100000;
  std::optional<std::string> trace_path;
  search->add_option("--n", n, "Number of circles")->required();
  search->add_option("--iters", iters, "Iteration budget");
  search->add_option("--seed", seed, "Random seed");
  search->add_option("-o,--output", output, "Best family file");
  search->add_option("--trace", trace_path, "Line-delimited JSON trace file");

  CLI::App* render = app.add_subcommand("render", "SVG drawing of a family");
  std::string highlight = "none";
  render->add_option("family", path, "Family JSON file")->required();
  render->add_option("-o,--output", output, "SVG file (default stdout)");
  render->add_option("--highlight", highlight, "none, lenses, lunes or graph")
      ->check(CLI::IsMember({"none", "lenses", "lunes", "graph"}));

  CLI::App* invert = app.add_subcommand("invert", "Apply an inversion to a family");
  std::string cx = "0", cy = "0", k = "1";
  invert->add_option("family", path, "Family JSON file")->required();
  invert->add_option("--cx", cx, "Inversion center x");
  invert->add_option("--cy", cy, "Inversion center y");
  invert->add_option("--k", k, "Inversion radius");
  invert->add_option("-o,--output", output, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (census->parsed()) {
      const Family f = read_family_file(path);
      const CensusOptions opts{.lenient_tangency_faces = lenient};
      if (engine == "float" && lenient) {
        throw InvalidInput("--lenient-tangency-faces applies to the exact engine only");
      }
      const DigonCensus exact = digon_census(f, opts);
      std::optional<DigonCensus> faces;
      Json oracle_json;
      if (engine == "float" || oracle) {
        try {
          const Arrangement arr = build_arrangement(f);
          euler_check(arr);
          faces = census_via_faces(arr);
          oracle_json = {{"engine", "float"},
                         {"agrees", same_digons(*faces, exact)},
                         {"lens_count", faces->lens_count()},
                         {"lune_count", faces->lune_count()},
                         {"vertices", arr.vertices.size()},
                         {"edges", arr.edge_count()},
                         {"faces", arr.faces.size()}};
        } catch (const DegenerateInput& e) {
          if (engine == "float") throw;
          oracle_json = {{"engine", "float"}, {"skipped", e.what()}};
        }
      }
      const DigonCensus& used = engine == "float" ? *faces : exact;
      const TheoremRun t = run_theorems(f, used);
      Json report = census_report(f, used, t);
      report["engine"] = engine;
      if (lenient) report["lenient_tangency_faces"] = true;
      if (oracle) report["oracle"] = oracle_json;
      out << report.dump(2) << '\n';
      if (faces && !same_digons(*faces, exact)) {
        err << "exact and float censuses disagree\n";
        return kExitInternal;
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const Family f = read_family_file(path);
      const DigonCensus c = digon_census(f);
      const TheoremRun t = run_theorems(f, c);
      Json verdicts = Json::object();
      for (const std::string name : {"lenses", "lunes", "main", "klv"}) {
        if (std::find(theorems.begin(), theorems.end(), name) == theorems.end()) continue;
        if (name == "lenses") verdicts[name] = t.lenses;
        if (name == "lunes") verdicts[name] = t.lunes;
        if (name == "main") verdicts[name] = t.main;
        if (name == "klv") verdicts[name] = t.klv;
      }
      out << Json{{"n", f.size()}, {"verdicts", verdicts}}.dump(2) << '\n';
      return kExitOk;
    }

    if (generate->parsed()) {
      Family f;
      if (kind == "random") {
        GenConfig cfg;
        cfg.n = n;
        cfg.seed = seed;
        cfg.external_tangencies = ext;
        cfg.internal_tangencies = in;
        f = gen_random(cfg);
      } else if (kind == "unit") {
        f = gen_unit(n, seed);
      } else if (kind == "pencil") {
        std::vector<Rational> a;
        for (const std::string& s : abscissas) a.push_back(parse_rational(s));
        f = gen_pencil(a.empty() ? n : a.size(), a);
      } else if (kind == "touching-quad") {
        f = gen_touching_quad(parse_rational(qa), parse_rational(qb), parse_rational(qc),
                              parse_rational(qd));
      } else {
        f = gen_tight(n);
      }
      emit(out, output, family_text(f));
      return kExitOk;
    }

    if (search->parsed()) {
      const SearchResult r = extremal_search(n, seed, iters);
      if (output) emit(out, output, family_text(r.best));
      if (trace_path) {
        std::ostringstream lines;
        for (const TraceRecord& rec : r.trace) lines << trace_record_json(rec).dump() << '\n';
        emit(out, trace_path, lines.str());
      }
      const std::size_t target = 2 * n - 2;
      Json report{{"n", n},
                  {"seed", seed},
                  {"iterations", r.iterations},
                  {"best_lens_count", r.census.lens_count()},
                  {"target", target},
                  {"target_met", r.census.lens_count() == target}};
      if (!output) report["family"] = family_to_json(r.best);
      out << report.dump(2) << '\n';
      return kExitOk;
    }

    if (render->parsed()) {
      const Family f = read_family_file(path);
      const Highlight h = highlight == "lenses" ? Highlight::Lenses
                          : highlight == "lunes" ? Highlight::Lunes
                          : highlight == "graph" ? Highlight::Graph
                                                 : Highlight::None;
      emit(out, output, render_svg(f, digon_census(f), h));
      return kExitOk;
    }

    if (invert->parsed()) {
      const Family f = read_family_file(path);
      const Inversion inv = invert_family(f, {parse_rational(cx), parse_rational(cy)},
                                          parse_rational(k));
      emit(out, output, family_text(inv.family));
      std::ostream& status = output ? out : err;
      Json report{{"invariance_contract", inv.invariance_contract}};
      if (!inv.invariance_contract) {
        report["warning"] = "center lies inside a disc; digon counts may change";
      }
      status << report.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const Falsification& e) {
    err << "falsification: " << e.what() << '\n' << e.witness() << '\n';
    return kExitFalsified;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace lenskit
