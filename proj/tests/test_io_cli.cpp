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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "lenskit/cli.hpp"
#include "lenskit/census.hpp"
#include "lenskit/errors.hpp"
#include "lenskit/generators.hpp"
#include "lenskit/io.hpp"

namespace lenskit {
namespace {

namespace fs = std::filesystem;

const std::string kData = LENSKIT_TEST_DATA;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lenskit_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string file(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

  fs::path dir_;
};

TEST(FamilyJson, RoundTrip) {
  GenConfig cfg;
  cfg.n = 9;
  cfg.seed = 4;
  cfg.external_tangencies = 2;
  for (const Family& f : {gen_random(cfg), gen_pencil(5), gen_tight(6), gen_unit(7, 2)}) {
    const Json doc = family_to_json(f);
    const Family back = family_from_json(doc);
    EXPECT_TRUE(std::equal(f.circles().begin(), f.circles().end(), back.circles().begin(),
                           back.circles().end()));
    EXPECT_EQ(family_to_json(back), doc);
  }
}

TEST(FamilyJson, IrrationalRadiusUsesSquare) {
  const Json doc = family_to_json(gen_pencil(2, {-1, 1}));
  EXPECT_EQ(doc["circles"][0]["r2"], "2");
  EXPECT_FALSE(doc["circles"][0].contains("r"));
}

TEST(FamilyJson, AcceptsNumericForms) {
  const Json doc = Json::parse(
      R"({"circles": [{"cx": "1/2", "cy": 0, "r": "1.25"}, {"cx": "-0.5", "cy": "0", "r2": "3"}]})");
  const Family f = family_from_json(doc);
  EXPECT_EQ(f[0].center().x, Rational(1, 2));
  EXPECT_EQ(f[0].radius_sq(), Rational(25, 16));
  EXPECT_EQ(f[1].center().x, Rational(-1, 2));
  EXPECT_EQ(f[1].radius_sq(), 3);
}

TEST(FamilyJson, RejectsMalformed) {
  for (const char* text : {
           R"([])",
           R"({"circles": 3})",
           R"({"circles": [{"cx": "0", "cy": "0"}]})",
           R"({"circles": [{"cx": "0", "cy": "0", "r": "1", "r2": "1"}]})",
           R"({"circles": [{"cx": "a", "cy": "0", "r": "1"}]})",
           R"({"circles": [{"cx": "0", "cy": "0", "r": "-1"}]})",
           R"({"circles": [{"cx": "0", "cy": "0", "r": "1"}, {"cx": "5", "cy": "0", "r": "1"}]})",
       }) {
    EXPECT_THROW(family_from_json(Json::parse(text)), InvalidInput) << text;
  }
}

TEST(TraceJson, Fields) {
  const Json j = trace_record_json({7, 0.5, 3, true});
  EXPECT_EQ(j.dump(), R"({"iteration":7,"temperature":0.5,"lens_count":3,"accepted":true})");
}

TEST(RenderSvg, HighlightsAndDeterminism) {
  const Family two = family_from_json(Json::parse(slurp(kData + "/two_circles.json")));
  const std::string lenses = render_svg(two, digon_census(two), Highlight::Lenses);
  EXPECT_EQ(std::count(lenses.begin(), lenses.end(), '\n'), 6);
  const std::regex path("<path class=\"lens\"");
  EXPECT_EQ(std::distance(std::sregex_iterator(lenses.begin(), lenses.end(), path),
                          std::sregex_iterator()),
            1);
  EXPECT_EQ(lenses, render_svg(two, digon_census(two), Highlight::Lenses));
  const std::string lunes = render_svg(two, digon_census(two), Highlight::Lunes);
  EXPECT_NE(lunes.find("class=\"lune\""), std::string::npos);
  EXPECT_NE(lenses.find("viewBox=\"-2.700000 -2.400000 8.400000 4.800000\""), std::string::npos);
}

TEST_F(CliTest, CensusGolden) {
  const CliRun r = cli({"census", kData + "/two_circles.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(kData + "/two_circles_census.json"));
}

TEST_F(CliTest, CensusTightWithOracle) {
  ASSERT_EQ(cli({"generate", "tight", "--n", "5", "-o", file("t.json")}).code, 0);
  const CliRun r = cli({"census", file("t.json"), "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["lens_count"], 8);
  EXPECT_EQ(j["bounds"]["lens_ok"], true);
  EXPECT_EQ(j["oracle"]["agrees"], true);
  const CliRun fl = cli({"census", file("t.json"), "--engine", "float"});
  EXPECT_EQ(Json::parse(fl.out)["lens_count"], 8);
}

TEST_F(CliTest, CensusReportKeyOrder) {
  const Json j = Json::parse(cli({"census", kData + "/two_circles.json"}).out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> expected{"n",          "lens_pairs", "lune_pairs",
                                          "tangent_pairs", "lens_count", "lune_count",
                                          "bounds",     "avoiding_pairs", "theorem_verdicts"};
  ASSERT_GE(keys.size(), expected.size());
  EXPECT_TRUE(std::equal(expected.begin(), expected.end(), keys.begin()));
}

TEST_F(CliTest, ContainedPairExitsTwo) {
  const std::string p =
      write("bad.json", R"({"circles": [{"cx": "0", "cy": "0", "r": "1"}, {"cx": "0", "cy": "0", "r": "3"}]})");
  const CliRun r = cli({"census", p});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("Contained"), std::string::npos);
  EXPECT_EQ(cli({"verify", p}).code, kExitInvalid);
  EXPECT_EQ(cli({"render", p}).code, kExitInvalid);
  EXPECT_EQ(cli({"census", file("missing.json")}).code, kExitInvalid);
  EXPECT_EQ(cli({"census", write("junk.json", "{")}).code, kExitInvalid);
}

TEST_F(CliTest, FloatEngineRejectsTangencies) {
  ASSERT_EQ(cli({"generate", "touching-quad", "-o", file("q.json")}).code, 0);
  EXPECT_EQ(cli({"census", file("q.json"), "--engine", "float"}).code, kExitInvalid);
  const CliRun r = cli({"census", file("q.json"), "--oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["oracle"].contains("skipped"));
}

TEST_F(CliTest, VerifyTouchingQuad) {
  ASSERT_EQ(cli({"generate", "touching-quad", "-o", file("q.json")}).code, 0);
  const CliRun r = cli({"verify", file("q.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdicts"]["lenses"]["lens_count"], 4);
  EXPECT_EQ(j["verdicts"]["main"]["avoiding_pairs"], 2);
  EXPECT_EQ(j["verdicts"]["klv"]["charges"].size(), 2u);
  EXPECT_EQ(j["verdicts"]["klv"]["status"], "pass");
  const Json only = Json::parse(cli({"verify", file("q.json"), "--theorems", "lenses,klv"}).out);
  EXPECT_EQ(only["verdicts"].size(), 2u);
  EXPECT_EQ(cli({"verify", file("q.json"), "--theorems", "nope"}).code, kExitInvalid);
}

TEST_F(CliTest, VerifyReducesInternalTangencies) {
  GenConfig cfg;
  cfg.n = 7;
  cfg.seed = 19;
  cfg.internal_tangencies = 1;
  cfg.external_tangencies = 1;
  write_family_file(file("f.json"), gen_random(cfg));
  const CliRun r = cli({"verify", file("f.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(Json::parse(r.out)["verdicts"]["main"]["removed_internal"].empty());
}

TEST_F(CliTest, VerifyRandomTangencyFree) {
  for (const char* seed : {"1", "2", "3"}) {
    ASSERT_EQ(cli({"generate", "random", "--n", "9", "--seed", seed, "-o", file("r.json")}).code, 0);
    const CliRun r = cli({"verify", file("r.json")});
    EXPECT_EQ(r.code, 0) << r.err;
  }
}

TEST_F(CliTest, GenerateIsDeterministic) {
  ASSERT_EQ(cli({"generate", "random", "--n", "10", "--seed", "7", "-o", file("a.json")}).code, 0);
  ASSERT_EQ(cli({"generate", "random", "--n", "10", "--seed", "7", "-o", file("b.json")}).code, 0);
  EXPECT_EQ(slurp(file("a.json")), slurp(file("b.json")));
  const CliRun pencil = cli({"generate", "pencil", "--n", "3"});
  EXPECT_EQ(Json::parse(pencil.out), family_to_json(gen_pencil(3)));
  const CliRun custom = cli({"generate", "pencil", "--abscissas", "-2,0,2"});
  EXPECT_EQ(Json::parse(custom.out), family_to_json(gen_pencil(3, {-2, 0, 2})));
  EXPECT_EQ(cli({"generate", "tight", "--n", "3"}).code, kExitInvalid);
  EXPECT_EQ(cli({"generate", "pencil", "--abscissas", "1,1"}).code, kExitInvalid);
  EXPECT_EQ(cli({"generate", "hexagon"}).code, kExitInvalid);
  EXPECT_EQ(cli({"generate", "touching-quad", "--a", "0"}).code, kExitInvalid);
}

TEST_F(CliTest, SearchWritesFamilyAndTrace) {
  const CliRun r = cli({"search", "--n", "4", "--seed", "1", "-o", file("best.json"), "--trace",
                     file("trace.jsonl")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["best_lens_count"], 6);
  EXPECT_EQ(j["target"], 6);
  EXPECT_EQ(j["target_met"], true);
  EXPECT_EQ(digon_census(read_family_file(file("best.json"))).lens_count(), 6u);
  std::ifstream trace(file("trace.jsonl"));
  std::string line;
  std::size_t lines = 0;
  while (std::getline(trace, line)) {
    const Json rec = Json::parse(line);
    EXPECT_LE(rec["lens_count"].get<std::size_t>(), 6u);
    ++lines;
  }
  EXPECT_EQ(lines, j["iterations"].get<std::size_t>());
}

TEST_F(CliTest, SearchZeroIterationsEchoesInitialFamily) {
  const CliRun r = cli({"search", "--n", "5", "--seed", "3", "--iters", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["family"], family_to_json(search_initial_family(5, 3)));
}

TEST_F(CliTest, RenderTouchingQuad) {
  ASSERT_EQ(cli({"generate", "touching-quad", "-o", file("q.json")}).code, 0);
  ASSERT_EQ(cli({"render", file("q.json"), "--highlight", "graph", "-o", file("q.svg")}).code, 0);
  const std::string svg = slurp(file("q.svg"));
  auto count = [&](const std::string& what) {
    std::size_t c = 0;
    for (std::size_t p = svg.find(what); p != std::string::npos; p = svg.find(what, p + 1)) ++c;
    return c;
  };
  EXPECT_EQ(count("<circle"), 4u);
  EXPECT_EQ(count("stroke=\"red\""), 4u);
  EXPECT_EQ(count("stroke=\"blue\""), 2u);
  ASSERT_EQ(cli({"render", file("q.json"), "--highlight", "graph", "-o", file("q2.svg")}).code, 0);
  EXPECT_EQ(svg, slurp(file("q2.svg")));
}

TEST_F(CliTest, InvertPreservesDigonsAndIsAnInvolution) {
  ASSERT_EQ(cli({"generate", "random", "--n", "6", "--seed", "2", "-o", file("f.json")}).code, 0);
  const CliRun r = cli({"invert", file("f.json"), "--cx", "40", "--cy", "-25/2", "-o", file("g.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["invariance_contract"], true);
  const Json a = Json::parse(cli({"census", file("f.json")}).out);
  const Json b = Json::parse(cli({"census", file("g.json")}).out);
  EXPECT_EQ(a["lens_count"], b["lens_count"]);
  EXPECT_EQ(a["lune_count"], b["lune_count"]);
  ASSERT_EQ(cli({"invert", file("g.json"), "--cx", "40", "--cy", "-25/2", "-o", file("h.json")}).code, 0);
  EXPECT_EQ(read_family_file(file("h.json")).circles().size(), 6u);
  EXPECT_EQ(family_to_json(read_family_file(file("h.json"))),
            family_to_json(read_family_file(file("f.json"))));
}

TEST_F(CliTest, InvertWarnsInsideAndRejectsOnCircle) {
  ASSERT_EQ(cli({"generate", "touching-quad", "-o", file("q.json")}).code, 0);
  const CliRun inside = cli({"invert", file("q.json"), "--cx", "0", "--cy", "1/2", "-o", file("i.json")});
  ASSERT_EQ(inside.code, 0);
  EXPECT_EQ(Json::parse(inside.out)["invariance_contract"], false);
  EXPECT_TRUE(Json::parse(inside.out).contains("warning"));
  EXPECT_EQ(cli({"invert", file("q.json"), "--cx", "0", "--cy", "0"}).code, kExitInvalid);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitInvalid);
  EXPECT_EQ(cli({"census"}).code, kExitInvalid);
  EXPECT_EQ(cli({"--help"}).code, 0);
  EXPECT_EQ(cli({"search"}).code, kExitInvalid);
}

}  // namespace
}  // namespace lenskit
