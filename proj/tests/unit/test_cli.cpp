#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "json.hpp"
#include "rext_cli/acm_io.hpp"
#include "rext_cli/report.hpp"
#include "rext_cli/sampling.hpp"
#include "rext_cli/scenario.hpp"
#include "rext_cli/suites.hpp"
#include "test_util.hpp"

namespace rext::cli {
namespace {

const std::string kDir = REXT_SCENARIO_DIR;

std::string minimal(const std::string& extra = "") {
  return R"({"name": "T", "manifold": {"dim": 2, "gamma": {"1,1,1": "x2"}}, "params": {"a": 1, "b": 2})" + extra +
         "}";
}

std::string error_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Scenario, Minimal) {
  const Scenario s = parse_scenario(minimal());
  EXPECT_EQ(s.name, "T");
  EXPECT_EQ(s.dim, 2);
  ASSERT_EQ(s.params.size(), 1u);
  EXPECT_EQ(s.params[0].b, 2.0);
  EXPECT_FALSE(s.has_hypersurface_data());
  ASSERT_EQ(s.x_box.size(), 2u);
  EXPECT_EQ(s.x_box[1].lo, -1.0);
  EXPECT_EQ(s.omega_box[0].hi, 1.0);
  EXPECT_EQ(s.tol_identity, 1e-9);
  EXPECT_EQ(s.tol_equivalence, 1e-8);
  EXPECT_THROW(s.hypersurface({1, 1}), InputError);
}

TEST(Scenario, ShippedFilesLoad) {
  for (const char* name : {"flat2", "poly2", "prod3"}) {
    const Scenario s = load_scenario(kDir + "/" + name + ".json");
    EXPECT_TRUE(s.has_hypersurface_data()) << name;
    EXPECT_FALSE(s.params.empty());
  }
  EXPECT_EQ(load_scenario(kDir + "/prod3.json").dim, 3);
}

TEST(Scenario, Errors) {
  EXPECT_NE(error_of("{\"name\": ").find("malformed JSON at byte"), std::string::npos);
  EXPECT_NE(error_of(minimal(R"(, "xi": ["x3", "0"])")).find("xi"), std::string::npos);
  EXPECT_NE(error_of(R"({"manifold": {"dim": 2, "gamma": {"1,1,1": "x2 +"}}, "params": {"a": 1, "b": 0}})")
                .find("gamma"),
            std::string::npos);
  EXPECT_FALSE(error_of(R"({"manifold": {"dim": 2, "gamma": {}}, "params": {"a": -1, "b": 0}})").empty());
  EXPECT_FALSE(error_of(R"({"manifold": {"dim": 2, "gamma": {"1,1,3": "1"}}, "params": {"a": 1, "b": 0}})").empty());
  EXPECT_FALSE(error_of(R"({"manifold": {"dim": 2, "gamma": {}}})").empty());
  EXPECT_FALSE(error_of(minimal(R"(, "xi": ["1"])")).empty());
  EXPECT_THROW(load_scenario(kDir + "/does-not-exist.json"), InputError);
}

TEST(Sampling, RngIsDeterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.uniform01(), b.uniform01());
  Rng s1 = Rng::stream(7, 1), s2 = Rng::stream(7, 2), s3 = Rng::stream(7, 1);
  const double u = s1.uniform01();
  EXPECT_EQ(u, s3.uniform01());
  EXPECT_NE(u, s2.uniform01());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const double v = r.uniform(-2, 3);
    EXPECT_GE(v, -2.0);
    EXPECT_LT(v, 3.0);
  }
}

TEST(Sampling, SurfacePointsLieOnTheLevelSet) {
  const Scenario s = load_scenario(kDir + "/poly2.json");
  const HypersurfaceSpec h = s.hypersurface({1, 2});
  Rng rng(3);
  const AmbientSamples smp = sample_surface(h, s, 50, rng);
  ASSERT_EQ(smp.points.size(), 50u);
  for (const auto& p : smp.points) EXPECT_TRUE(on_surface(h, p));
}

TEST(Sampling, GivesUpAfterRejectionCap) {
  Scenario s = parse_scenario(minimal(R"(, "xi": ["0", "1"], "f": "5", "t": 1)"));
  EXPECT_THROW(
      {
        Rng rng(1);
        sample_surface(s.hypersurface({1, 2}), s, 10, rng);
      },
      SamplingError);
}

TEST(Report, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(1e-9), "1.0000000000000001e-09");
  EXPECT_EQ(format_double(NAN), "null");
  EXPECT_EQ(format_double(INFINITY), "null");
}

TEST(Report, CountsOnlyGatingChecks) {
  Report r;
  cli::Run run;
  run.check("a", "x", 1e-12, 1e-9);
  run.check("b", "x", 1.0, 1e-9).gating = false;
  r.runs.push_back(run);
  EXPECT_EQ(r.total_checks(), 1);
  EXPECT_TRUE(r.pass());
  r.runs[0].check("c", "x", 1.0, 1e-9);
  EXPECT_EQ(r.failed_checks(), 1);
  EXPECT_FALSE(r.pass());
}

TEST(Report, JsonShapeAndDeterminism) {
  const Scenario s = load_scenario(kDir + "/flat2.json");
  RunOptions o;
  o.points = 10;
  const Report a = run_scenario("all", s, "flat2.json", o);
  const Report b = run_scenario("all", s, "flat2.json", o);
  const std::string ja = to_json(a);
  EXPECT_EQ(ja, to_json(b));
  EXPECT_EQ(to_table(a), to_table(b));
  const auto j = nlohmann::json::parse(ja);
  EXPECT_EQ(j["subcommand"], "all");
  EXPECT_EQ(j["environment"]["seed"], 7);
  EXPECT_EQ(j["environment"]["points"], 10);
  EXPECT_TRUE(j["summary"]["pass"].get<bool>());
  EXPECT_EQ(j["summary"]["failed"], 0);
  EXPECT_GT(j["runs"].size(), 3u);
  EXPECT_EQ(j["runs"][0]["suite"], "validate");
  EXPECT_NE(to_table(a).find("PASS: "), std::string::npos);
}

TEST(Report, SeedOverrideChangesSamples) {
  const Scenario s = load_scenario(kDir + "/poly2.json");
  RunOptions o;
  o.points = 5;
  const std::string a = to_json(run_scenario("para-hermitian", s, "p", o));
  o.seed = 99;
  const std::string b = to_json(run_scenario("para-hermitian", s, "p", o));
  EXPECT_NE(a, b);
}

TEST(Suites, NonParallelXiFails) {
  const Scenario s = parse_scenario(minimal(R"(, "xi": ["1", "0"], "f": "0", "t": 1)"));
  RunOptions o;
  o.points = 10;
  EXPECT_FALSE(run_scenario("validate", s, "t", o).pass());
}

TEST(Suites, HypersurfaceNeedsData) {
  const Scenario s = parse_scenario(minimal());
  EXPECT_THROW(run_scenario("hypersurface", s, "t", {}), InputError);
  EXPECT_THROW(run_scenario("bogus", s, "t", {}), InputError);
  RunOptions o;
  o.points = 5;
  const Report r = run_scenario("all", s, "t", o);
  EXPECT_EQ(r.runs.back().suite, "hypersurface");
  EXPECT_TRUE(r.runs.back().checks.empty());
}

TEST(AcmIo, RoundTrip) {
  test::Rng rng(4);
  const HypersurfaceSpec h = test::surface(prod3(), 1, 4, "0.3*x2*x3", 1.2);
  const ACMSample s = to_acm_sample(SurfacePoint::at(h, test::surface_points(h, 1, rng)[0]));
  const ACMSample r = parse_acm_sample(acm_sample_to_json(s));
  EXPECT_EQ(r.m, s.m);
  EXPECT_EQ(r.g, s.g);
  EXPECT_EQ(r.phi, s.phi);
  EXPECT_EQ(r.xibar, s.xibar);
  EXPECT_EQ(r.eta, s.eta);
  ASSERT_EQ(r.parts.size(), s.parts.size());
  for (std::size_t k = 0; k < s.parts.size(); ++k) {
    EXPECT_EQ(r.parts[k].name, s.parts[k].name);
    for (int a = 0; a < s.m; ++a)
      for (int b = 0; b < s.m; ++b)
        for (int c = 0; c < s.m; ++c) EXPECT_EQ(r.parts[k].F(a, b, c), s.parts[k].F(a, b, c));
  }
  EXPECT_EQ(acm_sample_to_json(r), acm_sample_to_json(s));
}

TEST(AcmIo, Errors) {
  EXPECT_THROW(parse_acm_sample("{}"), InputError);
  EXPECT_THROW(parse_acm_sample(R"({"m": 2})"), InputError);
  EXPECT_THROW(parse_acm_sample("[1,"), InputError);
  EXPECT_THROW(
      parse_acm_sample(R"({"m": 3, "g": [[1,0,0],[0,0,1],[0,1,0]], "phi": [[0,0,0],[0,1,0],[0,0,-1]],
                           "xibar": [1,0], "eta": [1,0,0], "F": [[[0,0,0],[0,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]]]})"),
      InputError);
}

TEST(AcmIo, ShippedSamplesClassify) {
  const Report f = run_sample(load_acm_sample(kDir + "/samples/flat2_b4.json"), "f", {});
  EXPECT_TRUE(f.pass());
  const auto has = [](const Report& r, const std::string& k, const std::string& v) {
    for (const auto& [name, value] : r.runs[0].verdicts)
      if (name == k) return value == v;
    return false;
  };
  EXPECT_TRUE(has(f, "para-Sasakian", "true"));
  EXPECT_TRUE(has(f, "G5-bar", "true"));
  const Report p = run_sample(load_acm_sample(kDir + "/samples/prod3_b4.json"), "p", {});
  EXPECT_TRUE(p.pass());
  EXPECT_TRUE(has(p, "K-paracontact", "true"));
  EXPECT_TRUE(has(p, "para-Sasakian", "false"));
}

}  // namespace
}  // namespace rext::cli
