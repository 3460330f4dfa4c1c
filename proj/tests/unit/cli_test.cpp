// Copyright 2026 The qrad Authors
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
#include <sstream>

#include "qrad/campaign/output.hpp"
#include "qrad/cli/app.hpp"
#include "qrad/cli/config.hpp"

namespace qrad::cli {
namespace {

namespace fs = std::filesystem;

std::string error_of(const std::string& text) {
  try {
    auto c = parse_config_text(text);
    apply_defaults(c);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qrad");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("qrad_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(Config, DistanceDefaults) {
  auto c = parse_config_text("sweep = distance\n");
  apply_defaults(c);
  EXPECT_EQ(c.p, std::vector<double>{0.01});
  EXPECT_EQ(c.time_samples, 10);
  EXPECT_EQ(c.gamma, 10.0);
  EXPECT_EQ(c.shots, 2000u);
  EXPECT_EQ(c.codes.size(), 19u);
}

TEST(Config, SurfaceDefaultsToGrid) {
  auto c = parse_config_text("code = xxzz:3,3\n");
  apply_defaults(c);
  EXPECT_EQ(c.p.size(), 8u);
  EXPECT_EQ(c.peak.size(), 8u);
}

TEST(Config, CommentsAndBlankLines) {
  const auto c = parse_config_text("# header\n\nsweep = spread   # trailing\ncode = rep:15,1\nsizes = 1, 5,15\n");
  EXPECT_EQ(c.sweep, SweepKind::SPREAD);
  EXPECT_EQ(c.sizes, (std::vector<std::uint32_t>{1, 5, 15}));
}

TEST(Config, ErrorsNameLineAndField) {
  EXPECT_NE(error_of("sweep = distance\ncode = rep:4,1\n").find("distance must be odd"), std::string::npos);
  EXPECT_NE(error_of("sweep = distance\ncode = rep:4,1\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("code = rep:5,1\narch = preset:nowhere\n").find("available: almaden"), std::string::npos);
  EXPECT_NE(error_of("shots 10\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("colour = blue\n").find("unknown key 'colour'"), std::string::npos);
  EXPECT_NE(error_of("code = rep:5,1\nshots = lots\n").find("shots"), std::string::npos);
  EXPECT_NE(error_of("sweep = arch\n").find("code"), std::string::npos);
  EXPECT_NE(error_of("sweep = distance\np = 0.1,0.2\n").find("p:"), std::string::npos);
  EXPECT_NE(error_of("code = rep:5,1\npeak = 2\n").find("peak"), std::string::npos);
}

TEST(Config, RenderParsesBack) {
  std::vector<RunConfig> configs(4);
  configs[0].codes = {codes::CodeSpec::parse("xxzz:3,3")};
  configs[1].sweep = SweepKind::ARCH;
  configs[1].codes = {codes::CodeSpec::parse("rep:11,1")};
  configs[1].archs = {"linear:22", "preset:cairo", "mesh:5,5"};
  configs[1].gamma = 2.5;
  configs[2].sweep = SweepKind::SPREAD;
  configs[2].codes = {codes::CodeSpec::parse("rep:15,1")};
  configs[2].sizes = {1, 2, 8};
  configs[2].p = {1e-3};
  configs[2].seed = 18446744073709551615ull;
  configs[3].sweep = SweepKind::DECODE_DEBUG;
  configs[3].codes = {codes::CodeSpec::parse("rep:5,1")};
  configs[3].inject = {"x@data2", "z@stab0"};
  configs[3].dry_run = true;
  for (auto c : configs) {
    EXPECT_EQ(parse_config_text(render_config(c)), c);
    apply_defaults(c);
    EXPECT_EQ(parse_config_text(render_config(c)), c);
  }
}

TEST(App, MissingCodeIsConfigError) {
  const auto r = invoke({"surface", "--arch", "mesh:5,4"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("code"), std::string::npos);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(App, UnknownFlagIsConfigError) { EXPECT_EQ(invoke({"surface", "--bogus"}).code, kExitConfig); }

TEST(App, BadRootIsRuntimeError) {
  const auto dir = scratch_dir("root");
  const auto r = invoke({"surface", "--code", "rep:5,1", "--root", "99", "--p", "0.01", "--peak", "1", "--shots", "5",
                         "--out", dir.string()});
  EXPECT_EQ(r.code, kExitRuntime) << r.err;
  fs::remove_all(dir);
}

TEST(App, DecodeDebugShowsMatching) {
  const auto r = invoke({"decode-debug", "--code", "rep:5,1", "--inject", "x@data2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("events z: s1@r1 s2@r1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("matching z: (s1@r1, s2@r1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("decoded 1"), std::string::npos);
  EXPECT_EQ(invoke({"decode-debug", "--code", "rep:5,1", "--inject", "q@data2"}).code, kExitConfig);
  EXPECT_EQ(invoke({"decode-debug", "--code", "rep:5,1", "--inject", "x@data9"}).code, kExitConfig);
}

TEST(App, DryRunListsExactlyTheExecutedPoints) {
  const auto dir = scratch_dir("dry");
  const std::vector<std::string> args{"surface", "--code", "rep:5,1", "--p", "0.01,0.1", "--peak", "0.5,1",
                                      "--shots", "40", "--seed", "9", "--out", dir.string()};
  auto dry_args = args;
  dry_args.push_back("--dry-run");
  const auto dry = invoke(dry_args);
  ASSERT_EQ(dry.code, kExitOk) << dry.err;
  EXPECT_FALSE(fs::exists(dir));
  const auto run = invoke(args);
  ASSERT_EQ(run.code, kExitOk) << run.err;

  std::ifstream csv(dir / "surface.csv");
  const auto results = campaign::read_results_csv(csv);
  std::string expected;
  for (const auto& r : results) expected += "surface " + r.point.canonical() + " seed=" + std::to_string(r.point.seed) + "\n";
  EXPECT_EQ(dry.out, expected);

  std::ifstream manifest_in(dir / "manifest.json");
  std::stringstream buf;
  buf << manifest_in.rdbuf();
  const auto manifest = campaign::parse_manifest(buf.str());
  EXPECT_EQ(manifest.master_seed, 9u);
  ASSERT_EQ(manifest.files.size(), 1u);
  EXPECT_EQ(manifest.files[0].points, 4u);
  EXPECT_EQ(manifest.config.at("code"), std::vector<std::string>{"rep:5,1"});
  fs::remove_all(dir);
}

TEST(App, RerunIsBitIdentical) {
  const auto a = scratch_dir("rerun_a");
  const auto b = scratch_dir("rerun_b");
  for (const auto& dir : {a, b}) {
    const auto r = invoke({"distance", "--code", "rep:3,1", "--code", "xxzz:3,1", "--shots", "60", "--seed", "4",
                           "--out", dir.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  EXPECT_EQ(slurp(a / "distance.csv"), slurp(b / "distance.csv"));
  EXPECT_FALSE(slurp(a / "distance.csv").empty());
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(App, ConfigFileAndFlagsCombine) {
  const auto dir = scratch_dir("cfg");
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "sweep = surface\ncode = rep:3,1\np = 0.01\npeak = 1\nshots = 10\n";
  }
  const auto r = invoke({"--config", (dir / "run.cfg").string(), "--shots", "20", "--dry-run"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("code=rep:3,1"), std::string::npos);
  const auto bad = invoke({"--config", (dir / "missing.cfg").string()});
  EXPECT_EQ(bad.code, kExitConfig);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace qrad::cli
