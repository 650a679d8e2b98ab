// Copyright 2026 The LDGP Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "ldgp/image.hpp"
#include "support/temp_dir.hpp"

namespace ldgp::cli {
namespace {

using ldgp::testing::read_file;
using ldgp::testing::TempDir;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ldgp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// Directory dataset with 3 classes x 3 images written as PGM files.
std::filesystem::path write_dataset(const TempDir& dir) {
  const auto ds = synth_dataset(3, 3, 24, 24, 4);
  for (const auto& e : ds.entries()) {
    const auto p = dir / ("data/" + e.label + "/" + std::filesystem::path(e.source).filename().string());
    std::filesystem::create_directories(p.parent_path());
    save_pgm(e.image, p);
  }
  return dir / "data";
}

TEST(Cli, EvalLooWritesRowsAndSummary) {
  TempDir dir;
  const auto data = write_dataset(dir);
  const auto out = dir / "r.csv";
  const auto r = invoke({"eval-loo", "--dataset", data.string(), "--descriptor", "ldgp", "--order",
                         "2", "--grid", "4x4", "--bins", "8", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(read_file(out));
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows.front(), "probe_path,probe_label,match_path,match_label,distance,correct");
  EXPECT_EQ(rows.back().rfind("#gamma,", 0), 0u);
  EXPECT_NE(rows.back().find(",Nt,9"), std::string::npos);
  EXPECT_EQ(r.out.rfind("gamma=", 0), 0u);
  EXPECT_EQ(lines(r.out).size(), 1u);
}

TEST(Cli, BenchTimeOneRowPerDescriptor) {
  TempDir dir;
  const auto out = dir / "t.csv";
  const auto r = invoke({"bench-time", "--synthetic", "4x25", "--size", "64x64", "--descriptors",
                         "ldgp,ldp", "--reps", "3", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(read_file(out));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "descriptor,order,width,height,gamma_count,feature_len,t_e_sec,t_m_sec,reps,threads");
  EXPECT_EQ(rows[1].rfind("ldgp,2,64,64,100,128,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("ldp,2,64,64,100,512,", 0), 0u);
}

TEST(Cli, BenchTimeThreadedRowsAreSeparate) {
  TempDir dir;
  const auto out = dir / "t.csv";
  const auto r = invoke({"bench-time", "--synthetic", "2x3", "--size", "32x32", "--descriptors",
                         "ldgp", "--reps", "1", "--threads", "2", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(read_file(out));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[1].ends_with(",1,1"));
  EXPECT_TRUE(rows[2].ends_with(",,1,2"));
}

TEST(Cli, ExtractWritesFeatureJson) {
  TempDir dir;
  const auto data = write_dataset(dir);
  const auto out = dir / "f.json";
  const auto r = invoke({"extract", "--dataset", data.string(), "--descriptor", "ldp", "--order",
                         "2", "--grid", "4x4", "--bins", "8", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto text = read_file(out);
  const auto doc = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"descriptor", "order", "grid", "bins", "entries"}));
  EXPECT_EQ(doc["descriptor"], "ldp");
  EXPECT_EQ(doc["grid"], nlohmann::json::array({4, 4}));
  ASSERT_EQ(doc["entries"].size(), 9u);
  for (const auto& e : doc["entries"]) {
    EXPECT_EQ(e["vector"].size(), 512u);
    std::vector<std::string> ek;
    for (const auto& [k, v] : e.items()) ek.push_back(k);
    EXPECT_EQ(ek, (std::vector<std::string>{"path", "label", "vector"}));
  }
}

TEST(Cli, IdenticalRunsProduceIdenticalFiles) {
  TempDir dir;
  const std::vector<std::string> base = {"eval-split", "--synthetic", "4x5", "--size", "24x24",
                                         "--probe-fraction", "0.4", "--folds", "3", "--seed", "7"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", (dir / "a.csv").string()});
  b.insert(b.end(), {"--out", (dir / "b.csv").string(), "--threads", "3"});
  ASSERT_EQ(invoke(a).code, 0);
  ASSERT_EQ(invoke(b).code, 0);
  EXPECT_EQ(read_file(dir / "a.csv"), read_file(dir / "b.csv"));
  EXPECT_FALSE(read_file(dir / "a.csv").empty());
}

TEST(Cli, SeedFallsBackToEnvironment) {
  TempDir dir;
  const std::vector<std::string> common = {"bench-noise", "--synthetic", "3x3", "--size", "24x24",
                                           "--descriptors", "ldgp", "--variances", "0,400"};
  auto explicit_seed = common;
  explicit_seed.insert(explicit_seed.end(), {"--seed", "31", "--out", (dir / "a.csv").string()});
  ASSERT_EQ(invoke(explicit_seed).code, 0);

  ::setenv("LDGP_SEED", "31", 1);
  auto env_seed = common;
  env_seed.insert(env_seed.end(), {"--out", (dir / "b.csv").string()});
  const auto r = invoke(env_seed);
  ::unsetenv("LDGP_SEED");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(dir / "a.csv"), read_file(dir / "b.csv"));
}

TEST(Cli, TileReadingResolvesToGrid) {
  TempDir dir;
  const auto out = dir / "f.json";
  const auto r = invoke({"extract", "--synthetic", "2x2", "--size", "32x24", "--tile", "8x8",
                         "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(read_file(out));
  EXPECT_EQ(doc["grid"], nlohmann::json::array({3, 4}));
  EXPECT_EQ(doc["entries"][0]["vector"].size(), 3u * 4u * 8u);
}

TEST(Cli, ManifestWinsOverDataset) {
  TempDir dir;
  const auto data = write_dataset(dir);
  const auto manifest = dir.write("data/list.csv", "c0/0.pgm,x\nc1/0.pgm,y\n");
  const auto r = invoke({"eval-loo", "--dataset", data.string(), "--manifest", manifest.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Nt=2"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"eval-loo", "--synthetic", "2x2", "--grid", "4"}).code, 2);
  EXPECT_EQ(invoke({"eval-loo", "--synthetic", "2x2", "--descriptor", "lvp"}).code, 2);
  EXPECT_EQ(invoke({"eval-loo", "--synthetic", "2x2", "--bins", "12"}).code, 2);
  EXPECT_EQ(invoke({"eval-loo", "--synthetic", "2x2", "--order", "1"}).code, 2);
  EXPECT_EQ(invoke({"eval-loo"}).code, 2);
  EXPECT_EQ(invoke({"eval-loo", "--synthetic", "2x2", "--grid", "2x2", "--tile", "4x4"}).code, 2);
  EXPECT_EQ(invoke({"eval-split", "--synthetic", "2x2", "--probe-fraction", "1.5"}).code, 2);
  EXPECT_EQ(invoke({"bench-noise", "--synthetic", "2x2"}).code, 2);
  EXPECT_EQ(invoke({"extract", "--synthetic", "2x2"}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, DataErrorsExitOne) {
  TempDir dir;
  const auto r = invoke({"eval-loo", "--dataset", (dir / "missing").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  std::filesystem::create_directories(dir / "empty");
  EXPECT_EQ(invoke({"eval-loo", "--dataset", (dir / "empty").string()}).code, 1);
  // grid larger than the images
  EXPECT_EQ(invoke({"eval-loo", "--synthetic", "2x2", "--size", "8x8", "--grid", "16x16"}).code, 1);
}

}  // namespace
}  // namespace ldgp::cli
