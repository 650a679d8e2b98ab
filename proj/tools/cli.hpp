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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ldgp/feature.hpp"

namespace ldgp::cli {

enum class Command { kExtract, kEvalLoo, kEvalSplit, kBenchTime, kBenchNoise };

struct SyntheticSpec {
  int classes = 0;
  int per_class = 0;
  int width = 64;
  int height = 64;
};

/// Region parameter: grid counts (default) or tile size in pixels.
struct RegionSpec {
  bool tile = false;
  int first = 4;   // rows, or tile width
  int second = 4;  // cols, or tile height
};

struct RunConfig {
  Command command = Command::kEvalLoo;
  std::optional<std::filesystem::path> dataset;
  std::optional<std::filesystem::path> manifest;
  std::optional<SyntheticSpec> synthetic;
  std::vector<Descriptor> descriptors{Descriptor::kLdgp};
  int order = 2;
  RegionSpec regions;
  int bins = 8;
  double probe_fraction = 0.2;
  int folds = 10;
  std::uint64_t seed = 0;
  std::vector<double> variances;
  std::optional<std::filesystem::path> out;
  int threads = 1;
  int repetitions = 3;
};

/// Raised for flag-level problems; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checks every field against the owning module's preconditions.
void validate(const RunConfig& config);

/// Executes one pipeline. Returns 0 on success, 1 on data/runtime errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors return 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "RxC" / "WxH" pair parser; throws UsageError.
std::pair<int, int> parse_pair(const std::string& text, const std::string& flag);

}  // namespace ldgp::cli
