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

#include <benchmark/benchmark.h>

#include <random>

#include "ldgp/recognition.hpp"

namespace {

std::vector<std::uint32_t> random_histogram(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, 255);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

void BM_L1Distance(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_histogram(n, rng);
  const auto b = random_histogram(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ldgp::l1_distance(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_L1Distance)->Arg(128)->Arg(256)->Arg(512)->Arg(1024);

void BM_NearestNeighbor(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<ldgp::FeatureVector> features;
  std::vector<std::string> labels;
  for (int i = 0; i < 400; ++i) {
    features.push_back({random_histogram(n, rng), {}});
    labels.push_back(std::to_string(i / 10));
  }
  const ldgp::Gallery gallery(features, labels);
  const ldgp::FeatureVector probe{random_histogram(n, rng), {}};
  for (auto _ : state) benchmark::DoNotOptimize(ldgp::nn_classify(probe, gallery));
}
BENCHMARK(BM_NearestNeighbor)->Arg(128)->Arg(512);

}  // namespace
