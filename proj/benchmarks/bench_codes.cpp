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

#include "ldgp/baseline.hpp"
#include "ldgp/dataset.hpp"
#include "ldgp/feature.hpp"
#include "ldgp/ldgp_codec.hpp"

namespace {

ldgp::GrayImage sample(int side) { return ldgp::synth_dataset(1, 1, side, side, 3).entries()[0].image; }

void BM_LdgpImage(benchmark::State& state) {
  const auto img = sample(static_cast<int>(state.range(0)));
  const int order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ldgp::ldgp_image(img, order));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_LdgpImage)->ArgsProduct({{64, 128, 256}, {2, 3, 4}});

void BM_LdpImage(benchmark::State& state) {
  const auto img = sample(static_cast<int>(state.range(0)));
  const int order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ldgp::ldp_image(img, order));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_LdpImage)->ArgsProduct({{64, 128, 256}, {2, 3}});

void BM_LbpImage(benchmark::State& state) {
  const auto img = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ldgp::lbp_image(img));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_LbpImage)->Arg(64)->Arg(128)->Arg(256);

void BM_ExtractFeature(benchmark::State& state) {
  const auto img = sample(128);
  ldgp::FeatureConfig cfg;
  cfg.descriptor = static_cast<ldgp::Descriptor>(state.range(0));
  state.SetLabel(std::string(ldgp::to_string(cfg.descriptor)));
  for (auto _ : state) benchmark::DoNotOptimize(ldgp::extract_feature(img, cfg));
}
BENCHMARK(BM_ExtractFeature)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
