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

#include <ostream>
#include <span>

#include "ldgp/dataset.hpp"
#include "ldgp/noise.hpp"
#include "ldgp/recognition.hpp"
#include "ldgp/timing.hpp"

namespace ldgp {

// CSV writers for the tool's report files. Fields containing a comma, quote
// or newline are double-quoted.

/// Header `probe_path,probe_label,match_path,match_label,distance,correct`,
/// one row per decision, then `#gamma,<value>,Nm,<int>,Nt,<int>`.
void write_eval_csv(std::ostream& out, const LabeledDataset& dataset, const EvalReport& report);

/// Decisions of every fold under the evaluation header, a `#fold,<k>,gamma,...`
/// line per fold, and a final `#gamma` line carrying the fold average and the
/// summed match/probe counts.
void write_kfold_csv(std::ostream& out, const LabeledDataset& dataset, const KFoldReport& report);

/// Header `descriptor,order,width,height,gamma_count,feature_len,t_e_sec,t_m_sec,reps,threads`.
void write_timing_csv(std::ostream& out, std::span<const TimingRow> rows);

struct NoiseSeries {
  FeatureConfig config;
  std::vector<NoisePoint> points;
};

/// Header `descriptor,order,variance,gamma,Nm,Nt`, series in the given order.
void write_noise_csv(std::ostream& out, std::span<const NoiseSeries> series);

std::string format_rate(double rate);

}  // namespace ldgp
