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

#include "ldgp/report.hpp"

#include <cstdio>
#include <string>

namespace ldgp {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_seconds(const std::optional<double>& t) {
  if (!t) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9f", *t);
  return buf;
}

constexpr const char* kEvalHeader = "probe_path,probe_label,match_path,match_label,distance,correct";

void write_decisions(std::ostream& out, const LabeledDataset& dataset, const EvalReport& report) {
  for (const auto& d : report.decisions) {
    const auto& probe = dataset[d.probe];
    const auto& match = dataset[d.match];
    out << csv_field(probe.source) << ',' << csv_field(probe.label) << ','
        << csv_field(match.source) << ',' << csv_field(match.label) << ',' << d.distance << ','
        << (d.correct ? 1 : 0) << '\n';
  }
}

}  // namespace

std::string format_rate(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", rate);
  return buf;
}

void write_eval_csv(std::ostream& out, const LabeledDataset& dataset, const EvalReport& report) {
  out << kEvalHeader << '\n';
  write_decisions(out, dataset, report);
  out << "#gamma," << format_rate(report.recognition_rate()) << ",Nm," << report.matches
      << ",Nt," << report.total << '\n';
}

void write_kfold_csv(std::ostream& out, const LabeledDataset& dataset, const KFoldReport& report) {
  out << kEvalHeader << '\n';
  std::size_t matches = 0, total = 0;
  for (std::size_t k = 0; k < report.folds.size(); ++k) {
    const auto& fold = report.folds[k];
    write_decisions(out, dataset, fold);
    out << "#fold," << k << ",gamma," << format_rate(fold.recognition_rate()) << ",Nm,"
        << fold.matches << ",Nt," << fold.total << '\n';
    matches += fold.matches;
    total += fold.total;
  }
  out << "#gamma," << format_rate(report.average_rate()) << ",Nm," << matches << ",Nt," << total
      << '\n';
}

void write_timing_csv(std::ostream& out, std::span<const TimingRow> rows) {
  out << "descriptor,order,width,height,gamma_count,feature_len,t_e_sec,t_m_sec,reps,threads\n";
  for (const auto& r : rows) {
    out << to_string(r.descriptor) << ',' << r.order << ',' << r.width << ',' << r.height << ','
        << r.gamma_count << ',' << r.feature_len << ',' << format_seconds(r.extraction_seconds)
        << ',' << format_seconds(r.match_seconds) << ',' << r.repetitions << ',' << r.threads
        << '\n';
  }
}

void write_noise_csv(std::ostream& out, std::span<const NoiseSeries> series) {
  out << "descriptor,order,variance,gamma,Nm,Nt\n";
  for (const auto& s : series) {
    const int order = s.config.descriptor == Descriptor::kLbp ? 1 : s.config.order;
    for (const auto& p : s.points) {
      char var[32];
      std::snprintf(var, sizeof var, "%g", p.variance);
      out << to_string(s.config.descriptor) << ',' << order << ',' << var << ','
          << format_rate(p.recognition_rate()) << ',' << p.matches << ',' << p.total << '\n';
    }
  }
}

}  // namespace ldgp
