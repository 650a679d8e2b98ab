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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldgp/dataset.hpp"
#include "ldgp/derivative.hpp"
#include "ldgp/error.hpp"
#include "ldgp/noise.hpp"
#include "ldgp/recognition.hpp"
#include "ldgp/report.hpp"
#include "ldgp/timing.hpp"

namespace ldgp::cli {

std::pair<int, int> parse_pair(const std::string& text, const std::string& flag) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw UsageError(flag + " expects AxB, got '" + text + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, x);
    const std::string b = text.substr(x + 1);
    const int first = std::stoi(a, &used_a);
    const int second = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    if (first < 1 || second < 1) throw UsageError(flag + " values must be >= 1");
    return {first, second};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError(flag + " expects AxB, got '" + text + "'");
  }
}

namespace {

bool is_bench(Command c) { return c == Command::kBenchTime || c == Command::kBenchNoise; }

void usage_check(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

}  // namespace

void validate(const RunConfig& c) {
  usage_check(c.dataset || c.manifest || c.synthetic,
              "one of --dataset, --manifest or --synthetic is required");
  if (c.synthetic) {
    usage_check(c.synthetic->classes >= 1 && c.synthetic->per_class >= 1,
                "--synthetic counts must be >= 1");
    usage_check(c.synthetic->width >= 2 && c.synthetic->height >= 2, "--size must be >= 2x2");
  }
  usage_check(!c.descriptors.empty(), "at least one descriptor is required");
  usage_check(is_bench(c.command) || c.descriptors.size() == 1,
              "this command takes exactly one descriptor");
  for (auto d : c.descriptors) {
    if (d != Descriptor::kLbp) {
      usage_check(c.order >= 2 && c.order <= kMaxDerivativeOrder + 1,
                  "--order must be in [2, " + std::to_string(kMaxDerivativeOrder + 1) + "]");
    }
    const int max_bins = 1 << code_bits(d);
    usage_check(c.bins >= 1 && (c.bins & (c.bins - 1)) == 0 && c.bins <= max_bins,
                "--bins must be a power of two <= " + std::to_string(max_bins) + " for " +
                    std::string(to_string(d)));
  }
  usage_check(c.regions.first >= 1 && c.regions.second >= 1, "region dimensions must be >= 1");
  usage_check(c.threads >= 1, "--threads must be >= 1");
  usage_check(c.repetitions >= 1, "--reps must be >= 1");
  if (c.command == Command::kEvalSplit) {
    usage_check(c.probe_fraction > 0.0 && c.probe_fraction < 1.0,
                "--probe-fraction must be in (0, 1)");
    usage_check(c.folds >= 1, "--folds must be >= 1");
  }
  if (c.command == Command::kBenchNoise) {
    usage_check(!c.variances.empty(), "--variances is required for bench-noise");
    for (double v : c.variances) {
      usage_check(std::isfinite(v) && v >= 0.0, "--variances must be >= 0");
    }
  }
  if (c.command == Command::kExtract) usage_check(c.out.has_value(), "--out is required for extract");
}

namespace {

LabeledDataset load(const RunConfig& c) {
  if (c.manifest) return load_dataset_manifest(*c.manifest, c.threads);
  if (c.dataset) return load_dataset(*c.dataset, c.threads);
  const auto& s = *c.synthetic;
  return synth_dataset(s.classes, s.per_class, s.width, s.height, c.seed);
}

FeatureConfig feature_config(const RunConfig& c, Descriptor d, const LabeledDataset& data) {
  FeatureConfig fc;
  fc.descriptor = d;
  fc.order = d == Descriptor::kLbp ? 1 : c.order;
  fc.bins = c.bins;
  if (c.regions.tile) {
    const auto& first = data[0].image;
    const auto grid = grid_for_tile(first.width(), first.height(), c.regions.first,
                                    c.regions.second);
    fc.grid_rows = grid.rows;
    fc.grid_cols = grid.cols;
  } else {
    fc.grid_rows = c.regions.first;
    fc.grid_cols = c.regions.second;
  }
  for (const auto& e : data.entries()) validate(fc, e.image.width(), e.image.height());
  return fc;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::kUnreadableFile, path.string() + " (cannot open for writing)");
  return f;
}

int effective_order(const FeatureConfig& fc) {
  return fc.descriptor == Descriptor::kLbp ? 1 : fc.order;
}

void run_extract(const RunConfig& c, const LabeledDataset& data, std::ostream& out) {
  const auto fc = feature_config(c, c.descriptors.front(), data);
  const auto features = extract_features(data, fc, c.threads);

  nlohmann::ordered_json doc;
  doc["descriptor"] = std::string(to_string(fc.descriptor));
  doc["order"] = effective_order(fc);
  doc["grid"] = {fc.grid_rows, fc.grid_cols};
  doc["bins"] = fc.bins;
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < features.size(); ++i) {
    nlohmann::ordered_json e;
    e["path"] = data[i].source;
    e["label"] = data[i].label;
    e["vector"] = features[i].values;
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  auto f = open_out(*c.out);
  f << doc.dump() << '\n';
  out << "extracted " << features.size() << " features, descriptor=" << to_string(fc.descriptor)
      << " length=" << feature_length(fc) << '\n';
}

void run_eval_loo(const RunConfig& c, const LabeledDataset& data, std::ostream& out) {
  const auto fc = feature_config(c, c.descriptors.front(), data);
  const auto report = evaluate_loo(data, fc, c.threads);
  if (c.out) {
    auto f = open_out(*c.out);
    write_eval_csv(f, data, report);
  }
  out << "gamma=" << format_rate(report.recognition_rate()) << " Nm=" << report.matches
      << " Nt=" << report.total << '\n';
}

void run_eval_split(const RunConfig& c, const LabeledDataset& data, std::ostream& out) {
  const auto fc = feature_config(c, c.descriptors.front(), data);
  const auto report =
      evaluate_split_kfold(data, fc, c.probe_fraction, c.folds, c.seed, c.threads);
  if (c.out) {
    auto f = open_out(*c.out);
    write_kfold_csv(f, data, report);
  }
  out << "gamma=" << format_rate(report.average_rate()) << " folds=" << report.folds.size()
      << " probe_fraction=" << c.probe_fraction << '\n';
}

void run_bench_time(const RunConfig& c, const LabeledDataset& data, std::ostream& out) {
  std::vector<TimingRow> rows;
  for (auto d : c.descriptors) {
    const auto fc = feature_config(c, d, data);
    rows.push_back(time_descriptor(data, fc, c.repetitions, 1));
    if (c.threads > 1) rows.push_back(time_extraction(data, fc, c.repetitions, c.threads));
  }
  if (c.out) {
    auto f = open_out(*c.out);
    write_timing_csv(f, rows);
  }
  std::ostringstream line;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i) line << "; ";
    line << to_string(r.descriptor) << "[threads=" << r.threads
         << "] t_e=" << r.extraction_seconds.value_or(0.0) << 's';
    if (r.match_seconds) line << " t_m=" << *r.match_seconds << 's';
  }
  out << line.str() << '\n';
}

void run_bench_noise(const RunConfig& c, const LabeledDataset& data, std::ostream& out) {
  std::vector<NoiseSeries> series;
  for (auto d : c.descriptors) {
    const auto fc = feature_config(c, d, data);
    series.push_back({fc, noise_sweep(data, fc, c.variances, c.seed, c.threads)});
  }
  if (c.out) {
    auto f = open_out(*c.out);
    write_noise_csv(f, series);
  }
  std::ostringstream line;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) line << "; ";
    line << to_string(series[i].config.descriptor) << ':';
    for (const auto& p : series[i].points) {
      line << ' ' << p.variance << '=' << format_rate(p.recognition_rate());
    }
  }
  out << line.str() << '\n';
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  try {
    const auto data = load(c);
    switch (c.command) {
      case Command::kExtract:
        run_extract(c, data, out);
        break;
      case Command::kEvalLoo:
        run_eval_loo(c, data, out);
        break;
      case Command::kEvalSplit:
        run_eval_split(c, data, out);
        break;
      case Command::kBenchTime:
        run_bench_time(c, data, out);
        break;
      case Command::kBenchNoise:
        run_bench_noise(c, data, out);
        break;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

namespace {

struct RawFlags {
  std::string dataset, manifest, synthetic, size = "64x64", grid, tile, seed, out;
  std::vector<std::string> descriptors;
  std::vector<double> variances;
};

void add_common(CLI::App* sub, RawFlags& raw, RunConfig& c, bool multi_descriptor) {
  sub->add_option("--dataset", raw.dataset,
                  "Dataset root (root/<class>/<images>) or CSV manifest");
  sub->add_option("--manifest", raw.manifest,
                  "CSV manifest of relative_path,label; wins over --dataset");
  sub->add_option("--synthetic", raw.synthetic,
                  "Generate CLASSESxPER_CLASS synthetic images instead of loading");
  sub->add_option("--size", raw.size, "Synthetic image size WxH")->capture_default_str();
  if (multi_descriptor) {
    sub->add_option("--descriptors,--descriptor", raw.descriptors,
                    "Comma-separated descriptors: ldgp, ldp, lbp (default ldgp,ldp)")
        ->delimiter(',');
  } else {
    sub->add_option("--descriptor", raw.descriptors, "Descriptor: ldgp, ldp or lbp (default ldgp)")
        ->expected(1);
  }
  sub->add_option("--order", c.order, "Pattern order n >= 2 (ignored for lbp)")
      ->capture_default_str();
  auto* grid = sub->add_option("--grid", raw.grid, "Region grid RxC, counted in regions (default 4x4)");
  auto* tile = sub->add_option("--tile", raw.tile, "Region tile WxH in pixels, alternative to --grid");
  grid->excludes(tile);
  sub->add_option("--bins", c.bins, "Histogram bins per region and code image (power of two)")
      ->capture_default_str();
  sub->add_option("--seed", raw.seed,
                  "RNG seed; falls back to $LDGP_SEED, then 0");
  sub->add_option("--out", raw.out, "Output file (JSON for extract, CSV otherwise)");
  sub->add_option("--threads", c.threads, "Worker threads for extraction and matching")
      ->capture_default_str();
}

std::uint64_t parse_seed(const std::string& text, const std::string& source) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(source + " must be a non-negative integer, got '" + text + "'");
  }
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local pattern descriptors for face recognition: extraction, evaluation, benchmarks",
               "ldgp"};
  app.require_subcommand(1);

  RunConfig c;
  RawFlags raw;

  auto* extract = app.add_subcommand("extract", "Extract spatial-histogram features to JSON");
  add_common(extract, raw, c, false);
  auto* loo = app.add_subcommand("eval-loo", "Leave-one-out 1-NN recognition rate");
  add_common(loo, raw, c, false);
  auto* split = app.add_subcommand("eval-split", "Random probe/gallery splits averaged over folds");
  add_common(split, raw, c, false);
  split->add_option("--probe-fraction", c.probe_fraction, "Fraction of images used as probes")
      ->capture_default_str();
  split->add_option("--folds", c.folds, "Number of random splits to average")
      ->capture_default_str();
  auto* bench = app.add_subcommand("bench-time", "Median extraction and LOO match times");
  add_common(bench, raw, c, true);
  bench->add_option("--reps", c.repetitions, "Repetitions per measurement (median reported)")
      ->capture_default_str();
  auto* noise = app.add_subcommand("bench-noise", "Recognition rate of noisy probes vs clean gallery");
  add_common(noise, raw, c, true);
  noise->add_option("--variances", raw.variances, "Comma-separated Gaussian noise variances")
      ->delimiter(',')
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (extract->parsed()) c.command = Command::kExtract;
    if (loo->parsed()) c.command = Command::kEvalLoo;
    if (split->parsed()) c.command = Command::kEvalSplit;
    if (bench->parsed()) c.command = Command::kBenchTime;
    if (noise->parsed()) c.command = Command::kBenchNoise;

    if (!raw.dataset.empty()) c.dataset = raw.dataset;
    if (!raw.manifest.empty()) c.manifest = raw.manifest;
    if (!raw.synthetic.empty()) {
      const auto [classes, per_class] = parse_pair(raw.synthetic, "--synthetic");
      const auto [w, h] = parse_pair(raw.size, "--size");
      c.synthetic = SyntheticSpec{classes, per_class, w, h};
    }
    if (raw.descriptors.empty()) {
      raw.descriptors = is_bench(c.command) ? std::vector<std::string>{"ldgp", "ldp"}
                                            : std::vector<std::string>{"ldgp"};
    }
    c.descriptors.clear();
    for (const auto& d : raw.descriptors) {
      const auto parsed = parse_descriptor(d);
      if (!parsed) throw UsageError("unknown descriptor '" + d + "'");
      c.descriptors.push_back(*parsed);
    }
    if (!raw.tile.empty()) {
      const auto [w, h] = parse_pair(raw.tile, "--tile");
      c.regions = {true, w, h};
    } else if (!raw.grid.empty()) {
      const auto [r, cols] = parse_pair(raw.grid, "--grid");
      c.regions = {false, r, cols};
    }
    if (!raw.seed.empty()) {
      c.seed = parse_seed(raw.seed, "--seed");
    } else if (const char* env = std::getenv("LDGP_SEED"); env && *env) {
      c.seed = parse_seed(env, "LDGP_SEED");
    }
    if (!raw.out.empty()) c.out = raw.out;
    c.variances = raw.variances;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }
  return run(c, out, err);
}

}  // namespace ldgp::cli
