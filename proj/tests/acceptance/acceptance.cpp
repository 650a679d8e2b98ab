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

// Acceptance suite. Prints one line per criterion and exits nonzero if any
// binding criterion fails. Criterion 10 needs a face dataset laid out as one
// directory per subject; point LDGP_ATT_DIR at it to enable the check.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ldgp/baseline.hpp"
#include "ldgp/dataset.hpp"
#include "ldgp/derivative.hpp"
#include "ldgp/feature.hpp"
#include "ldgp/ldgp_codec.hpp"
#include "ldgp/noise.hpp"
#include "ldgp/recognition.hpp"
#include "ldgp/timing.hpp"
#include "support/oracles.hpp"

namespace {

using namespace ldgp;

enum class Outcome { kPass, kFail, kSkip };

struct Verdict {
  Outcome outcome = Outcome::kPass;
  std::string detail;
};

Verdict pass(std::string detail = {}) { return {Outcome::kPass, std::move(detail)}; }
Verdict fail(std::string detail) { return {Outcome::kFail, std::move(detail)}; }
Verdict skip(std::string detail) { return {Outcome::kSkip, std::move(detail)}; }

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::vector<int> codes_of(const CodeImage& c) { return oracle::as_ints(c.codes()); }

GrayImage transform(const GrayImage& img, int scale, int shift) {
  std::vector<std::uint8_t> px(img.pixels().begin(), img.pixels().end());
  for (auto& p : px) p = static_cast<std::uint8_t>(p * scale + shift);
  return GrayImage(img.width(), img.height(), std::move(px));
}

// All code images of every descriptor family for one image.
std::vector<CodeImage> all_codes(const GrayImage& img) {
  std::vector<CodeImage> out;
  for (int n = 2; n <= 4; ++n) out.push_back(ldgp_image(img, n));
  out.push_back(lbp_image(img));
  for (int n = 2; n <= 3; ++n)
    for (auto& c : ldp_image(img, n)) out.push_back(std::move(c));
  return out;
}

Verdict worked_example() {
  // Centre 3 with right 2, upper right 6, up 4, upper left 1.
  const GrayImage fig(3, 3, {1, 4, 6,  //
                             9, 3, 2,  //
                             5, 5, 5});
  const auto fields = derivative_fields(fig, 1);
  const std::array<std::int32_t, 4> got = {fields[0].at(1, 1), fields[1].at(1, 1),
                                           fields[2].at(1, 1), fields[3].at(1, 1)};
  if (got != std::array<std::int32_t, 4>{1, -3, -1, 2})
    return fail(fmt("derivatives (%g, %g, %g, ...)", got[0], got[1], got[2]));
  const unsigned code = ldgp_code(1, -3, -1, 2);
  if (code != 0b110000) return fail(fmt("code %g", code));
  if (ldgp_image(fig, 2).at(1, 1) != 48) return fail("image code differs from 48");
  return pass("derivatives (1,-3,-1,2), code 110000 = 48");
}

Verdict truth_table() {
  long long checked = 0;
  for (int a = -1024; a <= 1024; ++a) {
    for (int b = -1024; b <= 1024; ++b) {
      if (encode_pair(a, b) != (a > b ? 1u : 0u)) return fail(fmt("a=%g b=%g", a, b));
      ++checked;
    }
  }
  return pass(fmt("%.0f pairs", static_cast<double>(checked)));
}

Verdict oracle_equivalence() {
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 100; ++i) {
    const auto img = oracle::random_image(16, 16, rng);
    for (int n = 2; n <= 4; ++n)
      if (codes_of(ldgp_image(img, n)) != oracle::ldgp(img, n))
        return fail(fmt("ldgp order %g differs on image %g", n, i));
    if (codes_of(ldgp_image(img, 2)) != oracle::ldgp2(img))
      return fail(fmt("ldgp order 2 differs from the direct oracle on image %g", i));
    if (codes_of(ldgp_image(img, 3)) != oracle::ldgp3_unrolled(img))
      return fail(fmt("ldgp order 3 differs from the unrolled oracle on image %g", i));
    if (codes_of(lbp_image(img)) != oracle::lbp(img)) return fail(fmt("lbp differs on image %g", i));
    const auto ldp = ldp_image(img, 2);
    for (int d = 0; d < 4; ++d)
      if (codes_of(ldp[d]) != oracle::ldp(img, 2, d))
        return fail(fmt("ldp direction %g differs on image %g", d, i));
  }
  return pass("100 images, ldgp n=2,3,4, lbp, ldp n=2");
}

Verdict feature_lengths() {
  FeatureConfig cfg;
  cfg.grid_rows = cfg.grid_cols = 4;
  cfg.bins = 8;
  const auto img = GrayImage::filled(32, 32, 7);
  cfg.descriptor = Descriptor::kLdgp;
  const auto a = extract_feature(img, cfg).size();
  cfg.descriptor = Descriptor::kLdp;
  const auto b = extract_feature(img, cfg).size();
  if (a != 128 || b != 512) return fail(fmt("ldgp %g, ldp %g", a, b));
  return pass("ldgp 128, ldp 512");
}

Verdict invariance() {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 50; ++i) {
    const auto img = oracle::random_image(20, 17, rng, 0, 60);
    const auto base = all_codes(img);
    for (int shift : {1, 37, 195})
      if (all_codes(transform(img, 1, shift)) != base) return fail(fmt("gray shift %g", shift));
    for (int scale : {2, 3, 4})
      if (all_codes(transform(img, scale, 0)) != base) return fail(fmt("scale %g", scale));
  }

  for (int i = 0; i < 40; ++i) {
    const int w = 9 + static_cast<int>(rng() % 40);
    const int h = 9 + static_cast<int>(rng() % 40);
    const auto img = oracle::random_image(w, h, rng);
    for (auto d : {Descriptor::kLdgp, Descriptor::kLdp, Descriptor::kLbp}) {
      FeatureConfig cfg;
      cfg.descriptor = d;
      cfg.order = 2 + static_cast<int>(rng() % 3);
      cfg.grid_rows = 1 + static_cast<int>(rng() % 5);
      cfg.grid_cols = 1 + static_cast<int>(rng() % 5);
      cfg.bins = 1 << (rng() % (code_bits(d) + 1));
      const auto f = extract_feature(img, cfg);
      const auto regions = partition_regions(w, h, cfg.grid_rows, cfg.grid_cols);
      const int per = images_per_descriptor(d);
      for (std::size_t r = 0; r < regions.size(); ++r) {
        for (int k = 0; k < per; ++k) {
          std::uint64_t sum = 0;
          for (int b = 0; b < cfg.bins; ++b)
            sum += f.values[(r * per + k) * cfg.bins + b];
          if (sum != static_cast<std::uint64_t>(regions[r].area()))
            return fail(fmt("region %g sums to %g", r, sum));
        }
      }
    }
  }

  std::uniform_int_distribution<std::uint32_t> v(0, 1000);
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::uint32_t> x(64), y(64), z(64);
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = v(rng);
      y[j] = t % 10 == 0 ? x[j] : v(rng);
      z[j] = v(rng);
    }
    const auto xy = l1_distance(x, y), yx = l1_distance(y, x);
    const auto xz = l1_distance(x, z), zy = l1_distance(z, y);
    if (l1_distance(x, x) != 0) return fail("d(x,x) != 0");
    if ((xy == 0) != (x == y)) return fail("identity of indiscernibles");
    if (xy != yx) return fail("symmetry");
    if (xy > xz + zy) return fail("triangle inequality");
    if (xy != oracle::l1(x, y)) return fail("distance differs from oracle");
  }
  return pass("shift/scale on 7 code families, region sums, 1000 L1 triples");
}

Verdict duplicate_loo() {
  const auto base = synth_dataset(8, 1, 40, 40, 5);
  std::vector<DatasetEntry> entries;
  for (const auto& e : base.entries()) {
    entries.push_back({e.image, e.label, e.source + "#a"});
    entries.push_back({e.image, e.label, e.source + "#b"});
  }
  const LabeledDataset ds(std::move(entries));
  for (auto d : {Descriptor::kLdgp, Descriptor::kLdp, Descriptor::kLbp}) {
    FeatureConfig cfg;
    cfg.descriptor = d;
    const auto r = evaluate_loo(ds, cfg);
    if (r.matches != r.total) return fail(fmt("gamma %g", r.recognition_rate()));
  }
  return pass("gamma = 100 for ldgp, ldp, lbp");
}

Verdict timing_direction() {
  const auto ds = synth_dataset(10, 10, 128, 128, 11);
  FeatureConfig cfg;
  cfg.descriptor = Descriptor::kLdgp;
  const auto a = time_descriptor(ds, cfg, 7);
  cfg.descriptor = Descriptor::kLdp;
  const auto b = time_descriptor(ds, cfg, 7);
  const double re = *a.extraction_seconds / *b.extraction_seconds;
  const double rm = *a.match_seconds / *b.match_seconds;
  const auto detail = fmt("extraction ratio %.3f, matching ratio %.3f", re, rm);
  return re <= 0.5 && rm <= 0.5 ? pass(detail) : fail(detail);
}

Verdict linearity() {
  const auto all = synth_dataset(20, 10, 128, 128, 13);
  std::vector<double> x, y;
  for (std::size_t gamma : {25, 50, 100, 200}) {
    std::vector<DatasetEntry> subset(all.entries().begin(), all.entries().begin() + gamma);
    const LabeledDataset ds(std::move(subset));
    const auto row = time_extraction(ds, FeatureConfig{}, 15);
    x.push_back(static_cast<double>(gamma));
    y.push_back(*row.extraction_seconds);
  }
  const auto fit = fit_line(x, y);
  const auto detail = fmt("R^2 = %.4f, slope %.3g s/image", fit.r_squared, fit.slope);
  return fit.r_squared >= 0.95 ? pass(detail) : fail(detail);
}

Verdict noise_statistics() {
  const auto img = GrayImage::filled(1000, 1000, 128);
  if (add_gaussian_noise(img, 0.0, 3) != img) return fail("variance 0 changed the image");
  const auto noisy = add_gaussian_noise(img, 25.0, 3);
  double sum = 0.0, sq = 0.0;
  for (auto p : noisy.pixels()) {
    const double d = static_cast<double>(p) - 128.0;
    sum += d;
    sq += d * d;
  }
  const double n = static_cast<double>(noisy.size());
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  const auto detail = fmt("variance %.3f, mean offset %.4f", var, mean);
  return std::abs(var - 25.0) <= 1.25 && std::abs(mean) <= 0.05 ? pass(detail) : fail(detail);
}

Verdict face_dataset() {
  const char* dir = std::getenv("LDGP_ATT_DIR");
  if (dir == nullptr || *dir == '\0') return skip("LDGP_ATT_DIR not set");
  const auto ds = load_dataset(dir);
  FeatureConfig cfg;
  cfg.bins = 16;
  const auto r = evaluate_loo(ds, cfg);
  const double g = r.recognition_rate();
  const auto detail = fmt("gamma %.2f over %g images", g, static_cast<double>(r.total));
  return std::abs(g - 97.5) <= 2.0 ? pass(detail) : fail(detail);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked example", worked_example},
      {2, "pair encoding truth table", truth_table},
      {3, "oracle equivalence", oracle_equivalence},
      {4, "feature length ratio", feature_lengths},
      {5, "invariance suite", invariance},
      {6, "duplicate leave-one-out", duplicate_loo},
      {7, "timing direction", timing_direction},
      {8, "extraction linearity", linearity},
      {9, "noise statistics", noise_statistics},
      {10, "face dataset reproduction (optional)", face_dataset},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const char* tag = v.outcome == Outcome::kPass ? "PASS" : v.outcome == Outcome::kFail ? "FAIL" : "SKIP";
    std::printf("[%s] %2d %s: %s\n", tag, c.id, c.name, v.detail.c_str());
    std::fflush(stdout);
    if (v.outcome == Outcome::kFail) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
