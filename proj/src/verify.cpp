/* Copyright 2026 The cai-init Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cai/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>

#include "cai/errors.hpp"
#include "cai/spectral.hpp"
#include "json.hpp"

namespace cai {
namespace {

// Kernel slices of a rank-3 (1-D) or rank-4 (2-D) bank.
struct SliceLayout {
  std::size_t filters;
  std::size_t stack;
  std::size_t rows;
  std::size_t cols;  // 0 for 1-D kernels
  std::size_t slice_size() const { return cols ? rows * cols : rows; }
  std::size_t spectral_size() const { return cols ? rows * half_extent(cols) : half_extent(rows); }
};

SliceLayout layout_of(const RealTensor& weights) {
  const Shape& s = weights.shape();
  if (s.size() == 4) return {s[0], s[1], s[2], s[3]};
  if (s.size() == 3) return {s[0], s[1], s[2], 0};
  throw DomainError("kernel bank must be rank 3 or 4, got " + shape_to_string(s));
}

RealTensor slice_of(const RealTensor& weights, const SliceLayout& layout, std::size_t index) {
  const std::size_t n = layout.slice_size();
  auto first = weights.values().begin() + static_cast<std::ptrdiff_t>(index * n);
  std::vector<double> values(first, first + static_cast<std::ptrdiff_t>(n));
  return layout.cols ? RealTensor({layout.rows, layout.cols}, std::move(values))
                     : RealTensor({layout.rows}, std::move(values));
}

ComplexTensor half_spectrum(const RealTensor& slice) {
  return slice.rank() == 2 ? forward_2d(slice) : forward_1d(slice);
}

// Sum of |A| over the full spectrum recovered from a half-spectrum.
double full_spectrum_l1(const ComplexTensor& half, const SliceLayout& layout) {
  const ComplexTensor two =
      half.rank() == 2 ? half
                       : ComplexTensor({1, half.extent(0)}, {half.data().begin(), half.data().end()});
  const std::size_t cols = layout.cols ? layout.cols : layout.rows;
  const ComplexTensor full = hermitian_extend_2d(two, cols);
  double sum = 0.0;
  for (const Complex& a : full.data()) sum += std::abs(a);
  return sum;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_iid(Scheme s) {
  return s == Scheme::kHeNormal || s == Scheme::kHeUniform || s == Scheme::kGlorotNormal ||
         s == Scheme::kUniform || s == Scheme::kNormal;
}

}  // namespace

std::uint64_t determinism_hash(const RealTensor& weights) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double w : weights.data()) {
    const auto bits = std::bit_cast<std::uint64_t>(w);
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (bits >> (8 * byte)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

std::string hash_to_hex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

double spectral_gram_residual(const RealTensor& weights) {
  const SliceLayout layout = layout_of(weights);
  const std::size_t dim = layout.spectral_size();

  std::vector<ComplexTensor> spectra;
  spectra.reserve(layout.filters * layout.stack);
  double diagonal = 0.0;
  for (std::size_t idx = 0; idx < layout.filters * layout.stack; ++idx) {
    spectra.push_back(half_spectrum(slice_of(weights, layout, idx)));
    for (const Complex& a : spectra.back().data()) diagonal += std::norm(a);
  }
  diagonal /= static_cast<double>(spectra.size());
  if (!(diagonal > 0.0)) return 1.0;

  double residual = 0.0;
  for (std::size_t i = 0; i < layout.filters; ++i) {
    const ComplexTensor* row = &spectra[i * layout.stack];
    for (std::size_t block = 0; block < layout.stack; block += dim) {
      const std::size_t end = std::min(layout.stack, block + dim);
      for (std::size_t a = block; a < end; ++a) {
        for (std::size_t b = a; b < end; ++b) {
          Complex g{};
          for (std::size_t e = 0; e < dim; ++e) g += row[a][e] * std::conj(row[b][e]);
          const double expected = a == b ? 1.0 : 0.0;
          residual = std::max(residual, std::abs(g / diagonal - expected));
        }
      }
    }
  }
  return residual;
}

double bound_margin(const RealTensor& weights) {
  const SliceLayout layout = layout_of(weights);
  const double norm = 1.0 / static_cast<double>(layout.slice_size());
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t idx = 0; idx < layout.filters * layout.stack; ++idx) {
    const RealTensor slice = slice_of(weights, layout, idx);
    const double bound = norm * full_spectrum_l1(half_spectrum(slice), layout);
    for (double w : slice.data()) margin = std::min(margin, bound - std::abs(w));
  }
  return margin;
}

StatsReport analyze(const FilterBank& bank, const AnalyzeOptions& options) {
  const RealTensor& w = bank.weights;
  StatsReport report;
  report.scheme = std::string(scheme_name(bank.spec.scheme));
  report.shape = w.shape();
  report.seed = bank.spec.seed;
  report.mean = population_mean(w);
  report.variance = w.size() >= 2 ? population_variance(w) : 0.0;
  report.variance_target = bank.spec.variance_target();
  for (double v : w.data()) report.max_abs = std::max(report.max_abs, std::abs(v));
  if (options.spectral && (w.rank() == 3 || w.rank() == 4)) {
    report.spectral_gram_residual = spectral_gram_residual(w);
    report.bound_margin = bound_margin(w);
  }
  report.hash = determinism_hash(w);
  return report;
}

std::string_view assertion_name(Assertion assertion) {
  switch (assertion) {
    case Assertion::kVarianceMatch: return "variance-match";
    case Assertion::kMeanBand: return "mean-band";
    case Assertion::kEntryBound: return "entry-bound";
    case Assertion::kSpectralOrthogonality: return "spectral-orthogonality";
    case Assertion::kDeterminismHash: return "determinism-hash";
  }
  return "unknown";
}

Policy make_policy(std::string_view name, const InitSpec& spec, bool float32_storage) {
  Policy policy;
  policy.name = std::string(name);
  policy.float32_storage = float32_storage;
  if (name == "none") return policy;

  const Scheme scheme = parse_scheme(name);
  const std::size_t count = checked_element_count(spec.shape);
  if (scheme == Scheme::kCai) {
    if (float32_storage) {
      policy.variance_rel_tol = 1e-6;
      policy.gram_tol = 1e-5;
      policy.bound_slack = 1e-6;
    }
    if (spec.apply_scale) policy.assertions.push_back(Assertion::kVarianceMatch);
    policy.assertions.push_back(Assertion::kMeanBand);
    if (!spec.apply_scale) policy.assertions.push_back(Assertion::kEntryBound);
    if (spec.eps_std == 0.0) policy.assertions.push_back(Assertion::kSpectralOrthogonality);
  } else if (is_iid(scheme)) {
    // 1% at 10^6 elements; widened to six standard errors of the sample
    // variance for smaller banks.
    policy.variance_rel_tol = std::max(0.01, 6.0 * std::sqrt(2.0 / static_cast<double>(count)));
    policy.assertions.push_back(Assertion::kVarianceMatch);
    policy.assertions.push_back(Assertion::kMeanBand);
  } else {
    policy.assertions.push_back(Assertion::kMeanBand);
  }
  policy.assertions.push_back(Assertion::kDeterminismHash);
  return policy;
}

std::vector<AssertionResult> check(const FilterBank& bank, const Policy& policy) {
  std::vector<AssertionResult> results;
  if (policy.assertions.empty()) return results;

  const RealTensor& w = bank.weights;
  const double count = static_cast<double>(w.size());
  const double variance = w.size() >= 2 ? population_variance(w) : 0.0;

  // Targets come from the policy's scheme applied to the bank's spec.
  InitSpec target_spec = bank.spec;
  target_spec.scheme = policy.name == "none" ? bank.spec.scheme : parse_scheme(policy.name);
  const double target = target_spec.variance_target();
  const bool pre_scale = target_spec.scheme == Scheme::kCai && !bank.spec.apply_scale;

  for (Assertion assertion : policy.assertions) {
    AssertionResult r{std::string(assertion_name(assertion))};
    switch (assertion) {
      case Assertion::kVarianceMatch:
        r.measured = target > 0.0 ? std::abs(variance / target - 1.0) : std::abs(variance);
        r.threshold = policy.variance_rel_tol;
        r.passed = r.measured <= r.threshold;
        break;
      case Assertion::kMeanBand: {
        double center = 0.0;
        if (target_spec.scheme == Scheme::kNormal) center = bank.spec.mean;
        if (target_spec.scheme == Scheme::kUniform) center = 0.5 * (bank.spec.low + bank.spec.high);
        const double sigma = std::sqrt(pre_scale ? variance : target);
        r.measured = std::abs(population_mean(w) - center);
        r.threshold = policy.mean_sigmas * sigma / std::sqrt(count);
        r.passed = r.measured <= r.threshold;
        break;
      }
      case Assertion::kEntryBound:
        r.measured = bound_margin(w);
        r.threshold = -policy.bound_slack;
        r.passed = r.measured >= r.threshold;
        break;
      case Assertion::kSpectralOrthogonality:
        r.measured = spectral_gram_residual(w);
        r.threshold = policy.gram_tol;
        r.passed = r.measured < r.threshold;
        break;
      case Assertion::kDeterminismHash: {
        RealTensor regenerated = initialize(bank.spec).weights;
        if (policy.float32_storage) {
          for (double& v : regenerated.data()) v = static_cast<double>(static_cast<float>(v));
        }
        r.passed = determinism_hash(regenerated) == determinism_hash(w);
        r.measured = r.passed ? 1.0 : 0.0;
        r.threshold = 1.0;
        break;
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string to_key_value(const StatsReport& report) {
  std::string out;
  out += "scheme=" + report.scheme + "\n";
  out += "shape=" + shape_to_string(report.shape) + "\n";
  out += "seed=" + std::to_string(report.seed) + "\n";
  out += "mean=" + format_double(report.mean) + "\n";
  out += "variance=" + format_double(report.variance) + "\n";
  out += "variance_target=" + format_double(report.variance_target) + "\n";
  out += "max_abs=" + format_double(report.max_abs) + "\n";
  out += "spectral_gram_residual=" + format_double(report.spectral_gram_residual) + "\n";
  out += "bound_margin=" + format_double(report.bound_margin) + "\n";
  out += "hash=" + hash_to_hex(report.hash) + "\n";
  return out;
}

std::string to_json(const StatsReport& report) {
  nlohmann::ordered_json j;
  j["scheme"] = report.scheme;
  j["shape"] = report.shape;
  j["seed"] = report.seed;
  j["mean"] = report.mean;
  j["variance"] = report.variance;
  j["variance_target"] = report.variance_target;
  j["max_abs"] = report.max_abs;
  j["spectral_gram_residual"] = report.spectral_gram_residual;
  j["bound_margin"] = report.bound_margin;
  j["hash"] = hash_to_hex(report.hash);
  return j.dump(2) + "\n";
}

std::string to_key_value(const std::vector<AssertionResult>& results) {
  std::string out;
  for (const AssertionResult& r : results) {
    out += r.name + "=" + (r.passed ? "PASS" : "FAIL") + " measured=" + format_double(r.measured) +
           " threshold=" + format_double(r.threshold) + "\n";
  }
  return out;
}

std::string to_json(const std::vector<AssertionResult>& results) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const AssertionResult& r : results) {
    j.push_back({{"name", r.name},
                 {"passed", r.passed},
                 {"measured", r.measured},
                 {"threshold", r.threshold}});
  }
  return j.dump(2) + "\n";
}

}  // namespace cai
