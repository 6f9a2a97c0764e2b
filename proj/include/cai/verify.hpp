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

#ifndef CAI_VERIFY_HPP_
#define CAI_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cai/initializers.hpp"
#include "cai/tensor.hpp"

namespace cai {

struct StatsReport {
  std::string scheme;
  Shape shape;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double variance = 0.0;
  double variance_target = 0.0;
  double max_abs = 0.0;
  // max |G / g - I| over every filter's blockwise spectral Gram matrices,
  // g being the mean Gram diagonal of the whole bank.
  double spectral_gram_residual = 0.0;
  // min over entries of (1/(r c)) sum |A| - |w|, per kernel slice. Only
  // meaningful for banks generated without the final rescale.
  double bound_margin = 0.0;
  std::uint64_t hash = 0;
};

// FNV-1a over the little-endian IEEE-754 bytes of every weight.
std::uint64_t determinism_hash(const RealTensor& weights);
std::string hash_to_hex(std::uint64_t hash);

struct AnalyzeOptions {
  bool spectral = true;  // skip the Gram and bound passes when false
};

StatsReport analyze(const FilterBank& bank, const AnalyzeOptions& options = {});

// Blockwise Gram residual of the forward-transformed kernel slices.
double spectral_gram_residual(const RealTensor& weights);
// Smallest slack of the inverse-transform magnitude bound over all slices.
double bound_margin(const RealTensor& weights);

enum class Assertion { kVarianceMatch, kMeanBand, kEntryBound, kSpectralOrthogonality, kDeterminismHash };

std::string_view assertion_name(Assertion assertion);

struct Policy {
  std::string name;
  std::vector<Assertion> assertions;
  double variance_rel_tol = 1e-9;
  double mean_sigmas = 4.0;
  double gram_tol = 1e-8;
  double bound_slack = 1e-12;
  // Weights went through float32 storage; the determinism check rounds the
  // regenerated bank the same way.
  bool float32_storage = false;
};

// Named policies: "none" plus one per scheme name. Which assertions apply
// depends on the spec (the bound only holds before the rescale, spectral
// orthogonality only without noise). Unknown names throw ConfigError.
Policy make_policy(std::string_view name, const InitSpec& spec, bool float32_storage = false);

struct AssertionResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
};

std::vector<AssertionResult> check(const FilterBank& bank, const Policy& policy);

// Line-oriented key=value rendering, fixed field order, %.17g doubles.
std::string to_key_value(const StatsReport& report);
std::string to_json(const StatsReport& report);
std::string to_key_value(const std::vector<AssertionResult>& results);
std::string to_json(const std::vector<AssertionResult>& results);

}  // namespace cai

#endif  // CAI_VERIFY_HPP_
