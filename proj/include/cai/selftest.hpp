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

#ifndef CAI_SELFTEST_HPP_
#define CAI_SELFTEST_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cai {

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  double worst = 0.0;      // largest observed error (or smallest slack)
  double tolerance = 0.0;
};

struct SelftestOptions {
  std::uint64_t seed = 20170616;
};

// Randomized invariant sweeps over the spectral and orthobasis modules:
// round trips, Theorem-1 style eigenvector bounds, the inverse-transform
// magnitude bound and the circular convolution theorem.
std::vector<SelftestResult> run_selftest(const SelftestOptions& options = {});

std::string format_selftest(const std::vector<SelftestResult>& results);

}  // namespace cai

#endif  // CAI_SELFTEST_HPP_
