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

#ifndef CAI_RANDOM_HPP_
#define CAI_RANDOM_HPP_

#include <cstdint>
#include <optional>
#include <random>

namespace cai {

// Seeded sample source with a fully specified output sequence: Mersenne
// Twister 64 for raw bits, 53-bit mantissa uniforms, Box-Muller normals.
// The std:: distribution adaptors are avoided because their algorithms are
// implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for (seed, purpose, index), e.g. one per filter.
  static RandomStream derive(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index);

  std::uint64_t bits() { return engine_(); }
  // Uniform on [0, 1).
  double uniform();
  double uniform(double low, double high) { return low + (high - low) * uniform(); }
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }
  // +1.0 or -1.0 with equal probability.
  double sign() { return (bits() >> 63) ? -1.0 : 1.0; }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Seed of the stream RandomStream::derive(seed, purpose, index) would use.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index);

}  // namespace cai

#endif  // CAI_RANDOM_HPP_
