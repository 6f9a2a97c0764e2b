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

// Complex FFT engine behind the real transforms in spectral.cpp.
// Lengths whose prime factors are all <= kMaxDirectRadix use a recursive
// mixed-radix Cooley-Tukey decomposition; anything else goes through
// Bluestein's chirp-z algorithm on a power-of-two plan.

#ifndef CAI_SRC_FFT_HPP_
#define CAI_SRC_FFT_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "cai/tensor.hpp"

namespace cai::fft {

inline constexpr std::size_t kMaxDirectRadix = 13;

class Plan {
 public:
  explicit Plan(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  // In-place exp(-2 pi i jk/n) transform, unnormalized.
  void forward(std::span<Complex> data) const;
  // In-place exp(+2 pi i jk/n) transform, unnormalized.
  void backward(std::span<Complex> data) const;

 private:
  void mixed_radix(const Complex* in, std::size_t stride, Complex* out, std::size_t n,
                   std::size_t depth) const;
  void bluestein(std::span<Complex> data) const;

  std::size_t n_;
  std::vector<std::size_t> factors_;
  std::vector<Complex> twiddles_;  // exp(-2 pi i j / n), j < n

  // Bluestein state, empty for smooth lengths.
  std::vector<Complex> chirp_;
  std::vector<Complex> chirp_filter_spectrum_;
  std::shared_ptr<const Plan> padded_;
};

// Shared read-only plan for length n; safe to call from several threads.
std::shared_ptr<const Plan> plan_for(std::size_t n);

}  // namespace cai::fft

#endif  // CAI_SRC_FFT_HPP_
