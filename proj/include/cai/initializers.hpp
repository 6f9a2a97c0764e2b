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

#ifndef CAI_INITIALIZERS_HPP_
#define CAI_INITIALIZERS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cai/tensor.hpp"

namespace cai {

enum class Scheme { kCai, kHeNormal, kHeUniform, kGlorotNormal, kOrthogonal, kUniform, kNormal };

// Accepts "cai", "he_normal", "he_uniform", "glorot_normal", "orthogonal",
// "uniform", "normal". Anything else is a ConfigError.
Scheme parse_scheme(std::string_view name);
std::string_view scheme_name(Scheme scheme);

// Everything needed to reproduce a bank. Rank-4 shapes are (f, s, r, c)
// 2-D kernels; rank-3 shapes are (f, s, r) 1-D kernels.
struct InitSpec {
  Shape shape;
  Scheme scheme = Scheme::kCai;
  std::uint64_t seed = 0;
  double eps_std = 0.05;
  std::optional<std::size_t> fan_in;  // defaults to s*r*c (or s*r)
  bool apply_scale = true;            // cai: false returns the pre-scale bank

  double gain = 1.0;                   // orthogonal
  double low = -0.05, high = 0.05;     // uniform
  double mean = 0.0, stddev = 0.3;     // normal

  std::size_t resolved_fan_in() const;
  std::size_t fan_out() const;
  // Population variance the scheme aims for.
  double variance_target() const;
  // Throws DomainError / ConfigError when the spec is unusable.
  void validate() const;
};

struct FilterBank {
  RealTensor weights;
  InitSpec spec;
};

// Dispatches on spec.scheme.
FilterBank initialize(const InitSpec& spec);

FilterBank cai_2d(const InitSpec& spec);
FilterBank cai_1d(const InitSpec& spec);
FilterBank he_normal(const InitSpec& spec);
FilterBank he_uniform(const InitSpec& spec);
FilterBank glorot_normal(const InitSpec& spec);
FilterBank orthogonal_flat(const InitSpec& spec);
FilterBank uniform_init(const InitSpec& spec);
FilterBank normal_init(const InitSpec& spec);

// Maps a real basis row of length rows * (cols/2 + 1) onto a half-spectrum
// whose Hermitian extension is self-consistent, so the inverse transform is
// lossless. Bins that must be self-conjugate (DC and Nyquist columns) pair
// row k with row rows-k as (x_k + i x_{rows-k}) / sqrt(2) and its conjugate.
// Every other bin takes the row value as a real number. The map preserves
// inner products: Re<stage(x), stage(y)> == <x, y>.
ComplexTensor stage_half_spectrum_2d(std::span<const double> row, std::size_t rows,
                                     std::size_t cols);
ComplexTensor stage_half_spectrum_1d(std::span<const double> row, std::size_t length);

}  // namespace cai

#endif  // CAI_INITIALIZERS_HPP_
