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

#include "cai/initializers.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cai/errors.hpp"
#include "cai/orthobasis.hpp"
#include "cai/random.hpp"
#include "cai/spectral.hpp"

namespace cai {
namespace {

// Stream purposes for RandomStream::derive.
constexpr std::uint64_t kBasisStream = 1;
constexpr std::uint64_t kNoiseStream = 2;
constexpr std::uint64_t kSampleStream = 3;

constexpr std::pair<Scheme, std::string_view> kSchemeNames[] = {
    {Scheme::kCai, "cai"},
    {Scheme::kHeNormal, "he_normal"},
    {Scheme::kHeUniform, "he_uniform"},
    {Scheme::kGlorotNormal, "glorot_normal"},
    {Scheme::kOrthogonal, "orthogonal"},
    {Scheme::kUniform, "uniform"},
    {Scheme::kNormal, "normal"},
};

void require_scheme(const InitSpec& spec, Scheme expected) {
  if (spec.scheme != expected) {
    throw ConfigError("initializer for '" + std::string(scheme_name(expected)) +
                      "' called with scheme '" + std::string(scheme_name(spec.scheme)) + "'");
  }
  spec.validate();
}

std::size_t kernel_size(const Shape& shape) {
  std::size_t n = 1;
  for (std::size_t axis = 2; axis < shape.size(); ++axis) n *= shape[axis];
  return n;
}

template <typename Sample>
FilterBank iid_bank(const InitSpec& spec, Sample&& sample) {
  RealTensor weights(spec.shape);
  RandomStream stream = RandomStream::derive(spec.seed, kSampleStream, 0);
  for (double& w : weights.data()) w = sample(stream);
  return {std::move(weights), spec};
}

// Rescales the bank so its population variance is 2 / fan_in. A one-element
// bank has no spread, so its magnitude is set to sqrt(2 / fan_in) instead.
void scale_to_he_variance(RealTensor& weights, const InitSpec& spec) {
  const double target = 2.0 / static_cast<double>(spec.resolved_fan_in());
  if (weights.size() == 1) {
    if (weights[0] == 0.0) throw NumericError("cai: single weight is zero; set eps_std > 0");
    scale_in_place(weights, std::sqrt(target) / std::abs(weights[0]));
    return;
  }
  const double variance = population_variance(weights);
  if (!(variance > 0.0)) {
    throw NumericError(
        "cai: bank has zero variance before scaling; the spectra are degenerate for this "
        "shape, set eps_std > 0 to break the symmetry");
  }
  scale_in_place(weights, std::sqrt(target / variance));
}

template <typename FillSlice>
FilterBank cai_bank(const InitSpec& spec, std::size_t spectral_dim, FillSlice&& fill_slice) {
  const std::size_t filters = spec.shape[0];
  const std::size_t stack = spec.shape[1];
  const std::size_t slice = kernel_size(spec.shape);
  RealTensor weights(spec.shape);

  for (std::size_t i = 0; i < filters; ++i) {
    const OrthoBasis basis =
        make_basis({stack, spectral_dim, derive_seed(spec.seed, kBasisStream, i)});
    RandomStream noise = RandomStream::derive(spec.seed, kNoiseStream, i);
    for (std::size_t j = 0; j < stack; ++j) {
      const std::span<const double> row =
          basis.matrix.data().subspan(j * spectral_dim, spectral_dim);
      const RealTensor kernel = fill_slice(row);
      double* out = weights.data().data() + (i * stack + j) * slice;
      for (std::size_t e = 0; e < slice; ++e) {
        out[e] = kernel[e] + (spec.eps_std > 0.0 ? noise.normal(0.0, spec.eps_std) : 0.0);
      }
    }
  }
  if (spec.apply_scale) scale_to_he_variance(weights, spec);
  return {std::move(weights), spec};
}

}  // namespace

Scheme parse_scheme(std::string_view name) {
  for (const auto& [scheme, label] : kSchemeNames) {
    if (label == name) return scheme;
  }
  throw ConfigError("unknown initialization scheme '" + std::string(name) + "'");
}

std::string_view scheme_name(Scheme scheme) {
  for (const auto& [s, label] : kSchemeNames) {
    if (s == scheme) return label;
  }
  return "unknown";
}

std::size_t InitSpec::resolved_fan_in() const {
  if (fan_in) return *fan_in;
  return shape.size() < 2 ? 1 : shape[1] * kernel_size(shape);
}

std::size_t InitSpec::fan_out() const {
  return shape.empty() ? 1 : shape[0] * kernel_size(shape);
}

double InitSpec::variance_target() const {
  switch (scheme) {
    case Scheme::kCai:
    case Scheme::kHeNormal:
    case Scheme::kHeUniform:
      return 2.0 / static_cast<double>(resolved_fan_in());
    case Scheme::kGlorotNormal:
      return 2.0 / static_cast<double>(resolved_fan_in() + fan_out());
    case Scheme::kOrthogonal: {
      const std::size_t rows = shape[0];
      const std::size_t cols = checked_element_count(shape) / rows;
      return gain * gain / static_cast<double>(std::max(rows, cols));
    }
    case Scheme::kUniform:
      return (high - low) * (high - low) / 12.0;
    case Scheme::kNormal:
      return stddev * stddev;
  }
  return 0.0;
}

void InitSpec::validate() const {
  checked_element_count(shape);
  if (shape.size() != 3 && shape.size() != 4) {
    throw DomainError("kernel shape must be rank 3 (f,s,r) or rank 4 (f,s,r,c), got " +
                      shape_to_string(shape));
  }
  if (!std::isfinite(eps_std) || eps_std < 0.0) throw DomainError("eps_std must be >= 0");
  if (fan_in && *fan_in == 0) throw DomainError("fan_in must be >= 1");
  if (!std::isfinite(gain)) throw DomainError("gain must be finite");
  if (!std::isfinite(low) || !std::isfinite(high) || high < low) {
    throw DomainError("uniform bounds must be finite with low <= high");
  }
  if (!std::isfinite(mean) || !std::isfinite(stddev) || stddev < 0.0) {
    throw DomainError("normal parameters must be finite with stddev >= 0");
  }
}

ComplexTensor stage_half_spectrum_2d(std::span<const double> row, std::size_t rows,
                                     std::size_t cols) {
  const std::size_t half = half_extent(cols);
  if (rows == 0 || cols == 0 || row.size() != rows * half) {
    throw DomainError("stage_half_spectrum_2d: row length does not match spectral extents");
  }
  ComplexTensor spectrum({rows, half});
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t l = 0; l < half; ++l) spectrum(k, l) = row[k * half + l];
  }

  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const bool even = cols % 2 == 0;
  for (std::size_t l = 0; l < half; ++l) {
    const bool self_conjugate_column = l == 0 || (even && l == cols / 2);
    if (!self_conjugate_column) continue;
    for (std::size_t k = 1; k < rows - k; ++k) {
      const double re = row[k * half + l];
      const double im = row[(rows - k) * half + l];
      spectrum(k, l) = Complex(re, im) * inv_sqrt2;
      spectrum(rows - k, l) = Complex(re, -im) * inv_sqrt2;
    }
  }
  return spectrum;
}

ComplexTensor stage_half_spectrum_1d(std::span<const double> row, std::size_t length) {
  if (length == 0 || row.size() != half_extent(length)) {
    throw DomainError("stage_half_spectrum_1d: row length does not match spectral extent");
  }
  ComplexTensor spectrum({row.size()});
  for (std::size_t l = 0; l < row.size(); ++l) spectrum[l] = row[l];
  return spectrum;
}

FilterBank initialize(const InitSpec& spec) {
  switch (spec.scheme) {
    case Scheme::kCai:
      return spec.shape.size() == 3 ? cai_1d(spec) : cai_2d(spec);
    case Scheme::kHeNormal:
      return he_normal(spec);
    case Scheme::kHeUniform:
      return he_uniform(spec);
    case Scheme::kGlorotNormal:
      return glorot_normal(spec);
    case Scheme::kOrthogonal:
      return orthogonal_flat(spec);
    case Scheme::kUniform:
      return uniform_init(spec);
    case Scheme::kNormal:
      return normal_init(spec);
  }
  throw ConfigError("unhandled scheme");
}

FilterBank cai_2d(const InitSpec& spec) {
  require_scheme(spec, Scheme::kCai);
  if (spec.shape.size() != 4) throw DomainError("cai_2d needs a rank-4 (f,s,r,c) shape");
  const std::size_t rows = spec.shape[2];
  const std::size_t cols = spec.shape[3];
  const std::size_t spectral_cols = half_extent(cols);
  return cai_bank(spec, rows * spectral_cols, [&](std::span<const double> row) {
    return inverse_2d(stage_half_spectrum_2d(row, rows, cols), rows, cols);
  });
}

FilterBank cai_1d(const InitSpec& spec) {
  require_scheme(spec, Scheme::kCai);
  if (spec.shape.size() != 3) throw DomainError("cai_1d needs a rank-3 (f,s,r) shape");
  const std::size_t length = spec.shape[2];
  return cai_bank(spec, half_extent(length), [&](std::span<const double> row) {
    return inverse_1d(stage_half_spectrum_1d(row, length), length);
  });
}

FilterBank he_normal(const InitSpec& spec) {
  require_scheme(spec, Scheme::kHeNormal);
  const double stddev = std::sqrt(spec.variance_target());
  return iid_bank(spec, [&](RandomStream& s) { return s.normal(0.0, stddev); });
}

FilterBank he_uniform(const InitSpec& spec) {
  require_scheme(spec, Scheme::kHeUniform);
  const double limit = std::sqrt(6.0 / static_cast<double>(spec.resolved_fan_in()));
  return iid_bank(spec, [&](RandomStream& s) { return s.uniform(-limit, limit); });
}

FilterBank glorot_normal(const InitSpec& spec) {
  require_scheme(spec, Scheme::kGlorotNormal);
  const double stddev = std::sqrt(spec.variance_target());
  return iid_bank(spec, [&](RandomStream& s) { return s.normal(0.0, stddev); });
}

FilterBank orthogonal_flat(const InitSpec& spec) {
  require_scheme(spec, Scheme::kOrthogonal);
  const std::size_t rows = spec.shape[0];
  const std::size_t cols = checked_element_count(spec.shape) / rows;
  const std::uint64_t seed = derive_seed(spec.seed, kSampleStream, 0);

  RealTensor weights(spec.shape);
  if (rows <= cols) {
    const OrthoBasis basis = make_basis({rows, cols, seed});
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = spec.gain * basis.matrix[i];
  } else {
    // More filters than inputs: orthonormal columns instead of rows.
    const OrthoBasis basis = make_basis({cols, rows, seed});
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        weights[i * cols + j] = spec.gain * basis.matrix(j, i);
      }
    }
  }
  return {std::move(weights), spec};
}

FilterBank uniform_init(const InitSpec& spec) {
  require_scheme(spec, Scheme::kUniform);
  return iid_bank(spec, [&](RandomStream& s) { return s.uniform(spec.low, spec.high); });
}

FilterBank normal_init(const InitSpec& spec) {
  require_scheme(spec, Scheme::kNormal);
  return iid_bank(spec, [&](RandomStream& s) { return s.normal(spec.mean, spec.stddev); });
}

}  // namespace cai
