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

#include "cai/spectral.hpp"

#include <string>
#include <vector>

#include "cai/errors.hpp"
#include "fft.hpp"

namespace cai {
namespace {

void require_rank(const Shape& shape, std::size_t rank, const char* op) {
  if (shape.size() != rank) {
    throw DomainError(std::string(op) + ": expected rank " + std::to_string(rank) +
                      ", got shape " + shape_to_string(shape));
  }
}

// Transforms every column of a row-major rows x cols complex array in place.
void transform_columns(std::span<Complex> data, std::size_t rows, std::size_t cols,
                       bool inverse) {
  if (rows == 1) return;
  const auto plan = fft::plan_for(rows);
  std::vector<Complex> column(rows);
  for (std::size_t l = 0; l < cols; ++l) {
    for (std::size_t k = 0; k < rows; ++k) column[k] = data[k * cols + l];
    inverse ? plan->backward(column) : plan->forward(column);
    for (std::size_t k = 0; k < rows; ++k) data[k * cols + l] = column[k];
  }
}

}  // namespace

ComplexTensor forward_2d(const RealTensor& signal) {
  require_rank(signal.shape(), 2, "forward_2d");
  const std::size_t rows = signal.extent(0);
  const std::size_t cols = signal.extent(1);
  const std::size_t half = half_extent(cols);

  ComplexTensor out({rows, half});
  const auto plan = fft::plan_for(cols);
  std::vector<Complex> row(cols);
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t n = 0; n < cols; ++n) row[n] = signal(m, n);
    plan->forward(row);
    for (std::size_t l = 0; l < half; ++l) out(m, l) = row[l];
  }
  transform_columns(out.data(), rows, half, false);
  return out;
}

RealTensor inverse_2d(const ComplexTensor& spectrum, std::size_t rows, std::size_t cols) {
  require_rank(spectrum.shape(), 2, "inverse_2d");
  const std::size_t half = half_extent(cols);
  if (rows == 0 || cols == 0 || spectrum.extent(0) != rows || spectrum.extent(1) != half) {
    throw DomainError("inverse_2d: spectrum " + shape_to_string(spectrum.shape()) +
                      " is inconsistent with target " + std::to_string(rows) + "x" +
                      std::to_string(cols));
  }

  std::vector<Complex> work(spectrum.data().begin(), spectrum.data().end());
  transform_columns(work, rows, half, true);

  RealTensor out({rows, cols});
  const auto plan = fft::plan_for(cols);
  const double norm = 1.0 / static_cast<double>(rows * cols);
  std::vector<Complex> row(cols);
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t l = 0; l < half; ++l) row[l] = work[m * half + l];
    for (std::size_t l = half; l < cols; ++l) row[l] = std::conj(work[m * half + (cols - l)]);
    plan->backward(row);
    for (std::size_t n = 0; n < cols; ++n) out(m, n) = row[n].real() * norm;
  }
  return out;
}

ComplexTensor forward_1d(const RealTensor& signal) {
  require_rank(signal.shape(), 1, "forward_1d");
  const std::size_t length = signal.extent(0);
  ComplexTensor two = forward_2d(signal.reshaped({1, length}));
  return ComplexTensor({half_extent(length)},
                       std::vector<Complex>(two.data().begin(), two.data().end()));
}

RealTensor inverse_1d(const ComplexTensor& spectrum, std::size_t length) {
  require_rank(spectrum.shape(), 1, "inverse_1d");
  if (length == 0 || spectrum.extent(0) != half_extent(length)) {
    throw DomainError("inverse_1d: spectrum length " + std::to_string(spectrum.extent(0)) +
                      " is inconsistent with target " + std::to_string(length));
  }
  ComplexTensor two({1, spectrum.extent(0)},
                    std::vector<Complex>(spectrum.data().begin(), spectrum.data().end()));
  return inverse_2d(two, 1, length).reshaped({length});
}

ComplexTensor hermitian_extend_2d(const ComplexTensor& half, std::size_t cols) {
  require_rank(half.shape(), 2, "hermitian_extend_2d");
  const std::size_t rows = half.extent(0);
  const std::size_t kept = half_extent(cols);
  if (half.extent(1) != kept) {
    throw DomainError("hermitian_extend_2d: half-spectrum width does not match cols");
  }
  ComplexTensor full({rows, cols});
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t l = 0; l < cols; ++l) {
      full(k, l) = l < kept ? half(k, l) : std::conj(half((rows - k) % rows, cols - l));
    }
  }
  return full;
}

RealTensor circular_convolve_2d(const RealTensor& filter, const RealTensor& signal) {
  require_rank(filter.shape(), 2, "circular_convolve_2d");
  require_rank(signal.shape(), 2, "circular_convolve_2d");
  if (filter.shape() != signal.shape()) {
    throw DomainError("circular_convolve_2d: shape mismatch " + shape_to_string(filter.shape()) +
                      " vs " + shape_to_string(signal.shape()));
  }
  const std::size_t rows = filter.extent(0);
  const std::size_t cols = filter.extent(1);
  RealTensor out({rows, cols});
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t n = 0; n < cols; ++n) {
      double acc = 0.0;
      for (std::size_t p = 0; p < rows; ++p) {
        const std::size_t mi = (m + rows - p) % rows;
        for (std::size_t q = 0; q < cols; ++q) {
          acc += filter(p, q) * signal(mi, (n + cols - q) % cols);
        }
      }
      out(m, n) = acc;
    }
  }
  return out;
}

}  // namespace cai
