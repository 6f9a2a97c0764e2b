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

#ifndef CAI_TENSOR_HPP_
#define CAI_TENSOR_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cai {

using Shape = std::vector<std::size_t>;
using Complex = std::complex<double>;

// Product of extents. Throws DomainError unless 1 <= rank <= 4 and every
// extent is positive.
std::size_t checked_element_count(const Shape& shape);

std::string shape_to_string(const Shape& shape);

// Dense row-major tensor of doubles, rank 1 to 4.
class RealTensor {
 public:
  explicit RealTensor(Shape shape);
  RealTensor(Shape shape, std::vector<double> data);

  static RealTensor filled(Shape shape, double value);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return data_.size(); }
  std::size_t extent(std::size_t axis) const { return shape_.at(axis); }

  // Views are lvalue-only; a view into a temporary would dangle.
  std::span<double> data() & noexcept { return data_; }
  std::span<const double> data() const& noexcept { return data_; }
  std::span<const double> data() const&& = delete;
  const std::vector<double>& values() const& noexcept { return data_; }
  const std::vector<double>& values() const&& = delete;

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  // Row-major element access for rank-2 tensors.
  double& operator()(std::size_t i, std::size_t j) { return data_[i * shape_[1] + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * shape_[1] + j]; }

  // Same elements, new extents. Element count must match.
  RealTensor reshaped(Shape shape) const;

  bool operator==(const RealTensor& other) const = default;

 private:
  Shape shape_;
  std::vector<double> data_;
};

// Dense row-major tensor of complex doubles; storage is interleaved
// (real, imag) pairs.
class ComplexTensor {
 public:
  explicit ComplexTensor(Shape shape);
  ComplexTensor(Shape shape, std::vector<Complex> data);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return data_.size(); }
  std::size_t extent(std::size_t axis) const { return shape_.at(axis); }

  std::span<Complex> data() & noexcept { return data_; }
  std::span<const Complex> data() const& noexcept { return data_; }
  std::span<const Complex> data() const&& = delete;

  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * shape_[1] + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * shape_[1] + j]; }

  bool operator==(const ComplexTensor& other) const = default;

 private:
  Shape shape_;
  std::vector<Complex> data_;
};

// Kernel-bank extents: f output filters, s input channels, r x c kernel.
struct Shape4 {
  std::size_t filters = 1;
  std::size_t stack = 1;
  std::size_t rows = 1;
  std::size_t cols = 1;

  Shape as_shape() const { return {filters, stack, rows, cols}; }
  bool operator==(const Shape4&) const = default;
};

// Population statistics. Variance divides by N, not N - 1.
double population_mean(std::span<const double> values);
double population_variance(std::span<const double> values);
inline double population_mean(const RealTensor& t) { return population_mean(t.data()); }
inline double population_variance(const RealTensor& t) { return population_variance(t.data()); }

// Multiplies every element by k (finite). Returns t.
RealTensor& scale_in_place(RealTensor& t, double k);

}  // namespace cai

#endif  // CAI_TENSOR_HPP_
