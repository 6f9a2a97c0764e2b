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

#include "cai/tensor.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "cai/errors.hpp"

namespace cai {

std::size_t checked_element_count(const Shape& shape) {
  if (shape.empty() || shape.size() > 4) {
    throw DomainError("tensor rank must be 1..4, got " + std::to_string(shape.size()));
  }
  std::size_t n = 1;
  for (std::size_t e : shape) {
    if (e == 0) throw DomainError("tensor extents must be positive: " + shape_to_string(shape));
    n *= e;
  }
  return n;
}

std::string shape_to_string(const Shape& shape) {
  std::ostringstream os;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ',';
    os << shape[i];
  }
  return os.str();
}

RealTensor::RealTensor(Shape shape)
    : shape_(std::move(shape)), data_(checked_element_count(shape_), 0.0) {}

RealTensor::RealTensor(Shape shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (checked_element_count(shape_) != data_.size()) {
    throw DomainError("data length " + std::to_string(data_.size()) +
                      " does not match shape " + shape_to_string(shape_));
  }
}

RealTensor RealTensor::filled(Shape shape, double value) {
  RealTensor t(std::move(shape));
  for (double& v : t.data_) v = value;
  return t;
}

RealTensor RealTensor::reshaped(Shape shape) const {
  return RealTensor(std::move(shape), data_);
}

ComplexTensor::ComplexTensor(Shape shape)
    : shape_(std::move(shape)), data_(checked_element_count(shape_)) {}

ComplexTensor::ComplexTensor(Shape shape, std::vector<Complex> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (checked_element_count(shape_) != data_.size()) {
    throw DomainError("data length " + std::to_string(data_.size()) +
                      " does not match shape " + shape_to_string(shape_));
  }
}

double population_mean(std::span<const double> values) {
  if (values.empty()) throw DomainError("mean of an empty tensor");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double population_variance(std::span<const double> values) {
  if (values.size() < 2) throw DomainError("variance needs at least 2 elements");
  const double mean = population_mean(values);
  double sum = 0.0;
  for (double v : values) {
    const double d = v - mean;
    sum += d * d;
  }
  return sum / static_cast<double>(values.size());
}

RealTensor& scale_in_place(RealTensor& t, double k) {
  if (!std::isfinite(k)) throw DomainError("scale factor must be finite");
  for (double& v : t.data()) v *= k;
  return t;
}

}  // namespace cai
