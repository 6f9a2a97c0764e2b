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

#include "cai/orthobasis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "cai/errors.hpp"
#include "cai/random.hpp"

namespace cai {
namespace {

std::size_t require_square(const RealTensor& m, const char* op) {
  if (m.rank() != 2 || m.extent(0) != m.extent(1)) {
    throw DomainError(std::string(op) + ": expected a square matrix, got " +
                      shape_to_string(m.shape()));
  }
  return m.extent(0);
}

double frobenius(const std::vector<double>& a) {
  double sum = 0.0;
  for (double v : a) sum += v * v;
  return std::sqrt(sum);
}

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(sum);
}

}  // namespace

RealTensor symmetrize(const RealTensor& square) {
  const std::size_t n = require_square(square, "symmetrize");
  RealTensor out({n, n});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += square(i, k) * square(j, k);
      out(i, j) = acc;
      out(j, i) = acc;
    }
  }
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += out(i, i);
  const double delta = 1e-8 * trace / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) += delta;
  return out;
}

EigenDecomposition eigen_symmetric(const RealTensor& symmetric, int max_sweeps) {
  const std::size_t n = require_square(symmetric, "eigen_symmetric");

  double max_abs = 0.0;
  for (double v : symmetric.data()) {
    if (!std::isfinite(v)) throw DomainError("eigen_symmetric: matrix has non-finite entries");
    max_abs = std::max(max_abs, std::abs(v));
  }
  const double tolerance = 1e-12 * std::max(1.0, max_abs);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(symmetric(i, j) - symmetric(j, i)) > tolerance) {
        throw DomainError("eigen_symmetric: matrix is not symmetric at (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
      }
    }
  }

  std::vector<double> a(symmetric.data().begin(), symmetric.data().end());
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double threshold = 1e-12 * frobenius(a);
  int sweeps = 0;
  while (off_diagonal_norm(a, n) >= threshold) {
    if (sweeps >= max_sweeps) {
      throw NumericError("eigen_symmetric: Jacobi iteration did not converge in " +
                         std::to_string(max_sweeps) + " sweeps");
    }
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = std::abs(theta) > 1e150
                             ? 0.5 / theta
                             : std::copysign(1.0, theta) /
                                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a[r * n + p];
            const double arq = a[r * n + q];
            a[r * n + p] = a[p * n + r] = c * arp - s * arq;
            a[r * n + q] = a[q * n + r] = s * arp + c * arq;
          }
          const double vrp = v[r * n + p];
          const double vrq = v[r * n + q];
          v[r * n + p] = c * vrp - s * vrq;
          v[r * n + q] = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });

  EigenDecomposition out{RealTensor({n, n}), RealTensor({n}), sweeps};
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.values[col] = a[src * n + src];
    std::size_t peak = 0;
    for (std::size_t r = 1; r < n; ++r) {
      if (std::abs(v[r * n + src]) > std::abs(v[peak * n + src])) peak = r;
    }
    const double sign = v[peak * n + src] < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, col) = sign * v[r * n + src];
  }
  return out;
}

OrthoBasis make_basis(const BasisRequest& request) {
  if (request.rows == 0 || request.dim == 0) {
    throw DomainError("make_basis: rows and dim must be positive");
  }
  const std::size_t dim = request.dim;
  RandomStream stream(request.seed);
  RealTensor basis({request.rows, dim});

  std::size_t filled = 0;
  while (filled < request.rows) {
    RealTensor sample({dim, dim});
    for (double& x : sample.data()) x = stream.normal();
    const EigenDecomposition eig = eigen_symmetric(symmetrize(sample));

    const std::size_t take = std::min(dim, request.rows - filled);
    for (std::size_t i = 0; i < dim; ++i) {
      const double sign = stream.sign();
      if (i >= take) continue;
      for (std::size_t j = 0; j < dim; ++j) basis(filled + i, j) = sign * eig.vectors(j, i);
    }
    filled += take;
  }
  return {std::move(basis), dim};
}

}  // namespace cai
