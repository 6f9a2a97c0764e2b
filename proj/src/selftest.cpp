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

#include "cai/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cai/orthobasis.hpp"
#include "cai/random.hpp"
#include "cai/spectral.hpp"

namespace cai {
namespace {

RealTensor random_real(Shape shape, RandomStream& rng) {
  RealTensor t(std::move(shape));
  for (double& v : t.data()) v = rng.normal();
  return t;
}

SelftestResult round_trip_sweep(RandomStream& rng) {
  SelftestResult r{"spectral-round-trip", true, 0, 0.0, 1e-10};
  for (std::size_t rows = 1; rows <= 16; ++rows) {
    for (std::size_t cols = 1; cols <= 16; ++cols) {
      const RealTensor x = random_real({rows, cols}, rng);
      const RealTensor back = inverse_2d(forward_2d(x), rows, cols);
      for (std::size_t i = 0; i < x.size(); ++i) r.worst = std::max(r.worst, std::abs(back[i] - x[i]));
      ++r.cases;
    }
    const RealTensor x = random_real({rows}, rng);
    const RealTensor back = inverse_1d(forward_1d(x), rows);
    for (std::size_t i = 0; i < x.size(); ++i) r.worst = std::max(r.worst, std::abs(back[i] - x[i]));
    ++r.cases;
  }
  r.passed = r.worst <= r.tolerance;
  return r;
}

SelftestResult eigenvector_bound_sweep(RandomStream& rng) {
  SelftestResult r{"eigenvector-entry-bound", true, 0, 0.0, 1e-12};
  double worst_reconstruction = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 15);
    const RealTensor s = symmetrize(random_real({n, n}, rng));
    const EigenDecomposition eig = eigen_symmetric(s);
    double max_entry = 0.0;
    for (double q : eig.vectors.data()) max_entry = std::max(max_entry, std::abs(q));
    r.worst = std::max(r.worst, max_entry - 1.0);

    double scale = 0.0;
    for (double v : s.data()) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += eig.vectors(i, k) * eig.values[k] * eig.vectors(j, k);
        worst_reconstruction = std::max(worst_reconstruction, std::abs(acc - s(i, j)) / scale);
      }
    }
    ++r.cases;
  }
  r.passed = r.worst <= r.tolerance && worst_reconstruction < 1e-9;
  return r;
}

SelftestResult magnitude_bound_sweep(RandomStream& rng) {
  SelftestResult r{"inverse-magnitude-bound", true, 0, 0.0, 1e-12};
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t rows = 1 + rng.bits() % 12;
    const std::size_t cols = 1 + rng.bits() % 12;
    ComplexTensor half({rows, half_extent(cols)});
    for (Complex& a : half.data()) a = Complex(rng.normal(), rng.normal());
    const ComplexTensor full = hermitian_extend_2d(half, cols);
    double l1 = 0.0;
    for (const Complex& a : full.data()) l1 += std::abs(a);
    const double bound = l1 / static_cast<double>(rows * cols);
    const RealTensor signal = inverse_2d(half, rows, cols);
    for (double v : signal.data()) r.worst = std::max(r.worst, std::abs(v) - bound);
    ++r.cases;
  }
  r.passed = r.worst <= r.tolerance;
  return r;
}

SelftestResult convolution_theorem_sweep(RandomStream& rng) {
  SelftestResult r{"convolution-theorem", true, 0, 0.0, 1e-9};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng.bits() % 16;
    const std::size_t cols = 1 + rng.bits() % 16;
    const RealTensor f = random_real({rows, cols}, rng);
    const RealTensor x = random_real({rows, cols}, rng);
    const ComplexTensor lhs = forward_2d(circular_convolve_2d(f, x));
    const ComplexTensor ff = forward_2d(f);
    const ComplexTensor fx = forward_2d(x);
    for (std::size_t i = 0; i < lhs.size(); ++i) r.worst = std::max(r.worst, std::abs(lhs[i] - ff[i] * fx[i]));
    ++r.cases;
  }
  r.passed = r.worst <= r.tolerance;
  return r;
}

}  // namespace

std::vector<SelftestResult> run_selftest(const SelftestOptions& options) {
  RandomStream rng(options.seed);
  return {round_trip_sweep(rng), eigenvector_bound_sweep(rng), magnitude_bound_sweep(rng),
          convolution_theorem_sweep(rng)};
}

std::string format_selftest(const std::vector<SelftestResult>& results) {
  std::string out;
  std::size_t passed = 0;
  for (const SelftestResult& r : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %s cases=%zu worst=%.3e tol=%.1e\n", r.name.c_str(),
                  r.passed ? "PASS" : "FAIL", r.cases, r.worst, r.tolerance);
    out += line;
    passed += r.passed ? 1 : 0;
  }
  out += "selftest: " + std::to_string(passed) + "/" + std::to_string(results.size()) + " passed\n";
  return out;
}

}  // namespace cai
