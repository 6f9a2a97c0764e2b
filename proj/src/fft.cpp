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

#include "fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "cai/errors.hpp"

namespace cai::fft {
namespace {

std::vector<std::size_t> factorize(std::size_t n) {
  std::vector<std::size_t> factors;
  while (n % 4 == 0) {
    factors.push_back(4);
    n /= 4;
  }
  for (std::size_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      factors.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

// exp(-2 pi i num / den). The angle is split into whole quarter turns,
// applied exactly, plus a remainder below pi/2, so roots on the axes come out
// exact and symmetric roots agree to the last bit.
Complex unit_root(std::size_t num, std::size_t den) {
  const std::size_t scaled = 4 * (num % den);
  const std::size_t quarter = scaled / den;
  const double rest = 0.5 * std::numbers::pi * static_cast<double>(scaled % den) /
                      static_cast<double>(den);
  const double c = std::cos(rest);
  const double s = std::sin(rest);
  // exp(-i theta) for theta = quarter * pi/2 + rest.
  switch (quarter) {
    case 0: return {c, -s};
    case 1: return {-s, -c};
    case 2: return {-c, s};
    default: return {s, c};
  }
}

}  // namespace

Plan::Plan(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("FFT length must be positive");
  factors_ = factorize(n);
  bool smooth = true;
  for (std::size_t p : factors_) smooth = smooth && p <= kMaxDirectRadix;

  if (smooth) {
    twiddles_.resize(n);
    for (std::size_t j = 0; j < n; ++j) twiddles_[j] = unit_root(j, n);
    return;
  }

  std::size_t padded = 1;
  while (padded < 2 * n - 1) padded <<= 1;
  padded_ = std::make_shared<const Plan>(padded);

  // chirp[k] = exp(-pi i k^2 / n); k^2 is reduced modulo 2n.
  chirp_.resize(n);
  for (std::size_t k = 0; k < n; ++k) chirp_[k] = unit_root((k * k) % (2 * n), 2 * n);

  chirp_filter_spectrum_.assign(padded, Complex{});
  chirp_filter_spectrum_[0] = std::conj(chirp_[0]);
  for (std::size_t k = 1; k < n; ++k) {
    chirp_filter_spectrum_[k] = std::conj(chirp_[k]);
    chirp_filter_spectrum_[padded - k] = std::conj(chirp_[k]);
  }
  padded_->forward(chirp_filter_spectrum_);
}

void Plan::forward(std::span<Complex> data) const {
  if (data.size() != n_) throw DomainError("FFT buffer length does not match plan");
  if (n_ == 1) return;
  if (padded_) {
    bluestein(data);
    return;
  }
  std::vector<Complex> out(n_);
  mixed_radix(data.data(), 1, out.data(), n_, 0);
  std::copy(out.begin(), out.end(), data.begin());
}

void Plan::backward(std::span<Complex> data) const {
  for (Complex& v : data) v = std::conj(v);
  forward(data);
  for (Complex& v : data) v = std::conj(v);
}

void Plan::mixed_radix(const Complex* in, std::size_t stride, Complex* out, std::size_t n,
                       std::size_t depth) const {
  if (n == 1) {
    out[0] = in[0];
    return;
  }
  const std::size_t radix = factors_[depth];
  const std::size_t m = n / radix;
  for (std::size_t q = 0; q < radix; ++q) {
    mixed_radix(in + q * stride, stride * radix, out + q * m, m, depth + 1);
  }

  const std::size_t step = n_ / n;          // twiddle stride for length n
  const std::size_t radix_step = n_ / radix;  // twiddle stride for length radix
  std::vector<Complex> column(radix);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t q = 0; q < radix; ++q) {
      column[q] = out[q * m + k] * twiddles_[(q * k * step) % n_];
    }
    for (std::size_t u = 0; u < radix; ++u) {
      Complex acc = column[0];
      for (std::size_t q = 1; q < radix; ++q) {
        acc += column[q] * twiddles_[((q * u) % radix) * radix_step];
      }
      out[u * m + k] = acc;
    }
  }
}

void Plan::bluestein(std::span<Complex> data) const {
  const std::size_t padded = padded_->size();
  std::vector<Complex> work(padded, Complex{});
  for (std::size_t k = 0; k < n_; ++k) work[k] = data[k] * chirp_[k];
  padded_->forward(work);
  for (std::size_t k = 0; k < padded; ++k) work[k] *= chirp_filter_spectrum_[k];
  padded_->backward(work);
  const double norm = 1.0 / static_cast<double>(padded);
  for (std::size_t k = 0; k < n_; ++k) data[k] = work[k] * chirp_[k] * norm;
}

std::shared_ptr<const Plan> plan_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const Plan>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const Plan>(n);
  return slot;
}

}  // namespace cai::fft
