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

#ifndef CAI_SPECTRAL_HPP_
#define CAI_SPECTRAL_HPP_

#include <cstddef>

#include "cai/tensor.hpp"

namespace cai {

// Number of non-redundant bins of a length-n real transform.
constexpr std::size_t half_extent(std::size_t n) noexcept { return n / 2 + 1; }

// A[k,l] = sum_m sum_n a[m,n] exp(-2 pi i (mk/M + nl/N)), unnormalized.
// Input is M x N; output keeps the M x (N/2 + 1) half-spectrum.
ComplexTensor forward_2d(const RealTensor& signal);

// a[m,n] = 1/(MN) sum_k sum_l A[k,l] exp(+2 pi i (mk/M + nl/N)) over the
// Hermitian extension of the half-spectrum. The real part is returned; for a
// spectrum that is not Hermitian-consistent this equals the projection onto
// the nearest consistent one.
RealTensor inverse_2d(const ComplexTensor& spectrum, std::size_t rows, std::size_t cols);

ComplexTensor forward_1d(const RealTensor& signal);
RealTensor inverse_1d(const ComplexTensor& spectrum, std::size_t length);

// Full M x N spectrum from an M x (N/2 + 1) half-spectrum, filling the
// omitted columns with conj(A[-k, -l]). The DC and Nyquist columns are copied
// verbatim.
ComplexTensor hermitian_extend_2d(const ComplexTensor& half, std::size_t cols);

// (f * x)[m,n] = sum_p sum_q f[p,q] x[(m-p) mod M, (n-q) mod N], evaluated
// directly. Both operands must be rank-2 with equal extents.
RealTensor circular_convolve_2d(const RealTensor& filter, const RealTensor& signal);

}  // namespace cai

#endif  // CAI_SPECTRAL_HPP_
