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

#ifndef CAI_ORTHOBASIS_HPP_
#define CAI_ORTHOBASIS_HPP_

#include <cstddef>
#include <cstdint>

#include "cai/tensor.hpp"

namespace cai {

struct BasisRequest {
  std::size_t rows = 1;
  std::size_t dim = 1;
  std::uint64_t seed = 0;
};

// rows x dim matrix assembled from independent orthonormal blocks of
// min(dim, remaining) rows each.
struct OrthoBasis {
  RealTensor matrix;
  std::size_t block_size;
};

struct EigenDecomposition {
  RealTensor vectors;  // n x n, column i pairs with values[i]
  RealTensor values;   // length n, descending
  int sweeps = 0;
};

// S = A A^T + delta I with delta = 1e-8 trace(A A^T) / n. The result is
// exactly symmetric and strictly positive definite for nonzero A.
RealTensor symmetrize(const RealTensor& square);

// Cyclic Jacobi eigendecomposition of a symmetric matrix. Eigenvectors are
// sign-normalized so their largest-magnitude component is positive.
// Throws DomainError on a non-symmetric or non-finite input and NumericError
// if the off-diagonal mass has not fallen below 1e-12 ||S||_F after
// max_sweeps sweeps.
inline constexpr int kMaxJacobiSweeps = 100;
EigenDecomposition eigen_symmetric(const RealTensor& symmetric, int max_sweeps = kMaxJacobiSweeps);

// Each block draws a dim x dim standard-normal matrix from the request's
// stream, symmetrizes it, and appends the eigenvectors as rows. Every row
// also receives an independent random sign from the same stream so that the
// entries stay zero-mean; the eigen solver's sign convention alone would
// bias them.
OrthoBasis make_basis(const BasisRequest& request);

}  // namespace cai

#endif  // CAI_ORTHOBASIS_HPP_
