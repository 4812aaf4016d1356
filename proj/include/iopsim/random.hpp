// Copyright 2026 The iopsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "iopsim/condensation.hpp"
#include "iopsim/iop.hpp"
#include "iopsim/linalg.hpp"
#include "iopsim/measurement.hpp"
#include "iopsim/rng.hpp"

// Random operators for property suites. All draws go through Rng, so a
// (seed, stream) pair reproduces the same operator everywhere.

namespace iopsim::random {

cplx gaussian(Rng& rng);
CMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);
CMatrix hermitian(std::size_t n, Rng& rng);
/// Haar-distributed unitary: Gram-Schmidt on a complex Gaussian matrix.
CMatrix unitary(std::size_t n, Rng& rng);
std::vector<cplx> unit_vector(std::size_t n, Rng& rng);
/// G G^dagger / tr with G of random rank in [1, n].
InfoOperator info_operator(std::size_t n, Rng& rng);
InfoOperator info_operator_of_rank(std::size_t n, std::size_t rank, Rng& rng);
/// `outcomes` Kraus operators cut from a random isometry, so the family is
/// definitive; scale values are standard normal.
MeasurementSystem definitive_measurement(std::size_t n, std::size_t outcomes, Rng& rng);
/// Random partition of a randomly rotated basis into `blocks` subspaces.
CondensationStructure structure(std::size_t n, std::size_t blocks, Rng& rng, CMatrix* basis = nullptr);
/// W (U_1 (+) ... (+) U_k) W^dagger for the structure drawn with basis W.
CMatrix block_unitary(const CondensationStructure& c, const CMatrix& basis, Rng& rng);

}  // namespace iopsim::random
