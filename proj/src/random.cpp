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

#include "iopsim/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "iopsim/error.hpp"

namespace iopsim::random {

cplx gaussian(Rng& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return {re, im};
}

CMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  CMatrix g(rows, cols);
  for (cplx& z : g.entries()) z = gaussian(rng);
  return g;
}

CMatrix hermitian(std::size_t n, Rng& rng) {
  const CMatrix g = ginibre(n, n, rng);
  return (g + g.adjoint()) * cplx{0.5};
}

CMatrix unitary(std::size_t n, Rng& rng) {
  CMatrix q = ginibre(n, n, rng);
  // Modified Gram-Schmidt over columns, applied twice for orthogonality.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        cplx overlap{};
        for (std::size_t r = 0; r < n; ++r) overlap += std::conj(q(r, i)) * q(r, j);
        for (std::size_t r = 0; r < n; ++r) q(r, j) -= overlap * q(r, i);
      }
      double norm2 = 0.0;
      for (std::size_t r = 0; r < n; ++r) norm2 += std::norm(q(r, j));
      const double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t r = 0; r < n; ++r) q(r, j) *= inv;
    }
  }
  return q;
}

std::vector<cplx> unit_vector(std::size_t n, Rng& rng) {
  std::vector<cplx> v(n);
  double norm2 = 0.0;
  for (cplx& z : v) {
    z = gaussian(rng);
    norm2 += std::norm(z);
  }
  for (cplx& z : v) z /= std::sqrt(norm2);
  return v;
}

InfoOperator info_operator_of_rank(std::size_t n, std::size_t rank, Rng& rng) {
  if (rank == 0 || rank > n) throw Error(ErrorCode::BadParameter, "rank out of range");
  const CMatrix g = ginibre(n, rank, rng);
  CMatrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()) * cplx{0.5};
  rho *= cplx{1.0 / rho.trace().real()};
  return validate(rho);
}

InfoOperator info_operator(std::size_t n, Rng& rng) {
  const std::size_t rank = 1 + static_cast<std::size_t>(rng.next_u64() % n);
  return info_operator_of_rank(n, rank, rng);
}

MeasurementSystem definitive_measurement(std::size_t n, std::size_t outcomes, Rng& rng) {
  const CMatrix w = unitary(n * outcomes, rng);
  std::vector<Label> labels;
  std::vector<CMatrix> kraus;
  std::vector<double> f;
  for (std::size_t m = 0; m < outcomes; ++m) {
    CMatrix k(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) k(r, c) = w(m * n + r, c);
    }
    labels.push_back("m" + std::to_string(m));
    kraus.push_back(std::move(k));
    f.push_back(rng.normal());
  }
  return MeasurementSystem(std::move(labels), std::move(kraus), std::move(f));
}

CondensationStructure structure(std::size_t n, std::size_t blocks, Rng& rng, CMatrix* basis) {
  if (blocks == 0 || blocks > n) throw Error(ErrorCode::BadParameter, "block count out of range");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.next_u64() % (i + 1)]);
  }
  // First `blocks` shuffled indices seed the blocks; the rest land anywhere.
  std::vector<std::size_t> owner(n);
  for (std::size_t i = 0; i < n; ++i) {
    owner[order[i]] = i < blocks ? i : static_cast<std::size_t>(rng.next_u64() % blocks);
  }
  const CMatrix w = unitary(n, rng);
  std::vector<Label> labels;
  std::vector<CMatrix> projectors;
  for (std::size_t b = 0; b < blocks; ++b) {
    CMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (owner[i] == b) d(i, i) = 1.0;
    }
    CMatrix p = w * d * w.adjoint();
    p = (p + p.adjoint()) * cplx{0.5};
    labels.push_back("b" + std::to_string(b));
    projectors.push_back(std::move(p));
  }
  if (basis != nullptr) *basis = w;
  return CondensationStructure(std::move(labels), std::move(projectors));
}

CMatrix block_unitary(const CondensationStructure& c, const CMatrix& basis, Rng& rng) {
  const std::size_t n = c.dim();
  CMatrix inner(n, n);
  for (const CMatrix& p : c.projectors()) {
    const CMatrix d = basis.adjoint() * p * basis;
    std::vector<std::size_t> group;
    for (std::size_t i = 0; i < n; ++i) {
      if (d(i, i).real() > 0.5) group.push_back(i);
    }
    const CMatrix block = unitary(group.size(), rng);
    for (std::size_t r = 0; r < group.size(); ++r) {
      for (std::size_t s = 0; s < group.size(); ++s) inner(group[r], group[s]) = block(r, s);
    }
  }
  return basis * inner * basis.adjoint();
}

}  // namespace iopsim::random
