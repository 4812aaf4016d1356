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

#include "iopsim/iop.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iopsim/error.hpp"

namespace iopsim {

namespace {

CMatrix hermitian_part(const CMatrix& m) {
  CMatrix h = (m + m.adjoint()) * cplx{0.5};
  for (std::size_t i = 0; i < h.rows(); ++i) h(i, i) = h(i, i).real();
  return h;
}

}  // namespace

ValidationReport inspect(const CMatrix& m) {
  ValidationReport r;
  r.square = m.is_square();
  if (!r.square) return r;
  r.hermiticity_residual = hermiticity_residual(m);
  r.hermitian = r.hermiticity_residual <= kHermitianTol * std::max(1.0, m.frobenius_norm());
  const CMatrix h = hermitian_part(m);
  r.trace_residual = std::abs(m.trace() - cplx{1.0});
  r.unit_trace = r.trace_residual <= kTraceTol;
  const HermEigen eig = herm_eig(h);
  r.min_eigenvalue = eig.eigenvalues.front();
  r.positive = r.min_eigenvalue >= -kPositivityTol;
  return r;
}

InfoOperator validate(const CMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, "i-operator must be square, got " +
                                                  std::to_string(m.rows()) + "x" +
                                                  std::to_string(m.cols()));
  }
  const double herm = hermiticity_residual(m);
  if (herm > kHermitianTol * std::max(1.0, m.frobenius_norm())) {
    throw Error(ErrorCode::NotHermitian, "||m - m^dagger||_F = " + std::to_string(herm));
  }
  const double trace_residual = std::abs(m.trace() - cplx{1.0});
  if (trace_residual > kTraceTol) {
    throw Error(ErrorCode::TraceNotOne, "|tr(m) - 1| = " + std::to_string(trace_residual));
  }
  CMatrix h = hermitian_part(m);
  HermEigen eig = herm_eig(h);
  const double lowest = eig.eigenvalues.front();
  if (lowest < -kPositivityTol) {
    throw Error(ErrorCode::NotPositive, "minimum eigenvalue " + std::to_string(lowest));
  }
  if (lowest < 0.0) {
    double total = 0.0;
    for (double& lambda : eig.eigenvalues) {
      lambda = std::max(lambda, 0.0);
      total += lambda;
    }
    for (double& lambda : eig.eigenvalues) lambda /= total;
    return InfoOperator(hermitian_part(reconstruct(eig)));
  }
  h *= cplx{1.0 / h.trace().real()};
  return InfoOperator(std::move(h));
}

InfoOperator max_iop(std::size_t d) {
  if (d == 0) throw Error(ErrorCode::DimensionMismatch, "max_iop needs d >= 1");
  return validate(CMatrix::identity(d) * cplx{1.0 / static_cast<double>(d)});
}

double entropy(const InfoOperator& rho) {
  const HermEigen eig = herm_eig(rho.matrix());
  double e = 0.0;
  for (double lambda : eig.eigenvalues) {
    if (lambda > 0.0) e -= lambda * std::log(lambda);
  }
  return std::max(e, 0.0);
}

double purity(const InfoOperator& rho) {
  // tr(rho^2) = ||rho||_F^2 for Hermitian rho.
  const double n = rho.matrix().frobenius_norm();
  return n * n;
}

bool is_pure(const InfoOperator& rho) { return std::abs(purity(rho) - 1.0) <= kPurityTol; }

// ---------------------------------------------------------------------------
// Contractions

Contraction::Contraction(CMatrix op) : k(std::move(op)), source_dim(k.cols()), target_dim(k.rows()) {}

InfoOperator contract(const InfoOperator& rho, const Contraction& k) {
  if (k.source_dim != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "contract: K expects dim " +
                                                  std::to_string(k.source_dim) + ", rho has " +
                                                  std::to_string(rho.dim()));
  }
  const CMatrix image = sandwich(k.k, rho.matrix());
  try {
    return validate(image);
  } catch (const Error& e) {
    throw Error(ErrorCode::ResultNotIOperator,
                std::string("K rho K^dagger is not an i-operator (") + e.what() + ")");
  }
}

Contraction contraction_from_max(const InfoOperator& target) {
  const HermEigen eig = herm_eig(target.matrix());
  const auto d = static_cast<double>(target.dim());
  std::vector<cplx> diag(eig.eigenvalues.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    diag[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0) * d);
  }
  return Contraction(reconstruct(eig, diag));
}

double support_excess(const InfoOperator& whole, const InfoOperator& part) {
  if (whole.dim() != part.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "support_excess: dims differ");
  }
  const HermEigen w = herm_eig(whole.matrix());
  const HermEigen p = herm_eig(part.matrix());
  const std::size_t n = whole.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.eigenvalues[i] <= kSupportTol) continue;
    std::vector<cplx> residual = p.eigenvectors.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (w.eigenvalues[j] <= kSupportTol) continue;
      cplx overlap{};
      for (std::size_t r = 0; r < n; ++r) overlap += std::conj(w.eigenvectors(r, j)) * residual[r];
      for (std::size_t r = 0; r < n; ++r) residual[r] -= overlap * w.eigenvectors(r, j);
    }
    double norm2 = 0.0;
    for (const cplx& z : residual) norm2 += std::norm(z);
    worst = std::max(worst, std::sqrt(norm2));
  }
  return worst;
}

Contraction contraction_from_mixture(const InfoOperator& whole, const InfoOperator& part) {
  const double excess = support_excess(whole, part);
  if (excess > kSupportResidualTol) {
    throw Error(ErrorCode::SupportViolation,
                "support of part leaves support of whole by " + std::to_string(excess));
  }
  const HermEigen w = herm_eig(whole.matrix());
  const HermEigen p = herm_eig(part.matrix());
  const std::size_t n = whole.dim();
  CMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (w.eigenvalues[i] <= kSupportTol) continue;
    const double a = std::max(p.eigenvalues[i], 0.0) / w.eigenvalues[i];
    if (a == 0.0) continue;
    const double scale = std::sqrt(a);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        k(r, c) += scale * p.eigenvectors(r, i) * std::conj(w.eigenvectors(c, i));
      }
    }
  }
  return Contraction(std::move(k));
}

// ---------------------------------------------------------------------------
// Mixtures

Mixture::Mixture(std::vector<double> weights, std::vector<InfoOperator> components)
    : weights_(std::move(weights)), components_(std::move(components)) {
  if (weights_.empty() || weights_.size() != components_.size()) {
    throw Error(ErrorCode::BadMixture, "need one weight per component and at least one component");
  }
  double total = 0.0;
  for (double p : weights_) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::BadMixture, "weights must be positive and finite");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kWeightSumTol) {
    throw Error(ErrorCode::BadMixture, "weights sum to " + std::to_string(total));
  }
  for (const auto& c : components_) {
    if (c.dim() != components_.front().dim()) {
      throw Error(ErrorCode::BadMixture, "components have different dimensions");
    }
  }
}

Mixture Mixture::from_unnormalized(std::span<const CMatrix> parts) {
  std::vector<double> weights;
  std::vector<InfoOperator> components;
  for (const CMatrix& sigma : parts) {
    const double p = sigma.trace().real();
    if (!(p > 0.0)) throw Error(ErrorCode::BadMixture, "unnormalized part has non-positive trace");
    weights.push_back(p);
    components.push_back(validate(sigma * cplx{1.0 / p}));
  }
  return Mixture(std::move(weights), std::move(components));
}

InfoOperator Mixture::combined() const {
  CMatrix acc(dim(), dim());
  for (std::size_t i = 0; i < weights_.size(); ++i) acc += components_[i].matrix() * cplx{weights_[i]};
  return validate(acc);
}

std::vector<std::pair<double, InfoOperator>> decompose(const Mixture& mixture) {
  std::vector<std::pair<double, InfoOperator>> out;
  out.reserve(mixture.weights().size());
  for (std::size_t i = 0; i < mixture.weights().size(); ++i) {
    out.emplace_back(mixture.weights()[i], mixture.components()[i]);
  }
  return out;
}

}  // namespace iopsim
