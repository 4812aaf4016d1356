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

#include "iopsim/condensation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "iopsim/error.hpp"

namespace iopsim {

namespace {

void require_dim(std::size_t have, std::size_t want, const char* op) {
  if (have != want) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": dimension " +
                                                  std::to_string(have) + " vs structure " +
                                                  std::to_string(want));
  }
}

}  // namespace

CondensationStructure::CondensationStructure(std::vector<Label> labels,
                                             std::vector<CMatrix> projectors,
                                             std::pair<double, double> period)
    : labels_(std::move(labels)), projectors_(std::move(projectors)), period_(period) {
  if (projectors_.empty() || labels_.size() != projectors_.size()) {
    throw Error(ErrorCode::BadStructure, "need one label per projector and at least one projector");
  }
  if (!(period_.first < period_.second)) {
    throw Error(ErrorCode::BadStructure, "period must satisfy tau1 < tau2");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) throw Error(ErrorCode::BadStructure, "duplicate label " + labels_[i]);
    }
  }
  const std::size_t n = projectors_.front().rows();
  CMatrix total(n, n);
  for (std::size_t i = 0; i < projectors_.size(); ++i) {
    const CMatrix& p = projectors_[i];
    if (!p.is_square() || p.rows() != n) {
      throw Error(ErrorCode::BadStructure, "projector " + labels_[i] + " has the wrong shape");
    }
    if (hermiticity_residual(p) > kProjectorTol || frobenius_dist(p * p, p) > kProjectorTol) {
      throw Error(ErrorCode::BadStructure, "projector " + labels_[i] + " is not an orthogonal projector");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if ((p * projectors_[j]).frobenius_norm() > kProjectorTol) {
        throw Error(ErrorCode::BadStructure,
                    "projectors " + labels_[j] + " and " + labels_[i] + " overlap");
      }
    }
    total += p;
  }
  if (frobenius_dist(total, CMatrix::identity(n)) > kProjectorTol) {
    throw Error(ErrorCode::BadStructure, "projectors do not sum to the identity");
  }
}

CondensationStructure CondensationStructure::from_basis_partition(
    std::size_t dim, std::vector<Label> labels, const std::vector<std::vector<std::size_t>>& groups,
    std::pair<double, double> period) {
  std::vector<CMatrix> projectors;
  for (const auto& group : groups) {
    CMatrix p(dim, dim);
    for (std::size_t idx : group) {
      if (idx >= dim) throw Error(ErrorCode::BadStructure, "basis index out of range");
      p(idx, idx) = 1.0;
    }
    projectors.push_back(std::move(p));
  }
  return CondensationStructure(std::move(labels), std::move(projectors), period);
}

std::size_t CondensationStructure::index_of(const Label& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::UnknownLabel, "no label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

CondensationStructure CondensationStructure::lifted(std::size_t dim_s) const {
  std::vector<CMatrix> lifted;
  const CMatrix id = CMatrix::identity(dim_s);
  for (const CMatrix& p : projectors_) lifted.push_back(kron(id, p));
  return CondensationStructure(labels_, std::move(lifted), period_);
}

LabelProbabilities label_probabilities(const InfoOperator& rho, const CondensationStructure& c) {
  require_dim(rho.dim(), c.dim(), "label_probabilities");
  LabelProbabilities out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double p = sandwich(c.projectors()[i], rho.matrix()).trace().real();
    out.emplace_back(c.labels()[i], std::max(p, 0.0));
  }
  return out;
}

InfoOperator condition_on_label(const InfoOperator& rho, const CondensationStructure& c,
                                const Label& m) {
  require_dim(rho.dim(), c.dim(), "condition_on_label");
  const CMatrix block = sandwich(c.projector(m), rho.matrix());
  const double p = block.trace().real();
  if (!(p > kZeroProbability)) {
    throw Error(ErrorCode::ZeroProbabilityLabel,
                "label '" + m + "' has probability " + std::to_string(p));
  }
  return validate(block * cplx{1.0 / p});
}

namespace {

CMatrix block_sum(const CMatrix& rho, const CondensationStructure& c) {
  CMatrix acc(rho.rows(), rho.cols());
  for (const CMatrix& p : c.projectors()) acc += sandwich(p, rho);
  return acc;
}

}  // namespace

InfoOperator block_project(const InfoOperator& rho, const CondensationStructure& c) {
  require_dim(rho.dim(), c.dim(), "block_project");
  return validate(block_sum(rho.matrix(), c));
}

double condensed_form_residual(const InfoOperator& rho, const CondensationStructure& c) {
  require_dim(rho.dim(), c.dim(), "is_condensed_form");
  return frobenius_dist(rho.matrix(), block_sum(rho.matrix(), c));
}

bool is_condensed_form(const InfoOperator& rho, const CondensationStructure& c) {
  return condensed_form_residual(rho, c) <= kCondensedFormTol;
}

double block_leak(const UnitaryOp& u, const CondensationStructure& c) {
  require_dim(u.dim(), c.dim(), "respects_condensation");
  double worst = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    const CMatrix left = c.projectors()[m] * u.matrix();
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (m == n) continue;
      worst = std::max(worst, (left * c.projectors()[n]).frobenius_norm());
    }
  }
  return worst;
}

bool respects_condensation(const UnitaryOp& u, const CondensationStructure& c) {
  return block_leak(u, c) <= kBlockLeakTol;
}

CondensationStructure finest_respected_structure(const UnitaryOp& u,
                                                 const CondensationStructure& candidate,
                                                 double threshold) {
  require_dim(u.dim(), candidate.dim(), "finest_respected_structure");
  const std::size_t k = candidate.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t m = 0; m < k; ++m) {
    const CMatrix left = candidate.projectors()[m] * u.matrix();
    for (std::size_t n = 0; n < k; ++n) {
      if (m == n) continue;
      if ((left * candidate.projectors()[n]).frobenius_norm() > threshold) {
        const std::size_t a = find(m);
        const std::size_t b = find(n);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<Label> labels;
  std::vector<CMatrix> projectors;
  std::vector<std::size_t> roots;
  for (std::size_t m = 0; m < k; ++m) {
    const std::size_t r = find(m);
    const auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      labels.push_back(candidate.labels()[m]);
      projectors.push_back(candidate.projectors()[m]);
    } else {
      const auto slot = static_cast<std::size_t>(it - roots.begin());
      labels[slot] += "|" + candidate.labels()[m];
      projectors[slot] += candidate.projectors()[m];
    }
  }
  return CondensationStructure(std::move(labels), std::move(projectors), candidate.period());
}

}  // namespace iopsim
