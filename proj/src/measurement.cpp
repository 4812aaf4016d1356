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

#include "iopsim/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "iopsim/error.hpp"
#include "iopsim/rng.hpp"

namespace iopsim {

MeasurementSystem::MeasurementSystem(std::vector<Label> labels, std::vector<CMatrix> kraus,
                                     std::vector<double> scale_values)
    : labels_(std::move(labels)), kraus_(std::move(kraus)), scale_values_(std::move(scale_values)) {
  if (kraus_.empty() || labels_.size() != kraus_.size() || scale_values_.size() != kraus_.size()) {
    throw Error(ErrorCode::BadParameter,
                "measurement needs matching, non-empty label, Kraus and scale-value lists");
  }
  const std::size_t n = kraus_.front().rows();
  for (const CMatrix& m : kraus_) {
    if (!m.is_square() || m.rows() != n) {
      throw Error(ErrorCode::DimensionMismatch, "Kraus operators must all be dim_s x dim_s");
    }
  }
  for (double f : scale_values_) {
    if (!std::isfinite(f)) throw Error(ErrorCode::BadParameter, "scale values must be finite");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) throw Error(ErrorCode::BadParameter, "duplicate label " + labels_[i]);
    }
  }
}

MeasurementSystem MeasurementSystem::projective(const CondensationStructure& c,
                                                std::vector<double> scale_values) {
  return MeasurementSystem(c.labels(), c.projectors(), std::move(scale_values));
}

std::size_t MeasurementSystem::index_of(const Label& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::UnknownLabel, "no outcome '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

double MeasurementSystem::completeness_residual() const {
  CMatrix acc(dim(), dim());
  for (const CMatrix& m : kraus_) acc += m.adjoint() * m;
  return frobenius_dist(acc, CMatrix::identity(dim()));
}

bool is_definitive(const MeasurementSystem& ms) {
  return ms.completeness_residual() <= kCompletenessTol;
}

namespace {

void require_dim(const MeasurementSystem& ms, std::size_t n, const char* op) {
  if (ms.dim() != n) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": object dim " + std::to_string(n) +
                                                  " vs measurement dim " + std::to_string(ms.dim()));
  }
}

}  // namespace

LabelProbabilities outcome_probabilities(const MeasurementSystem& ms, const InfoOperator& rho) {
  require_dim(ms, rho.dim(), "outcome_probabilities");
  LabelProbabilities out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const double p = sandwich(ms.kraus()[i], rho.matrix()).trace().real();
    out.emplace_back(ms.labels()[i], std::max(p, 0.0));
  }
  return out;
}

InfoOperator post_measurement_object(const MeasurementSystem& ms, const InfoOperator& rho,
                                     const Label& m) {
  require_dim(ms, rho.dim(), "post_measurement_object");
  const CMatrix image = sandwich(ms.kraus()[ms.index_of(m)], rho.matrix());
  const double p = image.trace().real();
  if (!(p > kZeroProbability)) {
    throw Error(ErrorCode::ZeroProbabilityOutcome,
                "outcome '" + m + "' has probability " + std::to_string(p));
  }
  return validate(image * cplx{1.0 / p});
}

CMatrix kraus_image(const MeasurementSystem& ms, const InfoOperator& rho) {
  require_dim(ms, rho.dim(), "kraus_image");
  CMatrix acc(ms.dim(), ms.dim());
  for (const CMatrix& m : ms.kraus()) acc += sandwich(m, rho.matrix());
  return acc;
}

InfoOperator remix(const MeasurementSystem& ms, const InfoOperator& rho,
                   const std::map<Label, double>& weights) {
  CMatrix acc(ms.dim(), ms.dim());
  double total = 0.0;
  for (const auto& [label, w] : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::BadMixture, "negative weight");
    if (w == 0.0) {
      ms.index_of(label);
      continue;
    }
    acc += post_measurement_object(ms, rho, label).matrix() * cplx{w};
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightSumTol) {
    throw Error(ErrorCode::BadMixture, "weights sum to " + std::to_string(total));
  }
  return validate(acc);
}

Observable observable(const MeasurementSystem& ms) {
  if (!is_definitive(ms)) {
    throw Error(ErrorCode::NotDefinitive,
                "completeness residual " + std::to_string(ms.completeness_residual()));
  }
  CMatrix f(ms.dim(), ms.dim());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    f += ms.kraus()[i].adjoint() * ms.kraus()[i] * cplx{ms.scale_values()[i]};
  }
  f = (f + f.adjoint()) * cplx{0.5};
  return Observable(std::move(f), ms);
}

double expectation(const Observable& obs, const InfoOperator& rho) {
  if (obs.matrix().rows() != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "expectation: dims differ");
  }
  const CMatrix& f = obs.matrix();
  const CMatrix& r = rho.matrix();
  cplx acc{};
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) acc += f(i, j) * r(j, i);
  }
  return acc.real();
}

LabelProbabilities estimate_probabilities(const MeasurementSystem& ms, const InfoOperator& rho,
                                          std::size_t n, std::uint64_t seed) {
  if (!is_definitive(ms)) {
    throw Error(ErrorCode::NotDefinitive, "sampling requires a complete Kraus family");
  }
  if (n == 0) throw Error(ErrorCode::BadParameter, "need at least one draw");
  const LabelProbabilities exact = outcome_probabilities(ms, rho);
  std::vector<double> cumulative(exact.size());
  double running = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    running += exact[i].second;
    cumulative[i] = running;
  }
  // Guard against roundoff leaving the last bin a hair short of the total.
  for (double& c : cumulative) c /= running;
  cumulative.back() = 1.0;

  const std::size_t labels = exact.size();
  std::vector<std::vector<std::size_t>> counts(kSamplerStreams, std::vector<std::size_t>(labels, 0));
  const auto streams = static_cast<std::int64_t>(kSamplerStreams);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < streams; ++s) {
    const auto stream = static_cast<std::size_t>(s);
    const std::size_t begin = n * stream / kSamplerStreams;
    const std::size_t end = n * (stream + 1) / kSamplerStreams;
    Rng rng(seed, stream);
    auto& local = counts[stream];
    for (std::size_t draw = begin; draw < end; ++draw) {
      const double u = rng.uniform();
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      const auto idx = std::min(static_cast<std::size_t>(it - cumulative.begin()), labels - 1);
      ++local[idx];
    }
  }
  LabelProbabilities out;
  for (std::size_t i = 0; i < labels; ++i) {
    std::size_t total = 0;
    for (const auto& local : counts) total += local[i];
    out.emplace_back(exact[i].first, static_cast<double>(total) / static_cast<double>(n));
  }
  return out;
}

MeasurementSystem induced_measurement(const UnitaryOp& u, std::size_t dim_s,
                                      std::span<const cplx> apparatus_initial,
                                      std::vector<Label> labels,
                                      const std::vector<std::vector<cplx>>& apparatus_outcomes,
                                      std::vector<double> scale_values) {
  const std::size_t dim_t = apparatus_initial.size();
  if (dim_s == 0 || dim_t == 0 || u.dim() != dim_s * dim_t) {
    throw Error(ErrorCode::DimensionMismatch, "induced_measurement: U is not on S (x) T");
  }
  std::vector<CMatrix> kraus;
  for (const auto& outcome : apparatus_outcomes) {
    if (outcome.size() != dim_t) {
      throw Error(ErrorCode::DimensionMismatch, "apparatus outcome vector has the wrong length");
    }
    CMatrix m(dim_s, dim_s);
    // M(a, b) = sum_{p,q} conj(t_m[p]) U(a*dT + p, b*dT + q) t0[q]
    for (std::size_t a = 0; a < dim_s; ++a) {
      for (std::size_t b = 0; b < dim_s; ++b) {
        cplx acc{};
        for (std::size_t p = 0; p < dim_t; ++p) {
          for (std::size_t q = 0; q < dim_t; ++q) {
            acc += std::conj(outcome[p]) * u.matrix()(a * dim_t + p, b * dim_t + q) *
                   apparatus_initial[q];
          }
        }
        m(a, b) = acc;
      }
    }
    kraus.push_back(std::move(m));
  }
  return MeasurementSystem(std::move(labels), std::move(kraus), std::move(scale_values));
}

}  // namespace iopsim
