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
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "iopsim/condensation.hpp"
#include "iopsim/dynamics.hpp"
#include "iopsim/iop.hpp"

namespace iopsim {

inline constexpr double kCompletenessTol = 1e-9;

/// Object-space Kraus family {M^m} with a scale value f(m) per label.
class MeasurementSystem {
 public:
  MeasurementSystem(std::vector<Label> labels, std::vector<CMatrix> kraus,
                    std::vector<double> scale_values);

  /// Projective measurement from a condensation-style projector family.
  static MeasurementSystem projective(const CondensationStructure& c,
                                      std::vector<double> scale_values);

  std::size_t dim() const noexcept { return kraus_.front().rows(); }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::vector<CMatrix>& kraus() const noexcept { return kraus_; }
  const std::vector<double>& scale_values() const noexcept { return scale_values_; }
  std::size_t index_of(const Label& label) const;

  /// ||sum_m M^m^dagger M^m - I||_F
  double completeness_residual() const;

 private:
  std::vector<Label> labels_;
  std::vector<CMatrix> kraus_;
  std::vector<double> scale_values_;
};

/// Completeness holds within kCompletenessTol.
bool is_definitive(const MeasurementSystem& ms);

/// p^m = tr(M^m rho M^m^dagger)
LabelProbabilities outcome_probabilities(const MeasurementSystem& ms, const InfoOperator& rho);

/// M^m rho M^m^dagger / p^m; ZeroProbabilityOutcome when p^m <= kZeroProbability.
InfoOperator post_measurement_object(const MeasurementSystem& ms, const InfoOperator& rho,
                                     const Label& m);

/// sum_m M^m rho M^m^dagger, the label-blind description after measurement.
CMatrix kraus_image(const MeasurementSystem& ms, const InfoOperator& rho);

/// sum_m w_m * post_measurement_object(m) for caller-supplied weights. Labels
/// with w_m = 0 are skipped, so they may have zero outcome probability.
InfoOperator remix(const MeasurementSystem& ms, const InfoOperator& rho,
                   const std::map<Label, double>& weights);

/// F = sum_m f(m) M^m^dagger M^m.
class Observable {
 public:
  const CMatrix& matrix() const noexcept { return matrix_; }
  const MeasurementSystem& source() const noexcept { return source_; }

  friend Observable observable(const MeasurementSystem& ms);

 private:
  Observable(CMatrix f, MeasurementSystem source) : matrix_(std::move(f)), source_(std::move(source)) {}
  CMatrix matrix_;
  MeasurementSystem source_;
};

/// NotDefinitive unless completeness holds.
Observable observable(const MeasurementSystem& ms);

/// Re tr(F rho); DimensionMismatch on size mismatch.
double expectation(const Observable& obs, const InfoOperator& rho);

/// Number of independent RNG streams the sampler splits draws across. Fixed
/// so results depend on the seed only, never on the thread count.
inline constexpr std::size_t kSamplerStreams = 16;

/// Empirical label frequencies from n draws of the exact outcome
/// distribution. Draw block k of n uses Rng(seed, k).
LabelProbabilities estimate_probabilities(const MeasurementSystem& ms, const InfoOperator& rho,
                                          std::size_t n, std::uint64_t seed);

/// Kraus family induced on the object by an interaction U on S (x) T when the
/// apparatus starts in |t0> and outcome m is read as |t_m>:
/// M^m = (I (x) <t_m|) U (I (x) |t0>).
MeasurementSystem induced_measurement(const UnitaryOp& u, std::size_t dim_s,
                                      std::span<const cplx> apparatus_initial,
                                      std::vector<Label> labels,
                                      const std::vector<std::vector<cplx>>& apparatus_outcomes,
                                      std::vector<double> scale_values);

}  // namespace iopsim
