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

#include "iopsim/properties.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>

#include "iopsim/condensation.hpp"
#include "iopsim/dynamics.hpp"
#include "iopsim/error.hpp"
#include "iopsim/iop.hpp"
#include "iopsim/ivec.hpp"
#include "iopsim/measurement.hpp"
#include "iopsim/random.hpp"

namespace iopsim::properties {

namespace {

using Trial = std::function<double(Rng&)>;

/// Runs `trial` in parallel and folds the worst residual. A trial that throws
/// counts as a failure and records its message.
PropertyResult run_property(const std::string& name, std::size_t dim, std::size_t trials,
                            std::uint64_t seed, std::uint64_t salt, double tolerance,
                            const Trial& trial) {
  std::vector<double> residuals(trials, 0.0);
  std::vector<std::optional<std::string>> errors(trials);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t t = 0; t < count; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    Rng rng(seed ^ splitmix64(salt), dim * 1'000'003ULL + idx);
    try {
      residuals[idx] = trial(rng);
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }
  PropertyResult r{name, dim, trials, 0.0, tolerance, true, {}};
  for (std::size_t i = 0; i < trials; ++i) {
    if (errors[i]) {
      r.passed = false;
      if (r.failure.empty()) r.failure = *errors[i];
      r.worst = std::numeric_limits<double>::infinity();
      continue;
    }
    if (!std::isfinite(residuals[i])) r.worst = std::numeric_limits<double>::infinity();
    r.worst = std::max(r.worst, residuals[i]);
  }
  r.passed = r.passed && r.worst <= tolerance;
  return r;
}

double validity_residual(const CMatrix& m) {
  const ValidationReport v = inspect(m);
  return std::max({v.hermiticity_residual, v.trace_residual, std::max(0.0, -v.min_eigenvalue)});
}

}  // namespace

std::vector<PropertyResult> theorem_suite(std::size_t d, std::size_t trials, std::uint64_t seed,
                                          const TheoremSuiteTolerances& tol) {
  std::vector<PropertyResult> out;

  out.push_back(run_property("evolve_preserves_validity", d, trials, seed, 1, tol.validity, [d](Rng& rng) {
    const InfoOperator rho = random::info_operator(d, rng);
    const CMatrix u = random::unitary(d, rng);
    const double raw = validity_residual(sandwich(u, rho.matrix()));
    evolve(rho, UnitaryOp(u));  // throws if the image is rejected
    return raw;
  }));

  out.push_back(run_property("evolve_preserves_spectrum", d, trials, seed, 12, tol.entropy_invariance,
                             [d](Rng& rng) {
                               const InfoOperator rho = random::info_operator(d, rng);
                               const InfoOperator evolved = evolve(rho, UnitaryOp(random::unitary(d, rng)));
                               const HermEigen before = herm_eig(rho.matrix());
                               const HermEigen after = herm_eig(evolved.matrix());
                               double worst = std::abs(purity(rho) - purity(evolved));
                               for (std::size_t i = 0; i < d; ++i) {
                                 worst = std::max(worst, std::abs(before.eigenvalues[i] - after.eigenvalues[i]));
                               }
                               return worst;
                             }));

  out.push_back(run_property("entropy_unitary_invariance", d, trials, seed, 2, tol.entropy_invariance,
                             [d](Rng& rng) {
                               const InfoOperator rho = random::info_operator(d, rng);
                               const UnitaryOp u(random::unitary(d, rng));
                               const double e = entropy(rho);
                               if (e < -1e-12 || e > std::log(static_cast<double>(d)) + 1e-9) return 1.0;
                               return std::abs(entropy(evolve(rho, u)) - e);
                             }));

  out.push_back(run_property("contraction_from_max_round_trip", d, trials, seed, 3,
                             tol.contraction_from_max, [d](Rng& rng) {
                               const InfoOperator target = random::info_operator(d, rng);
                               const InfoOperator image = contract(max_iop(d), contraction_from_max(target));
                               return frobenius_dist(image.matrix(), target.matrix());
                             }));

  out.push_back(run_property("contraction_from_mixture_round_trip", d, trials, seed, 4,
                             tol.contraction_from_mixture, [d](Rng& rng) {
                               const std::size_t parts = 2 + static_cast<std::size_t>(rng.next_u64() % 2);
                               std::vector<double> w;
                               std::vector<InfoOperator> comps;
                               double total = 0.0;
                               for (std::size_t i = 0; i < parts; ++i) {
                                 w.push_back(0.05 + rng.uniform());
                                 total += w.back();
                                 comps.push_back(random::info_operator(d, rng));
                               }
                               for (double& x : w) x /= total;
                               // Renormalize so the weights sum to one in floating point.
                               double s = 0.0;
                               for (std::size_t i = 0; i + 1 < w.size(); ++i) s += w[i];
                               w.back() = 1.0 - s;
                               const InfoOperator whole = Mixture(w, comps).combined();
                               double worst = 0.0;
                               for (const InfoOperator& part : comps) {
                                 const InfoOperator image = contract(whole, contraction_from_mixture(whole, part));
                                 worst = std::max(worst, frobenius_dist(image.matrix(), part.matrix()));
                               }
                               return worst;
                             }));

  out.push_back(run_property("decompose_remix_identity", d, trials, seed, 5, tol.decompose_remix,
                             [d](Rng& rng) {
                               const InfoOperator a = random::info_operator(d, rng);
                               const InfoOperator b = random::info_operator(d, rng);
                               const double p = 0.05 + 0.9 * rng.uniform();
                               const Mixture mix({p, 1.0 - p}, {a, b});
                               CMatrix acc(d, d);
                               for (const auto& [w, c] : decompose(mix)) acc += c.matrix() * cplx{w};
                               const CMatrix direct = a.matrix() * cplx{p} + b.matrix() * cplx{1.0 - p};
                               return frobenius_dist(acc, direct);
                             }));

  out.push_back(run_property("kraus_probability_normalization", d, trials, seed, 6,
                             tol.probability_normalization, [d](Rng& rng) {
                               const std::size_t k = 2 + static_cast<std::size_t>(rng.next_u64() % 3);
                               const MeasurementSystem ms = random::definitive_measurement(d, k, rng);
                               if (!is_definitive(ms)) return 1.0;
                               const InfoOperator rho = random::info_operator(d, rng);
                               double total = 0.0;
                               double negative = 0.0;
                               for (const auto& [label, p] : outcome_probabilities(ms, rho)) {
                                 total += p;
                                 negative = std::max(negative, -p);
                               }
                               return std::max(std::abs(total - 1.0), negative);
                             }));

  out.push_back(run_property("expectation_identity", d, trials, seed, 7, tol.expectation_identity,
                             [d](Rng& rng) {
                               const std::size_t k = 2 + static_cast<std::size_t>(rng.next_u64() % 3);
                               const MeasurementSystem ms = random::definitive_measurement(d, k, rng);
                               const InfoOperator rho = random::info_operator(d, rng);
                               // Left side: sum_m f(m) p^m from outcome probabilities.
                               double weighted = 0.0;
                               const LabelProbabilities p = outcome_probabilities(ms, rho);
                               for (std::size_t i = 0; i < p.size(); ++i) weighted += ms.scale_values()[i] * p[i].second;
                               // Right side: tr(F rho) from the assembled observable.
                               return std::abs(weighted - expectation(observable(ms), rho));
                             }));

  out.push_back(run_property("projective_born_oracle", d, trials, seed, 8, tol.born_oracle, [d](Rng& rng) {
    const CMatrix basis = random::unitary(d, rng);
    std::vector<Label> labels;
    std::vector<CMatrix> projectors;
    for (std::size_t k = 0; k < d; ++k) {
      const std::vector<cplx> e = basis.column(k);
      labels.push_back("e" + std::to_string(k));
      projectors.push_back(outer(e, e));
    }
    const MeasurementSystem ms(labels, projectors, std::vector<double>(d, 0.0));
    const InfoOperator rho = random::info_operator(d, rng);
    const LabelProbabilities p = outcome_probabilities(ms, rho);
    double worst = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      // <e_k| rho |e_k> by explicit double sum.
      cplx direct{};
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) direct += std::conj(basis(r, k)) * rho.matrix()(r, c) * basis(c, k);
      }
      worst = std::max(worst, std::abs(direct.real() - p[k].second));
    }
    return worst;
  }));

  out.push_back(run_property("information_vector_round_trip", d, trials, seed, 9, tol.vector_round_trip,
                             [d](Rng& rng) {
                               const InfoVector v(random::unit_vector(d, rng));
                               const InfoVector back = from_iop(to_iop(v));
                               double worst = 0.0;
                               for (std::size_t i = 0; i < d; ++i) worst = std::max(worst, std::abs(back[i] - v[i]));
                               return worst;
                             }));

  out.push_back(run_property("vector_operator_evolution_commute", d, trials, seed, 10,
                             tol.vector_evolution, [d](Rng& rng) {
                               const InfoVector v(random::unit_vector(d, rng));
                               const UnitaryOp u(random::unitary(d, rng));
                               return frobenius_dist(evolve(to_iop(v), u).matrix(), to_iop(evolve(v, u)).matrix());
                             }));

  return out;
}

PropertyResult condensation_invariance(std::size_t trials, std::size_t steps, std::uint64_t seed,
                                       double tolerance) {
  return run_property("condensation_invariance", 0, trials, seed, 11, tolerance, [steps](Rng& rng) {
    static constexpr std::size_t kDims[] = {4, 6, 8};
    const std::size_t n = kDims[rng.next_u64() % 3];
    const std::size_t blocks = 2 + static_cast<std::size_t>(rng.next_u64() % 2);
    CMatrix basis(n, n);
    const CondensationStructure c = random::structure(n, blocks, rng, &basis);
    const UnitaryOp u(random::block_unitary(c, basis, rng));
    InfoOperator rho = random::info_operator(n, rng);
    const LabelProbabilities start = label_probabilities(rho, c);
    double worst = block_leak(u, c) > kBlockLeakTol ? 1.0 : 0.0;
    for (std::size_t k = 0; k < steps; ++k) {
      rho = evolve(rho, u);
      const LabelProbabilities now = label_probabilities(rho, c);
      for (std::size_t m = 0; m < now.size(); ++m) {
        worst = std::max(worst, std::abs(now[m].second - start[m].second));
      }
    }
    return worst;
  });
}

}  // namespace iopsim::properties
