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

#include "iopsim/scenarios.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "iopsim/composite.hpp"
#include "iopsim/condensation.hpp"
#include "iopsim/error.hpp"
#include "iopsim/iop.hpp"
#include "iopsim/ivec.hpp"
#include "iopsim/measurement.hpp"
#include "iopsim/serialize.hpp"

namespace iopsim {

namespace {

const std::map<std::string, std::map<std::string, double>>& tolerance_table() {
  static const std::map<std::string, std::map<std::string, double>> table = {
      {"stern-gerlach",
       {
           {"sg.r_tilde_plus_permutation", 1e-12},
           {"sg.r_tilde_minus_permutation", 1e-12},
           {"sg.unitarity", 1e-12},
           {"sg.initial_state", 1e-12},
           {"sg.final_state", 1e-12},
           {"sg.final_condensed", 1e-12},
           {"sg.branch_weights", 1e-12},
           {"sg.branch_separable", 1e-12},
           {"sg.branch_objects", 1e-12},
           {"sg.condition_on_label", 1e-12},
           {"sg.unconditional_object", 1e-12},
           {"sg.reverse_time_object", 1e-12},
           {"sg.interaction_dissolves_condensation", 1e-9},
           {"sg.post_interaction_invariance", 1e-9},
           {"sg.induced_kraus_definitive", 1e-9},
           {"sg.induced_probabilities", 1e-12},
           {"sg.expectation_identity", 1e-12},
           {"sg.monte_carlo", 0.0},
       }},
      {"cat",
       {
           {"cat.unitary_respects", 1e-9},
           {"cat.initial_probabilities", 1e-12},
           {"cat.probabilities_constant", 1e-9},
           {"cat.condensed_form", 1e-9},
           {"cat.condition_commutes", 1e-9},
           {"cat.multiple_description", 1e-8},
           {"cat.label_trajectory", 1e-9},
           {"cat.coherence_control", 1e-9},
           {"cat.swap_control", 1e-9},
       }},
      {"spin-one",
       {
           {"spin1.max_form", 1e-12},
           {"spin1.contraction_from_max", 1e-9},
           {"spin1.contraction_to_plus", 1e-10},
           {"spin1.contraction_to_minus", 1e-10},
           {"spin1.decompose_weights", 0.0},
           {"spin1.decompose_reconstruct", 1e-10},
           {"spin1.entropy_rho_prime", 1e-12},
           {"spin1.entropy_rho_max", 1e-12},
           {"spin1.entropy_order", 0.0},
           {"spin1.zero_eigenvalue_control", 1e-8},
       }},
      {"two-slit",
       {
           {"slit.definitive", 1e-9},
           {"slit.passage_pure", 1e-9},
           {"slit.normalization_coherent", 1e-9},
           {"slit.normalization_incoherent", 1e-9},
           {"slit.vector_operator_agree", 1e-9},
           {"slit.stepwise_agrees", 1e-9},
           {"slit.symmetry", 1e-9},
           {"slit.one_slit_match", 1e-9},
           {"slit.contrast_order", 0.0},
           {"slit.incoherent_mixed", 1e-9},
           {"slit.screen_without_sink_control", 1e-9},
       }},
  };
  return table;
}

/// Tolerance lookup with overrides applied.
class Tolerances {
 public:
  Tolerances(std::string_view scenario, const ScenarioConfig& cfg)
      : values_(default_tolerances(scenario)) {
    for (const auto& [name, value] : cfg.tolerances) {
      auto it = values_.find(name);
      if (it == values_.end()) {
        throw Error(ErrorCode::BadParameter,
                    "unknown tolerance '" + name + "' for scenario " + std::string(scenario));
      }
      if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error(ErrorCode::BadParameter, "tolerance '" + name + "' must be positive");
      }
      it->second = value;
    }
  }

  double operator()(const std::string& name) const { return values_.at(name); }

 private:
  std::map<std::string, double> values_;
};

void require_probability(double p, const char* name, bool allow_zero = true) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0 || (!allow_zero && p == 0.0)) {
    throw Error(ErrorCode::BadParameter, std::string(name) + " must lie in " +
                                             (allow_zero ? "[0, 1]" : "(0, 1]"));
  }
}

CMatrix projector_onto(std::size_t dim, std::size_t index) {
  CMatrix p(dim, dim);
  p(index, index) = 1.0;
  return p;
}

double max_abs_diff(const LabelProbabilities& a, const LabelProbabilities& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i].second - b[i].second));
  return worst;
}

}  // namespace

std::vector<std::string> scenario_names() { return {"stern-gerlach", "cat", "spin-one", "two-slit"}; }

const std::map<std::string, double>& default_tolerances(std::string_view scenario) {
  const auto& table = tolerance_table();
  const auto it = table.find(std::string(scenario));
  if (it == table.end()) {
    throw Error(ErrorCode::UnknownScenario, "unknown scenario '" + std::string(scenario) + "'");
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Stern-Gerlach

CMatrix spin_half_sz() { return CMatrix::diagonal({0.5, -0.5}); }

CMatrix pseudo_spin_rz() { return CMatrix::diagonal({1.0, 0.0, -1.0}); }

CMatrix pseudo_spin_rx() {
  const double a = 1.0 / std::numbers::sqrt2;
  return CMatrix{{0, a, 0}, {a, 0, a}, {0, a, 0}};
}

CMatrix stern_r_tilde(bool plus) {
  const double s = plus ? 1.0 : -1.0;
  const CMatrix rz = pseudo_spin_rz();
  const CMatrix id = CMatrix::identity(3);
  const CMatrix shifted = rz + id * cplx{s};
  const CMatrix lowered = rz - id * cplx{s};
  return shifted * pseudo_spin_rx() * shifted * cplx{std::numbers::sqrt2} + rz * lowered;
}

CMatrix stern_gerlach_unitary() {
  const CMatrix sz2 = spin_half_sz() * cplx{2.0};
  const CMatrix id = CMatrix::identity(2);
  return (kron(id - sz2, stern_r_tilde(true)) + kron(id + sz2, stern_r_tilde(false))) * cplx{0.25};
}

ScenarioReport stern_gerlach(const SternGerlachParams& params, const ScenarioConfig& cfg) {
  require_probability(params.p_up_prior, "p_up_prior");
  if (params.samples == 0) throw Error(ErrorCode::BadParameter, "samples must be positive");
  const Tolerances tol("stern-gerlach", cfg);
  const double p_up = params.p_up_prior;

  ScenarioReport report("stern-gerlach");
  report.inputs()["p_up_prior"] = p_up;
  report.inputs()["samples"] = params.samples;
  report.inputs()["seed"] = cfg.seed;
  report.inputs()["hbar"] = cfg.hbar;

  // R~+/2 swaps psi+ and psi0 and fixes psi-; R~-/2 swaps psi0 and psi- and
  // fixes psi+. Written out entrywise, independent of the operator formula.
  const CMatrix swap_plus_zero{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  const CMatrix swap_zero_minus{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  report.at_most("sg.r_tilde_plus_permutation", "R~+/2 is the permutation swapping psi+ and psi0",
                 frobenius_dist(stern_r_tilde(true) * cplx{0.5}, swap_plus_zero),
                 tol("sg.r_tilde_plus_permutation"));
  report.at_most("sg.r_tilde_minus_permutation", "R~-/2 is the permutation swapping psi0 and psi-",
                 frobenius_dist(stern_r_tilde(false) * cplx{0.5}, swap_zero_minus),
                 tol("sg.r_tilde_minus_permutation"));

  const CMatrix u_matrix = stern_gerlach_unitary();
  report.at_most("sg.unitarity", "||U^dagger U - I||_F of the interaction operator",
                 unitarity_residual(u_matrix), tol("sg.unitarity"));
  const UnitaryOp u(u_matrix);

  const InfoOperator up = validate(projector_onto(2, 0));
  const InfoOperator down = validate(projector_onto(2, 1));
  const InfoOperator t_plus = validate(projector_onto(3, 0));
  const InfoOperator t_zero = validate(projector_onto(3, 1));
  const InfoOperator t_minus = validate(projector_onto(3, 2));

  const InfoOperator prior = validate(up.matrix() * cplx{p_up} + down.matrix() * cplx{1.0 - p_up});
  const InfoOperator rho_t1 = compose(prior, t_zero);

  const CondensationStructure t_structure =
      CondensationStructure::from_basis_partition(3, {"+", "0", "-"}, {{0}, {1}, {2}});
  const CondensationStructure lifted = t_structure.lifted(2);
  const CompositeSpec spec(2, t_structure);

  const LabelProbabilities p_t1 = label_probabilities(rho_t1, lifted);
  report.at_most("sg.initial_state",
                 "before the interaction the apparatus reads 0 with certainty and rho is block-diagonal",
                 std::abs(p_t1[1].second - 1.0) + condensed_form_residual(rho_t1, lifted),
                 tol("sg.initial_state"));

  const InfoOperator rho_t2 = evolve(rho_t1, u);
  const CMatrix expected_t2 = kron(up.matrix(), t_minus.matrix()) * cplx{p_up} +
                              kron(down.matrix(), t_plus.matrix()) * cplx{1.0 - p_up};
  report.at_most("sg.final_state", "U rho(t1) U^dagger = p rho_up (x) rho_T- + (1-p) rho_down (x) rho_T+",
                 frobenius_dist(rho_t2.matrix(), expected_t2), tol("sg.final_state"));
  report.at_most("sg.final_condensed", "after the interaction rho has no coherence between apparatus subspaces",
                 condensed_form_residual(rho_t2, lifted), tol("sg.final_condensed"));

  const BranchDecomposition branches = branch_decompose(rho_t2, spec);
  const std::map<Label, double> expected_weight = {{"+", 1.0 - p_up}, {"0", 0.0}, {"-", p_up}};
  double weight_error = 0.0;
  for (const auto& [label, w] : expected_weight) {
    double got = 0.0;  // omitted branches have weight below the zero cut
    for (const Branch& b : branches.branches) {
      if (b.label == label) got = b.weight;
    }
    weight_error = std::max(weight_error, std::abs(got - w));
  }
  report.at_most("sg.branch_weights", "branch weights are (p_up for m = -, 1 - p_up for m = +)",
                 weight_error, tol("sg.branch_weights"));
  report.at_most("sg.branch_separable", "every branch block is an exact product p rho_S (x) rho_T",
                 branches.total_residual(), tol("sg.branch_separable"));

  double object_error = 0.0;
  for (const Branch& b : branches.branches) {
    if (b.label == "-") {
      object_error += frobenius_dist(b.rho_s.matrix(), up.matrix()) +
                      frobenius_dist(b.rho_t.matrix(), t_minus.matrix());
    } else if (b.label == "+") {
      object_error += frobenius_dist(b.rho_s.matrix(), down.matrix()) +
                      frobenius_dist(b.rho_t.matrix(), t_plus.matrix());
    } else {
      object_error += 1.0;
    }
  }
  report.at_most("sg.branch_objects", "branch - carries rho_up (x) rho_T-, branch + carries rho_down (x) rho_T+",
                 object_error, tol("sg.branch_objects"));

  double conditioning_error = 0.0;
  Json conditioned = Json::object();
  for (const Branch& b : branches.branches) {
    const InfoOperator given = condition_on_label(rho_t2, lifted, b.label);
    const InfoOperator& apparatus = b.label == "-" ? t_minus : t_plus;
    const InfoOperator& object = b.label == "-" ? up : down;
    const auto [recovered, separable_residual] = recover_object(given, apparatus);
    conditioning_error += frobenius_dist(given.matrix(), kron(object.matrix(), apparatus.matrix())) +
                          frobenius_dist(recovered.matrix(), object.matrix()) + separable_residual;
    conditioned[b.label] = matrix_to_json(recovered.matrix());
  }
  report.at_most("sg.condition_on_label",
                 "conditioning on m = - gives rho_up (x) rho_T-, whose object factor is rho_up (and + gives rho_down)",
                 conditioning_error, tol("sg.condition_on_label"));

  const InfoOperator unconditional = unconditional_object(branches);
  report.at_most("sg.unconditional_object", "sum_m p^m rho_S^m equals the prior object description",
                 frobenius_dist(unconditional.matrix(), prior.matrix()), tol("sg.unconditional_object"));

  // Free object Hamiltonian used to run the branch objects back from t2 to t1.
  const HamiltonianOp h_object(CMatrix{{0.0, 0.5}, {0.5, 0.0}});
  const UnitaryOp back = propagator(h_object, 1.0, 0.0, cfg.hbar);
  CMatrix reversed_mix(2, 2);
  for (const Branch& b : branches.branches) reversed_mix += evolve(b.rho_s, back).matrix() * cplx{b.weight};
  report.at_most("sg.reverse_time_object",
                 "reverse-time development commutes with forming sum_m p^m rho_S^m",
                 frobenius_dist(reversed_mix, evolve(unconditional, back).matrix()),
                 tol("sg.reverse_time_object"));

  report.exceeds("sg.interaction_dissolves_condensation",
                 "negative control: U mixes apparatus subspaces during the interaction",
                 block_leak(u, lifted), tol("sg.interaction_dissolves_condensation"));

  // After t2 the apparatus is condensed again: a block-diagonal Hamiltonian.
  const HamiltonianOp h_after(kron(h_object.matrix(), CMatrix::identity(3)) +
                              kron(CMatrix::identity(2), pseudo_spin_rz() * cplx{0.7}));
  const UnitaryOp u_after = propagator(h_after, 0.0, 2.5, cfg.hbar);
  const LabelProbabilities p_t2 = label_probabilities(rho_t2, lifted);
  const LabelProbabilities p_later = label_probabilities(evolve(rho_t2, u_after), lifted);
  report.at_most("sg.post_interaction_invariance",
                 "after t2 a block-diagonal development leaves the label probabilities unchanged",
                 block_leak(u_after, lifted) + max_abs_diff(p_t2, p_later),
                 tol("sg.post_interaction_invariance"));

  const std::vector<cplx> psi_t0{0.0, 1.0, 0.0};
  const MeasurementSystem induced = induced_measurement(
      u, 2, psi_t0, {"+", "0", "-"}, {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}},
      {1.0, 0.0, -1.0});
  report.at_most("sg.induced_kraus_definitive",
                 "Kraus family M^m = <psi_m|U|psi_0> satisfies sum M^dagger M = I",
                 induced.completeness_residual(), tol("sg.induced_kraus_definitive"));
  const LabelProbabilities outcome = outcome_probabilities(induced, prior);
  double outcome_error = 0.0;
  for (const auto& [label, p] : outcome) outcome_error = std::max(outcome_error, std::abs(p - expected_weight.at(label)));
  report.at_most("sg.induced_probabilities", "tr(M^m rho M^m^dagger) reproduces the branch weights",
                 outcome_error, tol("sg.induced_probabilities"));

  const Observable f = observable(induced);
  double f_weighted = 0.0;
  for (std::size_t i = 0; i < outcome.size(); ++i) f_weighted += induced.scale_values()[i] * outcome[i].second;
  const double f_trace = expectation(f, prior);
  report.at_most("sg.expectation_identity", "sum_m f(m) p^m equals tr(F rho)",
                 std::abs(f_weighted - f_trace), tol("sg.expectation_identity"));

  const LabelProbabilities sampled = estimate_probabilities(induced, prior, params.samples, cfg.seed);
  double mc_excess = -1.0;
  Json mc_bounds = Json::array();
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    const double p = outcome[i].second;
    const double bound = 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(params.samples));
    mc_excess = std::max(mc_excess, std::abs(sampled[i].second - p) - bound);
    mc_bounds.push_back(bound);
  }
  report.at_most("sg.monte_carlo", "sampled frequencies lie within 4 sqrt(p(1-p)/n) of p^m (residual: worst excess over the bound)",
                 std::max(mc_excess, 0.0), tol("sg.monte_carlo"));

  Json& out = report.outputs();
  out["interaction_unitary"] = matrix_to_json(u_matrix);
  out["rho_t1"] = matrix_to_json(rho_t1.matrix());
  out["rho_t2"] = matrix_to_json(rho_t2.matrix());
  out["label_probabilities"] = probabilities_to_json(p_t2);
  Json weights = Json::array();
  for (const Branch& b : branches.branches) weights.push_back(b.weight);
  out["branch_weights"] = std::move(weights);
  out["branches"] = branches_to_json(branches)["branches"];
  out["conditioned_objects"] = std::move(conditioned);
  out["unconditional_object"] = matrix_to_json(unconditional.matrix());
  out["induced_measurement"] = measurement_to_json(induced);
  out["observable"] = matrix_to_json(f.matrix());
  out["expectation"] = f_trace;
  out["sampled_probabilities"] = probabilities_to_json(sampled);
  out["sampling_bounds"] = std::move(mc_bounds);
  return report;
}

// ---------------------------------------------------------------------------
// Condensed two-outcome system

ScenarioReport cat(const CatParams& params, const ScenarioConfig& cfg) {
  require_probability(params.p_plus, "p_plus");
  if (params.steps == 0) throw Error(ErrorCode::BadParameter, "steps must be positive");
  if (!(params.dt > 0.0) || !std::isfinite(params.dt)) throw Error(ErrorCode::BadParameter, "dt must be positive");
  const Tolerances tol("cat", cfg);

  ScenarioReport report("cat");
  report.inputs()["p_plus"] = params.p_plus;
  report.inputs()["steps"] = params.steps;
  report.inputs()["dt"] = params.dt;
  report.inputs()["hbar"] = cfg.hbar;

  // Two condensation subspaces ("+" alive, "-" dead) of two internal levels each.
  const CondensationStructure c =
      CondensationStructure::from_basis_partition(4, {"+", "-"}, {{0, 1}, {2, 3}});
  const double a = 0.3;
  const cplx phase = std::polar(1.0, 0.4);
  const std::vector<cplx> alive{std::cos(a), std::sin(a) * phase, 0.0, 0.0};
  const InfoOperator rho_plus = validate(outer(alive, alive));
  const InfoOperator rho_minus = validate(CMatrix{
      {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0.6, cplx{0.1, 0.1}}, {0, 0, cplx{0.1, -0.1}, 0.4}});

  std::vector<double> weights;
  std::vector<InfoOperator> parts;
  if (params.p_plus > 0.0) {
    weights.push_back(params.p_plus);
    parts.push_back(rho_plus);
  }
  if (params.p_plus < 1.0) {
    weights.push_back(1.0 - params.p_plus);
    parts.push_back(rho_minus);
  }
  const InfoOperator rho0 = Mixture(weights, parts).combined();

  const HamiltonianOp h(CMatrix{{1.0, 0.5, 0, 0},
                                {0.5, -1.0, 0, 0},
                                {0, 0, 0.3, cplx{0.0, 0.2}},
                                {0, 0, cplx{0.0, -0.2}, 0.7}});
  const UnitaryOp step = propagator(h, 0.0, params.dt, cfg.hbar);
  report.at_most("cat.unitary_respects", "the one-step propagator is block-diagonal in the condensation",
                 block_leak(step, c), tol("cat.unitary_respects"));

  const LabelProbabilities p0 = label_probabilities(rho0, c);
  report.at_most("cat.initial_probabilities", "label probabilities start at (p_plus, 1 - p_plus)",
                 std::abs(p0[0].second - params.p_plus) + std::abs(p0[1].second - (1.0 - params.p_plus)),
                 tol("cat.initial_probabilities"));

  std::vector<Label> live;
  for (const Label& m : c.labels()) {
    if (label_probabilities(rho0, c)[c.index_of(m)].second > kZeroProbability) live.push_back(m);
  }
  std::map<Label, InfoOperator> conditioned;
  for (const Label& m : live) conditioned.emplace(m, condition_on_label(rho0, c, m));

  double drift = 0.0;
  double condensed = condensed_form_residual(rho0, c);
  double commute = 0.0;
  double multiple = 0.0;
  double label_track = 0.0;
  Json probs_plus = Json::array({p0[0].second});
  Json probs_minus = Json::array({p0[1].second});
  Json label_sequence = Json::array();
  auto read_label = [&](const InfoOperator& rho) {
    const LabelProbabilities p = label_probabilities(rho, c);
    return p[0].second >= p[1].second ? p[0].first : p[1].first;
  };
  if (!live.empty()) label_sequence.push_back(read_label(conditioned.at(live.front())));

  InfoOperator rho = rho0;
  for (std::size_t k = 1; k <= params.steps; ++k) {
    rho = evolve(rho, step);
    const LabelProbabilities pk = label_probabilities(rho, c);
    drift = std::max(drift, max_abs_diff(pk, p0));
    condensed = std::max(condensed, condensed_form_residual(rho, c));
    probs_plus.push_back(pk[0].second);
    probs_minus.push_back(pk[1].second);
    for (const Label& m : live) {
      InfoOperator& branch = conditioned.at(m);
      branch = evolve(branch, step);
      commute = std::max(commute, frobenius_dist(condition_on_label(rho, c, m).matrix(), branch.matrix()));
      // Every conditioned description stays a contraction of the full one.
      const InfoOperator recovered = contract(rho, contraction_from_mixture(rho, branch));
      multiple = std::max(multiple, frobenius_dist(recovered.matrix(), branch.matrix()));
      label_track = std::max(label_track,
                             std::abs(1.0 - label_probabilities(branch, c)[c.index_of(m)].second));
    }
    if (!live.empty()) label_sequence.push_back(read_label(conditioned.at(live.front())));
  }
  report.at_most("cat.probabilities_constant", "max drift of label probabilities over all steps",
                 drift, tol("cat.probabilities_constant"));
  report.at_most("cat.condensed_form", "rho stays block-diagonal at every step", condensed,
                 tol("cat.condensed_form"));
  report.at_most("cat.condition_commutes", "conditioning then evolving equals evolving then conditioning",
                 commute, tol("cat.condition_commutes"));
  report.at_most("cat.multiple_description",
                 "each conditioned description is recovered from rho by a contraction at every step",
                 multiple, tol("cat.multiple_description"));
  report.at_most("cat.label_trajectory", "a conditioned description keeps reading its own label",
                 label_track, tol("cat.label_trajectory"));

  // Negative controls.
  const std::vector<cplx> superposed{std::cos(a) / std::numbers::sqrt2,
                                     std::sin(a) * phase / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2, 0.0};
  const InfoOperator coherent = validate(outer(superposed, superposed));
  report.exceeds("cat.coherence_control",
                 "negative control: a superposition across subspaces is not in condensed form",
                 condensed_form_residual(coherent, c), tol("cat.coherence_control"));
  const UnitaryOp swap(CMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  report.exceeds("cat.swap_control", "negative control: a subspace-swapping unitary breaks condensation",
                 block_leak(swap, c), tol("cat.swap_control"));

  Json& out = report.outputs();
  out["structure"] = structure_to_json(c);
  out["initial_probabilities"] = probabilities_to_json(p0);
  Json series;
  series["+"] = std::move(probs_plus);
  series["-"] = std::move(probs_minus);
  out["probabilities_by_step"] = std::move(series);
  out["tracked_label"] = live.empty() ? Json(nullptr) : Json(live.front());
  out["label_sequence"] = std::move(label_sequence);
  out["coherent_control_probabilities"] = probabilities_to_json(label_probabilities(coherent, c));
  out["final_rho"] = matrix_to_json(rho.matrix());
  return report;
}

// ---------------------------------------------------------------------------
// Spin-1 multiple description

ScenarioReport spin_one_example(const ScenarioConfig& cfg) {
  const Tolerances tol("spin-one", cfg);
  ScenarioReport report("spin-one");
  report.inputs()["basis"] = Json::array({"+", "0", "-"});

  const CMatrix p_plus = projector_onto(3, 0);
  const CMatrix p_zero = projector_onto(3, 1);
  const CMatrix p_minus = projector_onto(3, 2);
  const InfoOperator rho_plus = validate(p_plus);
  const InfoOperator rho_minus = validate(p_minus);
  const InfoOperator rho_prime = validate((p_plus + p_minus) * cplx{0.5});
  const InfoOperator rho_max = max_iop(3);

  report.at_most("spin1.max_form", "max_iop(3) = (|0><0| + |+><+| + |-><-|)/3",
                 frobenius_dist(rho_max.matrix(), (p_zero + p_plus + p_minus) * cplx{1.0 / 3.0}),
                 tol("spin1.max_form"));

  const InfoOperator from_max = contract(rho_max, contraction_from_max(rho_prime));
  report.at_most("spin1.contraction_from_max", "K rho_max K^dagger = rho' for K from the eigenbasis of rho'",
                 frobenius_dist(from_max.matrix(), rho_prime.matrix()), tol("spin1.contraction_from_max"));

  const InfoOperator to_plus = contract(rho_prime, contraction_from_mixture(rho_prime, rho_plus));
  const InfoOperator to_minus = contract(rho_prime, contraction_from_mixture(rho_prime, rho_minus));
  report.at_most("spin1.contraction_to_plus", "rho+ is a contraction of rho'",
                 frobenius_dist(to_plus.matrix(), rho_plus.matrix()), tol("spin1.contraction_to_plus"));
  report.at_most("spin1.contraction_to_minus", "rho- is a contraction of rho'",
                 frobenius_dist(to_minus.matrix(), rho_minus.matrix()), tol("spin1.contraction_to_minus"));

  const std::vector<CMatrix> sigmas{p_plus * cplx{0.5}, p_minus * cplx{0.5}};
  const Mixture mixture = Mixture::from_unnormalized(sigmas);
  const auto parts = decompose(mixture);
  double weight_error = 0.0;
  CMatrix remixed(3, 3);
  for (const auto& [w, component] : parts) {
    weight_error = std::max(weight_error, std::abs(w - 0.5));
    remixed += component.matrix() * cplx{w};
  }
  report.at_most("spin1.decompose_weights", "rho' decomposes as rho+ and rho- with weights exactly 1/2",
                 weight_error, tol("spin1.decompose_weights"));
  report.at_most("spin1.decompose_reconstruct", "sum_i p_i rho_i reproduces rho'",
                 frobenius_dist(remixed, rho_prime.matrix()), tol("spin1.decompose_reconstruct"));

  const double e_prime = entropy(rho_prime);
  const double e_max = entropy(rho_max);
  report.at_most("spin1.entropy_rho_prime", "E[rho'] = log 2", std::abs(e_prime - std::log(2.0)),
                 tol("spin1.entropy_rho_prime"));
  report.at_most("spin1.entropy_rho_max", "E[rho_max] = log 3", std::abs(e_max - std::log(3.0)),
                 tol("spin1.entropy_rho_max"));
  report.exceeds("spin1.entropy_order", "rho' is more definitive than rho_max: E[rho_max] - E[rho'] > 0",
                 e_max - e_prime, tol("spin1.entropy_order"));

  const InfoOperator rho_zero = validate(p_zero);
  report.exceeds("spin1.zero_eigenvalue_control",
                 "negative control: |0><0| lies outside the support of rho' and is not a contraction of it",
                 support_excess(rho_prime, rho_zero), tol("spin1.zero_eigenvalue_control"));

  Json& out = report.outputs();
  out["rho_prime"] = matrix_to_json(rho_prime.matrix());
  out["rho_max"] = matrix_to_json(rho_max.matrix());
  out["contraction_from_max"] = matrix_to_json(contraction_from_max(rho_prime).k);
  out["contraction_to_plus"] = matrix_to_json(contraction_from_mixture(rho_prime, rho_plus).k);
  out["contraction_to_minus"] = matrix_to_json(contraction_from_mixture(rho_prime, rho_minus).k);
  out["decompose_weights"] = Json::array({parts[0].first, parts[1].first});
  Json entropies;
  entropies["rho_prime"] = e_prime;
  entropies["rho_max"] = e_max;
  out["entropies"] = std::move(entropies);
  Json flag;
  flag["suspected_transposition"] = true;
  flag["stated_rho_prime"] = "log 3";
  flag["stated_rho_max"] = "log 2";
  flag["note"] =
      "the source statement assigns log 3 to rho' and log 2 to rho_max; -tr(rho log rho) gives the "
      "opposite assignment, and the comparison it supports (rho' more definitive) holds only with "
      "the computed values";
  out["entropy_statement_check"] = std::move(flag);
  return report;
}

// ---------------------------------------------------------------------------
// Slit screen

std::vector<SlitRange> parse_slits(std::string_view text) {
  std::vector<SlitRange> out;
  auto parse_index = [&](std::string_view s) {
    std::size_t value = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
      throw Error(ErrorCode::BadSlitGeometry, "bad slit bound '" + std::string(s) + "'");
    }
    return value;
  };
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::BadSlitGeometry, "slit '" + std::string(item) + "' is not begin:end");
    }
    out.push_back({parse_index(item.substr(0, colon)), parse_index(item.substr(colon + 1))});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw Error(ErrorCode::BadSlitGeometry, "trailing comma in slit list");
  }
  if (out.empty()) throw Error(ErrorCode::BadSlitGeometry, "no slits given");
  return out;
}

void check_slit_geometry(const TwoSlitParams& params) {
  if (params.grid_n < 16) throw Error(ErrorCode::BadSlitGeometry, "grid_n must be at least 16");
  if (params.grid_n + 1 > kMaxDim) throw Error(ErrorCode::BadSlitGeometry, "grid_n exceeds the dense cap");
  if (params.slits.empty()) throw Error(ErrorCode::BadSlitGeometry, "need at least one slit");
  std::vector<SlitRange> sorted = params.slits;
  std::sort(sorted.begin(), sorted.end(), [](const SlitRange& a, const SlitRange& b) { return a.begin < b.begin; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].begin >= sorted[i].end) throw Error(ErrorCode::BadSlitGeometry, "empty slit range");
    if (sorted[i].end > params.grid_n) throw Error(ErrorCode::BadSlitGeometry, "slit outside the grid");
    if (i > 0 && sorted[i].begin < sorted[i - 1].end) {
      throw Error(ErrorCode::BadSlitGeometry, "slit ranges overlap");
    }
  }
}

CMatrix ring_hopping_hamiltonian(std::size_t n, std::size_t extra) {
  CMatrix h(n + extra, n + extra);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t next = (k + 1) % n;
    h(k, next) += -1.0;
    h(next, k) += -1.0;
  }
  return h;
}

double interference_contrast(const std::vector<double>& intensity, std::size_t begin, std::size_t end) {
  if (begin >= end || end > intensity.size()) throw Error(ErrorCode::BadParameter, "contrast region");
  const auto [lo, hi] = std::minmax_element(intensity.begin() + static_cast<std::ptrdiff_t>(begin),
                                            intensity.begin() + static_cast<std::ptrdiff_t>(end));
  return *hi - *lo;
}

namespace {

/// Slit screen as a definitive measurement on grid + sink: "pass" keeps
/// sqrt(p_pass) of the slit-site amplitude; "absorbed@k" sends whatever is
/// not transmitted at site k into the sink; "absorbed@sink" keeps the sink.
MeasurementSystem slit_screen(const TwoSlitParams& params, bool with_absorption) {
  const std::size_t n = params.grid_n;
  const std::size_t sink = n;
  std::vector<bool> open(n, false);
  for (const SlitRange& s : params.slits) {
    for (std::size_t k = s.begin; k < s.end; ++k) open[k] = true;
  }
  std::vector<Label> labels{"pass"};
  std::vector<CMatrix> kraus;
  CMatrix pass(n + 1, n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (open[k]) pass(k, k) = std::sqrt(params.p_pass);
  }
  kraus.push_back(std::move(pass));
  if (with_absorption) {
    for (std::size_t k = 0; k < n; ++k) {
      const double blocked = open[k] ? 1.0 - params.p_pass : 1.0;
      if (blocked <= 0.0) continue;
      CMatrix m(n + 1, n + 1);
      m(sink, k) = std::sqrt(blocked);
      labels.push_back("absorbed@" + std::to_string(k));
      kraus.push_back(std::move(m));
    }
    CMatrix keep(n + 1, n + 1);
    keep(sink, sink) = 1.0;
    labels.push_back("absorbed@sink");
    kraus.push_back(std::move(keep));
  }
  std::vector<double> f(labels.size(), 0.0);
  f[0] = 1.0;
  return MeasurementSystem(std::move(labels), std::move(kraus), std::move(f));
}

std::vector<double> grid_intensity(std::span<const cplx> psi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = std::norm(psi[k]);
  return out;
}

}  // namespace

ScenarioReport two_slit(const TwoSlitParams& params, const ScenarioConfig& cfg) {
  check_slit_geometry(params);
  require_probability(params.p_pass, "p_pass", /*allow_zero=*/false);
  if (params.steps == 0) throw Error(ErrorCode::BadParameter, "steps must be positive");
  if (!(params.dt > 0.0) || !std::isfinite(params.dt)) throw Error(ErrorCode::BadParameter, "dt must be positive");
  if (!(params.packet_width >= 0.0) || !std::isfinite(params.packet_width)) {
    throw Error(ErrorCode::BadParameter, "packet width must be non-negative");
  }
  const Tolerances tol("two-slit", cfg);
  const std::size_t n = params.grid_n;
  const double width = params.packet_width > 0.0 ? params.packet_width : static_cast<double>(n) / 4.0;

  ScenarioReport report("two-slit");
  Json& in = report.inputs();
  in["grid_n"] = n;
  in["p_pass"] = params.p_pass;
  Json slits = Json::array();
  for (const SlitRange& s : params.slits) slits.push_back(Json::array({s.begin, s.end}));
  in["slits"] = std::move(slits);
  in["steps"] = params.steps;
  in["dt"] = params.dt;
  in["packet_width"] = width;
  in["hbar"] = cfg.hbar;

  // Incoming packet centred on the grid, zero mean momentum; the sink is empty.
  const double centre = (static_cast<double>(n) - 1.0) / 2.0;
  std::vector<cplx> incoming(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = (static_cast<double>(k) - centre) / width;
    incoming[k] = std::exp(-0.5 * x * x);
  }
  const InfoVector psi_a(incoming);
  const InfoOperator rho_a = to_iop(psi_a);

  const MeasurementSystem screen = slit_screen(params, true);
  report.at_most("slit.definitive", "the slit screen {M_pass, M_abs} is a definitive measurement",
                 screen.completeness_residual(), tol("slit.definitive"));

  const LabelProbabilities outcomes = outcome_probabilities(screen, rho_a);
  const double p_pass_total = outcomes.front().second;
  const InfoOperator rho_b = post_measurement_object(screen, rho_a, "pass");
  report.at_most("slit.passage_pure", "conditioning on passage yields a pure i-operator",
                 std::abs(purity(rho_b) - 1.0), tol("slit.passage_pure"));
  // Label-blind description after the screen: p rho_b + (1 - p) rho_abs.
  const CMatrix after_screen = kraus_image(screen, rho_a);

  const HamiltonianOp h(ring_hopping_hamiltonian(n, 1));
  const double total_time = static_cast<double>(params.steps) * params.dt;
  const UnitaryOp u_total = propagator(h, 0.0, total_time, cfg.hbar);

  // (a) coherent passage: the information vector develops continuously.
  const InfoVector psi_b = from_iop(rho_b);
  const InfoVector psi_final = evolve(psi_b, u_total);
  const std::vector<double> coherent = grid_intensity(psi_final.amplitudes(), n);

  const UnitaryOp u_step = propagator(h, 0.0, params.dt, cfg.hbar);
  InfoVector stepped = psi_b;
  for (std::size_t k = 0; k < params.steps; ++k) stepped = evolve(stepped, u_step);
  const std::vector<double> coherent_stepped = grid_intensity(stepped.amplitudes(), n);

  const InfoOperator rho_final = evolve(rho_b, u_total);
  double vector_operator_gap = 0.0;
  double stepped_gap = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    vector_operator_gap = std::max(vector_operator_gap, std::abs(rho_final.matrix()(k, k).real() - coherent[k]));
    stepped_gap = std::max(stepped_gap, std::abs(coherent_stepped[k] - coherent[k]));
  }
  report.at_most("slit.vector_operator_agree",
                 "intensity from the developed information vector equals the diagonal of the developed i-operator",
                 vector_operator_gap, tol("slit.vector_operator_agree"));
  report.at_most("slit.stepwise_agrees", "stepwise development matches the one-shot propagator",
                 stepped_gap, tol("slit.stepwise_agrees"));

  // (b) incoherent: one slit at a time, mixed by passage weight.
  std::vector<double> incoherent(n, 0.0);
  CMatrix rho_incoherent(n + 1, n + 1);
  double weight_total = 0.0;
  std::vector<std::pair<double, InfoVector>> per_slit;
  for (const SlitRange& s : params.slits) {
    std::vector<cplx> amp(n + 1);
    double w = 0.0;
    for (std::size_t k = s.begin; k < s.end; ++k) {
      amp[k] = std::sqrt(params.p_pass) * psi_a[k];
      w += std::norm(amp[k]);
    }
    per_slit.emplace_back(w, InfoVector(std::move(amp)));
    weight_total += w;
  }
  for (const auto& [w, v] : per_slit) {
    const double share = w / weight_total;
    const InfoVector developed = evolve(v, u_total);
    for (std::size_t k = 0; k < n; ++k) incoherent[k] += share * std::norm(developed[k]);
    rho_incoherent += to_iop(v).matrix() * cplx{share};
  }

  auto total = [](const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
  };
  report.at_most("slit.normalization_coherent", "coherent detection intensities sum to 1",
                 std::abs(total(coherent) - 1.0), tol("slit.normalization_coherent"));
  report.at_most("slit.normalization_incoherent", "incoherent detection intensities sum to 1",
                 std::abs(total(incoherent) - 1.0), tol("slit.normalization_incoherent"));

  // Symmetric geometry: every slit has a mirror image about the grid centre.
  bool symmetric = true;
  for (const SlitRange& s : params.slits) {
    const SlitRange mirror{n - s.end, n - s.begin};
    symmetric = symmetric && std::any_of(params.slits.begin(), params.slits.end(), [&](const SlitRange& t) {
                  return t.begin == mirror.begin && t.end == mirror.end;
                });
  }
  if (symmetric) {
    double asym = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      asym = std::max(asym, std::abs(coherent[k] - coherent[n - 1 - k]));
      asym = std::max(asym, std::abs(incoherent[k] - incoherent[n - 1 - k]));
    }
    report.at_most("slit.symmetry", "mirror-symmetric slits give a mirror-symmetric pattern", asym,
                   tol("slit.symmetry"));
  }

  const std::size_t region_begin = n / 4;
  const std::size_t region_end = n - n / 4;
  const double contrast_coherent = interference_contrast(coherent, region_begin, region_end);
  const double contrast_incoherent = interference_contrast(incoherent, region_begin, region_end);
  const InfoOperator mixed = validate(rho_incoherent);
  if (params.slits.size() == 1) {
    double gap = 0.0;
    for (std::size_t k = 0; k < n; ++k) gap = std::max(gap, std::abs(coherent[k] - incoherent[k]));
    report.at_most("slit.one_slit_match", "with one slit the coherent and incoherent patterns coincide",
                   gap, tol("slit.one_slit_match"));
  } else {
    report.exceeds("slit.contrast_order",
                   "coherent contrast minus incoherent contrast over the central half is positive",
                   contrast_coherent - contrast_incoherent, tol("slit.contrast_order"));
    report.exceeds("slit.incoherent_mixed", "negative control: the one-slit-at-a-time mixture is not pure",
                   1.0 - purity(mixed), tol("slit.incoherent_mixed"));
  }
  report.exceeds("slit.screen_without_sink_control",
                 "negative control: dropping the absorption maps breaks completeness",
                 slit_screen(params, false).completeness_residual(), tol("slit.screen_without_sink_control"));

  Json& out = report.outputs();
  out["passage_probability"] = p_pass_total;
  out["absorption_probability"] = 1.0 - p_pass_total;
  out["after_screen_trace"] = after_screen.trace().real();
  out["contrast_region"] = Json::array({region_begin, region_end});
  out["contrast_coherent"] = contrast_coherent;
  out["contrast_incoherent"] = contrast_incoherent;
  out["intensity_coherent"] = real_vector_to_json(coherent);
  out["intensity_incoherent"] = real_vector_to_json(incoherent);
  out["continuity_assumption"] =
      "the passing part of the incoming i-operator is assumed to continue into the pure post-screen "
      "i-operator through a continuous information vector; this is a modeling choice, not a derived property";
  return report;
}

// ---------------------------------------------------------------------------
// Dispatch

namespace {

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || res.ec != std::errc{} || res.ptr != value.data() + value.size() || !std::isfinite(out)) {
    throw Error(ErrorCode::BadParameter, "parameter '" + key + "' expects a number, got '" + value + "'");
  }
  return out;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  std::size_t out = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || res.ec != std::errc{} || res.ptr != value.data() + value.size() || out == 0) {
    throw Error(ErrorCode::BadParameter,
                "parameter '" + key + "' expects a positive integer, got '" + value + "'");
  }
  return out;
}

void reject_unknown(std::string_view scenario, const std::map<std::string, std::string>& params,
                    std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : params) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw Error(ErrorCode::BadParameter,
                  "unknown parameter '" + key + "' for scenario " + std::string(scenario));
    }
  }
}

}  // namespace

ScenarioReport run_scenario(std::string_view name, const std::map<std::string, std::string>& params,
                            const ScenarioConfig& cfg) {
  if (!(cfg.hbar > 0.0) || !std::isfinite(cfg.hbar)) throw Error(ErrorCode::BadParameter, "hbar must be positive");
  default_tolerances(name);  // UnknownScenario
  if (name == "stern-gerlach") {
    reject_unknown(name, params, {"p-up", "samples"});
    SternGerlachParams p;
    if (params.contains("p-up")) p.p_up_prior = parse_double("p-up", params.at("p-up"));
    if (params.contains("samples")) p.samples = parse_count("samples", params.at("samples"));
    return stern_gerlach(p, cfg);
  }
  if (name == "cat") {
    reject_unknown(name, params, {"p-plus", "steps", "dt"});
    CatParams p;
    if (params.contains("p-plus")) p.p_plus = parse_double("p-plus", params.at("p-plus"));
    if (params.contains("steps")) p.steps = parse_count("steps", params.at("steps"));
    if (params.contains("dt")) p.dt = parse_double("dt", params.at("dt"));
    return cat(p, cfg);
  }
  if (name == "spin-one") {
    reject_unknown(name, params, {});
    return spin_one_example(cfg);
  }
  reject_unknown(name, params, {"grid", "slits", "p-pass", "steps", "dt", "width"});
  TwoSlitParams p;
  if (params.contains("grid")) p.grid_n = parse_count("grid", params.at("grid"));
  if (params.contains("slits")) p.slits = parse_slits(params.at("slits"));
  if (params.contains("p-pass")) p.p_pass = parse_double("p-pass", params.at("p-pass"));
  if (params.contains("steps")) p.steps = parse_count("steps", params.at("steps"));
  if (params.contains("dt")) p.dt = parse_double("dt", params.at("dt"));
  if (params.contains("width")) p.packet_width = parse_double("width", params.at("width"));
  return two_slit(p, cfg);
}

}  // namespace iopsim
