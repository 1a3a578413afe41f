// Copyright 2026 The seqmeas Authors
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

#include "seqmeas/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "seqmeas/random.hpp"
#include "seqmeas/sequential.hpp"
#include "seqmeas/spin.hpp"

namespace seqmeas {

namespace {

double max_over(std::size_t count, auto&& f) {
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) worst = std::max(worst, f(k));
  return worst;
}

double measure_distance(const CovariantMeasure& a, const CovariantMeasure& b) {
  double worst = 0.0;
  for (std::size_t x = 0; x < a.densities().size(); ++x)
    worst = std::max(worst, frobenius_distance(a.density(x), b.density(x)));
  return worst;
}

SuiteReport weyl_suite(const WeylSystem& ws) {
  const auto& g = ws.group();
  const std::size_t n = ws.dim();
  double cov_a = 0.0, cov_b = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < n; ++k) {
      const CMatrix& u = ws.translation(x);
      const CMatrix& v = ws.modulation(x);
      cov_a = std::max(cov_a, frobenius_distance(u * ws.position_point(k) * u.adjoint(),
                                                 ws.position_point(g.add_index(k, x))));
      cov_a = std::max(cov_a, frobenius_distance(v * ws.position_point(k) * v.adjoint(), ws.position_point(k)));
      cov_b = std::max(cov_b, frobenius_distance(v * ws.momentum_point(k) * v.adjoint(),
                                                 ws.momentum_point(g.add_index(x, k))));
      cov_b = std::max(cov_b, frobenius_distance(u * ws.momentum_point(k) * u.adjoint(), ws.momentum_point(k)));
    }
  return {"weyl",
          {{"weyl relation", weyl_relation_residual(ws), 1e-12},
           {"snag", snag_residual(ws), 1e-10},
           {"composition", composition_residual(ws), 1e-12},
           {"coupling intertwiners", coupling_intertwiner_residual(ws), 1e-12},
           {"position covariance", cov_a, 1e-10},
           {"momentum covariance", cov_b, 1e-10}}};
}

SuiteReport correspondence_suite(const WeylSystem& ws, const SuiteOptions& opts) {
  Rng rng(opts.seed);
  double round_trip = 0.0, covariance = 0.0, standard = 0.0, standard_measure = 0.0;
  for (std::size_t s = 0; s < opts.samples; ++s) {
    const auto mm = random_measure(rng, ws.group());
    const auto inst = covariant_instrument(ws, mm);
    covariance = std::max(covariance, verify_covariance(ws, inst));
    round_trip = std::max(round_trip, measure_distance(reconstruct_measure(ws, inst), mm));

    const State omega = random_state(rng, ws.dim());
    const auto std_inst = standard_instrument(ws, omega);
    standard = std::max(standard, verify_covariance(ws, std_inst));
    standard_measure = std::max(standard_measure, measure_distance(reconstruct_measure(ws, std_inst),
                                                                   CovariantMeasure::point(ws.group(), 0, omega)));
  }
  return {"theorem41",
          {{"measure round trip", round_trip, 1e-8},
           {"instrument covariance", covariance, 1e-9},
           {"standard instrument covariance", standard, 1e-9},
           {"standard instrument measure", standard_measure, 1e-8}}};
}

SuiteReport noise_measure_suite(const WeylSystem& ws, const SuiteOptions& opts) {
  Rng rng(opts.seed);
  double pos = 0.0, mom = 0.0;
  for (std::size_t s = 0; s < opts.samples; ++s) {
    const auto r = run_sequential(ws, random_measure(rng, ws.group()));
    pos = std::max(pos, r.residuals.position_smearing);
    mom = std::max(mom, r.residuals.momentum_smearing);
  }
  return {"prop42", {{"position marginal", pos, 1e-9}, {"momentum marginal", mom, 1e-9}}};
}

SuiteReport generating_state_suite(const WeylSystem& ws, const SuiteOptions& opts) {
  Rng rng(opts.seed);
  double joint = 0.0, involution = 0.0;
  for (std::size_t s = 0; s < opts.samples; ++s) {
    joint = std::max(joint, run_sequential(ws, random_measure(rng, ws.group())).residuals.generating_state);
    const CMatrix t = random_matrix(rng, ws.dim(), ws.dim());
    involution = std::max(involution, frobenius_distance(check_map(ws, check_map(ws, t)), t));
  }
  return {"prop43", {{"joint equals C_S", joint, 1e-9}, {"check map involution", involution, 1e-10}}};
}

SuiteReport implementation_suite(const WeylSystem& ws, const SuiteOptions& opts) {
  Rng rng(opts.seed);
  double joint = 0.0, state = 0.0;
  for (std::size_t s = 0; s < opts.samples; ++s) {
    const State st = random_state(rng, ws.dim());
    const auto impl = sequential_from_cpso(ws, st);
    joint = std::max(joint, max_effect_distance(impl.joint, cpso_from_state(ws, st)));
    const auto mm = reconstruct_measure(ws, impl.instrument);
    state = std::max(state, frobenius_distance(generating_state(ws, mm).matrix(), st.matrix()));
  }
  return {"corollary44", {{"sequential C_S", joint, 1e-9}, {"probe/state round trip", state, 1e-9}}};
}

SuiteReport spin_suite(const SuiteOptions& opts) {
  Rng rng(opts.seed);
  const WeylSystem z2(Group({2}));
  double kron = 0.0, excess = 0.0, frame = 0.0, noise = 0.0;
  for (std::size_t s = 0; s < opts.samples; ++s) {
    const Vec3 a = random_unit_vector(rng);
    Vec3 b = random_unit_vector(rng);
    const double ab = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    b = {b[0] - ab * a[0], b[1] - ab * a[1], b[2] - ab * a[2]};
    const SpinFrame f(a, b);
    const State omega = random_state(rng, 2);
    kron = std::max(kron, kronecker_factorization_check(f, omega, random_state(rng, 2)));
    excess = std::max(excess, tradeoff_check(f, bloch_state(random_bloch_vector(rng))) - 1.0);
    frame = std::max(frame, frame_weyl_residual(f));

    // The probe written in the frame basis is the Z_2 measure delta_0 (x) omega.
    const auto u = unsharp_spin(f, omega);
    const auto mm = CovariantMeasure::point(z2.group(), 0, State(f.to_frame(omega.matrix())));
    const auto [sigma, tau] = noise_measures(z2, mm);
    noise = std::max({noise, std::abs(2.0 * sigma[0] - 1.0 - u.s), std::abs(2.0 * tau[0] - 1.0 - u.t)});
  }
  const SpinFrame zx({0, 0, 1}, {1, 0, 0});
  const auto top = unsharp_spin(zx, State::basis(2, 0));
  const double worked = std::max(std::abs(top.s - 1.0), std::abs(top.t));
  return {"spin",
          {{"kronecker factorization", kron, 1e-10},
           {"tradeoff excess", std::max(excess, 0.0), 1e-12},
           {"frame weyl equivalence", frame, 1e-10},
           {"noise measure agreement", noise, 1e-10},
           {"worked values", worked, 1e-12}}};
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

double SuiteReport::max_residual() const {
  return max_over(checks.size(), [&](std::size_t k) { return checks[k].residual; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"weyl", "theorem41", "prop42", "prop43", "corollary44", "spin"};
  return names;
}

bool is_suite(std::string_view name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<SuiteReport> run_suites(std::string_view name, const Group& g, const SuiteOptions& opts) {
  if (!is_suite(name)) throw InvariantError("unknown suite \"" + std::string(name) + "\"");
  std::vector<SuiteReport> out;
  const bool all = name == "all";
  if (name == "spin" && !all) {
    out.push_back(spin_suite(opts));
    return out;
  }
  const WeylSystem ws(g);
  if (all || name == "weyl") out.push_back(weyl_suite(ws));
  if (all || name == "theorem41") out.push_back(correspondence_suite(ws, opts));
  if (all || name == "prop42") out.push_back(noise_measure_suite(ws, opts));
  if (all || name == "prop43") out.push_back(generating_state_suite(ws, opts));
  if (all || name == "corollary44") out.push_back(implementation_suite(ws, opts));
  if (all) out.push_back(spin_suite(opts));
  return out;
}

}  // namespace seqmeas
