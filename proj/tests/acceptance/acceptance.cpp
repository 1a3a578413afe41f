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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "seqmeas/sequential.hpp"
#include "seqmeas/spin.hpp"

namespace {

using namespace seqmeas;
using testing::Gen;
using testing::Lattice;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Worst value seen against its bound.
struct Bound {
  const char* what;
  double limit;
  double worst = 0.0;

  void see(double v) { worst = std::max(worst, std::isnan(v) ? INFINITY : v); }
  bool ok() const { return worst <= limit; }
  std::string str() const {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s %.3g (<= %.0e)", what, worst, limit);
    return buf;
  }
};

Verdict collect(std::initializer_list<const Bound*> bounds) {
  Verdict o;
  for (const Bound* b : bounds) {
    o.pass = o.pass && b->ok();
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += b->str();
  }
  return o;
}

double measure_distance(const CovariantMeasure& a, const CovariantMeasure& b) {
  double worst = 0.0;
  for (std::size_t x = 0; x < a.densities().size(); ++x)
    worst = std::max(worst, frobenius_distance(a.density(x), b.density(x)));
  return worst;
}

// Every instrument built along the way, for the probability law.
std::vector<Instrument> g_built;

Verdict weyl_and_snag() {
  Bound rel{"weyl relation", 1e-12}, snag{"snag", 1e-10};
  for (const char* spec : {"2", "3", "4", "5", "6", "2x2", "2x3", "3x2"}) {
    const WeylSystem ws(Group::parse(spec));
    const Lattice lat(ws.group().moduli());
    const std::size_t n = lat.size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t chi = 0; chi < n; ++chi) {
        const CMatrix& u = ws.translation(x);
        const CMatrix& v = ws.modulation(chi);
        rel.see(testing::max_entry(u * v - v * u * std::conj(lat.character(chi, x))));
      }
    // U_x = sum_chi conj(chi(x)) B({chi}),  V_chi = sum_x chi(x) A({x}), with the
    // spectral measures taken from the reference formulas.
    for (std::size_t x = 0; x < n; ++x) {
      CMatrix u(n, n), v(n, n);
      for (std::size_t k = 0; k < n; ++k) {
        u += testing::oracle_momentum_point(lat, k) * std::conj(lat.character(k, x));
        v += CMatrix::unit(n, k, k) * lat.character(x, k);
      }
      snag.see(frobenius_distance(u, ws.translation(x)));
      snag.see(frobenius_distance(v, ws.modulation(x)));
    }
    rel.see(weyl_relation_residual(ws));
    snag.see(snag_residual(ws));
  }
  return collect({&rel, &snag});
}

Verdict intertwiners() {
  Bound b{"intertwiner", 1e-12};
  for (const char* spec : {"2", "3", "4", "2x2"}) {
    const WeylSystem ws(Group::parse(spec));
    const Lattice lat(ws.group().moduli());
    const std::size_t n = lat.size();
    const CMatrix l = testing::oracle_coupling(lat);
    if (!(l == coupling_unitary(ws))) b.see(INFINITY);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const CMatrix ux = testing::oracle_translation(lat, x);
        b.see(frobenius_distance(l * testing::oracle_kron(ux, testing::oracle_translation(lat, y)),
                                 testing::oracle_kron(ux, testing::oracle_translation(lat, lat.add(x, y))) * l));
        const CMatrix vg = testing::oracle_modulation(lat, y);
        b.see(frobenius_distance(l * testing::oracle_kron(testing::oracle_modulation(lat, x), vg),
                                 testing::oracle_kron(testing::oracle_modulation(lat, lat.sub(x, y)), vg) * l));
      }
    b.see(coupling_intertwiner_residual(ws));
  }
  return collect({&b});
}

Verdict round_trip() {
  Gen gen(301);
  Bound rt{"round trip", 1e-8}, cov{"covariance", 1e-9};
  for (int d : {2, 3, 5}) {
    const WeylSystem ws(Group({d}));
    for (int rep = 0; rep < 50; ++rep) {
      const auto mm = gen.measure(ws.group(), rep % 2 == 1);
      Instrument inst = covariant_instrument(ws, mm);
      cov.see(verify_covariance(ws, inst));
      rt.see(measure_distance(reconstruct_measure(ws, inst), mm));
      g_built.push_back(std::move(inst));
    }
  }
  return collect({&rt, &cov});
}

Verdict noise_marginals() {
  Gen gen(401);
  Bound a{"position marginal", 1e-9}, b{"momentum marginal", 1e-9};
  for (int d : {2, 3}) {
    const WeylSystem ws(Group({d}));
    for (int rep = 0; rep < 50; ++rep) {
      const auto mm = gen.measure(ws.group(), rep % 2 == 1);
      const Povm c = joint_observable(ws, covariant_instrument(ws, mm));
      // sigma and tau straight from M'(G): diagonal and overlaps with B({-chi}).
      const Lattice lat({d});
      CMatrix total(d, d);
      for (std::size_t x = 0; x < lat.size(); ++x) {
        const CMatrix u = testing::oracle_translation(lat, x);
        total += u.adjoint() * mm.density(x) * u;
      }
      for (std::size_t k = 0; k < lat.size(); ++k) {
        CMatrix ea(d, d), eb(d, d), ca(d, d), cb(d, d);
        for (std::size_t j = 0; j < lat.size(); ++j) {
          const double sigma = total(lat.sub(k, j), lat.sub(k, j)).real();
          ea += CMatrix::unit(d, j, j) * sigma;
          const double tau = (testing::oracle_momentum_point(lat, lat.neg(lat.sub(k, j))) * total).trace().real();
          eb += testing::oracle_momentum_point(lat, j) * tau;
          ca += c.effect(k * lat.size() + j);
          cb += c.effect(j * lat.size() + k);
        }
        a.see(frobenius_distance(ca, ea));
        b.see(frobenius_distance(cb, eb));
      }
    }
  }
  return collect({&a, &b});
}

Verdict generating_states() {
  Gen gen(501);
  Bound joint{"joint vs C_S", 1e-9}, impl{"sequential implementation", 1e-9}, loop{"check round trip", 1e-10};
  for (int d : {2, 3, 4}) {
    const WeylSystem ws(Group({d}));
    for (int rep = 0; rep < 20; ++rep) {
      const auto mm = gen.measure(ws.group(), rep % 2 == 1);
      joint.see(max_effect_distance(joint_observable(ws, covariant_instrument(ws, mm)),
                                    cpso_from_state(ws, generating_state(ws, mm))));

      const State s = gen.state(ws.dim());
      auto seq = sequential_from_cpso(ws, s);
      impl.see(max_effect_distance(seq.joint, cpso_from_state(ws, s)));
      g_built.push_back(std::move(seq.instrument));

      const Lattice lat({d});
      const CMatrix omega = testing::oracle_check(lat, s.matrix());
      loop.see(frobenius_distance(check_map(ws, s.matrix()), omega));
      loop.see(frobenius_distance(generating_state(ws, CovariantMeasure::point(ws.group(), 0, State(omega))).matrix(),
                                  s.matrix()));
    }
  }
  return collect({&joint, &impl, &loop});
}

Verdict reconstruction_formula() {
  Gen gen(601);
  Bound b{"reconstruction formula", 1e-9};
  for (int d : {2, 3, 4}) {
    const Lattice lat({d});
    const std::size_t n = lat.size();
    for (int rep = 0; rep < 100; ++rep) {
      const CMatrix t = gen.matrix(n, n);
      const CMatrix f1(n, 1, gen.vector(n)), f2(n, 1, gen.vector(n));
      Complex lhs = 0.0;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t chi = 0; chi < n; ++chi) {
          const CMatrix w = testing::oracle_modulation(lat, chi) * testing::oracle_translation(lat, x);
          lhs += (w * t).trace() * (f2.adjoint() * w.adjoint() * f1)(0, 0);
        }
      b.see(std::abs(lhs - static_cast<double>(n) * (f2.adjoint() * t * f1)(0, 0)));
    }
  }
  return collect({&b});
}

Vec3 unit3(Gen& gen) {
  Vec3 v{gen.real(), gen.real(), gen.real()};
  const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / len, v[1] / len, v[2] / len};
}

SpinFrame random_frame(Gen& gen) {
  const Vec3 a = unit3(gen), w = unit3(gen);
  const Vec3 b{a[1] * w[2] - a[2] * w[1], a[2] * w[0] - a[0] * w[2], a[0] * w[1] - a[1] * w[0]};
  return SpinFrame(a, b);
}

Verdict spin() {
  Gen gen(701);
  Bound kr{"kronecker", 1e-10}, excess{"s^2+t^2-1", 1e-12}, axis{"|s^2+t^2-1| at r=a", 1e-9},
      worked{"worked values", 1e-12};
  for (int rep = 0; rep < 100; ++rep)
    kr.see(kronecker_factorization_check(random_frame(gen), gen.state(2), gen.state(2)));
  for (int rep = 0; rep < 1000; ++rep) {
    const SpinFrame f = random_frame(gen);
    // Uniform in the Bloch ball, with every tenth probe pure.
    const Vec3 dir = unit3(gen);
    const double r = rep % 10 == 0 ? 1.0 : std::cbrt(gen.unit());
    const State omega = bloch_state({r * dir[0], r * dir[1], r * dir[2]});
    excess.see(tradeoff_check(f, omega) - 1.0);
  }
  for (int rep = 0; rep < 20; ++rep) {
    const SpinFrame f = random_frame(gen);
    axis.see(std::abs(tradeoff_check(f, bloch_state(f.a())) - 1.0));
    const CMatrix& e = f.basis();
    const auto u = unsharp_spin(f, State(e * CMatrix::unit(2, 0, 0) * e.adjoint()));
    worked.see(std::abs(u.s - 1.0));
    worked.see(std::abs(u.t));
  }
  return collect({&kr, &excess, &axis, &worked});
}

Verdict informational_completeness() {
  const WeylSystem ws(Group({2}));
  const double r = 1.0 / std::sqrt(3.0);
  const Complex i{0.0, 1.0};
  const State tilted((CMatrix::identity(2) + CMatrix{{r, r - i * r}, {r + i * r, -r}}) * Complex(0.5));
  const std::size_t rank_e0 = effect_span_rank(cpso_from_state(ws, State::basis(2, 0)));
  const std::size_t rank_tilted = effect_span_rank(cpso_from_state(ws, tilted));
  Verdict o;
  o.pass = rank_e0 == 2 && rank_tilted == 4 && !is_informationally_complete(cpso_from_state(ws, State::basis(2, 0))) &&
           is_informationally_complete(cpso_from_state(ws, tilted));
  o.detail = "rank " + std::to_string(rank_e0) + " for |e0><e0| (want 2), rank " + std::to_string(rank_tilted) +
             " for the tilted state (want 4)";
  return o;
}

Verdict probability_law() {
  Gen gen(901);
  Bound sum{"|sum - 1|", 1e-9}, neg{"-min p", 1e-12};
  for (const auto& inst : g_built) {
    for (int rep = 0; rep < 100; ++rep) {
      const CMatrix rho = gen.state(inst.dim()).matrix();
      double total = 0.0;
      for (const auto& m : inst.maps()) {
        const double p = apply(m, rho).trace().real();
        neg.see(-p);
        total += p;
      }
      sum.see(std::abs(total - 1.0));
    }
  }
  Verdict o = collect({&sum, &neg});
  o.detail += "; " + std::to_string(g_built.size()) + " instruments";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"weyl relation and snag", weyl_and_snag},
      {"coupling intertwiners", intertwiners},
      {"measure/instrument round trip", round_trip},
      {"noise measures", noise_marginals},
      {"generating state and sequential implementation", generating_states},
      {"reconstruction formula", reconstruction_formula},
      {"spin example", spin},
      {"informational completeness", informational_completeness},
      {"instrument probability law", probability_law},
  };
  int failures = 0;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    Verdict o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d %s: %s\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
