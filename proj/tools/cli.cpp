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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "seqmeas/json_io.hpp"
#include "seqmeas/random.hpp"
#include "seqmeas/sequential.hpp"
#include "seqmeas/spin.hpp"
#include "seqmeas/suites.hpp"

namespace seqmeas::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string group;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::string out;

  std::string measure;
  std::string in;
  std::string state;
  std::string csv_dir;
  std::string probe;
  std::string rho;
  std::string a = "0,0,1";
  std::string b = "1,0,0";
  std::string suite = "all";
  std::size_t samples = 10;
  bool check_ic = false;
};

// A residual exceeded its tolerance; reported with exit code 2.
class ResidualFailure : public Error {
 public:
  using Error::Error;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

void emit(const RunConfig& cfg, Io io, const Json& j) {
  const std::string text = dump(j);
  if (cfg.out.empty()) {
    io.out << text;
  } else {
    write_text_file(cfg.out, text);
  }
}

Group resolve_group(const RunConfig& cfg, const Group& from_file) {
  if (!cfg.group.empty() && !(Group::parse(cfg.group) == from_file)) {
    throw ParseError("--group " + cfg.group + " does not match the input's group " + from_file.to_string());
  }
  return from_file;
}

Group required_group(const RunConfig& cfg) {
  return Group::parse(cfg.group.empty() ? std::string("2") : cfg.group);
}

Vec3 parse_vec3(const std::string& text, const char* flag) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(std::string(flag) + ": \"" + text + "\" is not three comma-separated numbers");
    }
  }
  if (v.size() != 3) throw ParseError(std::string(flag) + ": \"" + text + "\" is not three comma-separated numbers");
  return {v[0], v[1], v[2]};
}

int cmd_sequential(const RunConfig& cfg, Io io) {
  const CovariantMeasure mm = measure_from_json(read_json_file(cfg.measure));
  const WeylSystem ws(resolve_group(cfg, mm.group()));
  const SequentialResult result = run_sequential(ws, mm);

  Json report{{"seed", cfg.seed}, {"tolerance", cfg.tol}, {"result", to_json(result)}};
  std::optional<ProbVector> joint_dist;
  if (!cfg.state.empty()) {
    const State rho = state_from_json(read_json_file(cfg.state));
    joint_dist = measure(result.joint, rho);
    report["joint_distribution"] = to_json(*joint_dist);
  }
  emit(cfg, io, report);

  if (!cfg.csv_dir.empty()) {
    const fs::path dir(cfg.csv_dir);
    write_text_file(dir / "sigma.csv", distribution_csv(result.sigma));
    write_text_file(dir / "tau.csv", distribution_csv(result.tau));
    if (joint_dist) write_text_file(dir / "joint.csv", distribution_csv(*joint_dist));
  }
  if (result.residuals.max() > cfg.tol) {
    throw ResidualFailure("sequential residual " + Json(result.residuals.max()).dump() + " exceeds tolerance " +
                          Json(cfg.tol).dump());
  }
  return kOk;
}

int cmd_instrument_build(const RunConfig& cfg, Io io) {
  const CovariantMeasure mm = measure_from_json(read_json_file(cfg.measure));
  const WeylSystem ws(resolve_group(cfg, mm.group()));
  emit(cfg, io, to_json(covariant_instrument(ws, mm)));
  return kOk;
}

int cmd_instrument_verify(const RunConfig& cfg, Io io) {
  const Instrument inst = instrument_from_json(read_json_file(cfg.in));
  const WeylSystem ws(resolve_group(cfg, inst.outcomes()));
  const double residual = verify_covariance(ws, inst);
  const bool ok = residual <= cfg.tol;
  emit(cfg, io, Json{{"covariance_residual", residual}, {"tolerance", cfg.tol}, {"covariant", ok}});
  if (!ok) throw ResidualFailure("instrument is not covariant (residual " + Json(residual).dump() + ")");
  return kOk;
}

int cmd_instrument_reconstruct(const RunConfig& cfg, Io io) {
  const Instrument inst = instrument_from_json(read_json_file(cfg.in));
  const WeylSystem ws(resolve_group(cfg, inst.outcomes()));
  emit(cfg, io, to_json(reconstruct_measure(ws, inst)));
  return kOk;
}

int cmd_cpso(const RunConfig& cfg, Io io) {
  const WeylSystem ws(required_group(cfg));
  const State s = state_from_json(read_json_file(cfg.state));
  const Povm c = cpso_from_state(ws, s);
  Json report{{"group", to_json(ws.group())}, {"povm", to_json(c)}};
  if (cfg.check_ic) {
    const std::size_t rank = effect_span_rank(c);
    report["span_rank"] = rank;
    report["informationally_complete"] = rank == ws.dim() * ws.dim();
  }
  emit(cfg, io, report);
  return kOk;
}

int cmd_demo_spin(const RunConfig& cfg, Io io) {
  const SpinFrame frame(parse_vec3(cfg.a, "--a"), parse_vec3(cfg.b, "--b"));
  const State omega = cfg.probe.empty() ? State::basis(2, 0) : state_from_json(read_json_file(cfg.probe));
  Rng rng(cfg.seed);
  const State rho = cfg.rho.empty() ? random_state(rng, 2) : state_from_json(read_json_file(cfg.rho));
  const UnsharpSpin u = unsharp_spin(frame, omega);
  const double residual = kronecker_factorization_check(frame, omega, rho);
  emit(cfg, io,
       Json{{"seed", cfg.seed},
            {"a", frame.a()},
            {"b", frame.b()},
            {"s", u.s},
            {"t", u.t},
            {"s2_plus_t2", u.s * u.s + u.t * u.t},
            {"position_povm", to_json(u.position)},
            {"momentum_povm", to_json(u.momentum)},
            {"factorization_residual", residual}});
  if (residual > cfg.tol) throw ResidualFailure("factorization residual " + Json(residual).dump());
  return kOk;
}

int cmd_verify(const RunConfig& cfg, Io io) {
  if (!is_suite(cfg.suite)) {
    io.err << "seqmeas: error: unknown suite \"" << cfg.suite << "\" (expected all";
    for (const auto& s : suite_names()) io.err << ", " << s;
    io.err << ")\n";
    return kInputError;
  }
  const auto reports = run_suites(cfg.suite, required_group(cfg), {cfg.seed, cfg.samples});
  bool ok = true;
  for (const auto& r : reports) {
    io.out << r.suite << ": max residual " << std::setprecision(3) << r.max_residual() << " "
           << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.checks) {
      io.out << "  " << c.name << " " << std::setprecision(3) << c.residual << " (tol " << c.tolerance << ") "
             << (c.passed() ? "ok" : "FAIL") << "\n";
    }
    ok = ok && r.passed();
  }
  return ok ? kOk : kInvariantError;
}

int cmd_dump_weyl(const RunConfig& cfg, Io io) {
  const WeylSystem ws(required_group(cfg));
  Json u = Json::array(), v = Json::array();
  for (std::size_t k = 0; k < ws.dim(); ++k) {
    u.push_back(to_json(ws.translation(k)));
    v.push_back(to_json(ws.modulation(k)));
  }
  emit(cfg, io,
       Json{{"group", to_json(ws.group())},
            {"elements", outcome_labels(ws.group())},
            {"translations", std::move(u)},
            {"modulations", std::move(v)},
            {"fourier", to_json(ws.fourier())}});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Sequential measurements of conjugate observables on finite abelian groups", "seqmeas"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--group", cfg.group, "Group as moduli, e.g. 2 or 2x3");
  app.add_option("--tol", cfg.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for random draws");
  app.add_option("--out", cfg.out, "Write the JSON result here instead of standard output");

  std::function<int()> action;

  auto* sequential = app.add_subcommand("sequential", "Sequential measurement pipeline");
  sequential->require_subcommand(1);
  auto* seq_run = sequential->add_subcommand("run", "Run the pipeline for a covariant measure");
  seq_run->add_option("--measure", cfg.measure, "Measure JSON")->required();
  seq_run->add_option("--state", cfg.state, "Input state JSON for the joint distribution");
  seq_run->add_option("--csv", cfg.csv_dir, "Directory for sigma.csv, tau.csv and joint.csv");
  seq_run->callback([&] { action = [&] { return cmd_sequential(cfg, {out, err}); }; });

  auto* instrument = app.add_subcommand("instrument", "Covariant instruments");
  instrument->require_subcommand(1);
  auto* build = instrument->add_subcommand("build", "Instrument of a covariant measure");
  build->add_option("--measure", cfg.measure, "Measure JSON")->required();
  build->callback([&] { action = [&] { return cmd_instrument_build(cfg, {out, err}); }; });
  auto* verify_i = instrument->add_subcommand("verify", "Covariance residual of an instrument");
  verify_i->add_option("--in", cfg.in, "Instrument JSON")->required();
  verify_i->callback([&] { action = [&] { return cmd_instrument_verify(cfg, {out, err}); }; });
  auto* recon = instrument->add_subcommand("reconstruct", "Measure of a covariant instrument");
  recon->add_option("--in", cfg.in, "Instrument JSON")->required();
  recon->callback([&] { action = [&] { return cmd_instrument_reconstruct(cfg, {out, err}); }; });

  auto* cpso = app.add_subcommand("cpso", "Covariant phase-space observable of a state");
  cpso->add_option("--state", cfg.state, "State JSON")->required();
  cpso->add_flag("--check-ic", cfg.check_ic, "Report informational completeness");
  cpso->callback([&] { action = [&] { return cmd_cpso(cfg, {out, err}); }; });

  auto* demo = app.add_subcommand("demo", "Worked examples");
  demo->require_subcommand(1);
  auto* spin = demo->add_subcommand("spin", "Spin-1/2 components as a Z_2 conjugate pair");
  spin->add_option("--a", cfg.a, "First direction, x,y,z")->capture_default_str();
  spin->add_option("--b", cfg.b, "Second direction, orthogonal to a")->capture_default_str();
  spin->add_option("--probe", cfg.probe, "Probe state JSON (default |0><0|)");
  spin->add_option("--rho", cfg.rho, "Input state JSON for the factorization check (default random)");
  spin->callback([&] { action = [&] { return cmd_demo_spin(cfg, {out, err}); }; });

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", cfg.suite, "all, weyl, theorem41, prop42, prop43, corollary44 or spin")
      ->capture_default_str();
  verify->add_option("--samples", cfg.samples, "Random draws per check")->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_verify(cfg, {out, err}); }; });

  auto* dump_weyl = app.add_subcommand("dump-weyl", "Translation, modulation and Fourier matrices");
  dump_weyl->callback([&] { action = [&] { return cmd_dump_weyl(cfg, {out, err}); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const ResidualFailure& e) {
    err << "seqmeas: error: " << e.what() << "\n";
    return kInvariantError;
  } catch (const InvariantError& e) {
    err << "seqmeas: error: " << e.what() << "\n";
    return kInvariantError;
  } catch (const HermiticityError& e) {
    err << "seqmeas: error: " << e.what() << "\n";
    return kInvariantError;
  } catch (const std::exception& e) {
    err << "seqmeas: error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace seqmeas::cli
