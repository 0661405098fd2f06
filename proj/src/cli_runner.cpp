#include "dicke/cli_runner.hpp"

#include "dicke/fullspace_oracle.hpp"
#include "dicke/observables.hpp"
#include "dicke/propagator.hpp"
#include "dicke/reduced_model.hpp"
#include "dicke/steady_analytics.hpp"
#include "dicke/verification.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace dicke::cli {

namespace {

using nlohmann::json;

double now_ms() {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

std::vector<double> parse_grid(const std::string& text) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0.0 || hi < lo)
    throw std::invalid_argument("expected grid A:B:STEP with STEP > 0, got '" + text + "'");
  std::vector<double> values;
  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  values.reserve(count);
  for (int i = 0; i < count; ++i) values.push_back(lo + i * step);
  return values;
}

std::vector<int> parse_range(const std::string& text) {
  int lo = 0, hi = 0;
  if (std::sscanf(text.c_str(), "%d:%d", &lo, &hi) != 2 || hi < lo)
    throw std::invalid_argument("expected range A:B with B >= A, got '" + text + "'");
  std::vector<int> values;
  values.reserve(hi - lo + 1);
  for (int n = lo; n <= hi; ++n) values.push_back(n);
  return values;
}

int parse_half_integer(double value, const char* name) {
  const double doubled = 2.0 * value;
  const double rounded = std::round(doubled);
  if (std::abs(doubled - rounded) > 1e-9)
    throw std::invalid_argument(std::string(name) + " must be integer or half-integer, got " + std::to_string(value));
  return static_cast<int>(rounded);
}

std::vector<double> time_grid(double t_max, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (t_max < 0.0) throw std::invalid_argument("t-max must be >= 0");
  if (t_max == 0.0) return {0.0};
  std::vector<double> times;
  times.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) times.push_back(t_max * i / steps);
  return times;
}

BathParams bath_for(double tau, const std::optional<double>& nu) {
  return nu ? BathParams::from_nu(*nu) : BathParams::from_tau(tau);
}

void emit_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << fields[i];
  }
  out << '\n';
}

// Observable extraction for a dicke sector: j = N/2 reuses the coherent
// closed forms (identical coefficient layout); the j = N/2 - 1 copy goes
// through full-space reconstruction.
struct DickeObservables {
  int n_qubits;
  int two_j;
  std::vector<Eigen::MatrixXd> projectors;  // j = N/2 - 1 only

  DickeObservables(int n, int tj) : n_qubits(n), two_j(tj) {
    if (two_j == n_qubits) return;
    const SystemSize size(n_qubits);
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      const Eigen::VectorXd v = dicke_state(size, two_j, two_m);
      projectors.push_back(v * v.transpose());
    }
  }

  ObservableSample sample(const ReducedState& state, double time) const {
    if (two_j == n_qubits) {
      ReducedState view = state;
      view.scenario = Scenario::coherent;
      view.n_qubits = n_qubits;
      return sample_observables(view, time);
    }
    ObservableSample sample;
    sample.time = time;
    sample.trace_error = std::abs(state.trace() - 1.0);
    if (sample.trace_error > 1e-9)
      throw VerificationError("dicke trajectory: trace defect exceeds 1e-9");
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(projectors.front().rows(), projectors.front().cols());
    for (std::size_t i = 0; i < projectors.size(); ++i)
      rho += state.coeffs[static_cast<Eigen::Index>(i)] * projectors[i];
    const Eigen::MatrixXcd rho_c = rho.cast<std::complex<double>>();
    sample.coherence = l1_coherence_full(rho_c);
    sample.excitation_probability = site_excitation_probability(rho_c, n_qubits, n_qubits >= 2 ? 2 : 1);
    return sample;
  }
};

struct SimulateSetup {
  ReducedGenerator generator;
  ReducedState initial;
  std::optional<DickeObservables> dicke_view;
};

SimulateSetup prepare_simulate(const SimulateConfig& cfg, const BathParams& bath) {
  const SystemSize size(cfg.n_qubits);
  SimulateSetup setup;
  switch (cfg.scenario) {
    case Scenario::incoherent:
      setup.generator = build_incoherent_generator(size, bath);
      setup.initial = initial_vector(Scenario::incoherent, size);
      return setup;
    case Scenario::coherent:
      setup.generator = build_coherent_generator(size, bath);
      setup.initial = initial_vector(Scenario::coherent, size);
      return setup;
    case Scenario::dicke: {
      if (!cfg.two_j) throw std::invalid_argument("simulate: dicke scenario needs --j");
      const int two_j = *cfg.two_j;
      if (two_j != cfg.n_qubits && two_j != cfg.n_qubits - 2)
        throw std::invalid_argument(
            "simulate: dicke observables are available for j = N/2 and j = N/2 - 1 only; got 2j = " +
            std::to_string(two_j) + " with N = " + std::to_string(cfg.n_qubits));
      const int two_m = cfg.two_m ? *cfg.two_m : -two_j + 2;
      setup.generator = build_dicke_generator(two_j, bath);
      setup.initial = initial_dicke_vector(two_j, two_m, cfg.n_qubits);
      setup.dicke_view.emplace(cfg.n_qubits, two_j);
      return setup;
    }
  }
  throw std::invalid_argument("simulate: unknown scenario");
}

ObservableSample sample_for(const SimulateSetup& setup, const ReducedState& state, double time) {
  if (setup.dicke_view) return setup.dicke_view->sample(state, time);
  return sample_observables(state, time);
}

}  // namespace

std::string csv_field(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_simulate_csv(const SimulateConfig& cfg, std::ostream& out) {
  emit_row(out, {"scenario", "N", "tau", "t", "coherence", "p_excited", "trace_error"});

  const auto emit_sample = [&](double tau, const ObservableSample& sample) {
    emit_row(out, {csv_field(std::string(to_string(cfg.scenario))), csv_field(std::string(std::to_string(cfg.n_qubits))),
                   csv_field(tau), csv_field(sample.time), csv_field(sample.coherence),
                   csv_field(sample.excitation_probability), csv_field(sample.trace_error)});
  };

  if (cfg.tau_grid) {  // snapshot sweep over tau at fixed t
    for (const double tau : *cfg.tau_grid) {
      const BathParams bath = BathParams::from_tau(tau);
      const SimulateSetup setup = prepare_simulate(cfg, bath);
      const ReducedState state = evolve(setup.generator, setup.initial, cfg.t_snapshot);
      emit_sample(tau, sample_for(setup, state, cfg.t_snapshot));
    }
    return;
  }

  for (const double tau : cfg.taus) {
    const BathParams bath = bath_for(tau, cfg.nu);
    const SimulateSetup setup = prepare_simulate(cfg, bath);
    const std::vector<double> times = time_grid(cfg.t_max, cfg.steps);
    const Trajectory trajectory = evolve_grid(setup.generator, setup.initial, times);
    for (std::size_t i = 0; i < times.size(); ++i)
      emit_sample(bath.tau, sample_for(setup, trajectory.states[i], times[i]));
  }
}

void write_steady_csv(const SteadyConfig& cfg, std::ostream& out) {
  emit_row(out, {"scenario", "N", "tau", "coherence_inf", "p_inf", "alpha"});
  for (const Scenario scenario : cfg.scenarios) {
    for (const int n : cfg.n_list) {
      const SystemSize size(n);
      for (const double tau : cfg.tau_list) {
        const double nu = cfg.nu ? *cfg.nu : tau / (1.0 + tau);
        const double tau_out = cfg.nu ? (*cfg.nu < 1.0 ? *cfg.nu / (1.0 - *cfg.nu) : std::numeric_limits<double>::infinity()) : tau;
        const SteadySummary summary = steady_summary(scenario, size, nu);
        emit_row(out, {csv_field(std::string(to_string(scenario))), csv_field(std::string(std::to_string(n))),
                       csv_field(tau_out), csv_field(summary.coherence_inf), csv_field(summary.probability_inf),
                       scenario == Scenario::incoherent ? csv_field(summary.alpha) : std::string()});
      }
    }
  }
}

void write_tau_c_csv(const TauCConfig& cfg, std::ostream& out) {
  emit_row(out, {"N", "tau_c"});
  for (const int n : cfg.n_list) {
    const std::optional<double> tau_c = find_tau_c(SystemSize(n));
    emit_row(out, {csv_field(std::string(std::to_string(n))), tau_c ? csv_field(*tau_c) : std::string()});
  }
}

void write_bench_csv(const BenchConfig& cfg, std::ostream& out) {
  emit_row(out, {"method", "N", "dim", "build_ms", "evolve_ms"});
  const BathParams bath = BathParams::from_tau(cfg.tau);
  const std::vector<double> times = time_grid(cfg.t_max, cfg.steps);

  const auto bench_reduced = [&](const char* method, int n, auto&& builder) {
    const SystemSize size(n);
    const double t0 = now_ms();
    const ReducedGenerator gen = builder(size, bath);
    const double t1 = now_ms();
    const ReducedState v0 = initial_vector(gen.scenario, size);
    const Trajectory trajectory = evolve_grid(gen, v0, times);
    const double t2 = now_ms();
    (void)trajectory;
    emit_row(out, {method, csv_field(std::string(std::to_string(n))), csv_field(std::string(std::to_string(gen.dim()))),
                   csv_field(t1 - t0), csv_field(t2 - t1)});
  };

  for (const int n : cfg.reduced_n) {
    bench_reduced("reduced-coherent", n, [](const SystemSize& s, const BathParams& b) {
      return build_coherent_generator(s, b);
    });
    if (n >= 2)
      bench_reduced("reduced-incoherent", n, [](const SystemSize& s, const BathParams& b) {
        return build_incoherent_generator(s, b);
      });
  }

  for (int n = 2; n <= std::min(cfg.full_n_max, max_full_qubits()); ++n) {
    const double t0 = now_ms();
    const CollectiveOps ops = build_collective_operators(n);
    const double t1 = now_ms();
    const double dt = default_full_step(n, bath);
    const DensityMatrix rho0 =
        reconstruct_density(initial_vector(Scenario::coherent, SystemSize(n)));
    const DensityMatrix rho = evolve_full(ops, bath, rho0, dt, dt);  // exactly one RK4 step
    const double t2 = now_ms();
    (void)rho;
    emit_row(out, {"full", csv_field(std::string(std::to_string(n))),
                   csv_field(std::string(std::to_string(SystemSize(n).dim()))), csv_field(t1 - t0),
                   csv_field(t2 - t1)});
  }
}

bool run_verify(const VerifyConfig& cfg, std::ostream& out) {
  const int n = cfg.n_qubits;
  const double tau = cfg.tau;
  std::vector<CheckResult> checks;

  checks.push_back(check_incoherent_generator_action(std::max(n, 2), tau, cfg.inject_fault ? 1e-3 : 0.0));
  checks.push_back(check_coherent_generator_action(n, tau));
  checks.push_back(check_dicke_generator_action(n, tau));

  std::vector<double> times;
  for (int i = 0; i <= 10; ++i) times.push_back(0.3 * i);
  const double dt = suite_oracle_step(n, tau);
  for (const Scenario scenario : {Scenario::incoherent, Scenario::coherent}) {
    const EquivalenceReport report =
        check_oracle_equivalence({scenario, scenario == Scenario::incoherent ? std::max(n, 2) : n, tau}, times, 1e-6, dt);
    checks.push_back(report.density);
    checks.push_back(report.coherence);
    checks.push_back(report.probability);
    checks.push_back(check_steady_propagation(scenario, scenario == Scenario::incoherent ? std::max(n, 2) : n, tau));
  }

  for (const Scenario scenario : {Scenario::incoherent, Scenario::coherent}) {
    const RandomStateChecks random =
        check_random_state_identities(scenario, scenario == Scenario::incoherent ? std::max(n, 2) : n,
                                      cfg.samples, cfg.seed);
    checks.push_back(random.trace);
    checks.push_back(random.positivity);
    checks.push_back(random.range);
    checks.push_back(random.coherence_identity);
    checks.push_back(random.probability_identity);
  }

  checks.push_back(check_subspace_invariance(std::max(n, 2), tau, times));
  const double nu = tau / (1.0 + tau);
  checks.push_back(check_appendix_modes(Scenario::incoherent, std::max(n, 2), nu));
  checks.push_back(check_appendix_modes(Scenario::coherent, n, nu));

  for (const CheckResult& check : checks) out << format(check) << '\n';
  const bool ok = all_pass(checks);
  out << (ok ? "verify: all checks passed" : "verify: FAILURES present") << '\n';
  return ok;
}

namespace {

json versions_json() {
  return json{{"dicke", DICKE_VERSION},
              {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                            std::to_string(EIGEN_MINOR_VERSION)}};
}

void write_manifest(const std::string& csv_path, const std::string& command, const json& config, double elapsed_ms) {
  json manifest{{"command", command},
                {"config", config},
                {"versions", versions_json()},
                {"timings_ms", json{{"total", elapsed_ms}}}};
  std::ofstream out(csv_path + ".manifest.json");
  if (!out) throw std::ios_base::failure("cannot open manifest for writing: " + csv_path + ".manifest.json");
  out << manifest.dump(2) << '\n';
}

// Writes rows through `emit` into --out (or stdout), with a manifest when a
// file path is present.
template <typename Emit>
int run_to_output(const std::string& out_path, const std::string& command, const json& config, Emit&& emit) {
  const double t0 = now_ms();
  if (out_path.empty()) {
    emit(std::cout);
    return kExitOk;
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitIo;
  }
  emit(file);
  file.flush();
  if (!file) {
    std::cerr << "error: write failure on '" << out_path << "'\n";
    return kExitIo;
  }
  write_manifest(out_path, command, config, now_ms() - t0);
  return kExitOk;
}

Scenario scenario_from(const std::string& name) {
  if (name == "incoherent") return Scenario::incoherent;
  if (name == "coherent") return Scenario::coherent;
  if (name == "dicke") return Scenario::dicke;
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

json simulate_config_json(const SimulateConfig& cfg) {
  json j{{"scenario", to_string(cfg.scenario)}, {"n", cfg.n_qubits},     {"taus", cfg.taus},
         {"t_max", cfg.t_max},                  {"steps", cfg.steps},    {"site_k", cfg.site_k},
         {"t_snapshot", cfg.t_snapshot}};
  if (cfg.nu) j["nu"] = *cfg.nu;
  if (cfg.two_j) j["two_j"] = *cfg.two_j;
  if (cfg.two_m) j["two_m"] = *cfg.two_m;
  if (cfg.tau_grid) j["tau_grid"] = *cfg.tau_grid;
  return j;
}

int run_figures(const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const double t0 = now_ms();

  const auto to_file = [&](const std::string& name, auto&& emit) {
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream file(path);
    if (!file) throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
    emit(file);
    if (!file) throw std::ios_base::failure("write failure on '" + path.string() + "'");
  };

  SimulateConfig fig1;
  fig1.scenario = Scenario::incoherent;
  fig1.taus = {0.0, 2.0};
  to_file("fig1_incoherent_vs_time.csv", [&](std::ostream& o) { write_simulate_csv(fig1, o); });

  SimulateConfig fig2;
  fig2.scenario = Scenario::incoherent;
  fig2.tau_grid = parse_grid("0:4:0.05");
  to_file("fig2_incoherent_vs_tau_t1.8.csv", [&](std::ostream& o) { write_simulate_csv(fig2, o); });

  SteadyConfig fig3;
  fig3.scenarios = {Scenario::incoherent};
  fig3.n_list = parse_range("2:20");
  fig3.tau_list = {0.1, 1.0, 4.0};
  to_file("fig3_incoherent_steady_vs_size.csv", [&](std::ostream& o) { write_steady_csv(fig3, o); });

  SimulateConfig fig4;
  fig4.scenario = Scenario::coherent;
  fig4.taus = {0.0, 0.3, 1.4, 2.0};
  to_file("fig4_coherent_vs_time.csv", [&](std::ostream& o) { write_simulate_csv(fig4, o); });

  TauCConfig fig5;
  fig5.n_list = parse_range("5:40");
  to_file("fig5_tau_c_vs_size.csv", [&](std::ostream& o) { write_tau_c_csv(fig5, o); });

  SteadyConfig fig6;
  fig6.n_list = {7};
  fig6.tau_list = parse_grid("0:10:0.05");
  to_file("fig6_steady_vs_tau.csv", [&](std::ostream& o) { write_steady_csv(fig6, o); });

  write_manifest((fs::path(out_dir) / "figures").string(), "figures",
                 json{{"figures", {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"}}, {"n", 7}}, now_ms() - t0);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Collective dissipative dynamics of N qubits in a common thermal bath"};
  app.require_subcommand(1);

  std::string scenario_name;
  std::string out_path;
  std::string n_range_text;
  std::string tau_grid_text;
  double j_half = 0.0;
  double m_half = 0.0;
  bool j_set = false;
  bool m_set = false;
  double nu_value = 0.0;
  bool nu_set = false;

  SimulateConfig sim;
  auto* simulate = app.add_subcommand("simulate", "Evolve a paper initial state and emit observables over time");
  simulate->add_option("--scenario", scenario_name, "incoherent|coherent|dicke")
      ->required()
      ->check(CLI::IsMember({"incoherent", "coherent", "dicke"}));
  simulate->add_option("--n", sim.n_qubits, "number of qubits");
  simulate->add_option("--j", j_half, "dicke sector spin (half-integer)")->each([&](const std::string&) { j_set = true; });
  simulate->add_option("--m", m_half, "dicke initial weight (half-integer, default -j+1)")
      ->each([&](const std::string&) { m_set = true; });
  simulate->add_option("--tau", sim.taus, "bath mean photon number (repeatable)");
  simulate->add_option("--nu", nu_value, "Boltzmann ratio alternative to --tau")
      ->each([&](const std::string&) { nu_set = true; });
  simulate->add_option("--t-max", sim.t_max, "trajectory end time");
  simulate->add_option("--steps", sim.steps, "number of grid intervals");
  simulate->add_option("--tau-grid", tau_grid_text, "A:B:STEP sweep; snapshot mode at --t-snapshot");
  simulate->add_option("--t-snapshot", sim.t_snapshot, "snapshot time for --tau-grid mode");
  simulate->add_option("--site-k", sim.site_k, "distinguished site of the incoherent family");
  simulate->add_option("--out", out_path, "CSV output path (default stdout)");

  SteadyConfig steady;
  auto* steady_cmd = app.add_subcommand("steady", "Closed-form steady-state sweeps");
  steady_cmd->add_option("--scenario", scenario_name, "restrict to one scenario")
      ->check(CLI::IsMember({"incoherent", "coherent"}));
  steady_cmd->add_option("--n", steady.n_list, "system size (repeatable)");
  steady_cmd->add_option("--n-range", n_range_text, "A:B inclusive size range");
  steady_cmd->add_option("--tau", steady.tau_list, "bath occupation (repeatable)");
  steady_cmd->add_option("--tau-grid", tau_grid_text, "A:B:STEP occupation grid");
  steady_cmd->add_option("--nu", nu_value, "evaluate at a Boltzmann ratio (allows nu = 1)")
      ->each([&](const std::string&) { nu_set = true; });
  steady_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

  TauCConfig tau_c;
  auto* tau_c_cmd = app.add_subcommand("tau-c", "Critical bath occupation versus system size");
  tau_c_cmd->add_option("--n", tau_c.n_list, "system size (repeatable)");
  tau_c_cmd->add_option("--n-range", n_range_text, "A:B inclusive size range");
  tau_c_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

  VerifyConfig verify;
  auto* verify_cmd = app.add_subcommand("verify", "Oracle-equivalence and invariant suite");
  verify_cmd->add_option("--n", verify.n_qubits, "system size");
  verify_cmd->add_option("--tau", verify.tau, "bath occupation");
  verify_cmd->add_option("--seed", verify.seed, "seed for the random-state suite");
  verify_cmd->add_option("--samples", verify.samples, "random states per scenario");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault, "negative control: corrupt one generator entry");

  BenchConfig bench;
  std::string bench_range_text;
  auto* bench_cmd = app.add_subcommand("bench", "Reduced-vs-full build and evolve timings");
  bench_cmd->add_option("--n", bench.reduced_n, "reduced-path sizes (repeatable)");
  bench_cmd->add_option("--n-range", bench_range_text, "A:B reduced-path size range");
  bench_cmd->add_option("--full-n-max", bench.full_n_max, "largest full-space size");
  bench_cmd->add_option("--steps", bench.steps, "trajectory grid points");
  bench_cmd->add_option("--t-max", bench.t_max, "trajectory end time");
  bench_cmd->add_option("--tau", bench.tau, "bath occupation");
  bench_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

  std::string figures_dir = "figures";
  auto* figures_cmd = app.add_subcommand("figures", "Emit the parameter sets of the paper's figures 1-6");
  figures_cmd->add_option("--out", figures_dir, "output directory");

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (simulate->parsed()) {
      sim.scenario = scenario_from(scenario_name);
      if (j_set) sim.two_j = parse_half_integer(j_half, "--j");
      if (m_set) sim.two_m = parse_half_integer(m_half, "--m");
      if (nu_set) sim.nu = nu_value;
      if (!tau_grid_text.empty()) sim.tau_grid = parse_grid(tau_grid_text);
      return run_to_output(out_path, "simulate", simulate_config_json(sim),
                           [&](std::ostream& o) { write_simulate_csv(sim, o); });
    }
    if (steady_cmd->parsed()) {
      if (!scenario_name.empty()) steady.scenarios = {scenario_from(scenario_name)};
      if (!n_range_text.empty()) steady.n_list = parse_range(n_range_text);
      if (!tau_grid_text.empty()) steady.tau_list = parse_grid(tau_grid_text);
      if (nu_set) steady.nu = nu_value;
      json config{{"n", steady.n_list}, {"tau", steady.tau_list}};
      if (steady.nu) config["nu"] = *steady.nu;
      return run_to_output(out_path, "steady", config, [&](std::ostream& o) { write_steady_csv(steady, o); });
    }
    if (tau_c_cmd->parsed()) {
      if (!n_range_text.empty()) tau_c.n_list = parse_range(n_range_text);
      return run_to_output(out_path, "tau-c", json{{"n", tau_c.n_list}},
                           [&](std::ostream& o) { write_tau_c_csv(tau_c, o); });
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify, std::cout) ? kExitOk : kExitVerify;
    }
    if (bench_cmd->parsed()) {
      if (!bench_range_text.empty()) bench.reduced_n = parse_range(bench_range_text);
      return run_to_output(out_path, "bench",
                           json{{"reduced_n", bench.reduced_n},
                                {"full_n_max", bench.full_n_max},
                                {"steps", bench.steps},
                                {"t_max", bench.t_max},
                                {"tau", bench.tau}},
                           [&](std::ostream& o) { write_bench_csv(bench, o); });
    }
    if (figures_cmd->parsed()) {
      return run_figures(figures_dir);
    }
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace dicke::cli
