#include "dicke/verification.hpp"

#include "dicke/basis_states.hpp"
#include "dicke/fullspace_oracle.hpp"
#include "dicke/observables.hpp"
#include "dicke/propagator.hpp"
#include "dicke/reduced_model.hpp"
#include "dicke/steady_analytics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <random>
#include <sstream>
#include <thread>

namespace dicke {

namespace {

// Reduced basis operators as full-space matrices plus the dual pairing that
// extracts expansion coefficients back out of an arbitrary operator.
struct OperatorFamily {
  std::vector<Eigen::MatrixXd> ops;
  std::vector<Eigen::VectorXd> bra;  // left factors of the dual pairing
  std::vector<Eigen::VectorXd> ket;
  std::vector<bool> cross;           // true for the rank-two cross operators

  Eigen::VectorXd coefficients(const Eigen::MatrixXd& y) const {
    Eigen::VectorXd out(static_cast<Eigen::Index>(ops.size()));
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const double forward = bra[i].dot(y * ket[i]);
      out[static_cast<Eigen::Index>(i)] = cross[i] ? 0.5 * (forward + ket[i].dot(y * bra[i])) : forward;
    }
    return out;
  }

  Eigen::MatrixXd assemble(const Eigen::VectorXd& coeffs) const {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(ops.front().rows(), ops.front().cols());
    for (std::size_t i = 0; i < ops.size(); ++i) acc += coeffs[static_cast<Eigen::Index>(i)] * ops[i];
    return acc;
  }

  void push_projector(const Eigen::VectorXd& v) {
    ops.push_back(v * v.transpose());
    bra.push_back(v);
    ket.push_back(v);
    cross.push_back(false);
  }

  void push_cross(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    ops.push_back(x * y.transpose() + y * x.transpose());
    bra.push_back(x);
    ket.push_back(y);
    cross.push_back(true);
  }
};

OperatorFamily incoherent_family(const SystemSize& size, int site_k = 1) {
  OperatorFamily family;
  for (int n = 1; n <= size.n_qubits; ++n) family.push_projector(excited_site_state(size, n, site_k));
  for (int n = 0; n <= size.n_qubits - 1; ++n) family.push_projector(ground_site_state(size, n, site_k));
  for (int n = 1; n <= size.n_qubits - 1; ++n)
    family.push_cross(excited_site_state(size, n, site_k), ground_site_state(size, n, site_k));
  return family;
}

OperatorFamily coherent_family(const SystemSize& size) {
  OperatorFamily family;
  for (int n = 0; n <= size.n_qubits; ++n) family.push_projector(uniform_excitation_state(size, n));
  return family;
}

OperatorFamily dicke_family(const SystemSize& size, int two_j) {
  OperatorFamily family;
  for (int two_m = -two_j; two_m <= two_j; two_m += 2) family.push_projector(dicke_state(size, two_j, two_m));
  return family;
}

Eigen::MatrixXd real_rhs(const CollectiveOps& ops, const BathParams& bath, const Eigen::MatrixXd& x) {
  return lindblad_rhs(ops, bath, x.cast<std::complex<double>>()).real();
}

// Max deviation between generator columns and the oracle action, including
// the residual of re-assembling the action inside the family span.
double generator_action_residual(const ReducedGenerator& gen, const OperatorFamily& family,
                                 const CollectiveOps& ops) {
  double worst = 0.0;
  for (Eigen::Index col = 0; col < gen.dim(); ++col) {
    const Eigen::MatrixXd action = real_rhs(ops, gen.bath, family.ops[static_cast<std::size_t>(col)]);
    const Eigen::VectorXd coeffs = family.coefficients(action);
    worst = std::max(worst, (coeffs - gen.matrix.col(col)).cwiseAbs().maxCoeff());
    worst = std::max(worst, (family.assemble(coeffs) - action).cwiseAbs().maxCoeff());
  }
  return worst;
}

std::string cell_tag(const char* what, Scenario scenario, int n_qubits, double value, const char* value_name) {
  std::ostringstream os;
  os << what << "[" << to_string(scenario) << " N=" << n_qubits << " " << value_name << "=" << value << "]";
  return os.str();
}

}  // namespace

std::string format(const CheckResult& check) {
  std::ostringstream os;
  os << (check.pass ? "PASS" : "FAIL") << "  " << check.name << "  residual " << check.residual
     << (check.pass ? " <= " : " > ") << check.tolerance;
  return os.str();
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

CheckResult check_incoherent_generator_action(int n_qubits, double tau, double inject) {
  const SystemSize size(n_qubits);
  const BathParams bath = BathParams::from_tau(tau);
  ReducedGenerator gen = build_incoherent_generator(size, bath);
  gen.matrix(0, 0) += inject;
  const double residual =
      generator_action_residual(gen, incoherent_family(size), build_collective_operators(n_qubits));
  return make_check(cell_tag("generator-action", Scenario::incoherent, n_qubits, tau, "tau"), residual, 1e-10);
}

CheckResult check_coherent_generator_action(int n_qubits, double tau, double inject) {
  const SystemSize size(n_qubits);
  const BathParams bath = BathParams::from_tau(tau);
  ReducedGenerator gen = build_coherent_generator(size, bath);
  gen.matrix(0, 0) += inject;
  const double residual =
      generator_action_residual(gen, coherent_family(size), build_collective_operators(n_qubits));
  return make_check(cell_tag("generator-action", Scenario::coherent, n_qubits, tau, "tau"), residual, 1e-10);
}

CheckResult check_dicke_generator_action(int n_qubits, double tau) {
  const SystemSize size(n_qubits);
  const BathParams bath = BathParams::from_tau(tau);
  const CollectiveOps ops = build_collective_operators(n_qubits);

  double residual = generator_action_residual(build_dicke_generator(n_qubits, bath), dicke_family(size, n_qubits), ops);
  if (n_qubits >= 3) {
    const int two_j = n_qubits - 2;
    residual = std::max(residual,
                        generator_action_residual(build_dicke_generator(two_j, bath), dicke_family(size, two_j), ops));
  }
  return make_check(cell_tag("generator-action", Scenario::dicke, n_qubits, tau, "tau"), residual, 1e-10);
}

EquivalenceReport check_oracle_equivalence(const EquivalenceCell& cell, const std::vector<double>& times,
                                           double tolerance, double oracle_dt) {
  const SystemSize size(cell.n_qubits);
  const BathParams bath = BathParams::from_tau(cell.tau);

  const ReducedGenerator gen = cell.scenario == Scenario::incoherent ? build_incoherent_generator(size, bath)
                                                                     : build_coherent_generator(size, bath);
  const ReducedState v0 = initial_vector(cell.scenario, size);
  const Trajectory reduced = evolve_grid(gen, v0, times);

  const CollectiveOps ops = build_collective_operators(cell.n_qubits);
  const std::vector<DensityMatrix> full = evolve_full_grid(ops, bath, reconstruct_density(v0), times, oracle_dt);

  const int probe_site = cell.scenario == Scenario::incoherent ? 2 : 1;
  double density_residual = 0.0;
  double coherence_residual = 0.0;
  double probability_residual = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const ReducedState& state = reduced.states[i];
    density_residual =
        std::max(density_residual, (reconstruct_density(state) - full[i]).cwiseAbs().maxCoeff());
    coherence_residual = std::max(coherence_residual, std::abs(coherence_of(state) - l1_coherence_full(full[i])));
    probability_residual =
        std::max(probability_residual, std::abs(excitation_probability(state) -
                                                site_excitation_probability(full[i], cell.n_qubits, probe_site)));
  }

  EquivalenceReport report;
  report.cell = cell;
  report.density = make_check(cell_tag("density", cell.scenario, cell.n_qubits, cell.tau, "tau"), density_residual,
                              tolerance);
  report.coherence = make_check(cell_tag("coherence", cell.scenario, cell.n_qubits, cell.tau, "tau"),
                                coherence_residual, tolerance);
  report.probability = make_check(cell_tag("probability", cell.scenario, cell.n_qubits, cell.tau, "tau"),
                                  probability_residual, tolerance);
  return report;
}

std::vector<EquivalenceReport> run_equivalence_suite(const std::vector<EquivalenceCell>& cells,
                                                     const std::vector<double>& times, double tolerance,
                                                     double oracle_dt, int threads) {
  if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<EquivalenceReport> reports(cells.size());

  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
      reports[i] = check_oracle_equivalence(cells[i], times, tolerance, oracle_dt);
  };
  std::vector<std::future<void>> futures;
  for (int t = 1; t < threads; ++t) futures.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : futures) f.get();
  return reports;
}

CheckResult check_steady_propagation(Scenario scenario, int n_qubits, double tau, double t_long, double tolerance) {
  const SystemSize size(n_qubits);
  const BathParams bath = BathParams::from_tau(tau);
  const ReducedGenerator gen = scenario == Scenario::incoherent ? build_incoherent_generator(size, bath)
                                                                : build_coherent_generator(size, bath);
  const ReducedState evolved = evolve(gen, initial_vector(scenario, size), t_long);
  const ReducedState steady = scenario == Scenario::incoherent ? incoherent_steady_state(size, bath.nu)
                                                               : coherent_steady_state(size, bath.nu);
  const double residual = (evolved.coeffs - steady.coeffs).cwiseAbs().maxCoeff();
  return make_check(cell_tag("steady-propagation", scenario, n_qubits, tau, "tau"), residual, tolerance);
}

RandomStateChecks check_random_state_identities(Scenario scenario, int n_qubits, int samples, std::uint64_t seed) {
  const SystemSize size(n_qubits);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  double trace_residual = 0.0;
  double positivity_residual = 0.0;  // most negative eigenvalue, flipped
  double range_residual = 0.0;
  double coherence_residual = 0.0;
  double probability_residual = 0.0;

  for (int sample = 0; sample < samples; ++sample) {
    ReducedState mixture;
    mixture.scenario = scenario;
    mixture.n_qubits = n_qubits;
    if (scenario == Scenario::incoherent) {
      mixture.coeffs = Eigen::VectorXd::Zero(3 * n_qubits - 1);
      for (int n = 1; n <= n_qubits; ++n) mixture.coeffs[mixture.idx_a(n)] = uniform(rng);
      for (int n = 0; n <= n_qubits - 1; ++n) mixture.coeffs[mixture.idx_b(n)] = uniform(rng);
      for (int n = 1; n <= n_qubits - 1; ++n)
        mixture.coeffs[mixture.idx_c(n)] =
            (2.0 * uniform(rng) - 1.0) * std::sqrt(mixture.a(n) * mixture.b(n));
    } else {
      mixture.coeffs = Eigen::VectorXd::Zero(n_qubits + 1);
      for (int n = 0; n <= n_qubits; ++n) mixture.coeffs[n] = uniform(rng);
    }
    mixture.coeffs /= mixture.trace();

    const BathParams bath = BathParams::from_tau(2.0 * uniform(rng));
    const ReducedGenerator gen = scenario == Scenario::incoherent ? build_incoherent_generator(size, bath)
                                                                  : build_coherent_generator(size, bath);
    const ReducedState state = evolve(gen, mixture, 2.0 * uniform(rng));

    trace_residual = std::max(trace_residual, std::abs(state.trace() - 1.0));

    const Eigen::MatrixXcd rho = reconstruct_density(state);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigs(rho.real(), Eigen::EigenvaluesOnly);
    positivity_residual = std::max(positivity_residual, -eigs.eigenvalues().minCoeff());

    const double coherence = coherence_of(state);
    const double probability = excitation_probability(state);
    range_residual = std::max({range_residual, -coherence, coherence - 1.0, -probability, probability - 1.0});

    coherence_residual = std::max(coherence_residual, std::abs(coherence - l1_coherence_full(rho)));

    const int first_site = scenario == Scenario::incoherent ? 2 : 1;
    for (int site = first_site; site <= n_qubits; ++site)
      probability_residual = std::max(
          probability_residual, std::abs(probability - site_excitation_probability(rho, n_qubits, site)));
  }

  RandomStateChecks checks;
  const auto tag = [&](const char* what) { return cell_tag(what, scenario, n_qubits, samples, "samples"); };
  checks.trace = make_check(tag("random-trace"), trace_residual, 1e-10);
  checks.positivity = make_check(tag("random-positivity"), positivity_residual, 1e-8);
  checks.range = make_check(tag("random-range"), range_residual, 0.0);
  checks.coherence_identity = make_check(tag("random-coherence-identity"), coherence_residual, 1e-10);
  checks.probability_identity = make_check(tag("random-probability-identity"), probability_residual, 1e-10);
  return checks;
}

CheckResult check_subspace_invariance(int n_qubits, double tau, const std::vector<double>& times, double tolerance) {
  const SystemSize size(n_qubits);
  const BathParams bath = BathParams::from_tau(tau);
  const OperatorFamily family = incoherent_family(size);
  const CollectiveOps ops = build_collective_operators(n_qubits);

  const Eigen::MatrixXd rho0 = family.ops.front();  // the single-excitation projector
  const std::vector<DensityMatrix> full = evolve_full_grid(ops, bath, rho0.cast<std::complex<double>>(), times);

  double residual = 0.0;
  for (const DensityMatrix& rho : full) {
    const Eigen::MatrixXd real_part = rho.real();
    residual = std::max(residual, rho.imag().cwiseAbs().maxCoeff());
    residual = std::max(residual, (family.assemble(family.coefficients(real_part)) - real_part).cwiseAbs().maxCoeff());
  }
  return make_check(cell_tag("subspace-invariance", Scenario::incoherent, n_qubits, tau, "tau"), residual, tolerance);
}

CheckResult check_appendix_modes(Scenario scenario, int n_qubits, double nu) {
  const ZeroModes modes = appendix_zero_modes(scenario, SystemSize(n_qubits), nu, /*enforce=*/false);
  const double residual = std::max(modes.generator_residual, modes.biorthonormality_error);
  return make_check(cell_tag("appendix-zero-modes", scenario, n_qubits, nu, "nu"), residual, 1e-10);
}

}  // namespace dicke
