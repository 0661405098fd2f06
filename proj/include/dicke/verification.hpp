// verification.hpp — parameterized cross-checks between the reduced pipeline
// and the full-space oracle, plus the random-state identity suites. Shared by
// the CLI `verify` subcommand and the acceptance tests.

#pragma once

#include "dicke/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dicke {

struct CheckResult {
  std::string name;
  double residual{0.0};
  double tolerance{0.0};
  bool pass{false};
};

inline CheckResult make_check(std::string name, double residual, double tolerance) {
  return {std::move(name), residual, tolerance, residual <= tolerance};
}

std::string format(const CheckResult& check);
bool all_pass(const std::vector<CheckResult>& checks);

// Oracle step used by the cross-check suites: ten times the integrator's
// accuracy default, still ~1e-8 global error, an order of magnitude faster.
inline double suite_oracle_step(int n_qubits, double tau) {
  return 1e-2 / (static_cast<double>(n_qubits) * n_qubits * (1.0 + 2.0 * tau));
}

// Every column of the reduced generator against the oracle Liouvillian action
// on the corresponding basis operator (expansion-coefficient extraction).
// `inject` perturbs one generator entry, the negative-control hook.
CheckResult check_incoherent_generator_action(int n_qubits, double tau, double inject = 0.0);
CheckResult check_coherent_generator_action(int n_qubits, double tau, double inject = 0.0);
// Both supported dicke sectors (j = N/2 and the reachable j = N/2 - 1 copy).
CheckResult check_dicke_generator_action(int n_qubits, double tau);

// Reduced-vs-full trajectory agreement from the paper's initial state:
// max-norm density difference and both observables.
struct EquivalenceCell {
  Scenario scenario{Scenario::coherent};
  int n_qubits{2};
  double tau{0.0};
};

struct EquivalenceReport {
  EquivalenceCell cell;
  CheckResult density;
  CheckResult coherence;
  CheckResult probability;
};

EquivalenceReport check_oracle_equivalence(const EquivalenceCell& cell, const std::vector<double>& times,
                                           double tolerance = 1e-6, double oracle_dt = 0.0);

// Runs cells concurrently (bounded by `threads`, 0 = hardware), results in
// input order.
std::vector<EquivalenceReport> run_equivalence_suite(const std::vector<EquivalenceCell>& cells,
                                                     const std::vector<double>& times, double tolerance = 1e-6,
                                                     double oracle_dt = 0.0, int threads = 0);

// Long-time propagation against the analytic steady state (componentwise).
CheckResult check_steady_propagation(Scenario scenario, int n_qubits, double tau, double t_long = 60.0,
                                     double tolerance = 1e-8);

// Identity suite on random physical states (random valid mixtures propagated
// for random times): trace, reconstruction PSD, observable range,
// formula-vs-reconstruction coherence, probability vs site projectors with
// site-independence.
struct RandomStateChecks {
  CheckResult trace;
  CheckResult positivity;
  CheckResult range;
  CheckResult coherence_identity;
  CheckResult probability_identity;
};

RandomStateChecks check_random_state_identities(Scenario scenario, int n_qubits, int samples, std::uint64_t seed);

// Projection residual of the full-space evolution onto the invariant
// operator family (the dynamical-subspace claim).
CheckResult check_subspace_invariance(int n_qubits, double tau, const std::vector<double>& times,
                                      double tolerance = 1e-8);

// Appendix zero modes: generator residual and biorthonormality.
CheckResult check_appendix_modes(Scenario scenario, int n_qubits, double nu);

}  // namespace dicke
