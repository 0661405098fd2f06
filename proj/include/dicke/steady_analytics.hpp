// steady_analytics.hpp — every closed-form steady-state result: the
// incoherent two-mode steady mixture, the coherent geometric steady state,
// steady coherence/probability, the zero- and infinite-temperature limits,
// the critical bath occupation, and the appendix zero-mode vectors with
// their numerical verification.
//
// All geometric weights are evaluated in normalized partial-sum form
// (nu^m / sum_k nu^k), finite and exact at nu = 0 and nu = 1.

#pragma once

#include "dicke/types.hpp"

#include <optional>

namespace dicke {

struct SteadySummary {
  int n_qubits{0};
  double nu{0.0};
  double coherence_inf{0.0};
  double probability_inf{0.0};
  double alpha{std::numeric_limits<double>::quiet_NaN()};  // incoherent mixing weight
};

// Zero-eigenvalue right/left pairs in the paper's normalization (right modes
// are trace-one densities, left rows biorthonormal against them).
struct ZeroModes {
  Scenario scenario{Scenario::coherent};
  int n_qubits{0};
  double nu{0.0};
  Eigen::MatrixXd right;  // columns
  Eigen::MatrixXd left;   // rows
  double generator_residual{0.0};
  double biorthonormality_error{0.0};
};

// Mixing weight alpha = <l1|v0> = (1+nu)(1-nu^N)/(N(1-nu^{N+1})).
double incoherent_mixing_weight(const SystemSize& size, double nu);

ReducedState incoherent_steady_state(const SystemSize& size, double nu);
double incoherent_steady_coherence(const SystemSize& size, double nu);
double incoherent_steady_probability(const SystemSize& size, double nu);

ReducedState coherent_steady_state(const SystemSize& size, double nu);
double coherent_steady_coherence(const SystemSize& size, double nu);
double coherent_steady_probability(const SystemSize& size, double nu);

enum class BathLimit { nu_to_zero, nu_to_one };

struct LimitValues {
  double coherence{0.0};
  double probability{0.0};
};

// Exact limit expressions. The incoherent nu -> 1 coherence keeps the "-1"
// of the finite-nu formula (the limits of the two scenarios coincide).
LimitValues limit_values(Scenario scenario, const SystemSize& size, BathLimit limit);

// Bath occupation where the coherent steady coherence equals the initial
// coherence (N-1)/(2^N-1); absent below N = 5.
std::optional<double> find_tau_c(const SystemSize& size);

// Appendix zero modes, verified: generator residual and biorthonormality
// <= 1e-10, unit trace of each right mode. Throws VerificationError with the
// offending residuals unless `enforce` is false (residuals are always
// stored on the result).
ZeroModes appendix_zero_modes(Scenario scenario, const SystemSize& size, double nu, bool enforce = true);

SteadySummary steady_summary(Scenario scenario, const SystemSize& size, double nu);

}  // namespace dicke
