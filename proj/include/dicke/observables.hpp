// observables.hpp — closed-form coherence and excitation-probability
// observables on reduced coefficients, the generic normalized l1 coherence,
// and reconstruction of the full 2^N density matrix from reduced
// coefficients. The reconstruction route is the independent validation of
// the closed forms.

#pragma once

#include "dicke/types.hpp"

namespace dicke {

struct ObservableSample {
  double time{0.0};
  double coherence{0.0};
  double excitation_probability{0.0};
  double trace_error{0.0};
};

// Normalized l1 coherence from the closed forms; incoherent and coherent
// scenarios only (a bare dicke sector has no closed form here — reconstruct
// and use l1_coherence_full).
double coherence_of(const ReducedState& state);

// Probability that a qubit which started in the ground state (incoherent,
// any l != k) or an arbitrary qubit (coherent) is excited.
double excitation_probability(const ReducedState& state);

// (1/(d-1)) sum_{i != j} |rho_ij| in the fixed product basis.
double l1_coherence_full(const Eigen::MatrixXcd& rho);

// Full 2^N density matrix from the reduced coefficients; site_k places the
// distinguished qubit of the incoherent family.
Eigen::MatrixXcd reconstruct_density(const ReducedState& state, int site_k = 1);

// Probability that `site` (1-based) is excited, read off the diagonal of a
// full-space density matrix.
double site_excitation_probability(const Eigen::MatrixXcd& rho, int n_qubits, int site);

// Bundle of both observables plus the trace defect at a given time; values
// within 1e-10 of the physical range are clamped, larger violations throw.
ObservableSample sample_observables(const ReducedState& state, double time);

}  // namespace dicke
