// propagator.hpp — time evolution of reduced coefficient vectors through the
// matrix exponential, and the biorthonormal spectral decomposition of a
// reduced generator.

#pragma once

#include "dicke/types.hpp"

#include <vector>

namespace dicke {

struct Trajectory {
  std::vector<double> times;
  std::vector<ReducedState> states;
};

// Eigenpairs with left rows normalized against right columns:
// left * right = I, generator * right.col(i) = lambda_i right.col(i).
struct Eigensystem {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd right;                // columns r_i
  Eigen::MatrixXcd left;                 // rows l_i^T
  std::vector<Eigen::Index> zero_modes;  // |lambda| <= 1e-10 * max|lambda|
};

// e^{tG}. Exposed because the CLI benchmark and grid evolution reuse it.
Eigen::MatrixXd propagator_matrix(const ReducedGenerator& gen, double t);

// e^{tG} v0; t = 0 returns v0 exactly.
ReducedState evolve(const ReducedGenerator& gen, const ReducedState& v0, double t);

// States at every grid time, computed by step-to-step propagation; repeated
// spacings share one propagator.
Trajectory evolve_grid(const ReducedGenerator& gen, const ReducedState& v0, const std::vector<double>& times);

// Full eigensystem; throws DegeneracyError when no biorthonormal system
// exists (propagation never routes through here).
Eigensystem spectral_decompose(const ReducedGenerator& gen);

// Spectral-path evaluation of e^{tG} v0, the cross-check route for evolve.
Eigen::VectorXd spectral_evolve(const Eigensystem& eig, const Eigen::VectorXd& v0, double t);

}  // namespace dicke
