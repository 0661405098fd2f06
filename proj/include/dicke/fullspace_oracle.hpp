// fullspace_oracle.hpp — brute-force reference dynamics in the full 2^N
// Hilbert space: collective ladder operators, the Lindblad right-hand side of
// the master equation, and a fixed-step RK4 integrator. Deliberately
// independent of the reduced-basis machinery: different method, different
// basis, so agreement is a genuine cross-check.

#pragma once

#include "dicke/types.hpp"

#include <Eigen/SparseCore>

#include <vector>

namespace dicke {

using DensityMatrix = Eigen::MatrixXcd;

struct CollectiveOps {
  int n_qubits{0};
  Eigen::SparseMatrix<double> j_minus;
  Eigen::SparseMatrix<double> j_plus;
  Eigen::SparseMatrix<double> jp_jm;  // J+ J-
  Eigen::SparseMatrix<double> jm_jp;  // J- J+
  Eigen::VectorXd jz_diag;            // J_z is diagonal in the product basis

  Eigen::MatrixXd j_squared() const;  // J+J- + Jz^2 - Jz, dense
};

CollectiveOps build_collective_operators(int n_qubits);

// d(rho)/dt of the master equation: (1+tau)(2 J- rho J+ - {J+J-, rho})
//                                  + tau (2 J+ rho J- - {J-J+, rho}).
DensityMatrix lindblad_rhs(const CollectiveOps& ops, const BathParams& bath, const DensityMatrix& rho);

// Conservative default RK4 step, scaled to the generator's spectral range.
double default_full_step(int n_qubits, const BathParams& bath);

// Classical fixed-step RK4 integration of the master equation up to time t.
// dt <= 0 selects the default step; the Hermitian part is re-imposed and the
// trace drift monitored along the way.
DensityMatrix evolve_full(const CollectiveOps& ops, const BathParams& bath, const DensityMatrix& rho0, double t,
                          double dt = 0.0);

// Single integration pass recording the state at each ascending grid time.
std::vector<DensityMatrix> evolve_full_grid(const CollectiveOps& ops, const BathParams& bath,
                                            const DensityMatrix& rho0, const std::vector<double>& times,
                                            double dt = 0.0);

// |j,m> for j = N/2 (any m) or the j = N/2 - 1 copy reachable from a single
// excitation at site 1; j, m passed as doubled integers.
Eigen::VectorXd dicke_state(const SystemSize& size, int two_j, int two_m);

}  // namespace dicke
