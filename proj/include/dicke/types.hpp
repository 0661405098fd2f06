// types.hpp — domain types shared by every module: bath parameters, system
// size, scenario-tagged coefficient vectors and reduced generators.

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dicke {

// Invalid scenario/size combination (e.g. incoherent with N = 1).
class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Full-Hilbert-space request beyond the memory guard.
class CapacityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Defective or near-defective spectrum: no usable biorthonormal eigensystem.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical sanity violation (trace drift, invariant breach) detected at runtime.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bath occupation of the resonant mode. tau >= 0 is the mean photon number,
// nu = tau/(1+tau) the Boltzmann ratio. Constructing from tau keeps nu < 1
// strictly; nu = 1 (infinite-temperature limit) is representable only through
// from_nu and is rejected by the generator builders.
struct BathParams {
  double tau{0.0};
  double nu{0.0};

  static BathParams from_tau(double tau) {
    if (!(tau >= 0.0)) throw std::domain_error("BathParams: tau must be >= 0, got " + std::to_string(tau));
    return {tau, tau / (1.0 + tau)};
  }

  static BathParams from_nu(double nu) {
    if (!(nu >= 0.0 && nu <= 1.0)) throw std::domain_error("BathParams: nu must lie in [0,1], got " + std::to_string(nu));
    // tau = nu/(1-nu) diverges at nu = 1; closed-form analytics never touch tau there.
    const double tau = nu < 1.0 ? nu / (1.0 - nu) : std::numeric_limits<double>::infinity();
    return {tau, nu};
  }
};

// Number of qubits N and the full Hilbert-space dimension 2^N.
struct SystemSize {
  int n_qubits{1};

  explicit SystemSize(int n) : n_qubits(n) {
    if (n < 1) throw std::domain_error("SystemSize: need at least one qubit, got " + std::to_string(n));
  }

  std::uint64_t dim() const {
    if (n_qubits > 62) throw CapacityError("SystemSize: 2^N exceeds 64-bit range for N = " + std::to_string(n_qubits));
    return std::uint64_t{1} << n_qubits;
  }
};

enum class Scenario { incoherent, coherent, dicke };

inline const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::incoherent: return "incoherent";
    case Scenario::coherent: return "coherent";
    case Scenario::dicke: return "dicke";
  }
  return "?";
}

// Scenario-tagged coefficient vector over the invariant operator family.
//   incoherent: (a_1..a_N, b_0..b_{N-1}, c_1..c_{N-1}), length 3N-1
//   coherent:   (d_0..d_N), length N+1
//   dicke:      (u_{-j}..u_{+j}), length 2j+1 (j stored as two_j)
struct ReducedState {
  Scenario scenario{Scenario::coherent};
  int n_qubits{0};  // N; may be 0 for a bare dicke sector
  int two_j{0};     // dicke only
  Eigen::VectorXd coeffs;

  Eigen::Index size() const { return coeffs.size(); }

  // Trace of the represented density matrix. The chi operators are traceless,
  // so the incoherent trace sums only the a and b blocks.
  double trace() const {
    if (scenario == Scenario::incoherent) return coeffs.head(2 * n_qubits).sum();
    return coeffs.sum();
  }

  // Paper-index accessors for the incoherent layout.
  double a(int n) const { return coeffs[idx_a(n)]; }
  double b(int n) const { return coeffs[idx_b(n)]; }
  double c(int n) const { return coeffs[idx_c(n)]; }

  Eigen::Index idx_a(int n) const { return check_range(n, 1, n_qubits) - 1; }
  Eigen::Index idx_b(int n) const { return n_qubits + check_range(n, 0, n_qubits - 1); }
  Eigen::Index idx_c(int n) const { return 2 * n_qubits + check_range(n, 1, n_qubits - 1) - 1; }

  // Dicke accessor: weight of |j,m><j,m|, m given as two_m.
  double u(int two_m) const {
    if (two_m < -two_j || two_m > two_j || (two_m - two_j) % 2 != 0)
      throw std::domain_error("ReducedState: m outside the dicke sector");
    return coeffs[(two_m + two_j) / 2];
  }

 private:
  static int check_range(int n, int lo, int hi) {
    if (n < lo || n > hi)
      throw std::domain_error("ReducedState: coefficient index " + std::to_string(n) + " outside [" +
                              std::to_string(lo) + "," + std::to_string(hi) + "]");
    return n;
  }
};

// Reduced Liouvillian generator: column j holds the expansion coefficients of
// L[basis_j] in the same ordered basis, so d(coeffs)/dt = matrix * coeffs.
struct ReducedGenerator {
  Scenario scenario{Scenario::coherent};
  int n_qubits{0};
  int two_j{0};
  BathParams bath;
  Eigen::MatrixXd matrix;

  Eigen::Index dim() const { return matrix.rows(); }
};

}  // namespace dicke
