#include "dicke/fullspace_oracle.hpp"

#include "dicke/basis_states.hpp"
#include "dicke/reduced_model.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

namespace dicke {

namespace {

// The master equation has real coefficients and real jump operators, so the
// real and imaginary parts of rho evolve independently; the integrator runs
// on real matrices only.
struct RealRhs {
  const CollectiveOps& ops;
  double tau;
  Eigen::MatrixXd w;  // (1+tau) J+J- + tau J-J+, densified for GEMM speed

  RealRhs(const CollectiveOps& o, const BathParams& bath) : ops(o), tau(bath.tau) {
    w = Eigen::MatrixXd((1.0 + tau) * o.jp_jm) + Eigen::MatrixXd(tau * o.jm_jp);
  }

  Eigen::MatrixXd operator()(const Eigen::MatrixXd& x) const {
    Eigen::MatrixXd out = 2.0 * (1.0 + tau) * (ops.j_minus * (x * ops.j_plus));
    out.noalias() += 2.0 * tau * (ops.j_plus * (x * ops.j_minus));
    out.noalias() -= w * x;
    out.noalias() -= x * w;
    return out;
  }
};

// Largest step the fixed-step scheme accepts; 1000x the accuracy default and
// still well inside the RK4 stability region for this generator family.
double max_full_step(int n_qubits, const BathParams& bath) {
  return 1.0 / (static_cast<double>(n_qubits) * n_qubits * (1.0 + 2.0 * bath.tau));
}

// Hermiticity of rho means a symmetric real part and an antisymmetric
// imaginary part; `parity` selects which of the two is re-imposed each step.
void rk4_advance(const RealRhs& rhs, Eigen::MatrixXd& x, double span, double dt, double parity) {
  if (span <= 0.0) return;
  const auto steps = static_cast<long>(std::ceil(span / dt - 1e-12));
  const double h = span / static_cast<double>(steps);
  Eigen::MatrixXd k1, k2, k3, k4;
  for (long s = 0; s < steps; ++s) {
    k1 = rhs(x);
    k2 = rhs(x + (0.5 * h) * k1);
    k3 = rhs(x + (0.5 * h) * k2);
    k4 = rhs(x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    x = 0.5 * (x + parity * x.transpose()).eval();
  }
}

struct SplitState {
  Eigen::MatrixXd re;
  Eigen::MatrixXd im;
  bool has_im{false};
};

SplitState split(const DensityMatrix& rho) {
  SplitState s;
  s.re = rho.real();
  s.im = rho.imag();
  s.has_im = s.im.cwiseAbs().maxCoeff() > 0.0;
  return s;
}

DensityMatrix join(const SplitState& s) {
  if (!s.has_im) return s.re.cast<std::complex<double>>();
  return s.re.cast<std::complex<double>>() + std::complex<double>(0.0, 1.0) * s.im.cast<std::complex<double>>();
}

void check_square(const CollectiveOps& ops, const DensityMatrix& rho, const char* who) {
  const auto dim = static_cast<Eigen::Index>(SystemSize(ops.n_qubits).dim());
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument(std::string(who) + ": rho must be " + std::to_string(dim) + "x" +
                                std::to_string(dim) + " for N = " + std::to_string(ops.n_qubits));
}

double resolve_step(const CollectiveOps& ops, const BathParams& bath, double dt, const char* who) {
  if (dt <= 0.0) return default_full_step(ops.n_qubits, bath);
  if (dt > max_full_step(ops.n_qubits, bath))
    throw std::invalid_argument(std::string(who) + ": step " + std::to_string(dt) +
                                " exceeds the stability bound " +
                                std::to_string(max_full_step(ops.n_qubits, bath)));
  return dt;
}

void check_trace_drift(const SplitState& s, double initial_trace, const char* who) {
  const double drift = std::abs(s.re.trace() - initial_trace) + std::abs(s.has_im ? s.im.trace() : 0.0);
  if (drift > 1e-9)
    throw VerificationError(std::string(who) + ": trace drift " + std::to_string(drift) + " exceeds 1e-9");
}

}  // namespace

Eigen::MatrixXd CollectiveOps::j_squared() const {
  Eigen::MatrixXd out(jp_jm);
  out += (jz_diag.array().square() - jz_diag.array()).matrix().asDiagonal();
  return out;
}

CollectiveOps build_collective_operators(int n_qubits) {
  const SystemSize size(n_qubits);
  if (n_qubits > max_full_qubits())
    throw CapacityError("build_collective_operators: N = " + std::to_string(n_qubits) +
                        " needs 4^N = " + std::to_string(std::pow(4.0, n_qubits)) +
                        " matrix entries; guard is N <= " + std::to_string(max_full_qubits()) +
                        " (override with DICKE_MAX_FULL_N)");

  const auto dim = static_cast<Eigen::Index>(size.dim());
  std::vector<Eigen::Triplet<double>> lowering;
  lowering.reserve(static_cast<std::size_t>(n_qubits) * (size.dim() / 2));
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto idx = static_cast<std::uint64_t>(col);
    for (int site = 1; site <= n_qubits; ++site)
      if (site_excited(idx, n_qubits, site)) {
        const auto row = static_cast<Eigen::Index>(idx & ~(std::uint64_t{1} << (n_qubits - site)));
        lowering.emplace_back(row, col, 1.0);
      }
  }

  CollectiveOps ops;
  ops.n_qubits = n_qubits;
  ops.j_minus.resize(dim, dim);
  ops.j_minus.setFromTriplets(lowering.begin(), lowering.end());
  ops.j_plus = ops.j_minus.transpose();
  ops.jp_jm = (ops.j_plus * ops.j_minus).pruned();
  ops.jm_jp = (ops.j_minus * ops.j_plus).pruned();
  ops.jz_diag.resize(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    ops.jz_diag[i] = excitation_count(static_cast<std::uint64_t>(i)) - 0.5 * n_qubits;
  return ops;
}

DensityMatrix lindblad_rhs(const CollectiveOps& ops, const BathParams& bath, const DensityMatrix& rho) {
  check_square(ops, rho, "lindblad_rhs");
  const RealRhs rhs(ops, bath);
  SplitState s = split(rho);
  s.re = rhs(s.re);
  if (s.has_im) s.im = rhs(s.im);
  return join(s);
}

double default_full_step(int n_qubits, const BathParams& bath) {
  return 1e-3 / (static_cast<double>(n_qubits) * n_qubits * (1.0 + 2.0 * bath.tau));
}

DensityMatrix evolve_full(const CollectiveOps& ops, const BathParams& bath, const DensityMatrix& rho0, double t,
                          double dt) {
  check_square(ops, rho0, "evolve_full");
  if (!(t >= 0.0)) throw std::invalid_argument("evolve_full: t must be >= 0");
  const double step = resolve_step(ops, bath, dt, "evolve_full");

  const RealRhs rhs(ops, bath);
  SplitState s = split(rho0);
  const double trace0 = s.re.trace();
  rk4_advance(rhs, s.re, t, step, +1.0);
  if (s.has_im) rk4_advance(rhs, s.im, t, step, -1.0);
  check_trace_drift(s, trace0, "evolve_full");
  return join(s);
}

std::vector<DensityMatrix> evolve_full_grid(const CollectiveOps& ops, const BathParams& bath,
                                            const DensityMatrix& rho0, const std::vector<double>& times,
                                            double dt) {
  check_square(ops, rho0, "evolve_full_grid");
  const double step = resolve_step(ops, bath, dt, "evolve_full_grid");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0 || (i > 0 && times[i] < times[i - 1]))
      throw std::invalid_argument("evolve_full_grid: times must be ascending and nonnegative");
  }

  const RealRhs rhs(ops, bath);
  SplitState s = split(rho0);
  const double trace0 = s.re.trace();
  std::vector<DensityMatrix> out;
  out.reserve(times.size());
  double now = 0.0;
  for (const double target : times) {
    rk4_advance(rhs, s.re, target - now, step, +1.0);
    if (s.has_im) rk4_advance(rhs, s.im, target - now, step, -1.0);
    now = target;
    check_trace_drift(s, trace0, "evolve_full_grid");
    out.push_back(join(s));
  }
  return out;
}

Eigen::VectorXd dicke_state(const SystemSize& size, int two_j, int two_m) {
  const int n = size.n_qubits;
  if (std::abs(two_m) > two_j || (two_j - two_m) % 2 != 0)
    throw std::domain_error("dicke_state: m must step in integers within [-j, j]");

  if (two_j == n) return uniform_excitation_state(size, (two_m + n) / 2);

  if (two_j == n - 2 && n >= 2) {
    // The specific j = N/2 - 1 copy seeded by a single excitation at site 1:
    // Gram-Schmidt of |1E_1> against |1E>, then ladder up to the target m.
    Eigen::VectorXd v = excited_site_state(size, 1, 1) -
                        (1.0 / std::sqrt(static_cast<double>(n))) * uniform_excitation_state(size, 1);
    v.normalize();
    const double j = 0.5 * two_j;
    double m = -j;
    const double m_target = 0.5 * two_m;
    if (m_target < m - 1e-9) throw std::domain_error("dicke_state: m below the sector bottom");
    const CollectiveOps ops = build_collective_operators(n);
    while (m < m_target - 1e-9) {
      v = (ops.j_plus * v).eval();
      v /= spin_coupling_coefficient(j, m, Ladder::raising);
      m += 1.0;
    }
    return v;
  }

  throw std::domain_error("dicke_state: only j = N/2 and the reachable j = N/2 - 1 copy are supported");
}

}  // namespace dicke
