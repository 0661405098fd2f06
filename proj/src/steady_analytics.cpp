#include "dicke/steady_analytics.hpp"

#include "dicke/observables.hpp"
#include "dicke/reduced_model.hpp"

#include <cmath>
#include <string>

namespace dicke {

namespace {

void check_nu(double nu, const char* who) {
  if (!(nu >= 0.0 && nu <= 1.0)) throw std::domain_error(std::string(who) + ": nu must lie in [0,1]");
}

// geometric_sum(nu, M) = 1 + nu + ... + nu^{M-1}; exact at nu = 0 and nu = 1.
double geometric_sum(double nu, int terms) {
  double acc = 0.0;
  double power = 1.0;
  for (int m = 0; m < terms; ++m) {
    acc += power;
    power *= nu;
  }
  return acc;
}

void require_incoherent(const SystemSize& size, const char* who) {
  if (size.n_qubits < 2) throw ScenarioError(std::string(who) + ": incoherent scenario needs N >= 2");
}

}  // namespace

double incoherent_mixing_weight(const SystemSize& size, double nu) {
  require_incoherent(size, "incoherent_mixing_weight");
  check_nu(nu, "incoherent_mixing_weight");
  const int n = size.n_qubits;
  return (1.0 + nu) * geometric_sum(nu, n) / (n * geometric_sum(nu, n + 1));
}

ReducedState incoherent_steady_state(const SystemSize& size, double nu) {
  require_incoherent(size, "incoherent_steady_state");
  check_nu(nu, "incoherent_steady_state");
  const int n_qubits = size.n_qubits;
  const double alpha = incoherent_mixing_weight(size, nu);

  ReducedState state;
  state.scenario = Scenario::incoherent;
  state.n_qubits = n_qubits;
  state.coeffs = Eigen::VectorXd::Zero(3 * n_qubits - 1);

  // First zero mode: matched geometric ladders on both diagonal families.
  const double z1 = alpha / ((1.0 + nu) * geometric_sum(nu, n_qubits));
  double power = 1.0;  // nu^n
  for (int n = 0; n <= n_qubits; ++n) {
    if (n >= 1) state.coeffs[state.idx_a(n)] += z1 * power;
    if (n <= n_qubits - 1) state.coeffs[state.idx_b(n)] += z1 * power;
    power *= nu;
  }

  // Second zero mode: geometric mixture of the dark projectors
  // |psi_n> = (sqrt(N-n)|nE_k> - sqrt(n)|nE_~k>)/sqrt(N), n = 1..N-1.
  const double z2 = (1.0 - alpha) / geometric_sum(nu, n_qubits - 1);
  power = 1.0;  // nu^{n-1}
  for (int n = 1; n <= n_qubits - 1; ++n) {
    const double weight = z2 * power;
    state.coeffs[state.idx_a(n)] += weight * (n_qubits - n) / n_qubits;
    state.coeffs[state.idx_b(n)] += weight * n / n_qubits;
    state.coeffs[state.idx_c(n)] -= weight * std::sqrt(excitation_degeneracy(size, n)) / n_qubits;
    power *= nu;
  }
  return state;
}

double incoherent_steady_coherence(const SystemSize& size, double nu) {
  require_incoherent(size, "incoherent_steady_coherence");
  check_nu(nu, "incoherent_steady_coherence");
  const int n = size.n_qubits;
  const double alpha = incoherent_mixing_weight(size, nu);
  const double term1 = alpha * std::pow(1.0 + nu, n - 1) / geometric_sum(nu, n);
  const double term2 =
      4.0 * (1.0 - alpha) * (n - 1.0) / n * std::pow(1.0 + nu, n - 2) / geometric_sum(nu, n - 1);
  return (term1 + term2 - 1.0) / (std::exp2(n) - 1.0);
}

double incoherent_steady_probability(const SystemSize& size, double nu) {
  return excitation_probability(incoherent_steady_state(size, nu));
}

ReducedState coherent_steady_state(const SystemSize& size, double nu) {
  check_nu(nu, "coherent_steady_state");
  const int n_qubits = size.n_qubits;
  ReducedState state;
  state.scenario = Scenario::coherent;
  state.n_qubits = n_qubits;
  state.coeffs = Eigen::VectorXd::Zero(n_qubits + 1);
  const double norm = geometric_sum(nu, n_qubits + 1);
  double power = 1.0;
  for (int n = 0; n <= n_qubits; ++n) {
    state.coeffs[n] = power / norm;
    power *= nu;
  }
  return state;
}

double coherent_steady_coherence(const SystemSize& size, double nu) {
  check_nu(nu, "coherent_steady_coherence");
  const int n = size.n_qubits;
  return (std::pow(1.0 + nu, n) / geometric_sum(nu, n + 1) - 1.0) / (std::exp2(n) - 1.0);
}

double coherent_steady_probability(const SystemSize& size, double nu) {
  check_nu(nu, "coherent_steady_probability");
  const int n_qubits = size.n_qubits;
  const double norm = geometric_sum(nu, n_qubits + 1);
  double acc = 0.0;
  double power = 1.0;
  for (int n = 0; n <= n_qubits; ++n) {
    acc += n * power;
    power *= nu;
  }
  return acc / (norm * n_qubits);
}

LimitValues limit_values(Scenario scenario, const SystemSize& size, BathLimit limit) {
  const int n = size.n_qubits;
  const double pow2 = std::exp2(n);
  switch (scenario) {
    case Scenario::incoherent: {
      require_incoherent(size, "limit_values");
      if (limit == BathLimit::nu_to_zero)
        return {(n - 1.0) * (3.0 * n - 4.0) / (static_cast<double>(n) * n) / (pow2 - 1.0),
                1.0 / (static_cast<double>(n) * n)};
      return {(pow2 / (n + 1.0) - 1.0) / (pow2 - 1.0), 0.5};
    }
    case Scenario::coherent: {
      if (limit == BathLimit::nu_to_zero) return {0.0, 0.0};
      return {(pow2 / (n + 1.0) - 1.0) / (pow2 - 1.0), 0.5};
    }
    case Scenario::dicke:
      throw ScenarioError("limit_values: no closed-form limits for a bare dicke sector");
  }
  throw ScenarioError("limit_values: unknown scenario");
}

std::optional<double> find_tau_c(const SystemSize& size) {
  const int n = size.n_qubits;
  const double target = (n - 1.0) / (std::exp2(n) - 1.0);
  const auto excess = [&](double nu) { return coherent_steady_coherence(size, nu) - target; };

  // The supremum over nu sits at nu = 1; no crossing exists when even that
  // falls short of the initial coherence.
  if (!(excess(1.0) > 0.0)) return std::nullopt;

  double lo = 1e-6;
  double hi = 1.0;
  if (excess(lo) > 0.0) return lo / (1.0 - lo);  // crossing below the grid floor
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? hi : lo) = mid;
  }
  const double nu_c = 0.5 * (lo + hi);
  return nu_c / (1.0 - nu_c);
}

ZeroModes appendix_zero_modes(Scenario scenario, const SystemSize& size, double nu, bool enforce) {
  check_nu(nu, "appendix_zero_modes");
  ZeroModes modes;
  modes.scenario = scenario;
  modes.n_qubits = size.n_qubits;
  modes.nu = nu;

  const int n_qubits = size.n_qubits;
  ReducedGenerator gen;

  switch (scenario) {
    case Scenario::incoherent: {
      require_incoherent(size, "appendix_zero_modes");
      if (!(nu < 1.0)) throw std::domain_error("appendix_zero_modes: incoherent modes need nu < 1");
      gen = build_incoherent_generator(size, BathParams::from_nu(nu));
      const Eigen::Index dim = 3 * n_qubits - 1;
      modes.right.setZero(dim, 2);
      modes.left.setZero(2, dim);

      const double alpha = incoherent_mixing_weight(size, nu);
      ReducedState proto = initial_vector(Scenario::incoherent, size);  // index helper

      // r1: geometric ladders; r2: geometric dark-projector mixture.
      const double z1 = 1.0 / ((1.0 + nu) * geometric_sum(nu, n_qubits));
      double power = 1.0;
      for (int n = 0; n <= n_qubits; ++n) {
        if (n >= 1) modes.right(proto.idx_a(n), 0) = z1 * power;
        if (n <= n_qubits - 1) modes.right(proto.idx_b(n), 0) = z1 * power;
        power *= nu;
      }
      const double z2 = 1.0 / geometric_sum(nu, n_qubits - 1);
      power = 1.0;
      for (int n = 1; n <= n_qubits - 1; ++n) {
        modes.right(proto.idx_a(n), 1) = z2 * power * (n_qubits - n) / n_qubits;
        modes.right(proto.idx_b(n), 1) = z2 * power * n / n_qubits;
        modes.right(proto.idx_c(n), 1) = -z2 * power * std::sqrt(excitation_degeneracy(size, n)) / n_qubits;
        power *= nu;
      }

      // l1 = alpha * (j; N-m; 2 sqrt(f_j)) is the conserved-J^2 functional in
      // the appendix normalization; l2 = l_trace - l1 pairs with r2.
      for (int n = 1; n <= n_qubits; ++n) {
        modes.left(0, proto.idx_a(n)) = alpha * n;
        modes.left(1, proto.idx_a(n)) = 1.0 - alpha * n;
      }
      for (int n = 0; n <= n_qubits - 1; ++n) {
        modes.left(0, proto.idx_b(n)) = alpha * (n_qubits - n);
        modes.left(1, proto.idx_b(n)) = 1.0 - alpha * (n_qubits - n);
      }
      for (int n = 1; n <= n_qubits - 1; ++n) {
        const double weight = 2.0 * alpha * std::sqrt(excitation_degeneracy(size, n));
        modes.left(0, proto.idx_c(n)) = weight;
        modes.left(1, proto.idx_c(n)) = -weight;
      }
      break;
    }
    case Scenario::coherent: {
      if (!(nu < 1.0)) throw std::domain_error("appendix_zero_modes: coherent modes need nu < 1");
      gen = build_coherent_generator(size, BathParams::from_nu(nu));
      const Eigen::Index dim = n_qubits + 1;
      modes.right = coherent_steady_state(size, nu).coeffs;
      modes.left = Eigen::MatrixXd::Ones(1, dim);
      break;
    }
    case Scenario::dicke:
      throw ScenarioError("appendix_zero_modes: no appendix form for a bare dicke sector");
  }

  modes.generator_residual =
      std::max((gen.matrix * modes.right).cwiseAbs().maxCoeff(), (modes.left * gen.matrix).cwiseAbs().maxCoeff());
  const Eigen::MatrixXd gram = modes.left * modes.right;
  modes.biorthonormality_error =
      (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  double trace_defect = 0.0;
  for (Eigen::Index col = 0; col < modes.right.cols(); ++col) {
    ReducedState mode;
    mode.scenario = scenario;
    mode.n_qubits = n_qubits;
    mode.coeffs = modes.right.col(col);
    trace_defect = std::max(trace_defect, std::abs(mode.trace() - 1.0));
  }

  if (enforce && (modes.generator_residual > 1e-10 || modes.biorthonormality_error > 1e-10 || trace_defect > 1e-10))
    throw VerificationError("appendix_zero_modes: verification failed (generator residual " +
                            std::to_string(modes.generator_residual) + ", biorthonormality " +
                            std::to_string(modes.biorthonormality_error) + ", trace defect " +
                            std::to_string(trace_defect) + ")");
  return modes;
}

SteadySummary steady_summary(Scenario scenario, const SystemSize& size, double nu) {
  SteadySummary summary;
  summary.n_qubits = size.n_qubits;
  summary.nu = nu;
  switch (scenario) {
    case Scenario::incoherent:
      summary.coherence_inf = incoherent_steady_coherence(size, nu);
      summary.probability_inf = incoherent_steady_probability(size, nu);
      summary.alpha = incoherent_mixing_weight(size, nu);
      return summary;
    case Scenario::coherent:
      summary.coherence_inf = coherent_steady_coherence(size, nu);
      summary.probability_inf = coherent_steady_probability(size, nu);
      return summary;
    case Scenario::dicke:
      throw ScenarioError("steady_summary: no closed forms for a bare dicke sector");
  }
  throw ScenarioError("steady_summary: unknown scenario");
}

}  // namespace dicke
