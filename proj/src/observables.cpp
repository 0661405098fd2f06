#include "dicke/observables.hpp"

#include "dicke/basis_states.hpp"
#include "dicke/reduced_model.hpp"

#include <cmath>
#include <string>

namespace dicke {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double acc = 1.0;
  for (int i = 1; i <= k; ++i) acc *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return acc;
}

double clamp_unit(double value, const char* what) {
  if (value < -1e-10 || value > 1.0 + 1e-10)
    throw VerificationError(std::string(what) + " = " + std::to_string(value) + " outside [0,1] beyond tolerance");
  return std::min(std::max(value, 0.0), 1.0);
}

SystemSize size_of(const ReducedState& state, const char* who) {
  if (state.n_qubits < 1)
    throw ScenarioError(std::string(who) + ": state carries no system size");
  return SystemSize(state.n_qubits);
}

}  // namespace

double coherence_of(const ReducedState& state) {
  const SystemSize size = size_of(state, "coherence_of");
  const int n_qubits = size.n_qubits;
  const double denom = std::exp2(n_qubits) - 1.0;

  switch (state.scenario) {
    case Scenario::incoherent: {
      // Off-diagonal weight per excitation number n: the two diagonal
      // families carry binom(N-1,n-1)(|a_n| + |b_{n-1}|), the cross operator
      // 2 sqrt(binom(N-1,n-1) binom(N-1,n)) |c_n| = binom(N-1,n-1)(2/n)sqrt(f_n)|c_n|.
      double sum = 0.0;
      double binom = 1.0;  // binom(N-1, n-1), updated per n
      for (int n = 1; n <= n_qubits; ++n) {
        double term = std::abs(state.a(n)) + std::abs(state.b(n - 1));
        if (n <= n_qubits - 1)
          term += (2.0 / n) * std::sqrt(excitation_degeneracy(size, n)) * std::abs(state.c(n));
        sum += binom * term;
        binom *= static_cast<double>(n_qubits - n) / static_cast<double>(n);
      }
      return clamp_unit((sum - 1.0) / denom, "coherence");
    }
    case Scenario::coherent: {
      double sum = 0.0;
      for (int n = 0; n <= n_qubits; ++n) sum += binomial(n_qubits, n) * state.coeffs[n];
      return clamp_unit((sum - 1.0) / denom, "coherence");
    }
    case Scenario::dicke:
      throw ScenarioError("coherence_of: no closed form for a bare dicke sector; reconstruct and use l1_coherence_full");
  }
  throw ScenarioError("coherence_of: unknown scenario");
}

double excitation_probability(const ReducedState& state) {
  const SystemSize size = size_of(state, "excitation_probability");
  const int n_qubits = size.n_qubits;

  switch (state.scenario) {
    case Scenario::incoherent: {
      if (n_qubits < 2) throw ScenarioError("excitation_probability: incoherent scenario needs N >= 2");
      double sum = 0.0;
      for (int n = 1; n <= n_qubits; ++n) sum += n * (state.a(n) + state.b(n - 1));
      return clamp_unit((sum - 1.0) / (n_qubits - 1), "excitation_probability");
    }
    case Scenario::coherent: {
      double sum = 0.0;
      for (int n = 0; n <= n_qubits; ++n) sum += n * state.coeffs[n];
      return clamp_unit(sum / n_qubits, "excitation_probability");
    }
    case Scenario::dicke:
      throw ScenarioError("excitation_probability: no closed form for a bare dicke sector");
  }
  throw ScenarioError("excitation_probability: unknown scenario");
}

double l1_coherence_full(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("l1_coherence_full: rho must be square");
  const double hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (hermiticity > 1e-9)
    throw std::invalid_argument("l1_coherence_full: rho is non-Hermitian by " + std::to_string(hermiticity));

  double sum = rho.cwiseAbs().sum() - rho.diagonal().cwiseAbs().sum();
  return sum / (static_cast<double>(rho.rows()) - 1.0);
}

Eigen::MatrixXcd reconstruct_density(const ReducedState& state, int site_k) {
  const SystemSize size = size_of(state, "reconstruct_density");
  if (size.n_qubits > max_full_qubits())
    throw CapacityError("reconstruct_density: N = " + std::to_string(size.n_qubits) + " exceeds the full-space guard");

  const auto dim = static_cast<Eigen::Index>(size.dim());
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);

  switch (state.scenario) {
    case Scenario::incoherent: {
      for (int n = 1; n <= size.n_qubits; ++n) {
        const Eigen::VectorXd with_k = excited_site_state(size, n, site_k);
        rho.noalias() += state.a(n) * (with_k * with_k.transpose());
      }
      for (int n = 0; n <= size.n_qubits - 1; ++n) {
        const Eigen::VectorXd without_k = ground_site_state(size, n, site_k);
        rho.noalias() += state.b(n) * (without_k * without_k.transpose());
      }
      for (int n = 1; n <= size.n_qubits - 1; ++n) {
        const Eigen::VectorXd with_k = excited_site_state(size, n, site_k);
        const Eigen::VectorXd without_k = ground_site_state(size, n, site_k);
        const Eigen::MatrixXd cross = with_k * without_k.transpose();
        rho.noalias() += state.c(n) * (cross + cross.transpose());
      }
      break;
    }
    case Scenario::coherent: {
      for (int n = 0; n <= size.n_qubits; ++n) {
        const Eigen::VectorXd sym = uniform_excitation_state(size, n);
        rho.noalias() += state.coeffs[n] * (sym * sym.transpose());
      }
      break;
    }
    case Scenario::dicke: {
      if (state.two_j != size.n_qubits)
        throw ScenarioError("reconstruct_density: only the j = N/2 dicke sector reconstructs here; "
                            "use the oracle's dicke_state for the j = N/2 - 1 copy");
      for (int idx = 0; idx <= state.two_j; ++idx) {
        const Eigen::VectorXd sym = uniform_excitation_state(size, idx);
        rho.noalias() += state.coeffs[idx] * (sym * sym.transpose());
      }
      break;
    }
  }
  return rho.cast<std::complex<double>>();
}

double site_excitation_probability(const Eigen::MatrixXcd& rho, int n_qubits, int site) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("site_excitation_probability: rho must be square");
  if (site < 1 || site > n_qubits) throw std::domain_error("site_excitation_probability: site outside [1,N]");
  double p = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    if (site_excited(static_cast<std::uint64_t>(i), n_qubits, site)) p += rho(i, i).real();
  return p;
}

ObservableSample sample_observables(const ReducedState& state, double time) {
  ObservableSample sample;
  sample.time = time;
  sample.trace_error = std::abs(state.trace() - 1.0);
  if (sample.trace_error > 1e-9)
    throw VerificationError("sample_observables: trace defect " + std::to_string(sample.trace_error) +
                            " exceeds 1e-9 at t = " + std::to_string(time));
  sample.coherence = coherence_of(state);
  sample.excitation_probability = excitation_probability(state);
  return sample;
}

}  // namespace dicke
