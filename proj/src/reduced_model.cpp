#include "dicke/reduced_model.hpp"

#include <cmath>
#include <string>

namespace dicke {

namespace {

double half(int two_x) { return 0.5 * static_cast<double>(two_x); }

void require_open_bath(const BathParams& bath, const char* who) {
  if (!(bath.nu < 1.0))
    throw std::domain_error(std::string(who) + ": nu = 1 (infinite temperature) has no finite generator");
  if (!(bath.tau >= 0.0)) throw std::domain_error(std::string(who) + ": tau must be >= 0");
}

}  // namespace

double excitation_degeneracy(const SystemSize& size, int n) {
  if (n < 0 || n > size.n_qubits)
    throw std::domain_error("excitation_degeneracy: n = " + std::to_string(n) + " outside [0," +
                            std::to_string(size.n_qubits) + "]");
  return static_cast<double>(n) * static_cast<double>(size.n_qubits - n);
}

double spin_coupling_coefficient(double j, double m, Ladder sign) {
  if (std::abs(m) > j + 1e-12)
    throw std::domain_error("spin_coupling_coefficient: |m| > j");
  const double shifted = sign == Ladder::raising ? m + 1.0 : m - 1.0;
  const double radicand = j * (j + 1.0) - m * shifted;
  if (radicand < -1e-12)
    throw std::domain_error("spin_coupling_coefficient: negative radicand, invalid m for this ladder direction");
  return std::sqrt(std::max(radicand, 0.0));
}

ReducedGenerator build_dicke_generator(int two_j, const BathParams& bath) {
  if (two_j < 1) throw std::domain_error("build_dicke_generator: need j >= 1/2");
  require_open_bath(bath, "build_dicke_generator");

  const double j = half(two_j);
  const Eigen::Index dim = two_j + 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);

  const double tau = bath.tau;
  for (Eigen::Index col = 0; col < dim; ++col) {
    const double m = -j + static_cast<double>(col);
    const double down = 2.0 * (1.0 + tau) * std::pow(spin_coupling_coefficient(j, m, Ladder::lowering), 2);
    const double up = 2.0 * tau * std::pow(spin_coupling_coefficient(j, m, Ladder::raising), 2);
    g(col, col) = -down - up;
    if (col > 0) g(col - 1, col) = down;
    if (col + 1 < dim) g(col + 1, col) = up;
  }

  ReducedGenerator out;
  out.scenario = Scenario::dicke;
  out.two_j = two_j;
  out.bath = bath;
  out.matrix = std::move(g);
  return out;
}

ReducedGenerator build_incoherent_generator(const SystemSize& size, const BathParams& bath) {
  const int n_qubits = size.n_qubits;
  if (n_qubits < 2)
    throw ScenarioError("build_incoherent_generator: the incoherent scenario needs N >= 2, got N = " +
                        std::to_string(n_qubits));
  require_open_bath(bath, "build_incoherent_generator");

  const Eigen::Index dim = 3 * n_qubits - 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  const double tau = bath.tau;

  const auto f = [&](int n) { return excitation_degeneracy(size, n); };
  const auto ia = [&](int n) { return static_cast<Eigen::Index>(n - 1); };
  const auto ib = [&](int n) { return static_cast<Eigen::Index>(n_qubits + n); };
  const auto ic = [&](int n) { return static_cast<Eigen::Index>(2 * n_qubits + n - 1); };

  // Columns carry the Liouvillian action on the corresponding basis operator;
  // out-of-range neighbours all arrive with coefficients proportional to
  // sqrt(f_0) = sqrt(f_N) = 0 and are simply skipped.

  for (int n = 1; n <= n_qubits; ++n) {  // action on the site-excited projectors
    const Eigen::Index col = ia(n);
    g(ia(n), col) = -2.0 * (1.0 + tau) * (1.0 + f(n - 1)) - 2.0 * tau * f(n);
    if (n >= 2) g(ia(n - 1), col) = 2.0 * (1.0 + tau) * f(n - 1);
    if (n + 1 <= n_qubits) g(ia(n + 1), col) = 2.0 * tau * f(n);
    g(ib(n - 1), col) = 2.0 * (1.0 + tau);
    if (n >= 2) g(ic(n - 1), col) = 2.0 * (1.0 + tau) * std::sqrt(f(n - 1));
    if (n <= n_qubits - 1) g(ic(n), col) = -(1.0 + 2.0 * tau) * std::sqrt(f(n));
  }

  for (int n = 0; n <= n_qubits - 1; ++n) {  // action on the site-ground projectors
    const Eigen::Index col = ib(n);
    g(ib(n), col) = -2.0 * (1.0 + tau) * f(n) - 2.0 * tau * (1.0 + f(n + 1));
    if (n >= 1) g(ib(n - 1), col) = 2.0 * (1.0 + tau) * f(n);
    if (n + 1 <= n_qubits - 1) g(ib(n + 1), col) = 2.0 * tau * f(n + 1);
    g(ia(n + 1), col) = 2.0 * tau;
    if (n >= 1) g(ic(n), col) = -(1.0 + 2.0 * tau) * std::sqrt(f(n));
    if (n + 1 <= n_qubits - 1) g(ic(n + 1), col) = 2.0 * tau * std::sqrt(f(n + 1));
  }

  for (int n = 1; n <= n_qubits - 1; ++n) {  // action on the cross terms
    const Eigen::Index col = ic(n);
    const double rf = std::sqrt(f(n));
    g(ia(n), col) = -2.0 * (1.0 + 2.0 * tau) * rf;
    g(ia(n + 1), col) = 4.0 * tau * rf;
    g(ib(n - 1), col) = 4.0 * (1.0 + tau) * rf;
    g(ib(n), col) = -2.0 * (1.0 + 2.0 * tau) * rf;
    g(ic(n), col) = -(1.0 + tau) * (1.0 + f(n - 1) + f(n)) - tau * (1.0 + f(n) + f(n + 1));
    if (n >= 2) g(ic(n - 1), col) = 2.0 * (1.0 + tau) * std::sqrt(f(n - 1) * f(n));
    if (n + 1 <= n_qubits - 1) g(ic(n + 1), col) = 2.0 * tau * std::sqrt(f(n) * f(n + 1));
  }

  ReducedGenerator out;
  out.scenario = Scenario::incoherent;
  out.n_qubits = n_qubits;
  out.bath = bath;
  out.matrix = std::move(g);
  return out;
}

ReducedGenerator build_coherent_generator(const SystemSize& size, const BathParams& bath) {
  require_open_bath(bath, "build_coherent_generator");

  const int n_qubits = size.n_qubits;
  const Eigen::Index dim = n_qubits + 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  const double tau = bath.tau;

  // Collective emission rate out of the n-excitation symmetric state is
  // 2(1+tau)(f_n + n), absorption into it 2*tau(f_{n+1} + n + 1); the n = N
  // absorption term is absent (f_{N+1} + N + 1 vanishes identically).
  for (int n = 0; n <= n_qubits; ++n) {
    const Eigen::Index col = n;
    const double down = 2.0 * (1.0 + tau) * (excitation_degeneracy(size, n) + n);
    const double up = n < n_qubits ? 2.0 * tau * (excitation_degeneracy(size, n + 1) + n + 1.0) : 0.0;
    g(col, col) = -down - up;
    if (n >= 1) g(col - 1, col) = down;
    if (n < n_qubits) g(col + 1, col) = up;
  }

  ReducedGenerator out;
  out.scenario = Scenario::coherent;
  out.n_qubits = n_qubits;
  out.bath = bath;
  out.matrix = std::move(g);
  return out;
}

ReducedState initial_vector(Scenario scenario, const SystemSize& size) {
  ReducedState state;
  state.scenario = scenario;
  state.n_qubits = size.n_qubits;
  switch (scenario) {
    case Scenario::incoherent: {
      if (size.n_qubits < 2)
        throw ScenarioError("initial_vector: incoherent scenario needs N >= 2");
      state.coeffs = Eigen::VectorXd::Zero(3 * size.n_qubits - 1);
      state.coeffs[state.idx_a(1)] = 1.0;
      return state;
    }
    case Scenario::coherent: {
      state.coeffs = Eigen::VectorXd::Zero(size.n_qubits + 1);
      state.coeffs[1] = 1.0;
      return state;
    }
    case Scenario::dicke:
      throw ScenarioError("initial_vector: dicke sector needs explicit (j, m); use initial_dicke_vector");
  }
  throw ScenarioError("initial_vector: unknown scenario");
}

ReducedState initial_dicke_vector(int two_j, int two_m, int n_qubits) {
  if (two_j < 1) throw std::domain_error("initial_dicke_vector: need j >= 1/2");
  if (std::abs(two_m) > two_j || (two_j - two_m) % 2 != 0)
    throw std::domain_error("initial_dicke_vector: m must step in integers within [-j, j]");
  ReducedState state;
  state.scenario = Scenario::dicke;
  state.two_j = two_j;
  state.n_qubits = n_qubits;
  state.coeffs = Eigen::VectorXd::Zero(two_j + 1);
  state.coeffs[(two_m + two_j) / 2] = 1.0;
  return state;
}

std::pair<double, double> decompose_single_excitation(const SystemSize& size) {
  if (size.n_qubits < 2)
    throw ScenarioError("decompose_single_excitation: needs N >= 2");
  const double n = static_cast<double>(size.n_qubits);
  return {1.0 / std::sqrt(n), std::sqrt((n - 1.0) / n)};
}

}  // namespace dicke
