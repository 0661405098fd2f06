#include "dicke/propagator.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <map>
#include <string>

namespace dicke {

namespace {

void check_dimensions(const ReducedGenerator& gen, const ReducedState& v0, const char* who) {
  if (gen.scenario != v0.scenario)
    throw std::invalid_argument(std::string(who) + ": generator is " + to_string(gen.scenario) + ", state is " +
                                to_string(v0.scenario));
  if (gen.dim() != v0.size())
    throw std::invalid_argument(std::string(who) + ": generator dimension " + std::to_string(gen.dim()) +
                                " vs state length " + std::to_string(v0.size()));
}

ReducedState with_coeffs(const ReducedState& proto, Eigen::VectorXd coeffs) {
  ReducedState out = proto;
  out.coeffs = std::move(coeffs);
  return out;
}

}  // namespace

Eigen::MatrixXd propagator_matrix(const ReducedGenerator& gen, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("propagator_matrix: t must be finite");
  return (t * gen.matrix).exp();
}

ReducedState evolve(const ReducedGenerator& gen, const ReducedState& v0, double t) {
  check_dimensions(gen, v0, "evolve");
  if (!std::isfinite(t) || t < 0.0) throw std::invalid_argument("evolve: t must be finite and >= 0");
  if (t == 0.0) return v0;
  return with_coeffs(v0, propagator_matrix(gen, t) * v0.coeffs);
}

Trajectory evolve_grid(const ReducedGenerator& gen, const ReducedState& v0, const std::vector<double>& times) {
  check_dimensions(gen, v0, "evolve_grid");
  for (std::size_t i = 0; i < times.size(); ++i)
    if (!(times[i] >= 0.0) || (i > 0 && times[i] < times[i - 1]))
      throw std::invalid_argument("evolve_grid: times must be ascending and nonnegative");

  Trajectory out;
  out.times = times;
  out.states.reserve(times.size());

  std::map<double, Eigen::MatrixXd> step_cache;
  Eigen::VectorXd current = v0.coeffs;
  double now = 0.0;
  for (const double target : times) {
    const double span = target - now;
    if (span > 0.0) {
      auto it = step_cache.find(span);
      if (it == step_cache.end()) it = step_cache.emplace(span, propagator_matrix(gen, span)).first;
      current = it->second * current;
      now = target;
    }
    out.states.push_back(with_coeffs(v0, current));
  }
  return out;
}

Eigensystem spectral_decompose(const ReducedGenerator& gen) {
  if (gen.matrix.rows() != gen.matrix.cols())
    throw std::invalid_argument("spectral_decompose: generator must be square");

  Eigen::EigenSolver<Eigen::MatrixXd> solver(gen.matrix);
  if (solver.info() != Eigen::Success)
    throw DegeneracyError("spectral_decompose: eigenvalue iteration failed");

  Eigensystem eig;
  eig.eigenvalues = solver.eigenvalues();
  eig.right = solver.eigenvectors();

  // Left rows from inverting the right-vector matrix; a (near-)defective
  // generator shows up as an unusable inverse.
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(eig.right);
  eig.left = lu.inverse();
  const double residual = (eig.left * eig.right - Eigen::MatrixXcd::Identity(eig.right.rows(), eig.right.cols()))
                              .cwiseAbs()
                              .maxCoeff();
  if (!std::isfinite(residual) || residual > 1e-8)
    throw DegeneracyError("spectral_decompose: defective or near-defective spectrum, biorthonormality residual " +
                          std::to_string(residual));

  const double scale = eig.eigenvalues.cwiseAbs().maxCoeff();
  const double tol = 1e-10 * (scale > 0.0 ? scale : 1.0);
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
    if (std::abs(eig.eigenvalues[i]) <= tol) eig.zero_modes.push_back(i);
  return eig;
}

Eigen::VectorXd spectral_evolve(const Eigensystem& eig, const Eigen::VectorXd& v0, double t) {
  if (eig.right.cols() != v0.size())
    throw std::invalid_argument("spectral_evolve: dimension mismatch");
  const Eigen::VectorXcd weights = eig.left * v0.cast<std::complex<double>>();
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(v0.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
    acc += std::exp(t * eig.eigenvalues[i]) * weights[i] * eig.right.col(i);
  return acc.real();
}

}  // namespace dicke
