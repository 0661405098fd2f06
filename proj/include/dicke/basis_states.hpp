// basis_states.hpp — product-basis conventions and the normalized
// fixed-excitation superposition states used both by the density-matrix
// reconstruction and by the full-space oracle.
//
// Basis ordering: qubit 1 is the most significant bit, ground (g) = 0 before
// excited (e) = 1, so index 0 is |g...g> and index 2^N - 1 is |e...e>.

#pragma once

#include "dicke/types.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>

namespace dicke {

// Capacity guard for any 2^N x 2^N workspace (oracle operators, density
// reconstruction); overridable via the DICKE_MAX_FULL_N environment variable.
inline int max_full_qubits() {
  if (const char* env = std::getenv("DICKE_MAX_FULL_N")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  return 12;
}

inline bool site_excited(std::uint64_t index, int n_qubits, int site) {
  return (index >> (n_qubits - site)) & 1u;
}

inline int excitation_count(std::uint64_t index) { return std::popcount(index); }

namespace detail {

inline void check_site(const SystemSize& size, int site) {
  if (site < 1 || site > size.n_qubits)
    throw std::domain_error("basis_states: site index " + std::to_string(site) + " outside [1," +
                            std::to_string(size.n_qubits) + "]");
}

inline void check_weight(const SystemSize& size, int n) {
  if (n < 0 || n > size.n_qubits)
    throw std::domain_error("basis_states: excitation number " + std::to_string(n) + " outside [0," +
                            std::to_string(size.n_qubits) + "]");
}

}  // namespace detail

// |nE>: uniform superposition of all weight-n product states (C(N,n) terms).
inline Eigen::VectorXd uniform_excitation_state(const SystemSize& size, int n) {
  detail::check_weight(size, n);
  const auto dim = static_cast<Eigen::Index>(size.dim());
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (excitation_count(static_cast<std::uint64_t>(i)) == n) {
      v[i] = 1.0;
      ++count;
    }
  v /= std::sqrt(static_cast<double>(count));
  return v;
}

// |nE_k>: uniform over weight-n states with site k excited (C(N-1,n-1) terms).
inline Eigen::VectorXd excited_site_state(const SystemSize& size, int n, int site) {
  detail::check_weight(size, n);
  detail::check_site(size, site);
  if (n < 1) throw std::domain_error("basis_states: |nE_k> needs n >= 1");
  const auto dim = static_cast<Eigen::Index>(size.dim());
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    if (excitation_count(idx) == n && site_excited(idx, size.n_qubits, site)) {
      v[i] = 1.0;
      ++count;
    }
  }
  v /= std::sqrt(static_cast<double>(count));
  return v;
}

// |nE_~k>: uniform over weight-n states with site k in ground (C(N-1,n) terms).
inline Eigen::VectorXd ground_site_state(const SystemSize& size, int n, int site) {
  detail::check_weight(size, n);
  detail::check_site(size, site);
  if (n > size.n_qubits - 1) throw std::domain_error("basis_states: |nE_~k> needs n <= N-1");
  const auto dim = static_cast<Eigen::Index>(size.dim());
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    if (excitation_count(idx) == n && !site_excited(idx, size.n_qubits, site)) {
      v[i] = 1.0;
      ++count;
    }
  }
  v /= std::sqrt(static_cast<double>(count));
  return v;
}

}  // namespace dicke
