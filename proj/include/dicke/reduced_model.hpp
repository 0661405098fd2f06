// reduced_model.hpp — construction of the three reduced generators and the
// paper-standard initial coefficient vectors.
//
// All generators are expansion-coefficient matrices: column j of the matrix
// holds the coefficients of the Liouvillian acting on basis operator j,
// expanded in the same ordered basis, so the coefficient vector obeys
// d(coeffs)/dt = matrix * coeffs with the master equation's unit dissipation
// rate.

#pragma once

#include "dicke/types.hpp"

#include <utility>

namespace dicke {

enum class Ladder { raising, lowering };

// f_n = n(N-n): number of product states a collective jump connects within
// the fixed-site excitation families.
double excitation_degeneracy(const SystemSize& size, int n);

// c^±_{j,m} = sqrt(j(j+1) - m(m±1)); j, m half-integers with |m| <= j.
double spin_coupling_coefficient(double j, double m, Ladder sign);

// Tridiagonal (2j+1)x(2j+1) generator on the |j,m><j,m| sector weights.
ReducedGenerator build_dicke_generator(int two_j, const BathParams& bath);

// (3N-1)x(3N-1) generator on the (a, b, c) coefficients; N >= 2.
ReducedGenerator build_incoherent_generator(const SystemSize& size, const BathParams& bath);

// (N+1)x(N+1) tridiagonal generator on the symmetric-sector weights d_n.
ReducedGenerator build_coherent_generator(const SystemSize& size, const BathParams& bath);

// Paper initial states: a_1 = 1 (single excitation at site k) or d_1 = 1
// (uniform single excitation).
ReducedState initial_vector(Scenario scenario, const SystemSize& size);

// Unit weight on |j,m><j,m| within the dicke sector.
ReducedState initial_dicke_vector(int two_j, int two_m, int n_qubits = 0);

// Amplitudes (1/sqrt(N), sqrt((N-1)/N)) of the j = N/2 and j = N/2 - 1
// components of a single excitation localized at one site.
std::pair<double, double> decompose_single_excitation(const SystemSize& size);

}  // namespace dicke
