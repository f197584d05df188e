#pragma once

#include <vector>

#include "coherence/complex_matrix.hpp"

namespace coherence {

// Eigenvalues of a Hermitian matrix, sorted descending.
using Spectrum = std::vector<double>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kJacobiConvergence = 1e-12;  // off-diagonal Frobenius norm
inline constexpr double kJacobiFailure = 1e-8;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic complex Jacobi rotations. Throws NotHermitianError if the input is not
// Hermitian within kHermitianTol, NoConvergenceError if the sweep budget runs out
// with off-diagonal norm still >= kJacobiFailure.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

// H(x) = -x log2 x - (1-x) log2(1-x), with 0 log2 0 = 0.
// x may stray outside [0,1] by at most 1e-12 and is clamped.
double binary_entropy(double x);

// -sum p_i log2 p_i. Entries >= -1e-12 (clamped to 0), sum within 1e-9 of 1.
double shannon_entropy(const std::vector<double>& p);

// S(rho) = -sum lambda_i log2 lambda_i over the eigenvalues, clamped to [0,1].
double von_neumann_entropy(const ComplexMatrix& rho);

}  // namespace coherence
