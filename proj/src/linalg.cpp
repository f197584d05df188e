#include "coherence/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coherence/errors.hpp"

namespace coherence {

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        sum += std::norm(a(i, j));
      }
    }
  }
  return std::sqrt(sum);
}

// One cyclic sweep of complex Jacobi rotations A <- J^dag A J, zeroing each
// off-diagonal pivot (p,q) in turn.
void jacobi_sweep(ComplexMatrix& a) {
  const int n = a.dim();
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const cplx apq = a(p, q);
      const double h = std::abs(apq);
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      if (h < 1e-280 * (std::abs(app) + std::abs(aqq) + 1.0)) {
        continue;
      }
      const cplx phase = apq / h;
      const double tau = (aqq - app) / (2.0 * h);
      const double t =
          tau == 0.0 ? 1.0 : std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      for (int k = 0; k < n; ++k) {
        if (k == p || k == q) {
          continue;
        }
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(phase) * akq;
        a(k, q) = s * phase * akp + c * akq;
        a(p, k) = std::conj(a(k, p));
        a(q, k) = std::conj(a(k, q));
      }
      a(p, p) = c * c * app - 2.0 * c * s * h + s * s * aqq;
      a(q, q) = s * s * app + 2.0 * c * s * h + c * c * aqq;
      a(p, q) = 0.0;
      a(q, p) = 0.0;
    }
  }
}

}  // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.all_finite()) {
    throw DomainError("hermitian_eigenvalues: matrix has non-finite entries");
  }
  const double residual = m.hermiticity_residual();
  if (residual > kHermitianTol) {
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: matrix is not Hermitian, residual " << residual;
    throw NotHermitianError(msg.str());
  }

  const int n = m.dim();
  // Symmetrize so tiny within-tolerance asymmetry cannot leak into the result.
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }

  int sweep = 0;
  while (sweep < kJacobiMaxSweeps && offdiag_frobenius(a) >= kJacobiConvergence) {
    jacobi_sweep(a);
    ++sweep;
  }
  const double off = offdiag_frobenius(a);
  if (off >= kJacobiFailure) {
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: no convergence after " << kJacobiMaxSweeps
        << " sweeps, off-diagonal norm " << off;
    throw NoConvergenceError(msg.str());
  }

  Spectrum eigs(n);
  for (int i = 0; i < n; ++i) {
    eigs[i] = a(i, i).real();
  }
  std::sort(eigs.begin(), eigs.end(), std::greater<double>());
  return eigs;
}

double binary_entropy(double x) {
  if (x < -1e-12 || x > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "binary_entropy: argument " << x << " outside [0,1]";
    throw DomainError(msg.str());
  }
  x = std::clamp(x, 0.0, 1.0);
  double h = 0.0;
  if (x > 0.0) {
    h -= x * std::log2(x);
  }
  if (x < 1.0) {
    h -= (1.0 - x) * std::log2(1.0 - x);
  }
  return h;
}

double shannon_entropy(const std::vector<double>& p) {
  double sum = 0.0;
  for (double pi : p) {
    if (pi < -1e-12) {
      std::ostringstream msg;
      msg << "shannon_entropy: negative entry " << pi;
      throw DomainError(msg.str());
    }
    sum += pi;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "shannon_entropy: entries sum to " << sum << ", not 1";
    throw DomainError(msg.str());
  }
  double h = 0.0;
  for (double pi : p) {
    if (pi > 0.0) {
      h -= pi * std::log2(pi);
    }
  }
  return h;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  const Spectrum eigs = hermitian_eigenvalues(rho);
  double h = 0.0;
  for (double lambda : eigs) {
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > 0.0) {
      h -= lambda * std::log2(lambda);
    }
  }
  return h;
}

}  // namespace coherence
