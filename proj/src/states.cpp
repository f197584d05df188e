#include "coherence/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coherence/errors.hpp"
#include "coherence/linalg.hpp"

namespace coherence {

std::vector<double> DensityMatrix::diagonal() const {
  std::vector<double> d(dim());
  for (int i = 0; i < dim(); ++i) {
    d[i] = mat_(i, i).real();
  }
  return d;
}

double DensityMatrix::purity() const {
  double sum = 0.0;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      sum += std::norm(mat_(i, j));
    }
  }
  return sum;
}

PureState::PureState(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) {
    throw DimensionError("PureState: empty amplitude vector");
  }
  double norm_sq = 0.0;
  for (const cplx& a : amps_) {
    norm_sq += std::norm(a);
  }
  if (std::abs(norm_sq - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "PureState: squared norm " << norm_sq << " differs from 1 beyond " << kNormTol;
    throw NormalizationError(msg.str());
  }
}

std::vector<double> PureState::probabilities() const {
  std::vector<double> p(amps_.size());
  for (size_t i = 0; i < amps_.size(); ++i) {
    p[i] = std::norm(amps_[i]);
  }
  return p;
}

DensityMatrix PureState::projector() const {
  const int d = dim();
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m(i, j) = amps_[i] * std::conj(amps_[j]);
    }
  }
  return validate_density(m);
}

BlochQubit::BlochQubit(double t, double z) : t_(t), z_(z) {
  if (t < 0.0) {
    throw DomainError("BlochQubit: t must be non-negative");
  }
  if (t * t + z * z > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "BlochQubit: t^2 + z^2 = " << t * t + z * z << " exceeds 1";
    throw DomainError(msg.str());
  }
}

DensityMatrix validate_density(const ComplexMatrix& m) {
  if (m.dim() < 1) {
    throw DimensionError("validate_density: empty matrix");
  }
  if (!m.all_finite()) {
    throw DomainError("validate_density: non-finite entry");
  }
  const double herm = m.hermiticity_residual();
  if (herm > kHermitianTol) {
    std::ostringstream msg;
    msg << "validate_density: Hermiticity residual " << herm << " exceeds " << kHermitianTol;
    throw NotHermitianError(msg.str());
  }
  const double trace_err = std::abs(m.trace() - cplx{1.0, 0.0});
  if (trace_err > kTraceTol) {
    std::ostringstream msg;
    msg << "validate_density: trace residual " << trace_err << " exceeds " << kTraceTol;
    throw BadTraceError(msg.str());
  }
  const Spectrum eigs = hermitian_eigenvalues(m);
  const double lowest = eigs.back();
  if (lowest < kPsdSlack) {
    std::ostringstream msg;
    msg << "validate_density: eigenvalue " << lowest << " below " << kPsdSlack;
    throw NotPositiveError(msg.str());
  }
  return DensityMatrix(m);
}

DensityMatrix from_bloch_xyz(double x, double y, double z) {
  const double r2 = x * x + y * y + z * z;
  if (r2 > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "from_bloch_xyz: |r|^2 = " << r2 << " outside the Bloch ball";
    throw DomainError(msg.str());
  }
  ComplexMatrix m(2);
  m(0, 0) = 0.5 * (1.0 + z);
  m(0, 1) = 0.5 * cplx{x, -y};
  m(1, 0) = 0.5 * cplx{x, y};
  m(1, 1) = 0.5 * (1.0 - z);
  return validate_density(m);
}

BlochQubit canonicalize_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    std::ostringstream msg;
    msg << "canonicalize_qubit: dimension " << rho.dim() << ", expected 2";
    throw DimensionError(msg.str());
  }
  double t = 2.0 * std::abs(rho.matrix()(0, 1));
  double z = rho.matrix()(0, 0).real() - rho.matrix()(1, 1).real();
  // PSD slack can leave t^2 + z^2 a few 1e-9 above 1; rescale onto the ball.
  const double r2 = t * t + z * z;
  if (r2 > 1.0) {
    const double r = std::sqrt(r2);
    t /= r;
    z /= r;
  }
  return BlochQubit(t, z);
}

DensityMatrix dephase(const DensityMatrix& rho) {
  const int d = rho.dim();
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i) {
    m(i, i) = rho.matrix()(i, i).real();
  }
  return validate_density(m);
}

bool is_incoherent(const DensityMatrix& rho, double tol) {
  return rho.matrix().max_offdiag() <= tol;
}

PureState maximally_coherent(int d) {
  if (d < 1) {
    throw DimensionError("maximally_coherent: d must be positive");
  }
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  return PureState(std::vector<cplx>(d, cplx{a, 0.0}));
}

DensityMatrix embed_mixed(const DensityMatrix& delta, const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    std::ostringstream msg;
    msg << "embed_mixed: second block has dimension " << rho.dim() << ", expected 2";
    throw DimensionError(msg.str());
  }
  if (!is_incoherent(delta)) {
    std::ostringstream msg;
    msg << "embed_mixed: delta has off-diagonal weight " << delta.matrix().max_offdiag();
    throw NotIncoherentError(msg.str());
  }
  const int k = delta.dim();
  const int d = k + 2;
  ComplexMatrix m(d);
  for (int i = 0; i < k; ++i) {
    m(i, i) = 0.5 * delta.matrix()(i, i);
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m(k + i, k + j) = 0.5 * rho.matrix()(i, j);
    }
  }
  return validate_density(m);
}

PureState lift_pure(const PureState& phi, cplx alpha, const std::vector<cplx>& betas) {
  if (betas.empty()) {
    throw DimensionError("lift_pure: at least one tail amplitude required");
  }
  double norm_sq = std::norm(alpha);
  for (const cplx& b : betas) {
    norm_sq += std::norm(b);
  }
  if (std::abs(norm_sq - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "lift_pure: |alpha|^2 + sum |beta|^2 = " << norm_sq << ", not 1";
    throw NormalizationError(msg.str());
  }
  const double a2 = std::norm(alpha);
  if (a2 <= 1e-12 || a2 >= 1.0 - 1e-12) {
    std::ostringstream msg;
    msg << "lift_pure: |alpha| = " << std::abs(alpha) << " must lie strictly between 0 and 1";
    throw DegenerateLiftError(msg.str());
  }
  std::vector<cplx> amps;
  amps.reserve(phi.dim() + betas.size());
  for (const cplx& a : phi.amplitudes()) {
    amps.push_back(alpha * a);
  }
  for (const cplx& b : betas) {
    amps.push_back(b);
  }
  return PureState(std::move(amps));
}

PureState random_pure_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> amps(dim);
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (cplx& a : amps) {
      a = cplx{gauss(rng), gauss(rng)};
      norm_sq += std::norm(a);
    }
  } while (norm_sq < 1e-12);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (cplx& a : amps) {
    a *= inv;
  }
  return PureState(std::move(amps));
}

DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = cplx{gauss(rng), gauss(rng)};
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  // Round off the tiny imaginary dust on the diagonal.
  for (int i = 0; i < dim; ++i) {
    rho(i, i) = rho(i, i).real();
  }
  return validate_density(rho);
}

DensityMatrix random_incoherent_state(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> w(dim);
  double sum = 0.0;
  for (double& wi : w) {
    wi = -std::log(1.0 - uni(rng));
    sum += wi;
  }
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = w[i] / sum;
  }
  return validate_density(m);
}

}  // namespace coherence
