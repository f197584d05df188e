#pragma once

#include <random>
#include <vector>

#include "coherence/complex_matrix.hpp"

namespace coherence {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdSlack = -1e-9;
inline constexpr double kIncoherenceTol = 1e-10;
inline constexpr double kNormTol = 1e-10;

// A validated quantum state: Hermitian within 1e-10, trace within 1e-10 of 1,
// eigenvalues >= -1e-9. Construction goes through validate_density.
class DensityMatrix {
 public:
  int dim() const { return mat_.dim(); }
  const ComplexMatrix& matrix() const { return mat_; }

  // Real parts of the diagonal (populations).
  std::vector<double> diagonal() const;

  // Re tr(rho^2); equals 1 exactly for pure states.
  double purity() const;

  friend DensityMatrix validate_density(const ComplexMatrix& m);

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

// Unit-norm complex amplitude vector.
class PureState {
 public:
  // Throws NormalizationError unless sum |a_i|^2 is within 1e-10 of 1.
  explicit PureState(std::vector<cplx> amplitudes);

  int dim() const { return static_cast<int>(amps_.size()); }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  // |a_i|^2 for each i.
  std::vector<double> probabilities() const;

  // |phi><phi| as a validated density matrix.
  DensityMatrix projector() const;

 private:
  std::vector<cplx> amps_;
};

// Canonical qubit form: off-diagonal magnitude t >= 0 and population imbalance z,
// with t^2 + z^2 <= 1. z keeps its sign; measures use |z|.
class BlochQubit {
 public:
  // Throws DomainError if t < 0 or t^2 + z^2 > 1 + 1e-12.
  BlochQubit(double t, double z);

  double t() const { return t_; }
  double z() const { return z_; }

 private:
  double t_;
  double z_;
};

// Checks Hermiticity, trace and positivity; throws NotHermitianError,
// BadTraceError or NotPositiveError naming the measured residual.
DensityMatrix validate_density(const ComplexMatrix& m);

// rho(x,y,z) = [[1+z, x-iy], [x+iy, 1-z]] / 2. Throws DomainError outside the
// Bloch ball (tolerance 1e-12).
DensityMatrix from_bloch_xyz(double x, double y, double z);

// Strips the off-diagonal phase of a qubit state: t = 2 |rho_01|, z = rho_00 - rho_11.
// The implicit transformation diag{1, e^{i alpha}}, alpha = -arctan(y/x), is
// incoherent, so the result carries the same coherence for every measure.
BlochQubit canonicalize_qubit(const DensityMatrix& rho);

// Zero all off-diagonal entries.
DensityMatrix dephase(const DensityMatrix& rho);

bool is_incoherent(const DensityMatrix& rho, double tol = kIncoherenceTol);

// Uniform superposition (1/sqrt(d), ..., 1/sqrt(d)).
PureState maximally_coherent(int d);

// Block direct sum (delta (+) rho) / 2 with delta a diagonal (d-2)-dimensional
// state and rho a qubit state. Throws NotIncoherentError if delta has
// off-diagonal weight.
DensityMatrix embed_mixed(const DensityMatrix& delta, const DensityMatrix& rho);

// alpha * phi amplitudes followed by the beta tail. Requires
// |alpha|^2 + sum |beta_i|^2 = 1 within 1e-10 and 0 < |alpha| < 1.
PureState lift_pure(const PureState& phi, cplx alpha, const std::vector<cplx>& betas);

// Deterministic random-state generators for property campaigns.
PureState random_pure_state(int dim, std::mt19937_64& rng);
DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng);  // Ginibre G G^dag / tr
DensityMatrix random_incoherent_state(int dim, std::mt19937_64& rng);

}  // namespace coherence
