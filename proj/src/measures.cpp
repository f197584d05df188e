#include "coherence/measures.hpp"

#include <cmath>
#include <sstream>

#include "coherence/errors.hpp"
#include "coherence/linalg.hpp"

namespace coherence {

namespace {
constexpr double kPurityTol = 1e-9;
}

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::L1:
      return "l1";
    case Measure::RelEnt:
      return "relent";
    case Measure::Formation:
      return "formation";
  }
  return "?";
}

CoherenceValue c_l1(const DensityMatrix& rho) {
  double sum = 0.0;
  const int d = rho.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j) {
        sum += std::abs(rho.matrix()(i, j));
      }
    }
  }
  return {Measure::L1, sum};
}

CoherenceValue c_r(const DensityMatrix& rho) {
  const double dephased = von_neumann_entropy(dephase(rho).matrix());
  return {Measure::RelEnt, dephased - von_neumann_entropy(rho.matrix())};
}

CoherenceValue c_f_pure(const PureState& phi) {
  return {Measure::Formation, shannon_entropy(phi.probabilities())};
}

CoherenceValue c_f_qubit(const BlochQubit& q) {
  if (q.t() > 1.0 + 1e-12) {
    throw DomainError("c_f_qubit: t exceeds 1");
  }
  const double t = std::min(q.t(), 1.0);
  return {Measure::Formation, binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - t * t))};
}

CoherenceValue c_f(const DensityMatrix& rho) {
  if (rho.dim() == 2) {
    return c_f_qubit(canonicalize_qubit(rho));
  }
  if (std::abs(rho.purity() - 1.0) <= kPurityTol) {
    // Pure state: |a_i|^2 are exactly the diagonal entries, so the convex
    // roof collapses to the dephased entropy.
    return {Measure::Formation, von_neumann_entropy(dephase(rho).matrix())};
  }
  std::ostringstream msg;
  msg << "c_f: formation is only available for qubits and pure states; got a mixed state of "
         "dimension "
      << rho.dim() << " (purity " << rho.purity() << ")";
  throw UnsupportedInputError(msg.str());
}

CoherenceValue c_l1_qubit(const BlochQubit& q) {
  return {Measure::L1, q.t()};
}

CoherenceValue c_r_qubit(const BlochQubit& q) {
  const double z = std::abs(q.z());
  const double r = std::min(std::sqrt(q.t() * q.t() + z * z), 1.0);
  return {Measure::RelEnt, binary_entropy(0.5 - 0.5 * z) - binary_entropy(0.5 - 0.5 * r)};
}

double c_l1_lift_recursion(double c_prev, cplx alpha, cplx beta) {
  if (c_prev < 0.0) {
    throw DomainError("c_l1_lift_recursion: previous value must be non-negative");
  }
  const double norm_sq = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm_sq - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "c_l1_lift_recursion: |alpha|^2 + |beta|^2 = " << norm_sq << ", not 1";
    throw NormalizationError(msg.str());
  }
  const double a = std::abs(alpha);
  const double b = std::abs(beta);
  return a * a * c_prev + 2.0 * a * b * std::sqrt(1.0 + c_prev);
}

double c_r_lift_recursion(double c_prev, double alpha_sq) {
  if (c_prev < 0.0) {
    throw DomainError("c_r_lift_recursion: previous value must be non-negative");
  }
  if (alpha_sq <= 0.0 || alpha_sq >= 1.0) {
    std::ostringstream msg;
    msg << "c_r_lift_recursion: alpha_sq = " << alpha_sq << " outside (0,1)";
    throw DomainError(msg.str());
  }
  return alpha_sq * c_prev + binary_entropy(alpha_sq);
}

CoherenceValue evaluate(Measure m, const DensityMatrix& rho) {
  switch (m) {
    case Measure::L1:
      return c_l1(rho);
    case Measure::RelEnt:
      return c_r(rho);
    case Measure::Formation:
      return c_f(rho);
  }
  throw DomainError("evaluate: unknown measure");
}

}  // namespace coherence
