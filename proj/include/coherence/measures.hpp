#pragma once

#include <string>

#include "coherence/states.hpp"

namespace coherence {

enum class Measure { L1, RelEnt, Formation };

std::string measure_name(Measure m);

// Tagged measure value. L1 is dimensionless; RelEnt and Formation are in bits.
struct CoherenceValue {
  Measure measure;
  double value;
};

// Sum of off-diagonal magnitudes. Bounded by d-1.
CoherenceValue c_l1(const DensityMatrix& rho);

// S(dephase(rho)) - S(rho). Bounded by log2 d.
CoherenceValue c_r(const DensityMatrix& rho);

// On pure states the convex roof collapses to the entropy of |a_i|^2.
CoherenceValue c_f_pure(const PureState& phi);

// Qubit closed form H(1/2 + sqrt(1-t^2)/2).
CoherenceValue c_f_qubit(const BlochQubit& q);

// Coherence of formation on a density matrix: qubit closed form for d = 2,
// diagonal entropy for pure states of any dimension. Throws
// UnsupportedInputError for mixed states with d >= 3 (general convex roof
// is out of scope).
CoherenceValue c_f(const DensityMatrix& rho);

// Qubit closed forms. Must agree with the matrix definitions.
CoherenceValue c_l1_qubit(const BlochQubit& q);
CoherenceValue c_r_qubit(const BlochQubit& q);

// One lifting step (phi -> alpha phi + beta |d>) expressed on measure values:
// |alpha|^2 c_prev + 2 |alpha beta| sqrt(1 + c_prev). Serves as an
// independent route against direct evaluation on the lifted state.
double c_l1_lift_recursion(double c_prev, cplx alpha, cplx beta);

// Same for the relative entropy: alpha_sq * c_prev + H(alpha_sq).
double c_r_lift_recursion(double c_prev, double alpha_sq);

// Dispatch by measure tag; Formation routes through c_f.
CoherenceValue evaluate(Measure m, const DensityMatrix& rho);

}  // namespace coherence
