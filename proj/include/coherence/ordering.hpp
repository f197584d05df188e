#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "coherence/measures.hpp"
#include "coherence/states.hpp"

namespace coherence {

inline constexpr double kOrderingTol = 1e-9;
inline constexpr double kFeasibilityBoundaryTol = 1e-12;

enum class Verdict { SameOrder, OrderingDifferent, TieAtTolerance };

std::string verdict_name(Verdict v);

// Classification of a state pair under two measures. OrderingDifferent means
// the two value gaps have strictly opposite signs, both beyond the tolerance.
struct OrderingVerdict {
  Measure measure_a;
  Measure measure_b;
  double value_a1;
  double value_a2;
  double value_b1;
  double value_b2;
  Verdict verdict;
  double tolerance;
};

OrderingVerdict classify_pair(const DensityMatrix& rho1, const DensityMatrix& rho2, Measure a,
                              Measure b, double tol = kOrderingTol);

// The two sides of the qubit feasibility condition: witnesses (z1, z2) with
// C_r(t1, z1) > C_r(t2, z2) exist iff
//   H((1 - sqrt(1 - t1^2)) / 2)  >  1 - H((1 - t2) / 2).
// Requires 0 <= t1 <= t2 <= 1. Boundary cases (sides equal within 1e-12) are
// reported infeasible with the boundary flag set.
struct FeasibilityResult {
  double t1;
  double t2;
  double lhs;
  double rhs;
  bool feasible;
  bool boundary;
};

FeasibilityResult qubit_pair_feasible(double t1, double t2);

// Uniform grid of delta_cr[i][j] = C_r(t1, z1_i) - C_r(t2, z2_j) over
// z1 in [0, sqrt(1-t1^2)] and z2 in [0, sqrt(1-t2^2)].
struct ScanGrid {
  double t1;
  double t2;
  std::vector<double> z1_axis;
  std::vector<double> z2_axis;
  std::vector<std::vector<double>> delta_cr;
};

ScanGrid scan_delta_cr(double t1, double t2, int n1, int n2);

// Extremal witness (z1 = sqrt(1-t1^2), z2 = 0) when the pair is feasible.
// Requires 0 <= t1 < t2 <= 1.
std::optional<std::pair<double, double>> find_witness(double t1, double t2);

// The built-in qubit pair on which C_l1 and C_r disagree about the order:
// rho1 = [[4/5, 2/5], [2/5, 1/5]], rho2 = [[1/2, 1/sqrt6], [1/sqrt6, 1/2]].
std::pair<DensityMatrix, DensityMatrix> ordering_different_qubit_pair();

// The built-in qutrit pure pair with C_l1 order < and C_r order >:
// phi1 = (sqrt(12/25), sqrt(12/25), sqrt(1/25)),
// phi2 = (sqrt(7/10), sqrt(1/5), sqrt(1/10)).
std::pair<PureState, PureState> ordering_different_qutrit_pair();

// Lift the built-in qutrit pair to dimension d = 3 + betas.size() with shared
// coefficients; the result stays ordering-different for (L1, RelEnt).
std::pair<PureState, PureState> build_lifted_pair(int d, cplx alpha,
                                                  const std::vector<cplx>& betas);

// Embed the built-in qubit pair as (delta_i (+) rho_i) / 2; both measures halve,
// so the result stays ordering-different.
std::pair<DensityMatrix, DensityMatrix> build_embedded_pair(int d, const DensityMatrix& delta1,
                                                            const DensityMatrix& delta2);

// CSV: header "z1,<z2 values>", one row per z1 value, 12 significant digits.
void write_scan_csv(const ScanGrid& grid, std::ostream& out);

// Inverse of write_scan_csv. t1/t2 are not part of the format and come back NaN.
ScanGrid parse_scan_csv(std::istream& in);

}  // namespace coherence
