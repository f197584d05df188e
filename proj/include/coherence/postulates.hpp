#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coherence/measures.hpp"
#include "coherence/states.hpp"

namespace coherence {

inline constexpr double kCompletenessTol = 1e-10;
inline constexpr double kColumnZeroTol = 1e-12;
inline constexpr double kBranchCutoff = 1e-12;
inline constexpr double kPostulateMargin = 1e-9;

// Kraus operators of a candidate incoherent channel.
struct KrausSet {
  int dim = 0;
  std::vector<ComplexMatrix> operators;
};

struct IcptpCheck {
  bool valid = false;
  std::string diagnostic;  // names the first violated condition and operator index
};

// Valid iff sum K_i^dag K_i = I within 1e-10 entrywise and every column of every
// K_i has at most one entry above 1e-12 (the structural test that each K_i maps
// diagonal states to diagonal states).
IcptpCheck validate_icptp(const KrausSet& ks);

// sum_i K_i rho K_i^dag, revalidated. Throws InvalidChannelError if the set
// fails validate_icptp, DimensionMismatchError on a dimension clash.
DensityMatrix apply_channel(const KrausSet& ks, const DensityMatrix& rho);

// Deterministic generator of channels that pass validate_icptp by construction:
// K_i = D_i P_i M_i with P_i a permutation, D_i diagonal phases and the M_i
// diagonal weights column-stochastic across i. Emits plain weighted incoherent
// unitaries most of the time, the dephasing set and dephasing-like mixtures
// with fixed probability.
KrausSet random_incoherent_channel(int dim, int n_kraus, std::uint64_t seed);

// Complete dephasing: projectors onto the incoherence basis.
KrausSet dephasing_channel(int dim);

// Single incoherent unitary diag{1, e^{i alpha}}.
KrausSet qubit_phase_unitary(double alpha);

struct CheckResult {
  bool passed = false;
  double margin = 0.0;  // slack of the verified inequality
};

// C(rho) = 0 iff rho is incoherent, at margin 1e-9.
CheckResult check_faithfulness(const DensityMatrix& rho, Measure measure);

// C(rho) >= C(channel(rho)) - 1e-9.
CheckResult check_monotonicity(const KrausSet& ks, const DensityMatrix& rho, Measure measure);

// C(rho) + 1e-9 >= sum_i p_i C(rho_i) over branches with p_i >= 1e-12.
CheckResult check_selective_monotonicity(const KrausSet& ks, const DensityMatrix& rho,
                                         Measure measure);

// C(sum p_i rho_i) <= sum p_i C(rho_i) + 1e-9.
CheckResult check_convexity(const std::vector<DensityMatrix>& states,
                            const std::vector<double>& weights, Measure measure);

struct TrialRecord {
  int trial_id = 0;
  std::string postulate;
  Measure measure = Measure::L1;
  int dim = 0;
  bool passed = false;
  double margin = 0.0;
};

// Randomized campaign over C1-C4 plus the per-trial consistency check that C3
// and C4 on a trial's branches imply C2 for the same trial. One record per
// (trial, postulate, measure).
std::vector<TrialRecord> run_postulate_campaign(int dim, int trials, std::uint64_t seed,
                                                const std::vector<Measure>& measures);

// "trial_id, postulate, measure, dim, verdict, margin"
std::string format_report_line(const TrialRecord& rec);

}  // namespace coherence
