#include "coherence/postulates.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "coherence/errors.hpp"

namespace coherence {

namespace {

// Pi with enough digits for phase generation.
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<double> random_probability_vector(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& pi : p) {
    pi = -std::log(1.0 - uni(rng));
    sum += pi;
  }
  for (double& pi : p) {
    pi /= sum;
  }
  return p;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(perm[i], perm[pick(rng)]);
  }
  return perm;
}

}  // namespace

IcptpCheck validate_icptp(const KrausSet& ks) {
  if (ks.operators.empty()) {
    return {false, "no Kraus operators"};
  }
  for (size_t i = 0; i < ks.operators.size(); ++i) {
    if (ks.operators[i].dim() != ks.dim) {
      std::ostringstream msg;
      msg << "operator " << i << " has dimension " << ks.operators[i].dim() << ", expected "
          << ks.dim;
      return {false, msg.str()};
    }
  }
  ComplexMatrix sum(ks.dim);
  for (const ComplexMatrix& k : ks.operators) {
    sum += k.adjoint() * k;
  }
  const double completeness = sum.max_abs_diff(ComplexMatrix::identity(ks.dim));
  if (completeness > kCompletenessTol) {
    std::ostringstream msg;
    msg << "completeness violated: max |sum K^dag K - I| = " << completeness;
    return {false, msg.str()};
  }
  for (size_t i = 0; i < ks.operators.size(); ++i) {
    const ComplexMatrix& k = ks.operators[i];
    for (int j = 0; j < ks.dim; ++j) {
      int nonzeros = 0;
      for (int r = 0; r < ks.dim; ++r) {
        if (std::abs(k(r, j)) > kColumnZeroTol) {
          ++nonzeros;
        }
      }
      if (nonzeros > 1) {
        std::ostringstream msg;
        msg << "incoherence violated: operator " << i << " column " << j << " has " << nonzeros
            << " nonzero entries";
        return {false, msg.str()};
      }
    }
  }
  return {true, "ok"};
}

DensityMatrix apply_channel(const KrausSet& ks, const DensityMatrix& rho) {
  if (ks.dim != rho.dim()) {
    std::ostringstream msg;
    msg << "apply_channel: channel dimension " << ks.dim << " vs state dimension " << rho.dim();
    throw DimensionMismatchError(msg.str());
  }
  const IcptpCheck check = validate_icptp(ks);
  if (!check.valid) {
    throw InvalidChannelError("apply_channel: " + check.diagnostic);
  }
  ComplexMatrix out(ks.dim);
  for (const ComplexMatrix& k : ks.operators) {
    out += k * rho.matrix() * k.adjoint();
  }
  // Trim the anti-Hermitian dust left by the products.
  for (int i = 0; i < ks.dim; ++i) {
    out(i, i) = out(i, i).real();
    for (int j = i + 1; j < ks.dim; ++j) {
      const cplx avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
      out(i, j) = avg;
      out(j, i) = std::conj(avg);
    }
  }
  return validate_density(out);
}

KrausSet random_incoherent_channel(int dim, int n_kraus, std::uint64_t seed) {
  if (dim < 2 || n_kraus < 1) {
    throw DimensionError("random_incoherent_channel: need dim >= 2 and n_kraus >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double mode = uni(rng);

  KrausSet ks;
  ks.dim = dim;

  if (n_kraus == dim && mode < 0.15) {
    return dephasing_channel(dim);
  }

  // Column weights m[i][j] with sum_i m[i][j] = 1 per column j. Uniform columns
  // give weighted incoherent unitaries; independent columns mix in
  // dephasing-like operators.
  std::vector<std::vector<double>> weights(n_kraus, std::vector<double>(dim));
  if (mode < 0.45) {
    for (int j = 0; j < dim; ++j) {
      std::vector<double> col = random_probability_vector(n_kraus, rng);
      for (int i = 0; i < n_kraus; ++i) {
        weights[i][j] = col[i];
      }
    }
  } else {
    std::vector<double> p = random_probability_vector(n_kraus, rng);
    for (int i = 0; i < n_kraus; ++i) {
      for (int j = 0; j < dim; ++j) {
        weights[i][j] = p[i];
      }
    }
  }

  for (int i = 0; i < n_kraus; ++i) {
    const std::vector<int> perm = random_permutation(dim, rng);
    ComplexMatrix k(dim);
    for (int j = 0; j < dim; ++j) {
      const double theta = kTwoPi * uni(rng);
      k(perm[j], j) = std::sqrt(weights[i][j]) * cplx{std::cos(theta), std::sin(theta)};
    }
    ks.operators.push_back(std::move(k));
  }
  return ks;
}

KrausSet dephasing_channel(int dim) {
  KrausSet ks;
  ks.dim = dim;
  for (int i = 0; i < dim; ++i) {
    ComplexMatrix k(dim);
    k(i, i) = 1.0;
    ks.operators.push_back(std::move(k));
  }
  return ks;
}

KrausSet qubit_phase_unitary(double alpha) {
  KrausSet ks;
  ks.dim = 2;
  ComplexMatrix u(2);
  u(0, 0) = 1.0;
  u(1, 1) = cplx{std::cos(alpha), std::sin(alpha)};
  ks.operators.push_back(std::move(u));
  return ks;
}

CheckResult check_faithfulness(const DensityMatrix& rho, Measure measure) {
  const double c = evaluate(measure, rho).value;
  if (is_incoherent(rho)) {
    return {c <= kPostulateMargin, -c};
  }
  return {c > kPostulateMargin, c};
}

CheckResult check_monotonicity(const KrausSet& ks, const DensityMatrix& rho, Measure measure) {
  const DensityMatrix mapped = apply_channel(ks, rho);
  const double margin = evaluate(measure, rho).value - evaluate(measure, mapped).value;
  return {margin >= -kPostulateMargin, margin};
}

CheckResult check_selective_monotonicity(const KrausSet& ks, const DensityMatrix& rho,
                                         Measure measure) {
  const IcptpCheck check = validate_icptp(ks);
  if (!check.valid) {
    throw InvalidChannelError("check_selective_monotonicity: " + check.diagnostic);
  }
  if (ks.dim != rho.dim()) {
    throw DimensionMismatchError("check_selective_monotonicity: dimension mismatch");
  }
  double branch_sum = 0.0;
  for (const ComplexMatrix& k : ks.operators) {
    ComplexMatrix branch = k * rho.matrix() * k.adjoint();
    const double p = branch.trace().real();
    if (p < kBranchCutoff) {
      continue;
    }
    branch *= 1.0 / p;
    for (int i = 0; i < branch.dim(); ++i) {
      branch(i, i) = branch(i, i).real();
      for (int j = i + 1; j < branch.dim(); ++j) {
        const cplx avg = 0.5 * (branch(i, j) + std::conj(branch(j, i)));
        branch(i, j) = avg;
        branch(j, i) = std::conj(avg);
      }
    }
    branch_sum += p * evaluate(measure, validate_density(branch)).value;
  }
  const double margin = evaluate(measure, rho).value - branch_sum;
  return {margin >= -kPostulateMargin, margin};
}

CheckResult check_convexity(const std::vector<DensityMatrix>& states,
                            const std::vector<double>& weights, Measure measure) {
  if (states.empty() || states.size() != weights.size()) {
    throw DimensionMismatchError("check_convexity: states and weights must pair up");
  }
  const int d = states.front().dim();
  for (const DensityMatrix& s : states) {
    if (s.dim() != d) {
      throw DimensionMismatchError("check_convexity: states have mixed dimensions");
    }
  }
  double wsum = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw NormalizationError("check_convexity: negative weight");
    }
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "check_convexity: weights sum to " << wsum;
    throw NormalizationError(msg.str());
  }
  ComplexMatrix mix(d);
  double avg = 0.0;
  for (size_t i = 0; i < states.size(); ++i) {
    ComplexMatrix scaled = states[i].matrix();
    scaled *= weights[i];
    mix += scaled;
    avg += weights[i] * evaluate(measure, states[i]).value;
  }
  const double margin = avg - evaluate(measure, validate_density(mix)).value;
  return {margin >= -kPostulateMargin, margin};
}

std::vector<TrialRecord> run_postulate_campaign(int dim, int trials, std::uint64_t seed,
                                                const std::vector<Measure>& measures) {
  if (dim < 2) {
    throw DimensionError("run_postulate_campaign: dim must be at least 2");
  }
  std::vector<TrialRecord> records;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_kraus_dist(1, 4);
  std::uniform_int_distribution<int> n_mix_dist(2, 4);

  for (int trial = 0; trial < trials; ++trial) {
    const int n_kraus = n_kraus_dist(rng);
    const std::uint64_t channel_seed = rng();
    const KrausSet channel = random_incoherent_channel(dim, n_kraus, channel_seed);
    const DensityMatrix rho = random_density_matrix(dim, rng);
    const DensityMatrix delta = random_incoherent_state(dim, rng);
    const DensityMatrix& faith_state = (trial % 2 == 0) ? rho : delta;

    const int n_mix = n_mix_dist(rng);
    std::vector<DensityMatrix> mix_states;
    for (int i = 0; i < n_mix; ++i) {
      mix_states.push_back(random_density_matrix(dim, rng));
    }
    const std::vector<double> mix_weights = random_probability_vector(n_mix, rng);

    // Branches of the trial's channel, for convexity-on-branches and the
    // C3 + C4 => C2 consistency record.
    std::vector<DensityMatrix> branch_states;
    std::vector<double> branch_weights;
    for (const ComplexMatrix& k : channel.operators) {
      ComplexMatrix branch = k * rho.matrix() * k.adjoint();
      const double p = branch.trace().real();
      if (p < kBranchCutoff) {
        continue;
      }
      branch *= 1.0 / p;
      for (int i = 0; i < branch.dim(); ++i) {
        branch(i, i) = branch(i, i).real();
        for (int j = i + 1; j < branch.dim(); ++j) {
          const cplx avg = 0.5 * (branch(i, j) + std::conj(branch(j, i)));
          branch(i, j) = avg;
          branch(j, i) = std::conj(avg);
        }
      }
      branch_states.push_back(validate_density(branch));
      branch_weights.push_back(p);
    }

    for (Measure m : measures) {
      const CheckResult c1 = check_faithfulness(faith_state, m);
      const CheckResult c2 = check_monotonicity(channel, rho, m);
      const CheckResult c3 = check_selective_monotonicity(channel, rho, m);
      const CheckResult c4 = check_convexity(mix_states, mix_weights, m);
      records.push_back({trial, "C1", m, dim, c1.passed, c1.margin});
      records.push_back({trial, "C2", m, dim, c2.passed, c2.margin});
      records.push_back({trial, "C3", m, dim, c3.passed, c3.margin});
      records.push_back({trial, "C4", m, dim, c4.passed, c4.margin});

      const CheckResult c4b = check_convexity(branch_states, branch_weights, m);
      const bool consistent = !(c3.passed && c4b.passed) || c2.passed;
      records.push_back({trial, "C3C4=>C2", m, dim, consistent, c2.margin});
    }
  }
  return records;
}

std::string format_report_line(const TrialRecord& rec) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d, %s, %s, %d, %s, %.3e", rec.trial_id,
                rec.postulate.c_str(), measure_name(rec.measure).c_str(), rec.dim,
                rec.passed ? "pass" : "FAIL", rec.margin);
  return buf;
}

}  // namespace coherence
