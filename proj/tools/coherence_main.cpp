#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coherence/errors.hpp"
#include "coherence/linalg.hpp"
#include "coherence/measures.hpp"
#include "coherence/ordering.hpp"
#include "coherence/postulates.hpp"
#include "coherence/state_io.hpp"
#include "coherence/states.hpp"

namespace {

using namespace coherence;

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Load a state file; anything wrong with the file contents is a file error.
LoadedState cli_load(const std::string& path) {
  try {
    return load_state_file(path);
  } catch (const FileFormatError&) {
    throw;
  } catch (const Error& e) {
    throw FileFormatError("state file '" + path + "': " + e.what());
  }
}

DensityMatrix state_from_bloch(const std::string& arg) {
  const size_t comma = arg.find(',');
  if (comma == std::string::npos) {
    throw FileFormatError("--bloch expects 't,z'");
  }
  double t = 0.0;
  double z = 0.0;
  try {
    t = std::stod(arg.substr(0, comma));
    z = std::stod(arg.substr(comma + 1));
  } catch (const std::exception&) {
    throw FileFormatError("--bloch expects two numbers 't,z'");
  }
  return from_bloch_xyz(t, 0.0, z);
}

Measure parse_measure(const std::string& name) {
  if (name == "l1") {
    return Measure::L1;
  }
  if (name == "relent") {
    return Measure::RelEnt;
  }
  if (name == "formation") {
    return Measure::Formation;
  }
  throw FileFormatError("unknown measure '" + name + "' (expected l1, relent or formation)");
}

void print_pure(const std::string& label, const PureState& phi) {
  std::cout << label << " = [";
  for (int i = 0; i < phi.dim(); ++i) {
    const cplx a = phi.amplitudes()[i];
    if (i > 0) {
      std::cout << ", ";
    }
    std::cout << fmt6(a.real());
    if (a.imag() != 0.0) {
      std::cout << (a.imag() < 0 ? " - " : " + ") << fmt6(std::abs(a.imag())) << "i";
    }
  }
  std::cout << "]\n";
}

void print_density(const std::string& label, const DensityMatrix& rho) {
  std::cout << label << ":\n";
  for (int i = 0; i < rho.dim(); ++i) {
    std::cout << "  [";
    for (int j = 0; j < rho.dim(); ++j) {
      const cplx e = rho.matrix()(i, j);
      if (j > 0) {
        std::cout << ", ";
      }
      std::cout << fmt6(e.real());
      if (e.imag() != 0.0) {
        std::cout << (e.imag() < 0 ? " - " : " + ") << fmt6(std::abs(e.imag())) << "i";
      }
    }
    std::cout << "]\n";
  }
}

void print_measures_for(const DensityMatrix& rho) {
  std::cout << "C_l1 = " << fmt6(c_l1(rho).value) << "\n";
  std::cout << "C_r  = " << fmt6(c_r(rho).value) << "\n";
  try {
    std::cout << "C_f  = " << fmt6(c_f(rho).value) << "\n";
  } catch (const UnsupportedInputError&) {
    std::cout << "C_f  = undefined (mixed state with d >= 3)\n";
  }
}

int run_measure(const std::string& path, const std::string& bloch) {
  if (path.empty() == bloch.empty()) {
    std::cerr << "measure: give exactly one of <statefile> or --bloch\n";
    return 2;
  }
  if (!bloch.empty()) {
    const DensityMatrix rho = state_from_bloch(bloch);
    std::cout << "dim  = 2\n";
    print_measures_for(rho);
    return 0;
  }
  const LoadedState state = cli_load(path);
  std::cout << "dim  = " << state.dim() << "\n";
  if (state.is_pure()) {
    const DensityMatrix rho = state.density();
    std::cout << "C_l1 = " << fmt6(c_l1(rho).value) << "\n";
    std::cout << "C_r  = " << fmt6(c_r(rho).value) << "\n";
    std::cout << "C_f  = " << fmt6(c_f_pure(state.pure()).value) << "\n";
  } else {
    print_measures_for(state.density());
  }
  return 0;
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::SameOrder:
      return 0;
    case Verdict::OrderingDifferent:
      return 10;
    case Verdict::TieAtTolerance:
      return 11;
  }
  return 0;
}

void print_verdict(const OrderingVerdict& v) {
  const auto cmp = [&](double x, double y) {
    if (std::abs(x - y) <= v.tolerance) {
      return std::string("~");
    }
    return std::string(x < y ? "<" : ">");
  };
  std::cout << measure_name(v.measure_a) << ": " << fmt6(v.value_a1) << " "
            << cmp(v.value_a1, v.value_a2) << " " << fmt6(v.value_a2) << "\n";
  std::cout << measure_name(v.measure_b) << ": " << fmt6(v.value_b1) << " "
            << cmp(v.value_b1, v.value_b2) << " " << fmt6(v.value_b2) << "\n";
  std::cout << "verdict: " << verdict_name(v.verdict) << "\n";
}

int run_classify(const std::string& file1, const std::string& file2, const std::string& bloch1,
                 const std::string& bloch2, const std::string& measures, double tol) {
  std::vector<std::string> names;
  std::istringstream ss(measures);
  std::string item;
  while (std::getline(ss, item, ',')) {
    names.push_back(item);
  }
  if (names.size() != 2) {
    std::cerr << "classify: --measures expects two comma-separated names\n";
    return 2;
  }
  if (file1.empty() == bloch1.empty() || file2.empty() == bloch2.empty()) {
    std::cerr << "classify: give two states, each as a file or --bloch1/--bloch2\n";
    return 2;
  }
  const DensityMatrix rho1 = file1.empty() ? state_from_bloch(bloch1) : cli_load(file1).density();
  const DensityMatrix rho2 = file2.empty() ? state_from_bloch(bloch2) : cli_load(file2).density();
  const OrderingVerdict v =
      classify_pair(rho1, rho2, parse_measure(names[0]), parse_measure(names[1]), tol);
  print_verdict(v);
  return verdict_exit_code(v.verdict);
}

int run_feasible(double t1, double t2) {
  const FeasibilityResult r = qubit_pair_feasible(t1, t2);
  std::cout << "t1 = " << fmt6(r.t1) << "\n";
  std::cout << "t2 = " << fmt6(r.t2) << "\n";
  std::cout << "lhs = " << fmt6(r.lhs) << "\n";
  std::cout << "rhs = " << fmt6(r.rhs) << "\n";
  std::cout << "feasible: " << (r.feasible ? "true" : "false") << "\n";
  std::cout << "boundary: " << (r.boundary ? "true" : "false") << "\n";
  return 0;
}

int run_scan(double t1, double t2, int n1, int n2, const std::string& out_path) {
  const ScanGrid grid = scan_delta_cr(t1, t2, n1, n2);
  std::ofstream out(out_path);
  if (!out) {
    throw FileFormatError("cannot open '" + out_path + "' for writing");
  }
  write_scan_csv(grid, out);
  if (!out) {
    throw FileFormatError("write to '" + out_path + "' failed");
  }
  double max_delta = grid.delta_cr[0][0];
  for (const auto& row : grid.delta_cr) {
    for (double cell : row) {
      max_delta = std::max(max_delta, cell);
    }
  }
  std::cout << "wrote " << out_path << ": " << n1 << "x" << n2
            << " grid, max dCr = " << fmt6(max_delta) << "\n";
  return 0;
}

int run_witness(double t1, double t2) {
  const auto w = find_witness(t1, t2);
  if (!w) {
    std::cout << "NONE\n";
    return 0;
  }
  std::cout << "z1 = " << fmt6(w->first) << "\n";
  std::cout << "z2 = " << fmt6(w->second) << "\n";
  return 0;
}

int run_lift(int d, double alpha) {
  if (d < 4) {
    std::cerr << "lift: --d must be at least 4\n";
    return 2;
  }
  const double tail = 1.0 - alpha * alpha;
  if (tail <= 0.0) {
    throw DomainError("lift: --alpha must satisfy 0 < alpha < 1");
  }
  const std::vector<cplx> betas(d - 3, cplx{std::sqrt(tail / (d - 3)), 0.0});
  const auto [phi1, phi2] = build_lifted_pair(d, cplx{alpha, 0.0}, betas);
  print_pure("phi1", phi1);
  print_pure("phi2", phi2);
  const DensityMatrix rho1 = phi1.projector();
  const DensityMatrix rho2 = phi2.projector();
  std::cout << "C_l1: " << fmt6(c_l1(rho1).value) << " vs " << fmt6(c_l1(rho2).value) << "\n";
  std::cout << "C_r:  " << fmt6(c_r(rho1).value) << " vs " << fmt6(c_r(rho2).value) << "\n";
  std::cout << "C_f:  " << fmt6(c_f_pure(phi1).value) << " vs " << fmt6(c_f_pure(phi2).value)
            << "\n";
  const OrderingVerdict v = classify_pair(rho1, rho2, Measure::L1, Measure::RelEnt);
  std::cout << "verdict (l1, relent): " << verdict_name(v.verdict) << "\n";
  return 0;
}

int run_embed(int d) {
  if (d < 3) {
    std::cerr << "embed: --d must be at least 3\n";
    return 2;
  }
  ComplexMatrix delta(d - 2);
  for (int i = 0; i < d - 2; ++i) {
    delta(i, i) = 1.0 / (d - 2);
  }
  const DensityMatrix uniform = validate_density(delta);
  const auto [rho1, rho2] = build_embedded_pair(d, uniform, uniform);
  print_density("rho1", rho1);
  print_density("rho2", rho2);
  std::cout << "C_l1: " << fmt6(c_l1(rho1).value) << " vs " << fmt6(c_l1(rho2).value) << "\n";
  std::cout << "C_r:  " << fmt6(c_r(rho1).value) << " vs " << fmt6(c_r(rho2).value) << "\n";
  const OrderingVerdict v = classify_pair(rho1, rho2, Measure::L1, Measure::RelEnt);
  std::cout << "verdict (l1, relent): " << verdict_name(v.verdict) << "\n";
  return 0;
}

int run_postulates(int dim, int trials, std::uint64_t seed) {
  const std::vector<Measure> measures = {Measure::L1, Measure::RelEnt};
  const std::vector<TrialRecord> records = run_postulate_campaign(dim, trials, seed, measures);
  int failures = 0;
  for (const TrialRecord& rec : records) {
    std::cout << format_report_line(rec) << "\n";
    if (!rec.passed) {
      ++failures;
    }
  }
  std::cout << "postulates: " << records.size() - failures << "/" << records.size()
            << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

struct ReproduceTable {
  int failures = 0;
  int total = 0;

  void value(const std::string& name, double computed, double expected, double tol = 5e-4) {
    const bool ok = std::abs(computed - expected) <= tol;
    row(name, ok, fmt6(computed) + " (expected " + fmt6(expected) + ")");
  }

  void boolean(const std::string& name, bool computed, bool expected) {
    row(name, computed == expected,
        std::string(computed ? "true" : "false") + " (expected " +
            (expected ? "true" : "false") + ")");
  }

  void row(const std::string& name, bool ok, const std::string& detail) {
    ++total;
    if (!ok) {
      ++failures;
    }
    std::printf("[%s] %-38s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  }
};

// Re-derive every published reference number from scratch and compare at the
// published 4-decimal precision (+/- 5e-4).
int run_reproduce() {
  ReproduceTable t;
  const auto [rho1, rho2] = ordering_different_qubit_pair();
  const auto [phi1, phi2] = ordering_different_qutrit_pair();

  t.value("C_l1(rho1)", c_l1(rho1).value, 0.8000);
  t.value("C_l1(rho2)", c_l1(rho2).value, 0.8165);
  t.value("C_r(rho1)", c_r(rho1).value, 0.7219);
  t.value("C_r(rho2)", c_r(rho2).value, 0.5576);
  t.value("C_f(rho1)", c_f(rho1).value, 0.7219);
  t.value("C_f(rho2)", c_f(rho2).value, 0.7440);

  const DensityMatrix p1 = phi1.projector();
  const DensityMatrix p2 = phi2.projector();
  t.value("C_l1(phi1)", c_l1(p1).value, 1.5143);
  t.value("C_l1(phi2)", c_l1(p2).value, 1.5603);
  t.value("C_r(phi1)", c_r(p1).value, 1.2023);
  t.value("C_r(phi2)", c_r(p2).value, 1.1568);
  t.value("C_f(phi2) = C_r(phi2)", c_f_pure(phi2).value, 1.1568);

  t.value("H(1/5)", binary_entropy(0.2), 0.7219);
  t.value("H(12/25, 12/25, 1/25)", shannon_entropy({12.0 / 25.0, 12.0 / 25.0, 1.0 / 25.0}),
          1.2023);
  t.value("C_l1(maximally coherent, d=3)", c_l1(maximally_coherent(3).projector()).value, 2.0);

  const ComplexMatrix one = ComplexMatrix::identity(1);
  const DensityMatrix delta1 = validate_density(one);
  const auto [e1, e2] = build_embedded_pair(3, delta1, delta1);
  t.value("C_l1(embedded rho1) = C_l1/2", c_l1(e1).value, 0.4000);
  t.value("C_r(embedded rho1) = C_r/2", c_r(e1).value, 0.3610);

  const double t2 = 2.0 / std::sqrt(6.0);
  t.boolean("feasible(3/5, 4/5)", qubit_pair_feasible(0.6, 0.8).feasible, false);
  t.boolean("feasible(4/5, 2/sqrt6)", qubit_pair_feasible(0.8, t2).feasible, true);

  const auto w = find_witness(0.8, t2);
  t.boolean("witness(4/5, 2/sqrt6) exists", w.has_value(), true);
  if (w) {
    t.value("witness z1", w->first, 0.6, 1e-9);
    t.value("witness z2", w->second, 0.0, 1e-9);
  }

  const ScanGrid grid = scan_delta_cr(0.8, t2, 201, 201);
  t.value("dCr at (z1=0.6, z2=0)", grid.delta_cr[200][0], 0.1643);

  t.boolean("(rho1, rho2) ordering-different (l1, relent)",
            classify_pair(rho1, rho2, Measure::L1, Measure::RelEnt).verdict ==
                Verdict::OrderingDifferent,
            true);
  t.boolean("(rho1, rho2) ordering-different (formation, relent)",
            classify_pair(rho1, rho2, Measure::Formation, Measure::RelEnt).verdict ==
                Verdict::OrderingDifferent,
            true);
  t.boolean("(phi1, phi2) ordering-different (l1, relent)",
            classify_pair(p1, p2, Measure::L1, Measure::RelEnt).verdict ==
                Verdict::OrderingDifferent,
            true);
  t.boolean("(phi1, phi2) ordering-different (l1, formation)",
            classify_pair(p1, p2, Measure::L1, Measure::Formation).verdict ==
                Verdict::OrderingDifferent,
            true);

  const BlochQubit q2 = canonicalize_qubit(rho2);
  t.value("canonical rho2: t", q2.t(), 0.8165);
  t.value("canonical rho2: z", q2.z(), 0.0, 1e-9);

  t.boolean("diag{1, e^{ia}} passes ICPTP check", validate_icptp(qubit_phase_unitary(0.7)).valid,
            true);
  const DensityMatrix xyz = from_bloch_xyz(0.48, 0.64, 0.6);
  const double alpha = -std::atan2(0.64, 0.48);
  const DensityMatrix mapped = apply_channel(qubit_phase_unitary(alpha), xyz);
  t.row("U_alpha maps rho(x,y,z) to rho(t,z)",
        mapped.matrix().max_abs_diff(from_bloch_xyz(0.8, 0.0, 0.6).matrix()) < 1e-12,
        "max entry diff < 1e-12");

  const DensityMatrix deph = dephase(rho1);
  t.row("dephase(rho1) = diag(4/5, 1/5)",
        std::abs(deph.matrix()(0, 0).real() - 0.8) < 1e-15 && deph.matrix().max_offdiag() == 0.0,
        "diagonal matches, off-diagonal zero");
  t.boolean("rho2 is incoherent", is_incoherent(rho2), false);

  std::cout << "reproduce: " << (t.total - t.failures) << "/" << t.total << " checks passed\n";
  return t.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence measures (l1, relative entropy, formation) and ordering-different "
               "pair search for finite-dimensional quantum states"};
  app.require_subcommand(1);

  std::string measure_file;
  std::string measure_bloch;
  auto* measure_cmd = app.add_subcommand("measure", "Print C_l1, C_r and C_f of a state");
  measure_cmd->add_option("statefile", measure_file, "JSON state file");
  measure_cmd->add_option("--bloch", measure_bloch, "inline qubit 't,z'");

  std::string cls_file1;
  std::string cls_file2;
  std::string cls_bloch1;
  std::string cls_bloch2;
  std::string cls_measures = "l1,relent";
  double cls_tol = kOrderingTol;
  auto* classify_cmd =
      app.add_subcommand("classify", "Order a state pair under two coherence measures");
  classify_cmd->add_option("file1", cls_file1, "first state file");
  classify_cmd->add_option("file2", cls_file2, "second state file");
  classify_cmd->add_option("--bloch1", cls_bloch1, "first state as inline qubit 't,z'");
  classify_cmd->add_option("--bloch2", cls_bloch2, "second state as inline qubit 't,z'");
  classify_cmd->add_option("--measures", cls_measures, "two of l1,relent,formation");
  classify_cmd->add_option("--tol", cls_tol, "ordering tolerance");

  double fe_t1 = 0.0;
  double fe_t2 = 0.0;
  auto* feasible_cmd =
      app.add_subcommand("feasible", "Can (t1, t2) carry an ordering-different qubit pair?");
  feasible_cmd->add_option("--t1", fe_t1, "smaller off-diagonal magnitude")->required();
  feasible_cmd->add_option("--t2", fe_t2, "larger off-diagonal magnitude")->required();

  double sc_t1 = 0.0;
  double sc_t2 = 0.0;
  int sc_n1 = 201;
  int sc_n2 = 201;
  std::string sc_out;
  auto* scan_cmd = app.add_subcommand("scan", "Write the dCr(z1, z2) grid as CSV");
  scan_cmd->add_option("--t1", sc_t1)->required();
  scan_cmd->add_option("--t2", sc_t2)->required();
  scan_cmd->add_option("--n1", sc_n1, "z1 grid points");
  scan_cmd->add_option("--n2", sc_n2, "z2 grid points");
  scan_cmd->add_option("--out", sc_out, "output CSV path")->required();

  double wi_t1 = 0.0;
  double wi_t2 = 0.0;
  auto* witness_cmd = app.add_subcommand("witness", "Extremal (z1, z2) witness for (t1, t2)");
  witness_cmd->add_option("--t1", wi_t1)->required();
  witness_cmd->add_option("--t2", wi_t2)->required();

  int li_d = 4;
  double li_alpha = 1.0 / std::sqrt(2.0);
  auto* lift_cmd =
      app.add_subcommand("lift", "Lift the built-in qutrit pair to dimension d");
  lift_cmd->add_option("--d", li_d, "target dimension (>= 4)")->required();
  lift_cmd->add_option("--alpha", li_alpha, "head weight, 0 < alpha < 1 (tail split uniformly)");

  int em_d = 3;
  auto* embed_cmd = app.add_subcommand(
      "embed", "Embed the built-in qubit pair into dimension d with uniform incoherent blocks");
  embed_cmd->add_option("--d", em_d, "target dimension (>= 3)")->required();

  int po_dim = 2;
  int po_trials = 1000;
  std::uint64_t po_seed = 20160604;
  auto* postulates_cmd =
      app.add_subcommand("postulates", "Randomized postulate checks (C1-C4) for l1 and relent");
  postulates_cmd->add_option("--dim", po_dim, "state dimension")->required();
  postulates_cmd->add_option("--trials", po_trials, "trials per postulate");
  postulates_cmd->add_option("--seed", po_seed, "RNG seed");

  app.add_subcommand("reproduce", "Check every published reference value at +/- 5e-4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (measure_cmd->parsed()) {
      return run_measure(measure_file, measure_bloch);
    }
    if (classify_cmd->parsed()) {
      return run_classify(cls_file1, cls_file2, cls_bloch1, cls_bloch2, cls_measures, cls_tol);
    }
    if (feasible_cmd->parsed()) {
      return run_feasible(fe_t1, fe_t2);
    }
    if (scan_cmd->parsed()) {
      return run_scan(sc_t1, sc_t2, sc_n1, sc_n2, sc_out);
    }
    if (witness_cmd->parsed()) {
      return run_witness(wi_t1, wi_t2);
    }
    if (lift_cmd->parsed()) {
      return run_lift(li_d, li_alpha);
    }
    if (embed_cmd->parsed()) {
      return run_embed(em_d);
    }
    if (postulates_cmd->parsed()) {
      return run_postulates(po_dim, po_trials, po_seed);
    }
    return run_reproduce();
  } catch (const FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
