#include "coherence/ordering.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "coherence/errors.hpp"
#include "coherence/linalg.hpp"

namespace coherence {

namespace {

double checked_t(double t, const char* which) {
  if (t < 0.0 || t > 1.0) {
    std::ostringstream msg;
    msg << which << " = " << t << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  return t;
}

std::string format_sig12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double parse_cell(const std::string& cell, const char* context) {
  size_t consumed = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &consumed);
  } catch (const std::exception&) {
    throw FileFormatError(std::string("scan CSV: bad ") + context + " '" + cell + "'");
  }
  if (consumed != cell.size()) {
    throw FileFormatError(std::string("scan CSV: trailing junk in ") + context + " '" + cell +
                          "'");
  }
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') {
    cells.emplace_back();
  }
  return cells;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SameOrder:
      return "same-order";
    case Verdict::OrderingDifferent:
      return "ordering-different";
    case Verdict::TieAtTolerance:
      return "tie-at-tolerance";
  }
  return "?";
}

OrderingVerdict classify_pair(const DensityMatrix& rho1, const DensityMatrix& rho2, Measure a,
                              Measure b, double tol) {
  if (rho1.dim() != rho2.dim()) {
    std::ostringstream msg;
    msg << "classify_pair: dimensions " << rho1.dim() << " and " << rho2.dim() << " differ";
    throw DimensionMismatchError(msg.str());
  }
  OrderingVerdict out;
  out.measure_a = a;
  out.measure_b = b;
  out.value_a1 = evaluate(a, rho1).value;
  out.value_a2 = evaluate(a, rho2).value;
  out.value_b1 = evaluate(b, rho1).value;
  out.value_b2 = evaluate(b, rho2).value;
  out.tolerance = tol;
  const double da = out.value_a1 - out.value_a2;
  const double db = out.value_b1 - out.value_b2;
  if (std::abs(da) <= tol || std::abs(db) <= tol) {
    out.verdict = Verdict::TieAtTolerance;
  } else if ((da > 0.0) != (db > 0.0)) {
    out.verdict = Verdict::OrderingDifferent;
  } else {
    out.verdict = Verdict::SameOrder;
  }
  return out;
}

FeasibilityResult qubit_pair_feasible(double t1, double t2) {
  checked_t(t1, "t1");
  checked_t(t2, "t2");
  if (t1 > t2) {
    std::ostringstream msg;
    msg << "qubit_pair_feasible: requires t1 <= t2, got " << t1 << " > " << t2;
    throw DomainError(msg.str());
  }
  FeasibilityResult r;
  r.t1 = t1;
  r.t2 = t2;
  r.lhs = binary_entropy(0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - t1 * t1))));
  r.rhs = 1.0 - binary_entropy(0.5 * (1.0 - t2));
  r.boundary = std::abs(r.lhs - r.rhs) <= kFeasibilityBoundaryTol;
  r.feasible = !r.boundary && r.lhs > r.rhs;
  return r;
}

ScanGrid scan_delta_cr(double t1, double t2, int n1, int n2) {
  checked_t(t1, "t1");
  checked_t(t2, "t2");
  if (n1 < 2 || n2 < 2) {
    throw DomainError("scan_delta_cr: need at least 2 grid points per axis");
  }
  ScanGrid grid;
  grid.t1 = t1;
  grid.t2 = t2;
  const double z1_max = std::sqrt(std::max(0.0, 1.0 - t1 * t1));
  const double z2_max = std::sqrt(std::max(0.0, 1.0 - t2 * t2));
  grid.z1_axis.resize(n1);
  grid.z2_axis.resize(n2);
  std::vector<double> cr1(n1), cr2(n2);
  for (int i = 0; i < n1; ++i) {
    grid.z1_axis[i] = z1_max * i / (n1 - 1);
    cr1[i] = c_r_qubit(BlochQubit(t1, grid.z1_axis[i])).value;
  }
  for (int j = 0; j < n2; ++j) {
    grid.z2_axis[j] = z2_max * j / (n2 - 1);
    cr2[j] = c_r_qubit(BlochQubit(t2, grid.z2_axis[j])).value;
  }
  grid.delta_cr.assign(n1, std::vector<double>(n2));
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      grid.delta_cr[i][j] = cr1[i] - cr2[j];
    }
  }
  return grid;
}

std::optional<std::pair<double, double>> find_witness(double t1, double t2) {
  if (!(t1 < t2)) {
    std::ostringstream msg;
    msg << "find_witness: requires t1 < t2, got t1 = " << t1 << ", t2 = " << t2;
    throw DomainError(msg.str());
  }
  const FeasibilityResult r = qubit_pair_feasible(t1, t2);
  if (!r.feasible) {
    return std::nullopt;
  }
  return std::make_pair(std::sqrt(std::max(0.0, 1.0 - t1 * t1)), 0.0);
}

std::pair<DensityMatrix, DensityMatrix> ordering_different_qubit_pair() {
  ComplexMatrix m1(2);
  m1(0, 0) = 4.0 / 5.0;
  m1(0, 1) = 2.0 / 5.0;
  m1(1, 0) = 2.0 / 5.0;
  m1(1, 1) = 1.0 / 5.0;
  ComplexMatrix m2(2);
  const double s = 1.0 / std::sqrt(6.0);
  m2(0, 0) = 0.5;
  m2(0, 1) = s;
  m2(1, 0) = s;
  m2(1, 1) = 0.5;
  return {validate_density(m1), validate_density(m2)};
}

std::pair<PureState, PureState> ordering_different_qutrit_pair() {
  std::vector<cplx> a = {std::sqrt(12.0 / 25.0), std::sqrt(12.0 / 25.0), std::sqrt(1.0 / 25.0)};
  std::vector<cplx> b = {std::sqrt(7.0 / 10.0), std::sqrt(1.0 / 5.0), std::sqrt(1.0 / 10.0)};
  return {PureState(a), PureState(b)};
}

std::pair<PureState, PureState> build_lifted_pair(int d, cplx alpha,
                                                  const std::vector<cplx>& betas) {
  if (d < 4 || d != 3 + static_cast<int>(betas.size())) {
    std::ostringstream msg;
    msg << "build_lifted_pair: need d = 3 + #betas >= 4, got d = " << d << " with "
        << betas.size() << " betas";
    throw DimensionError(msg.str());
  }
  auto [phi1, phi2] = ordering_different_qutrit_pair();
  return {lift_pure(phi1, alpha, betas), lift_pure(phi2, alpha, betas)};
}

std::pair<DensityMatrix, DensityMatrix> build_embedded_pair(int d, const DensityMatrix& delta1,
                                                            const DensityMatrix& delta2) {
  if (d < 3) {
    throw DimensionError("build_embedded_pair: d must be at least 3");
  }
  if (delta1.dim() != d - 2 || delta2.dim() != d - 2) {
    std::ostringstream msg;
    msg << "build_embedded_pair: incoherent blocks must have dimension " << d - 2 << ", got "
        << delta1.dim() << " and " << delta2.dim();
    throw DimensionMismatchError(msg.str());
  }
  auto [rho1, rho2] = ordering_different_qubit_pair();
  return {embed_mixed(delta1, rho1), embed_mixed(delta2, rho2)};
}

void write_scan_csv(const ScanGrid& grid, std::ostream& out) {
  out << "z1";
  for (double z2 : grid.z2_axis) {
    out << ',' << format_sig12(z2);
  }
  out << '\n';
  for (size_t i = 0; i < grid.z1_axis.size(); ++i) {
    out << format_sig12(grid.z1_axis[i]);
    for (double cell : grid.delta_cr[i]) {
      out << ',' << format_sig12(cell);
    }
    out << '\n';
  }
}

ScanGrid parse_scan_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw FileFormatError("scan CSV: empty document");
  }
  std::vector<std::string> header = split_csv_line(line);
  if (header.size() < 2 || header[0] != "z1") {
    throw FileFormatError("scan CSV: header must start with 'z1' followed by z2 values");
  }
  ScanGrid grid;
  grid.t1 = std::numeric_limits<double>::quiet_NaN();
  grid.t2 = std::numeric_limits<double>::quiet_NaN();
  for (size_t j = 1; j < header.size(); ++j) {
    grid.z2_axis.push_back(parse_cell(header[j], "z2 value"));
  }
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      std::ostringstream msg;
      msg << "scan CSV: row has " << cells.size() << " cells, expected " << header.size();
      throw FileFormatError(msg.str());
    }
    grid.z1_axis.push_back(parse_cell(cells[0], "z1 value"));
    std::vector<double> row;
    row.reserve(cells.size() - 1);
    for (size_t j = 1; j < cells.size(); ++j) {
      row.push_back(parse_cell(cells[j], "cell"));
    }
    grid.delta_cr.push_back(std::move(row));
  }
  if (grid.z1_axis.empty()) {
    throw FileFormatError("scan CSV: no data rows");
  }
  return grid;
}

}  // namespace coherence
