#include "coherence/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coherence/errors.hpp"

namespace coherence {

namespace {

using nlohmann::json;

cplx parse_entry(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FileFormatError(std::string("state file: each ") + what +
                          " entry must be a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json entry_to_json(const cplx& v) {
  return json::array({v.real(), v.imag()});
}

}  // namespace

DensityMatrix LoadedState::density() const {
  if (is_pure()) {
    return pure().projector();
  }
  return std::get<DensityMatrix>(value_);
}

int LoadedState::dim() const {
  return is_pure() ? pure().dim() : std::get<DensityMatrix>(value_).dim();
}

LoadedState parse_state_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FileFormatError(std::string("state file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw FileFormatError("state file: expected an object with an integer 'dim'");
  }
  const int dim = doc["dim"].get<int>();
  if (dim < 1) {
    throw FileFormatError("state file: 'dim' must be positive");
  }
  const bool has_matrix = doc.contains("matrix");
  const bool has_amps = doc.contains("amplitudes");
  if (has_matrix == has_amps) {
    throw FileFormatError("state file: exactly one of 'matrix' or 'amplitudes' is required");
  }

  if (has_matrix) {
    const json& rows = doc["matrix"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
      throw FileFormatError("state file: 'matrix' must have exactly dim rows");
    }
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
      const json& row = rows[i];
      if (!row.is_array() || static_cast<int>(row.size()) != dim) {
        throw FileFormatError("state file: each matrix row must have exactly dim entries");
      }
      for (int j = 0; j < dim; ++j) {
        m(i, j) = parse_entry(row[j], "matrix");
      }
    }
    return LoadedState(validate_density(m));
  }

  const json& amps = doc["amplitudes"];
  if (!amps.is_array() || static_cast<int>(amps.size()) != dim) {
    throw FileFormatError("state file: 'amplitudes' must have exactly dim entries");
  }
  std::vector<cplx> a(dim);
  for (int i = 0; i < dim; ++i) {
    a[i] = parse_entry(amps[i], "amplitude");
  }
  return LoadedState(PureState(std::move(a)));
}

LoadedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileFormatError("cannot open state file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string state_to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (int i = 0; i < rho.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < rho.dim(); ++j) {
      row.push_back(entry_to_json(rho.matrix()(i, j)));
    }
    rows.push_back(std::move(row));
  }
  json doc;
  doc["dim"] = rho.dim();
  doc["matrix"] = std::move(rows);
  return doc.dump(2);
}

std::string state_to_json(const PureState& phi) {
  json amps = json::array();
  for (const cplx& a : phi.amplitudes()) {
    amps.push_back(entry_to_json(a));
  }
  json doc;
  doc["dim"] = phi.dim();
  doc["amplitudes"] = std::move(amps);
  return doc.dump(2);
}

}  // namespace coherence
