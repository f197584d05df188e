#pragma once

#include <optional>
#include <string>
#include <variant>

#include "coherence/states.hpp"

namespace coherence {

// A state read from disk: either a density matrix or a pure amplitude vector.
class LoadedState {
 public:
  explicit LoadedState(DensityMatrix rho) : value_(std::move(rho)) {}
  explicit LoadedState(PureState phi) : value_(std::move(phi)) {}

  bool is_pure() const { return std::holds_alternative<PureState>(value_); }
  const PureState& pure() const { return std::get<PureState>(value_); }

  // The state as a density matrix (projector for pure inputs).
  DensityMatrix density() const;

  int dim() const;

 private:
  std::variant<DensityMatrix, PureState> value_;
};

// Document format: a JSON object with "dim" and either "matrix" (dim rows of
// dim [re, im] pairs) or "amplitudes" (dim [re, im] pairs). Throws
// FileFormatError on malformed documents; state validation errors propagate.
LoadedState parse_state_json(const std::string& text);
LoadedState load_state_file(const std::string& path);

std::string state_to_json(const DensityMatrix& rho);
std::string state_to_json(const PureState& phi);

}  // namespace coherence
