#include <random>

#include <doctest.h>

#include "coherence/errors.hpp"
#include "coherence/state_io.hpp"
#include "coherence/states.hpp"

using namespace coherence;

TEST_CASE("parse_state_json reads density matrices") {
  const std::string doc = R"({
    "dim": 2,
    "matrix": [[[0.8, 0.0], [0.4, 0.0]],
               [[0.4, 0.0], [0.2, 0.0]]]
  })";
  const LoadedState state = parse_state_json(doc);
  CHECK_FALSE(state.is_pure());
  CHECK(state.dim() == 2);
  CHECK(state.density().matrix()(0, 1).real() == 0.4);
}

TEST_CASE("parse_state_json reads pure states") {
  const std::string doc = R"({
    "dim": 2,
    "amplitudes": [[0.6, 0.0], [0.0, 0.8]]
  })";
  const LoadedState state = parse_state_json(doc);
  CHECK(state.is_pure());
  CHECK(state.pure().amplitudes()[1] == cplx{0.0, 0.8});
  // The projector of a pure file is a valid density matrix.
  CHECK(state.density().dim() == 2);
}

TEST_CASE("parse_state_json rejects malformed documents") {
  CHECK_THROWS_AS(parse_state_json("not json"), FileFormatError);
  CHECK_THROWS_AS(parse_state_json(R"({"dim": 2})"), FileFormatError);
  CHECK_THROWS_AS(parse_state_json(R"({"matrix": []})"), FileFormatError);
  CHECK_THROWS_AS(parse_state_json(R"({"dim": 2, "matrix": [[[1,0]]]})"), FileFormatError);
  CHECK_THROWS_AS(parse_state_json(R"({"dim": 1, "matrix": [[[1,0]]], "amplitudes": [[1,0]]})"),
                  FileFormatError);
  CHECK_THROWS_AS(parse_state_json(R"({"dim": 2, "amplitudes": [[1,0],["x",0]]})"),
                  FileFormatError);
  // Structurally fine but physically invalid contents surface as state errors.
  CHECK_THROWS_AS(
      parse_state_json(R"({"dim": 2, "matrix": [[[1,0],[0,0]],[[0,0],[0.1,0]]]})"),
      BadTraceError);
  CHECK_THROWS_AS(parse_state_json(R"({"dim": 2, "amplitudes": [[1,0],[0.5,0]]})"),
                  NormalizationError);
}

TEST_CASE("state JSON round-trips exactly") {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const DensityMatrix rho = random_density_matrix(d, rng);
    const LoadedState back = parse_state_json(state_to_json(rho));
    CHECK_FALSE(back.is_pure());
    CHECK(back.density().matrix().max_abs_diff(rho.matrix()) == 0.0);

    const PureState phi = random_pure_state(d, rng);
    const LoadedState pure_back = parse_state_json(state_to_json(phi));
    REQUIRE(pure_back.is_pure());
    for (int i = 0; i < d; ++i) {
      CHECK(pure_back.pure().amplitudes()[i] == phi.amplitudes()[i]);
    }
  }
}

TEST_CASE("load_state_file reports missing files") {
  CHECK_THROWS_AS(load_state_file("/nonexistent/state.json"), FileFormatError);
}
