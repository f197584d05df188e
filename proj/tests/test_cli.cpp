#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "coherence/ordering.hpp"
#include "coherence/state_io.hpp"
#include "coherence/states.hpp"

using namespace coherence;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(COHERENCE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) {
    result.output.append(buf, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Scratch directory shared by the CLI tests; recreated once per process.
const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "coherence_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& contents) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << contents;
  return path.string();
}

std::string rho1_path() {
  static const std::string path = write_file(
      "rho1.state",
      R"({"dim": 2, "matrix": [[[0.8, 0], [0.4, 0]], [[0.4, 0], [0.2, 0]]]})");
  return path;
}

std::string rho2_path() {
  static const std::string path = [] {
    const double s = 1.0 / std::sqrt(6.0);
    ComplexMatrix m(2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(0, 1) = s;
    m(1, 0) = s;
    return write_file("rho2.state", state_to_json(validate_density(m)));
  }();
  return path;
}

}  // namespace

TEST_CASE("cli measure prints all three measures for a qubit file") {
  const CliResult r = run_cli("measure " + rho1_path());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("C_l1 = 0.800000") != std::string::npos);
  CHECK(r.output.find("C_r  = 0.721928") != std::string::npos);
  CHECK(r.output.find("C_f  = 0.721928") != std::string::npos);
}

TEST_CASE("cli measure on a maximally coherent qutrit file") {
  const std::string path = write_file("maxcoh3.state", state_to_json(maximally_coherent(3)));
  const CliResult r = run_cli("measure " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("C_l1 = 2.000000") != std::string::npos);
  CHECK(r.output.find("C_r  = 1.584963") != std::string::npos);
  CHECK(r.output.find("C_f  = 1.584963") != std::string::npos);
}

TEST_CASE("cli measure marks formation undefined on mixed d >= 3") {
  const std::string path = write_file(
      "mixed3.state",
      R"({"dim": 3, "matrix": [[[0.5, 0], [0.1, 0], [0, 0]],
                               [[0.1, 0], [0.3, 0], [0, 0]],
                               [[0, 0], [0, 0], [0.2, 0]]]})");
  const CliResult r = run_cli("measure " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("C_f  = undefined") != std::string::npos);
}

TEST_CASE("cli measure accepts the bloch shorthand") {
  const CliResult r = run_cli("measure --bloch 0.8,0.6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("C_l1 = 0.800000") != std::string::npos);
  CHECK(r.output.find("C_r  = 0.721928") != std::string::npos);
}

TEST_CASE("cli classify exit codes encode the verdict") {
  const CliResult diff =
      run_cli("classify " + rho1_path() + " " + rho2_path() + " --measures l1,relent");
  CHECK(diff.exit_code == 10);
  CHECK(diff.output.find("l1: 0.800000 < 0.816497") != std::string::npos);
  CHECK(diff.output.find("relent: 0.721928 > 0.557710") != std::string::npos);
  CHECK(diff.output.find("verdict: ordering-different") != std::string::npos);

  const CliResult tie = run_cli("classify " + rho1_path() + " " + rho1_path());
  CHECK(tie.exit_code == 11);
  CHECK(tie.output.find("verdict: tie-at-tolerance") != std::string::npos);

  const CliResult same = run_cli("classify --bloch1 0.3,0.1 --bloch2 0.5,0.1");
  CHECK(same.exit_code == 0);
  CHECK(same.output.find("verdict: same-order") != std::string::npos);
}

TEST_CASE("cli feasible reports both endpoints") {
  const CliResult no = run_cli("feasible --t1 0.6 --t2 0.8");
  CHECK(no.exit_code == 0);
  CHECK(no.output.find("feasible: false") != std::string::npos);

  const CliResult yes = run_cli("feasible --t1 0.8 --t2 0.81649658");
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.find("feasible: true") != std::string::npos);
}

TEST_CASE("cli scan writes a parseable CSV") {
  const std::string out = (scratch_dir() / "scan.csv").string();
  const CliResult r =
      run_cli("scan --t1 0.8 --t2 0.81649658092772603 --n1 21 --n2 21 --out " + out);
  CHECK(r.exit_code == 0);

  std::ifstream in(out);
  REQUIRE(in.good());
  const ScanGrid grid = parse_scan_csv(in);
  CHECK(grid.z1_axis.size() == 21);
  CHECK(grid.z2_axis.size() == 21);
  // Corner value from the reference pair.
  CHECK(grid.delta_cr[20][0] == doctest::Approx(0.164218).epsilon(1e-5));
}

TEST_CASE("cli witness prints the pair or NONE") {
  const CliResult yes = run_cli("witness --t1 0.8 --t2 0.81649658092772603");
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.find("z1 = 0.600000") != std::string::npos);
  CHECK(yes.output.find("z2 = 0.000000") != std::string::npos);

  const CliResult no = run_cli("witness --t1 0.6 --t2 0.8");
  CHECK(no.exit_code == 0);
  CHECK(no.output.find("NONE") != std::string::npos);
}

TEST_CASE("cli lift prints the pair and keeps the disagreement") {
  const CliResult r = run_cli("lift --d 4 --alpha 0.70710678118654752");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verdict (l1, relent): ordering-different") != std::string::npos);
  CHECK(r.output.find("phi1") != std::string::npos);
  CHECK(r.output.find("C_r:") != std::string::npos);
}

TEST_CASE("cli embed prints halved measure values") {
  const CliResult r = run_cli("embed --d 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("C_l1: 0.400000 vs 0.408248") != std::string::npos);
  CHECK(r.output.find("C_r:  0.360964 vs 0.278855") != std::string::npos);
  CHECK(r.output.find("verdict (l1, relent): ordering-different") != std::string::npos);
}

TEST_CASE("cli postulates runs a small campaign") {
  const CliResult r = run_cli("postulates --dim 2 --trials 5 --seed 11");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0, C1, l1, 2, pass") != std::string::npos);
  CHECK(r.output.find("50/50 checks passed") != std::string::npos);
}

TEST_CASE("cli reproduce passes every published value") {
  const CliResult r = run_cli("reproduce");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
  CHECK(r.output.find("checks passed") != std::string::npos);
}

TEST_CASE("cli error channels: usage 2, file 3, domain 4") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("feasible --t1 0.5").exit_code == 2);  // missing required option
  CHECK(run_cli("measure /does/not/exist.state").exit_code == 3);

  const std::string bad = write_file("bad.state", "{ not json");
  CHECK(run_cli("measure " + bad).exit_code == 3);

  const std::string unphysical = write_file(
      "unphysical.state", R"({"dim": 2, "matrix": [[[1,0],[0,0]],[[0,0],[0.1,0]]]})");
  CHECK(run_cli("measure " + unphysical).exit_code == 3);

  CHECK(run_cli("feasible --t1 0.9 --t2 0.5").exit_code == 4);
  CHECK(run_cli("measure --bloch 0.9,0.9").exit_code == 4);
}
