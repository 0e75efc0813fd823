#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef XXZ_CLI_PATH
#error "XXZ_CLI_PATH must point at the built executable"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(XXZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("solve writes a CSV profile") {
  const RunResult r = run("--n 32 solve --quantity charge --gamma 1.0471975512 --q 1.5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("lambda,value\n", 0) == 0);
  CHECK(count_lines(r.out) == 33);  // header plus one row per node
  // identical flags give byte-identical output
  const RunResult again = run("--n 32 solve --quantity charge --gamma 1.0471975512 --q 1.5");
  CHECK(r.out == again.out);
}

TEST_CASE("solve accepts --delta") {
  const RunResult a = run("--n 16 solve --quantity density --gamma 1.0471975511965979 --q 1");
  const RunResult b = run("--n 16 solve --quantity density --delta 0.5 --q 1");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("fermi emits the documented JSON object") {
  const RunResult r = run("fermi --gamma 1.0471975512 --j 1 --h 0.3");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"q_f", "z_f", "p_f", "v_f", "residual"}) CHECK(j.contains(key));
  CHECK(j["q_f"].get<double>() > 1.0);
  CHECK(j["q_f"].get<double>() < 2.0);
  CHECK(std::abs(j["residual"].get<double>()) < 1e-10);
}

TEST_CASE("magnetic emits q_m") {
  const RunResult r = run("--n 64 magnetic --gamma 1.0471975512 --m 0.25");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["q_m"].get<double>() > 0.0);
  CHECK(std::abs(j["residual"].get<double>()) < 1e-10);
}

TEST_CASE("verify runs a suite") {
  const RunResult r = run("verify --suite kernels --gamma-grid 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS kernels/") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("scan produces ordered monotone rows") {
  const RunResult r = run("--n 64 scan --gamma 1.0471975512 --h-min 0.2 --h-max 0.8 --points 4 --jobs 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("h,q_f,z_f,p_f,v_f\n", 0) == 0);
  CHECK(count_lines(r.out) == 5);
  // q_f column decreases with h
  double prev = 1e30;
  size_t pos = r.out.find('\n') + 1;
  while (pos < r.out.size()) {
    const size_t comma = r.out.find(',', pos);
    const double qf = std::stod(r.out.substr(comma + 1));
    CHECK(qf < prev);
    prev = qf;
    pos = r.out.find('\n', pos) + 1;
  }
}

TEST_CASE("exit codes") {
  CHECK(run("fermi --gamma 1.0471975512 --h 0").exit_code == 2);   // domain error
  CHECK(run("magnetic --gamma 1.0 --m 0.6").exit_code == 2);       // filling out of range
  CHECK(run("solve --q 1").exit_code == 64);                       // missing anisotropy
  CHECK(run("solve --gamma 1 --q 1 --bogus").exit_code == 64);     // unknown flag
  CHECK(run("nonsense").exit_code == 64);                          // unknown subcommand
}
