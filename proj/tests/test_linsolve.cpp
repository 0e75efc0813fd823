#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_helpers.hpp"
#include "xxz/kernels.hpp"
#include "xxz/linsolve.hpp"
#include "xxz/special.hpp"

using namespace xxz;
constexpr double kPi = std::numbers::pi;

namespace {
const Driving kUnit = [](std::complex<double>) { return std::complex<double>(1.0, 0.0); };
}

TEST_CASE("grid construction") {
  const QuadratureGrid grid = build_grid(1.5, 32);
  CHECK(grid.size() == 32);
  CHECK(grid.weights.sum() == doctest::Approx(3.0).epsilon(1e-14));
  for (int i = 0; i < 16; ++i) {
    CHECK(grid.nodes[i] == doctest::Approx(-grid.nodes[31 - i]).epsilon(1e-15));
    CHECK(grid.nodes[i] < grid.nodes[i + 1]);
  }
  CHECK(build_grid(0.0, 8).weights.norm() == 0.0);
  CHECK_THROWS_AS(build_grid(-1.0, 8), std::domain_error);
  CHECK_THROWS_AS(build_grid(1.0, 0), std::invalid_argument);
}

TEST_CASE("free-fermion and empty-domain degenerations") {
  const DiscreteSolution ff = solve_lie(build_grid(1.0, 24), kPi / 2.0, kUnit);
  CHECK((ff.values.array() - 1.0).abs().maxCoeff() < 1e-14);
  const DiscreteSolution empty = solve_lie(build_grid(0.0, 24), 1.0, kUnit);
  CHECK((empty.values.array() - 1.0).abs().maxCoeff() < 1e-14);
}

TEST_CASE("solution properties and extension") {
  const DiscreteSolution sol = solve_lie(build_grid(1.0, 64), kPi / 3.0, kUnit);
  // even driving gives an even solution
  for (int i = 0; i < 32; ++i)
    CHECK(sol.values[i] == doctest::Approx(sol.values[63 - i]).epsilon(1e-12));
  // extension reproduces node values and satisfies the equation off-grid
  CHECK(nystrom_extend(sol, sol.grid.nodes[10]) ==
        doctest::Approx(sol.values[10]).epsilon(1e-13));
  const double l = 0.37;
  const double conv = oracle::integrate(
      [&](double mu) { return kernel_K(l - mu, sol.gamma) * nystrom_extend(sol, mu); }, -1.0,
      1.0);
  CHECK(nystrom_extend(sol, l) + conv == doctest::Approx(1.0).epsilon(1e-11));
  // analytic derivative of the extension
  const double fd = oracle::central_diff([&](double x) { return nystrom_extend(sol, x); }, 0.6);
  CHECK(nystrom_extend_prime(sol, 0.6, [](double) { return 0.0; }) ==
        doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("Neumann series oracle") {
  const QuadratureGrid grid = build_grid(1.0, 64);
  const DiscreteSolution direct = solve_lie(grid, kPi / 3.0, kUnit);
  const DiscreteSolution series = neumann_oracle(kPi / 3.0, grid, kUnit, 60);
  CHECK((direct.values - series.values).lpNorm<Eigen::Infinity>() < 1e-10);
}

TEST_CASE("resolvent table") {
  const QuadratureGrid grid = build_grid(1.0, 48);
  const ResolventTable low = resolvent(grid, kPi / 3.0);
  CHECK((low.entries - low.entries.transpose()).lpNorm<Eigen::Infinity>() < 1e-12);
  // resolvent bounds: above R_infinite below pi/2, pinched against zero above
  const ResolventTable high = resolvent(grid, 2.0 * kPi / 3.0);
  for (int i = 0; i < 48; i += 5)
    for (int j = 0; j < 48; j += 5) {
      const double d = grid.nodes[i] - grid.nodes[j];
      CHECK(low.entries(i, j) > R_infinite(d, kPi / 3.0));
      CHECK(high.entries(i, j) < 0.0);
      CHECK(high.entries(i, j) > R_infinite(d, 2.0 * kPi / 3.0));
    }
  // free fermion: identically zero
  CHECK(resolvent(grid, kPi / 2.0).entries.lpNorm<Eigen::Infinity>() < 1e-15);
}

TEST_CASE("resolvent solves the lie equation") {
  const QuadratureGrid grid = build_grid(1.0, 48);
  const double g = 0.9;
  const ResolventTable table = resolvent(grid, g);
  // f = g - R_Q g reproduces the direct solve for a non-trivial driving
  const Driving drive = [](std::complex<double> z) { return std::exp(-z * z); };
  const DiscreteSolution direct = solve_lie(grid, g, drive);
  for (int i = 0; i < 48; i += 7) {
    double acc = std::exp(-grid.nodes[i] * grid.nodes[i]);
    for (int j = 0; j < 48; ++j)
      acc -= grid.weights[j] * table.entries(i, j) *
             std::exp(-grid.nodes[j] * grid.nodes[j]);
    CHECK(acc == doctest::Approx(direct.values[i]).epsilon(1e-12));
  }
  // off-grid extension stays symmetric
  CHECK(resolvent_extend(table, 0.31, -0.77) ==
        doctest::Approx(resolvent_extend(table, -0.77, 0.31)).epsilon(1e-12));
}

TEST_CASE("odd-reflection comparison of the resolvent") {
  const QuadratureGrid grid = build_grid(1.0, 48);
  for (double g : {kPi / 3.0, 2.0 * kPi / 3.0}) {
    const ResolventTable table = resolvent(grid, g);
    const double sign = g < kPi / 2.0 ? 1.0 : -1.0;
    for (int i = 25; i < 48; i += 4)
      for (int j = 25; j < 48; j += 4) {
        const double diff =
            resolvent_extend(table, grid.nodes[i], grid.nodes[j]) -
            resolvent_extend(table, grid.nodes[i], -grid.nodes[j]);
        CHECK(sign * diff > 0.0);
      }
  }
}
