#include <doctest.h>

#include <cmath>
#include <numbers>

#include "xxz/bank.hpp"

using namespace xxz;
constexpr double kPi = std::numbers::pi;

TEST_CASE("tail estimates") {
  const TailEstimates est = tail_estimates(kPi / 4.0, 1.0);
  CHECK(est.est_low_gamma == doctest::Approx(-1.0 / 6.0).epsilon(1e-14));
  CHECK(est.est_high_gamma == doctest::Approx(-1.0 / 6.0).epsilon(1e-14));
  // small-gamma limit of the first estimate
  CHECK(tail_estimates(1e-6, 1.0).est_low_gamma == doctest::Approx(-0.25).epsilon(1e-5));
  CHECK_THROWS_AS(tail_estimates(kPi / 2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(tail_estimates(2.0, 1.0), std::domain_error);
}

TEST_CASE("omega bound and far field") {
  const ModelParams p{kPi / 6.0, 1.0, 0.2};
  const FermiPoint fp = solve_fermi_rapidity(p);
  OmegaEvaluator ev(fp, 20.0);

  CHECK(ev(0.0) > p.h / 4.0);
  CHECK(ev(-3.7) == doctest::Approx(ev(3.7)).epsilon(1e-10));
  // far from the Fermi zone omega settles at h
  CHECK(ev(20.0) == doctest::Approx(p.h).epsilon(0.1));
  CHECK(ev(20.0) > p.h / 2.0);
  // the tail term respects its closed-form lower estimate
  const TailEstimates est = tail_estimates(p.gamma, p.h);
  const double bound = std::min(est.est_low_gamma, est.est_high_gamma);
  for (double l : {0.0, 1.0, 6.0, 15.0}) CHECK(0.5 * ev.tail_integral(l) >= bound);
  // inside the Fermi zone the eps_c term switches off
  CHECK(ev.eps_c(0.5 * fp.QF) == 0.0);
  CHECK(ev.eps_c(fp.QF + 0.5) > 0.0);
}

TEST_CASE("omega is continuous across the sign change of G") {
  const double h = 0.3;
  double vals[2];
  int k = 0;
  for (double g : {kPi / 4.0 - 1e-3, kPi / 4.0 + 1e-3}) {
    const FermiPoint fp = solve_fermi_rapidity(ModelParams{g, 1.0, h});
    vals[k++] = omega(1.0, fp);
  }
  CHECK(std::abs(vals[0] - vals[1]) < 1e-2 * h);
}

TEST_CASE("evaluator input validation") {
  const ModelParams p{kPi / 6.0, 1.0, 0.2};
  FermiPoint fp = solve_fermi_rapidity(p);
  FermiPoint bad = fp;
  bad.residual = 1.0;
  CHECK_THROWS_AS(OmegaEvaluator(bad, 5.0), std::invalid_argument);
  const FermiPoint high = solve_fermi_rapidity(ModelParams{2.0, 1.0, 0.2});
  CHECK_THROWS_AS(OmegaEvaluator(high, 5.0), std::domain_error);
  OmegaEvaluator ev(fp, 5.0);
  CHECK_THROWS_AS(ev(9.0), std::domain_error);
}

TEST_CASE("profile helper") {
  const ModelParams p{kPi / 4.0, 1.0, 0.3};
  const FermiPoint fp = solve_fermi_rapidity(p);
  Eigen::VectorXd grid(5);
  grid << -4.0, -1.0, 0.0, 1.0, 4.0;
  const BankProfile prof = bank_profile(fp, grid);
  CHECK(prof.floor == doctest::Approx(p.h / 4.0));
  for (int i = 0; i < 5; ++i) CHECK(prof.omega[i] > prof.floor);
  CHECK(prof.omega[1] == doctest::Approx(prof.omega[3]).epsilon(1e-10));
}
