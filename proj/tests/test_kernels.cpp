#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_helpers.hpp"
#include "xxz/kernels.hpp"

using namespace xxz;
constexpr double kPi = std::numbers::pi;

TEST_CASE("kernel values against the high-precision oracle") {
  CHECK(kernel_K(0.0, kPi / 3.0) == doctest::Approx(0.18377629847393068).epsilon(1e-14));
  CHECK(kernel_K(1.0, 2.0 * kPi / 3.0) ==
        doctest::Approx(-0.06467662859487580).epsilon(1e-14));
  CHECK(kernel_K(0.7, kPi / 2.0) == doctest::Approx(0.0));
  // complex evaluation agrees with the real path on the axis
  const std::complex<double> v = kernel_K(std::complex<double>(0.9, 0.0), 1.1);
  CHECK(v.real() == doctest::Approx(kernel_K(0.9, 1.1)).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(0.0));
}

TEST_CASE("kernel symmetry and sign regimes") {
  for (double g : {0.4, kPi / 3.0, 2.2, 2.9}) {
    CHECK(kernel_K(1.3, g) == doctest::Approx(kernel_K(-1.3, g)).epsilon(1e-15));
    const double sign = g < kPi / 2.0 ? 1.0 : -1.0;
    CHECK(sign * kernel_K(0.5, g) > 0.0);
  }
}

TEST_CASE("kernel error paths") {
  CHECK_THROWS_AS(kernel_K(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(kernel_K(1.0, kPi), std::domain_error);
  CHECK_THROWS_AS(kernel_K(std::complex<double>(0.0, 1.0), 1.0), pole_error);
  CHECK_THROWS_AS((ModelParams{1.0, -1.0, 0.5}), std::domain_error);
  CHECK_THROWS_AS((ModelParams{1.0, 1.0, -0.5}), std::domain_error);
}

TEST_CASE("kernel derivative matches finite differences") {
  for (double l : {-1.5, 0.2, 2.0})
    CHECK(kernel_K_prime(l, 1.0) ==
          doctest::Approx(oracle::central_diff([](double x) { return kernel_K(x, 1.0); }, l))
              .epsilon(1e-9));
}

TEST_CASE("Fourier transform of the kernel") {
  CHECK(fourier_K(2.0, kPi / 3.0) == doctest::Approx(0.10818211511014981).epsilon(1e-14));
  CHECK(fourier_K(0.0, 1.2) == doctest::Approx(1.0 - 2.4 / kPi).epsilon(1e-13));
  // numeric transform as an independent route
  const double num = oracle::integrate(
      [](double l) { return kernel_K(l, 0.9) * std::cos(1.4 * l); }, -25.0, 25.0);
  CHECK(fourier_K(1.4, 0.9) == doctest::Approx(num).epsilon(1e-11));
  // large arguments must not overflow
  CHECK(std::isfinite(fourier_K(900.0, 0.8)));
  CHECK(std::isfinite(one_plus_fourier_K(900.0, 0.8)));
  CHECK(one_plus_fourier_K(3.0, 0.8) ==
        doctest::Approx(1.0 + fourier_K(3.0, 0.8)).epsilon(1e-13));
}

TEST_CASE("bare energy and its derivative") {
  const ModelParams p{kPi / 3.0, 1.0, 0.5};
  CHECK(bare_energy(3.0, p) == doctest::Approx(0.48509062189295141).epsilon(1e-14));
  CHECK(bare_energy_prime(0.8, p) ==
        doctest::Approx(oracle::central_diff([&](double x) { return bare_energy(x, p); }, 0.8))
            .epsilon(1e-9));
}

TEST_CASE("bare momentum branch") {
  const double g = kPi / 3.0;
  CHECK(bare_momentum(0.0, g) == doctest::Approx(0.0));
  CHECK(bare_momentum(-1.1, g) == doctest::Approx(-bare_momentum(1.1, g)).epsilon(1e-15));
  CHECK(bare_momentum(10.0, g) == doctest::Approx(kPi - g).epsilon(1e-6));
  CHECK(bare_phase(10.0, g) == doctest::Approx(kPi - 2.0 * g).epsilon(1e-6));
  // p0' = 2 pi K(.|gamma/2)
  const double fd = oracle::central_diff([&](double x) { return bare_momentum(x, g); }, 0.7);
  CHECK(fd == doctest::Approx(2.0 * kPi * kernel_K(0.7, g / 2.0)).epsilon(1e-8));
}

TEST_CASE("closed forms and endpoint brackets") {
  const ModelParams p{kPi / 3.0, 1.0, 0.1};
  const ClosedForms cf = closed_forms(p);
  CHECK(cf.rho_inf(0.0) == doctest::Approx(3.0 / (2.0 * kPi)).epsilon(1e-14));
  CHECK(oracle::integrate([&](double l) { return cf.rho_inf(l); }, -30.0, 30.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  // the closed-form zeros really are zeros
  CHECK(bare_energy(cf.q0(), p) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cf.eps_tilde(cf.q_tilde()) == doctest::Approx(0.0).epsilon(1e-12));

  // free-fermion point: both endpoint forms coincide
  const ClosedForms ff = closed_forms(ModelParams{kPi / 2.0, 1.0, 0.7});
  CHECK(ff.q0() == doctest::Approx(ff.q_tilde()).epsilon(1e-14));

  // fields beyond the existence thresholds
  CHECK_THROWS_AS(closed_forms(ModelParams{kPi / 3.0, 1.0, 7.0}).q0(), std::domain_error);
  CHECK_THROWS_AS(closed_forms(ModelParams{kPi / 3.0, 1.0, 6.0}).q_tilde(),
                  std::domain_error);
  CHECK_THROWS_AS(closed_forms(ModelParams{1.0, 1.0, 0.0}).q0(), std::domain_error);
}
