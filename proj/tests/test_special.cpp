#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracle_helpers.hpp"
#include "xxz/kernels.hpp"
#include "xxz/special.hpp"

using namespace xxz;
using std::complex;
constexpr double kPi = std::numbers::pi;

TEST_CASE("infinite-interval resolvent kernel") {
  CHECK(R_infinite(1.2, kPi / 4.0) == doctest::Approx(0.028745035342592662).epsilon(1e-12));
  CHECK(R_infinite(0.5, 0.4 * kPi) == doctest::Approx(0.068969031801346324).epsilon(1e-12));
  CHECK(R_infinite(0.9, kPi / 2.0) == doctest::Approx(0.0));
  CHECK(R_infinite(-1.7, 1.1) == doctest::Approx(R_infinite(1.7, 1.1)).epsilon(1e-13));
  // normalization: integral over the line is (pi-2gamma)/(2(pi-gamma)); 1/4 at pi/3
  const double norm =
      oracle::integrate([](double l) { return R_infinite(l, kPi / 3.0); }, -40.0, 40.0, 1e-11);
  CHECK(norm == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("Fourier and convolution representations agree") {
  for (double g : {0.5, kPi / 4.0, 1.3})
    for (double l : {0.0, 0.8, 3.0})
      CHECK(R_infinite(l, g) == doctest::Approx(R_convolution(l, g)).epsilon(1e-10));
  CHECK_THROWS_AS(R_convolution(0.5, 2.0), std::domain_error);
}

TEST_CASE("G via Fourier transform and via the gamma-shift identity") {
  for (double g : {0.4, kPi / 4.0, 1.2})
    for (double l : {0.0, 1.1, 2.6})
      CHECK(G_function(l, g) == doctest::Approx(G_identity(l, g)).epsilon(1e-10));
  CHECK(G_function(0.7, kPi / 4.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(G_function(0.0, kPi / 2.0), std::domain_error);
}

TEST_CASE("shifted anisotropy parameters") {
  CHECK(gamma_double_prime(kPi / 4.0) == doctest::Approx(kPi / 2.0).epsilon(1e-14));
  CHECK(gamma_double_prime(2.0 * kPi / 5.0) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(gamma_prime(kPi / 3.0) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
  CHECK(gamma_triple_prime(kPi / 3.0) == doctest::Approx(kPi / 2.0).epsilon(1e-14));
}

TEST_CASE("complex log gamma") {
  const auto v = log_gamma({1.0, 2.0});
  CHECK(v.real() == doctest::Approx(-1.8760787864309293).epsilon(1e-13));
  CHECK(v.imag() == doctest::Approx(0.12964631630978831).epsilon(1e-13));
  CHECK(log_gamma({5.5, 0.0}).real() == doctest::Approx(std::lgamma(5.5)).epsilon(1e-14));
  // recurrence through the reflection region
  for (complex<double> z : {complex<double>{-1.3, 0.8}, {0.2, -2.0}}) {
    const auto lhs = std::exp(log_gamma(z + 1.0));
    const auto rhs = z * std::exp(log_gamma(z));
    CHECK(std::abs(lhs - rhs) < 1e-13 * std::abs(rhs));
  }
  CHECK_THROWS_AS(log_gamma({0.0, 0.0}), pole_error);
  CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), pole_error);
}

TEST_CASE("Wiener-Hopf factor") {
  // trivial at the free-fermion point
  CHECK(std::abs(alpha({0.0, -2.0}, kPi / 2.0).value - 1.0) < 1e-13);
  // boundary value at the origin
  const double ap0 = alpha_plus(0.0, kPi / 3.0).value.real();
  CHECK(ap0 * ap0 == doctest::Approx(0.75).epsilon(1e-13));
  // reciprocal identity across the two half-planes
  for (double g : {0.7, kPi / 3.0, 2.1}) {
    const complex<double> l{0.8, 0.6};
    CHECK(std::abs(alpha(l, g).value * alpha(-l, g).value - 1.0) < 1e-12);
    CHECK(alpha(l, g).half_plane == HalfPlane::upper);
    CHECK(alpha(-l, g).half_plane == HalfPlane::lower);
  }
  // factorization jump alpha_plus (1 + F[K]) = alpha_minus on the real line
  for (double xi : {0.0, 0.9, 3.1}) {
    const double g = kPi / 3.0;
    const auto lhs = alpha_plus(xi, g).value * one_plus_fourier_K(xi, g);
    CHECK(std::abs(lhs - alpha_minus(xi, g).value) < 1e-12);
  }
}
