#include "xxz/special.hpp"

#include <cmath>
#include <numbers>

#include "xxz/kernels.hpp"
#include "xxz/quadrature.hpp"

namespace xxz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> kI{0.0, 1.0};

void check_gamma(double gamma, double hi, const char* who) {
  if (!(gamma > 0.0 && gamma < hi))
    throw std::domain_error(std::string(who) + ": gamma outside the supported range");
}

// sinh(a k) / (cosh(c k) sinh(b k)) with b > 0, c >= 0; limit a/b at k = 0.
// Written so that no intermediate overflows for large k.
double fourier_factor(double a, double b, double c, double k) {
  k = std::abs(k);  // even in k
  const double u = std::abs(a) * k, v = b * k, w = c * k;
  if (k < 1e-4) {
    const double u2 = a * a * k * k, v2 = v * v, w2 = w * w;
    return (a / b) * (1.0 + u2 / 6.0 + u2 * u2 / 120.0) /
           ((1.0 + v2 / 6.0 + v2 * v2 / 120.0) * (1.0 + w2 / 2.0 + w2 * w2 / 24.0));
  }
  const double sign = a < 0 ? -1.0 : 1.0;
  if (std::max({u, v, w}) < 30.0)
    return std::sinh(a * k) / (std::cosh(w) * std::sinh(v));
  return sign * 2.0 * std::exp(u - v - w) * (-std::expm1(-2.0 * u)) /
         ((-std::expm1(-2.0 * v)) * (1.0 + std::exp(-2.0 * w)));
}

double sech_safe(double x) {
  x = std::abs(x);
  return x > 700.0 ? 0.0 : 1.0 / std::cosh(x);
}

}  // namespace

double gamma_prime(double gamma) { return (gamma / 2.0) / (1.0 - gamma / kPi); }
double gamma_double_prime(double gamma) { return (1.5 * gamma) / (1.0 - gamma / kPi); }
double gamma_triple_prime(double gamma) { return gamma / (1.0 - gamma / kPi); }

double R_infinite(double lambda, double gamma) {
  check_gamma(gamma, kPi, "R_infinite");
  const double a = kPi / 2.0 - gamma, b = kPi / 2.0 - gamma / 2.0, c = gamma / 2.0;
  if (a == 0.0) return 0.0;  // free-fermion point
  const double decay = b + c - std::abs(a);  // = min(gamma, pi - gamma)
  auto phi = [=](double k) { return fourier_factor(a, b, c, k); };
  return cosine_transform(phi, lambda, decay) / (2.0 * kPi);
}

double R_convolution(double lambda, double gamma) {
  check_gamma(gamma, kPi / 2.0, "R_convolution");
  const double r = 1.0 - gamma / kPi;
  const double gp = gamma_prime(gamma);
  lambda = std::abs(lambda);
  auto f = [&](double mu) {
    return kernel_K(mu / r, gp) * sech_safe(kPi * (lambda - mu) / gamma);
  };
  const double width = std::min(0.35, gamma / 3.0);
  return kPi / (2.0 * gamma * (kPi - gamma)) * integrate(f, -20.0, lambda + 20.0, width, 10);
}

double G_function(double lambda, double gamma) {
  check_gamma(gamma, kPi / 2.0, "G_function");
  const double a = kPi / 2.0 - 2.0 * gamma, b = kPi / 2.0 - gamma / 2.0, c = gamma / 2.0;
  if (a == 0.0) return 0.0;  // gamma = pi/4
  const double decay = b + c - std::abs(a);  // = min(2 gamma, pi - 2 gamma)
  auto phi = [=](double k) { return fourier_factor(a, b, c, k); };
  return cosine_transform(phi, lambda, decay) / (2.0 * kPi);
}

double G_identity(double lambda, double gamma) {
  check_gamma(gamma, kPi / 2.0, "G_identity");
  const double r = 1.0 - gamma / kPi;
  return kernel_K(lambda * kPi / (kPi - gamma), gamma_triple_prime(gamma)) / r -
         R_infinite(lambda, gamma);
}

namespace {

// Lanczos approximation, g = 7, 9-term series; ~1e-14 relative accuracy.
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

std::complex<double> log_gamma_core(std::complex<double> z) {
  z -= 1.0;
  std::complex<double> x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const std::complex<double> t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (std::abs(z.imag()) < 1e-13) {
    const double n = std::round(z.real());
    if (n <= 0.0 && std::abs(z.real() - n) < 1e-12)
      throw pole_error("log_gamma: pole at a non-positive integer");
  }
  if (z.real() >= 0.5) return log_gamma_core(z);
  // Reflection. Principal for the moderate imaginary parts this library needs.
  return std::log(kPi / std::sin(kPi * z)) - log_gamma_core(1.0 - z);
}

namespace {

std::complex<double> alpha_lower_formula(std::complex<double> lam, double gamma) {
  const double r = 1.0 - gamma / kPi;
  const std::complex<double> il = kI * lam;
  const std::complex<double> logval =
      0.5 * std::log(2.0 * (kPi - gamma)) + il * 0.5 * r * std::log(r) +
      il * (gamma / (2.0 * kPi)) * std::log(gamma / kPi) + log_gamma(1.0 + 0.5 * il) -
      log_gamma(0.5 * (1.0 + il * gamma / kPi)) - log_gamma(1.0 + 0.5 * il * r);
  return std::exp(logval);
}

}  // namespace

AlphaValue alpha(std::complex<double> lambda, double gamma) {
  check_gamma(gamma, kPi, "alpha");
  if (lambda.imag() < 0.0) return {lambda, alpha_lower_formula(lambda, gamma), HalfPlane::lower};
  if (lambda.imag() > 0.0)
    return {lambda, 1.0 / alpha_lower_formula(-lambda, gamma), HalfPlane::upper};
  return {lambda, alpha_lower_formula(lambda, gamma), HalfPlane::boundary_from_lower};
}

AlphaValue alpha_plus(double xi, double gamma) {
  check_gamma(gamma, kPi, "alpha_plus");
  return {xi, 1.0 / alpha_lower_formula(-xi, gamma), HalfPlane::boundary_from_upper};
}

AlphaValue alpha_minus(double xi, double gamma) {
  check_gamma(gamma, kPi, "alpha_minus");
  return {xi, alpha_lower_formula(xi, gamma), HalfPlane::boundary_from_lower};
}

}  // namespace xxz
