#include "xxz/kernels.hpp"

#include <cmath>
#include <numbers>

namespace xxz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleFloor = 1e-12;
constexpr std::complex<double> kI{0.0, 1.0};

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < kPi))
    throw std::domain_error("gamma must lie in the open interval (0, pi)");
}

// sinh(a k)/sinh(b k), b > 0, with the removable limit a/b at k = 0 handled by series.
double sinh_ratio(double a, double b, double k) {
  const double ak = std::abs(a * k), bk = std::abs(b * k);
  if (std::abs(k) < 1e-4) {
    const double a2 = ak * ak, b2 = bk * bk;
    return (a / b) * (1.0 + a2 / 6.0 + a2 * a2 / 120.0) / (1.0 + b2 / 6.0 + b2 * b2 / 120.0);
  }
  if (std::max(ak, bk) < 30.0) return std::sinh(a * k) / std::sinh(b * k);
  const double sign = (a * k < 0) == (b * k < 0) ? 1.0 : -1.0;
  return sign * std::exp(ak - bk) * (-std::expm1(-2.0 * ak)) / (-std::expm1(-2.0 * bk));
}

}  // namespace

ModelParams::ModelParams(double gamma_, double J_, double h_) : gamma(gamma_), J(J_), h(h_) {
  check_gamma(gamma);
  if (!(J > 0.0)) throw std::domain_error("coupling J must be positive");
  if (!(h >= 0.0)) throw std::domain_error("field h must be non-negative");
}

double ModelParams::delta() const { return std::cos(gamma); }

double kernel_K(double lambda, double gamma) {
  check_gamma(gamma);
  const double sh = std::sinh(lambda), sg = std::sin(gamma);
  const double den = sh * sh + sg * sg;  // = sinh(l+ig) sinh(l-ig) for real l
  if (den < kPoleFloor) throw pole_error("kernel_K: evaluation too close to a pole");
  return std::sin(2.0 * gamma) / (2.0 * kPi * den);
}

std::complex<double> kernel_K(std::complex<double> lambda, double gamma) {
  check_gamma(gamma);
  const std::complex<double> den =
      std::sinh(lambda + kI * gamma) * std::sinh(lambda - kI * gamma);
  if (std::abs(den) < kPoleFloor) throw pole_error("kernel_K: evaluation too close to a pole");
  return std::sin(2.0 * gamma) / (2.0 * kPi * den);
}

double kernel_K_prime(double lambda, double gamma) {
  const double sh = std::sinh(lambda), sg = std::sin(gamma);
  const double den = sh * sh + sg * sg;
  if (den < kPoleFloor) throw pole_error("kernel_K_prime: evaluation too close to a pole");
  return -kernel_K(lambda, gamma) * std::sinh(2.0 * lambda) / den;
}

double fourier_K(double k, double gamma) {
  check_gamma(gamma);
  return sinh_ratio(kPi / 2.0 - gamma, kPi / 2.0, k);
}

double one_plus_fourier_K(double k, double gamma) {
  check_gamma(gamma);
  const double ck = gamma * k / 2.0;
  if (std::abs(ck) < 350.0)
    return 2.0 * std::cosh(ck) * sinh_ratio((kPi - gamma) / 2.0, kPi / 2.0, k);
  // cosh would overflow; fold it into the exponential form of the ratio.
  return (1.0 + std::exp(-2.0 * std::abs(ck))) * std::exp(std::abs(ck)) *
         sinh_ratio((kPi - gamma) / 2.0, kPi / 2.0, k);
}

double bare_energy(double lambda, const ModelParams& p) {
  return p.h - 4.0 * kPi * p.J * std::sin(p.gamma) * kernel_K(lambda, p.gamma / 2.0);
}

std::complex<double> bare_energy(std::complex<double> lambda, const ModelParams& p) {
  return p.h - 4.0 * kPi * p.J * std::sin(p.gamma) * kernel_K(lambda, p.gamma / 2.0);
}

double bare_energy_prime(double lambda, const ModelParams& p) {
  return -4.0 * kPi * p.J * std::sin(p.gamma) * kernel_K_prime(lambda, p.gamma / 2.0);
}

namespace {

// i ln[ sinh(i c + lambda)/sinh(i c - lambda) ] on the odd continuous branch vanishing
// at 0. For real lambda the ratio is z/(-conj z) with z = cos(c) sinh(l) + i sin(c) cosh(l),
// which stays in the open upper half-plane, so pi - 2 arg(z) is continuous.
double odd_log_branch(double lambda, double c) {
  return kPi - 2.0 * std::atan2(std::sin(c) * std::cosh(lambda), std::cos(c) * std::sinh(lambda));
}

}  // namespace

double bare_momentum(double lambda, double gamma) {
  check_gamma(gamma);
  return odd_log_branch(lambda, gamma / 2.0);
}

double bare_phase(double lambda, double gamma) {
  check_gamma(gamma);
  return odd_log_branch(lambda, gamma);
}

ClosedForms::ClosedForms(const ModelParams& params) : params_(params) {}

double ClosedForms::rho_inf(double lambda) const {
  const double g = params_.gamma;
  return 1.0 / (2.0 * g * std::cosh(kPi * lambda / g));
}

double ClosedForms::eps_tilde(double lambda) const {
  const double g = params_.gamma;
  return params_.h - 2.0 * kPi * params_.J * std::sin(g) / (g * std::cosh(kPi * lambda / g));
}

double ClosedForms::eps_inf(double lambda) const {
  const double g = params_.gamma;
  return params_.h * kPi / (2.0 * (kPi - g)) -
         2.0 * kPi * params_.J * std::sin(g) / (g * std::cosh(kPi * lambda / g));
}

bool ClosedForms::has_q0() const {
  return params_.h < 4.0 * params_.J * (1.0 + std::cos(params_.gamma));
}

bool ClosedForms::has_q_tilde() const {
  const double g = params_.gamma;
  return params_.h < 2.0 * kPi * params_.J * std::sin(g) / g;
}

double ClosedForms::q0() const {
  if (params_.h == 0.0) throw std::domain_error("q0: bare energy has no zero at h = 0");
  if (!has_q0()) throw std::domain_error("q0: field exceeds the saturation threshold 4J(1+cos gamma)");
  const double g = params_.gamma, sg = std::sin(g), s2 = std::sin(g / 2.0);
  return std::asinh(std::sqrt(2.0 * params_.J * sg * sg / params_.h - s2 * s2));
}

double ClosedForms::q_tilde() const {
  if (params_.h == 0.0) throw std::domain_error("q_tilde: eps_tilde has no zero at h = 0");
  if (!has_q_tilde())
    throw std::domain_error("q_tilde: field exceeds the threshold 2 pi J sin(gamma)/gamma");
  const double g = params_.gamma;
  return (g / kPi) * std::acosh(2.0 * kPi * params_.J * std::sin(g) / (g * params_.h));
}

ClosedForms closed_forms(const ModelParams& params) { return ClosedForms(params); }

}  // namespace xxz
