#include "xxz/asympt.hpp"

#include <cmath>
#include <numbers>

#include "xxz/special.hpp"

namespace xxz {

namespace {

constexpr double kPi = std::numbers::pi;

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < kPi))
    throw std::domain_error("gamma must lie in the open interval (0, pi)");
}

void check_regime(double gamma) {
  check_gamma(gamma);
  if (!(gamma > kPi / 5.0))
    throw std::domain_error("large-Q amplitude only valid for gamma > pi/5");
}

double gamma_ratio(double gamma) {
  // Gamma(1 + pi/2gamma) / Gamma((1 + pi/gamma)/2)
  return std::exp(std::lgamma(1.0 + kPi / (2.0 * gamma)) -
                  std::lgamma(0.5 * (1.0 + kPi / gamma)));
}

}  // namespace

double epsilon_gamma(double gamma) {
  check_gamma(gamma);
  return std::min(2.0 * kPi / (kPi - gamma), kPi / gamma);
}

double asympt_Z_at_Q(double gamma) {
  check_gamma(gamma);
  return std::sqrt(kPi / (2.0 * (kPi - gamma)));
}

double asympt_rho_amplitude(double gamma) {
  check_regime(gamma);
  return std::sqrt(2.0 / gamma) * std::pow(1.0 - gamma / kPi, kPi / (2.0 * gamma)) *
         gamma_ratio(gamma);
}

double asympt_rho_at_Q(double gamma, double Q) {
  return asympt_rho_amplitude(gamma) * std::exp(-kPi * Q / gamma);
}

double asympt_rho_at_Q_alpha(double gamma, double Q) {
  check_regime(gamma);
  const std::complex<double> a = alpha({0.0, -kPi / gamma}, gamma).value;
  return std::exp(-kPi * Q / gamma) * a.real() / gamma;
}

double asympt_fermi_rapidity(const ModelParams& params) {
  check_regime(params.gamma);
  if (!(params.h > 0.0))
    throw std::domain_error("asympt_fermi_rapidity: field must be positive");
  const double g = params.gamma;
  const double rhs = 8.0 * kPi * params.J * std::sin(g) / (std::sqrt(g) * params.h) *
                     std::pow(1.0 - g / kPi, (kPi + g) / (2.0 * g)) * gamma_ratio(g);
  if (!(rhs > 1.0))
    throw std::domain_error("asympt_fermi_rapidity: field outside the small-h regime");
  return (g / kPi) * std::log(rhs);
}

double asympt_fermi_rapidity_alpha(const ModelParams& params) {
  check_regime(params.gamma);
  if (!(params.h > 0.0))
    throw std::domain_error("asympt_fermi_rapidity_alpha: field must be positive");
  const double g = params.gamma;
  const std::complex<double> a = alpha({0.0, -kPi / g}, g).value;
  const double rhs = 8.0 * kPi * params.J * std::sin(g) / params.h *
                     std::sqrt((1.0 - g / kPi) / 2.0) * a.real() / g;
  if (!(rhs > 1.0))
    throw std::domain_error("asympt_fermi_rapidity_alpha: field outside the small-h regime");
  return (g / kPi) * std::log(rhs);
}

}  // namespace xxz
