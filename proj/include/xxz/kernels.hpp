#pragma once

#include <complex>

#include "xxz/errors.hpp"

namespace xxz {

/// Physical inputs of the chain: anisotropy gamma in (0,pi), exchange coupling J > 0,
/// magnetic field h >= 0. The anisotropy parameter Delta = cos(gamma) lies in (-1,1).
struct ModelParams {
  double gamma;
  double J;
  double h;

  ModelParams(double gamma_, double J_, double h_);
  double delta() const;
};

/// Integral kernel K(lambda|gamma) = sin(2 gamma) / (2 pi sinh(lambda+i gamma) sinh(lambda-i gamma)).
///
/// Real-valued and even for real lambda, i*pi-periodic, positive for gamma < pi/2 and
/// negative for gamma > pi/2. Throws pole_error when the denominator modulus drops
/// below 1e-12 (lambda near a pole +-i gamma + i n pi).
double kernel_K(double lambda, double gamma);
std::complex<double> kernel_K(std::complex<double> lambda, double gamma);

/// d/dlambda of kernel_K for real lambda.
double kernel_K_prime(double lambda, double gamma);

/// Fourier transform of K: sinh[(pi/2-gamma)k] / sinh(pi k/2), even in k,
/// value 1 - 2 gamma/pi at k = 0 by continuity.
double fourier_K(double k, double gamma);

/// 1 + fourier_K via the product form 2 cosh(gamma k/2) sinh[(pi-gamma)k/2] / sinh(pi k/2).
double one_plus_fourier_K(double k, double gamma);

/// Bare energy eps0(lambda) = h - 4 pi J sin(gamma) K(lambda|gamma/2); even, -> h at infinity.
double bare_energy(double lambda, const ModelParams& params);
std::complex<double> bare_energy(std::complex<double> lambda, const ModelParams& params);
double bare_energy_prime(double lambda, const ModelParams& params);

/// Bare momentum p0 and bare phase theta: odd, continuous on R, zero at the origin.
/// p0'(lambda) = 2 pi K(lambda|gamma/2).
double bare_momentum(double lambda, double gamma);
double bare_phase(double lambda, double gamma);

/// Closed forms of the infinite-interval limits and the bracket endpoints:
///   rho_inf(lambda)  = 1 / (2 gamma cosh(pi lambda/gamma))
///   eps_tilde(lambda) = h - 2 pi J sin(gamma) / (gamma cosh(pi lambda/gamma))
///   eps_inf(lambda)  = h pi/(2(pi-gamma)) - 2 pi J sin(gamma) / (gamma cosh(pi lambda/gamma))
///   q0      = positive zero of the bare energy (exists iff h < 4J(1+cos gamma))
///   q_tilde = positive zero of eps_tilde       (exists iff h < 2 pi J sin(gamma)/gamma)
class ClosedForms {
 public:
  explicit ClosedForms(const ModelParams& params);

  double rho_inf(double lambda) const;
  double eps_tilde(double lambda) const;
  double eps_inf(double lambda) const;

  bool has_q0() const;
  bool has_q_tilde() const;
  double q0() const;       // throws std::domain_error when the zero does not exist
  double q_tilde() const;  // throws std::domain_error when the zero does not exist

  const ModelParams& params() const { return params_; }

 private:
  ModelParams params_;
};

ClosedForms closed_forms(const ModelParams& params);

}  // namespace xxz
