#pragma once

#include <complex>

#include "xxz/errors.hpp"

namespace xxz {

/// Side information for boundary values of the Wiener-Hopf factor on the real axis.
enum class HalfPlane { upper, lower, boundary_from_upper, boundary_from_lower };

/// Value of the Wiener-Hopf factor alpha at a point, with the half-plane it was
/// approached from. alpha(lambda) * alpha(-lambda) = 1.
struct AlphaValue {
  std::complex<double> point;
  std::complex<double> value;
  HalfPlane half_plane;
};

/// Resolvent kernel R of I+K on the whole line, via its Fourier integral
/// representation. Even in lambda; vanishes identically at gamma = pi/2.
double R_infinite(double lambda, double gamma);

/// Same function through the convolution representation (valid for 0 < gamma < pi/2
/// only; throws std::domain_error otherwise). Positive and monotonically decreasing
/// on the positive axis; serves as an independent oracle for R_infinite.
double R_convolution(double lambda, double gamma);

/// Fourier-integral function G entering the lower bound on Re eps_+(lambda - i gamma).
/// Defined for 0 < gamma < pi/2; positive on R for gamma < pi/4, negative for gamma > pi/4.
double G_function(double lambda, double gamma);

/// G through the identity (1-gamma/pi)^{-1} K(lambda pi/(pi-gamma)|gamma''') - R(lambda),
/// gamma''' = gamma/(1-gamma/pi). Agrees with G_function to quadrature accuracy.
double G_identity(double lambda, double gamma);

/// Reparameterized anisotropies used by the convolution representations.
double gamma_prime(double gamma);         // (gamma/2)/(1-gamma/pi)
double gamma_double_prime(double gamma);  // (3 gamma/2)/(1-gamma/pi)
double gamma_triple_prime(double gamma);  // gamma/(1-gamma/pi)

/// Principal-branch log-Gamma (Lanczos). Throws pole_error at non-positive integers.
std::complex<double> log_gamma(std::complex<double> z);

/// Wiener-Hopf factor alpha. For Im(lambda) < 0 the Gamma-function formula is used
/// directly; for Im(lambda) > 0, alpha(lambda) = 1/alpha(-lambda). Real lambda is
/// treated as a boundary value from below.
AlphaValue alpha(std::complex<double> lambda, double gamma);

/// Boundary values on the real axis. They satisfy the jump relation
/// alpha_plus(xi) * (1 + F[K](xi)) = alpha_minus(xi).
AlphaValue alpha_plus(double xi, double gamma);
AlphaValue alpha_minus(double xi, double gamma);

}  // namespace xxz
