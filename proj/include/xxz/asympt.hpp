#pragma once

#include "xxz/kernels.hpp"

namespace xxz {

/// Decay exponent min{ 2 pi/(pi-gamma), pi/gamma }: the imaginary part of the zero of
/// 1 + F[K] closest to the real axis.
double epsilon_gamma(double gamma);

/// Large-Q limit of the dressed charge at the endpoint: Z(Q|Q) -> sqrt(pi/(2(pi-gamma))).
double asympt_Z_at_Q(double gamma);

/// Amplitude of the leading large-Q term of rho(Q|Q):
/// sqrt(2/gamma) (1-gamma/pi)^{pi/2gamma} Gamma(1+pi/2gamma) / Gamma((1+pi/gamma)/2).
/// Valid for gamma > pi/5; throws std::domain_error below.
double asympt_rho_amplitude(double gamma);

/// Leading large-Q value amplitude * exp(-pi Q/gamma).
double asympt_rho_at_Q(double gamma, double Q);

/// The same leading value through the Wiener-Hopf factor: exp(-pi Q/gamma) alpha(-i pi/gamma)/gamma.
double asympt_rho_at_Q_alpha(double gamma, double Q);

/// Leading-order small-h Fermi rapidity from
/// exp(pi Q_F/gamma) = (8 pi J sin(gamma)/(sqrt(gamma) h)) (1-gamma/pi)^{(pi+gamma)/2gamma}
///                     Gamma(1+pi/2gamma)/Gamma((1+pi/gamma)/2).
double asympt_fermi_rapidity(const ModelParams& params);

/// Cross-check form of the same rapidity with the amplitude written in terms of alpha.
double asympt_fermi_rapidity_alpha(const ModelParams& params);

}  // namespace xxz
