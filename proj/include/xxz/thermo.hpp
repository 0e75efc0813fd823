#pragma once

#include <vector>

#include "xxz/kernels.hpp"
#include "xxz/linsolve.hpp"

namespace xxz {

/// Dressed charge: solution of (I + K) Z = 1 on [-Q,Q].
DiscreteSolution dressed_charge(double gamma, double Q, int n);

/// Density of Bethe roots: solution of (I + K) rho = K(.|gamma/2) on [-Q,Q].
DiscreteSolution root_density(double gamma, double Q, int n);

/// Dressed energy: solution of (I + K) eps = eps0 on [-Q,Q].
DiscreteSolution dressed_energy(const ModelParams& params, double Q, int n);

/// Dressed momentum p(lambda|Q) = 2 pi * int_0^lambda rho(mu|Q) dmu, evaluated by
/// composite quadrature on the Nystrom extension of rho. Odd and strictly increasing.
double dressed_momentum(const DiscreteSolution& rho, double lambda);

/// Average magnetization <sigma^z> = 1 - 2 int Z(lambda|Q) K(lambda|gamma/2) dlambda.
double magnetization(double gamma, double Q, int n);

/// The same quantity through 1 - 2 int rho; equal to magnetization by resolvent symmetry.
double magnetization_rho_form(double gamma, double Q, int n);

/// Fermi velocity v_F = d_lambda eps(Q_F|Q_F) / d_lambda p(Q_F|Q_F), the denominator
/// computed as 2 pi rho(Q_F|Q_F). The caller supplies a solved Fermi rapidity.
double fermi_velocity(const ModelParams& params, double QF, int n = 128);

/// Low-lying excitation energy (2 pi/L) v_F [ (l Z)^2 + (s/(2Z))^2 + n ].
double low_lying_energy(double ZF, double vF, long L, int ell, int s, int n);

/// Particle-hole excitation energy sum eps(lambda_p) - sum eps(lambda_h). Particle
/// rapidities must lie outside [-Q,Q] of the supplied solution, holes inside.
double excitation_energy(const DiscreteSolution& eps, const std::vector<double>& particles,
                         const std::vector<double>& holes);

/// The four dressed functions at common (params, Q).
struct DressedSet {
  ModelParams params;
  QuadratureGrid grid;
  DiscreteSolution Z;
  DiscreteSolution rho;
  DiscreteSolution eps;

  double momentum(double lambda) const { return dressed_momentum(rho, lambda); }
};

DressedSet dressed_set(const ModelParams& params, double Q, int n);

}  // namespace xxz
