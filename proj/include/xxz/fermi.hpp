#pragma once

#include "xxz/kernels.hpp"

namespace xxz {

/// Solved Fermi point: Q_F with eps(Q_F|Q_F) = 0, plus the derived constants
/// Z_F = Z(Q_F|Q_F), p_F = p(Q_F|Q_F) and the Fermi velocity. `residual` is the
/// value of eps(Q_F|Q_F) actually achieved. At or above the saturation field
/// h >= 4J(1+cos gamma) the chain is fully polarized and Q_F = 0 is returned
/// with `polarized` set.
struct FermiPoint {
  ModelParams params;
  double QF = 0.0;
  double ZF = 1.0;
  double pF = 0.0;
  double vF = 0.0;
  double residual = 0.0;
  bool polarized = false;
};

/// Unique Q with int_{-Q}^{Q} rho(lambda|Q) dlambda = m, for m in [0, 1/2).
/// Bisection plus secant polish on the strictly increasing filling map; the residual
/// of the defining equation at the returned root is below 1e-11.
/// Throws std::domain_error at m = 1/2 (infinite rapidity) and outside [0, 1/2].
double solve_magnetic_rapidity(double gamma, double m, int n = 128);

/// Unique Q_F > 0 with eps(Q_F|Q_F) = 0, bracketed by the closed-form endpoints
/// q_tilde and q0. Each bracket step re-solves the integral equation; the root is
/// polished on a doubled grid to confirm grid independence.
FermiPoint solve_fermi_rapidity(const ModelParams& params, int n = 128);

}  // namespace xxz
