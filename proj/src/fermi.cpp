#include "xxz/fermi.hpp"

#include <cmath>
#include <functional>

#include "xxz/errors.hpp"
#include "xxz/thermo.hpp"

namespace xxz {

namespace {

// Bracketed root finder: secant steps clipped to the bracket, bisection fallback.
double find_root(const std::function<double(double)>& f, double lo, double hi, double flo,
                 double fhi, double ftol, double xtol) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) throw accuracy_error("find_root: endpoints do not bracket a root");
  double a = lo, b = hi, fa = flo, fb = fhi;
  double x = 0.5 * (a + b);
  int side = 0;  // Illinois: halve the retained endpoint's value to avoid stagnation
  for (int it = 0; it < 200; ++it) {
    double cand = (a * fb - b * fa) / (fb - fa);
    if (!(cand > a && cand < b)) cand = 0.5 * (a + b);
    x = cand;
    const double fx = f(x);
    if (std::abs(fx) < ftol) return x;
    if (fa * fx < 0.0) {
      b = x;
      fb = fx;
      if (side == -1) fa *= 0.5;
      side = -1;
    } else {
      a = x;
      fa = fx;
      if (side == 1) fb *= 0.5;
      side = 1;
    }
    if (b - a < xtol) return 0.5 * (a + b);
  }
  return x;
}

double filling(double gamma, double Q, int n) {
  const DiscreteSolution rho = root_density(gamma, Q, n);
  return rho.grid.weights.dot(rho.values);
}

}  // namespace

double solve_magnetic_rapidity(double gamma, double m, int n) {
  if (!(m >= 0.0 && m < 0.5))
    throw std::domain_error("solve_magnetic_rapidity: filling must lie in [0, 1/2)");
  if (m == 0.0) return 0.0;

  auto f = [&](double Q) { return filling(gamma, Q, n) - m; };
  double hi = 1.0, fhi = f(hi);
  while (fhi < 0.0) {
    if (hi > 60.0)
      throw accuracy_error("solve_magnetic_rapidity: filling saturates below the target");
    hi *= 1.8;
    fhi = f(hi);
  }
  const double Q = find_root(f, 0.0, hi, -m, fhi, 1e-12, 1e-14);
  if (std::abs(f(Q)) > 1e-11)
    throw accuracy_error("solve_magnetic_rapidity: residual above tolerance");
  return Q;
}

namespace {

double eps_at_endpoint(const ModelParams& params, double Q, int n) {
  const DiscreteSolution eps = dressed_energy(params, Q, n);
  return nystrom_extend(eps, Q);
}

}  // namespace

FermiPoint solve_fermi_rapidity(const ModelParams& params, int n) {
  if (params.h == 0.0)
    throw std::domain_error("solve_fermi_rapidity: Fermi rapidity diverges at zero field");

  const ClosedForms cf = closed_forms(params);
  FermiPoint out{params};

  if (!cf.has_q0()) {
    // At or above saturation the sea is empty.
    out.QF = 0.0;
    out.ZF = 1.0;
    out.pF = 0.0;
    out.vF = 0.0;
    out.residual = bare_energy(0.0, params);
    out.polarized = true;
    return out;
  }

  const double q0 = cf.q0();
  double lo = cf.has_q_tilde() ? std::min(cf.q_tilde(), q0) : 0.0;
  double hi = cf.has_q_tilde() ? std::max(cf.q_tilde(), q0) : q0;

  const double ftol = 1e-12 * std::max(1.0, params.h);
  double QF;
  if (hi - lo < 1e-12) {
    QF = q0;  // free-fermion point: the closed forms coincide with the root
  } else {
    auto f = [&](double Q) { return eps_at_endpoint(params, Q, n); };
    double flo = f(lo), fhi = f(hi);
    while (flo > 0.0 && lo > 1e-12) {
      lo *= 0.5;
      flo = f(lo);
    }
    if (flo > 0.0) {
      lo = 0.0;
      flo = bare_energy(0.0, params);
    }
    while (fhi < 0.0) {
      if (hi > 60.0)
        throw accuracy_error("solve_fermi_rapidity: failed to bracket the Fermi point");
      hi *= 1.5;
      fhi = f(hi);
    }
    QF = find_root(f, lo, hi, flo, fhi, ftol, 1e-14);
  }

  // Polish on a doubled grid to shed the discretization bias of the bracketing solve.
  {
    auto f2 = [&](double Q) { return eps_at_endpoint(params, Q, 2 * n); };
    double a = QF - 1e-4, b = QF + 1e-4;
    if (a < 0.0) a = 0.0;
    double fa = f2(a), fb = f2(b);
    int grow = 0;
    while (fa * fb > 0.0 && grow++ < 40) {
      a = std::max(0.0, a - 1e-3);
      b += 1e-3;
      fa = f2(a);
      fb = f2(b);
    }
    if (fa * fb <= 0.0) QF = find_root(f2, a, b, fa, fb, ftol, 1e-15);
  }

  out.QF = QF;
  out.residual = eps_at_endpoint(params, QF, 2 * n);
  const DiscreteSolution Z = dressed_charge(params.gamma, QF, n);
  out.ZF = nystrom_extend(Z, QF);
  const DiscreteSolution rho = root_density(params.gamma, QF, n);
  out.pF = dressed_momentum(rho, QF);
  out.vF = fermi_velocity(params, QF, n);
  return out;
}

}  // namespace xxz
