#include "xxz/thermo.hpp"

#include <cmath>
#include <numbers>

#include "xxz/quadrature.hpp"

namespace xxz {

namespace {

constexpr double kPi = std::numbers::pi;

Driving unit_driving() {
  return [](std::complex<double>) { return std::complex<double>(1.0, 0.0); };
}

Driving density_driving(double gamma) {
  return [gamma](std::complex<double> z) { return kernel_K(z, gamma / 2.0); };
}

Driving energy_driving(const ModelParams& params) {
  return [params](std::complex<double> z) { return bare_energy(z, params); };
}

}  // namespace

DiscreteSolution dressed_charge(double gamma, double Q, int n) {
  return solve_lie(build_grid(Q, n), gamma, unit_driving(), "unit");
}

DiscreteSolution root_density(double gamma, double Q, int n) {
  return solve_lie(build_grid(Q, n), gamma, density_driving(gamma), "bare_density");
}

DiscreteSolution dressed_energy(const ModelParams& params, double Q, int n) {
  return solve_lie(build_grid(Q, n), params.gamma, energy_driving(params), "bare_energy");
}

double dressed_momentum(const DiscreteSolution& rho, double lambda) {
  const double a = std::abs(lambda);
  if (a == 0.0) return 0.0;
  auto f = [&](double mu) { return nystrom_extend(rho, mu); };
  const double val = 2.0 * kPi * integrate(f, 0.0, a, 0.4, 20);
  return lambda > 0 ? val : -val;
}

double magnetization(double gamma, double Q, int n) {
  const DiscreteSolution Z = dressed_charge(gamma, Q, n);
  double acc = 0.0;
  for (int i = 0; i < Z.grid.size(); ++i)
    acc += Z.grid.weights[i] * kernel_K(Z.grid.nodes[i], gamma / 2.0) * Z.values[i];
  return 1.0 - 2.0 * acc;
}

double magnetization_rho_form(double gamma, double Q, int n) {
  const DiscreteSolution rho = root_density(gamma, Q, n);
  return 1.0 - 2.0 * rho.grid.weights.dot(rho.values);
}

double fermi_velocity(const ModelParams& params, double QF, int n) {
  if (!(QF >= 0.0)) throw std::domain_error("fermi_velocity: QF must be non-negative");
  const DiscreteSolution eps = dressed_energy(params, QF, n);
  const DiscreteSolution rho = root_density(params.gamma, QF, n);
  const double rho_at_Q = nystrom_extend(rho, QF);
  if (rho_at_Q < 1e-14)
    throw std::domain_error("fermi_velocity: vanishing density at the Fermi point");
  const double eps_prime = nystrom_extend_prime(
      eps, QF, [&](double x) { return bare_energy_prime(x, params); });
  return eps_prime / (2.0 * kPi * rho_at_Q);
}

double low_lying_energy(double ZF, double vF, long L, int ell, int s, int n) {
  if (L <= 0) throw std::invalid_argument("low_lying_energy: L must be positive");
  if (n < 0) throw std::invalid_argument("low_lying_energy: n must be non-negative");
  if (!(ZF > 0.0)) throw std::domain_error("low_lying_energy: ZF must be positive");
  const double lz = ell * ZF, sz = s / (2.0 * ZF);
  return (2.0 * kPi / static_cast<double>(L)) * vF * (lz * lz + sz * sz + n);
}

double excitation_energy(const DiscreteSolution& eps, const std::vector<double>& particles,
                         const std::vector<double>& holes) {
  const double Q = eps.grid.Q;
  double acc = 0.0;
  for (double p : particles) {
    if (std::abs(p) < Q)
      throw std::invalid_argument("excitation_energy: particle rapidity inside the Fermi sea");
    acc += nystrom_extend(eps, p);
  }
  for (double h : holes) {
    if (std::abs(h) > Q)
      throw std::invalid_argument("excitation_energy: hole rapidity outside the Fermi sea");
    acc -= nystrom_extend(eps, h);
  }
  return acc;
}

DressedSet dressed_set(const ModelParams& params, double Q, int n) {
  const QuadratureGrid grid = build_grid(Q, n);
  return DressedSet{
      params,
      grid,
      solve_lie(grid, params.gamma, unit_driving(), "unit"),
      solve_lie(grid, params.gamma, density_driving(params.gamma), "bare_density"),
      solve_lie(grid, params.gamma, energy_driving(params), "bare_energy"),
  };
}

}  // namespace xxz
