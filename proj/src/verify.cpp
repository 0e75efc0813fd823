#include "xxz/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "xxz/asympt.hpp"
#include "xxz/bank.hpp"
#include "xxz/fermi.hpp"
#include "xxz/kernels.hpp"
#include "xxz/quadrature.hpp"
#include "xxz/special.hpp"
#include "xxz/thermo.hpp"

namespace xxz {

namespace {

constexpr double kPi = std::numbers::pi;

struct Collector {
  std::vector<CheckResult> results;
  std::string suite;

  void add(const std::string& name, double metric, double tolerance) {
    results.push_back({suite, name, metric <= tolerance, metric, tolerance});
  }
};

std::vector<double> gamma_grid(int points, double hi_frac = 1.0) {
  // interior samples of (0, pi * hi_frac), avoiding the exact free-fermion point
  std::vector<double> gs;
  for (int i = 0; i < points; ++i) {
    double g = kPi * hi_frac * (i + 0.6) / (points + 0.2);
    gs.push_back(g);
  }
  return gs;
}

void check_kernels(Collector& c, int points) {
  double worst_even = 0.0, worst_norm = 0.0, worst_fourier = 0.0;
  double worst_dp = 0.0, worst_plim = 0.0;
  for (double g : gamma_grid(points)) {
    for (double l : {0.0, 0.3, 1.1, 2.7}) {
      worst_even = std::max(worst_even, std::abs(kernel_K(l, g) - kernel_K(-l, g)));
      const double fd =
          (bare_momentum(l + 5e-6, g) - bare_momentum(l - 5e-6, g)) / 1e-5;
      worst_dp = std::max(worst_dp,
                          std::abs(fd - 2.0 * kPi * kernel_K(l, g / 2.0)));
    }
    auto kf = [&](double l) { return kernel_K(l, g); };
    const double norm = integrate(kf, -20.0, 20.0, 0.35, 12);
    worst_norm = std::max(worst_norm, std::abs(norm - (1.0 - 2.0 * g / kPi)));
    for (double k : {0.0, 0.7, 2.0}) {
      auto kc = [&](double l) { return kernel_K(l, g) * std::cos(k * l); };
      worst_fourier = std::max(
          worst_fourier, std::abs(integrate(kc, -20.0, 20.0, 0.35, 12) - fourier_K(k, g)));
    }
    worst_plim = std::max(worst_plim, std::abs(bare_momentum(40.0, g) - (kPi - g)));
  }
  c.add("kernel_even", worst_even, 1e-15);
  c.add("kernel_normalization", worst_norm, 1e-12);
  c.add("kernel_fourier_numeric", worst_fourier, 1e-12);
  c.add("momentum_derivative", worst_dp, 1e-8);
  c.add("momentum_large_lambda", worst_plim, 1e-12);

  double worst_sign = 0.0;
  for (double l : {0.0, 0.5, 1.5}) {
    if (kernel_K(l, kPi / 3.0) <= 0.0) worst_sign = 1.0;
    if (kernel_K(l, 2.0 * kPi / 3.0) >= 0.0) worst_sign = 1.0;
    worst_sign = std::max(worst_sign, std::abs(kernel_K(l, kPi / 2.0)));
  }
  c.add("kernel_sign_regimes", worst_sign, 1e-16);

  const ModelParams pf{kPi / 2.0, 0.8, 0.9};
  const ClosedForms cf = closed_forms(pf);
  c.add("endpoint_forms_coincide_free_fermion", std::abs(cf.q0() - cf.q_tilde()), 1e-13);
}

void check_special(Collector& c, int points) {
  double worst_r = 0.0, worst_g = 0.0, worst_rn = 0.0;
  for (double g : gamma_grid(points, 0.49)) {
    for (double l : {0.0, 0.8, 2.5}) {
      worst_r = std::max(worst_r, std::abs(R_infinite(l, g) - R_convolution(l, g)));
      worst_g = std::max(worst_g, std::abs(G_function(l, g) - G_identity(l, g)));
    }
    auto rf = [&](double l) { return R_infinite(l, g); };
    const double lim = 40.0 / std::min(g, kPi - g);
    const double norm = integrate(rf, -lim, lim, 0.35, 12);
    worst_rn = std::max(worst_rn, std::abs(norm - (kPi - 2.0 * g) / (2.0 * (kPi - g))));
  }
  c.add("resolvent_kernel_two_routes", worst_r, 1e-10);
  c.add("tail_kernel_two_routes", worst_g, 1e-10);
  c.add("resolvent_kernel_normalization", worst_rn, 1e-9);

  double worst_rec = 0.0, worst_ar = 0.0, worst_jump = 0.0, worst_ff = 0.0;
  for (std::complex<double> z : {std::complex<double>{1.3, 0.7}, {0.4, -1.1}, {2.0, 2.0}}) {
    const auto lhs = std::exp(log_gamma(z + 1.0));
    const auto rhs = z * std::exp(log_gamma(z));
    worst_rec = std::max(worst_rec, std::abs(lhs - rhs) / std::abs(rhs));
  }
  c.add("log_gamma_recurrence", worst_rec, 1e-13);

  for (double g : gamma_grid(points)) {
    for (std::complex<double> l : {std::complex<double>{0.5, -0.8}, {-1.2, -0.3}}) {
      const auto prod = alpha(l, g).value * alpha(-l, g).value;
      worst_ar = std::max(worst_ar, std::abs(prod - 1.0));
    }
    for (double xi : {0.0, 0.9, 2.3}) {
      const auto lhs = alpha_plus(xi, g).value * one_plus_fourier_K(xi, g);
      worst_jump = std::max(worst_jump, std::abs(lhs - alpha_minus(xi, g).value));
    }
  }
  c.add("alpha_reciprocal", worst_ar, 1e-12);
  c.add("alpha_factorization_jump", worst_jump, 1e-12);

  for (std::complex<double> l : {std::complex<double>{0.0, -2.0}, {1.0, -0.4}})
    worst_ff = std::max(worst_ff, std::abs(alpha(l, kPi / 2.0).value - 1.0));
  c.add("alpha_free_fermion_trivial", worst_ff, 1e-13);

  const double ap0 = alpha_plus(0.0, kPi / 3.0).value.real();
  c.add("alpha_plus_origin", std::abs(ap0 * ap0 - kPi / (2.0 * (kPi - kPi / 3.0))), 1e-13);
}

void check_linsolve(Collector& c, int points) {
  double worst_neumann = 0.0, worst_sym = 0.0, worst_res = 0.0, worst_ext = 0.0,
         worst_der = 0.0;
  for (double g : gamma_grid(points, 0.9)) {
    const QuadratureGrid grid = build_grid(1.3, 48);
    Driving one = [](std::complex<double>) { return std::complex<double>(1.0, 0.0); };
    const DiscreteSolution sol = solve_lie(grid, g, one, "unit");

    const double ratio = std::abs(1.0 - 2.0 * g / kPi);
    if (ratio < 0.8) {
      const int terms = static_cast<int>(std::ceil(30.0 / -std::log10(ratio + 1e-30))) + 5;
      const DiscreteSolution osol = neumann_oracle(g, grid, one, terms);
      worst_neumann = std::max(
          worst_neumann, (sol.values - osol.values).lpNorm<Eigen::Infinity>());
    }

    const ResolventTable table = resolvent(grid, g);
    worst_sym = std::max(
        worst_sym,
        (table.entries - table.entries.transpose()).lpNorm<Eigen::Infinity>());
    for (double l : {0.0, 0.4, 2.0})
      for (double m : {-0.7, 1.1}) {
        // defining equation of the resolvent at off-grid points
        auto conv = [&](double nu) {
          return kernel_K(l - nu, g) * resolvent_extend(table, nu, m);
        };
        const double lhs = resolvent_extend(table, l, m) +
                           integrate(conv, -grid.Q, grid.Q, 0.2, 12);
        worst_res = std::max(worst_res, std::abs(lhs - kernel_K(l - m, g)));
      }

    for (int i = 0; i < grid.size(); i += 7)
      worst_ext = std::max(worst_ext,
                           std::abs(nystrom_extend(sol, grid.nodes[i]) - sol.values[i]));

    auto zero = [](double) { return 0.0; };
    for (double l : {0.2, 1.9}) {
      const double fd =
          (nystrom_extend(sol, l + 5e-6) - nystrom_extend(sol, l - 5e-6)) / 1e-5;
      worst_der = std::max(worst_der, std::abs(nystrom_extend_prime(sol, l, zero) - fd));
    }
  }
  c.add("neumann_oracle_agreement", worst_neumann, 1e-11);
  c.add("resolvent_symmetry", worst_sym, 1e-12);
  c.add("resolvent_equation_off_grid", worst_res, 1e-9);
  c.add("extension_matches_nodes", worst_ext, 1e-12);
  c.add("extension_derivative", worst_der, 1e-8);
}

void check_thermo(Collector& c, int points) {
  double worst_lin = 0.0, worst_mag = 0.0, worst_odd = 0.0, worst_rho_inf = 0.0,
         worst_eps_inf = 0.0;
  for (double g : gamma_grid(points)) {
    const ModelParams p{g, 1.0, 0.4};
    const DressedSet set = dressed_set(p, 1.1, 64);
    const Eigen::VectorXd combo =
        p.h * set.Z.values - 4.0 * kPi * p.J * std::sin(g) * set.rho.values;
    worst_lin = std::max(worst_lin, (set.eps.values - combo).lpNorm<Eigen::Infinity>());

    worst_mag = std::max(
        worst_mag, std::abs(magnetization(g, 1.1, 64) - magnetization_rho_form(g, 1.1, 64)));

    double prev = set.momentum(-1.6);
    for (double l : {-0.9, -0.2, 0.0, 0.5, 1.4}) {
      const double v = set.momentum(l);
      if (v <= prev) worst_odd = std::max(worst_odd, prev - v + 1e-30);
      prev = v;
      worst_odd = std::max(worst_odd, std::abs(set.momentum(-l) + v));
    }

    // the wide interval needs the kernel pole at i*min(gamma, pi-gamma) well off the
    // axis for the global quadrature, and gamma <= pi/2 so the boundary effect
    // e^(-pi Q/gamma) is below the tolerance at Q = 12
    if (std::min(g, kPi - g) >= 0.8 && g <= kPi / 2.0 + 1e-12) {
      const double Q = 12.0;
      const DressedSet far = dressed_set(p, Q, 384);
      const ClosedForms cf = closed_forms(p);
      for (double l : {0.0, 0.5, 1.5}) {
        worst_rho_inf =
            std::max(worst_rho_inf, std::abs(nystrom_extend(far.rho, l) - cf.rho_inf(l)));
        worst_eps_inf =
            std::max(worst_eps_inf, std::abs(nystrom_extend(far.eps, l) - cf.eps_inf(l)));
      }
    }
  }
  c.add("energy_charge_density_linearity", worst_lin, 1e-12);
  c.add("magnetization_two_forms", worst_mag, 1e-12);
  c.add("momentum_odd_increasing", worst_odd, 1e-10);
  c.add("density_infinite_interval", worst_rho_inf, 1e-8);
  c.add("energy_infinite_interval", worst_eps_inf, 1e-7);

  // at the free-fermion point the dressed energy is bare and its zero is closed-form
  const ModelParams pf{kPi / 2.0, 1.0, 0.6};
  const DiscreteSolution eps = dressed_energy(pf, 1.0, 64);
  const double q0 = closed_forms(pf).q0();
  c.add("free_fermion_energy_zero", std::abs(nystrom_extend(eps, q0)), 1e-12);
}

void check_fermi(Collector& c, int points) {
  double worst_fill = 0.0, worst_root = 0.0, worst_bracket = 0.0;
  for (double g : gamma_grid(points)) {
    const double Q = solve_magnetic_rapidity(g, 0.31, 96);
    const DiscreteSolution rho = root_density(g, Q, 96);
    worst_fill = std::max(worst_fill, std::abs(rho.grid.weights.dot(rho.values) - 0.31));

    const ModelParams p{g, 1.0, 0.7};
    const FermiPoint fp = solve_fermi_rapidity(p);
    if (fp.polarized) continue;  // field above saturation at this anisotropy
    worst_root = std::max(worst_root, std::abs(fp.residual));
    const ClosedForms cf = closed_forms(p);
    double lo = 0.0, hi = cf.q0();
    if (cf.has_q_tilde()) {
      lo = std::min(cf.q_tilde(), hi);
      hi = std::max(cf.q_tilde(), cf.q0());
    }
    if (fp.QF < lo - 1e-9 || fp.QF > hi + 1e-9) worst_bracket = 1.0;
    if (!(fp.vF > 0.0) || !(fp.ZF > 0.0) || !(fp.pF > 0.0)) worst_bracket = 1.0;
  }
  c.add("filling_residual", worst_fill, 1e-11);
  c.add("fermi_point_residual", worst_root, 1e-11);
  c.add("fermi_point_bracket", worst_bracket, 0.5);

  const ModelParams sat{kPi / 3.0, 1.0, 7.0};  // above 4J(1+cos gamma) = 6
  const FermiPoint fp = solve_fermi_rapidity(sat);
  c.add("polarized_above_saturation", (fp.polarized && fp.QF == 0.0) ? 0.0 : 1.0, 0.5);
}

void check_asympt(Collector& c, int points) {
  double worst_amp = 0.0;
  for (double g : gamma_grid(points)) {
    if (g <= kPi / 5.0 + 0.05) continue;
    worst_amp = std::max(worst_amp, std::abs(asympt_rho_at_Q(g, 2.0) -
                                             asympt_rho_at_Q_alpha(g, 2.0)));
  }
  c.add("density_amplitude_two_routes", worst_amp, 1e-13);

  const double g = 2.0 * kPi / 5.0, Q = 10.0;
  const DiscreteSolution Z = dressed_charge(g, Q, 192);
  c.add("charge_endpoint_limit", std::abs(nystrom_extend(Z, Q) - asympt_Z_at_Q(g)), 1e-3);

  const DiscreteSolution rho = root_density(g, Q, 192);
  const double lead = asympt_rho_at_Q(g, Q);
  c.add("density_endpoint_limit", std::abs(nystrom_extend(rho, Q) / lead - 1.0), 1e-3);

  const ModelParams p{g, 1.0, 1e-6};
  const FermiPoint fp = solve_fermi_rapidity(p, 160);
  c.add("fermi_rapidity_small_field", std::abs(fp.QF - asympt_fermi_rapidity(p)), 1e-3);
  c.add("fermi_rapidity_alpha_route",
        std::abs(asympt_fermi_rapidity(p) - asympt_fermi_rapidity_alpha(p)), 1e-13);
}

void check_bank(Collector& c, int /*points*/) {
  const ModelParams p{kPi / 3.0, 1.0, 0.5};
  const FermiPoint fp = solve_fermi_rapidity(p);
  OmegaEvaluator ev(fp, 21.0);

  const TailEstimates est = tail_estimates(p.gamma, p.h);
  double worst_floor = 0.0, worst_tail = 0.0;
  for (double l = 0.0; l <= 21.0; l += 0.5) {
    const double w = ev(l);
    worst_floor = std::max(worst_floor, p.h / 4.0 - w);
    // the half tail integral must respect its closed-form lower estimate
    const double bound = std::min(est.est_low_gamma, est.est_high_gamma);
    worst_tail = std::max(worst_tail, bound - 0.5 * ev.tail_integral(l));
  }
  c.add("omega_above_quarter_field", worst_floor, 0.0);
  c.add("tail_integral_above_estimate", worst_tail, 0.0);
  c.add("omega_far_field_limit", std::abs(ev(21.0) - p.h), 0.05 * p.h);
  c.add("estimate_ordering_low_gamma",
        tail_estimates(kPi / 6.0, 1.0).est_low_gamma -
            tail_estimates(kPi / 6.0, 1.0).est_high_gamma,
        0.0);
}

}  // namespace

std::vector<CheckResult> run_verification(const std::string& suite, int gamma_grid_points) {
  if (gamma_grid_points < 1)
    throw std::invalid_argument("run_verification: gamma_grid_points must be positive");
  Collector c;
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  bool known = suite == "all";
  if (want("kernels")) known = true, c.suite = "kernels", check_kernels(c, gamma_grid_points);
  if (want("special")) known = true, c.suite = "special", check_special(c, gamma_grid_points);
  if (want("linsolve"))
    known = true, c.suite = "linsolve", check_linsolve(c, gamma_grid_points);
  if (want("thermo")) known = true, c.suite = "thermo", check_thermo(c, gamma_grid_points);
  if (want("fermi")) known = true, c.suite = "fermi", check_fermi(c, gamma_grid_points);
  if (want("asympt")) known = true, c.suite = "asympt", check_asympt(c, gamma_grid_points);
  if (want("bank")) known = true, c.suite = "bank", check_bank(c, gamma_grid_points);
  if (!known) throw std::invalid_argument("run_verification: unknown suite " + suite);
  return c.results;
}

}  // namespace xxz
