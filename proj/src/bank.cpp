#include "xxz/bank.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "xxz/errors.hpp"
#include "xxz/quadrature.hpp"
#include "xxz/thermo.hpp"

namespace xxz {

namespace {

constexpr double kPi = std::numbers::pi;

void check_gamma_half(double gamma, const char* who) {
  if (!(gamma > 0.0 && gamma < kPi / 2.0))
    throw std::domain_error(std::string(who) + ": gamma must lie in (0, pi/2)");
}

// Fourier density of G - R:  -2 cosh((pi/2 - 3gamma/2) k) sinh(gamma k/2)
//                            / ( cosh(gamma k/2) sinh((pi-gamma) k/2) ),
// overflow-safe for large k.
double tail_kernel_fourier(double gamma, double k) {
  const double aa = std::abs(kPi / 2.0 - 1.5 * gamma);
  const double t = gamma * k / 2.0, s = (kPi - gamma) * k / 2.0, u = aa * k;
  if (k < 1e-4) {
    return -2.0 * std::cosh(u) * (t * (1.0 + t * t / 6.0)) /
           ((1.0 + t * t / 2.0) * (s * (1.0 + s * s / 6.0)));
  }
  if (std::max({u, t, s}) < 30.0)
    return -2.0 * std::cosh(u) * std::sinh(t) / (std::cosh(t) * std::sinh(s));
  const double Eu = std::exp(-2.0 * u), Et = std::exp(-2.0 * t), Es = std::exp(-2.0 * s);
  return -2.0 * std::exp(u - s) * (1.0 + Eu) * (1.0 - Et) / ((1.0 + Et) * (1.0 - Es));
}

// Uniform table with 6-point Lagrange interpolation.
struct UniformTable {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<double> v;

  double xmax() const { return x0 + dx * (static_cast<double>(v.size()) - 1.0); }

  double operator()(double x) const {
    const int n = static_cast<int>(v.size());
    int i0 = static_cast<int>(std::floor((x - x0) / dx)) - 2;
    if (i0 < 0) i0 = 0;
    if (i0 > n - 6) i0 = n - 6;
    double out = 0.0;
    for (int i = 0; i < 6; ++i) {
      double li = 1.0;
      const double xi = x0 + (i0 + i) * dx;
      for (int j = 0; j < 6; ++j) {
        if (j == i) continue;
        const double xj = x0 + (i0 + j) * dx;
        li *= (x - xj) / (xi - xj);
      }
      out += li * v[i0 + i];
    }
    return out;
  }
};

}  // namespace

TailEstimates tail_estimates(double gamma, double h) {
  check_gamma_half(gamma, "tail_estimates");
  if (!(h >= 0.0)) throw std::domain_error("tail_estimates: h must be non-negative");
  const double r = 1.0 - gamma / kPi;
  return {-(h / 2.0) * (0.5 - gamma / kPi) / r, -(h / 2.0) * (gamma / kPi) / r};
}

struct OmegaEvaluator::Impl {
  explicit Impl(const FermiPoint& f) : fermi(f) {}

  FermiPoint fermi;
  double lambda_max;
  double cutoff;       // distance beyond which the tail kernel is dropped
  double panel_width;  // quadrature panel width for the tail integral
  UniformTable H;      // G - R on [0, cutoff]
  UniformTable eps;    // dressed-energy extension on [QF, lambda_max + cutoff]

  double tail(double lambda) const {
    lambda = std::abs(lambda);
    const double QF = fermi.QF;
    double out = 0.0;
    auto same_side = [&](double mu) { return H(std::abs(lambda - mu)) * eps(mu); };
    auto far_side = [&](double nu) { return H(lambda + nu) * eps(nu); };
    if (lambda + cutoff > QF)
      out += integrate(same_side, QF, lambda + cutoff, panel_width, 10);
    if (cutoff - lambda > QF) out += integrate(far_side, QF, cutoff - lambda, panel_width, 10);
    return out;
  }
};

OmegaEvaluator::OmegaEvaluator(const FermiPoint& fermi, double lambda_max, int n)
    : impl_(std::make_unique<Impl>(fermi)) {
  check_gamma_half(fermi.params.gamma, "OmegaEvaluator");
  if (!fermi.polarized && std::abs(fermi.residual) > 1e-10)
    throw std::invalid_argument("OmegaEvaluator: Fermi point residual too large");
  if (!(lambda_max > 0.0)) throw std::invalid_argument("OmegaEvaluator: lambda_max <= 0");

  const double gamma = fermi.params.gamma;
  const double decay = std::min(gamma, kPi - 2.0 * gamma);

  impl_->lambda_max = lambda_max;
  impl_->cutoff = 33.0 / decay;
  impl_->panel_width = std::min(0.25, decay / 2.0);

  const double dx = 0.02;
  {
    // one shared k-grid, dense enough for the fastest oscillation cos(k * cutoff),
    // with the Fourier density evaluated once per node and reused for every table point
    const double kmax = 40.0 / decay;
    double width = 1.0;
    int pts = 14 + static_cast<int>(0.6 * impl_->cutoff);
    if (pts > 64) {
      width = 50.0 / (0.6 * impl_->cutoff);
      pts = 14 + static_cast<int>(0.6 * impl_->cutoff * width);
    }
    const GaussLegendreRule& rule = gauss_legendre(pts);
    const int panels = static_cast<int>(std::ceil(kmax / width));
    std::vector<double> knodes, kphi;
    double peak = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double a = p * width, b = std::min(kmax, (p + 1) * width);
      const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      for (int i = 0; i < pts; ++i) {
        const double k = mid + half * rule.nodes[i];
        const double v = tail_kernel_fourier(gamma, k);
        peak = std::max(peak, std::abs(v));
        knodes.push_back(k);
        kphi.push_back(half * rule.weights[i] * v);
      }
    }
    if (std::abs(tail_kernel_fourier(gamma, kmax)) > 1e-15 * peak)
      throw accuracy_error("OmegaEvaluator: tail kernel not negligible at truncation");

    const int m = static_cast<int>(std::ceil(impl_->cutoff / dx)) + 1;
    impl_->H.x0 = 0.0;
    impl_->H.dx = dx;
    impl_->H.v.resize(m);
    for (int i = 0; i < m; ++i) {
      const double lambda = i * dx;
      double sum = 0.0;
      for (size_t j = 0; j < knodes.size(); ++j)
        sum += kphi[j] * std::cos(knodes[j] * lambda);
      impl_->H.v[i] = sum / (2.0 * kPi);
    }
  }
  {
    const DiscreteSolution eps = dressed_energy(fermi.params, fermi.QF, n);
    const double hi = lambda_max + impl_->cutoff;
    const int m = static_cast<int>(std::ceil((hi - fermi.QF) / dx)) + 6;
    impl_->eps.x0 = fermi.QF;
    impl_->eps.dx = dx;
    impl_->eps.v.resize(m);
    for (int i = 0; i < m; ++i)
      impl_->eps.v[i] = nystrom_extend(eps, fermi.QF + i * dx);
  }
}

OmegaEvaluator::~OmegaEvaluator() = default;
OmegaEvaluator::OmegaEvaluator(OmegaEvaluator&&) noexcept = default;

double OmegaEvaluator::tail_integral(double lambda) const { return impl_->tail(lambda); }

double OmegaEvaluator::eps_c(double lambda) const {
  lambda = std::abs(lambda);
  if (lambda > impl_->lambda_max + 1e-9)
    throw std::domain_error("OmegaEvaluator: point beyond the configured lambda_max");
  return lambda >= impl_->fermi.QF ? impl_->eps(lambda) : 0.0;
}

double OmegaEvaluator::operator()(double lambda) const {
  lambda = std::abs(lambda);
  if (lambda > impl_->lambda_max + 1e-9)
    throw std::domain_error("OmegaEvaluator: point beyond the configured lambda_max");
  const ModelParams& p = impl_->fermi.params;
  const double g = p.gamma;
  const double drive = (2.0 * kPi * p.J * std::sin(g) / g) / std::cosh(kPi * lambda / g);
  return p.h * kPi / (2.0 * (kPi - g)) + drive + 0.5 * eps_c(lambda) +
         0.5 * impl_->tail(lambda);
}

const FermiPoint& OmegaEvaluator::fermi() const { return impl_->fermi; }

double omega(double lambda, const FermiPoint& fermi) {
  OmegaEvaluator ev(fermi, std::max(std::abs(lambda), 1.0));
  return ev(lambda);
}

BankProfile bank_profile(const FermiPoint& fermi, const Eigen::VectorXd& lambdas) {
  double lmax = 1.0;
  for (int i = 0; i < lambdas.size(); ++i) lmax = std::max(lmax, std::abs(lambdas[i]));
  OmegaEvaluator ev(fermi, lmax);
  BankProfile profile{fermi, lambdas, Eigen::VectorXd(lambdas.size()), fermi.params.h / 4.0};
  for (int i = 0; i < lambdas.size(); ++i) profile.omega[i] = ev(lambdas[i]);
  return profile;
}

}  // namespace xxz
