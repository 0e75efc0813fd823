#include "xxz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

GaussLegendreRule compute_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration on P_n from the Chebyshev initial guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;  // kill the -0.0 from the loop
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

double gl_panel(const std::function<double(double)>& f, double a, double b, int n) {
  const GaussLegendreRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

double integrate(const std::function<double(double)>& f, double a, double b, double width,
                 int pts_per_panel) {
  if (b <= a) return 0.0;
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
  const double w = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) sum += gl_panel(f, a + p * w, a + (p + 1) * w, pts_per_panel);
  return sum;
}

double cosine_transform(const std::function<double(double)>& phi, double lambda,
                        double decay) {
  if (decay <= 0.0) throw std::invalid_argument("cosine_transform: decay must be positive");
  lambda = std::abs(lambda);
  const double kmax = 40.0 / decay;

  // Panels of unit width; point count grows with the oscillation frequency, with the
  // panel width shrunk instead once the per-panel count would get unreasonable.
  double width = 1.0;
  int pts = 14 + static_cast<int>(0.6 * lambda);
  if (pts > 64) {
    width = 50.0 / (0.6 * lambda);
    pts = 14 + static_cast<int>(0.6 * lambda * width);
  }

  const GaussLegendreRule& rule = gauss_legendre(pts);
  double sum = 0.0;
  double peak = 0.0;
  const int panels = static_cast<int>(std::ceil(kmax / width));
  for (int p = 0; p < panels; ++p) {
    const double a = p * width, b = std::min(kmax, (p + 1) * width);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < pts; ++i) {
      const double k = mid + half * rule.nodes[i];
      const double v = phi(k);
      peak = std::max(peak, std::abs(v));
      s += rule.weights[i] * v * std::cos(k * lambda);
    }
    sum += half * s;
  }
  if (peak > 0.0 && std::abs(phi(kmax)) > 1e-15 * peak)
    throw accuracy_error("cosine_transform: integrand not negligible at the truncation point");
  return sum;
}

}  // namespace xxz
