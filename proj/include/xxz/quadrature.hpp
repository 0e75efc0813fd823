#pragma once

#include <Eigen/Core>
#include <functional>

namespace xxz {

/// Gauss-Legendre rule on [-1,1].
struct GaussLegendreRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Cached n-point Gauss-Legendre rule. Thread safe; the returned reference is immutable.
const GaussLegendreRule& gauss_legendre(int n);

/// Single n-point Gauss-Legendre panel over [a,b].
double gl_panel(const std::function<double(double)>& f, double a, double b, int n);

/// Composite Gauss-Legendre integral over [a,b] with panels of width at most `width`.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double width, int pts_per_panel);

/// \int_0^infty phi(k) cos(k*lambda) dk for smooth phi with |phi(k)| <~ exp(-decay*k).
///
/// Truncates at k = 40/decay and checks that the integrand there has dropped below
/// 1e-15 of its observed peak; throws accuracy_error otherwise.
double cosine_transform(const std::function<double(double)>& phi, double lambda,
                        double decay);

}  // namespace xxz
