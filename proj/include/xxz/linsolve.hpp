#pragma once

#include <Eigen/Core>
#include <complex>
#include <functional>
#include <string>

#include "xxz/errors.hpp"

namespace xxz {

/// Gauss-Legendre nodes and weights mapped to [-Q,Q]. Nodes are symmetric about 0 and
/// strictly increasing for Q > 0; Q = 0 keeps the node layout but zeroes all weights.
struct QuadratureGrid {
  double Q = 0.0;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

QuadratureGrid build_grid(double Q, int n);

/// Driving term g, evaluable on the analyticity domain (needed off the real axis by
/// the Nystrom extension). Real nodes use the real part.
using Driving = std::function<std::complex<double>(std::complex<double>)>;

/// Node values of the solution f of f + K.f = g on [-Q,Q], together with the driving
/// term so the solution can be evaluated anywhere via nystrom_extend.
struct DiscreteSolution {
  QuadratureGrid grid;
  double gamma = 0.0;
  Eigen::VectorXd values;
  Driving driving;
  std::string driving_name;
};

/// Dense Nystrom solve of (I + K) f = g on the grid.
DiscreteSolution solve_lie(const QuadratureGrid& grid, double gamma, const Driving& g,
                           std::string driving_name = "custom");

/// Evaluation of a discrete solution at arbitrary points through the equation itself:
/// f(lambda) = g(lambda) - sum_j w_j K(lambda - x_j) f(x_j).
double nystrom_extend(const DiscreteSolution& sol, double lambda);
std::complex<double> nystrom_extend(const DiscreteSolution& sol, std::complex<double> lambda);

/// d/dlambda of the Nystrom extension on the real axis (analytic, not finite-difference).
/// Requires a closed-form derivative of the driving term.
double nystrom_extend_prime(const DiscreteSolution& sol, double lambda,
                            const std::function<double(double)>& driving_prime);

/// Resolvent kernel R_Q(x_i, x_j) of I+K on the grid; symmetric.
struct ResolventTable {
  QuadratureGrid grid;
  double gamma = 0.0;
  Eigen::MatrixXd entries;
};

ResolventTable resolvent(const QuadratureGrid& grid, double gamma);

/// R_Q at arbitrary points, extending off the grid through the defining equation in the
/// first argument and the symmetry R_Q(lambda,mu) = R_Q(mu,lambda) in the second.
double resolvent_extend(const ResolventTable& table, double lambda, double mu);

/// Partial sum of the Neumann series sum_{n>=0} (-K)^n g, as an independent oracle for
/// solve_lie. Error is geometric with ratio |1 - 2 gamma/pi|.
DiscreteSolution neumann_oracle(double gamma, const QuadratureGrid& grid, const Driving& g,
                                int terms);

}  // namespace xxz
