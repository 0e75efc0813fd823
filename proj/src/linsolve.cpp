#include "xxz/linsolve.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "xxz/kernels.hpp"
#include "xxz/quadrature.hpp"

namespace xxz {

QuadratureGrid build_grid(double Q, int n) {
  if (!(Q >= 0.0)) throw std::domain_error("build_grid: Q must be non-negative");
  if (n < 1) throw std::invalid_argument("build_grid: n must be positive");
  const GaussLegendreRule& rule = gauss_legendre(n);
  QuadratureGrid grid;
  grid.Q = Q;
  grid.nodes.resize(n);
  grid.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    grid.nodes[i] = Q * rule.nodes[i];
    grid.weights[i] = Q * rule.weights[i];
  }
  return grid;
}

namespace {

Eigen::MatrixXd kernel_matrix(const QuadratureGrid& grid, double gamma) {
  const int n = grid.size();
  Eigen::MatrixXd K(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      K(i, j) = kernel_K(grid.nodes[i] - grid.nodes[j], gamma);
      K(j, i) = K(i, j);
    }
  return K;
}

Eigen::MatrixXd lie_matrix(const QuadratureGrid& grid, double gamma) {
  Eigen::MatrixXd M = kernel_matrix(grid, gamma);
  M *= grid.weights.asDiagonal();
  M += Eigen::MatrixXd::Identity(grid.size(), grid.size());
  return M;
}

}  // namespace

DiscreteSolution solve_lie(const QuadratureGrid& grid, double gamma, const Driving& g,
                           std::string driving_name) {
  const int n = grid.size();
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = g(std::complex<double>(grid.nodes[i], 0.0)).real();

  const Eigen::MatrixXd M = lie_matrix(grid, gamma);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  Eigen::VectorXd f = lu.solve(rhs);

  const double scale = 1.0 + rhs.lpNorm<Eigen::Infinity>();
  if (!f.allFinite() || (M * f - rhs).lpNorm<Eigen::Infinity>() > 1e-10 * scale)
    throw singular_system_error("solve_lie: discretized system is numerically singular");

  DiscreteSolution sol;
  sol.grid = grid;
  sol.gamma = gamma;
  sol.values = std::move(f);
  sol.driving = g;
  sol.driving_name = std::move(driving_name);
  return sol;
}

double nystrom_extend(const DiscreteSolution& sol, double lambda) {
  double acc = sol.driving(std::complex<double>(lambda, 0.0)).real();
  for (int j = 0; j < sol.grid.size(); ++j)
    acc -= sol.grid.weights[j] * kernel_K(lambda - sol.grid.nodes[j], sol.gamma) * sol.values[j];
  return acc;
}

std::complex<double> nystrom_extend(const DiscreteSolution& sol, std::complex<double> lambda) {
  std::complex<double> acc = sol.driving(lambda);
  for (int j = 0; j < sol.grid.size(); ++j)
    acc -= sol.grid.weights[j] *
           kernel_K(lambda - std::complex<double>(sol.grid.nodes[j], 0.0), sol.gamma) *
           sol.values[j];
  return acc;
}

double nystrom_extend_prime(const DiscreteSolution& sol, double lambda,
                            const std::function<double(double)>& driving_prime) {
  double acc = driving_prime(lambda);
  for (int j = 0; j < sol.grid.size(); ++j)
    acc -= sol.grid.weights[j] * kernel_K_prime(lambda - sol.grid.nodes[j], sol.gamma) *
           sol.values[j];
  return acc;
}

ResolventTable resolvent(const QuadratureGrid& grid, double gamma) {
  const Eigen::MatrixXd K = kernel_matrix(grid, gamma);
  const Eigen::MatrixXd M = lie_matrix(grid, gamma);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);

  ResolventTable table;
  table.grid = grid;
  table.gamma = gamma;
  table.entries = lu.solve(K);
  if (!table.entries.allFinite())
    throw singular_system_error("resolvent: discretized system is numerically singular");
  return table;
}

double resolvent_extend(const ResolventTable& table, double lambda, double mu) {
  const QuadratureGrid& grid = table.grid;
  const int n = grid.size();

  // Extend in the second argument via symmetry onto the grid points, then in the first.
  Eigen::VectorXd col(n);
  for (int j = 0; j < n; ++j) {
    double v = kernel_K(mu - grid.nodes[j], table.gamma);
    for (int k = 0; k < n; ++k)
      v -= grid.weights[k] * kernel_K(mu - grid.nodes[k], table.gamma) * table.entries(k, j);
    col[j] = v;
  }
  double out = kernel_K(lambda - mu, table.gamma);
  for (int j = 0; j < n; ++j)
    out -= grid.weights[j] * kernel_K(lambda - grid.nodes[j], table.gamma) * col[j];
  return out;
}

DiscreteSolution neumann_oracle(double gamma, const QuadratureGrid& grid, const Driving& g,
                                int terms) {
  if (terms < 0) throw std::invalid_argument("neumann_oracle: terms must be non-negative");
  const int n = grid.size();
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = g(std::complex<double>(grid.nodes[i], 0.0)).real();

  Eigen::MatrixXd KW = kernel_matrix(grid, gamma);
  KW *= grid.weights.asDiagonal();

  Eigen::VectorXd s = rhs;
  for (int t = 0; t < terms; ++t) s = rhs - KW * s;

  DiscreteSolution sol;
  sol.grid = grid;
  sol.gamma = gamma;
  sol.values = std::move(s);
  sol.driving = g;
  sol.driving_name = "neumann";
  return sol;
}

}  // namespace xxz
