#pragma once

#include <Eigen/Core>
#include <memory>

#include "xxz/fermi.hpp"
#include "xxz/linsolve.hpp"

namespace xxz {

/// Lower bounds for the tail integral in the omega representation:
///   est_low_gamma  = -(h/2)(1/2 - gamma/pi)/(1 - gamma/pi)   (applies for gamma <= pi/4)
///   est_high_gamma = -(h/2)(gamma/pi)/(1 - gamma/pi)         (applies for gamma >= pi/4)
struct TailEstimates {
  double est_low_gamma;
  double est_high_gamma;
};

TailEstimates tail_estimates(double gamma, double h);

/// Evaluator of omega(lambda) = Re eps_+(lambda - i gamma | Q_F) through the solved
/// real-line representation
///   omega = h pi/(2(pi-gamma)) + (2 pi J sin(gamma)/gamma)/cosh(pi lambda/gamma)
///           + eps_c(lambda)/2 + (1/2) int_{|mu|>Q_F} {G - R}(lambda-mu) eps(mu|Q_F) dmu.
/// Valid for 0 < gamma < pi/2. Construction precomputes tables of G - R and of the
/// dressed-energy extension; evaluation is then cheap. lambda_max bounds the points
/// the evaluator will be asked for (it fixes the tail truncation).
class OmegaEvaluator {
 public:
  explicit OmegaEvaluator(const FermiPoint& fermi, double lambda_max = 21.0, int n = 128);
  ~OmegaEvaluator();
  OmegaEvaluator(OmegaEvaluator&&) noexcept;

  double operator()(double lambda) const;

  /// The tail integral int_{|mu|>Q_F} {G - R}(lambda-mu) eps(mu|Q_F) dmu (without the 1/2).
  double tail_integral(double lambda) const;

  /// eps_c(lambda) = eps(lambda|Q_F) Theta(|lambda| - Q_F).
  double eps_c(double lambda) const;

  const FermiPoint& fermi() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-off evaluation; builds an evaluator internally.
double omega(double lambda, const FermiPoint& fermi);

/// omega sampled on a grid, with the lower bound h/4 attached.
struct BankProfile {
  FermiPoint fermi;
  Eigen::VectorXd lambdas;
  Eigen::VectorXd omega;
  double floor;  // h/4
};

BankProfile bank_profile(const FermiPoint& fermi, const Eigen::VectorXd& lambdas);

}  // namespace xxz
