#include "hiord/trs.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "hiord/errors.hpp"

namespace hiord {

namespace {

// ||d(sigma)||^2 with d_i = -g_i / (lambda_i + sigma) in the eigenbasis
double step_norm2(const Eigen::VectorXd& gh, const Eigen::VectorXd& lam, double sigma) {
  double acc = 0.0;
  for (int i = 0; i < gh.size(); ++i) {
    const double den = lam[i] + sigma;
    acc += (gh[i] * gh[i]) / (den * den);
  }
  return acc;
}

}  // namespace

Eigen::VectorXd solve_trust_region_subproblem(const Eigen::VectorXd& g, const Eigen::MatrixXd& H,
                                              double delta) {
  const int n = static_cast<int>(g.size());
  if (H.rows() != n || H.cols() != n) throw ArgumentError("trs: dimension mismatch");
  if (!(delta > 0)) throw ArgumentError("trs: delta must be positive");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (H + H.transpose()));
  const Eigen::VectorXd lam = es.eigenvalues();
  const Eigen::MatrixXd Q = es.eigenvectors();
  const Eigen::VectorXd gh = Q.transpose() * g;
  const double lam_min = lam[0];
  const double gscale = std::max(1.0, gh.cwiseAbs().maxCoeff());

  auto assemble = [&](double sigma) {
    Eigen::VectorXd dh(n);
    for (int i = 0; i < n; ++i) dh[i] = -gh[i] / (lam[i] + sigma);
    return Eigen::VectorXd(Q * dh);
  };

  // interior solution when H is positive definite and the Newton step fits
  if (lam_min > 0.0) {
    if (std::sqrt(step_norm2(gh, lam, 0.0)) <= delta) return assemble(0.0);
  }

  const double sigma_lo = std::max(0.0, -lam_min);

  // does the step norm blow up as sigma -> sigma_lo (gradient hits the
  // minimal eigenspace)?
  bool coupled = false;
  for (int i = 0; i < n; ++i)
    if (std::abs(lam[i] - lam_min) <= 1e-12 * std::max(1.0, std::abs(lam_min)) &&
        std::abs(gh[i]) > 1e-13 * gscale)
      coupled = true;

  if (!coupled && lam_min <= 0.0) {
    // limit step using only the well-separated eigendirections
    Eigen::VectorXd dh = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
      const double den = lam[i] + sigma_lo;
      if (den > 1e-12 * std::max(1.0, std::abs(lam_min))) dh[i] = -gh[i] / den;
    }
    const double norm2 = dh.squaredNorm();
    if (norm2 <= delta * delta) {
      // hard case: pad with the minimal eigenvector up to the boundary
      const double t = std::sqrt(std::max(0.0, delta * delta - norm2));
      Eigen::VectorXd qmin = Q.col(0);
      for (int i = 0; i < n; ++i) {  // deterministic sign
        if (std::abs(qmin[i]) > 1e-12) {
          if (qmin[i] < 0) qmin = -qmin;
          break;
        }
      }
      return Q * dh + t * qmin;
    }
  }

  // secular equation ||d(sigma)|| = delta on (sigma_lo, inf); the norm is
  // decreasing in sigma and infinite at the pole, so bisection is safe
  double lo = sigma_lo;
  double hi = sigma_lo + gh.norm() / delta + 1.0;
  while (std::sqrt(step_norm2(gh, lam, hi)) > delta) hi *= 2.0;
  double sigma = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    sigma = 0.5 * (lo + hi);
    const double nrm = std::sqrt(step_norm2(gh, lam, sigma));
    if (std::abs(nrm - delta) <= 1e-14 * delta) break;
    if (nrm > delta)
      lo = sigma;
    else
      hi = sigma;
  }
  return assemble(sigma);
}

}  // namespace hiord
