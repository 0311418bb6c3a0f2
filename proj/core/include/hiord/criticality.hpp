#pragma once

#include <Eigen/Core>
#include <vector>

#include "hiord/convex_set.hpp"
#include "hiord/tensor.hpp"

namespace hiord {

// Degree-j Taylor model of a smooth function at a point:
//   T(d) = base + sum_{k=1..j} (1/k!) tensors[k-1][d]^k
class TaylorModel {
 public:
  TaylorModel(double base, std::vector<SymmetricTensor> tensors);
  static TaylorModel truncate(const TaylorModel& m, int degree);

  int degree() const { return static_cast<int>(tensors_.size()); }
  int dim() const { return tensors_.empty() ? 0 : tensors_[0].dim(); }
  double base() const { return base_; }
  const SymmetricTensor& tensor(int k) const { return tensors_.at(static_cast<std::size_t>(k - 1)); }

  double value(const Eigen::VectorXd& d) const;
  double decrease(const Eigen::VectorXd& d) const { return base_ - value(d); }
  Eigen::VectorXd gradient(const Eigen::VectorXd& d) const;
  // model restricted to the column span of an orthonormal basis
  TaylorModel compose_with_basis(const Eigen::MatrixXd& basis) const;

 private:
  double base_;
  std::vector<SymmetricTensor> tensors_;
};

struct PhiResult {
  double phi = 0.0;          // largest feasible model decrease within delta
  Eigen::VectorXd minimizer;  // attaining displacement
};

// phi_{psi,j}^Delta(x): largest decrease of the model over
// { d : x + d in F, ||d|| <= Delta }, Delta in (0,1].
// j=1 is solved as a convex program; j=2 over the whole space by an exact
// trust-region subproblem; anything else by Sobol + coordinate multi-start
// projected descent (2n+64 starts).
PhiResult phi(const TaylorModel& model, const ConvexSet& set, const Eigen::VectorXd& x,
              double delta);

// independent oracle: grid search + polish, refined until successive values
// agree to 1e-8; dim must be <= 4
double phi_bruteforce(const TaylorModel& model, const ConvexSet& set, const Eigen::VectorXd& x,
                      double delta, int grid = 11);

// phi with the displacement constrained to d = basis * z (orthonormal
// columns); the shifted set is honored by step rejection during the polish
PhiResult phi_hat(const TaylorModel& model, const ConvexSet& set, const Eigen::VectorXd& x,
                  const Eigen::MatrixXd& basis, double delta);

// per-order criticality measures at a point
struct CriticalityReport {
  Eigen::VectorXd x;
  double delta = 1.0;
  std::vector<double> phi_values;              // [j-1] -> phi_j
  std::vector<Eigen::VectorXd> minimizers;     // matching displacements
  bool oracle_verified = false;

  int max_order() const { return static_cast<int>(phi_values.size()); }
  double phi_j(int j) const { return phi_values.at(static_cast<std::size_t>(j - 1)); }
};

// report with phi_j for j = 1..q of a degree-q model
CriticalityReport criticality_report(const TaylorModel& model, const ConvexSet& set,
                                     const Eigen::VectorXd& x, double delta);

// phi_j <= eps * Delta^j for all j <= q
bool is_critical(const CriticalityReport& report, double eps, int q);

// ||F(x)|| <= eps_P or phi_j <= eps_D * Delta^j * ||F(x)|| for all j <= q
bool is_ls_critical(const CriticalityReport& report, double residual_norm, double eps_P,
                    double eps_D, int q);

}  // namespace hiord
