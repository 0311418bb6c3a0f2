#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "hiord/convex_set.hpp"
#include "hiord/polynomial.hpp"
#include "hiord/tensor.hpp"

namespace hiord {

// min_{x in F} f(x) subject to c(x) = 0
struct PolynomialProblem {
  Polynomial f;
  std::vector<Polynomial> c;
  ConvexSet feasible_set;
  std::optional<double> f_low;

  int dim() const { return f.dim(); }
  int num_constraints() const { return static_cast<int>(c.size()); }
};

PolynomialProblem make_problem(Polynomial f, std::vector<Polynomial> c, ConvexSet set,
                               std::optional<double> f_low = std::nullopt);

// f, c and their derivative tensors at a base point, orders 1..order
struct DerivativeBundle {
  Eigen::VectorXd x;
  double f_value = 0.0;
  Eigen::VectorXd c_values;
  std::vector<SymmetricTensor> f_tensors;               // [k-1] -> grad^k f
  std::vector<std::vector<SymmetricTensor>> c_tensors;  // [i][k-1] -> grad^k c_i
  int order = 0;

  const SymmetricTensor& df(int k) const { return f_tensors.at(static_cast<std::size_t>(k - 1)); }
  const SymmetricTensor& dc(int i, int k) const {
    return c_tensors.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k - 1));
  }
};

DerivativeBundle evaluate_bundle(const PolynomialProblem& prob, const Eigen::VectorXd& x,
                                 int order);

// value + derivative tensors of a smooth function at a point
struct ScalarDerivatives {
  double value = 0.0;
  std::vector<SymmetricTensor> tensors;  // orders 1..up_to

  const SymmetricTensor& d(int k) const { return tensors.at(static_cast<std::size_t>(k - 1)); }
};

// derivative tensors of 1/2 ||r||^2 assembled by the product rule from the
// residual values and tensors (orders 1..up_to, up_to <= 4)
ScalarDerivatives least_squares_derivatives(const Eigen::VectorXd& r_values,
                                            const std::vector<std::vector<SymmetricTensor>>& r_tensors,
                                            int up_to);

// nu(x) = 1/2 ||c(x)||^2
ScalarDerivatives nu_derivatives(const PolynomialProblem& prob, const Eigen::VectorXd& x,
                                 int up_to);
ScalarDerivatives nu_from_bundle(const DerivativeBundle& bundle, int up_to);

// mu(x,t) = 1/2 ||r(x,t)||^2 with r = (c(x); f(x)-t)
struct MuDerivatives {
  double value = 0.0;
  Eigen::VectorXd residual;  // (c(x); f(x)-t)
  std::vector<SymmetricTensor> tensors;

  const SymmetricTensor& d(int k) const { return tensors.at(static_cast<std::size_t>(k - 1)); }
};
MuDerivatives mu_derivatives(const PolynomialProblem& prob, const Eigen::VectorXd& x, double t,
                             int up_to);
MuDerivatives mu_from_bundle(const DerivativeBundle& bundle, double t, int up_to);

// Lagrangian(x,y) = f(x) + y'c(x)
ScalarDerivatives lagrangian_derivatives(const PolynomialProblem& prob, const Eigen::VectorXd& x,
                                         const Eigen::VectorXd& y, int up_to);
ScalarDerivatives lagrangian_from_bundle(const DerivativeBundle& bundle, const Eigen::VectorXd& y,
                                         int up_to);

// Orthonormal basis of M(x) = ker grad c(x) ∩ ker grad f(x); columns span the
// null space of the stacked (m+1) x n matrix, singular values below
// tol * sigma_max counting as zero. tol <= 0 selects the default 1e-10.
Eigen::MatrixXd m_subspace_basis(const PolynomialProblem& prob, const Eigen::VectorXd& x,
                                 double tol = -1.0);

// Named example problems. theprob takes epsilon in (0,1].
PolynomialProblem catalogue(const std::string& name, double eps = 1.0);

}  // namespace hiord
