#include "hiord/problem.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "hiord/errors.hpp"

namespace hiord {

PolynomialProblem make_problem(Polynomial f, std::vector<Polynomial> c, ConvexSet set,
                               std::optional<double> f_low) {
  const int n = f.dim();
  for (const auto& ci : c)
    if (ci.dim() != n) throw ArgumentError("problem: constraint dim mismatch");
  if (set.dim() != n) throw ArgumentError("problem: feasible-set dim mismatch");
  return PolynomialProblem{std::move(f), std::move(c), std::move(set), f_low};
}

DerivativeBundle evaluate_bundle(const PolynomialProblem& prob, const Eigen::VectorXd& x,
                                 int order) {
  if (order < 1 || order > 4) throw UnsupportedOrder("evaluate_bundle: order must be 1..4");
  DerivativeBundle b;
  b.x = x;
  b.order = order;
  b.f_value = prob.f.eval(x);
  b.c_values.resize(prob.num_constraints());
  for (int k = 1; k <= order; ++k) b.f_tensors.push_back(derivative_tensor(prob.f, x, k));
  b.c_tensors.resize(static_cast<std::size_t>(prob.num_constraints()));
  for (int i = 0; i < prob.num_constraints(); ++i) {
    b.c_values[i] = prob.c[static_cast<std::size_t>(i)].eval(x);
    for (int k = 1; k <= order; ++k)
      b.c_tensors[static_cast<std::size_t>(i)].push_back(
          derivative_tensor(prob.c[static_cast<std::size_t>(i)], x, k));
  }
  return b;
}

ScalarDerivatives least_squares_derivatives(
    const Eigen::VectorXd& r_values, const std::vector<std::vector<SymmetricTensor>>& r_tensors,
    int up_to) {
  if (up_to < 1 || up_to > 4) throw UnsupportedOrder("least_squares_derivatives: order 1..4");
  const int m = static_cast<int>(r_values.size());
  if (static_cast<int>(r_tensors.size()) != m)
    throw ArgumentError("least_squares_derivatives: value/tensor count mismatch");
  if (m == 0) throw ArgumentError("least_squares_derivatives: empty residual");
  const int n = r_tensors[0][0].dim();

  ScalarDerivatives out;
  out.value = 0.5 * r_values.squaredNorm();
  for (int k = 1; k <= up_to; ++k) out.tensors.emplace_back(k, n);

  for (int i = 0; i < m; ++i) {
    const auto& ti = r_tensors[static_cast<std::size_t>(i)];
    if (static_cast<int>(ti.size()) < up_to)
      throw ArgumentError("least_squares_derivatives: missing residual tensors");
    const double ri = r_values[i];
    const SymmetricTensor& g1 = ti[0];
    out.tensors[0] += ri * g1;
    if (up_to >= 2) out.tensors[1] += sym_outer(g1, g1) + ri * ti[1];
    if (up_to >= 3) out.tensors[2] += 3.0 * sym_outer(ti[1], g1) + ri * ti[2];
    if (up_to >= 4)
      out.tensors[3] +=
          4.0 * sym_outer(ti[2], g1) + 3.0 * sym_outer(ti[1], ti[1]) + ri * ti[3];
  }
  return out;
}

ScalarDerivatives nu_from_bundle(const DerivativeBundle& bundle, int up_to) {
  if (bundle.order < up_to) throw ArgumentError("nu_from_bundle: bundle order too low");
  const int n = static_cast<int>(bundle.x.size());
  if (bundle.c_values.size() == 0) {
    ScalarDerivatives out;
    out.value = 0.0;
    for (int k = 1; k <= up_to; ++k) out.tensors.emplace_back(k, n);
    return out;
  }
  return least_squares_derivatives(bundle.c_values, bundle.c_tensors, up_to);
}

ScalarDerivatives nu_derivatives(const PolynomialProblem& prob, const Eigen::VectorXd& x,
                                 int up_to) {
  return nu_from_bundle(evaluate_bundle(prob, x, up_to), up_to);
}

MuDerivatives mu_from_bundle(const DerivativeBundle& bundle, double t, int up_to) {
  if (bundle.order < up_to) throw ArgumentError("mu_from_bundle: bundle order too low");
  const int m = static_cast<int>(bundle.c_values.size());
  Eigen::VectorXd r(m + 1);
  r.head(m) = bundle.c_values;
  r[m] = bundle.f_value - t;
  std::vector<std::vector<SymmetricTensor>> tensors = bundle.c_tensors;
  tensors.push_back(bundle.f_tensors);
  ScalarDerivatives ls = least_squares_derivatives(r, tensors, up_to);
  MuDerivatives out;
  out.value = ls.value;
  out.residual = std::move(r);
  out.tensors = std::move(ls.tensors);
  return out;
}

MuDerivatives mu_derivatives(const PolynomialProblem& prob, const Eigen::VectorXd& x, double t,
                             int up_to) {
  return mu_from_bundle(evaluate_bundle(prob, x, up_to), t, up_to);
}

ScalarDerivatives lagrangian_from_bundle(const DerivativeBundle& bundle, const Eigen::VectorXd& y,
                                         int up_to) {
  if (bundle.order < up_to) throw ArgumentError("lagrangian_from_bundle: bundle order too low");
  if (y.size() != bundle.c_values.size())
    throw ArgumentError("lagrangian: multiplier length must equal constraint count");
  ScalarDerivatives out;
  out.value = bundle.f_value + y.dot(bundle.c_values);
  for (int k = 1; k <= up_to; ++k) {
    SymmetricTensor t = bundle.df(k);
    for (int i = 0; i < y.size(); ++i) t += y[i] * bundle.dc(static_cast<int>(i), k);
    out.tensors.push_back(std::move(t));
  }
  return out;
}

ScalarDerivatives lagrangian_derivatives(const PolynomialProblem& prob, const Eigen::VectorXd& x,
                                         const Eigen::VectorXd& y, int up_to) {
  return lagrangian_from_bundle(evaluate_bundle(prob, x, up_to), y, up_to);
}

Eigen::MatrixXd m_subspace_basis(const PolynomialProblem& prob, const Eigen::VectorXd& x,
                                 double tol) {
  const int n = prob.dim();
  const int m = prob.num_constraints();
  Eigen::MatrixXd A(m + 1, n);
  for (int i = 0; i < m; ++i)
    A.row(i) = derivative_tensor(prob.c[static_cast<std::size_t>(i)], x, 1).as_vector().transpose();
  A.row(m) = derivative_tensor(prob.f, x, 1).as_vector().transpose();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  const double cutoff = (tol > 0 ? tol : 1e-10) * smax;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

PolynomialProblem catalogue(const std::string& name, double eps) {
  auto T = [](std::vector<int> e, double c) { return PolyTerm{std::move(e), c}; };

  if (name == "saddle3d") {
    // f = x1 + x2^2 + x2^3 - x3
    Polynomial f(3, {T({1, 0, 0}, 1), T({0, 2, 0}, 1), T({0, 3, 0}, 1), T({0, 0, 1}, -1)});
    // c1 = -x1 - x2^2 + x1 x2 + x3,  c2 = x1 + x2^2 + x1 x2 + x3
    Polynomial c1(3, {T({1, 0, 0}, -1), T({0, 2, 0}, -1), T({1, 1, 0}, 1), T({0, 0, 1}, 1)});
    Polynomial c2(3, {T({1, 0, 0}, 1), T({0, 2, 0}, 1), T({1, 1, 0}, 1), T({0, 0, 1}, 1)});
    return make_problem(f, {c1, c2}, ConvexSet::all(3));
  }
  if (name == "theprob") {
    if (!(eps > 0.0 && eps <= 1.0)) throw ArgumentError("theprob: eps must lie in (0,1]");
    // f = -x2 - x1^2 + x1 x2 - 1/2 x1^4,  c = eps + x2 + x1^2 - x1 x2
    Polynomial f(2, {T({0, 1}, -1), T({2, 0}, -1), T({1, 1}, 1), T({4, 0}, -0.5)});
    Polynomial c(2, {T({0, 0}, eps), T({0, 1}, 1), T({2, 0}, 1), T({1, 1}, -1)});
    return make_problem(f, {c}, ConvexSet::all(2));
  }
  if (name == "circle_linear") {
    // min x1 + x2 subject to x1^2 + x2^2 - 1 = 0
    Polynomial f(2, {T({1, 0}, 1), T({0, 1}, 1)});
    Polynomial c(2, {T({2, 0}, 1), T({0, 2}, 1), T({0, 0}, -1)});
    return make_problem(f, {c}, ConvexSet::all(2), -2.0);
  }
  if (name == "infeasible1d") {
    // c = x^2 + 1 has no roots
    Polynomial f(1, {T({1}, 1)});
    Polynomial c(1, {T({2}, 1), T({0}, 1)});
    return make_problem(f, {c}, ConvexSet::all(1));
  }
  if (name == "box_quadratic") {
    // min (x-2)^2 on [0,1], no equalities
    Polynomial f(1, {T({2}, 1), T({1}, -4), T({0}, 4)});
    Eigen::VectorXd lo(1), hi(1);
    lo[0] = 0.0;
    hi[0] = 1.0;
    return make_problem(f, {}, ConvexSet::box(lo, hi), 0.0);
  }
  throw NotFound("catalogue: unknown problem '" + name + "'");
}

}  // namespace hiord
