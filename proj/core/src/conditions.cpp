#include "hiord/conditions.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "hiord/errors.hpp"

namespace hiord {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void enumerate_tuples(int j, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    int sum = 0;
    for (int v : cur) sum += v;
    if (sum == j) out.push_back(cur);
    return;
  }
  for (int v = 1; v <= j; ++v) {
    cur.push_back(v);
    enumerate_tuples(j, k, cur, out);
    cur.pop_back();
  }
}

// sum over P(j,k) of T[s_{l_1},..,s_{l_k}] for a single order-k tensor
double composition_sum(const SymmetricTensor& tensor, const DirectionSequence& dirs, int j,
                       int k) {
  double acc = 0.0;
  for (const auto& tuple : compositions(j, k).tuples) {
    std::vector<Eigen::VectorXd> args;
    args.reserve(static_cast<std::size_t>(k));
    for (int l : tuple) args.push_back(dirs.s.at(static_cast<std::size_t>(l - 1)));
    acc += tensor.apply(args);
  }
  return acc;
}

}  // namespace

CompositionSet compositions(int j, int k) {
  if (k < 1 || j < k || j > 4) throw ArgumentError("compositions: need 1 <= k <= j <= 4");
  CompositionSet set;
  set.j = j;
  set.k = k;
  std::vector<int> cur;
  enumerate_tuples(j, k, cur, set.tuples);
  return set;
}

Eigen::VectorXd DirectionSequence::arc_point(const Eigen::VectorXd& x_star, double alpha) const {
  Eigen::VectorXd x = x_star;
  double a = 1.0;
  for (const auto& si : s) {
    a *= alpha;
    x += a * si;
  }
  return x;
}

double lagrangian_condition_value(const std::vector<SymmetricTensor>& lagrangian_tensors,
                                  const DirectionSequence& dirs, int j) {
  if (j < 1 || j > 4) throw ArgumentError("lagrangian_condition_value: order must be 1..4");
  if (static_cast<int>(lagrangian_tensors.size()) < j)
    throw ArgumentError("lagrangian_condition_value: missing tensors up to order j");
  if (dirs.count() < j)
    throw ArgumentError("lagrangian_condition_value: needs directions s_1..s_j");
  double acc = 0.0;
  for (int k = 1; k <= j; ++k)
    acc += composition_sum(lagrangian_tensors[static_cast<std::size_t>(k - 1)], dirs, j, k) /
           factorial(k);
  return acc;
}

Eigen::VectorXd feasibility_condition_value(
    const std::vector<std::vector<SymmetricTensor>>& c_tensors, const DirectionSequence& dirs,
    int i) {
  if (i < 1 || i > 4) throw ArgumentError("feasibility_condition_value: order must be 1..4");
  if (dirs.count() < i)
    throw ArgumentError("feasibility_condition_value: needs directions s_1..s_i");
  Eigen::VectorXd out(static_cast<Eigen::Index>(c_tensors.size()));
  for (std::size_t m = 0; m < c_tensors.size(); ++m) {
    if (static_cast<int>(c_tensors[m].size()) < i)
      throw ArgumentError("feasibility_condition_value: missing constraint tensors");
    double acc = 0.0;
    for (int k = 1; k <= i; ++k)
      acc += composition_sum(c_tensors[m][static_cast<std::size_t>(k - 1)], dirs, i, k) /
             factorial(k);
    out[static_cast<Eigen::Index>(m)] = acc;
  }
  return out;
}

ConditionsReport check_necessary(const PolynomialProblem& prob, const Eigen::VectorXd& x_star,
                                 const Eigen::VectorXd& y_star, const DirectionSequence& dirs,
                                 int q, double tol) {
  if (q < 1 || q > 4) throw ArgumentError("check_necessary: q must be 1..4");
  if (dirs.count() < q) throw ArgumentError("check_necessary: needs directions s_1..s_q");
  if (!prob.feasible_set.member(x_star, 1e-9))
    throw ArgumentError("check_necessary: x_star must lie in F");

  const DerivativeBundle bundle = evaluate_bundle(prob, x_star, q);
  const ScalarDerivatives lag = lagrangian_from_bundle(bundle, y_star, q);

  ConditionsReport report;
  report.first_order_cone_ok =
      prob.feasible_set.normal_cone_member(x_star, -lag.tensors[0].as_vector(), tol);

  report.verdict = true;
  for (int i = 1; i <= q; ++i) {
    const double lv = lagrangian_condition_value(lag.tensors, dirs, i);
    report.lagrangian_values.push_back(lv);
    const Eigen::VectorXd fv =
        prob.num_constraints() > 0
            ? feasibility_condition_value(bundle.c_tensors, dirs, i)
            : Eigen::VectorXd::Zero(0);
    report.feasibility_values.push_back(fv);
    const bool feas_ok = fv.size() == 0 || fv.cwiseAbs().maxCoeff() <= tol;
    report.feasibility_ok.push_back(feas_ok);
    report.verdict = report.verdict && feas_ok;
    if (i < q) {
      const bool zero_ok = std::abs(lv) <= tol;
      report.zero_set_ok.push_back(zero_ok);
      report.verdict = report.verdict && zero_ok;
    } else {
      report.order_q_value = lv;
      report.order_q_nonnegative = lv >= -tol;
      report.verdict = report.verdict && report.order_q_nonnegative;
    }
  }

  // sampled arc membership up to o(alpha^q) slack
  report.arc_in_set_ok = true;
  for (double alpha : {1e-1, 1e-2, 1e-3}) {
    const double slack = std::pow(alpha, static_cast<double>(q) + 0.5);
    if (prob.feasible_set.distance(dirs.arc_point(x_star, alpha)) > slack)
      report.arc_in_set_ok = false;
  }
  report.verdict = report.verdict && report.first_order_cone_ok && report.arc_in_set_ok;
  return report;
}

double penalty_fourth_order_terms(const PolynomialProblem& prob, const Eigen::VectorXd& x,
                                  double t, const Eigen::VectorXd& d) {
  const double gap = prob.f.eval(x) - t;
  if (gap == 0.0) throw NotApplicable("penalty_fourth_order_terms: requires f(x) != t");
  if (!(gap > 0.0)) throw ArgumentError("penalty_fourth_order_terms: requires f(x) - t > 0");
  double acc = 0.0;
  for (const auto& ci : prob.c) {
    const double v = derivative_tensor(ci, x, 2).apply_power(d);
    acc += v * v;
  }
  const double vf = derivative_tensor(prob.f, x, 2).apply_power(d);
  acc += vf * vf;
  return 3.0 / gap * acc;
}

PenaltyFailureReport demo_penalty_failure(double eps, const std::vector<double>& tau_grid) {
  if (!(eps > 0.0 && eps <= 1.0)) throw ArgumentError("demo_penalty_failure: eps in (0,1]");
  PenaltyFailureReport report;
  report.eps = eps;

  const PolynomialProblem prob = catalogue("theprob", eps);
  const int n = 2;
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(n);
  const double t = -eps;
  const Eigen::VectorXd e1 = Eigen::VectorXd::Unit(n, 0);
  const Eigen::VectorXd e2 = Eigen::VectorXd::Unit(n, 1);

  auto push = [&](const std::string& name, double computed, double reference) {
    ChainEntry e{name, computed, reference, std::abs(computed - reference) <= 1e-10};
    report.entries.push_back(e);
  };

  const DerivativeBundle bundle = evaluate_bundle(prob, origin, 4);

  // c(0) = eps = f(0) - t and the low-order derivatives of c and -f agree
  push("c(0)", bundle.c_values[0], eps);
  push("f(0)-t", bundle.f_value - t, eps);
  for (int k = 1; k <= 3; ++k) {
    SymmetricTensor sum = bundle.dc(0, k);
    sum += bundle.df(k);
    push("max|d" + std::to_string(k) + "c + d" + std::to_string(k) + "f|(0)", sum.max_abs_entry(),
         0.0);
  }

  // residual-function derivatives at (0, -eps)
  const MuDerivatives mu = mu_derivatives(prob, origin, t, 4);
  push("max|d1mu|(0,-eps)", mu.d(1).max_abs_entry(), 0.0);
  SymmetricTensor d2ref = SymmetricTensor::from_matrix(2.0 * e2 * e2.transpose());
  d2ref *= -1.0;
  d2ref += mu.d(2);
  push("max|d2mu - 2 e2 e2^T|(0,-eps)", d2ref.max_abs_entry(), 0.0);
  push("max|d3mu|(0,-eps)", mu.d(3).max_abs_entry(), 0.0);
  push("d4mu[e1]^4(0,-eps)", mu.d(4).apply_power(e1), 12.0 * (1.0 - eps));

  // Lagrangian at multiplier 1: a pure quartic with a maximizer at 0
  Eigen::VectorXd y(1);
  y[0] = 1.0;
  const ScalarDerivatives lag = lagrangian_from_bundle(bundle, y, 4);
  push("d4Lambda(0,1)[e1]^4", lag.tensors[3].apply_power(e1), -12.0);

  bool mu_necessary = true;
  bool lambda_necessary = true;
  for (double tau : tau_grid) {
    // direction sequence: s1 = tau e1, later s_i forced by the order-i
    // feasibility coefficients (grad c(0) = e2, so each solves in e2)
    DirectionSequence dirs;
    dirs.s.push_back(tau * e1);
    for (int i = 2; i <= 4; ++i) {
      dirs.s.push_back(Eigen::VectorXd::Zero(n));
      const double v = feasibility_condition_value(bundle.c_tensors, dirs, i)[0];
      dirs.s.back() = -v * e2;
    }
    const std::string suffix = " (tau=" + std::to_string(tau) + ")";
    push("e2's2" + suffix, e2.dot(dirs.s[1]), -tau * tau);

    // arc coefficients of mu at orders 2 and 3 vanish on this family
    push("mu arc order-2" + suffix, lagrangian_condition_value(mu.tensors, dirs, 2), 0.0);
    push("mu arc order-3" + suffix, lagrangian_condition_value(mu.tensors, dirs, 3), 0.0);

    const double mu4 = lagrangian_condition_value(mu.tensors, dirs, 4);
    push("mu arc order-4" + suffix, mu4, (1.0 - 0.5 * eps) * std::pow(tau, 4));
    if (tau != 0.0 && mu4 < -1e-12) mu_necessary = false;

    const double lam4 = lagrangian_condition_value(lag.tensors, dirs, 4);
    push("Lambda arc order-4" + suffix, lam4, -0.5 * std::pow(tau, 4));
    if (tau != 0.0 && lam4 < -1e-12) lambda_necessary = false;
  }

  report.mu_fourth_order_necessary = mu_necessary;
  report.lambda_fourth_order_necessary = lambda_necessary;
  report.all_match = true;
  for (const auto& e : report.entries) report.all_match = report.all_match && e.match;

  report.verdict = std::string("mu fourth-order-necessary ") + (mu_necessary ? "PASS" : "FAIL") +
                   ", Lambda fourth-order " + (lambda_necessary ? "PASS" : "FAIL") +
                   (lambda_necessary ? "" : " (maximizer direction)");
  return report;
}

Saddle3Report demo_saddle3() {
  Saddle3Report report;
  const PolynomialProblem prob = catalogue("saddle3d");
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(3);
  Eigen::VectorXd y0(2);
  y0 << 1.0, 0.0;
  const Eigen::VectorXd e1 = Eigen::VectorXd::Unit(3, 0);
  const Eigen::VectorXd e2 = Eigen::VectorXd::Unit(3, 1);
  const Eigen::VectorXd e3 = Eigen::VectorXd::Unit(3, 2);

  auto push = [&](const std::string& name, double computed, double reference) {
    report.entries.push_back(
        ChainEntry{name, computed, reference, std::abs(computed - reference) <= 1e-12});
  };

  const DerivativeBundle bundle = evaluate_bundle(prob, origin, 3);
  const ScalarDerivatives lag = lagrangian_from_bundle(bundle, y0, 3);

  push("max|d1Lambda(0,y0)|", lag.tensors[0].max_abs_entry(), 0.0);

  // kernel of the constraint Jacobian at the origin
  Eigen::MatrixXd jac(2, 3);
  jac.row(0) = bundle.dc(0, 1).as_vector().transpose();
  jac.row(1) = bundle.dc(1, 1).as_vector().transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeFullV);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > 1e-10 * svd.singularValues()[0]) ++rank;
  push("dim ker d1c(0)", static_cast<double>(3 - rank), 1.0);
  const Eigen::VectorXd kernel = svd.matrixV().col(2);
  push("|<ker basis, e2>|", std::abs(kernel.dot(e2)), 1.0);

  // Hessian of the Lagrangian as printed entrywise
  Eigen::MatrixXd h_ref(3, 3);
  h_ref << 0, 1, 0, 1, 0, 0, 0, 0, 0;
  push("max|d2Lambda(0,y0) - ref|", (lag.tensors[1].as_matrix() - h_ref).cwiseAbs().maxCoeff(),
       0.0);
  push("d3Lambda(0,y0)[2,2,2]", lag.tensors[2].entry({1, 1, 1}), 6.0);

  DirectionSequence dirs;
  dirs.s = {e2, -e1, e3};

  const std::vector<Eigen::VectorXd> s1s2{e2, -e1};
  push("d2Lambda[s1,s2]", lag.tensors[1].apply(s1s2), -1.0);
  push("d3Lambda[s1]^3", lag.tensors[2].apply_power(e2), 6.0);

  const Eigen::VectorXd feas2 = feasibility_condition_value(bundle.c_tensors, dirs, 2);
  const Eigen::VectorXd feas3 = feasibility_condition_value(bundle.c_tensors, dirs, 3);
  push("max|feasibility order-2|", feas2.cwiseAbs().maxCoeff(), 0.0);
  push("max|feasibility order-3|", feas3.cwiseAbs().maxCoeff(), 0.0);

  push("order-3 condition value", lagrangian_condition_value(lag.tensors, dirs, 3), 0.0);

  report.conditions = check_necessary(prob, origin, y0, dirs, 3, 1e-9);
  push("check_necessary verdict", report.conditions.verdict ? 1.0 : 0.0, 1.0);

  report.all_match = true;
  for (const auto& e : report.entries) report.all_match = report.all_match && e.match;
  return report;
}

}  // namespace hiord
