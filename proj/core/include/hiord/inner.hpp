#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "hiord/criticality.hpp"
#include "hiord/problem.hpp"

namespace hiord {

struct InnerConfig {
  int q = 1;                    // model degree / criticality order, 1..3
  double delta0 = 1.0;          // initial radius, in (0,1]
  double shrink = 0.5;          // gamma in (0,1)
  double eta = 0.1;             // acceptance ratio threshold in (0,1)
  double min_predicted = 1e-14; // below this the step counts as unsuccessful
  int max_iterations = 100000;

  void validate() const;
  // evaluation-complexity exponent of this solver class: decrease per
  // successful iteration scales like eps^pi
  double pi_exponent() const { return static_cast<double>(q) + 1.0; }
};

struct InnerIteration {
  Eigen::VectorXd x;       // iterate the step was attempted from
  double psi = 0.0;        // objective there
  double delta = 0.0;      // radius used
  bool successful = false;
  double decrease = 0.0;   // psi drop if successful
  double predicted = 0.0;  // model decrease of the step
};

struct InnerTrace {
  std::vector<InnerIteration> iterations;
  std::vector<int> success_set;  // 1-based indices into iterations
  long value_evals = 0;          // objective evaluations (incl. the initial one)
  long derivative_evals = 0;     // derivative evaluations (incl. the initial one)
};

struct InnerResult {
  Eigen::VectorXd x;
  double delta = 0.0;
  double psi = 0.0;
  CriticalityReport report;  // report that triggered the stop
  InnerTrace trace;
  bool stopped = false;  // false only when max_iterations was hit
};

// thrown when the iteration budget runs out; carries the partial run
struct MaxIterExceeded : std::runtime_error {
  explicit MaxIterExceeded(InnerResult r)
      : std::runtime_error("inner solver: max iterations exceeded"), result(std::move(r)) {}
  InnerResult result;
};

struct SmoothOracle {
  std::function<double(const Eigen::VectorXd&)> value;
  // derivative tensors, orders 1..q
  std::function<std::vector<SymmetricTensor>(const Eigen::VectorXd&)> derivatives;
};

using StopPredicate =
    std::function<bool(const Eigen::VectorXd& x, double delta, const CriticalityReport& report,
                       double psi_value)>;

// Trust-region method with non-increasing radius: each step globally
// minimizes the degree-q Taylor model over F(x) ∩ {||d|| <= Delta}; accepted
// when actual/predicted >= eta, otherwise Delta <- gamma * Delta.
InnerResult minimize(const SmoothOracle& oracle, const ConvexSet& set, const Eigen::VectorXd& x0,
                     const StopPredicate& stop, const InnerConfig& cfg);

struct ResidualOracle {
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> values;
  std::function<std::vector<std::vector<SymmetricTensor>>(const Eigen::VectorXd&)> derivatives;
};

using LsStopPredicate =
    std::function<bool(const Eigen::VectorXd& x, double delta, const CriticalityReport& report,
                       const Eigen::VectorXd& residual)>;

// minimize on psi = 1/2 ||r||^2; default stop is the least-squares
// criticality test with (eps_P, eps_D)
InnerResult minimize_least_squares(const ResidualOracle& oracle, const ConvexSet& set,
                                   const Eigen::VectorXd& x0, double eps_P, double eps_D,
                                   const InnerConfig& cfg);
InnerResult minimize_least_squares(const ResidualOracle& oracle, const ConvexSet& set,
                                   const Eigen::VectorXd& x0, const LsStopPredicate& stop,
                                   const InnerConfig& cfg);

struct UnsuccessfulAudit {
  long total_iterations = 0;
  double max_ratio = 0.0;  // fitted kappa_uns = max_k k / |S ∩ [k]|
  bool pass = false;
};

// verifies k <= kappa_uns |S ∩ [k]| across the trace
UnsuccessfulAudit audit_unsuccessful_bound(const InnerTrace& trace);

}  // namespace hiord
