#include "hiord/inner.hpp"

#include <cmath>

#include "hiord/errors.hpp"

namespace hiord {

void InnerConfig::validate() const {
  if (q < 1 || q > 3) throw ArgumentError("InnerConfig: q must be 1..3");
  if (!(delta0 > 0.0) || delta0 > 1.0) throw ArgumentError("InnerConfig: delta0 in (0,1]");
  if (!(shrink > 0.0 && shrink < 1.0)) throw ArgumentError("InnerConfig: shrink in (0,1)");
  if (!(eta > 0.0 && eta < 1.0)) throw ArgumentError("InnerConfig: eta in (0,1)");
  if (max_iterations < 1) throw ArgumentError("InnerConfig: max_iterations >= 1");
}

InnerResult minimize(const SmoothOracle& oracle, const ConvexSet& set, const Eigen::VectorXd& x0,
                     const StopPredicate& stop, const InnerConfig& cfg) {
  cfg.validate();
  if (!set.member(x0, 1e-10)) throw ArgumentError("inner minimize: x0 must lie in F");

  InnerResult res;
  res.x = x0;
  res.delta = cfg.delta0;
  res.psi = oracle.value(x0);
  ++res.trace.value_evals;
  std::vector<SymmetricTensor> tensors = oracle.derivatives(x0);
  ++res.trace.derivative_evals;

  long degenerate_shrinks = 0;
  while (true) {
    const TaylorModel model(res.psi, tensors);
    const CriticalityReport report = criticality_report(model, set, res.x, res.delta);
    if (stop(res.x, res.delta, report, res.psi)) {
      res.report = report;
      res.stopped = true;
      return res;
    }
    if (static_cast<long>(res.trace.iterations.size()) + degenerate_shrinks >=
        cfg.max_iterations) {
      res.report = report;
      res.stopped = false;
      throw MaxIterExceeded(std::move(res));
    }

    // the degree-q measure doubles as the trust-region step
    const Eigen::VectorXd d = report.minimizers.back();
    const double predicted = report.phi_values.back();

    if (predicted < cfg.min_predicted) {
      // degenerate model step: no point evaluating; shrink and retry
      res.delta *= cfg.shrink;
      ++degenerate_shrinks;
      continue;
    }

    InnerIteration it;
    it.x = res.x;
    it.psi = res.psi;
    it.delta = res.delta;
    it.predicted = predicted;

    const Eigen::VectorXd trial = res.x + d;
    const double trial_psi = oracle.value(trial);
    ++res.trace.value_evals;
    const double actual = res.psi - trial_psi;

    if (actual >= cfg.eta * predicted) {
      it.successful = true;
      it.decrease = actual;
      res.x = trial;
      res.psi = trial_psi;
      tensors = oracle.derivatives(res.x);
      ++res.trace.derivative_evals;
      res.trace.iterations.push_back(std::move(it));
      res.trace.success_set.push_back(static_cast<int>(res.trace.iterations.size()));
    } else {
      res.delta *= cfg.shrink;
      res.trace.iterations.push_back(std::move(it));
    }
  }
}

namespace {

bool same_point(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

}  // namespace

InnerResult minimize_least_squares(const ResidualOracle& oracle, const ConvexSet& set,
                                   const Eigen::VectorXd& x0, const LsStopPredicate& stop,
                                   const InnerConfig& cfg) {
  // residual bookkeeping: the stop predicate needs r at the current iterate,
  // which is always either the last accepted trial or the point the run
  // started from, so two slots suffice and nothing is re-evaluated
  struct Slot {
    bool filled = false;
    Eigen::VectorXd x;
    Eigen::VectorXd r;
  };
  Slot current, last_trial;

  SmoothOracle smooth{
      [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd r = oracle.values(x);
        if (!current.filled) {
          current = {true, x, r};
        } else {
          last_trial = {true, x, r};
        }
        return 0.5 * r.squaredNorm();
      },
      [&](const Eigen::VectorXd& x) {
        // reuse the residual already evaluated at this point; derivative
        // evaluations must not cost an extra residual evaluation
        Eigen::VectorXd r;
        if (last_trial.filled && same_point(x, last_trial.x))
          r = last_trial.r;
        else if (current.filled && same_point(x, current.x))
          r = current.r;
        else
          r = oracle.values(x);
        return least_squares_derivatives(r, oracle.derivatives(x), cfg.q).tensors;
      }};

  StopPredicate wrapped = [&](const Eigen::VectorXd& x, double delta,
                              const CriticalityReport& report, double /*psi*/) {
    if (last_trial.filled && same_point(x, last_trial.x)) {
      current = last_trial;  // the trial was accepted
      last_trial.filled = false;
    }
    if (!current.filled || !same_point(x, current.x)) current = {true, x, oracle.values(x)};
    return stop(x, delta, report, current.r);
  };
  return minimize(smooth, set, x0, wrapped, cfg);
}

InnerResult minimize_least_squares(const ResidualOracle& oracle, const ConvexSet& set,
                                   const Eigen::VectorXd& x0, double eps_P, double eps_D,
                                   const InnerConfig& cfg) {
  LsStopPredicate stop = [&](const Eigen::VectorXd&, double, const CriticalityReport& report,
                             const Eigen::VectorXd& r) {
    return is_ls_critical(report, r.norm(), eps_P, eps_D, cfg.q);
  };
  return minimize_least_squares(oracle, set, x0, stop, cfg);
}

UnsuccessfulAudit audit_unsuccessful_bound(const InnerTrace& trace) {
  UnsuccessfulAudit audit;
  audit.total_iterations = static_cast<long>(trace.iterations.size());
  if (audit.total_iterations == 0) throw ArgumentError("audit: empty trace");
  long successes = 0;
  for (long k = 1; k <= audit.total_iterations; ++k) {
    if (trace.iterations[static_cast<std::size_t>(k - 1)].successful) ++successes;
    if (successes == 0) continue;  // no ratio until the first success
    audit.max_ratio =
        std::max(audit.max_ratio, static_cast<double>(k) / static_cast<double>(successes));
  }
  audit.pass = successes > 0 && std::isfinite(audit.max_ratio);
  return audit;
}

}  // namespace hiord
