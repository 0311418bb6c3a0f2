#include "hiord/outer.hpp"

#include <cmath>
#include <random>

#include "hiord/errors.hpp"
#include "hiord/sobol.hpp"

namespace hiord {

namespace {

bool same_point(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

void OuterConfig::validate() const {
  if (!(eps_P > 0.0 && eps_P < 1.0)) throw ArgumentError("OuterConfig: eps_P in (0,1)");
  if (!(eps_D > 0.0 && eps_D < 1.0)) throw ArgumentError("OuterConfig: eps_D in (0,1)");
  if (!(delta > 0.0 && delta < 1.0)) throw ArgumentError("OuterConfig: delta in (0,1)");
  if (q < 1 || q > 3) throw ArgumentError("OuterConfig: q must be 1..3");
  if (max_outer_iterations < 1) throw ArgumentError("OuterConfig: max_outer_iterations >= 1");
}

std::string to_string(TerminationKind kind) {
  return kind == TerminationKind::InfeasibleCritical ? "infeasible_critical" : "scaled_critical";
}

// Counted access to the problem functions.  The bundle at the current iterate
// is cached, so re-targeting mu never re-evaluates f, c or their derivatives.
class Phase2State {
 public:
  Phase2State(const PolynomialProblem& prob, const OuterConfig& cfg, int order, long* f_count,
              long* df_count)
      : prob_(&prob), cfg_(&cfg), order_(order), f_count_(f_count), df_count_(df_count) {}

  struct Values {
    double f = 0.0;
    Eigen::VectorXd c;
  };

  Values values(const Eigen::VectorXd& x) {
    if (has_bundle_ && same_point(bundle_.x, x)) return {bundle_.f_value, bundle_.c_values};
    if (has_values_ && same_point(value_x_, x)) return last_values_;
    if (f_count_) ++*f_count_;
    if (cfg_->on_value_eval) cfg_->on_value_eval(x);
    Values v;
    v.f = prob_->f.eval(x);
    v.c.resize(prob_->num_constraints());
    for (int i = 0; i < prob_->num_constraints(); ++i)
      v.c[i] = prob_->c[static_cast<std::size_t>(i)].eval(x);
    value_x_ = x;
    last_values_ = v;
    has_values_ = true;
    return v;
  }

  const DerivativeBundle& bundle(const Eigen::VectorXd& x) {
    if (has_bundle_ && same_point(bundle_.x, x)) return bundle_;
    if (df_count_) ++*df_count_;
    if (cfg_->on_bundle_eval) cfg_->on_bundle_eval(x);
    bundle_ = evaluate_bundle(*prob_, x, order_);
    has_bundle_ = true;
    return bundle_;
  }

  const DerivativeBundle& cached_bundle() const {
    if (!has_bundle_) throw NotApplicable("Phase2State: no cached bundle");
    return bundle_;
  }

  int order() const { return order_; }

 private:
  const PolynomialProblem* prob_;
  const OuterConfig* cfg_;
  int order_;
  long* f_count_;
  long* df_count_;
  DerivativeBundle bundle_;
  bool has_bundle_ = false;
  Eigen::VectorXd value_x_;
  Values last_values_;
  bool has_values_ = false;
};

namespace {

// phase-1 residual is c(x) itself
ResidualOracle phase1_oracle(Phase2State& state) {
  return ResidualOracle{
      [&state](const Eigen::VectorXd& x) { return state.values(x).c; },
      [&state](const Eigen::VectorXd& x) { return state.bundle(x).c_tensors; }};
}

// phase-2 residual r(x,t) = (c(x); f(x) - t)
ResidualOracle phase2_oracle(Phase2State& state, double t) {
  return ResidualOracle{
      [&state, t](const Eigen::VectorXd& x) {
        const auto v = state.values(x);
        Eigen::VectorXd r(v.c.size() + 1);
        r.head(v.c.size()) = v.c;
        r[v.c.size()] = v.f - t;
        return r;
      },
      [&state](const Eigen::VectorXd& x) {
        const DerivativeBundle& b = state.bundle(x);
        std::vector<std::vector<SymmetricTensor>> tensors = b.c_tensors;
        tensors.push_back(b.f_tensors);
        return tensors;
      }};
}

TerminationCertificate make_certificate(TerminationKind kind, const Eigen::VectorXd& x,
                                        std::optional<double> t, const PolynomialProblem& prob,
                                        double delta, const CriticalityReport& report,
                                        double r_norm, double c_norm, double f_value) {
  TerminationCertificate cert;
  cert.kind = kind;
  cert.x = x;
  cert.t = t;
  cert.delta = delta;
  cert.phi_values = report.phi_values;
  cert.residual_norm = r_norm;
  cert.c_norm = c_norm;
  cert.f_value = f_value;
  if (kind == TerminationKind::ScaledCritical && t && f_value > *t)
    cert.y = recover_multiplier(x, *t, prob);
  return cert;
}

}  // namespace

Phase1Result phase1(const PolynomialProblem& prob, const Eigen::VectorXd& x_start,
                    const OuterConfig& cfg, EvalCounters* counters) {
  cfg.validate();
  const Eigen::VectorXd x0 = prob.feasible_set.project(x_start);
  InnerConfig icfg = cfg.inner_phase1;
  icfg.q = cfg.q;

  EvalCounters local;
  EvalCounters* cnt = counters ? counters : &local;
  Phase2State state(prob, cfg, cfg.q, &cnt->phase1_f, &cnt->phase1_df);

  Phase1Result out;
  if (prob.num_constraints() == 0) {
    // nothing to do: ||c|| = 0 < delta * eps_P already
    if (counters) ++counters->phase1_f;
    if (cfg.on_value_eval) cfg.on_value_eval(x0);
    out.feasible_reached = true;
    out.x1 = x0;
    out.c_norm = 0.0;
    out.f_value = prob.f.eval(x0);
    out.delta = icfg.delta0;
    out.inner.x = x0;
    out.inner.delta = icfg.delta0;
    out.inner.stopped = true;
    return out;
  }

  const double threshold = cfg.delta * cfg.eps_P;
  LsStopPredicate stop = [&](const Eigen::VectorXd&, double delta, const CriticalityReport& report,
                             const Eigen::VectorXd& r) {
    const double c_norm = r.norm();
    if (c_norm < threshold) return true;
    for (int j = 1; j <= cfg.q; ++j)
      if (report.phi_j(j) > cfg.eps_D * std::pow(delta, j) * c_norm) return false;
    return true;
  };

  InnerResult inner =
      minimize_least_squares(phase1_oracle(state), prob.feasible_set, x0, stop, icfg);

  const DerivativeBundle& b = state.cached_bundle();
  if (!same_point(b.x, inner.x)) throw InvariantViolation("phase1: bundle/iterate mismatch");
  out.x1 = inner.x;
  out.c_norm = b.c_values.norm();
  out.f_value = b.f_value;
  out.delta = inner.delta;

  if (out.c_norm > threshold) {
    // infeasible critical point of the constraint violation
    out.certificate =
        make_certificate(TerminationKind::InfeasibleCritical, inner.x, std::nullopt, prob,
                         inner.delta, inner.report, out.c_norm, out.c_norm, out.f_value);
  } else {
    out.feasible_reached = true;
  }
  out.inner = std::move(inner);
  return out;
}

double target_from_values(double f_value, double c_norm, double eps_P) {
  const double radicand = eps_P * eps_P - c_norm * c_norm;
  if (radicand < -1e-14)
    throw InvariantViolation("initial target: ||c|| exceeds eps_P beyond tolerance");
  return f_value - std::sqrt(std::max(0.0, radicand));
}

double initial_target(const Eigen::VectorXd& x1, const PolynomialProblem& prob, double eps_P) {
  double c2 = 0.0;
  for (const auto& ci : prob.c) {
    const double v = ci.eval(x1);
    c2 += v * v;
  }
  return target_from_values(prob.f.eval(x1), std::sqrt(c2), eps_P);
}

Phase2Outcome phase2_step(const PolynomialProblem& prob, const Eigen::VectorXd& x_k, double t_k,
                          double delta_prev, const OuterConfig& cfg, Phase2State* state,
                          EvalCounters* counters) {
  cfg.validate();
  if (!(delta_prev > 0.0) || delta_prev > 1.0)
    throw ArgumentError("phase2_step: delta_prev must lie in (0,1]");

  EvalCounters local_counters;
  EvalCounters* cnt = counters ? counters : &local_counters;
  std::optional<Phase2State> local_state;
  if (!state) {
    local_state.emplace(prob, cfg, cfg.q, &cnt->phase2_f, &cnt->phase2_df);
    state = &*local_state;
  }

  InnerConfig icfg = cfg.inner_phase2;
  icfg.q = cfg.q;
  icfg.delta0 = std::min(delta_prev, 1.0);

  const double small = cfg.delta * cfg.eps_P;
  LsStopPredicate stop = [&](const Eigen::VectorXd&, double delta, const CriticalityReport& report,
                             const Eigen::VectorXd& r) {
    if (r.norm() < small) return true;            // residual already small
    if (r[r.size() - 1] < 0.0) return true;       // f overshot the target
    for (int j = 1; j <= cfg.q; ++j)              // scaled criticality
      if (report.phi_j(j) > cfg.eps_D * std::pow(delta, j) * r.norm()) return false;
    return true;
  };

  InnerResult inner =
      minimize_least_squares(phase2_oracle(*state, t_k), prob.feasible_set, x_k, stop, icfg);

  const DerivativeBundle& b = state->cached_bundle();
  if (!same_point(b.x, inner.x)) throw InvariantViolation("phase2: bundle/iterate mismatch");

  Phase2Outcome out;
  out.x_next = inner.x;
  out.delta = inner.delta;
  out.c_norm = b.c_values.norm();
  const double f_val = b.f_value;
  const double gap_k = f_val - t_k;
  out.r_norm_at_tk = std::sqrt(out.c_norm * out.c_norm + gap_k * gap_k);

  auto termp_holds = [&](double t_next, double r_next) {
    const MuDerivatives mu = mu_from_bundle(b, t_next, cfg.q);
    const TaylorModel model(mu.value, mu.tensors);
    const CriticalityReport report =
        criticality_report(model, prob.feasible_set, inner.x, inner.delta);
    for (int j = 1; j <= cfg.q; ++j)
      if (report.phi_j(j) > cfg.eps_D * std::pow(inner.delta, j) * r_next) return false;
    return true;
  };

  auto finish = [&](double t_eps, double gap, double r_norm) {
    const MuDerivatives mu = mu_from_bundle(b, t_eps, cfg.q);
    const TaylorModel model(mu.value, mu.tensors);
    const CriticalityReport report =
        criticality_report(model, prob.feasible_set, inner.x, inner.delta);
    const TerminationKind kind =
        gap > 0.0 ? TerminationKind::ScaledCritical : TerminationKind::InfeasibleCritical;
    out.certificate = make_certificate(kind, inner.x, t_eps, prob, inner.delta, report, r_norm,
                                       out.c_norm, f_val);
    out.terminated = true;
  };

  if (out.r_norm_at_tk < small) {
    // case (i): pull the target back so the residual returns to eps_P
    out.which = Phase2Case::Update;
    out.t_next = target_from_values(f_val, out.c_norm, cfg.eps_P);
    out.gap_next = std::sqrt(std::max(0.0, cfg.eps_P * cfg.eps_P - out.c_norm * out.c_norm));
    out.r_norm_next = std::sqrt(out.c_norm * out.c_norm + out.gap_next * out.gap_next);
    if (termp_holds(out.t_next, out.r_norm_next)) finish(out.t_next, out.gap_next, out.r_norm_next);
  } else if (gap_k < 0.0) {
    // case (ii): reflect the target past f, preserving the residual norm
    out.which = Phase2Case::Swap;
    out.t_next = 2.0 * f_val - t_k;
    out.gap_next = -gap_k;
    out.r_norm_next = out.r_norm_at_tk;
    if (termp_holds(out.t_next, out.r_norm_next)) finish(out.t_next, out.gap_next, out.r_norm_next);
  } else {
    // case (iii): large residual and f at or above the target
    out.which = Phase2Case::Final;
    out.t_next = t_k;
    out.gap_next = gap_k;
    out.r_norm_next = out.r_norm_at_tk;
    finish(t_k, gap_k, out.r_norm_at_tk);
  }
  out.inner = std::move(inner);
  return out;
}

Eigen::VectorXd recover_multiplier(const Eigen::VectorXd& x, double t,
                                   const PolynomialProblem& prob) {
  const double gap = prob.f.eval(x) - t;
  if (!(gap > 0.0))
    throw NotApplicable("recover_multiplier: requires f(x) > t");
  Eigen::VectorXd y(prob.num_constraints());
  for (int i = 0; i < prob.num_constraints(); ++i)
    y[i] = prob.c[static_cast<std::size_t>(i)].eval(x) / gap;
  return y;
}

SolveResult solve(const PolynomialProblem& prob, const Eigen::VectorXd& x_start,
                  const OuterConfig& cfg) {
  cfg.validate();
  SolveResult result;
  OuterTrace& trace = result.trace;

  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    auto [it, inserted] = trace.invariant_checks.try_emplace(name, ok);
    if (!inserted) it->second = it->second && ok;
    if (!ok) throw InvariantViolation("outer invariant '" + name + "' failed: " + detail);
  };

  Phase1Result p1 = phase1(prob, x_start, cfg, &trace.counters);
  trace.phase1 = p1.inner;
  if (p1.certificate) {
    trace.phase1_only = true;
    trace.termination = TerminationKind::InfeasibleCritical;
    result.certificate = *p1.certificate;
    if (!verify_certificate(prob, result.certificate, cfg))
      throw InvariantViolation("phase-1 certificate failed re-verification");
    trace.invariant_checks["certificate_reverified"] = true;
    return result;
  }

  trace.f_at_phase2_start = p1.f_value;
  trace.c_norm_at_phase2_start = p1.c_norm;

  Phase2State state(prob, cfg, cfg.q, &trace.counters.phase2_f, &trace.counters.phase2_df);
  Eigen::VectorXd x = p1.x1;
  double t = target_from_values(p1.f_value, p1.c_norm, cfg.eps_P);
  // f - t tracked alongside t; the swap update negates it exactly
  double gap = std::sqrt(std::max(0.0, cfg.eps_P * cfg.eps_P - p1.c_norm * p1.c_norm));
  double c_norm = p1.c_norm;
  double delta = std::min(p1.delta, 1.0);
  trace.t_history.push_back(t);

  for (long k = 1;; ++k) {
    if (k > cfg.max_outer_iterations) throw OuterMaxIterExceeded(std::move(trace));

    check("approxfeas_c", c_norm <= cfg.eps_P + 1e-12,
          "||c(x_k)|| = " + std::to_string(c_norm));
    check("approxfeas_gap", gap <= cfg.eps_P + 1e-12, "f - t = " + std::to_string(gap));
    check("tkltfk", gap >= -1e-12, "f - t = " + std::to_string(gap));

    Phase2Outcome step = phase2_step(prob, x, t, delta, cfg, &state, &trace.counters);

    OuterIterationRecord rec;
    rec.t = t;
    rec.r_norm = step.r_norm_at_tk;
    rec.c_norm = step.c_norm;
    rec.delta = step.delta;
    rec.inner_iterations = static_cast<long>(step.inner.trace.iterations.size());
    rec.inner_successes = static_cast<long>(step.inner.trace.success_set.size());
    rec.inner_trace = step.inner.trace;

    check("delta_nonincreasing", step.delta <= delta + 0.0,
          "Delta_k = " + std::to_string(step.delta));

    if (step.which == Phase2Case::Update) {
      rec.tag = '+';
      check("nreseps", std::abs(step.r_norm_next - cfg.eps_P) <= 1e-12,
            "||r(x,t_next)|| = " + std::to_string(step.r_norm_next));
      check("tkdecr", t - step.t_next >= (1.0 - cfg.delta) * cfg.eps_P - 1e-12,
            "t drop = " + std::to_string(t - step.t_next));
    } else if (step.which == Phase2Case::Swap) {
      rec.tag = '-';
      check("r_swap_equal", step.r_norm_next == step.r_norm_at_tk, "swap residual changed");
      check("r_swap_small", step.r_norm_next <= cfg.eps_P + 1e-12,
            "||r|| = " + std::to_string(step.r_norm_next));
    }
    if (step.which != Phase2Case::Final)
      check("t_strictly_decreasing", step.t_next < t, "t_next = " + std::to_string(step.t_next));

    if (step.terminated) {
      rec.tag = step.which == Phase2Case::Update ? '+' : (step.which == Phase2Case::Swap ? '-' : '.');
      trace.iterations.push_back(std::move(rec));
      if (step.which != Phase2Case::Final) trace.t_history.push_back(step.t_next);

      result.certificate = *step.certificate;
      trace.termination = result.certificate.kind;
      // conditions at termination
      check("termination_residual", result.certificate.residual_norm >= cfg.delta * cfg.eps_P - 1e-12,
            "||r|| = " + std::to_string(result.certificate.residual_norm));
      check("termination_gap", result.certificate.f_value >= *result.certificate.t - 1e-12,
            "f - t = " + std::to_string(result.certificate.f_value - *result.certificate.t));
      if (!verify_certificate(prob, result.certificate, cfg))
        throw InvariantViolation("phase-2 certificate failed re-verification");
      trace.invariant_checks["certificate_reverified"] = true;
      return result;
    }

    trace.partition.push_back(rec.tag);
    trace.iterations.push_back(std::move(rec));
    x = step.x_next;
    t = step.t_next;
    gap = step.gap_next;
    c_norm = step.c_norm;
    delta = step.delta;
    trace.t_history.push_back(t);
  }
}

ScaledKktReport scaled_kkt_check(const PolynomialProblem& prob, const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& y, double delta, double eps_D, int q) {
  if (q < 1 || q > 3) throw ArgumentError("scaled_kkt_check: q must be 1..3");
  ScaledKktReport report;
  report.multiplier_scale = std::sqrt(1.0 + y.squaredNorm());

  const ScalarDerivatives lag = lagrangian_derivatives(prob, x, y, q);
  const TaylorModel model(lag.value, lag.tensors);
  const double tol_rel = 1e-9;

  auto add_row = [&](const std::string& name, double lhs, int order) {
    ScaledKktRow row;
    row.name = name;
    row.lhs = lhs;
    row.rhs = eps_D * std::pow(delta, order) * report.multiplier_scale;
    row.pass = lhs <= row.rhs * (1.0 + tol_rel) + 1e-15;
    report.rows.push_back(row);
  };

  add_row("phi_lagrangian_1", phi(TaylorModel::truncate(model, 1), prob.feasible_set, x, delta).phi,
          1);

  // projection form of the first-order condition;  phi_1 = Delta * ||P_T||
  // over a cone, so the Delta factor cancels against the measure's own
  const Eigen::VectorXd grad = lag.tensors[0].as_vector();
  const auto split = prob.feasible_set.moreau_decompose(x, -grad);
  add_row("tangent_projection", split.tangent.norm(), 0);

  if (q >= 2) {
    const Eigen::MatrixXd basis = m_subspace_basis(prob, x);
    for (int j = 2; j <= q; ++j)
      add_row("phi_hat_lagrangian_" + std::to_string(j),
              phi_hat(TaylorModel::truncate(model, j), prob.feasible_set, x, basis, delta).phi, j);
  }

  report.pass = true;
  for (const auto& row : report.rows) report.pass = report.pass && row.pass;
  return report;
}

LowerBoundProbeReport lower_bound_probe(const PolynomialProblem& prob,
                                        const TerminationCertificate& cert, const OuterConfig& cfg,
                                        double lipschitz_estimate, long samples) {
  if (!(lipschitz_estimate > 0.0))
    throw ArgumentError("lower_bound_probe: Lipschitz estimate must be positive");
  LowerBoundProbeReport report;
  const int q = cfg.q;
  const double eps_eff = cfg.eps_D * cert.residual_norm;
  const double delta_q = std::pow(cert.delta, q);
  report.slack = 2.0 * eps_eff * delta_q;
  report.radius =
      std::pow(factorial(q) * eps_eff * delta_q / lipschitz_estimate, 1.0 / (q + 1.0));

  auto psi = [&](const Eigen::VectorXd& z) {
    double acc = 0.0;
    for (const auto& ci : prob.c) {
      const double v = ci.eval(z);
      acc += v * v;
    }
    if (cert.kind == TerminationKind::ScaledCritical) {
      const double g = prob.f.eval(z) - *cert.t;
      acc += g * g;
    }
    return 0.5 * acc;
  };

  const double psi_x = psi(cert.x);
  const int n = static_cast<int>(cert.x.size());
  std::mt19937_64 rng(0x10bdu ^ multistart_seed());
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  long tested = 0;
  long attempts = 0;
  while (tested < samples && attempts < 100 * samples + 1000) {
    ++attempts;
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) d[i] = gauss(rng);
    const double nr = d.norm();
    if (nr == 0.0) continue;
    d *= report.radius * std::pow(unif(rng), 1.0 / n) / nr;  // uniform in the ball
    if (!prob.feasible_set.member(cert.x + d, 1e-12)) continue;
    ++tested;
    if (psi(cert.x + d) < psi_x - report.slack - 1e-12) ++report.violations;
  }
  report.samples = tested;
  report.pass = report.violations == 0 && tested > 0;
  return report;
}

BoundAuditReport bound_audit(const OuterTrace& trace, const PolynomialProblem& prob,
                             const OuterConfig& cfg, double pi) {
  if (!prob.f_low) throw NotApplicable("bound_audit: problem has no f_low");
  BoundAuditReport report;
  for (char tag : trace.partition)
    if (tag == '+') ++report.k_plus;
  report.k_plus_bound =
      (trace.f_at_phase2_start - *prob.f_low + 1.0) / ((1.0 - cfg.delta) * cfg.eps_P);
  report.k_plus_pass = static_cast<double>(report.k_plus) <= report.k_plus_bound + 1e-9;
  report.total_value_evals =
      trace.counters.phase1_f + trace.counters.phase2_f;
  report.total_derivative_evals = trace.counters.phase1_df + trace.counters.phase2_df;
  report.eps_term = std::max(1.0 / cfg.eps_P,
                             std::pow(cfg.eps_P, 1.0 - pi) * std::pow(cfg.eps_D, -pi));
  report.fitted_constant = static_cast<double>(report.total_value_evals) / report.eps_term;
  return report;
}

bool verify_certificate(const PolynomialProblem& prob, TerminationCertificate& cert,
                        const OuterConfig& cfg) {
  const int q = cfg.q;
  bool ok = true;

  if (cert.kind == TerminationKind::InfeasibleCritical && !cert.t) {
    const ScalarDerivatives nu = nu_derivatives(prob, cert.x, q);
    Eigen::VectorXd c(prob.num_constraints());
    for (int i = 0; i < prob.num_constraints(); ++i)
      c[i] = prob.c[static_cast<std::size_t>(i)].eval(cert.x);
    const double c_norm = c.norm();
    ok = ok && (c_norm > cfg.delta * cfg.eps_P);
    const TaylorModel model(nu.value, nu.tensors);
    const CriticalityReport report =
        criticality_report(model, prob.feasible_set, cert.x, cert.delta);
    for (int j = 1; j <= q; ++j)
      ok = ok && (report.phi_j(j) <= cfg.eps_D * std::pow(cert.delta, j) * c_norm + 1e-15);
    cert.phi_values = report.phi_values;
    cert.residual_norm = c_norm;
    cert.c_norm = c_norm;
  } else {
    const double t = cert.t.value();
    const MuDerivatives mu = mu_derivatives(prob, cert.x, t, q);
    const double c_norm = mu.residual.head(mu.residual.size() - 1).norm();
    const double r_norm = mu.residual.norm();
    if (cert.kind == TerminationKind::ScaledCritical) ok = ok && (c_norm <= cfg.eps_P + 1e-12);
    else ok = ok && (c_norm > cfg.delta * cfg.eps_P - 1e-12);
    const TaylorModel model(mu.value, mu.tensors);
    const CriticalityReport report =
        criticality_report(model, prob.feasible_set, cert.x, cert.delta);
    for (int j = 1; j <= q; ++j)
      ok = ok && (report.phi_j(j) <= cfg.eps_D * std::pow(cert.delta, j) * r_norm + 1e-15);
    cert.phi_values = report.phi_values;
  }
  cert.reverified = ok;
  return ok;
}

}  // namespace hiord
