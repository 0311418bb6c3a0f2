#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hiord/inner.hpp"
#include "hiord/problem.hpp"

namespace hiord {

struct OuterConfig {
  double eps_P = 1e-4;  // primal tolerance, in (0,1)
  double eps_D = 1e-4;  // dual tolerance, in (0,1)
  double delta = 0.5;   // target-update constant, in (0,1)
  int q = 1;            // criticality order, 1..3
  InnerConfig inner_phase1;
  InnerConfig inner_phase2;
  long max_outer_iterations = 2000000;

  // optional audit hooks fired on every true problem evaluation
  std::function<void(const Eigen::VectorXd&)> on_value_eval;
  std::function<void(const Eigen::VectorXd&)> on_bundle_eval;

  void validate() const;
};

enum class TerminationKind { InfeasibleCritical, ScaledCritical };

std::string to_string(TerminationKind kind);

struct TerminationCertificate {
  TerminationKind kind = TerminationKind::ScaledCritical;
  Eigen::VectorXd x;
  std::optional<double> t;
  std::optional<Eigen::VectorXd> y;
  double delta = 1.0;               // radius backing the phi values
  std::vector<double> phi_values;   // re-verified phi_j, j = 1..q
  double residual_norm = 0.0;       // ||c|| (infeasible) or ||r(x,t)|| (scaled)
  double c_norm = 0.0;
  double f_value = 0.0;
  bool reverified = false;
};

struct EvalCounters {
  long phase1_f = 0;
  long phase1_df = 0;
  long phase2_f = 0;
  long phase2_df = 0;
};

struct OuterIterationRecord {
  double t = 0.0;
  char tag = '.';  // '+', '-' for the target-update partition, '.' terminal
  double r_norm = 0.0;
  double c_norm = 0.0;
  double delta = 0.0;
  long inner_iterations = 0;
  long inner_successes = 0;
  InnerTrace inner_trace;
};

struct OuterTrace {
  InnerResult phase1;
  bool phase1_only = false;
  double f_at_phase2_start = 0.0;
  double c_norm_at_phase2_start = 0.0;
  std::vector<OuterIterationRecord> iterations;
  std::vector<double> t_history;
  std::vector<char> partition;  // tags of the non-terminal iterations
  EvalCounters counters;
  std::map<std::string, bool> invariant_checks;
  TerminationKind termination = TerminationKind::ScaledCritical;
};

struct SolveResult {
  TerminationCertificate certificate;
  OuterTrace trace;
};

struct OuterMaxIterExceeded : std::runtime_error {
  explicit OuterMaxIterExceeded(OuterTrace t)
      : std::runtime_error("outer solver: max outer iterations exceeded"), trace(std::move(t)) {}
  OuterTrace trace;
};

// ---- phase 1 ----

struct Phase1Result {
  bool feasible_reached = false;  // ||c(x1)|| <= delta * eps_P
  Eigen::VectorXd x1;
  double c_norm = 0.0;
  double f_value = 0.0;
  double delta = 1.0;
  InnerResult inner;
  std::optional<TerminationCertificate> certificate;  // set when infeasible-critical
};

Phase1Result phase1(const PolynomialProblem& prob, const Eigen::VectorXd& x_start,
                    const OuterConfig& cfg, EvalCounters* counters = nullptr);

// t1 = f(x1) - sqrt(eps_P^2 - ||c(x1)||^2); the radicand is clamped at zero
// when within -1e-14, anything lower is an invariant violation
double initial_target(const Eigen::VectorXd& x1, const PolynomialProblem& prob, double eps_P);
double target_from_values(double f_value, double c_norm, double eps_P);

// ---- phase 2 ----

enum class Phase2Case { Update, Swap, Final };  // (i), (ii), (iii)

// persistent phase-2 evaluation state: caches the derivative bundle at the
// current iterate so target changes never re-evaluate f, c or derivatives
class Phase2State;

struct Phase2Outcome {
  Eigen::VectorXd x_next;
  Phase2Case which = Phase2Case::Final;
  double t_next = 0.0;
  double gap_next = 0.0;  // authoritative f(x_next) - t_next
  double c_norm = 0.0;
  double r_norm_at_tk = 0.0;    // ||r(x_next, t_k)||
  double r_norm_next = 0.0;     // ||r(x_next, t_next)||
  double delta = 0.0;           // final inner radius Delta_k
  bool terminated = false;
  std::optional<TerminationCertificate> certificate;
  InnerResult inner;
};

Phase2Outcome phase2_step(const PolynomialProblem& prob, const Eigen::VectorXd& x_k, double t_k,
                          double delta_prev, const OuterConfig& cfg,
                          Phase2State* state = nullptr, EvalCounters* counters = nullptr);

// ---- full algorithm ----

SolveResult solve(const PolynomialProblem& prob, const Eigen::VectorXd& x_start,
                  const OuterConfig& cfg);

// y = c(x) / (f(x) - t); requires f(x) > t
Eigen::VectorXd recover_multiplier(const Eigen::VectorXd& x, double t,
                                   const PolynomialProblem& prob);

// ---- certificate checks ----

struct ScaledKktRow {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct ScaledKktReport {
  std::vector<ScaledKktRow> rows;
  double multiplier_scale = 1.0;  // ||(1, y')||
  bool pass = false;
};

// phi_{Lambda,1} over F(x), restricted phi-hat_{Lambda,j} over F(x) ∩ M(x)
// for j = 2..q, and the tangent-cone projection of -grad Lambda, each
// compared against eps_D * Delta^j * ||(1,y')||
ScaledKktReport scaled_kkt_check(const PolynomialProblem& prob, const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& y, double delta, double eps_D, int q);

struct LowerBoundProbeReport {
  long samples = 0;
  long violations = 0;
  double radius = 0.0;     // sampling radius
  double slack = 0.0;      // allowed decrease 2 * eps * Delta^q
  bool pass = false;
};

// samples feasible d with ||d|| <= (q! eps Delta^q / L)^(1/(q+1)) and checks
// psi(x+d) >= psi(x) - 2 eps Delta^q for the certificate's psi (nu or mu)
LowerBoundProbeReport lower_bound_probe(const PolynomialProblem& prob,
                                        const TerminationCertificate& cert, const OuterConfig& cfg,
                                        double lipschitz_estimate, long samples);

struct BoundAuditReport {
  long k_plus = 0;
  double k_plus_bound = 0.0;
  bool k_plus_pass = false;
  long total_value_evals = 0;
  long total_derivative_evals = 0;
  double eps_term = 0.0;  // max[eps_P^-1, eps_P^(1-pi) eps_D^-pi]
  double fitted_constant = 0.0;
};

// |K+| against (f(x1) - f_low + 1) / ((1-delta) eps_P), and the fitted
// constant of total evaluations over the complexity envelope with exponent pi
BoundAuditReport bound_audit(const OuterTrace& trace, const PolynomialProblem& prob,
                             const OuterConfig& cfg, double pi);

// fresh recomputation of everything the certificate asserts
bool verify_certificate(const PolynomialProblem& prob, TerminationCertificate& cert,
                        const OuterConfig& cfg);

}  // namespace hiord
