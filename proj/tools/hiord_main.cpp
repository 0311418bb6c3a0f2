// command-line front end: problem I/O, single solves, phi queries, condition
// checks, demo reproductions and epsilon-sweeps with scaling reports
#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hiord/conditions.hpp"
#include "hiord/criticality.hpp"
#include "hiord/errors.hpp"
#include "hiord/outer.hpp"
#include "hiord/problem_io.hpp"
#include "hiord/report.hpp"
#include "hiord/sobol.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 64;

Eigen::VectorXd parse_vector(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    vals.push_back(std::stod(tok, &pos));
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
  return v;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw hiord::ArgumentError("cannot write '" + path + "'");
  out << text;
}

hiord::OuterConfig make_config(double eps_p, double eps_d, double delta, int q) {
  hiord::OuterConfig cfg;
  cfg.eps_P = eps_p;
  cfg.eps_D = eps_d;
  cfg.delta = delta;
  cfg.q = q;
  return cfg;
}

int run_solve(const std::string& file, double eps_p, double eps_d, double delta, int q,
              const std::string& x0_text, const std::string& report_out) {
  const hiord::PolynomialProblem prob = hiord::load_problem(file);
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(prob.dim());
  if (!x0_text.empty()) {
    x0 = parse_vector(x0_text);
    if (x0.size() != prob.dim()) throw hiord::ArgumentError("--x0 has wrong length");
  }
  const hiord::OuterConfig cfg = make_config(eps_p, eps_d, delta, q);
  const hiord::SolveResult result = hiord::solve(prob, x0, cfg);
  write_text(report_out, hiord::run_report_json(result));
  return result.certificate.kind == hiord::TerminationKind::ScaledCritical ? kExitOk
                                                                           : kExitInfeasible;
}

int run_phi(const std::string& file, const std::string& x_text, const std::string& psi,
            double t, bool has_t, const std::string& y_text, double delta_ball, int j,
            bool oracle) {
  const hiord::PolynomialProblem prob = hiord::load_problem(file);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(prob.dim());
  if (!x_text.empty()) {
    x = parse_vector(x_text);
    if (x.size() != prob.dim()) throw hiord::ArgumentError("--x has wrong length");
  }

  std::vector<hiord::SymmetricTensor> tensors;
  double base = 0.0;
  if (psi == "nu") {
    const auto nu = hiord::nu_derivatives(prob, x, j);
    base = nu.value;
    tensors = nu.tensors;
  } else if (psi == "mu") {
    if (!has_t) throw hiord::ArgumentError("--psi mu requires --t");
    const auto mu = hiord::mu_derivatives(prob, x, t, j);
    base = mu.value;
    tensors = mu.tensors;
  } else if (psi == "lagrangian") {
    if (y_text.empty()) throw hiord::ArgumentError("--psi lagrangian requires --y");
    const Eigen::VectorXd y = parse_vector(y_text);
    if (y.size() != prob.num_constraints())
      throw hiord::ArgumentError("--y must have one entry per constraint");
    const auto lag = hiord::lagrangian_derivatives(prob, x, y, j);
    base = lag.value;
    tensors = lag.tensors;
  } else {
    throw hiord::ArgumentError("--psi must be nu, mu or lagrangian");
  }

  const hiord::TaylorModel model(base, tensors);
  const hiord::PhiResult res = hiord::phi(model, prob.feasible_set, x, delta_ball);
  std::printf("phi_%d^{%.17g} = %.17g\n", j, delta_ball, res.phi);
  std::printf("minimizer =");
  for (int i = 0; i < res.minimizer.size(); ++i) std::printf(" %.17g", res.minimizer[i]);
  std::printf("\n");
  if (oracle) {
    const double ref = hiord::phi_bruteforce(model, prob.feasible_set, x, delta_ball);
    std::printf("oracle = %.17g\n", ref);
    if (std::abs(res.phi - ref) > 1e-6 * std::max(1.0, std::abs(res.phi))) {
      std::printf("oracle check: MISMATCH\n");
      return kExitError;
    }
    std::printf("oracle check: ok\n");
  }
  return kExitOk;
}

int run_check_conditions(const std::string& file, const std::string& x_text,
                         const std::string& y_text, const std::vector<std::string>& s_texts,
                         int q, double tol, const std::string& report_out) {
  const hiord::PolynomialProblem prob = hiord::load_problem(file);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(prob.dim());
  if (!x_text.empty()) x = parse_vector(x_text);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(prob.num_constraints());
  if (!y_text.empty()) y = parse_vector(y_text);
  if (x.size() != prob.dim() || y.size() != prob.num_constraints())
    throw hiord::ArgumentError("--x / --y have wrong lengths");

  hiord::DirectionSequence dirs;
  for (const auto& st : s_texts) {
    if (st.empty()) break;
    Eigen::VectorXd s = parse_vector(st);
    if (s.size() != prob.dim()) throw hiord::ArgumentError("--s vectors must have length n");
    dirs.s.push_back(std::move(s));
  }
  if (dirs.count() < q) throw hiord::ArgumentError("need at least q direction vectors");

  const hiord::ConditionsReport rep = hiord::check_necessary(prob, x, y, dirs, q, tol);

  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["q"] = q;
  j["lagrangian_values"] = rep.lagrangian_values;
  j["feasibility_values"] = nlohmann::ordered_json::array();
  for (const auto& fv : rep.feasibility_values) {
    std::vector<double> row(fv.data(), fv.data() + fv.size());
    j["feasibility_values"].push_back(row);
  }
  j["zero_set_ok"] = rep.zero_set_ok;
  j["feasibility_ok"] = rep.feasibility_ok;
  j["first_order_cone_ok"] = rep.first_order_cone_ok;
  j["arc_in_set_ok"] = rep.arc_in_set_ok;
  j["order_q_value"] = rep.order_q_value;
  j["order_q_nonnegative"] = rep.order_q_nonnegative;
  j["verdict"] = rep.verdict;
  write_text(report_out, j.dump(2) + "\n");
  return rep.verdict ? kExitOk : kExitError;
}

int run_sweep(const std::string& file, const std::string& eps_text, int q, int reps,
              const std::string& out_csv, const std::string& x0_text) {
  const hiord::PolynomialProblem prob = hiord::load_problem(file);
  const Eigen::VectorXd eps_list_vec = parse_vector(eps_text);
  if (eps_list_vec.size() < 3) throw hiord::ArgumentError("sweep needs at least 3 eps values");
  for (int i = 0; i < eps_list_vec.size(); ++i) {
    if (!(eps_list_vec[i] > 0.0 && eps_list_vec[i] < 1.0))
      throw hiord::ArgumentError("sweep eps values must lie in (0,1)");
    if (i > 0 && !(eps_list_vec[i] < eps_list_vec[i - 1]))
      throw hiord::ArgumentError("sweep eps values must be strictly decreasing");
  }
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(prob.dim());
  if (!x0_text.empty()) x0 = parse_vector(x0_text);

  std::ostringstream csv;
  csv << "eps,q,ph1_f,ph1_df,ph2_f,ph2_df,kplus,kminus,term,wall_ms\n";
  std::vector<double> log_inv_eps, log_evals;
  for (int i = 0; i < eps_list_vec.size(); ++i) {
    const double eps = eps_list_vec[i];
    for (int rep = 0; rep < std::max(1, reps); ++rep) {
      const auto start = std::chrono::steady_clock::now();
      std::string term = "error";
      hiord::EvalCounters counters;
      long kplus = 0, kminus = 0;
      try {
        const hiord::SolveResult result = hiord::solve(prob, x0, make_config(eps, eps, 0.5, q));
        term = to_string(result.certificate.kind);
        counters = result.trace.counters;
        for (char tag : result.trace.partition) {
          if (tag == '+') ++kplus;
          if (tag == '-') ++kminus;
        }
        if (prob.f_low) {
          const auto audit = hiord::bound_audit(result.trace, prob, make_config(eps, eps, 0.5, q),
                                                static_cast<double>(q) + 1.0);
          if (!audit.k_plus_pass)
            std::fprintf(stderr, "warning: |K+| bound violated at eps=%.3g\n", eps);
        }
      } catch (const std::exception& e) {
        std::fprintf(stderr, "sweep run failed at eps=%.3g: %s\n", eps, e.what());
      }
      const auto end = std::chrono::steady_clock::now();
      const double wall_ms =
          std::chrono::duration_cast<std::chrono::microseconds>(end - start).count() / 1000.0;
      const long total = counters.phase1_f + counters.phase1_df + counters.phase2_f +
                         counters.phase2_df;
      if (term != "error" && rep == 0) {
        log_inv_eps.push_back(std::log(1.0 / eps));
        log_evals.push_back(std::log(static_cast<double>(std::max(1L, total))));
      }
      char line[256];
      std::snprintf(line, sizeof(line), "%.17g,%d,%ld,%ld,%ld,%ld,%ld,%ld,%s,%.3f\n", eps, q,
                    counters.phase1_f, counters.phase1_df, counters.phase2_f, counters.phase2_df,
                    kplus, kminus, term.c_str(), wall_ms);
      csv << line;
    }
  }

  // ordinary least squares for the scaling slope
  double slope = 0.0;
  if (log_inv_eps.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(log_inv_eps.size());
    for (std::size_t i = 0; i < log_inv_eps.size(); ++i) {
      sx += log_inv_eps[i];
      sy += log_evals[i];
      sxx += log_inv_eps[i] * log_inv_eps[i];
      sxy += log_inv_eps[i] * log_evals[i];
    }
    slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  write_text(out_csv, csv.str());
  std::printf("slope log(evals) vs log(1/eps): %.6f\n", slope);
  std::printf("bound exponent (pi = q+1): %d\n", 2 * q + 1);
  return kExitOk;
}

int run_demo(const std::string& name) {
  if (name == "saddle3") {
    const hiord::Saddle3Report rep = hiord::demo_saddle3();
    std::printf("third-order saddle example reproduction\n");
    for (const auto& e : rep.entries)
      std::printf("  %-34s computed % .12e  reference % .12e  %s\n", e.name.c_str(), e.computed,
                  e.reference, e.match ? "ok" : "DEVIATES");
    std::printf("order-3 condition value: %.6f\n", rep.conditions.order_q_value);
    std::printf("verdict: %s\n", rep.all_match ? "all values reproduced" : "DEVIATIONS FOUND");
    return rep.all_match ? kExitOk : kExitError;
  }
  if (name == "penalty4") {
    bool all = true;
    for (double eps : {0.01, 0.25, 0.5, 1.0}) {
      const hiord::PenaltyFailureReport rep = hiord::demo_penalty_failure(eps, {0.5, 1.0, 2.0});
      std::printf("fourth-order penalty failure chain, eps = %g\n", eps);
      for (const auto& e : rep.entries)
        std::printf("  %-34s computed % .12e  reference % .12e  %s\n", e.name.c_str(), e.computed,
                    e.reference, e.match ? "ok" : "DEVIATES");
      std::printf("  verdict: %s\n", rep.verdict.c_str());
      all = all && rep.all_match;
    }
    return all ? kExitOk : kExitError;
  }
  throw hiord::ArgumentError("unknown demo '" + name + "' (expected saddle3 or penalty4)");
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* seed = std::getenv("HIORD_SEED")) {
    try {
      hiord::set_multistart_seed(std::stoull(seed));
    } catch (...) {
      std::fprintf(stderr, "invalid HIORD_SEED\n");
      return kExitUsage;
    }
  }

  CLI::App app{"two-phase solver for equality- and convexly-constrained polynomial problems"};
  app.require_subcommand(1);

  std::string file, x0_text, x_text, y_text, report_out, out_csv = "sweep.csv";
  std::string psi = "nu", demo_name, eps_text;
  std::vector<std::string> s_texts(4);
  double eps_p = 1e-4, eps_d = 1e-4, delta = 0.5, t = 0.0, delta_ball = 1.0, tol = 1e-9;
  int q = 1, j = 1, reps = 1;
  bool oracle = false;

  auto* solve_cmd = app.add_subcommand("solve", "run the two-phase algorithm");
  solve_cmd->add_option("problem", file)->required();
  solve_cmd->add_option("--eps-p", eps_p);
  solve_cmd->add_option("--eps-d", eps_d);
  solve_cmd->add_option("--delta", delta);
  solve_cmd->add_option("--q", q);
  solve_cmd->add_option("--x0", x0_text);
  solve_cmd->add_option("--report-out", report_out);

  auto* phi_cmd = app.add_subcommand("phi", "criticality measure at a point");
  phi_cmd->add_option("problem", file)->required();
  phi_cmd->add_option("--x", x_text);
  auto* t_opt = phi_cmd->add_option("--t", t);
  phi_cmd->add_option("--psi", psi);
  phi_cmd->add_option("--y", y_text);
  phi_cmd->add_option("--delta-ball", delta_ball);
  phi_cmd->add_option("--j", j);
  phi_cmd->add_flag("--oracle", oracle);

  auto* cond_cmd = app.add_subcommand("check-conditions", "necessary-condition report");
  cond_cmd->add_option("problem", file)->required();
  cond_cmd->add_option("--x", x_text);
  cond_cmd->add_option("--y", y_text);
  cond_cmd->add_option("--s1", s_texts[0]);
  cond_cmd->add_option("--s2", s_texts[1]);
  cond_cmd->add_option("--s3", s_texts[2]);
  cond_cmd->add_option("--s4", s_texts[3]);
  cond_cmd->add_option("--q", q);
  cond_cmd->add_option("--tol", tol);
  cond_cmd->add_option("--report-out", report_out);

  auto* sweep_cmd = app.add_subcommand("sweep", "tolerance sweep with scaling report");
  sweep_cmd->add_option("problem", file)->required();
  sweep_cmd->add_option("--eps", eps_text)->required();
  sweep_cmd->add_option("--q", q);
  sweep_cmd->add_option("--reps", reps);
  sweep_cmd->add_option("--out", out_csv);
  sweep_cmd->add_option("--x0", x0_text);

  auto* demo_cmd = app.add_subcommand("demo", "worked-example reproductions");
  demo_cmd->add_option("name", demo_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(file, eps_p, eps_d, delta, q, x0_text, report_out);
    if (phi_cmd->parsed())
      return run_phi(file, x_text, psi, t, t_opt->count() > 0, y_text, delta_ball, j, oracle);
    if (cond_cmd->parsed())
      return run_check_conditions(file, x_text, y_text, s_texts, q, tol, report_out);
    if (sweep_cmd->parsed()) return run_sweep(file, eps_text, q, reps, out_csv, x0_text);
    if (demo_cmd->parsed()) return run_demo(demo_name);
  } catch (const hiord::ArgumentError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return kExitUsage;
}
