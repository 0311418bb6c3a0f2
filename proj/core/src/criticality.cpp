#include "hiord/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hiord/errors.hpp"
#include "hiord/sobol.hpp"
#include "hiord/trs.hpp"

namespace hiord {

namespace {

bool lexicographically_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

struct BestPoint {
  double value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd point;

  void consider(double v, const Eigen::VectorXd& d) {
    const double tie = 1e-15 * std::max(1.0, std::abs(value));
    if (v < value - tie) {
      value = v;
      point = d;
    } else if (std::abs(v - value) <= tie && point.size() == d.size() &&
               lexicographically_less(d, point)) {
      point = d;
    }
  }
};

// projected gradient descent with backtracking; projection given by region
Eigen::VectorXd projected_descent(const TaylorModel& model, const ShiftedRegion& region,
                                  Eigen::VectorXd d, int max_iter = 300) {
  d = region.project(d);
  double val = model.value(d);
  double step = 1.0;
  for (int it = 0; it < max_iter; ++it) {
    const Eigen::VectorXd g = model.gradient(d);
    const double gn = g.norm();
    if (gn <= 1e-14 * std::max(1.0, std::abs(val))) break;
    bool improved = false;
    double s = step;
    for (int ls = 0; ls < 50; ++ls) {
      Eigen::VectorXd cand = region.project(d - s * g);
      const double cval = model.value(cand);
      if (cval < val - 1e-16 * std::max(1.0, std::abs(val))) {
        d = cand;
        val = cval;
        step = std::min(4.0 * s, 1e8);
        improved = true;
        break;
      }
      s *= 0.5;
    }
    if (!improved) break;
  }
  return d;
}

std::vector<Eigen::VectorXd> multistart_seeds(const ShiftedRegion& region) {
  const int n = region.dim();
  const double delta = region.delta();
  std::vector<Eigen::VectorXd> seeds;
  seeds.reserve(static_cast<std::size_t>(2 * n + 64));
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[i] = delta;
    seeds.push_back(region.project(e));
    seeds.push_back(region.project(-e));
  }
  SobolSequence sobol(n);
  sobol.skip(multistart_seed());
  for (int s = 0; s < 64; ++s) {
    const Eigen::VectorXd u = sobol.next();
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) d[i] = delta * (2.0 * u[i] - 1.0);
    seeds.push_back(region.project(d));
  }
  return seeds;
}

PhiResult phi_multistart(const TaylorModel& model, const ShiftedRegion& region) {
  BestPoint best;
  best.consider(model.value(Eigen::VectorXd::Zero(region.dim())),
                Eigen::VectorXd::Zero(region.dim()));
  for (const auto& seed : multistart_seeds(region)) {
    const Eigen::VectorXd d = projected_descent(model, region, seed);
    best.consider(model.value(d), d);
  }
  PhiResult out;
  out.minimizer = best.point;
  out.phi = std::max(0.0, model.base() - best.value);
  return out;
}

// exact linear program over a box intersected with the delta ball:
// d_i(lambda) = clamp(-g_i/lambda, bounds), lambda >= 0 picked so that
// ||d(lambda)|| = delta (or the clamp point if it already fits)
Eigen::VectorXd linear_over_box_ball(const Eigen::VectorXd& g, const Eigen::VectorXd& lo,
                                     const Eigen::VectorXd& hi, double delta) {
  const int n = static_cast<int>(g.size());
  auto d_of = [&](double lambda) {
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) {
      double v;
      if (g[i] > 0)
        v = lambda > 0 ? -g[i] / lambda : -std::numeric_limits<double>::infinity();
      else if (g[i] < 0)
        v = lambda > 0 ? -g[i] / lambda : std::numeric_limits<double>::infinity();
      else
        v = 0.0;
      d[i] = std::min(std::max(v, lo[i]), hi[i]);
    }
    return d;
  };
  Eigen::VectorXd vertex = d_of(0.0);
  if (vertex.norm() <= delta) return vertex;
  double llo = 0.0, lhi = 1.0;
  while (d_of(lhi).norm() > delta) lhi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (llo + lhi);
    if (d_of(mid).norm() > delta)
      llo = mid;
    else
      lhi = mid;
  }
  Eigen::VectorXd d = d_of(lhi);
  if (d.norm() > delta) d *= delta / d.norm();
  return d;
}

PhiResult phi_order1(const TaylorModel& model, const ConvexSet& set, const Eigen::VectorXd& x,
                     double delta) {
  const Eigen::VectorXd g = model.tensor(1).as_vector();
  PhiResult out;
  if (set.is_all()) {
    const double gn = g.norm();
    if (gn == 0.0) {
      out.minimizer = Eigen::VectorXd::Zero(g.size());
      out.phi = 0.0;
      return out;
    }
    out.minimizer = (-delta / gn) * g;
    out.phi = delta * gn;
    return out;
  }
  if (set.is_box()) {
    const auto& b = set.as_box();
    out.minimizer = linear_over_box_ball(g, b.lo - x, b.hi - x, delta);
    out.phi = std::max(0.0, -g.dot(out.minimizer));
    return out;
  }
  // ball set: convex program solved by far-point projections plus descent
  ShiftedRegion region(set, x, delta);
  BestPoint best;
  best.consider(0.0, Eigen::VectorXd::Zero(g.size()));
  const double gn = std::max(g.norm(), 1e-300);
  for (double k : {1.0, 1e3, 1e6, 1e9, 1e12}) {
    Eigen::VectorXd d = region.project((-k * delta / gn) * g);
    d = projected_descent(model, region, d);
    best.consider(g.dot(d), d);
  }
  out.minimizer = best.point;
  out.phi = std::max(0.0, -best.value);
  return out;
}

}  // namespace

TaylorModel::TaylorModel(double base, std::vector<SymmetricTensor> tensors)
    : base_(base), tensors_(std::move(tensors)) {
  if (tensors_.empty() || tensors_.size() > 4)
    throw UnsupportedOrder("TaylorModel: degree must be 1..4");
  for (std::size_t k = 0; k < tensors_.size(); ++k) {
    if (tensors_[k].order() != static_cast<int>(k + 1))
      throw ArgumentError("TaylorModel: tensor k must have order k");
    if (tensors_[k].dim() != tensors_[0].dim())
      throw ArgumentError("TaylorModel: tensors must share dim");
  }
}

TaylorModel TaylorModel::truncate(const TaylorModel& m, int degree) {
  if (degree < 1 || degree > m.degree())
    throw ArgumentError("TaylorModel::truncate: bad degree");
  std::vector<SymmetricTensor> t(m.tensors_.begin(), m.tensors_.begin() + degree);
  return TaylorModel(m.base_, std::move(t));
}

double TaylorModel::value(const Eigen::VectorXd& d) const {
  double acc = base_;
  double fact = 1.0;
  for (int k = 1; k <= degree(); ++k) {
    fact *= k;
    acc += tensors_[static_cast<std::size_t>(k - 1)].apply_power(d) / fact;
  }
  return acc;
}

Eigen::VectorXd TaylorModel::gradient(const Eigen::VectorXd& d) const {
  Eigen::VectorXd g = tensors_[0].as_vector();
  double fact = 1.0;
  for (int k = 2; k <= degree(); ++k) {
    fact *= (k - 1);
    g += tensors_[static_cast<std::size_t>(k - 1)].contract_all_but_one(d) / fact;
  }
  return g;
}

TaylorModel TaylorModel::compose_with_basis(const Eigen::MatrixXd& basis) const {
  std::vector<SymmetricTensor> t;
  t.reserve(tensors_.size());
  for (const auto& tk : tensors_) t.push_back(tk.compose_with_basis(basis));
  return TaylorModel(base_, std::move(t));
}

PhiResult phi(const TaylorModel& model, const ConvexSet& set, const Eigen::VectorXd& x,
              double delta) {
  if (!(delta > 0.0) || delta > 1.0) throw ArgumentError("phi: delta must lie in (0,1]");
  if (x.size() != set.dim() || model.dim() != set.dim()) throw ArgumentError("phi: dim mismatch");

  if (model.degree() == 1) return phi_order1(model, set, x, delta);

  if (model.degree() == 2 && set.is_all()) {
    const Eigen::VectorXd g = model.tensor(1).as_vector();
    const Eigen::MatrixXd H = model.tensor(2).as_matrix();
    PhiResult out;
    out.minimizer = solve_trust_region_subproblem(g, H, delta);
    out.phi = std::max(0.0, model.base() - model.value(out.minimizer));
    return out;
  }

  return phi_multistart(model, ShiftedRegion(set, x, delta));
}

double phi_bruteforce(const TaylorModel& model, const ConvexSet& set, const Eigen::VectorXd& x,
                      double delta, int grid) {
  if (!(delta > 0.0) || delta > 1.0)
    throw ArgumentError("phi_bruteforce: delta must lie in (0,1]");
  const int n = model.dim();
  if (n > 4) throw UnsupportedDimension("phi_bruteforce: dim must be <= 4");
  ShiftedRegion region(set, x, delta);

  // plain fixed-shrink polish, independent of the multi-start machinery
  auto polish = [&](Eigen::VectorXd d) {
    double val = model.value(d);
    double step = 0.5 * delta;
    for (int round = 0; round < 60; ++round) {
      bool improved = false;
      for (int sub = 0; sub < 40; ++sub) {
        const Eigen::VectorXd g = model.gradient(d);
        if (g.norm() == 0.0) break;
        Eigen::VectorXd cand = region.project(d - (step / g.norm()) * g);
        const double cval = model.value(cand);
        if (cval < val - 1e-18) {
          d = cand;
          val = cval;
          improved = true;
        } else {
          break;
        }
      }
      step *= 0.5;
      if (!improved && step < 1e-14) break;
    }
    return std::make_pair(val, d);
  };

  int res = std::max(3, grid);
  const int cap = n <= 2 ? 513 : (n == 3 ? 65 : 25);
  double prev = std::numeric_limits<double>::infinity();
  double best_overall = model.value(Eigen::VectorXd::Zero(n));
  while (true) {
    // evaluate the feasible grid, keep the best few corners for polishing
    std::vector<std::pair<double, Eigen::VectorXd>> top;
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      Eigen::VectorXd d(n);
      for (int i = 0; i < n; ++i)
        d[i] = -delta + 2.0 * delta * static_cast<double>(idx[static_cast<std::size_t>(i)]) /
                            static_cast<double>(res - 1);
      if (d.norm() <= delta + 1e-12 && region.contains(d, 1e-9)) {
        top.emplace_back(model.value(d), d);
        std::sort(top.begin(), top.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (top.size() > 12) top.pop_back();
      }
      int a = n - 1;
      while (a >= 0 && ++idx[static_cast<std::size_t>(a)] == res) {
        idx[static_cast<std::size_t>(a)] = 0;
        --a;
      }
      if (a < 0) break;
    }
    top.emplace_back(model.value(Eigen::VectorXd::Zero(n)), Eigen::VectorXd::Zero(n));
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [v0, d0] : top) best = std::min(best, polish(d0).first);
    best_overall = std::min(best_overall, best);
    if (std::abs(best_overall - prev) < 1e-8 || res >= cap) break;
    prev = best_overall;
    res = 2 * res - 1;
  }
  return std::max(0.0, model.base() - best_overall);
}

PhiResult phi_hat(const TaylorModel& model, const ConvexSet& set, const Eigen::VectorXd& x,
                  const Eigen::MatrixXd& basis, double delta) {
  if (!(delta > 0.0) || delta > 1.0) throw ArgumentError("phi_hat: delta must lie in (0,1]");
  const int n = model.dim();
  if (basis.rows() != n) throw ArgumentError("phi_hat: basis row count must equal dim");
  PhiResult out;
  if (basis.cols() == 0) {
    out.minimizer = Eigen::VectorXd::Zero(n);
    out.phi = 0.0;
    return out;
  }
  const TaylorModel reduced = model.compose_with_basis(basis);
  const int p = static_cast<int>(basis.cols());

  if (set.is_all()) {
    const PhiResult r = phi(reduced, ConvexSet::all(p), Eigen::VectorXd::Zero(p), delta);
    out.phi = r.phi;
    out.minimizer = basis * r.minimizer;
    return out;
  }

  // reduced ball with feasibility of the lifted point enforced by rejection
  ShiftedRegion ball(ConvexSet::all(p), Eigen::VectorXd::Zero(p), delta);
  auto lifted_feasible = [&](const Eigen::VectorXd& z) { return set.member(x + basis * z, 1e-10); };
  BestPoint best;
  best.consider(reduced.value(Eigen::VectorXd::Zero(p)), Eigen::VectorXd::Zero(p));
  for (const auto& seed : multistart_seeds(ball)) {
    Eigen::VectorXd z = seed;
    if (!lifted_feasible(z)) {
      // pull the seed toward 0 until the lifted point enters F
      double shrink = 0.5;
      while (shrink > 1e-12 && !lifted_feasible(z * shrink)) shrink *= 0.5;
      z = z * shrink;
    }
    double val = reduced.value(z);
    double step = 1.0;
    for (int it = 0; it < 300; ++it) {
      const Eigen::VectorXd g = reduced.gradient(z);
      if (g.norm() <= 1e-14 * std::max(1.0, std::abs(val))) break;
      bool improved = false;
      double s = step;
      for (int ls = 0; ls < 60; ++ls) {
        Eigen::VectorXd cand = ball.project(z - s * g);
        if (lifted_feasible(cand)) {
          const double cval = reduced.value(cand);
          if (cval < val - 1e-16 * std::max(1.0, std::abs(val))) {
            z = cand;
            val = cval;
            step = std::min(4.0 * s, 1e8);
            improved = true;
            break;
          }
        }
        s *= 0.5;
      }
      if (!improved) break;
    }
    best.consider(val, z);
  }
  out.phi = std::max(0.0, model.base() - best.value);
  out.minimizer = basis * best.point;
  return out;
}

CriticalityReport criticality_report(const TaylorModel& model, const ConvexSet& set,
                                     const Eigen::VectorXd& x, double delta) {
  CriticalityReport report;
  report.x = x;
  report.delta = delta;
  for (int j = 1; j <= model.degree(); ++j) {
    const PhiResult r = phi(TaylorModel::truncate(model, j), set, x, delta);
    report.phi_values.push_back(r.phi);
    report.minimizers.push_back(r.minimizer);
  }
  return report;
}

bool is_critical(const CriticalityReport& report, double eps, int q) {
  if (report.max_order() < q) throw ArgumentError("is_critical: report missing orders");
  for (int j = 1; j <= q; ++j)
    if (report.phi_j(j) > eps * std::pow(report.delta, j)) return false;
  return true;
}

bool is_ls_critical(const CriticalityReport& report, double residual_norm, double eps_P,
                    double eps_D, int q) {
  if (residual_norm <= eps_P) return true;
  if (report.max_order() < q) throw ArgumentError("is_ls_critical: report missing orders");
  for (int j = 1; j <= q; ++j)
    if (report.phi_j(j) > eps_D * std::pow(report.delta, j) * residual_norm) return false;
  return true;
}

}  // namespace hiord
