#include "hiord/convex_set.hpp"

#include <cmath>
#include <limits>

#include "hiord/errors.hpp"

namespace hiord {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
// how close a coordinate must sit to a bound to count as active
constexpr double kActiveTol = 1e-10;
}  // namespace

ConvexSet ConvexSet::all(int dim) {
  if (dim < 1) throw ArgumentError("set dim must be >= 1");
  return ConvexSet(All{dim});
}

ConvexSet ConvexSet::box(Eigen::VectorXd lo, Eigen::VectorXd hi) {
  if (lo.size() != hi.size() || lo.size() < 1) throw ArgumentError("box: bad bound sizes");
  for (int i = 0; i < lo.size(); ++i)
    if (!(lo[i] <= hi[i])) throw ArgumentError("box: requires lo <= hi componentwise");
  return ConvexSet(Box{std::move(lo), std::move(hi)});
}

ConvexSet ConvexSet::ball(Eigen::VectorXd center, double radius) {
  if (center.size() < 1) throw ArgumentError("ball: bad center");
  if (!(radius > 0)) throw ArgumentError("ball: radius must be positive");
  return ConvexSet(Ball{std::move(center), radius});
}

int ConvexSet::dim() const {
  if (is_all()) return std::get<All>(v_).dim;
  if (is_box()) return static_cast<int>(as_box().lo.size());
  return static_cast<int>(as_ball().center.size());
}

Eigen::VectorXd ConvexSet::project(const Eigen::VectorXd& x) const {
  if (x.size() != dim()) throw ArgumentError("project: dim mismatch");
  if (is_all()) return x;
  if (is_box()) {
    const Box& b = as_box();
    return x.cwiseMax(b.lo).cwiseMin(b.hi);
  }
  const Ball& b = as_ball();
  Eigen::VectorXd r = x - b.center;
  const double n = r.norm();
  if (n <= b.radius) return x;
  return b.center + (b.radius / n) * r;
}

double ConvexSet::distance(const Eigen::VectorXd& x) const { return (x - project(x)).norm(); }

bool ConvexSet::member(const Eigen::VectorXd& x, double tol) const {
  return distance(x) <= tol;
}

ConvexSet::MoreauSplit ConvexSet::moreau_decompose(const Eigen::VectorXd& x,
                                                   const Eigen::VectorXd& y, double tol) const {
  if (x.size() != dim() || y.size() != dim())
    throw ArgumentError("moreau_decompose: dim mismatch");
  if (!member(x, tol)) throw ArgumentError("moreau_decompose: x must lie in the set");
  MoreauSplit out{y, Eigen::VectorXd::Zero(y.size())};
  if (is_all()) return out;
  if (is_box()) {
    const Box& b = as_box();
    for (int i = 0; i < y.size(); ++i) {
      const bool at_lo = x[i] <= b.lo[i] + kActiveTol;
      const bool at_hi = x[i] >= b.hi[i] - kActiveTol;
      if (at_lo && at_hi) {  // pinned coordinate: tangent cone is {0}
        out.tangent[i] = 0.0;
        out.normal[i] = y[i];
      } else if (at_lo) {
        out.tangent[i] = std::max(y[i], 0.0);
        out.normal[i] = std::min(y[i], 0.0);
      } else if (at_hi) {
        out.tangent[i] = std::min(y[i], 0.0);
        out.normal[i] = std::max(y[i], 0.0);
      }
    }
    return out;
  }
  const Ball& b = as_ball();
  const Eigen::VectorXd r = x - b.center;
  if (r.norm() < b.radius - kActiveTol) return out;  // interior
  const Eigen::VectorXd u = r / r.norm();            // outward unit normal
  const double a = std::max(u.dot(y), 0.0);
  out.normal = a * u;
  out.tangent = y - out.normal;
  return out;
}

bool ConvexSet::normal_cone_member(const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                                   double tol) const {
  if (x.size() != dim() || v.size() != dim())
    throw ArgumentError("normal_cone_member: dim mismatch");
  if (!member(x, std::max(tol, kActiveTol)))
    throw ArgumentError("normal_cone_member: x must lie in the set");
  if (is_all()) return v.norm() <= tol;
  if (is_box()) {
    const Box& b = as_box();
    for (int i = 0; i < v.size(); ++i) {
      const bool at_lo = x[i] <= b.lo[i] + kActiveTol;
      const bool at_hi = x[i] >= b.hi[i] - kActiveTol;
      if (at_lo && at_hi) continue;          // pinned: any v_i allowed
      if (at_lo && v[i] > tol) return false;  // needs v_i <= 0
      if (at_hi && v[i] < -tol) return false;
      if (!at_lo && !at_hi && std::abs(v[i]) > tol) return false;
    }
    return true;
  }
  const Ball& b = as_ball();
  const Eigen::VectorXd r = x - b.center;
  if (r.norm() < b.radius - kActiveTol) return v.norm() <= tol;
  const Eigen::VectorXd u = r / r.norm();
  const double a = u.dot(v);
  if (a < -tol) return false;
  return (v - a * u).norm() <= tol;
}

bool ConvexSet::operator==(const ConvexSet& other) const {
  if (v_.index() != other.v_.index()) return false;
  if (is_all()) return dim() == other.dim();
  if (is_box()) return as_box().lo == other.as_box().lo && as_box().hi == other.as_box().hi;
  return as_ball().center == other.as_ball().center && as_ball().radius == other.as_ball().radius;
}

ShiftedRegion::ShiftedRegion(const ConvexSet& set, Eigen::VectorXd x, double delta)
    : set_(&set), x_(std::move(x)), delta_(delta) {
  if (x_.size() != set.dim()) throw ArgumentError("ShiftedRegion: dim mismatch");
  if (!(delta > 0)) throw ArgumentError("ShiftedRegion: delta must be positive");
}

bool ShiftedRegion::contains(const Eigen::VectorXd& d, double tol) const {
  if (d.norm() > delta_ + tol) return false;
  return set_->member(x_ + d, tol);
}

Eigen::VectorXd ShiftedRegion::project(const Eigen::VectorXd& d) const {
  auto ball_proj = [&](const Eigen::VectorXd& z) -> Eigen::VectorXd {
    const double n = z.norm();
    return (n <= delta_) ? z : Eigen::VectorXd((delta_ / n) * z);
  };
  auto set_proj = [&](const Eigen::VectorXd& z) -> Eigen::VectorXd {
    return set_->project(x_ + z) - x_;
  };
  if (set_->is_all()) return ball_proj(d);

  // Dykstra on { d : x+d in F } and { ||d|| <= delta }
  Eigen::VectorXd z = d;
  Eigen::VectorXd p = Eigen::VectorXd::Zero(d.size());
  Eigen::VectorXd q = Eigen::VectorXd::Zero(d.size());
  Eigen::VectorXd prev = z;
  for (int it = 0; it < 500; ++it) {
    Eigen::VectorXd y = set_proj(z + p);
    p = z + p - y;
    z = ball_proj(y + q);
    q = y + q - z;
    if ((z - prev).norm() <= 1e-15 * std::max(1.0, z.norm()) && it > 2) break;
    prev = z;
  }
  // alternating-projection polish so the result lands inside both sets
  for (int it = 0; it < 100; ++it) {
    z = ball_proj(set_proj(z));
    if (set_->distance(x_ + z) <= 1e-14 && z.norm() <= delta_ + 1e-14) break;
  }
  return z;
}

}  // namespace hiord
