#pragma once

#include <Eigen/Core>
#include <variant>

namespace hiord {

// Closed convex feasible sets: the whole space, a box (entries may be
// +/-infinity), or a Euclidean ball.
class ConvexSet {
 public:
  struct All {
    int dim;
  };
  struct Box {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;
  };
  struct Ball {
    Eigen::VectorXd center;
    double radius;
  };

  static ConvexSet all(int dim);
  static ConvexSet box(Eigen::VectorXd lo, Eigen::VectorXd hi);
  static ConvexSet ball(Eigen::VectorXd center, double radius);

  int dim() const;
  bool is_all() const { return std::holds_alternative<All>(v_); }
  bool is_box() const { return std::holds_alternative<Box>(v_); }
  bool is_ball() const { return std::holds_alternative<Ball>(v_); }
  const Box& as_box() const { return std::get<Box>(v_); }
  const Ball& as_ball() const { return std::get<Ball>(v_); }

  Eigen::VectorXd project(const Eigen::VectorXd& x) const;
  double distance(const Eigen::VectorXd& x) const;
  bool member(const Eigen::VectorXd& x, double tol) const;

  // Moreau split of y at x in S: y = tangent + normal, tangent'normal = 0
  struct MoreauSplit {
    Eigen::VectorXd tangent;
    Eigen::VectorXd normal;
  };
  MoreauSplit moreau_decompose(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                               double tol = 1e-10) const;

  bool normal_cone_member(const Eigen::VectorXd& x, const Eigen::VectorXd& v, double tol) const;

  bool operator==(const ConvexSet& other) const;

 private:
  explicit ConvexSet(std::variant<All, Box, Ball> v) : v_(std::move(v)) {}
  std::variant<All, Box, Ball> v_;
};

// The shifted set F(x) = { d | x + d in F } intersected with the ball
// ||d|| <= delta; the feasible region of every model subproblem.
class ShiftedRegion {
 public:
  ShiftedRegion(const ConvexSet& set, Eigen::VectorXd x, double delta);

  int dim() const { return static_cast<int>(x_.size()); }
  double delta() const { return delta_; }
  const Eigen::VectorXd& base() const { return x_; }
  const ConvexSet& set() const { return *set_; }

  bool contains(const Eigen::VectorXd& d, double tol = 1e-10) const;
  // Euclidean projection onto F(x) ∩ ball via Dykstra's alternating scheme
  Eigen::VectorXd project(const Eigen::VectorXd& d) const;

 private:
  const ConvexSet* set_;
  Eigen::VectorXd x_;
  double delta_;
};

}  // namespace hiord
