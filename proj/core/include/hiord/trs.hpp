#pragma once

#include <Eigen/Core>

namespace hiord {

// Exact global minimizer of g'd + 1/2 d'H d over ||d|| <= delta
// (Moré–Sorensen via eigendecomposition; intended for small dense n).
Eigen::VectorXd solve_trust_region_subproblem(const Eigen::VectorXd& g, const Eigen::MatrixXd& H,
                                              double delta);

}  // namespace hiord
