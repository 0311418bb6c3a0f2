#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace hiord {

// Low-discrepancy Sobol sequence (direction numbers after Joe & Kuo) for up
// to 10 dimensions; enough for the desk-scale problems this library targets.
class SobolSequence {
 public:
  explicit SobolSequence(int dim);

  // next point in [0,1)^dim
  Eigen::VectorXd next();
  void skip(std::uint64_t count);

 private:
  int dim_;
  std::uint64_t index_ = 0;
  std::vector<std::array<std::uint32_t, 32>> dirs_;  // per-dimension direction numbers
  std::vector<std::uint32_t> state_;
};

// process-wide multi-start seed (overridden by the CLI via HIORD_SEED)
std::uint64_t multistart_seed();
void set_multistart_seed(std::uint64_t seed);

}  // namespace hiord
