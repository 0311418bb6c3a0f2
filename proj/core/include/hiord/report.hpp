#pragma once

#include <string>

#include "hiord/outer.hpp"

namespace hiord {

// Deterministic JSON run report ("schema": 1): termination kind, final point,
// target, multiplier, radius, per-order phi values, evaluation counters,
// target history, the K+/K- partition and the invariant-check outcomes.
std::string run_report_json(const SolveResult& result);

}  // namespace hiord
