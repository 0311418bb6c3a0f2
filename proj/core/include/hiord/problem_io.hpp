#pragma once

#include <string>

#include "hiord/problem.hpp"

namespace hiord {

// JSON problem format:
//   { "n": int,
//     "f": [ {"exp": [int...], "coef": float}, ... ],
//     "c": [ [term...], ... ],
//     "set": {"type": "all"} |
//            {"type": "box", "lo": [...], "hi": [...]} |   // null entry = unbounded
//            {"type": "ball", "center": [...], "radius": float},
//     "f_low": float | null }
// Round-trips bit-exactly: read -> write -> read yields an identical problem.
PolynomialProblem problem_from_json(const std::string& text);
PolynomialProblem load_problem(const std::string& path);
std::string problem_to_json(const PolynomialProblem& prob);
void save_problem(const PolynomialProblem& prob, const std::string& path);

}  // namespace hiord
