#include "hiord/problem_io.hpp"

#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hiord/errors.hpp"

namespace hiord {

namespace {

using nlohmann::ordered_json;
constexpr double kInf = std::numeric_limits<double>::infinity();

Polynomial poly_from_json(const ordered_json& j, int n) {
  std::vector<PolyTerm> terms;
  for (const auto& tj : j) {
    PolyTerm t;
    t.exp = tj.at("exp").get<std::vector<int>>();
    if (static_cast<int>(t.exp.size()) != n)
      throw ArgumentError("problem json: term exponent length != n");
    t.coef = tj.at("coef").get<double>();
    terms.push_back(std::move(t));
  }
  return Polynomial(n, std::move(terms));
}

ordered_json poly_to_json(const Polynomial& p) {
  ordered_json out = ordered_json::array();
  for (const auto& t : p.terms()) out.push_back({{"exp", t.exp}, {"coef", t.coef}});
  return out;
}

Eigen::VectorXd bound_from_json(const ordered_json& j, double inf_sign) {
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = j[i].is_null() ? inf_sign * kInf : j[i].get<double>();
  return v;
}

ordered_json bound_to_json(const Eigen::VectorXd& v) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) {
    if (std::isinf(v[i]))
      out.push_back(nullptr);
    else
      out.push_back(v[i]);
  }
  return out;
}

Eigen::VectorXd vec_from_json(const ordered_json& j) {
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

ordered_json vec_to_json(const Eigen::VectorXd& v) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

PolynomialProblem problem_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("problem json: parse error: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    if (n < 1) throw ArgumentError("problem json: n must be >= 1");
    Polynomial f = poly_from_json(j.at("f"), n);
    std::vector<Polynomial> c;
    for (const auto& cj : j.at("c")) c.push_back(poly_from_json(cj, n));

    const auto& sj = j.at("set");
    const std::string type = sj.at("type").get<std::string>();
    ConvexSet set = ConvexSet::all(n);
    if (type == "all") {
      // nothing more
    } else if (type == "box") {
      set = ConvexSet::box(bound_from_json(sj.at("lo"), -1.0), bound_from_json(sj.at("hi"), +1.0));
    } else if (type == "ball") {
      set = ConvexSet::ball(vec_from_json(sj.at("center")), sj.at("radius").get<double>());
    } else {
      throw ArgumentError("problem json: unknown set type '" + type + "'");
    }
    std::optional<double> f_low;
    if (j.contains("f_low") && !j.at("f_low").is_null()) f_low = j.at("f_low").get<double>();
    return make_problem(std::move(f), std::move(c), std::move(set), f_low);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("problem json: ") + e.what());
  }
}

PolynomialProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open problem file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return problem_from_json(ss.str());
}

std::string problem_to_json(const PolynomialProblem& prob) {
  ordered_json j;
  j["n"] = prob.dim();
  j["f"] = poly_to_json(prob.f);
  j["c"] = ordered_json::array();
  for (const auto& ci : prob.c) j["c"].push_back(poly_to_json(ci));
  ordered_json sj;
  if (prob.feasible_set.is_all()) {
    sj["type"] = "all";
  } else if (prob.feasible_set.is_box()) {
    sj["type"] = "box";
    sj["lo"] = bound_to_json(prob.feasible_set.as_box().lo);
    sj["hi"] = bound_to_json(prob.feasible_set.as_box().hi);
  } else {
    sj["type"] = "ball";
    sj["center"] = vec_to_json(prob.feasible_set.as_ball().center);
    sj["radius"] = prob.feasible_set.as_ball().radius;
  }
  j["set"] = sj;
  if (prob.f_low)
    j["f_low"] = *prob.f_low;
  else
    j["f_low"] = nullptr;
  return j.dump(2) + "\n";
}

void save_problem(const PolynomialProblem& prob, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write problem file '" + path + "'");
  out << problem_to_json(prob);
}

}  // namespace hiord
