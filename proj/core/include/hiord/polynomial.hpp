#pragma once

#include <Eigen/Core>
#include <vector>

#include "hiord/tensor.hpp"

namespace hiord {

struct PolyTerm {
  std::vector<int> exp;  // exponent multi-index, length = dim
  double coef = 0.0;
};

// Multivariate polynomial in canonical form: terms sorted by exponent,
// no duplicate exponent multi-indices, total degree <= 8.
class Polynomial {
 public:
  Polynomial(int dim, std::vector<PolyTerm> terms);
  static Polynomial zero(int dim) { return Polynomial(dim, {}); }
  static Polynomial constant(int dim, double value);

  int dim() const { return dim_; }
  int degree() const;
  const std::vector<PolyTerm>& terms() const { return terms_; }

  double eval(const Eigen::VectorXd& x) const;
  Polynomial partial(int var) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(double s) const;

  bool operator==(const Polynomial& other) const;

 private:
  int dim_;
  std::vector<PolyTerm> terms_;
};

// Exact k-th derivative tensor of p at x (k in 1..4).
SymmetricTensor derivative_tensor(const Polynomial& p, const Eigen::VectorXd& x, int k);

}  // namespace hiord
