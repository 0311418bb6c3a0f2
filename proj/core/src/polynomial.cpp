#include "hiord/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hiord/errors.hpp"

namespace hiord {

namespace {
constexpr int kMaxDegree = 8;
}

Polynomial::Polynomial(int dim, std::vector<PolyTerm> terms) : dim_(dim) {
  if (dim < 1) throw ArgumentError("polynomial dim must be >= 1");
  for (auto& t : terms) {
    if (static_cast<int>(t.exp.size()) != dim)
      throw ArgumentError("polynomial term exponent length must equal dim");
    int deg = 0;
    for (int e : t.exp) {
      if (e < 0) throw ArgumentError("polynomial exponents must be non-negative");
      deg += e;
    }
    if (deg > kMaxDegree) throw ArgumentError("polynomial degree exceeds 8");
  }
  std::sort(terms.begin(), terms.end(),
            [](const PolyTerm& a, const PolyTerm& b) { return a.exp < b.exp; });
  // merge duplicates, drop exact zeros
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exp == t.exp)
      terms_.back().coef += t.coef;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const PolyTerm& t) { return t.coef == 0.0; });
}

Polynomial Polynomial::constant(int dim, double value) {
  return Polynomial(dim, {PolyTerm{std::vector<int>(static_cast<std::size_t>(dim), 0), value}});
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, std::accumulate(t.exp.begin(), t.exp.end(), 0));
  return deg;
}

double Polynomial::eval(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) throw ArgumentError("polynomial eval: dim mismatch");
  double acc = 0.0;
  for (const auto& t : terms_) {
    double m = t.coef;
    for (int i = 0; i < dim_; ++i)
      for (int e = 0; e < t.exp[static_cast<std::size_t>(i)]; ++e) m *= x[i];
    acc += m;
  }
  return acc;
}

Polynomial Polynomial::partial(int var) const {
  if (var < 0 || var >= dim_) throw ArgumentError("partial: variable index out of range");
  std::vector<PolyTerm> out;
  for (const auto& t : terms_) {
    const int e = t.exp[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    PolyTerm d = t;
    d.coef *= static_cast<double>(e);
    d.exp[static_cast<std::size_t>(var)] = e - 1;
    out.push_back(std::move(d));
  }
  return Polynomial(dim_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_) throw ArgumentError("polynomial sum: dim mismatch");
  std::vector<PolyTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  *this = Polynomial(dim_, std::move(all));
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.dim_ != dim_) throw ArgumentError("polynomial product: dim mismatch");
  std::vector<PolyTerm> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) {
      PolyTerm t;
      t.exp.resize(static_cast<std::size_t>(dim_));
      for (int i = 0; i < dim_; ++i)
        t.exp[static_cast<std::size_t>(i)] =
            a.exp[static_cast<std::size_t>(i)] + b.exp[static_cast<std::size_t>(i)];
      t.coef = a.coef * b.coef;
      out.push_back(std::move(t));
    }
  return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::scaled(double s) const {
  std::vector<PolyTerm> out = terms_;
  for (auto& t : out) t.coef *= s;
  return Polynomial(dim_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (dim_ != other.dim_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != other.terms_[i].exp || terms_[i].coef != other.terms_[i].coef)
      return false;
  return true;
}

SymmetricTensor derivative_tensor(const Polynomial& p, const Eigen::VectorXd& x, int k) {
  if (k < 1 || k > 4) throw UnsupportedOrder("derivative_tensor: order must be 1..4");
  if (x.size() != p.dim()) throw ArgumentError("derivative_tensor: dim mismatch");
  const int n = p.dim();
  SymmetricTensor out(k, n);

  // mixed partial for each non-decreasing index tuple, then write all images
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  auto advance = [&]() {
    int a = k - 1;
    while (a >= 0) {
      if (idx[static_cast<std::size_t>(a)] + 1 < n) {
        ++idx[static_cast<std::size_t>(a)];
        for (int b = a + 1; b < k; ++b) idx[static_cast<std::size_t>(b)] = idx[static_cast<std::size_t>(a)];
        return true;
      }
      --a;
    }
    return false;
  };
  do {
    std::fill(mult.begin(), mult.end(), 0);
    for (int a = 0; a < k; ++a) ++mult[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
    double acc = 0.0;
    for (const auto& t : p.terms()) {
      double c = t.coef;
      bool dead = false;
      for (int i = 0; i < n && !dead; ++i) {
        const int e = t.exp[static_cast<std::size_t>(i)];
        const int m = mult[static_cast<std::size_t>(i)];
        if (e < m) {
          dead = true;
          break;
        }
        for (int d = 0; d < m; ++d) c *= static_cast<double>(e - d);  // falling factorial
        for (int d = 0; d < e - m; ++d) c *= x[i];
      }
      if (!dead) acc += c;
    }
    out.set_sym(idx, acc);
  } while (advance());
  return out;
}

}  // namespace hiord
