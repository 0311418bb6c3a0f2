#include "hiord/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "hiord/errors.hpp"

namespace hiord {

namespace {

// all permutations of {0,..,k-1} for k <= 4, precomputed
const std::vector<std::vector<int>>& permutations(int k) {
  static const std::array<std::vector<std::vector<int>>, 5> table = [] {
    std::array<std::vector<std::vector<int>>, 5> t;
    for (int k = 1; k <= 4; ++k) {
      std::vector<int> p(k);
      for (int i = 0; i < k; ++i) p[i] = i;
      do {
        t[k].push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    return t;
  }();
  return table[k];
}

void check_order(int order) {
  if (order < 1 || order > 4) throw UnsupportedOrder("tensor order must be in 1..4");
}

}  // namespace

SymmetricTensor::SymmetricTensor(int order, int dim) : order_(order), dim_(dim) {
  check_order(order);
  if (dim < 1) throw ArgumentError("tensor dim must be >= 1");
  std::size_t size = 1;
  for (int i = 0; i < order; ++i) size *= static_cast<std::size_t>(dim);
  data_.assign(size, 0.0);
}

SymmetricTensor SymmetricTensor::from_vector(const Eigen::VectorXd& v) {
  SymmetricTensor t(1, static_cast<int>(v.size()));
  for (int i = 0; i < v.size(); ++i) t.data_[static_cast<std::size_t>(i)] = v[i];
  return t;
}

SymmetricTensor SymmetricTensor::from_matrix(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ArgumentError("from_matrix: matrix must be square");
  SymmetricTensor t(2, static_cast<int>(m.rows()));
  const int n = t.dim_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.data_[static_cast<std::size_t>(i * n + j)] = 0.5 * (m(i, j) + m(j, i));
  return t;
}

SymmetricTensor SymmetricTensor::from_dense(int order, int dim, std::vector<double> data) {
  SymmetricTensor t(order, dim);
  if (data.size() != t.data_.size()) throw ArgumentError("from_dense: wrong data size");
  const auto& perms = permutations(order);
  std::vector<int> idx(static_cast<std::size_t>(order), 0);
  std::vector<int> pidx(static_cast<std::size_t>(order), 0);
  const std::size_t total = t.data_.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (int a = order - 1; a >= 0; --a) {
      idx[static_cast<std::size_t>(a)] = static_cast<int>(rest % static_cast<std::size_t>(dim));
      rest /= static_cast<std::size_t>(dim);
    }
    double acc = 0.0;
    for (const auto& p : perms) {
      for (int a = 0; a < order; ++a) pidx[static_cast<std::size_t>(a)] = idx[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])];
      acc += data[t.flat_index(pidx)];
    }
    t.data_[flat] = acc / static_cast<double>(perms.size());
  }
  return t;
}

std::size_t SymmetricTensor::flat_index(std::span<const int> idx) const {
  std::size_t flat = 0;
  for (int a = 0; a < order_; ++a) {
    const int i = idx[static_cast<std::size_t>(a)];
    if (i < 0 || i >= dim_) throw ArgumentError("tensor index out of range");
    flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return flat;
}

double SymmetricTensor::entry(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != order_) throw ArgumentError("entry: wrong index count");
  return data_[flat_index(idx)];
}

double SymmetricTensor::entry(std::initializer_list<int> idx) const {
  std::vector<int> v(idx);
  return entry(std::span<const int>(v));
}

void SymmetricTensor::set_sym(std::span<const int> idx, double value) {
  if (static_cast<int>(idx.size()) != order_) throw ArgumentError("set_sym: wrong index count");
  std::vector<int> pidx(static_cast<std::size_t>(order_), 0);
  for (const auto& p : permutations(order_)) {
    for (int a = 0; a < order_; ++a) pidx[static_cast<std::size_t>(a)] = idx[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])];
    data_[flat_index(pidx)] = value;
  }
}

void SymmetricTensor::set_sym(std::initializer_list<int> idx, double value) {
  std::vector<int> v(idx);
  set_sym(std::span<const int>(v), value);
}

double SymmetricTensor::apply(std::span<const Eigen::VectorXd> args) const {
  if (static_cast<int>(args.size()) != order_)
    throw ArgumentError("apply: argument count must equal tensor order");
  for (const auto& v : args)
    if (v.size() != dim_) throw ArgumentError("apply: vector length must equal tensor dim");
  SymmetricTensor cur = *this;
  for (int a = order_ - 1; a >= 1; --a) cur = cur.contract(args[static_cast<std::size_t>(a)]);
  return cur.as_vector().dot(args[0]);
}

double SymmetricTensor::apply_power(const Eigen::VectorXd& v) const {
  std::vector<Eigen::VectorXd> args(static_cast<std::size_t>(order_), v);
  return apply(args);
}

SymmetricTensor SymmetricTensor::contract(const Eigen::VectorXd& v) const {
  if (v.size() != dim_) throw ArgumentError("contract: vector length must equal tensor dim");
  if (order_ == 1) throw ArgumentError("contract: cannot reduce an order-1 tensor");
  SymmetricTensor out(order_ - 1, dim_);
  const std::size_t n = static_cast<std::size_t>(dim_);
  const std::size_t blocks = out.data_.size();
  for (std::size_t b = 0; b < blocks; ++b) {
    double acc = 0.0;
    const std::size_t base = b * n;
    for (std::size_t j = 0; j < n; ++j) acc += data_[base + j] * v[static_cast<Eigen::Index>(j)];
    out.data_[b] = acc;
  }
  return out;
}

Eigen::VectorXd SymmetricTensor::contract_all_but_one(const Eigen::VectorXd& v) const {
  SymmetricTensor cur = *this;
  for (int a = order_; a > 1; --a) cur = cur.contract(v);
  return cur.as_vector();
}

SymmetricTensor SymmetricTensor::compose_with_basis(const Eigen::MatrixXd& basis) const {
  if (basis.rows() != dim_) throw ArgumentError("compose_with_basis: row count must equal dim");
  const int p = static_cast<int>(basis.cols());
  if (p < 1) throw ArgumentError("compose_with_basis: empty basis");
  // contract each mode with the basis in turn
  std::vector<double> cur = data_;
  int n_left = order_;    // modes still in the original dim
  int cur_dim_tail = 1;   // product of reduced trailing dims
  std::vector<double> next;
  for (int mode = 0; mode < order_; ++mode) {
    // current layout: [dim_]^(n_left) x [p]^(mode); reduce the n_left-th mode
    std::size_t lead = 1;
    for (int i = 0; i < n_left - 1; ++i) lead *= static_cast<std::size_t>(dim_);
    const std::size_t tail = static_cast<std::size_t>(cur_dim_tail);
    next.assign(lead * static_cast<std::size_t>(p) * tail, 0.0);
    for (std::size_t a = 0; a < lead; ++a)
      for (int j = 0; j < p; ++j)
        for (std::size_t t = 0; t < tail; ++t) {
          double acc = 0.0;
          for (int i = 0; i < dim_; ++i)
            acc += cur[(a * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i)) * tail + t] * basis(i, j);
          next[(a * static_cast<std::size_t>(p) + static_cast<std::size_t>(j)) * tail + t] = acc;
        }
    cur.swap(next);
    --n_left;
    cur_dim_tail *= p;
  }
  return SymmetricTensor::from_dense(order_, p, std::move(cur));
}

Eigen::VectorXd SymmetricTensor::as_vector() const {
  if (order_ != 1) throw ArgumentError("as_vector: tensor order must be 1");
  Eigen::VectorXd v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = data_[static_cast<std::size_t>(i)];
  return v;
}

Eigen::MatrixXd SymmetricTensor::as_matrix() const {
  if (order_ != 2) throw ArgumentError("as_matrix: tensor order must be 2");
  Eigen::MatrixXd m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = data_[static_cast<std::size_t>(i * dim_ + j)];
  return m;
}

double SymmetricTensor::max_abs_entry() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

SymmetricTensor& SymmetricTensor::operator+=(const SymmetricTensor& other) {
  if (other.order_ != order_ || other.dim_ != dim_)
    throw ArgumentError("tensor sum: order/dim mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

SymmetricTensor& SymmetricTensor::operator*=(double scale) {
  for (double& v : data_) v *= scale;
  return *this;
}

double SymmetricTensor::induced_norm() const {
  if (max_abs_entry() == 0.0) return 0.0;
  if (order_ == 1) return as_vector().norm();
  if (order_ == 2) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(as_matrix());
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }

  // orders 3 and 4: multi-start projected ascent of |T[v]^k| on the sphere
  const int n = dim_;
  std::vector<Eigen::VectorXd> seeds;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[i] = 1.0;
    seeds.push_back(e);
    seeds.push_back(-e);
  }
  std::mt19937_64 rng(0x5eed0001u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < 32; ++s) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gauss(rng);
    if (v.norm() < 1e-12) v.setOnes();
    seeds.push_back(v.normalized());
  }

  double best = 0.0;
  for (const auto& seed : seeds) {
    for (double sign : {1.0, -1.0}) {
      Eigen::VectorXd v = seed;
      double val = sign * apply_power(v);
      for (int it = 0; it < 200; ++it) {
        Eigen::VectorXd g = sign * static_cast<double>(order_) * contract_all_but_one(v);
        Eigen::VectorXd gt = g - g.dot(v) * v;  // tangent component
        const double gn = gt.norm();
        if (gn <= 1e-13 * std::max(1.0, std::abs(val))) break;
        double step = 1.0 / std::max(1.0, gn);
        bool improved = false;
        for (int ls = 0; ls < 40; ++ls) {
          Eigen::VectorXd cand = (v + step * gt).normalized();
          const double cval = sign * apply_power(cand);
          if (cval > val + 1e-15) {
            v = cand;
            val = cval;
            improved = true;
            break;
          }
          step *= 0.5;
        }
        if (!improved) break;
      }
      best = std::max(best, val);
    }
  }
  return best;
}

bool SymmetricTensor::q_kernel_member(const Eigen::VectorXd& v, double tol) const {
  if (v.size() != dim_) throw ArgumentError("q_kernel_member: dim mismatch");
  const double val = std::abs(apply_power(v));
  const double scale = induced_norm() * std::pow(v.norm(), order_);
  return val <= tol * std::max(1.0, scale);
}

SymmetricTensor sym_outer(std::span<const SymmetricTensor> tensors) {
  if (tensors.empty()) throw ArgumentError("sym_outer: no operands");
  const int dim = tensors[0].dim();
  int total = 0;
  for (const auto& t : tensors) {
    if (t.dim() != dim) throw ArgumentError("sym_outer: operands must share dim");
    total += t.order();
  }
  if (total > 4) throw UnsupportedOrder("sym_outer: total order exceeds 4");

  // raw product, laid out with operand indices concatenated
  std::size_t size = 1;
  for (int i = 0; i < total; ++i) size *= static_cast<std::size_t>(dim);
  std::vector<double> prod(size);
  std::vector<int> idx(static_cast<std::size_t>(total), 0);
  for (std::size_t flat = 0; flat < size; ++flat) {
    std::size_t rest = flat;
    for (int a = total - 1; a >= 0; --a) {
      idx[static_cast<std::size_t>(a)] = static_cast<int>(rest % static_cast<std::size_t>(dim));
      rest /= static_cast<std::size_t>(dim);
    }
    double value = 1.0;
    int offset = 0;
    for (const auto& t : tensors) {
      value *= t.entry(std::span<const int>(idx).subspan(static_cast<std::size_t>(offset),
                                                         static_cast<std::size_t>(t.order())));
      offset += t.order();
    }
    prod[flat] = value;
  }
  return SymmetricTensor::from_dense(total, dim, std::move(prod));
}

SymmetricTensor sym_outer(const SymmetricTensor& a, const SymmetricTensor& b) {
  std::array<SymmetricTensor, 2> ops{a, b};
  return sym_outer(std::span<const SymmetricTensor>(ops));
}

}  // namespace hiord
