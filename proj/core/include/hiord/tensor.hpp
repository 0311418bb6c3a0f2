#pragma once

#include <Eigen/Core>
#include <array>
#include <span>
#include <vector>

namespace hiord {

// Dense symmetric tensor of order 1..4 acting as a multilinear form on R^n.
// Entries are stored fully (all n^k positions); construction symmetrizes, so
// entry(i...) is invariant under any permutation of the index tuple.
class SymmetricTensor {
 public:
  SymmetricTensor(int order, int dim);  // zero tensor

  static SymmetricTensor from_vector(const Eigen::VectorXd& v);
  static SymmetricTensor from_matrix(const Eigen::MatrixXd& m);  // symmetrized
  // symmetrize arbitrary dense data, laid out row-major with index
  // ((i1*n + i2)*n + ...)
  static SymmetricTensor from_dense(int order, int dim, std::vector<double> data);

  int order() const { return order_; }
  int dim() const { return dim_; }

  double entry(std::span<const int> idx) const;
  double entry(std::initializer_list<int> idx) const;
  // writes value to every permutation of idx
  void set_sym(std::span<const int> idx, double value);
  void set_sym(std::initializer_list<int> idx, double value);

  // multilinear application T[v1,...,vk]; throws ArgumentError on mismatch
  double apply(std::span<const Eigen::VectorXd> args) const;
  double apply_power(const Eigen::VectorXd& v) const;  // T[v]^k

  // contraction of the last index: (T . v)[i1..i_{k-1}] = sum_j T[i1..j] v_j
  SymmetricTensor contract(const Eigen::VectorXd& v) const;
  // contract down to a vector: T[v]^{k-1} as an element of R^n
  Eigen::VectorXd contract_all_but_one(const Eigen::VectorXd& v) const;
  // pull back through a basis: S[z1..zk] = T[B z1, ..., B zk]
  SymmetricTensor compose_with_basis(const Eigen::MatrixXd& basis) const;

  Eigen::VectorXd as_vector() const;  // order 1
  Eigen::MatrixXd as_matrix() const;  // order 2

  // max over unit v of |T[v]^k|; exact for orders 1 and 2 (norm / spectral
  // norm), multi-start ascent with 2n+32 deterministic seeds for orders 3, 4
  double induced_norm() const;

  // |T[v]^k| <= tol * max(1, induced_norm * ||v||^k)
  bool q_kernel_member(const Eigen::VectorXd& v, double tol) const;

  double max_abs_entry() const;

  SymmetricTensor& operator+=(const SymmetricTensor& other);
  SymmetricTensor& operator*=(double scale);
  friend SymmetricTensor operator+(SymmetricTensor a, const SymmetricTensor& b) {
    a += b;
    return a;
  }
  friend SymmetricTensor operator*(double s, SymmetricTensor t) {
    t *= s;
    return t;
  }

  const std::vector<double>& raw() const { return data_; }

 private:
  std::size_t flat_index(std::span<const int> idx) const;

  int order_;
  int dim_;
  std::vector<double> data_;
};

// Symmetrized tensor product of the operands (total order <= 4); for equal
// vector arguments, apply(sym_outer(A,B), [v]^{a+b}) = A[v]^a * B[v]^b.
SymmetricTensor sym_outer(std::span<const SymmetricTensor> tensors);
SymmetricTensor sym_outer(const SymmetricTensor& a, const SymmetricTensor& b);

}  // namespace hiord
