#ifndef WEDGEOPS_TENSOR_HPP
#define WEDGEOPS_TENSOR_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "wedgeops/multiindex.hpp"

namespace wedgeops {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Inner products are linear in the first argument and conjugate-linear in
/// the second throughout this library.
inline Complex inner(const Vec& x, const Vec& y) { return y.dot(x); }

/// Dense element of the p-fold tensor power of C^d, stored flat with the
/// first factor most significant: entry (t_0,...,t_{p-1}) sits at
/// sum t_k d^{p-1-k}. This representation exists as an oracle for small
/// sizes; construction enforces grade <= 8 and d^grade <= 10^6.
///
/// The inner product carries a factor of p! on top of the plain coordinate
/// pairing, which is what makes the increasing-multi-index wedge basis
/// orthonormal downstream.
class FullTensor {
 public:
  FullTensor(int dim, int grade);

  static FullTensor elementary(const std::vector<Vec>& factors);

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  std::int64_t entry_count() const { return entries_.size(); }

  const Vec& entries() const { return entries_; }
  Vec& entries() { return entries_; }

  Complex at(const std::vector<int>& tuple) const { return entries_[flat_index(tuple)]; }
  void set(const std::vector<int>& tuple, Complex value) { entries_[flat_index(tuple)] = value; }

  std::int64_t flat_index(const std::vector<int>& tuple) const;
  std::vector<int> tuple_at(std::int64_t flat) const;

  FullTensor operator+(const FullTensor& rhs) const;
  FullTensor operator-(const FullTensor& rhs) const;
  FullTensor operator*(Complex scalar) const;

 private:
  int dim_;
  int grade_;
  Vec entries_;
};

/// <u, v> = p! * sum_t u_t conj(v_t); sesquilinear, conjugate-symmetric.
Complex tensor_inner(const FullTensor& u, const FullTensor& v);

double tensor_norm(const FullTensor& u);

/// The unitary induced by sigma: the factor in slot k moves to slot
/// sigma(k), so permute(compose(s, t), u) == permute(s, permute(t, u)).
FullTensor permute(const Permutation& sigma, const FullTensor& u);

/// Orthogonal projection onto the antisymmetric tensors:
/// (1/p!) sum over sigma of sign(sigma) * permute(sigma, u).
FullTensor antisymmetrize(const FullTensor& u);

/// Mirror of antisymmetrize without the signs; projects onto the symmetric
/// tensors.
FullTensor symmetrize(const FullTensor& u);

}  // namespace wedgeops

#endif
