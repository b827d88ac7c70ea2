#ifndef WEDGEOPS_WEDGE_HPP
#define WEDGEOPS_WEDGE_HPP

#include <utility>
#include <vector>

#include "wedgeops/tensor.hpp"

namespace wedgeops {

/// Element of the grade-p wedge power of C^d in the lexicographically
/// ordered increasing-multi-index basis. With the p!-weighted tensor inner
/// product that basis is orthonormal, so norms are plain coordinate norms.
class WedgeVector {
 public:
  WedgeVector(int dim, int grade);
  WedgeVector(int dim, int grade, Vec coords);

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const Vec& coords() const { return coords_; }
  Vec& coords() { return coords_; }

  double norm() const { return coords_.norm(); }

  WedgeVector operator+(const WedgeVector& rhs) const;
  WedgeVector operator-(const WedgeVector& rhs) const;
  WedgeVector operator*(Complex scalar) const;

 private:
  int dim_;
  int grade_;
  Vec coords_;  // length C(dim, grade); empty when grade > dim
};

/// x_1 ^ ... ^ x_p. Coordinate I is the p x p minor with rows I of the
/// d x p matrix whose columns are the factors. Grades above d yield the
/// zero element of a zero-dimensional space.
WedgeVector wedge(const std::vector<Vec>& factors);

/// Inner product of two elementary wedges: det[ <x_i, y_j> ].
Complex gram_inner(const std::vector<Vec>& xs, const std::vector<Vec>& ys);

/// The antisymmetric tensor carrying the same element of the wedge power.
FullTensor to_full_tensor(const WedgeVector& w);

/// Multi-index coordinates of the antisymmetric part of u (projection and
/// coordinate extraction in one pass).
WedgeVector wedge_from_tensor(const FullTensor& u);

/// For orthonormal us and any x, both sides of
///   |u_1 ^ ... ^ u_j ^ x| = |x - sum <x, u_i> u_i|.
/// Throws std::invalid_argument (with the worst Gram deviation) when the
/// us fail orthonormality beyond `ortho_tol`.
std::pair<double, double> residual_norm_check(const std::vector<Vec>& us, const Vec& x,
                                              double ortho_tol = 1e-10);

/// |det A| against both the column-norm and row-norm products, with `slack`
/// of absolute headroom.
bool hadamard_check(const Mat& a, double slack = 1e-12);

}  // namespace wedgeops

#endif
