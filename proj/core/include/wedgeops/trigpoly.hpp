#ifndef WEDGEOPS_TRIGPOLY_HPP
#define WEDGEOPS_TRIGPOLY_HPP

#include <vector>

#include "wedgeops/tensor.hpp"

namespace wedgeops {

/// Finitely supported Fourier series on the unit circle with values in C^m:
/// f(z) = sum_{k=kmin}^{kmax} c_k z^k, where z^k with k < 0 means the
/// conjugate power on the circle. The analytic (nonnegative-frequency)
/// series are the truncated Hardy-space elements; their values extend to
/// the open disc.
///
/// Arithmetic extends degree ranges additively and never silently drops
/// coefficients; use `truncated` for explicit truncation.
class VecTrigPoly {
 public:
  VecTrigPoly(int valdim, int kmin, std::vector<Vec> coeffs);

  static VecTrigPoly zero(int valdim);
  static VecTrigPoly constant(const Vec& value);
  /// z^k e_i (0-based component i).
  static VecTrigPoly basis(int valdim, int k, int i);

  int valdim() const { return valdim_; }
  int kmin() const { return kmin_; }
  int kmax() const { return kmin_ + static_cast<int>(coeffs_.size()) - 1; }
  int length() const { return static_cast<int>(coeffs_.size()); }

  /// Coefficient of z^k; zero vector outside the stored range.
  Vec coeff(int k) const;
  const std::vector<Vec>& coeffs() const { return coeffs_; }

  /// True when every coefficient with k < 0 has norm <= tol.
  bool is_analytic(double tol = 0.0) const;

  /// Drops leading/trailing coefficients of norm <= tol. The zero series
  /// normalizes to a single zero coefficient at k = 0.
  VecTrigPoly trimmed(double tol = 0.0) const;

  /// Multiplication by z^k.
  VecTrigPoly shifted(int k) const;

  double l2_norm() const;

  VecTrigPoly operator+(const VecTrigPoly& rhs) const;
  VecTrigPoly operator-(const VecTrigPoly& rhs) const;
  VecTrigPoly operator*(Complex scalar) const;

 private:
  int valdim_;
  int kmin_;
  std::vector<Vec> coeffs_;  // coeffs_[j] = c_{kmin_ + j}, each of length valdim_
};

/// Parseval form of (1/2pi) integral of <f(z), g(z)> over the circle:
/// the exact coefficient sum over the overlapping range.
Complex l2_inner(const VecTrigPoly& f, const VecTrigPoly& g);

/// Value at z: on the circle any support is allowed; inside the disc the
/// series must be analytic (negative coefficients exactly zero).
Vec eval(const VecTrigPoly& f, Complex z);

/// Orthogonal projection onto nonnegative frequencies.
VecTrigPoly riesz_project(const VecTrigPoly& f);

/// Coefficient k of the complex derivative: (k+1) c_{k+1}. Analytic input
/// only.
VecTrigPoly derivative(const VecTrigPoly& f);

/// The scalar series z -> <f(z), g(z)>; coefficient k is
/// sum_a <c_a(f), c_{a-k}(g)>.
VecTrigPoly scalar_pair(const VecTrigPoly& f, const VecTrigPoly& g);

/// Pointwise product of a scalar series (valdim 1) with a vector series.
VecTrigPoly scalar_multiply(const VecTrigPoly& scalar, const VecTrigPoly& f);

/// Pointwise wedge product of n series over C^d, valued in the grade-n
/// wedge power: eval commutes with the wedge at every point of the circle.
/// Coefficient k is the multilinear convolution
///   sum over k_1+...+k_n = k of wedge(c_{k_1}(f_1), ..., c_{k_n}(f_n)).
/// When n > d the result is the identically-zero series of a
/// zero-dimensional value space.
VecTrigPoly pointwise_wedge(const std::vector<VecTrigPoly>& fs);

enum class Lp { One, Two, Infinity };

/// L^2 by Parseval (exact, samples ignored); L^1 and L^infinity by K-point
/// uniform sampling on the circle, K >= 8 * (kmax - kmin + 1). The uniform
/// rule is spectrally accurate for smooth periodic integrands; pass
/// samples = 0 to use the minimal admissible K.
double lp_norm(const VecTrigPoly& f, Lp p, int samples = 0);

/// Explicit restriction to the frequency window [lo, hi]; everything
/// outside is dropped.
VecTrigPoly truncated(const VecTrigPoly& f, int lo, int hi);

/// Autocorrelation series: coefficients of z -> |f(z)|^2, indexed
/// symmetrically around 0.
VecTrigPoly autocorrelation(const VecTrigPoly& f);

/// Exact coefficient criterion for unit pointwise norm on the circle: the
/// autocorrelation equals the delta at frequency 0 within tol. Analytic
/// series only; anything else returns false.
bool is_inner(const VecTrigPoly& xi, double tol = 1e-10);

/// Matrix-valued trigonometric polynomial G(z) = sum G_k z^k, the symbol of
/// a Toeplitz operator.
class MatSymbol {
 public:
  MatSymbol(int rows, int cols, int kmin, std::vector<Mat> coeffs);

  static MatSymbol zero(int rows, int cols);
  static MatSymbol constant(const Mat& value);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int kmin() const { return kmin_; }
  int kmax() const { return kmin_ + static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of z^k; zero matrix outside the stored range.
  Mat coeff(int k) const;

  /// Pointwise adjoint z -> G(z)^*; coefficient k is (G_{-k})^*.
  MatSymbol adjoint() const;

  Mat eval(Complex z) const;

  MatSymbol operator+(const MatSymbol& rhs) const;
  MatSymbol operator-(const MatSymbol& rhs) const;

 private:
  int rows_;
  int cols_;
  int kmin_;
  std::vector<Mat> coeffs_;
};

/// Pointwise application (G h)(z) = G(z) h(z) by coefficient convolution.
VecTrigPoly apply_symbol(const MatSymbol& g, const VecTrigPoly& h);

/// The rank-one symbol z -> xi(z) eta(z)^*, acting as x -> <x, eta(z)> xi(z);
/// coefficient k is sum_j xi_j (eta_{j-k})^*.
MatSymbol rank_one_symbol(const VecTrigPoly& xi, const VecTrigPoly& eta);

}  // namespace wedgeops

#endif
