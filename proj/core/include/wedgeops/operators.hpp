#ifndef WEDGEOPS_OPERATORS_HPP
#define WEDGEOPS_OPERATORS_HPP

#include <cstdint>
#include <vector>

#include "wedgeops/trigpoly.hpp"
#include "wedgeops/wedge.hpp"

namespace wedgeops {

/// Coefficient basis of a truncated analytic space: valdim components per
/// degree 0..degree, enumerated degree-major, so basis index k * valdim + i
/// is z^k e_i. The grade records which wedge power the values live in.
struct SpaceDescriptor {
  int valdim = 0;
  int grade = 1;
  int degree = 0;

  int dimension() const { return valdim * (degree + 1); }
  bool operator==(const SpaceDescriptor&) const = default;
};

/// Coefficients of an analytic series in the canonical basis of `space`.
/// Requires matching valdim, an analytic series, and degree within bounds.
Vec embed(const VecTrigPoly& f, const SpaceDescriptor& space);

/// Inverse of `embed` (the series with those coefficients).
VecTrigPoly extract(const Vec& coords, const SpaceDescriptor& space);

/// Dense matrix between canonical coefficient bases. Because those bases
/// are orthonormal, the adjoint is the conjugate transpose with the
/// descriptors swapped.
class OperatorMatrix {
 public:
  OperatorMatrix(SpaceDescriptor domain, SpaceDescriptor codomain, Mat entries);

  static OperatorMatrix identity(const SpaceDescriptor& space);
  static OperatorMatrix zero(const SpaceDescriptor& domain, const SpaceDescriptor& codomain);

  const SpaceDescriptor& domain() const { return domain_; }
  const SpaceDescriptor& codomain() const { return codomain_; }
  const Mat& entries() const { return entries_; }

  OperatorMatrix adjoint() const;

  Vec apply(const Vec& coords) const;
  VecTrigPoly apply(const VecTrigPoly& f) const;

  /// Composition; requires rhs.codomain == this->domain.
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;
  OperatorMatrix operator+(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-(const OperatorMatrix& rhs) const;

 private:
  SpaceDescriptor domain_;
  SpaceDescriptor codomain_;
  Mat entries_;
};

double max_abs(const Mat& m);

/// Largest singular value (zero for an empty matrix).
double operator_norm(const Mat& m);

/// Compression of h -> P_+(G h) to degree-N analytic spaces on both sides:
/// block Toeplitz with block (r, c) = G_{r-c}.
OperatorMatrix toeplitz(const MatSymbol& g, int degree);

/// The creation operator h -> xi ^. h as an exact matrix from degree N to
/// degree N + deg(xi); no truncation happens on the codomain side, which is
/// what makes the adjoint identities below exact.
OperatorMatrix creation(const VecTrigPoly& xi, int degree);

/// Max-abs deviation of adjoint(C) * C from I - T_{xi xi^*} on the degree-N
/// space. Requires an inner symbol; the identity then holds to rounding.
double verify_toeplitz_identity(const VecTrigPoly& xi, int degree);

/// The compressed adjoint applied to f ^. g, computed by coefficient
/// convolutions: P_+ of alpha(z) = <f(z), xi(z)> g(z) - <g(z), xi(z)> f(z),
/// restricted to degrees 0..N. Equals adjoint(creation(xi, N)) applied to
/// the coefficients of f ^. g whenever f ^. g fits that operator's codomain.
VecTrigPoly adjoint_on_wedge(const VecTrigPoly& xi, const VecTrigPoly& f, const VecTrigPoly& g,
                             int degree);

struct PocResult {
  std::vector<VecTrigPoly> basis;  // orthonormal in L^2
  bool degenerate = false;         // some symbol was identically zero
  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Orthonormal basis of the pointwise orthogonal complement of the symbols
/// inside the degree-N analytic space: the nullspace of the map sending h
/// to every Fourier coefficient of every z -> <h(z), xi_i(z)>. Singular
/// values below tol * sigma_max count as zero. An empty symbol list or
/// all-zero symbols yield the full space (the latter flagged degenerate).
PocResult poc_basis(const std::vector<VecTrigPoly>& xis, int dim, int degree, double tol = 1e-10);

/// Orthonormal basis of ker creation(xi, N). Members are pointwise parallel
/// to xi wherever xi does not vanish.
std::vector<VecTrigPoly> kernel_creation(const VecTrigPoly& xi, int degree, double tol = 1e-10);

struct IsometryReport {
  int poc_trials = 0;
  int general_trials = 0;
  int poc_dimension = 0;
  double max_equality_deviation = 0.0;  // over samples from the Poc span
  double min_margin = 0.0;              // over general samples, |h| - |C h|
  int misclassified = 0;
  std::uint64_t seed = 0;
};

/// Samples the norm dichotomy for an inner symbol: equality of |C_xi h| and
/// |h| on the computed Poc span, strict contraction off it.
IsometryReport isometry_set_check(const VecTrigPoly& xi, int degree, int trials,
                                  std::uint64_t seed);

/// Same dichotomy for the multi-factor wedge with a pointwise orthonormal
/// family. Throws std::invalid_argument (with the deviation) when the
/// family fails the exact coefficient criterion for pointwise
/// orthonormality.
IsometryReport multiwedge_isometry_check(const std::vector<VecTrigPoly>& xis, int degree,
                                         int trials, std::uint64_t seed);

struct ShiftFormulaReport {
  int degree = 0;
  /// adjoint(C) * C against the shift-block matrix, columns of degree <= N-1.
  double formula_deviation = 0.0;
  /// Its square against the shifted-block matrix with the rank-one dent.
  double square_formula_deviation = 0.0;
  /// Largest singular value of A^2 - A on that column range; 1/4 exactly,
  /// which is what rules out a partial isometry.
  double projection_defect = 0.0;
  double selfadjoint_deviation = 0.0;
  double eigenvalue_min = 0.0;
  double eigenvalue_max = 0.0;
  /// (A^2 - A) applied to the constant (0, 1) against the constant (0, -1/4).
  double constant_entry_deviation = 0.0;
};

/// The worked counterexample for xi = (1, z)/sqrt(2): builds A = C* C on the
/// degree-N space and measures it against the closed-form shift matrices on
/// the degree <= N-1 columns, where truncation effects vanish identically.
ShiftFormulaReport partial_isometry_counterexample(int degree);

}  // namespace wedgeops

#endif
