#include "wedgeops/operators.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "wedgeops/random.hpp"

namespace wedgeops {

namespace {

void require_analytic(const VecTrigPoly& f, const char* op) {
  if (!f.is_analytic(0.0)) {
    throw std::domain_error(std::string(op) + ": series has negative frequencies");
  }
}

/// Orthonormal basis of the nullspace of `m` (as a map out of an n-dim
/// space), with singular values below tol * sigma_max counted as zero.
std::vector<Vec> nullspace(const Mat& m, double tol) {
  const int n = static_cast<int>(m.cols());
  std::vector<Vec> out;
  if (m.rows() == 0 || m.norm() == 0.0) {
    for (int j = 0; j < n; ++j) out.push_back(Vec::Unit(n, j));
    return out;
  }
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff = tol * sigma(0);
  int rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  for (int j = rank; j < n; ++j) out.push_back(svd.matrixV().col(j));
  return out;
}

double pointwise_orthonormality_deviation(const std::vector<VecTrigPoly>& xis) {
  double dev = 0.0;
  for (std::size_t i = 0; i < xis.size(); ++i) {
    for (std::size_t l = 0; l <= i; ++l) {
      const VecTrigPoly s = scalar_pair(xis[i], xis[l]);
      for (int k = s.kmin(); k <= s.kmax(); ++k) {
        const Complex expected = (i == l && k == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        dev = std::max(dev, std::abs(s.coeff(k)[0] - expected));
      }
    }
  }
  return dev;
}

VecTrigPoly random_span_element(Rng& rng, const std::vector<VecTrigPoly>& basis) {
  VecTrigPoly h = basis.front() * rng.complex_gaussian();
  for (std::size_t b = 1; b < basis.size(); ++b) h = h + basis[b] * rng.complex_gaussian();
  return h;
}

}  // namespace

Vec embed(const VecTrigPoly& f, const SpaceDescriptor& space) {
  if (f.valdim() != space.valdim) throw std::invalid_argument("embed: valdim mismatch");
  const VecTrigPoly t = f.trimmed(0.0);
  require_analytic(t, "embed");
  if (t.kmax() > space.degree && t.l2_norm() > 0.0) {
    throw std::invalid_argument("embed: series degree exceeds the space");
  }
  Vec coords = Vec::Zero(space.dimension());
  for (int k = std::max(0, t.kmin()); k <= std::min(t.kmax(), space.degree); ++k) {
    coords.segment(k * space.valdim, space.valdim) = t.coeff(k);
  }
  return coords;
}

VecTrigPoly extract(const Vec& coords, const SpaceDescriptor& space) {
  if (coords.size() != space.dimension()) throw std::invalid_argument("extract: length mismatch");
  if (space.valdim == 0) return VecTrigPoly::zero(0);
  std::vector<Vec> coeffs;
  coeffs.reserve(space.degree + 1);
  for (int k = 0; k <= space.degree; ++k) {
    coeffs.push_back(coords.segment(k * space.valdim, space.valdim));
  }
  return VecTrigPoly(space.valdim, 0, std::move(coeffs));
}

OperatorMatrix::OperatorMatrix(SpaceDescriptor domain, SpaceDescriptor codomain, Mat entries)
    : domain_(domain), codomain_(codomain), entries_(std::move(entries)) {
  if (entries_.rows() != codomain_.dimension() || entries_.cols() != domain_.dimension()) {
    throw std::invalid_argument("OperatorMatrix: entry shape does not match the descriptors");
  }
}

OperatorMatrix OperatorMatrix::identity(const SpaceDescriptor& space) {
  return OperatorMatrix(space, space, Mat::Identity(space.dimension(), space.dimension()));
}

OperatorMatrix OperatorMatrix::zero(const SpaceDescriptor& domain, const SpaceDescriptor& codomain) {
  return OperatorMatrix(domain, codomain, Mat::Zero(codomain.dimension(), domain.dimension()));
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return OperatorMatrix(codomain_, domain_, entries_.adjoint());
}

Vec OperatorMatrix::apply(const Vec& coords) const {
  if (coords.size() != domain_.dimension()) throw std::invalid_argument("OperatorMatrix::apply: length mismatch");
  return entries_ * coords;
}

VecTrigPoly OperatorMatrix::apply(const VecTrigPoly& f) const {
  return extract(apply(embed(f, domain_)), codomain_);
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  if (!(rhs.codomain_ == domain_)) throw std::invalid_argument("OperatorMatrix::operator*: spaces do not compose");
  return OperatorMatrix(rhs.domain_, codomain_, entries_ * rhs.entries_);
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const {
  if (!(rhs.domain_ == domain_ && rhs.codomain_ == codomain_)) {
    throw std::invalid_argument("OperatorMatrix::operator+: space mismatch");
  }
  return OperatorMatrix(domain_, codomain_, entries_ + rhs.entries_);
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& rhs) const {
  if (!(rhs.domain_ == domain_ && rhs.codomain_ == codomain_)) {
    throw std::invalid_argument("OperatorMatrix::operator-: space mismatch");
  }
  return OperatorMatrix(domain_, codomain_, entries_ - rhs.entries_);
}

double max_abs(const Mat& m) {
  return (m.size() == 0) ? 0.0 : m.cwiseAbs().maxCoeff();
}

double operator_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

OperatorMatrix toeplitz(const MatSymbol& g, int degree) {
  if (degree < 0) throw std::invalid_argument("toeplitz: degree must be nonnegative");
  const SpaceDescriptor domain{g.cols(), 1, degree};
  const SpaceDescriptor codomain{g.rows(), 1, degree};
  Mat entries = Mat::Zero(codomain.dimension(), domain.dimension());
  for (int r = 0; r <= degree; ++r) {
    for (int c = 0; c <= degree; ++c) {
      entries.block(r * g.rows(), c * g.cols(), g.rows(), g.cols()) = g.coeff(r - c);
    }
  }
  return OperatorMatrix(domain, codomain, std::move(entries));
}

OperatorMatrix creation(const VecTrigPoly& xi, int degree) {
  if (degree < 0) throw std::invalid_argument("creation: degree must be nonnegative");
  const VecTrigPoly t = xi.trimmed(0.0);
  require_analytic(t, "creation");
  const int d = xi.valdim();
  const SpaceDescriptor domain{d, 1, degree};
  const SpaceDescriptor codomain{static_cast<int>(binomial(d, 2)), 2, degree + t.kmax()};
  Mat entries = Mat::Zero(codomain.dimension(), domain.dimension());
  for (int k = 0; k <= degree; ++k) {
    for (int i = 0; i < d; ++i) {
      const VecTrigPoly column = pointwise_wedge({t, VecTrigPoly::basis(d, k, i)});
      entries.col(k * d + i) = embed(column, codomain);
    }
  }
  return OperatorMatrix(domain, codomain, std::move(entries));
}

double verify_toeplitz_identity(const VecTrigPoly& xi, int degree) {
  if (!is_inner(xi, 1e-10)) {
    throw std::invalid_argument("verify_toeplitz_identity: symbol is not inner");
  }
  const OperatorMatrix c = creation(xi, degree);
  const OperatorMatrix lhs = c.adjoint() * c;
  const OperatorMatrix t = toeplitz(rank_one_symbol(xi, xi), degree);
  const OperatorMatrix rhs = OperatorMatrix::identity(t.domain()) - t;
  return max_abs((lhs - rhs).entries());
}

VecTrigPoly adjoint_on_wedge(const VecTrigPoly& xi, const VecTrigPoly& f, const VecTrigPoly& g,
                             int degree) {
  if (xi.valdim() != f.valdim() || xi.valdim() != g.valdim()) {
    throw std::invalid_argument("adjoint_on_wedge: valdim mismatch");
  }
  const VecTrigPoly tf = f.trimmed(0.0);
  const VecTrigPoly tg = g.trimmed(0.0);
  require_analytic(tf, "adjoint_on_wedge");
  require_analytic(tg, "adjoint_on_wedge");
  const int xi_degree = xi.trimmed(0.0).kmax();
  if (tf.kmax() + tg.kmax() > degree + xi_degree) {
    throw std::invalid_argument("adjoint_on_wedge: f ^. g does not fit the creation codomain");
  }
  const VecTrigPoly alpha =
      scalar_multiply(scalar_pair(tf, xi), tg) - scalar_multiply(scalar_pair(tg, xi), tf);
  return truncated(riesz_project(alpha), 0, degree);
}

PocResult poc_basis(const std::vector<VecTrigPoly>& xis, int dim, int degree, double tol) {
  if (dim < 1 || degree < 0) throw std::invalid_argument("poc_basis: bad space parameters");
  const SpaceDescriptor space{dim, 1, degree};
  PocResult result;

  std::vector<VecTrigPoly> trimmed_xis;
  for (const VecTrigPoly& xi : xis) {
    if (xi.valdim() != dim) throw std::invalid_argument("poc_basis: valdim mismatch");
    const VecTrigPoly t = xi.trimmed(0.0);
    require_analytic(t, "poc_basis");
    if (t.l2_norm() == 0.0) {
      result.degenerate = true;  // contributes no constraint
    } else {
      trimmed_xis.push_back(t);
    }
  }

  // Rows: every Fourier coefficient of z -> <h(z), xi(z)>, for each symbol.
  int rows = 0;
  for (const VecTrigPoly& t : trimmed_xis) rows += (degree - t.kmin()) - (0 - t.kmax()) + 1;
  Mat constraint = Mat::Zero(rows, space.dimension());
  int row = 0;
  for (const VecTrigPoly& t : trimmed_xis) {
    for (int freq = -t.kmax(); freq <= degree - t.kmin(); ++freq, ++row) {
      for (int k = 0; k <= degree; ++k) {
        const Vec c = t.coeff(k - freq);
        for (int i = 0; i < dim; ++i) constraint(row, k * dim + i) = std::conj(c[i]);
      }
    }
  }

  for (const Vec& v : nullspace(constraint, tol)) result.basis.push_back(extract(v, space));
  return result;
}

std::vector<VecTrigPoly> kernel_creation(const VecTrigPoly& xi, int degree, double tol) {
  const OperatorMatrix c = creation(xi, degree);
  std::vector<VecTrigPoly> out;
  for (const Vec& v : nullspace(c.entries(), tol)) out.push_back(extract(v, c.domain()));
  return out;
}

IsometryReport isometry_set_check(const VecTrigPoly& xi, int degree, int trials,
                                  std::uint64_t seed) {
  if (!is_inner(xi, 1e-10)) {
    throw std::invalid_argument("isometry_set_check: symbol is not inner");
  }
  if (trials < 1) throw std::invalid_argument("isometry_set_check: trials must be positive");
  const int d = xi.valdim();
  const OperatorMatrix c = creation(xi, degree);
  const PocResult poc = poc_basis({xi}, d, degree);

  IsometryReport report;
  report.seed = seed;
  report.poc_dimension = poc.dimension();
  report.min_margin = std::numeric_limits<double>::infinity();
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const bool from_poc = (t % 2 == 0) && poc.dimension() > 0;
    VecTrigPoly h = from_poc ? random_span_element(rng, poc.basis)
                             : random_trig_poly(rng, d, 0, degree);
    h = h * Complex(1.0 / h.l2_norm(), 0.0);
    const double image_norm = c.apply(embed(h, c.domain())).norm();
    if (from_poc) {
      ++report.poc_trials;
      const double deviation = std::abs(image_norm - 1.0);
      report.max_equality_deviation = std::max(report.max_equality_deviation, deviation);
      if (deviation > 1e-10) ++report.misclassified;
    } else {
      ++report.general_trials;
      const double pairing = scalar_pair(h, xi).l2_norm();
      const double margin = 1.0 - image_norm;
      if (pairing > 1e-4) {
        // well away from the complement: the contraction must be strict
        report.min_margin = std::min(report.min_margin, margin);
        if (margin <= 1e-10) ++report.misclassified;
      } else if (pairing <= 1e-10) {
        // numerically in the complement: the norms must agree
        if (std::abs(margin) > 1e-10) ++report.misclassified;
      } else if (margin < -1e-10) {
        ++report.misclassified;  // gray zone: still never expanding
      }
    }
  }
  if (!std::isfinite(report.min_margin)) report.min_margin = 0.0;
  return report;
}

IsometryReport multiwedge_isometry_check(const std::vector<VecTrigPoly>& xis, int degree,
                                         int trials, std::uint64_t seed) {
  if (xis.empty()) throw std::invalid_argument("multiwedge_isometry_check: empty family");
  if (trials < 1) throw std::invalid_argument("multiwedge_isometry_check: trials must be positive");
  const int d = xis.front().valdim();
  const double deviation = pointwise_orthonormality_deviation(xis);
  if (deviation > 1e-10) {
    std::ostringstream msg;
    msg << "multiwedge_isometry_check: family is not pointwise orthonormal (deviation " << deviation
        << ")";
    throw std::invalid_argument(msg.str());
  }
  const PocResult poc = poc_basis(xis, d, degree);

  IsometryReport report;
  report.seed = seed;
  report.poc_dimension = poc.dimension();
  report.min_margin = std::numeric_limits<double>::infinity();
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const bool from_poc = (t % 2 == 0) && poc.dimension() > 0;
    VecTrigPoly f = from_poc ? random_span_element(rng, poc.basis)
                             : random_trig_poly(rng, d, 0, degree);
    f = f * Complex(1.0 / f.l2_norm(), 0.0);
    std::vector<VecTrigPoly> factors = xis;
    factors.push_back(f);
    const double image_norm = pointwise_wedge(factors).l2_norm();
    if (from_poc) {
      ++report.poc_trials;
      const double dev = std::abs(image_norm - 1.0);
      report.max_equality_deviation = std::max(report.max_equality_deviation, dev);
      if (dev > 1e-10) ++report.misclassified;
    } else {
      ++report.general_trials;
      const double margin = 1.0 - image_norm;
      report.min_margin = std::min(report.min_margin, margin);
      if (margin < -1e-10) ++report.misclassified;  // contraction must hold
    }
  }
  if (!std::isfinite(report.min_margin)) report.min_margin = 0.0;
  return report;
}

ShiftFormulaReport partial_isometry_counterexample(int degree) {
  if (degree < 2) throw std::invalid_argument("partial_isometry_counterexample: degree must be >= 2");
  const double s = 1.0 / std::sqrt(2.0);
  Vec c0 = Vec::Zero(2);
  Vec c1 = Vec::Zero(2);
  c0[0] = s;
  c1[1] = s;
  const VecTrigPoly xi(2, 0, {c0, c1});

  const OperatorMatrix c = creation(xi, degree);
  const Mat a = (c.adjoint() * c).entries();
  const int n = degree;

  // Closed-form comparison matrices on the degree-N space, in the basis
  // ordering (degree, component): 0.5 * [[1, -S*], [-S, 1]] and its square,
  // which dents the bottom-right block by -0.25 P_0.
  const int dim = 2 * (degree + 1);
  Mat b = Mat::Zero(dim, dim);
  for (int r = 0; r <= degree; ++r) {
    b(2 * r, 2 * r) = 0.5;
    b(2 * r + 1, 2 * r + 1) = 0.5;
    if (r + 1 <= degree) b(2 * r, 2 * (r + 1) + 1) = -0.5;  // -S* on component 2
    if (r - 1 >= 0) b(2 * r + 1, 2 * (r - 1)) = -0.5;       // -S on component 1
  }
  Mat b_square = b;
  b_square(1, 1) -= 0.25;

  const int restricted = 2 * n;  // columns of degree <= N-1
  ShiftFormulaReport report;
  report.degree = degree;
  report.formula_deviation = max_abs(a.leftCols(restricted) - b.leftCols(restricted));
  const Mat a2 = a * a;
  report.square_formula_deviation = max_abs(a2.leftCols(restricted) - b_square.leftCols(restricted));
  report.projection_defect = operator_norm((a2 - a).leftCols(restricted));
  report.selfadjoint_deviation = max_abs(a - a.adjoint().eval());

  Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (a + a.adjoint()));
  report.eigenvalue_min = eig.eigenvalues().minCoeff();
  report.eigenvalue_max = eig.eigenvalues().maxCoeff();

  Vec h = Vec::Zero(dim);
  h[1] = 1.0;  // the constant (0, 1)
  Vec expected = Vec::Zero(dim);
  expected[1] = -0.25;
  report.constant_entry_deviation = ((a2 - a) * h - expected).cwiseAbs().maxCoeff();
  return report;
}

}  // namespace wedgeops
