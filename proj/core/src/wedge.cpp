#include "wedgeops/wedge.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wedgeops {

namespace {

void require_same_shape(const WedgeVector& a, const WedgeVector& b, const char* op) {
  if (a.dim() != b.dim() || a.grade() != b.grade()) {
    throw std::invalid_argument(std::string(op) + ": dim/grade mismatch");
  }
}

Mat column_matrix(const std::vector<Vec>& factors) {
  if (factors.empty()) throw std::invalid_argument("wedge: no factors");
  const int d = static_cast<int>(factors.front().size());
  Mat m(d, static_cast<int>(factors.size()));
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (factors[j].size() != d) throw std::invalid_argument("wedge: factor length mismatch");
    m.col(static_cast<int>(j)) = factors[j];
  }
  return m;
}

}  // namespace

WedgeVector::WedgeVector(int dim, int grade)
    : dim_(dim), grade_(grade), coords_(Vec::Zero(binomial(dim, grade))) {
  if (dim < 1 || grade < 1) throw std::invalid_argument("WedgeVector: dim and grade must be positive");
}

WedgeVector::WedgeVector(int dim, int grade, Vec coords) : WedgeVector(dim, grade) {
  if (coords.size() != binomial(dim, grade)) {
    throw std::invalid_argument("WedgeVector: coords length must be C(dim, grade)");
  }
  coords_ = std::move(coords);
}

WedgeVector WedgeVector::operator+(const WedgeVector& rhs) const {
  require_same_shape(*this, rhs, "WedgeVector::operator+");
  return WedgeVector(dim_, grade_, coords_ + rhs.coords_);
}

WedgeVector WedgeVector::operator-(const WedgeVector& rhs) const {
  require_same_shape(*this, rhs, "WedgeVector::operator-");
  return WedgeVector(dim_, grade_, coords_ - rhs.coords_);
}

WedgeVector WedgeVector::operator*(Complex scalar) const {
  return WedgeVector(dim_, grade_, coords_ * scalar);
}

WedgeVector wedge(const std::vector<Vec>& factors) {
  const Mat m = column_matrix(factors);
  const int d = static_cast<int>(m.rows());
  const int p = static_cast<int>(m.cols());
  WedgeVector out(d, p);
  if (p > d) return out;  // zero element of the trivial space
  const auto indices = enumerate_multi_indices(d, p);
  Mat minor(p, p);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    for (int a = 0; a < p; ++a) minor.row(a) = m.row(indices[r].indices[a]);
    out.coords()[static_cast<Eigen::Index>(r)] = minor.determinant();
  }
  return out;
}

Complex gram_inner(const std::vector<Vec>& xs, const std::vector<Vec>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("gram_inner: grade mismatch");
  if (xs.empty()) throw std::invalid_argument("gram_inner: no factors");
  const int p = static_cast<int>(xs.size());
  const int d = static_cast<int>(xs.front().size());
  Mat gram(p, p);
  for (int i = 0; i < p; ++i) {
    if (xs[i].size() != d || ys[i].size() != d) {
      throw std::invalid_argument("gram_inner: factor length mismatch");
    }
    for (int j = 0; j < p; ++j) gram(i, j) = inner(xs[i], ys[j]);
  }
  return gram.determinant();
}

FullTensor to_full_tensor(const WedgeVector& w) {
  FullTensor out(w.dim(), w.grade());
  if (w.coords().size() == 0) return out;
  double factorial = 1.0;
  for (int k = 2; k <= w.grade(); ++k) factorial *= k;
  const auto indices = enumerate_multi_indices(w.dim(), w.grade());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    const Complex c = w.coords()[static_cast<Eigen::Index>(r)] / factorial;
    if (c == Complex(0.0, 0.0)) continue;
    std::vector<int> tuple = indices[r].indices;
    std::sort(tuple.begin(), tuple.end());
    do {
      out.set(tuple, c * static_cast<double>(sort_signature(tuple)));
    } while (std::next_permutation(tuple.begin(), tuple.end()));
  }
  return out;
}

WedgeVector wedge_from_tensor(const FullTensor& u) {
  WedgeVector out(u.dim(), u.grade());
  if (out.coords().size() == 0) return out;
  const auto indices = enumerate_multi_indices(u.dim(), u.grade());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    std::vector<int> tuple = indices[r].indices;
    std::sort(tuple.begin(), tuple.end());
    Complex acc = 0.0;
    do {
      acc += static_cast<double>(sort_signature(tuple)) * u.at(tuple);
    } while (std::next_permutation(tuple.begin(), tuple.end()));
    out.coords()[static_cast<Eigen::Index>(r)] = acc;
  }
  return out;
}

std::pair<double, double> residual_norm_check(const std::vector<Vec>& us, const Vec& x,
                                              double ortho_tol) {
  if (us.empty()) throw std::invalid_argument("residual_norm_check: need at least one u");
  const int d = static_cast<int>(x.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (us[i].size() != d) throw std::invalid_argument("residual_norm_check: length mismatch");
    for (std::size_t k = 0; k < us.size(); ++k) {
      const Complex g = inner(us[i], us[k]);
      const double expected = (i == k) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(g - expected));
    }
  }
  if (worst > ortho_tol) {
    std::ostringstream msg;
    msg << "residual_norm_check: input set is not orthonormal (max Gram deviation " << worst << ")";
    throw std::invalid_argument(msg.str());
  }

  std::vector<Vec> factors = us;
  factors.push_back(x);
  const double lhs = wedge(factors).norm();

  Vec residual = x;
  for (const Vec& u : us) residual -= inner(x, u) * u;
  return {lhs, residual.norm()};
}

bool hadamard_check(const Mat& a, double slack) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hadamard_check: matrix must be square");
  const double det = std::abs(a.determinant());
  double col_bound = 1.0;
  double row_bound = 1.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) col_bound *= a.col(j).norm();
  for (Eigen::Index i = 0; i < a.rows(); ++i) row_bound *= a.row(i).norm();
  return det <= col_bound + slack && det <= row_bound + slack;
}

}  // namespace wedgeops
