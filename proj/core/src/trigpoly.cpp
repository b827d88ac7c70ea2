#include "wedgeops/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wedgeops/wedge.hpp"

namespace wedgeops {

namespace {

void require_same_valdim(const VecTrigPoly& f, const VecTrigPoly& g, const char* op) {
  if (f.valdim() != g.valdim()) {
    throw std::invalid_argument(std::string(op) + ": valdim mismatch");
  }
}

Complex unit_power(Complex z, int k) {
  // z^k on the circle, negative exponents as conjugate powers
  Complex base = (k >= 0) ? z : std::conj(z);
  Complex acc = 1.0;
  for (int i = 0; i < std::abs(k); ++i) acc *= base;
  return acc;
}

}  // namespace

VecTrigPoly::VecTrigPoly(int valdim, int kmin, std::vector<Vec> coeffs)
    : valdim_(valdim), kmin_(kmin), coeffs_(std::move(coeffs)) {
  if (valdim_ < 0) throw std::invalid_argument("VecTrigPoly: valdim must be nonnegative");
  if (coeffs_.empty()) throw std::invalid_argument("VecTrigPoly: at least one coefficient required");
  for (const Vec& c : coeffs_) {
    if (c.size() != valdim_) throw std::invalid_argument("VecTrigPoly: coefficient length mismatch");
  }
}

VecTrigPoly VecTrigPoly::zero(int valdim) {
  return VecTrigPoly(valdim, 0, {Vec::Zero(valdim)});
}

VecTrigPoly VecTrigPoly::constant(const Vec& value) {
  return VecTrigPoly(static_cast<int>(value.size()), 0, {value});
}

VecTrigPoly VecTrigPoly::basis(int valdim, int k, int i) {
  if (i < 0 || i >= valdim) throw std::invalid_argument("VecTrigPoly::basis: component out of range");
  Vec c = Vec::Zero(valdim);
  c[i] = 1.0;
  return VecTrigPoly(valdim, k, {c});
}

Vec VecTrigPoly::coeff(int k) const {
  if (k < kmin() || k > kmax()) return Vec::Zero(valdim_);
  return coeffs_[k - kmin_];
}

bool VecTrigPoly::is_analytic(double tol) const {
  for (int k = kmin(); k < 0 && k <= kmax(); ++k) {
    if (coeffs_[k - kmin_].norm() > tol) return false;
  }
  return true;
}

VecTrigPoly VecTrigPoly::trimmed(double tol) const {
  int lo = 0;
  int hi = length() - 1;
  while (lo < hi && coeffs_[lo].norm() <= tol) ++lo;
  while (hi > lo && coeffs_[hi].norm() <= tol) --hi;
  if (lo == hi && coeffs_[lo].norm() <= tol) return zero(valdim_);
  return VecTrigPoly(valdim_, kmin_ + lo,
                     std::vector<Vec>(coeffs_.begin() + lo, coeffs_.begin() + hi + 1));
}

VecTrigPoly VecTrigPoly::shifted(int k) const {
  return VecTrigPoly(valdim_, kmin_ + k, coeffs_);
}

double VecTrigPoly::l2_norm() const {
  double acc = 0.0;
  for (const Vec& c : coeffs_) acc += c.squaredNorm();
  return std::sqrt(acc);
}

VecTrigPoly VecTrigPoly::operator+(const VecTrigPoly& rhs) const {
  require_same_valdim(*this, rhs, "VecTrigPoly::operator+");
  const int lo = std::min(kmin(), rhs.kmin());
  const int hi = std::max(kmax(), rhs.kmax());
  std::vector<Vec> coeffs(hi - lo + 1, Vec::Zero(valdim_));
  for (int k = lo; k <= hi; ++k) coeffs[k - lo] = coeff(k) + rhs.coeff(k);
  return VecTrigPoly(valdim_, lo, std::move(coeffs));
}

VecTrigPoly VecTrigPoly::operator-(const VecTrigPoly& rhs) const {
  return *this + rhs * Complex(-1.0, 0.0);
}

VecTrigPoly VecTrigPoly::operator*(Complex scalar) const {
  std::vector<Vec> coeffs = coeffs_;
  for (Vec& c : coeffs) c *= scalar;
  return VecTrigPoly(valdim_, kmin_, std::move(coeffs));
}

Complex l2_inner(const VecTrigPoly& f, const VecTrigPoly& g) {
  require_same_valdim(f, g, "l2_inner");
  const int lo = std::max(f.kmin(), g.kmin());
  const int hi = std::min(f.kmax(), g.kmax());
  Complex acc = 0.0;
  for (int k = lo; k <= hi; ++k) acc += inner(f.coeff(k), g.coeff(k));
  return acc;
}

Vec eval(const VecTrigPoly& f, Complex z) {
  const double r = std::abs(z);
  const bool on_circle = std::abs(r - 1.0) <= 1e-9;
  if (!on_circle) {
    if (r > 1.0) throw std::domain_error("eval: |z| > 1 is outside the domain");
    if (!f.is_analytic(0.0)) {
      throw std::domain_error("eval: point inside the disc requires an analytic series");
    }
  }
  // inside the disc the negative coefficients are exactly zero, skip them
  const int start = on_circle ? f.kmin() : std::max(f.kmin(), 0);
  Vec acc = Vec::Zero(f.valdim());
  for (int k = start; k <= f.kmax(); ++k) {
    acc += f.coeff(k) * unit_power(z, k);
  }
  return acc;
}

VecTrigPoly riesz_project(const VecTrigPoly& f) {
  if (f.kmax() < 0) return VecTrigPoly::zero(f.valdim());
  const int lo = std::max(0, f.kmin());
  std::vector<Vec> coeffs;
  coeffs.reserve(f.kmax() - lo + 1);
  for (int k = lo; k <= f.kmax(); ++k) coeffs.push_back(f.coeff(k));
  return VecTrigPoly(f.valdim(), lo, std::move(coeffs));
}

VecTrigPoly derivative(const VecTrigPoly& f) {
  if (!f.is_analytic(0.0)) {
    throw std::domain_error("derivative: series has negative frequencies");
  }
  const VecTrigPoly g = riesz_project(f);  // drop the exactly-zero negative part
  if (g.kmax() == 0) return VecTrigPoly::zero(f.valdim());
  std::vector<Vec> coeffs;
  coeffs.reserve(g.kmax());
  for (int k = 0; k <= g.kmax() - 1; ++k) coeffs.push_back(double(k + 1) * g.coeff(k + 1));
  return VecTrigPoly(f.valdim(), 0, std::move(coeffs));
}

VecTrigPoly scalar_pair(const VecTrigPoly& f, const VecTrigPoly& g) {
  require_same_valdim(f, g, "scalar_pair");
  const int lo = f.kmin() - g.kmax();
  const int hi = f.kmax() - g.kmin();
  std::vector<Vec> coeffs(hi - lo + 1, Vec::Zero(1));
  for (int a = f.kmin(); a <= f.kmax(); ++a) {
    for (int b = g.kmin(); b <= g.kmax(); ++b) {
      coeffs[a - b - lo][0] += inner(f.coeff(a), g.coeff(b));
    }
  }
  return VecTrigPoly(1, lo, std::move(coeffs));
}

VecTrigPoly scalar_multiply(const VecTrigPoly& scalar, const VecTrigPoly& f) {
  if (scalar.valdim() != 1) throw std::invalid_argument("scalar_multiply: first factor must be scalar");
  const int lo = scalar.kmin() + f.kmin();
  const int hi = scalar.kmax() + f.kmax();
  std::vector<Vec> coeffs(hi - lo + 1, Vec::Zero(f.valdim()));
  for (int a = scalar.kmin(); a <= scalar.kmax(); ++a) {
    for (int b = f.kmin(); b <= f.kmax(); ++b) {
      coeffs[a + b - lo] += scalar.coeff(a)[0] * f.coeff(b);
    }
  }
  return VecTrigPoly(f.valdim(), lo, std::move(coeffs));
}

VecTrigPoly pointwise_wedge(const std::vector<VecTrigPoly>& fs) {
  if (fs.empty()) throw std::invalid_argument("pointwise_wedge: no factors");
  const int d = fs.front().valdim();
  for (const VecTrigPoly& f : fs) {
    if (f.valdim() != d) throw std::invalid_argument("pointwise_wedge: valdim mismatch");
  }
  const int n = static_cast<int>(fs.size());
  const int out_dim = static_cast<int>(binomial(d, n));
  int lo = 0;
  int hi = 0;
  for (const VecTrigPoly& f : fs) {
    lo += f.kmin();
    hi += f.kmax();
  }
  std::vector<Vec> coeffs(hi - lo + 1, Vec::Zero(out_dim));
  if (out_dim > 0) {
    std::vector<int> pick(n, 0);  // offset into each factor's coefficient list
    std::vector<Vec> factors(n);
    while (true) {
      int k = lo;
      for (int j = 0; j < n; ++j) {
        factors[j] = fs[j].coeffs()[pick[j]];
        k += pick[j];
      }
      coeffs[k - lo] += wedge(factors).coords();
      int j = n - 1;
      while (j >= 0 && ++pick[j] == fs[j].length()) pick[j--] = 0;
      if (j < 0) break;
    }
  }
  return VecTrigPoly(out_dim, lo, std::move(coeffs));
}

double lp_norm(const VecTrigPoly& f, Lp p, int samples) {
  if (p == Lp::Two) return f.l2_norm();
  const int min_samples = 8 * f.length();
  if (samples == 0) samples = min_samples;
  if (samples < min_samples) {
    throw std::invalid_argument("lp_norm: need at least 8 samples per stored coefficient (" +
                                std::to_string(min_samples) + " here)");
  }
  double acc = 0.0;
  double peak = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / samples;
    const double value = eval(f, std::polar(1.0, theta)).norm();
    acc += value;
    peak = std::max(peak, value);
  }
  return (p == Lp::One) ? acc / samples : peak;
}

VecTrigPoly truncated(const VecTrigPoly& f, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("truncated: empty window");
  std::vector<Vec> coeffs;
  coeffs.reserve(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) coeffs.push_back(f.coeff(k));
  return VecTrigPoly(f.valdim(), lo, std::move(coeffs));
}

VecTrigPoly autocorrelation(const VecTrigPoly& f) {
  return scalar_pair(f, f);
}

bool is_inner(const VecTrigPoly& xi, double tol) {
  const VecTrigPoly t = xi.trimmed();
  if (t.kmin() < 0) return false;
  const VecTrigPoly ac = autocorrelation(t);
  for (int k = ac.kmin(); k <= ac.kmax(); ++k) {
    const Complex expected = (k == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    if (std::abs(ac.coeff(k)[0] - expected) > tol) return false;
  }
  return true;
}

MatSymbol::MatSymbol(int rows, int cols, int kmin, std::vector<Mat> coeffs)
    : rows_(rows), cols_(cols), kmin_(kmin), coeffs_(std::move(coeffs)) {
  if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("MatSymbol: rows/cols must be positive");
  if (coeffs_.empty()) throw std::invalid_argument("MatSymbol: at least one coefficient required");
  for (const Mat& c : coeffs_) {
    if (c.rows() != rows_ || c.cols() != cols_) {
      throw std::invalid_argument("MatSymbol: coefficient shape mismatch");
    }
  }
}

MatSymbol MatSymbol::zero(int rows, int cols) {
  return MatSymbol(rows, cols, 0, {Mat::Zero(rows, cols)});
}

MatSymbol MatSymbol::constant(const Mat& value) {
  return MatSymbol(static_cast<int>(value.rows()), static_cast<int>(value.cols()), 0, {value});
}

Mat MatSymbol::coeff(int k) const {
  if (k < kmin() || k > kmax()) return Mat::Zero(rows_, cols_);
  return coeffs_[k - kmin_];
}

MatSymbol MatSymbol::adjoint() const {
  const int lo = -kmax();
  std::vector<Mat> coeffs;
  coeffs.reserve(coeffs_.size());
  for (int k = lo; k <= -kmin(); ++k) coeffs.push_back(coeff(-k).adjoint());
  return MatSymbol(cols_, rows_, lo, std::move(coeffs));
}

Mat MatSymbol::eval(Complex z) const {
  Mat acc = Mat::Zero(rows_, cols_);
  for (int k = kmin(); k <= kmax(); ++k) acc += coeff(k) * unit_power(z, k);
  return acc;
}

MatSymbol MatSymbol::operator+(const MatSymbol& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("MatSymbol::operator+: shape mismatch");
  }
  const int lo = std::min(kmin(), rhs.kmin());
  const int hi = std::max(kmax(), rhs.kmax());
  std::vector<Mat> coeffs;
  coeffs.reserve(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) coeffs.push_back(coeff(k) + rhs.coeff(k));
  return MatSymbol(rows_, cols_, lo, std::move(coeffs));
}

MatSymbol MatSymbol::operator-(const MatSymbol& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("MatSymbol::operator-: shape mismatch");
  }
  const int lo = std::min(kmin(), rhs.kmin());
  const int hi = std::max(kmax(), rhs.kmax());
  std::vector<Mat> coeffs;
  coeffs.reserve(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) coeffs.push_back(coeff(k) - rhs.coeff(k));
  return MatSymbol(rows_, cols_, lo, std::move(coeffs));
}

VecTrigPoly apply_symbol(const MatSymbol& g, const VecTrigPoly& h) {
  if (g.cols() != h.valdim()) throw std::invalid_argument("apply_symbol: shape mismatch");
  const int lo = g.kmin() + h.kmin();
  const int hi = g.kmax() + h.kmax();
  std::vector<Vec> coeffs(hi - lo + 1, Vec::Zero(g.rows()));
  for (int a = g.kmin(); a <= g.kmax(); ++a) {
    for (int b = h.kmin(); b <= h.kmax(); ++b) {
      coeffs[a + b - lo] += g.coeff(a) * h.coeff(b);
    }
  }
  return VecTrigPoly(g.rows(), lo, std::move(coeffs));
}

MatSymbol rank_one_symbol(const VecTrigPoly& xi, const VecTrigPoly& eta) {
  if (xi.valdim() != eta.valdim()) throw std::invalid_argument("rank_one_symbol: valdim mismatch");
  const int lo = xi.kmin() - eta.kmax();
  const int hi = xi.kmax() - eta.kmin();
  std::vector<Mat> coeffs(hi - lo + 1, Mat::Zero(xi.valdim(), eta.valdim()));
  for (int a = xi.kmin(); a <= xi.kmax(); ++a) {
    for (int b = eta.kmin(); b <= eta.kmax(); ++b) {
      coeffs[a - b - lo] += xi.coeff(a) * eta.coeff(b).adjoint();
    }
  }
  return MatSymbol(xi.valdim(), eta.valdim(), lo, std::move(coeffs));
}

}  // namespace wedgeops
