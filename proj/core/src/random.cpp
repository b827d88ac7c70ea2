#include "wedgeops/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wedgeops {

std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

double Rng::gaussian() {
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_gaussian() {
  return Complex(gaussian(), gaussian()) / std::sqrt(2.0);
}

Vec random_vector(Rng& rng, int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.complex_gaussian();
  return v;
}

Mat random_matrix(Rng& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = rng.complex_gaussian();
  }
  return m;
}

Mat random_unitary(Rng& rng, int dim) {
  const Mat g = random_matrix(rng, dim, dim);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= (mag > 0.0) ? std::conj(rjj / mag) : Complex(1.0, 0.0);
  }
  return q;
}

std::vector<Vec> random_orthonormal_set(Rng& rng, int dim, int count) {
  if (count > dim) throw std::invalid_argument("random_orthonormal_set: count exceeds dim");
  const Mat u = random_unitary(rng, dim);
  std::vector<Vec> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j) out.push_back(u.col(j));
  return out;
}

VecTrigPoly random_trig_poly(Rng& rng, int valdim, int kmin, int kmax) {
  if (kmax < kmin) throw std::invalid_argument("random_trig_poly: kmax < kmin");
  std::vector<Vec> coeffs;
  coeffs.reserve(kmax - kmin + 1);
  for (int k = kmin; k <= kmax; ++k) coeffs.push_back(random_vector(rng, valdim));
  return VecTrigPoly(valdim, kmin, std::move(coeffs));
}

VecTrigPoly random_inner_symbol(Rng& rng, int dim, int max_degree) {
  const int terms = rng.uniform_int(1, std::min(dim, max_degree + 1));
  // distinct exponents in [0, max_degree]
  std::vector<int> exponents;
  for (int e = 0; e <= max_degree; ++e) exponents.push_back(e);
  for (int i = static_cast<int>(exponents.size()) - 1; i > 0; --i) {
    std::swap(exponents[i], exponents[rng.uniform_int(0, i)]);
  }
  exponents.resize(terms);
  std::sort(exponents.begin(), exponents.end());

  const Mat u = random_unitary(rng, dim);
  Vec weights(terms);
  double total = 0.0;
  for (int j = 0; j < terms; ++j) {
    const double w = 0.2 + rng.uniform();
    weights[j] = w;
    total += w * w;
  }
  weights /= std::sqrt(total);

  std::vector<Vec> coeffs(exponents.back() + 1, Vec::Zero(dim));
  for (int j = 0; j < terms; ++j) coeffs[exponents[j]] = weights[j] * u.col(j);
  return VecTrigPoly(dim, 0, std::move(coeffs));
}

std::vector<VecTrigPoly> random_pointwise_orthonormal_family(Rng& rng, int dim, int count,
                                                             int max_degree) {
  if (count > dim) throw std::invalid_argument("random_pointwise_orthonormal_family: count exceeds dim");
  const Mat u = random_unitary(rng, dim);
  std::vector<VecTrigPoly> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j) {
    const int k = rng.uniform_int(0, max_degree);
    out.push_back(VecTrigPoly::constant(u.col(j)).shifted(k));
  }
  return out;
}

std::vector<VecTrigPoly> blocked_family_c4() {
  const double s = 1.0 / std::sqrt(2.0);
  Vec a0 = Vec::Zero(4);
  Vec a1 = Vec::Zero(4);
  Vec b0 = Vec::Zero(4);
  Vec b1 = Vec::Zero(4);
  a0[0] = s;
  a1[1] = s;
  b0[2] = s;
  b1[3] = s;
  VecTrigPoly xi0(4, 0, {a0, a1});
  VecTrigPoly xi1(4, 0, {b0, b1});
  return {xi0, xi1};
}

Permutation random_permutation(Rng& rng, int size) {
  std::vector<int> images(size);
  for (int i = 0; i < size; ++i) images[i] = i;
  for (int i = size - 1; i > 0; --i) std::swap(images[i], images[rng.uniform_int(0, i)]);
  return Permutation(std::move(images));
}

}  // namespace wedgeops
