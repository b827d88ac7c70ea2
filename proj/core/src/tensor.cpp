#include "wedgeops/tensor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wedgeops {

namespace {

std::int64_t checked_entry_count(int dim, int grade) {
  if (dim < 1) throw std::invalid_argument("FullTensor: dim must be positive");
  if (grade < 1) throw std::invalid_argument("FullTensor: grade must be positive");
  if (grade > 8) {
    throw std::length_error("FullTensor: grade capped at 8 (" + std::to_string(grade) + " requested)");
  }
  std::int64_t count = 1;
  for (int k = 0; k < grade; ++k) {
    count *= dim;
    if (count > 1000000) {
      throw std::length_error("FullTensor: dim^grade capped at 10^6");
    }
  }
  return count;
}

void require_same_shape(const FullTensor& a, const FullTensor& b, const char* op) {
  if (a.dim() != b.dim() || a.grade() != b.grade()) {
    throw std::invalid_argument(std::string(op) + ": dim/grade mismatch");
  }
}

}  // namespace

FullTensor::FullTensor(int dim, int grade)
    : dim_(dim), grade_(grade), entries_(Vec::Zero(checked_entry_count(dim, grade))) {}

FullTensor FullTensor::elementary(const std::vector<Vec>& factors) {
  if (factors.empty()) throw std::invalid_argument("FullTensor::elementary: no factors");
  const int dim = static_cast<int>(factors.front().size());
  for (const Vec& f : factors) {
    if (f.size() != dim) throw std::invalid_argument("FullTensor::elementary: factor length mismatch");
  }
  const int grade = static_cast<int>(factors.size());
  FullTensor out(dim, grade);
  std::vector<int> tuple(grade, 0);
  for (std::int64_t flat = 0; flat < out.entry_count(); ++flat) {
    Complex value = 1.0;
    for (int k = 0; k < grade; ++k) value *= factors[k][tuple[k]];
    out.entries_[flat] = value;
    for (int k = grade - 1; k >= 0; --k) {
      if (++tuple[k] < dim) break;
      tuple[k] = 0;
    }
  }
  return out;
}

std::int64_t FullTensor::flat_index(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != grade_) {
    throw std::invalid_argument("FullTensor: tuple length must equal grade");
  }
  std::int64_t flat = 0;
  for (int k = 0; k < grade_; ++k) {
    if (tuple[k] < 0 || tuple[k] >= dim_) throw std::out_of_range("FullTensor: tuple entry out of range");
    flat = flat * dim_ + tuple[k];
  }
  return flat;
}

std::vector<int> FullTensor::tuple_at(std::int64_t flat) const {
  std::vector<int> tuple(grade_);
  for (int k = grade_ - 1; k >= 0; --k) {
    tuple[k] = static_cast<int>(flat % dim_);
    flat /= dim_;
  }
  return tuple;
}

FullTensor FullTensor::operator+(const FullTensor& rhs) const {
  require_same_shape(*this, rhs, "FullTensor::operator+");
  FullTensor out(dim_, grade_);
  out.entries_ = entries_ + rhs.entries_;
  return out;
}

FullTensor FullTensor::operator-(const FullTensor& rhs) const {
  require_same_shape(*this, rhs, "FullTensor::operator-");
  FullTensor out(dim_, grade_);
  out.entries_ = entries_ - rhs.entries_;
  return out;
}

FullTensor FullTensor::operator*(Complex scalar) const {
  FullTensor out(dim_, grade_);
  out.entries_ = entries_ * scalar;
  return out;
}

Complex tensor_inner(const FullTensor& u, const FullTensor& v) {
  require_same_shape(u, v, "tensor_inner");
  double factorial = 1.0;
  for (int k = 2; k <= u.grade(); ++k) factorial *= k;
  return factorial * inner(u.entries(), v.entries());
}

double tensor_norm(const FullTensor& u) {
  return std::sqrt(std::max(0.0, tensor_inner(u, u).real()));
}

FullTensor permute(const Permutation& sigma, const FullTensor& u) {
  if (sigma.size() != u.grade()) throw std::invalid_argument("permute: permutation size must equal grade");
  const int p = u.grade();
  const int d = u.dim();
  FullTensor out(d, p);
  std::vector<int> tuple(p, 0);
  std::vector<int> gathered(p);
  for (std::int64_t flat = 0; flat < out.entry_count(); ++flat) {
    for (int k = 0; k < p; ++k) gathered[k] = tuple[sigma.image(k)];
    out.entries()[flat] = u.entries()[u.flat_index(gathered)];
    for (int k = p - 1; k >= 0; --k) {
      if (++tuple[k] < d) break;
      tuple[k] = 0;
    }
  }
  return out;
}

namespace {

FullTensor group_average(const FullTensor& u, bool signed_sum) {
  FullTensor acc(u.dim(), u.grade());
  double count = 0.0;
  for (const Permutation& sigma : all_permutations(u.grade())) {
    const double weight = signed_sum ? sigma.signature() : 1.0;
    acc = acc + permute(sigma, u) * Complex(weight, 0.0);
    count += 1.0;
  }
  return acc * Complex(1.0 / count, 0.0);
}

}  // namespace

FullTensor antisymmetrize(const FullTensor& u) { return group_average(u, true); }

FullTensor symmetrize(const FullTensor& u) { return group_average(u, false); }

}  // namespace wedgeops
