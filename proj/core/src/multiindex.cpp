#include "wedgeops/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wedgeops {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

MultiIndex::MultiIndex(int dim, std::vector<int> indices)
    : dim(dim), grade(static_cast<int>(indices.size())), indices(std::move(indices)) {
  int prev = -1;
  for (int v : this->indices) {
    if (v <= prev || v < 0 || v >= dim) {
      throw std::invalid_argument("MultiIndex: indices must be strictly increasing within [0, dim)");
    }
    prev = v;
  }
}

std::vector<MultiIndex> enumerate_multi_indices(int dim, int grade) {
  std::vector<MultiIndex> out;
  if (grade < 0 || grade > dim) return out;
  out.reserve(static_cast<std::size_t>(binomial(dim, grade)));
  std::vector<int> current(grade);
  std::iota(current.begin(), current.end(), 0);
  while (true) {
    out.emplace_back(dim, current);
    // advance to the next strictly increasing tuple, rightmost slot first
    int pos = grade - 1;
    while (pos >= 0 && current[pos] == dim - grade + pos) --pos;
    if (pos < 0) break;
    ++current[pos];
    for (int j = pos + 1; j < grade; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::int64_t multi_index_rank(const MultiIndex& mi) {
  // count tuples that are lexicographically smaller
  std::int64_t rank = 0;
  int prev = -1;
  for (int a = 0; a < mi.grade; ++a) {
    for (int v = prev + 1; v < mi.indices[a]; ++v) {
      rank += binomial(mi.dim - 1 - v, mi.grade - 1 - a);
    }
    prev = mi.indices[a];
  }
  return rank;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) {
      throw std::invalid_argument("Permutation: images must be a bijection of {0..size-1}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int size, int a, int b) {
  Permutation p = identity(size);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("Permutation::compose: size mismatch");
  }
  std::vector<int> images(outer.size());
  for (int k = 0; k < outer.size(); ++k) images[k] = outer.image(inner.image(k));
  return Permutation(std::move(images));
}

int Permutation::signature() const {
  int inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int k = 0; k < size(); ++k) images[images_[k]] = k;
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int size) {
  if (size > 8) {
    throw std::length_error("all_permutations: size capped at 8 (" + std::to_string(size) + " requested)");
  }
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

int sort_signature(const std::vector<int>& tuple) {
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] > tuple[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace wedgeops
