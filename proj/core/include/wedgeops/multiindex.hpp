#ifndef WEDGEOPS_MULTIINDEX_HPP
#define WEDGEOPS_MULTIINDEX_HPP

#include <cstdint>
#include <vector>

namespace wedgeops {

/// C(n, k) as an exact 64-bit integer. Returns 0 for k < 0 or k > n.
std::int64_t binomial(int n, int k);

/// Strictly increasing p-tuples over {0, ..., d-1}, the coordinate labels of
/// the wedge-power basis e_{i1} ^ ... ^ e_{ip}. Enumeration is lexicographic
/// and total; `rank` inverts `enumerate` without materializing the list.
struct MultiIndex {
  int dim = 0;
  int grade = 0;
  std::vector<int> indices;  // strictly increasing, values in [0, dim)

  MultiIndex() = default;
  MultiIndex(int dim, std::vector<int> indices);

  bool operator==(const MultiIndex&) const = default;
};

/// All C(d, p) multi-indices in lexicographic order.
std::vector<MultiIndex> enumerate_multi_indices(int dim, int grade);

/// Position of `mi` in the lexicographic enumeration.
std::int64_t multi_index_rank(const MultiIndex& mi);

/// A bijection of {0, ..., size-1}. `image(k)` is where slot k is sent, so
/// composing permutations matches composing the induced tensor maps:
/// compose(sigma, tau) applies tau first, then sigma.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);
  static Permutation transposition(int size, int a, int b);
  static Permutation compose(const Permutation& outer, const Permutation& inner);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int k) const { return images_[k]; }
  const std::vector<int>& images() const { return images_; }

  /// Parity of the inversion count: +1 or -1.
  int signature() const;

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// All size! permutations. Throws std::length_error for size > 8.
std::vector<Permutation> all_permutations(int size);

/// Sign of the permutation that sorts `tuple` (entries assumed distinct).
int sort_signature(const std::vector<int>& tuple);

}  // namespace wedgeops

#endif
