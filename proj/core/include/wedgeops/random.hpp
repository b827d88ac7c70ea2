#ifndef WEDGEOPS_RANDOM_HPP
#define WEDGEOPS_RANDOM_HPP

#include <cstdint>
#include <vector>

#include "wedgeops/multiindex.hpp"
#include "wedgeops/tensor.hpp"
#include "wedgeops/trigpoly.hpp"

namespace wedgeops {

/// splitmix64 stream. Self-contained so that seeded runs are reproducible
/// bit-for-bit, independent of standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi);
  /// Standard normal (Box-Muller).
  double gaussian();
  /// Complex standard normal, E|z|^2 = 1.
  Complex complex_gaussian();

 private:
  std::uint64_t state_;
};

Vec random_vector(Rng& rng, int dim);
Mat random_matrix(Rng& rng, int rows, int cols);

/// Haar-ish unitary via QR of a complex Gaussian matrix with the phase
/// ambiguity fixed, so results are deterministic per seed.
Mat random_unitary(Rng& rng, int dim);

/// Orthonormal j-tuple in C^d (first j columns of a random unitary).
std::vector<Vec> random_orthonormal_set(Rng& rng, int dim, int count);

VecTrigPoly random_trig_poly(Rng& rng, int valdim, int kmin, int kmax);

/// Analytic symbol with unit pointwise norm on the circle:
/// xi(z) = sum_j alpha_j z^{m_j} u_j with orthonormal directions u_j,
/// distinct exponents, and sum alpha_j^2 = 1. The autocorrelation of such a
/// series is exactly the delta at frequency zero.
VecTrigPoly random_inner_symbol(Rng& rng, int dim, int max_degree);

/// Family xi_i(z) = z^{k_i} u_i with the u_i columns of one random unitary:
/// exactly pointwise orthonormal on the circle. count <= dim required.
std::vector<VecTrigPoly> random_pointwise_orthonormal_family(Rng& rng, int dim, int count,
                                                             int max_degree);

/// The fixed block family in C^4: (1, z, 0, 0)/sqrt(2), (0, 0, 1, z)/sqrt(2).
std::vector<VecTrigPoly> blocked_family_c4();

Permutation random_permutation(Rng& rng, int size);

}  // namespace wedgeops

#endif
