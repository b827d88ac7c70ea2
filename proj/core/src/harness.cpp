#include "wedgeops/harness.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wedgeops/operators.hpp"
#include "wedgeops/random.hpp"
#include "wedgeops/tensor.hpp"
#include "wedgeops/wedge.hpp"

namespace wedgeops {

namespace {

struct Ctx {
  const RunConfig& cfg;
  std::uint64_t seed;
};

struct Outcome {
  double measured = 0.0;
  std::string details;
  bool degenerate = false;
};

struct CheckSpec {
  const char* id;
  double tolerance;
  Outcome (*fn)(const Ctx&);
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

FullTensor random_unit_tensor(Rng& rng, int dim, int grade) {
  FullTensor t(dim, grade);
  for (Eigen::Index i = 0; i < t.entries().size(); ++i) t.entries()[i] = rng.complex_gaussian();
  const double norm = tensor_norm(t);
  t.entries() /= norm;
  return t;
}

Vec random_unit_vector(Rng& rng, int dim) {
  const Vec v = random_vector(rng, dim);
  return v / v.norm();
}

std::vector<Vec> random_unit_vectors(Rng& rng, int dim, int count) {
  std::vector<Vec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_unit_vector(rng, dim));
  return out;
}

VecTrigPoly random_unit_poly(Rng& rng, int valdim, int kmin, int kmax) {
  const VecTrigPoly f = random_trig_poly(rng, valdim, kmin, kmax);
  return f * Complex(1.0 / f.l2_norm(), 0.0);
}

Complex circle_point(Rng& rng) {
  return std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
}

std::string count_details(int trials) {
  return std::to_string(trials) + " seeded trials";
}

VecTrigPoly golden_symbol() {
  const double s = 1.0 / std::sqrt(2.0);
  Vec c0 = Vec::Zero(2);
  Vec c1 = Vec::Zero(2);
  c0[0] = s;
  c1[1] = s;
  return VecTrigPoly(2, 0, {c0, c1});
}

// --- tensor-module invariants ---------------------------------------------

Outcome check_permute_adjoint(const Ctx& c) {
  const int d = std::min(c.cfg.dim, 4);
  const int p = std::clamp(c.cfg.grade, 2, 4);
  Rng rng(c.seed);
  double worst = 0.0;
  for (int t = 0; t < c.cfg.trials; ++t) {
    const FullTensor u = random_unit_tensor(rng, d, p);
    const FullTensor v = random_unit_tensor(rng, d, p);
    const Permutation sigma = random_permutation(rng, p);
    worst = std::max(worst, std::abs(tensor_inner(permute(sigma, u), v) -
                                     tensor_inner(u, permute(sigma.inverse(), v))));
  }
  return {worst, count_details(c.cfg.trials)};
}

Outcome check_antisym_projection(const Ctx& c) {
  const int d = std::min(c.cfg.dim, 4);
  const int p = std::clamp(c.cfg.grade, 2, 4);
  Rng rng(c.seed);
  double worst = 0.0;
  const int trials = std::min(c.cfg.trials, 25);
  for (int t = 0; t < trials; ++t) {
    const FullTensor u = random_unit_tensor(rng, d, p);
    const FullTensor v = random_unit_tensor(rng, d, p);
    const FullTensor pu = antisymmetrize(u);
    worst = std::max(worst, tensor_norm(antisymmetrize(pu) - pu));
    worst = std::max(worst, std::abs(tensor_inner(pu, v) - tensor_inner(u, antisymmetrize(v))));
  }
  return {worst, count_details(trials)};
}

Outcome check_antisym_rank(const Ctx& c) {
  const int d = std::min(c.cfg.dim, 4);
  const int p = std::clamp(c.cfg.grade, 2, 4);
  FullTensor basis(d, p);
  Mat projector(basis.entry_count(), basis.entry_count());
  for (std::int64_t j = 0; j < basis.entry_count(); ++j) {
    basis.entries().setZero();
    basis.entries()[j] = 1.0;
    projector.col(j) = antisymmetrize(basis).entries();
  }
  Eigen::JacobiSVD<Mat> svd(projector);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > 1e-8) ++rank;
  }
  const auto expected = binomial(d, p);
  std::ostringstream details;
  details << "numeric rank " << rank << ", expected " << expected << " at dim " << d << " grade " << p;
  return {std::abs(static_cast<double>(rank - expected)), details.str()};
}

Outcome check_gram_two_routes(const Ctx& c) {
  const int d = std::min(c.cfg.dim, 5);
  const int p = std::clamp(c.cfg.grade, 2, 4);
  Rng rng(c.seed);
  double worst = 0.0;
  const int trials = std::min(c.cfg.trials, 50);
  for (int t = 0; t < trials; ++t) {
    const auto xs = random_unit_vectors(rng, d, p);
    const auto ys = random_unit_vectors(rng, d, p);
    const Complex direct = gram_inner(xs, ys);
    const Complex via_projection =
        tensor_inner(antisymmetrize(FullTensor::elementary(xs)), antisymmetrize(FullTensor::elementary(ys)));
    worst = std::max(worst, std::abs(direct - via_projection));
  }
  return {worst, count_details(trials)};
}

Outcome check_wedge_alternating(const Ctx& c) {
  const int d = c.cfg.dim;
  const int p = std::max(c.cfg.grade, 2);
  if (p > d) {
    Rng rng(c.seed);
    const auto xs = random_unit_vectors(rng, d, p);
    return {wedge(xs).norm(), "grade exceeds dim; wedge power is trivial", true};
  }
  Rng rng(c.seed);
  double worst = 0.0;
  for (int t = 0; t < c.cfg.trials; ++t) {
    auto xs = random_unit_vectors(rng, d, p);
    const WedgeVector w = wedge(xs);
    const int i = rng.uniform_int(0, p - 1);
    int j = rng.uniform_int(0, p - 2);
    if (j >= i) ++j;
    std::swap(xs[i], xs[j]);
    worst = std::max(worst, (wedge(xs) + w).norm());
    xs[i] = xs[j];
    worst = std::max(worst, wedge(xs).norm());
  }
  return {worst, count_details(c.cfg.trials)};
}

Outcome check_gram_nonneg(const Ctx& c) {
  const int d = std::min(c.cfg.dim, 5);
  const int p = std::clamp(c.cfg.grade, 2, 4);
  Rng rng(c.seed);
  double worst = 0.0;
  for (int t = 0; t < c.cfg.trials; ++t) {
    const auto xs = random_unit_vectors(rng, d, p);
    const Complex g = gram_inner(xs, xs);
    worst = std::max({worst, std::abs(g.imag()), -std::min(g.real(), 0.0)});
  }
  return {worst, count_details(c.cfg.trials)};
}

Outcome check_wedge_pair_norm(const Ctx& c) {
  const int d = c.cfg.dim;
  Rng rng(c.seed);
  double worst = 0.0;
  for (int t = 0; t < c.cfg.trials; ++t) {
    const Vec x = random_vector(rng, d);
    const Vec y = random_vector(rng, d);
    const double lhs = wedge({x, y}).coords().squaredNorm();
    const double rhs = x.squaredNorm() * y.squaredNorm() - std::norm(inner(x, y));
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  return {worst, count_details(c.cfg.trials) + ", relative"};
}

// --- series-module invariants ----------------------------------------------

Outcome check_parseval_quadrature(const Ctx& c) {
  Rng rng(c.seed);
  double worst = 0.0;
  const int trials = std::min(c.cfg.trials, 10);
  const int n = std::min(c.cfg.degree, 64);
  for (int t = 0; t < trials; ++t) {
    const VecTrigPoly f = random_unit_poly(rng, c.cfg.dim, -n, n);
    const int samples = std::max(4096, 8 * f.length());
    double quadrature = 0.0;
    for (int j = 0; j < samples; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / samples;
      quadrature += eval(f, std::polar(1.0, theta)).squaredNorm();
    }
    quadrature /= samples;
    const double parseval = l2_inner(f, f).real();
    worst = std::max(worst, std::abs(parseval - quadrature));
  }
  return {worst, count_details(trials) + ", 4096-point quadrature"};
}

Outcome check_riesz_projection(const Ctx& c) {
  Rng rng(c.seed);
  double worst = 0.0;
  const int n = std::min(c.cfg.degree, 64);
  for (int t = 0; t < c.cfg.trials; ++t) {
    const VecTrigPoly f = random_unit_poly(rng, c.cfg.dim, -n, n);
    const VecTrigPoly g = random_unit_poly(rng, c.cfg.dim, -n, n);
    const VecTrigPoly pf = riesz_project(f);
    worst = std::max(worst, (riesz_project(pf) - pf).l2_norm());
    worst = std::max(worst, std::abs(l2_inner(pf, g) - l2_inner(f, riesz_project(g))));
  }
  return {worst, count_details(c.cfg.trials)};
}

Outcome check_wedge_eval_commutes(const Ctx& c) {
  Rng rng(c.seed);
  const int n = c.cfg.grade;
  const bool trivial = n > c.cfg.dim;
  double worst = 0.0;
  const int trials = std::min(c.cfg.trials, 10);
  for (int t = 0; t < trials; ++t) {
    std::vector<VecTrigPoly> fs;
    for (int j = 0; j < n; ++j) fs.push_back(random_unit_poly(rng, c.cfg.dim, -2, std::min(c.cfg.degree, 4)));
    const VecTrigPoly w = pointwise_wedge(fs);
    for (int s = 0; s < 32; ++s) {
      const Complex z = circle_point(rng);
      std::vector<Vec> values;
      for (const VecTrigPoly& f : fs) values.push_back(eval(f, z));
      worst = std::max(worst, (eval(w, z) - wedge(values).coords()).norm());
    }
  }
  if (trivial) return {worst, "grade exceeds dim; wedge power is trivial", true};
  return {worst, count_details(trials) + ", 32 circle points each"};
}

Outcome check_h2_wedge_bound(const Ctx& c) {
  Rng rng(c.seed);
  double worst = 0.0;
  const int trials = std::min(c.cfg.trials, 25);
  for (int t = 0; t < trials; ++t) {
    const VecTrigPoly x = random_unit_poly(rng, c.cfg.dim, 0, std::min(c.cfg.degree, 32));
    const VecTrigPoly y = random_unit_poly(rng, c.cfg.dim, 0, std::min(c.cfg.degree, 4));
    const double lhs = pointwise_wedge({x, y}).l2_norm();
    const double sup = lp_norm(y, Lp::Infinity, std::max(1024, 8 * y.length()));
    worst = std::max(worst, lhs - sup);
  }
  return {std::max(worst, 0.0), count_details(trials)};
}

Outcome check_h1_wedge_bound(const Ctx& c) {
  Rng rng(c.seed);
  double worst = 0.0;
  const int trials = std::min(c.cfg.trials, 25);
  for (int t = 0; t < trials; ++t) {
    const VecTrigPoly x = random_unit_poly(rng, c.cfg.dim, 0, std::min(c.cfg.degree, 6));
    const VecTrigPoly y = random_unit_poly(rng, c.cfg.dim, 0, std::min(c.cfg.degree, 6));
    const VecTrigPoly w = pointwise_wedge({x, y});
    const double lhs = lp_norm(w, Lp::One, std::max(1024, 8 * w.length()));
    worst = std::max(worst, lhs - 1.0);
  }
  return {std::max(worst, 0.0), count_details(trials)};
}

Outcome check_multiwedge_contraction(const Ctx& c) {
  if (c.cfg.dim < 2) return {0.0, "dim < 2; no room for a wedge factor", true};
  const int family = std::clamp(c.cfg.grade - 1, 1, c.cfg.dim - 1);
  Rng rng(c.seed);
  double worst = 0.0;
  const int trials = std::min(c.cfg.trials, 15);
  for (int t = 0; t < trials; ++t) {
    const auto xis = random_pointwise_orthonormal_family(rng, c.cfg.dim, family, 2);
    const int n = std::min(c.cfg.degree, 32);
    const VecTrigPoly x = random_unit_poly(rng, c.cfg.dim, -n, n);

    // pointwise residual: exactly in the pointwise orthogonal complement
    VecTrigPoly residual = x;
    double pairing_mass = 0.0;
    for (const VecTrigPoly& xi : xis) {
      const VecTrigPoly s = scalar_pair(x, xi);
      pairing_mass += s.l2_norm() * s.l2_norm();
      residual = residual - scalar_multiply(s, xi);
    }
    if (residual.l2_norm() > 1e-3) {
      VecTrigPoly unit_residual = residual * Complex(1.0 / residual.l2_norm(), 0.0);
      std::vector<VecTrigPoly> factors = xis;
      factors.push_back(unit_residual);
      worst = std::max(worst, std::abs(pointwise_wedge(factors).l2_norm() - 1.0));
    }

    std::vector<VecTrigPoly> factors = xis;
    factors.push_back(x);
    const double image = pointwise_wedge(factors).l2_norm();
    worst = std::max(worst, image - 1.0);
    if (std::sqrt(pairing_mass) > 1e-4 && 1.0 - image <= 1e-10) {
      worst = std::max(worst, 1.0);  // equality without vanishing pairings
    }
  }
  return {worst, count_details(trials)};
}

// --- operator-module invariants ---------------------------------------------

Outcome check_adjoint_consistency(const Ctx& c) {
  const int d = std::min(c.cfg.dim, 4);
  const int n = std::min(c.cfg.degree, 8);
  Rng rng(c.seed);
  double worst = 0.0;
  const int trials = std::min(c.cfg.trials, 25);
  for (int t = 0; t < trials; ++t) {
    const VecTrigPoly xi = random_trig_poly(rng, d, 0, 2);
    const OperatorMatrix op = creation(xi, n);
    if (op.codomain().dimension() == 0) continue;
    Vec h = random_vector(rng, op.domain().dimension());
    Vec w = random_vector(rng, op.codomain().dimension());
    h /= h.norm();
    w /= w.norm();
    const Complex lhs = w.dot(op.apply(h));
    const Complex rhs = op.adjoint().apply(w).dot(h);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {worst, count_details(trials)};
}

Outcome check_toeplitz_identity(const Ctx& c) {
  Rng rng(c.seed);
  double worst = 0.0;
  const int trials = std::min(c.cfg.trials, 20);
  for (int t = 0; t < trials; ++t) {
    const int d = rng.uniform_int(1, std::min(c.cfg.dim, 4));
    const int n = rng.uniform_int(1, std::max(1, std::min(c.cfg.degree, 12)));
    const VecTrigPoly xi = random_inner_symbol(rng, d, std::min(3, n));
    worst = std::max(worst, verify_toeplitz_identity(xi, n));
  }
  int external = 0;
  int skipped = 0;
  for (const VecTrigPoly& xi : c.cfg.external_symbols) {
    if (is_inner(xi, 1e-10)) {
      worst = std::max(worst, verify_toeplitz_identity(xi, std::max(1, std::min(c.cfg.degree, 12))));
      ++external;
    } else {
      ++skipped;
    }
  }
  std::ostringstream details;
  details << trials << " seeded inner symbols";
  if (external > 0) details << ", " << external << " external";
  if (skipped > 0) details << ", " << skipped << " external skipped (not inner)";
  return {worst, details.str()};
}

Outcome check_poc_kernel_orthogonality(const Ctx& c) {
  const int d = std::max(2, std::min(c.cfg.dim, 4));
  const int n = std::max(2, std::min(c.cfg.degree, 8));
  Rng rng(c.seed);
  double worst = 0.0;
  const int trials = std::min(c.cfg.trials, 5);
  for (int t = 0; t < trials; ++t) {
    const VecTrigPoly xi = random_trig_poly(rng, d, 0, 2);
    const PocResult poc = poc_basis({xi}, d, n);
    const auto kernel = kernel_creation(xi, n);
    for (const VecTrigPoly& p : poc.basis) {
      for (const VecTrigPoly& k : kernel) {
        worst = std::max(worst, std::abs(l2_inner(p, k)));
      }
    }
  }
  return {worst, count_details(trials)};
}

Outcome check_poc_counterexample_membership(const Ctx& c) {
  const int n = std::clamp(c.cfg.degree, 1, 6);
  VecTrigPoly g(2, 1, {Vec::Unit(2, 0), Vec::Unit(2, 1)});  // (z, z^2)
  const PocResult poc = poc_basis({g}, 2, n);
  VecTrigPoly f(2, 0, {Vec::Unit(2, 0), Complex(-1.0, 0.0) * Vec::Unit(2, 1)});  // (1, -z)
  f = f * Complex(1.0 / f.l2_norm(), 0.0);
  VecTrigPoly projection = VecTrigPoly::zero(2);
  for (const VecTrigPoly& b : poc.basis) projection = projection + b * l2_inner(f, b);
  std::ostringstream details;
  details << "complement dimension " << poc.dimension() << " at degree " << n;
  return {(f - projection).l2_norm(), details.str()};
}

Outcome check_poc_counterexample_pairing(const Ctx&) {
  VecTrigPoly g(2, 1, {Vec::Unit(2, 0), Vec::Unit(2, 1)});
  VecTrigPoly f(2, 0, {Vec::Unit(2, 0), Complex(-1.0, 0.0) * Vec::Unit(2, 1)});
  const Complex pairing = inner(eval(f, Complex(0.5, 0.0)), eval(g, Complex(0.5, 0.0)));
  return {std::abs(std::abs(pairing) - 0.375), "inner product of values at z = 1/2"};
}

Outcome check_toeplitz_linearity(const Ctx& c) {
  const int d = std::min(c.cfg.dim, 4);
  const int n = std::min(c.cfg.degree, 8);
  Rng rng(c.seed);
  double worst = 0.0;
  const int trials = std::min(c.cfg.trials, 10);
  for (int t = 0; t < trials; ++t) {
    std::vector<Mat> gc;
    std::vector<Mat> hc;
    for (int k = -2; k <= 2; ++k) {
      gc.push_back(random_matrix(rng, d, d));
      hc.push_back(random_matrix(rng, d, d));
    }
    const MatSymbol g(d, d, -2, gc);
    const MatSymbol h(d, d, -2, hc);
    worst = std::max(worst, max_abs((toeplitz(g + h, n) - (toeplitz(g, n) + toeplitz(h, n))).entries()));

    const Mat m = random_matrix(rng, d, d);
    Mat block_diag = Mat::Zero(d * (n + 1), d * (n + 1));
    for (int k = 0; k <= n; ++k) block_diag.block(k * d, k * d, d, d) = m;
    worst = std::max(worst, max_abs(toeplitz(MatSymbol::constant(m), n).entries() - block_diag));
  }
  return {worst, count_details(trials)};
}

Outcome check_report_determinism(const Ctx& c) {
  const int n = std::clamp(c.cfg.degree, 2, 6);
  const int trials = std::clamp(c.cfg.trials, 1, 20);
  const VecTrigPoly xi = golden_symbol();
  const IsometryReport a = isometry_set_check(xi, n, trials, c.seed);
  const IsometryReport b = isometry_set_check(xi, n, trials, c.seed);
  double worst = std::abs(a.max_equality_deviation - b.max_equality_deviation);
  worst = std::max(worst, std::abs(a.min_margin - b.min_margin));
  worst = std::max(worst, static_cast<double>(std::abs(a.misclassified - b.misclassified)));
  const IsometryReport m1 = multiwedge_isometry_check(blocked_family_c4(), n, trials, c.seed);
  const IsometryReport m2 = multiwedge_isometry_check(blocked_family_c4(), n, trials, c.seed);
  worst = std::max(worst, std::abs(m1.max_equality_deviation - m2.max_equality_deviation));
  worst = std::max(worst, std::abs(m1.min_margin - m2.min_margin));
  return {worst, "two runs of each randomized report with one seed"};
}

Outcome kernel_pls_outcome(const Ctx& c, bool on_circle) {
  const int d = std::max(2, std::min(c.cfg.dim, 4));
  const int n = std::max(2, std::min(c.cfg.degree, 8));
  Rng rng(c.seed);
  double worst = 0.0;
  int members = 0;
  const int trials = std::min(c.cfg.trials, 5);
  for (int t = 0; t < trials; ++t) {
    const VecTrigPoly xi = random_trig_poly(rng, d, 0, 2);
    for (const VecTrigPoly& h : kernel_creation(xi, n)) {
      ++members;
      for (int s = 0; s < 32; ++s) {
        Complex z = circle_point(rng);
        if (!on_circle) z *= std::sqrt(rng.uniform());
        worst = std::max(worst, wedge({eval(xi, z), eval(h, z)}).norm());
      }
    }
  }
  std::ostringstream details;
  details << members << " kernel members sampled at 32 points "
          << (on_circle ? "on the circle" : "inside the disc");
  return {worst, details.str()};
}

Outcome check_kernel_pls_circle(const Ctx& c) { return kernel_pls_outcome(c, true); }

Outcome check_kernel_pls_disc(const Ctx& c) { return kernel_pls_outcome(c, false); }

// --- worked examples ---------------------------------------------------------

Outcome example_creation_adjoint(const Ctx&) {
  const VecTrigPoly xi = golden_symbol();
  const VecTrigPoly h = VecTrigPoly::constant(Vec::Ones(2));
  const int n = 4;

  Vec e0(2);
  Vec e1(2);
  e0 << Complex(0.5, 0.0), Complex(0.5, 0.0);
  e1 << Complex(0.0, 0.0), Complex(-0.5, 0.0);
  const VecTrigPoly expected(2, 0, {e0, e1});

  const OperatorMatrix c = creation(xi, n);
  const VecTrigPoly via_matrix = (c.adjoint() * c).apply(h);
  const VecTrigPoly via_convolution = adjoint_on_wedge(xi, xi, h, n);
  const double worst = std::max((via_matrix - expected).l2_norm(), (via_convolution - expected).l2_norm());
  return {worst, "matrix and convolution routes at degree 4"};
}

Outcome example_pairing_coefficient(const Ctx&) {
  const VecTrigPoly xi = golden_symbol();
  const VecTrigPoly h = VecTrigPoly::constant(Vec::Ones(2));
  const OperatorMatrix c = creation(xi, 4);
  const VecTrigPoly image = (c.adjoint() * c).apply(h);
  const VecTrigPoly s = scalar_pair(image, xi);
  const double expected = 1.0 / (2.0 * std::sqrt(2.0));
  double worst = std::abs(s.coeff(-1)[0] - expected);
  for (int k = s.kmin(); k <= s.kmax(); ++k) {
    if (k != -1) worst = std::max(worst, std::abs(s.coeff(k)[0]));
  }
  return {worst, "single surviving coefficient at frequency -1"};
}

Outcome example_poc_membership(const Ctx& c) {
  Ctx fixed{c.cfg, c.seed};
  return check_poc_counterexample_membership(fixed);
}

Outcome example_poc_interior_pairing(const Ctx& c) { return check_poc_counterexample_pairing(c); }

Outcome example_shift_formula(const Ctx&) {
  const ShiftFormulaReport report = partial_isometry_counterexample(6);
  double worst = std::max({report.formula_deviation, report.square_formula_deviation,
                           report.selfadjoint_deviation, report.constant_entry_deviation});
  worst = std::max(worst, -report.eigenvalue_min);
  worst = std::max(worst, report.eigenvalue_max - 1.0);
  return {std::max(worst, 0.0), "closed-form shift blocks at degree 6"};
}

Outcome example_projection_defect(const Ctx&) {
  const ShiftFormulaReport report = partial_isometry_counterexample(6);
  return {std::abs(report.projection_defect - 0.25), "norm of A^2 - A on the protected columns"};
}

Outcome example_multiwedge_family(const Ctx&) {
  const IsometryReport report = multiwedge_isometry_check(blocked_family_c4(), 5, 40, 0x77edde0511);
  double worst = report.max_equality_deviation;
  worst = std::max(worst, -report.min_margin);
  worst = std::max(worst, static_cast<double>(report.misclassified));
  return {std::max(worst, 0.0), "blocked family in C^4, 40 trials"};
}

const CheckSpec kSuiteChecks[] = {
    {"hardy.h1_wedge_bound", 1e-8, check_h1_wedge_bound},
    {"hardy.h2_wedge_bound", 1e-8, check_h2_wedge_bound},
    {"hardy.multiwedge_contraction", 1e-10, check_multiwedge_contraction},
    {"hardy.parseval_quadrature", 1e-8, check_parseval_quadrature},
    {"hardy.riesz_projection", 1e-12, check_riesz_projection},
    {"hardy.wedge_eval_commutes", 1e-10, check_wedge_eval_commutes},
    {"operators.adjoint_consistency", 1e-13, check_adjoint_consistency},
    {"operators.kernel_pls_circle", 1e-8, check_kernel_pls_circle},
    {"operators.kernel_pls_disc", 1e-8, check_kernel_pls_disc},
    {"operators.poc_counterexample_membership", 1e-10, check_poc_counterexample_membership},
    {"operators.poc_counterexample_pairing", 1e-12, check_poc_counterexample_pairing},
    {"operators.poc_kernel_orthogonality", 1e-10, check_poc_kernel_orthogonality},
    {"operators.report_determinism", 0.0, check_report_determinism},
    {"operators.toeplitz_identity", 1e-12, check_toeplitz_identity},
    {"operators.toeplitz_linearity", 1e-12, check_toeplitz_linearity},
    {"wedge_core.antisym_projection", 1e-12, check_antisym_projection},
    {"wedge_core.antisym_rank", 0.5, check_antisym_rank},
    {"wedge_core.gram_nonneg", 1e-12, check_gram_nonneg},
    {"wedge_core.gram_two_routes", 1e-10, check_gram_two_routes},
    {"wedge_core.permute_adjoint", 1e-12, check_permute_adjoint},
    {"wedge_core.wedge_alternating", 1e-12, check_wedge_alternating},
    {"wedge_core.wedge_pair_norm", 1e-12, check_wedge_pair_norm},
};

const CheckSpec kExampleChecks[] = {
    {"examples.creation_adjoint_constant", 1e-12, example_creation_adjoint},
    {"examples.multiwedge_family", 1e-10, example_multiwedge_family},
    {"examples.pairing_coefficient", 1e-12, example_pairing_coefficient},
    {"examples.poc_interior_pairing", 1e-12, example_poc_interior_pairing},
    {"examples.poc_membership", 1e-10, example_poc_membership},
    {"examples.projection_defect", 1e-12, example_projection_defect},
    {"examples.shift_formula", 1e-12, example_shift_formula},
};

SuiteReport run_checks(const RunConfig& cfg, const CheckSpec* specs, std::size_t count) {
  SuiteReport report;
  for (std::size_t i = 0; i < count; ++i) {
    const CheckSpec& spec = specs[i];
    CheckResult result;
    result.check_id = spec.id;
    result.seed = cfg.seed ^ fnv1a(spec.id);
    result.tolerance = spec.tolerance;
    if (auto it = cfg.tol_overrides.find(spec.id); it != cfg.tol_overrides.end()) {
      result.tolerance = it->second;
    }
    const Outcome outcome = spec.fn(Ctx{cfg, result.seed});
    result.measured = outcome.measured;
    result.details = outcome.details;
    result.status = outcome.degenerate
                        ? CheckStatus::Degenerate
                        : (result.measured <= result.tolerance ? CheckStatus::Pass : CheckStatus::Fail);
    switch (result.status) {
      case CheckStatus::Pass: ++report.passed; break;
      case CheckStatus::Fail: ++report.failed; break;
      case CheckStatus::Degenerate: ++report.degenerate; break;
    }
    report.checks.push_back(std::move(result));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  return report;
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Degenerate: return "degenerate";
  }
  return "unknown";
}

void RunConfig::validate() const {
  if (dim < 1) throw std::invalid_argument("config: dim must be >= 1");
  if (degree < 0) throw std::invalid_argument("config: degree must be >= 0");
  if (grade < 1) throw std::invalid_argument("config: grade must be >= 1");
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
}

SuiteReport run_suite(const RunConfig& cfg) {
  cfg.validate();
  return run_checks(cfg, kSuiteChecks, std::size(kSuiteChecks));
}

SuiteReport run_paper_examples() {
  RunConfig cfg;
  cfg.dim = 2;
  cfg.degree = 4;
  cfg.trials = 40;
  cfg.seed = 0;
  return run_checks(cfg, kExampleChecks, std::size(kExampleChecks));
}

nlohmann::json report_to_json(const SuiteReport& report, const RunConfig* cfg) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& r : report.checks) {
    checks.push_back({{"check_id", r.check_id},
                      {"status", to_string(r.status)},
                      {"measured", r.measured},
                      {"tolerance", r.tolerance},
                      {"details", r.details},
                      {"seed", r.seed}});
  }
  nlohmann::json out = {
      {"checks", std::move(checks)},
      {"summary",
       {{"pass", report.passed},
        {"fail", report.failed},
        {"degenerate", report.degenerate},
        {"total", static_cast<int>(report.checks.size())}}}};
  if (cfg != nullptr) {
    out["config"] = {{"dim", cfg->dim},         {"degree", cfg->degree}, {"grade", cfg->grade},
                     {"trials", cfg->trials},   {"seed", cfg->seed},     {"tol_overrides", cfg->tol_overrides},
                     {"xi_files", cfg->xi_files}};
  }
  return out;
}

std::string report_to_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const CheckResult& r : report.checks) {
    char line[160];
    std::snprintf(line, sizeof(line), "[%-10s] %-42s measured=%.3e tol=%.3e", to_string(r.status).c_str(),
                  r.check_id.c_str(), r.measured, r.tolerance);
    out << line;
    if (!r.details.empty()) out << "  (" << r.details << ")";
    out << "\n";
  }
  out << "summary: " << report.checks.size() << " checks, " << report.passed << " pass, "
      << report.failed << " fail, " << report.degenerate << " degenerate\n";
  return out.str();
}

std::uint64_t default_seed() {
  const char* env = std::getenv("WEDGEOPS_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw std::invalid_argument("WEDGEOPS_SEED must be a nonnegative integer");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace wedgeops
