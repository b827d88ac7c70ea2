#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "wedgeops/operators.hpp"
#include "wedgeops/random.hpp"

using namespace wedgeops;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

VecTrigPoly golden_symbol() {
  Vec c0 = Vec::Zero(2);
  Vec c1 = Vec::Zero(2);
  c0[0] = kInvSqrt2;
  c1[1] = kInvSqrt2;
  return VecTrigPoly(2, 0, {c0, c1});
}

Complex circle_point(Rng& rng) {
  return std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
}

}  // namespace

TEST_CASE("embed and extract are inverse on analytic series") {
  const SpaceDescriptor space{2, 1, 3};
  CHECK(space.dimension() == 8);
  Rng rng(3);
  const VecTrigPoly f = random_trig_poly(rng, 2, 0, 3);
  CHECK((extract(embed(f, space), space) - f).l2_norm() < 1e-15);

  CHECK_THROWS_AS(embed(random_trig_poly(rng, 2, 0, 4), space), std::invalid_argument);
  CHECK_THROWS_AS(embed(random_trig_poly(rng, 3, 0, 2), space), std::invalid_argument);
  CHECK_THROWS_AS(embed(random_trig_poly(rng, 2, -1, 2), space), std::domain_error);
}

TEST_CASE("toeplitz: identity symbol, frozen blocks, definitional oracle") {
  const OperatorMatrix id = toeplitz(MatSymbol::constant(Mat::Identity(2, 2)), 3);
  CHECK(max_abs(id.entries() - Mat::Identity(8, 8)) == 0.0);

  // xi xi^* for the golden symbol: tridiagonal blocks (1/2) I, sub, super
  const OperatorMatrix t = toeplitz(rank_one_symbol(golden_symbol(), golden_symbol()), 2);
  Mat expected = Mat::Zero(6, 6);
  for (int k = 0; k <= 2; ++k) expected.block(2 * k, 2 * k, 2, 2) = 0.5 * Mat::Identity(2, 2);
  for (int k = 0; k + 1 <= 2; ++k) {
    expected(2 * (k + 1) + 1, 2 * k) = 0.5;  // sub-diagonal block (1/2)[[0,0],[1,0]]
    expected(2 * k, 2 * (k + 1) + 1) = 0.5;  // super-diagonal block (1/2)[[0,1],[0,0]]
  }
  CHECK(max_abs(t.entries() - expected) < 1e-15);

  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Mat> coeffs;
    for (int k = -2; k <= 3; ++k) coeffs.push_back(random_matrix(rng, 2, 3));
    const MatSymbol g(2, 3, -2, coeffs);
    const int n = 4;
    const OperatorMatrix op = toeplitz(g, n);
    const VecTrigPoly h = random_trig_poly(rng, 3, 0, n);
    const VecTrigPoly direct = op.apply(h);
    const VecTrigPoly oracle = truncated(riesz_project(apply_symbol(g, h)), 0, n);
    CHECK((direct - oracle).l2_norm() < 1e-12);
  }
}

TEST_CASE("creation: zero columns, golden image, norm bound") {
  const VecTrigPoly e1 = VecTrigPoly::constant(Vec::Unit(2, 0));
  const OperatorMatrix trivial = creation(e1, 2);
  CHECK(trivial.apply(e1).l2_norm() == 0.0);

  const VecTrigPoly xi = golden_symbol();
  const OperatorMatrix c = creation(xi, 2);
  CHECK(c.domain().dimension() == 6);
  CHECK(c.codomain().valdim == 1);
  CHECK(c.codomain().degree == 3);

  // C ((1,1)) = (1 - z)/sqrt(2) on the single wedge coordinate
  const VecTrigPoly image = c.apply(VecTrigPoly::constant(Vec::Ones(2)));
  CHECK(std::abs(image.coeff(0)[0] - Complex(kInvSqrt2, 0.0)) < 1e-15);
  CHECK(std::abs(image.coeff(1)[0] + Complex(kInvSqrt2, 0.0)) < 1e-15);
  CHECK(image.coeff(2).norm() < 1e-15);

  Rng rng(23);
  for (int t = 0; t < 5; ++t) {
    const VecTrigPoly f = random_trig_poly(rng, 3, 0, 2);
    const OperatorMatrix op = creation(f, 4);
    CHECK(operator_norm(op.entries()) <=
          lp_norm(f, Lp::Infinity, std::max(1024, 8 * f.length())) + 1e-8);
  }

  CHECK_THROWS_AS(creation(VecTrigPoly(2, -1, {Vec::Unit(2, 0)}), 2), std::domain_error);
}

TEST_CASE("adjoint consistency is exact in the coefficient bases") {
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    const VecTrigPoly xi = random_trig_poly(rng, 3, 0, 2);
    const OperatorMatrix c = creation(xi, 5);
    Vec h = random_vector(rng, c.domain().dimension());
    Vec w = random_vector(rng, c.codomain().dimension());
    h /= h.norm();
    w /= w.norm();
    CHECK(std::abs(w.dot(c.apply(h)) - c.adjoint().apply(w).dot(h)) < 1e-13);
  }
}

TEST_CASE("toeplitz identity for inner symbols") {
  // constant unit symbol: operator is the constant projection I - xi xi^*
  const VecTrigPoly e1 = VecTrigPoly::constant(Vec::Unit(2, 0));
  CHECK(verify_toeplitz_identity(e1, 3) < 1e-15);

  CHECK(verify_toeplitz_identity(golden_symbol(), 6) <= 1e-12);

  // z times a constant unit vector: the symbol xi xi^* is constant
  Rng rng(43);
  const Vec unit_u = [&rng] {
    Vec v = random_vector(rng, 3);
    return Vec(v / v.norm());
  }();
  const VecTrigPoly zu = VecTrigPoly::constant(unit_u).shifted(1);
  CHECK(verify_toeplitz_identity(zu, 4) <= 1e-12);
  const MatSymbol symbol = rank_one_symbol(zu, zu);
  CHECK((symbol.coeff(0) - unit_u * unit_u.adjoint()).norm() < 1e-14);

  for (int t = 0; t < 10; ++t) {
    const VecTrigPoly xi = random_inner_symbol(rng, 1 + rng.uniform_int(0, 3), 3);
    CHECK(verify_toeplitz_identity(xi, 1 + rng.uniform_int(0, 7)) <= 1e-12);
  }

  CHECK_THROWS_AS(verify_toeplitz_identity(VecTrigPoly::constant(Vec::Ones(2)), 3),
                  std::invalid_argument);
}

TEST_CASE("compressed adjoint on a wedge: golden value and matrix oracle") {
  const VecTrigPoly xi = golden_symbol();
  const VecTrigPoly h = VecTrigPoly::constant(Vec::Ones(2));

  // C*(xi ^. h) = (1/2)(1, 1 - z)
  const VecTrigPoly result = adjoint_on_wedge(xi, xi, h, 4);
  Vec e0(2);
  Vec e1(2);
  e0 << Complex(0.5, 0.0), Complex(0.5, 0.0);
  e1 << Complex(0.0, 0.0), Complex(-0.5, 0.0);
  CHECK((result - VecTrigPoly(2, 0, {e0, e1})).l2_norm() < 1e-13);

  CHECK(adjoint_on_wedge(xi, h, h, 4).l2_norm() == 0.0);

  Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    const int n = 6;
    const VecTrigPoly s = random_trig_poly(rng, 3, 0, 2);
    const VecTrigPoly f = random_trig_poly(rng, 3, 0, 3);
    const VecTrigPoly g = random_trig_poly(rng, 3, 0, 3);
    const OperatorMatrix c = creation(s, n);
    const VecTrigPoly via_matrix = c.adjoint().apply(pointwise_wedge({f, g}));
    const VecTrigPoly via_convolution = adjoint_on_wedge(s, f, g, n);
    CHECK((via_matrix - via_convolution).l2_norm() < 1e-12);
  }

  CHECK_THROWS_AS(adjoint_on_wedge(xi, h.shifted(3), h.shifted(3), 4), std::invalid_argument);
}

TEST_CASE("poc basis: frozen dimensions and defining property") {
  // constant e1 in C^2 at degree 1: complement spanned by e2 and z e2
  const VecTrigPoly e1 = VecTrigPoly::constant(Vec::Unit(2, 0));
  const PocResult constant_case = poc_basis({e1}, 2, 1);
  CHECK(constant_case.dimension() == 2);
  CHECK_FALSE(constant_case.degenerate);
  for (const VecTrigPoly& b : constant_case.basis) {
    for (int k = 0; k <= 1; ++k) CHECK(std::abs(b.coeff(k)[0]) < 1e-12);
  }

  // golden symbol at degree N: dimension N, second component is -z times the first
  for (int n = 2; n <= 5; ++n) {
    const PocResult poc = poc_basis({golden_symbol()}, 2, n);
    CHECK(poc.dimension() == n);
    for (const VecTrigPoly& b : poc.basis) {
      CHECK(scalar_pair(b, golden_symbol()).l2_norm() < 1e-10);
      for (int k = 0; k <= n; ++k) {
        const Complex h1_prev = (k >= 1) ? b.coeff(k - 1)[0] : Complex(0.0, 0.0);
        CHECK(std::abs(b.coeff(k)[1] + h1_prev) < 1e-10);
      }
    }
    // orthonormal output
    for (int i = 0; i < poc.dimension(); ++i) {
      for (int j = 0; j < poc.dimension(); ++j) {
        const Complex g = l2_inner(poc.basis[i], poc.basis[j]);
        CHECK(std::abs(g - (i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0))) < 1e-12);
      }
    }
  }

  // empty symbol list: the full space
  CHECK(poc_basis({}, 2, 3).dimension() == 8);
  CHECK_FALSE(poc_basis({}, 2, 3).degenerate);

  // an identically-zero symbol is degenerate and unconstraining
  const PocResult degenerate = poc_basis({VecTrigPoly::zero(2)}, 2, 1);
  CHECK(degenerate.degenerate);
  CHECK(degenerate.dimension() == 4);

  CHECK_THROWS_AS(poc_basis({VecTrigPoly(2, -1, {Vec::Unit(2, 0)})}, 2, 2), std::domain_error);
}

TEST_CASE("poc counterexample: membership without interior orthogonality") {
  VecTrigPoly g(2, 1, {Vec::Unit(2, 0), Vec::Unit(2, 1)});                       // (z, z^2)
  VecTrigPoly f(2, 0, {Vec::Unit(2, 0), Complex(-1.0, 0.0) * Vec::Unit(2, 1)});  // (1, -z)
  for (int n = 1; n <= 3; ++n) {
    const PocResult poc = poc_basis({g}, 2, n);
    VecTrigPoly projection = VecTrigPoly::zero(2);
    for (const VecTrigPoly& b : poc.basis) projection = projection + b * l2_inner(f, b);
    CHECK((f - projection).l2_norm() < 1e-10 * f.l2_norm());
  }
  const Complex interior = inner(eval(f, Complex(0.5, 0.0)), eval(g, Complex(0.5, 0.0)));
  CHECK(std::abs(std::abs(interior) - 0.375) < 1e-15);
}

TEST_CASE("kernel of the creation operator") {
  // constant e1 at degree 1: kernel spanned by e1 and z e1
  const VecTrigPoly e1 = VecTrigPoly::constant(Vec::Unit(2, 0));
  const auto constant_kernel = kernel_creation(e1, 1);
  CHECK(constant_kernel.size() == 2);
  for (const VecTrigPoly& h : constant_kernel) {
    for (int k = 0; k <= 1; ++k) CHECK(std::abs(h.coeff(k)[1]) < 1e-12);
  }

  // golden symbol at degree 2: kernel is q(z) (1, z) with deg q <= 1
  const auto golden_kernel = kernel_creation(golden_symbol(), 2);
  CHECK(golden_kernel.size() == 2);

  Rng rng(63);
  for (const VecTrigPoly& h : golden_kernel) {
    for (int s = 0; s < 32; ++s) {
      const Complex z = circle_point(rng);
      CHECK(wedge({eval(golden_symbol(), z), eval(h, z)}).norm() < 1e-8);
    }
  }

  // random symbols: kernel members are pointwise parallel on and off the circle
  for (int t = 0; t < 5; ++t) {
    const VecTrigPoly xi = random_trig_poly(rng, 2, 0, 2);
    for (const VecTrigPoly& h : kernel_creation(xi, 4)) {
      for (int s = 0; s < 32; ++s) {
        Complex z = circle_point(rng);
        if (s % 2 == 1) z *= std::sqrt(rng.uniform());
        CHECK(wedge({eval(xi, z), eval(h, z)}).norm() < 1e-8);
      }
    }
  }
}

TEST_CASE("poc lies in the orthocomplement of the pointwise linear span") {
  Rng rng(73);
  for (int t = 0; t < 5; ++t) {
    const VecTrigPoly xi = random_trig_poly(rng, 3, 0, 2);
    const PocResult poc = poc_basis({xi}, 3, 5);
    const auto kernel = kernel_creation(xi, 5);
    for (const VecTrigPoly& p : poc.basis) {
      for (const VecTrigPoly& k : kernel) CHECK(std::abs(l2_inner(p, k)) < 1e-10);
    }
  }
}

TEST_CASE("isometry dichotomy for the golden symbol") {
  const VecTrigPoly xi = golden_symbol();
  const OperatorMatrix c = creation(xi, 3);

  // h = (1, -z) is in the complement; its image has the same norm sqrt(2)
  VecTrigPoly h(2, 0, {Vec::Unit(2, 0), Complex(-1.0, 0.0) * Vec::Unit(2, 1)});
  const VecTrigPoly image = c.apply(h);
  CHECK(std::abs(h.l2_norm() - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(image.l2_norm() - std::sqrt(2.0)) < 1e-15);
  // the image is -sqrt(2) z on the wedge coordinate
  CHECK(std::abs(image.coeff(1)[0] + Complex(std::sqrt(2.0), 0.0)) < 1e-15);

  // h = xi wedges itself away
  CHECK(c.apply(xi).l2_norm() < 1e-15);
  CHECK(xi.l2_norm() == doctest::Approx(1.0).epsilon(1e-15));

  const IsometryReport report = isometry_set_check(xi, 5, 100, 2024);
  CHECK(report.misclassified == 0);
  CHECK(report.poc_trials + report.general_trials == 100);
  CHECK(report.max_equality_deviation <= 1e-10);
  CHECK(report.min_margin > 1e-10);

  CHECK_THROWS_AS(isometry_set_check(VecTrigPoly::constant(Vec::Ones(2)), 3, 10, 1),
                  std::invalid_argument);
}

TEST_CASE("multiwedge isometry on pointwise orthonormal families") {
  // constants e1, e2 in C^3 against p(z) e3: equal norms
  const VecTrigPoly e1 = VecTrigPoly::constant(Vec::Unit(3, 0));
  const VecTrigPoly e2 = VecTrigPoly::constant(Vec::Unit(3, 1));
  Rng rng(83);
  VecTrigPoly p = random_trig_poly(rng, 1, 0, 4);
  VecTrigPoly f = VecTrigPoly(3, 0, {Vec::Zero(3)});
  {
    std::vector<Vec> coeffs;
    for (int k = 0; k <= p.kmax(); ++k) {
      Vec c = Vec::Zero(3);
      c[2] = p.coeff(k)[0];
      coeffs.push_back(c);
    }
    f = VecTrigPoly(3, 0, coeffs);
  }
  const VecTrigPoly w = pointwise_wedge({e1, e2, f});
  CHECK(std::abs(w.l2_norm() - p.l2_norm()) < 1e-12);

  const IsometryReport report = multiwedge_isometry_check(blocked_family_c4(), 5, 60, 99);
  CHECK(report.misclassified == 0);
  CHECK(report.max_equality_deviation <= 1e-10);
  CHECK(report.min_margin >= -1e-10);
  CHECK(report.poc_dimension == 10);  // h2 = -z h1 and h4 = -z h3 at degree 5

  // a family that is not pointwise orthonormal is rejected with the deviation
  const std::vector<VecTrigPoly> bad = {e1, e1};
  CHECK_THROWS_WITH_AS(multiwedge_isometry_check(bad, 3, 10, 1), doctest::Contains("deviation"),
                       std::invalid_argument);
}

TEST_CASE("shift formula and the failure of the projection property") {
  for (int n = 2; n <= 6; ++n) {
    const ShiftFormulaReport report = partial_isometry_counterexample(n);
    CHECK(report.formula_deviation <= 1e-12);
    CHECK(report.square_formula_deviation <= 1e-12);
    CHECK(std::abs(report.projection_defect - 0.25) <= 1e-12);
    CHECK(report.selfadjoint_deviation <= 1e-13);
    CHECK(report.eigenvalue_min >= -1e-12);
    CHECK(report.eigenvalue_max <= 1.0 + 1e-12);
    CHECK(report.constant_entry_deviation <= 1e-12);
  }
  CHECK_THROWS_AS(partial_isometry_counterexample(1), std::invalid_argument);
}

TEST_CASE("degenerate zero symbol") {
  const VecTrigPoly zero = VecTrigPoly::zero(2);
  const OperatorMatrix c = creation(zero, 2);
  CHECK(max_abs(c.entries()) == 0.0);
  CHECK(kernel_creation(zero, 2).size() == 6);  // everything
  const PocResult poc = poc_basis({zero}, 2, 2);
  CHECK(poc.degenerate);
  CHECK(poc.dimension() == 6);  // everything
}

TEST_CASE("operator matrix space checks") {
  const SpaceDescriptor a{2, 1, 1};
  const SpaceDescriptor b{1, 2, 2};
  const OperatorMatrix zero = OperatorMatrix::zero(a, b);
  CHECK(zero.adjoint().domain() == b);
  CHECK_THROWS_AS(zero * zero, std::invalid_argument);
  CHECK_THROWS_AS(zero + zero.adjoint(), std::invalid_argument);
  CHECK_THROWS_AS(OperatorMatrix(a, b, Mat::Zero(2, 2)), std::invalid_argument);
}
