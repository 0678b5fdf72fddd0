#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "slicereg/differential.hpp"
#include "slicereg/error.hpp"
#include "slicereg/parabola.hpp"
#include "test_support.hpp"

using namespace slicereg;
using testing::check_close;

namespace {

constexpr Complex I1{0.0, 1.0};

Quaternion random_generic_target() {
  Quaternion c = testing::random_quaternion(2.0);
  while (std::abs(c.x) < 1e-2 || std::abs(Complex(c.y, c.z)) < 1e-2) c = testing::random_quaternion(2.0);
  return c;
}

Quaternion random_on_paraboloid() {
  const double x2 = testing::uniform(-1.5, 1.5), x3 = testing::uniform(-1.5, 1.5);
  return {0.25 - x2 * x2 - x3 * x3, 0.0, x2, x3};
}

// Independent discriminant: prod_{i<j} (r_i - r_j)^2 for the monic quartic R.
double discriminant_from_roots(const Quaternion& c) {
  const auto roots = poly_roots(std::span<const double>(fiber_quartic(c)), 3);
  Complex d = 1.0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) d *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
  return d.real();
}

Eigen::Vector4cd random_cvec() {
  return {testing::random_complex(), testing::random_complex(), testing::random_complex(), testing::random_complex()};
}

}  // namespace

TEST_CASE("f_par examples") {
  for (double t : {-2.0, -0.3, 0.0, 1.7}) check_close(f_par(Quaternion{t}), Quaternion{t * t, t}, 1e-15);
  check_close(f_par(Quaternion{0, -0.5, 1, 0}), Quaternion{-0.75, 0, 0, -1}, 1e-15);
  check_close(f_par(Quaternion{}), Quaternion{});
  for (int trial = 0; trial < 50; ++trial) {
    const Quaternion q = testing::random_quaternion();
    check_close(f_par(q), eval(parabola_series(), q), 1e-14);
  }
}

TEST_CASE("preimage examples") {
  auto p = preimages(Quaternion{});
  REQUIRE(p.size() == 2);
  std::sort(p.begin(), p.end(), [](const Quaternion& a, const Quaternion& b) { return a.x > b.x; });
  check_close(p[0], Quaternion{}, 1e-14);
  check_close(p[1], -kI, 1e-14);

  p = preimages(kOne);
  REQUIRE(p.size() == 2);
  std::sort(p.begin(), p.end(), [](const Quaternion& a, const Quaternion& b) { return a.w > b.w; });
  check_close(p[0], Quaternion{std::sqrt(3.0) / 2, -0.5}, 1e-14);
  check_close(p[1], Quaternion{-std::sqrt(3.0) / 2, -0.5}, 1e-14);

  p = preimages(Quaternion{-0.75, 0, 0, -1});
  REQUIRE(p.size() == 1);
  check_close(p[0], Quaternion{0, -0.5, 1, 0}, 1e-7);

  REQUIRE(preimages(Quaternion{0.25}).size() == 1);
  check_close(preimages(Quaternion{0.25})[0], -kI * 0.5, 1e-7);
}

TEST_CASE("f is a double cover branched over the paraboloid") {
  for (int trial = 0; trial < 1000; ++trial) {
    const Quaternion c = random_generic_target();
    const auto p = preimages(c);
    REQUIRE(p.size() == 2);
    for (const auto& q : p) CHECK(distance(f_par(q), c) <= 1e-9 * (1.0 + c.norm()));
    CHECK(distance(p[0], p[1]) > 1e-5);
    // exactly one preimage in each open half-space
    CHECK(p[0].real() * p[1].real() < 0.0);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion c = random_on_paraboloid();
    const auto p = preimages(c);
    CHECK(p.size() == 1);
    CHECK(distance(f_par(p.front()), c) <= 1e-9 * (1.0 + c.norm()));
  }
  // points of gamma have the two preimages t and -t - i
  for (double t : {-1.5, 0.4, 2.0}) {
    const auto p = preimages(Quaternion{t * t, t});
    REQUIRE(p.size() == 2);
    const bool ordered = distance(p[0], Quaternion{t}) < 1e-12;
    check_close(ordered ? p[0] : p[1], Quaternion{t}, 1e-12);
    check_close(ordered ? p[1] : p[0], Quaternion{-t, -1}, 1e-12);
  }
}

TEST_CASE("paraboloid predicates") {
  CHECK(on_paraboloid(Quaternion{0.25}));
  CHECK(in_solid(Quaternion{0.25}));
  CHECK(on_paraboloid(kJ * 0.5));
  CHECK_FALSE(on_paraboloid(kOne));
  CHECK_FALSE(in_solid(kOne));
  CHECK(in_solid(Quaternion{-1.0}));
  CHECK(in_solid_interior(Quaternion{-1.0}));
  CHECK_FALSE(in_solid_interior(Quaternion{0.25}));
  CHECK_FALSE(in_solid(Quaternion{-1.0, 0.1}));
  CHECK(on_parabola(Quaternion{4.0, -2.0}));
  CHECK_FALSE(on_parabola(Quaternion{4.0, 2.0, 0.1}));
}

TEST_CASE("singular set of f is the plane -i/2 + jR + kR") {
  const RegularSeries f = parabola_series();
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion q{0, -0.5, testing::uniform(-2, 2), testing::uniform(-2, 2)};
    if (q.imag_norm() < 0.55) continue;
    CHECK(is_singular(f, q));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const Quaternion q = testing::random_quaternion(2.0);
    if (std::abs(q.w) < 1e-3 && std::abs(q.x + 0.5) < 1e-3) continue;
    CHECK_FALSE(is_singular(f, q));
  }
  CHECK_FALSE(is_degenerate_sphere(f, {0.0, 1.0}));
}

TEST_CASE("branching near a singular point") {
  const Quaternion q0{0, -0.5, 1, 0};
  for (int trial = 0; trial < 200; ++trial) {
    const Quaternion q1 = q0 + testing::random_unit() * testing::uniform(0.001, 0.1);
    const auto p = preimages(f_par(q1));
    REQUIRE(p.size() == 2);
    // both lie in the axially symmetric neighborhood of the sphere through q0
    for (const auto& q : p) CHECK(std::hypot(q.real(), q.imag_norm() - q0.imag_norm()) <= 0.1);
  }
}

TEST_CASE("J+ and J- spot values") {
  check_close(j_plus(kOne).unit(), -kI, 1e-12);
  check_close(j_minus(kOne).unit(), -kI, 1e-12);
  check_close(j_plus(kI * 2.0).unit(), kI, 1e-12);
  check_close(j_minus(kI * 2.0).unit(), -kI, 1e-12);
  const Quaternion branch_unit = (-kI + kJ * 2.0) / std::sqrt(5.0);
  check_close(j_plus(Quaternion{-0.75, 0, 0, -1}).unit(), branch_unit, 1e-7);
  check_close(j_minus(Quaternion{-0.75, 0, 0, -1}).unit(), branch_unit, 1e-7);

  for (int trial = 0; trial < 50; ++trial) {
    const Quaternion c = random_on_paraboloid();
    if (distance(c, Quaternion{0.25}) < 1e-3) continue;
    check_close(j_plus(c).unit(), j_minus(c).unit(), 1e-6);
  }

  for (const Quaternion bad : {Quaternion{1.0, 1.0}, Quaternion{-1.0}, Quaternion{}}) {
    try {
      j_plus(bad);
      FAIL("expected DomainError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DomainError);
    }
  }
}

TEST_CASE("four structures are distinct off L_i") {
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion c = random_generic_target();
    const Quaternion a = j_plus(c).unit(), b = j_minus(c).unit();
    const std::array<Quaternion, 4> four{a, b, -a, -b};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) CHECK(distance(four[i], four[j]) > 1e-6);
  }
}

TEST_CASE("quartic K") {
  CHECK(std::abs(quartic_K(ProjectivePoint3(1.0, 1.0, Complex{1, 1}, Complex{1, -1}))) < 1e-15);
  CHECK(quartic_K(ProjectivePoint3(1.0, 0.0, 1.0, 0.0)) == 0.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex u = testing::random_complex(2.0), v = testing::random_complex(2.0);
    const ProjectivePoint3 z = lift(parabola_series(), u, v);
    CHECK(std::abs(quartic_K(z)) <= 1e-9);
  }
  CHECK(std::abs(quartic_K(ProjectivePoint3(1.0, 2.0, 3.0, 4.0))) > 1e-3);
}

TEST_CASE("K gradient and Hessian match finite differences") {
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Vector4cd z = random_cvec();
    const Eigen::Vector4cd grad = quartic_K_gradient(z);
    const Eigen::Matrix4cd hess = quartic_K_hessian(z);
    const double h = 1e-5;
    for (int n = 0; n < 4; ++n) {
      Eigen::Vector4cd e = Eigen::Vector4cd::Zero();
      e(n) = h;
      const Complex fd = (quartic_K(Eigen::Vector4cd(z + e)) - quartic_K(Eigen::Vector4cd(z - e))) / (2.0 * h);
      CHECK(std::abs(fd - grad(n)) <= 1e-8);
      const Eigen::Vector4cd gd = (quartic_K_gradient(z + e) - quartic_K_gradient(z - e)) / (2.0 * h);
      CHECK((gd - hess.col(n)).cwiseAbs().maxCoeff() <= 1e-8);
    }
    CHECK((hess - hess.transpose()).norm() == 0.0);
  }
}

TEST_CASE("Hessian minor along m13") {
  for (int trial = 0; trial < 20; ++trial) {
    const Complex z0 = testing::random_complex(), z2 = testing::random_complex();
    const Eigen::Matrix4cd h = quartic_K_hessian(Eigen::Vector4cd(z0, 0.0, z2, 0.0));
    const Complex minor = h(1, 1) * h(3, 3) - h(1, 3) * h(3, 1);
    CHECK(std::abs(minor - 4.0 * z0 * z0 * z0 * (4.0 * z2 - z0)) <= 1e-12);
  }
}

TEST_CASE("singular locus classification") {
  CHECK(singular_locus_class(ProjectivePoint3(0.0, 0.0, 1.0, 7.0)) == SingularClass::Cusp);
  CHECK(singular_locus_class(ProjectivePoint3(1.0, 0.0, 0.25, 0.0)) == SingularClass::Cusp);
  CHECK(singular_locus_class(ProjectivePoint3(0.0, 1.0, 0.0, 0.25)) == SingularClass::Cusp);
  CHECK(singular_locus_class(ProjectivePoint3(1.0, 0.0, 3.0, 0.0)) == SingularClass::DoubleCurve);
  CHECK(singular_locus_class(ProjectivePoint3(0.0, 1.0, 0.0, -2.0)) == SingularClass::DoubleCurve);
  for (int n = 0; n < 4; ++n) {
    std::array<Complex, 4> v{};
    v[static_cast<std::size_t>(n)] = 1.0;
    CHECK(singular_locus_class(ProjectivePoint3(v)) == SingularClass::PinchPoint);
  }
  CHECK(singular_locus_class(lift(parabola_series(), Complex{0.3, 0.1}, Complex{0.2, 0.5})) == SingularClass::Smooth);
  CHECK_THROWS_AS(singular_locus_class(ProjectivePoint3(1.0, 2.0, 3.0, 4.0)), Error);

  // the gradient vanishes on the three lines and nowhere else on sampled smooth points
  for (int trial = 0; trial < 100; ++trial) {
    const Complex a = testing::random_complex(), b = testing::random_complex();
    for (const Eigen::Vector4cd& z :
         {Eigen::Vector4cd(0.0, 0.0, a, b), Eigen::Vector4cd(0.0, a, 0.0, b), Eigen::Vector4cd(a, 0.0, b, 0.0)})
      CHECK(quartic_K_gradient(z).cwiseAbs().maxCoeff() <= 1e-12);
    const auto smooth = lift(parabola_series(), testing::random_complex(), testing::random_complex());
    CHECK(singular_locus_class(smooth) == SingularClass::Smooth);
  }
}

TEST_CASE("discriminant") {
  for (int trial = 0; trial < 1000; ++trial) {
    const Quaternion c = testing::random_quaternion(1.5);
    const double oracle = discriminant_from_roots(c);
    const double d = discriminant_D(c);
    CHECK(std::abs(oracle - 16.0 * d) <= 1e-8 * std::max(1.0, std::abs(oracle)));
    CHECK(std::abs(d) > 1e-9);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion c = random_on_paraboloid();
    CHECK(std::abs(discriminant_D(c)) <= 1e-9 * std::pow(1.0 + c.norm2(), 3));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Quaternion c{testing::uniform(-2, 2), 0.0, testing::uniform(-2, 2), testing::uniform(-2, 2)};
    const double C = c.norm2();
    const double r = -1 + 4 * C + 4 * c.w - 4 * c.w * c.w;
    CHECK(std::abs(discriminant_D(c) - C * r * r) <= 1e-9 * std::pow(1.0 + C, 3));
  }
  const auto r = fiber_quartic(kJ * 0.5);
  CHECK(r == std::vector<double>{0.25, 0.0, 1.0, 0.0, 1.0});
}

TEST_CASE("fiber intersection examples") {
  const auto half_j = fiber_intersections(kJ * 0.5);
  CHECK(half_j.kind == FiberClass::OnParaboloid);
  for (const Complex v : half_j.parameters)
    CHECK(std::min(std::abs(v - I1 / std::sqrt(2.0)), std::abs(v + I1 / std::sqrt(2.0))) < 1e-7);

  const auto generic = fiber_intersections(Quaternion{1, 0, 1, 0});
  CHECK(generic.kind == FiberClass::GenericFour);
  CHECK(std::abs(generic.discriminant - 98.0) < 1e-12);
  REQUIRE(generic.parameters.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) CHECK(std::abs(generic.parameters[i] - generic.parameters[j]) > 1e-3);

  CHECK(fiber_intersections(Quaternion{}).kind == FiberClass::OnParabola);
  CHECK(fiber_intersections(Quaternion{4.0, -2.0}).kind == FiberClass::OnParabola);
  CHECK(fiber_intersections(kOne).kind == FiberClass::OnPlaneLi);
  CHECK(fiber_intersections(Quaternion{-1.0, 0.5}).kind == FiberClass::OnPlaneLi);
  CHECK(fiber_intersections(Quaternion{0.25}).kind == FiberClass::AtFocus);
}

TEST_CASE("generic fibers meet K in four points") {
  for (int trial = 0; trial < 200; ++trial) {
    const Quaternion c = random_generic_target();
    const auto fi = fiber_intersections(c);
    REQUIRE(fi.kind == FiberClass::GenericFour);
    REQUIRE(fi.points.size() == 4);
    for (const auto& z : fi.points) {
      CHECK(std::abs(quartic_K(z)) <= 1e-8);
      CHECK(twistor_project(z).equals(HP1Point::affine(c), 1e-8));
    }
    // the axis points lie on the fiber
    CHECK(twistor_project(fi.z1_axis_point).equals(HP1Point::affine(c), 1e-12));
    CHECK(twistor_project(fi.z0_axis_point).equals(HP1Point::affine(c), 1e-12));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Quaternion c = random_on_paraboloid();
    if (distance(c, Quaternion{0.25}) < 1e-3) continue;
    CHECK(fiber_intersections(c).kind == FiberClass::OnParaboloid);
  }
}

TEST_CASE("rulings over v and i - v meet on m02") {
  for (int trial = 0; trial < 100; ++trial) {
    const Complex v = testing::random_complex();
    if (std::abs(v - I1 / 2.0) < 1e-2) continue;
    const auto a = lift(parabola_series(), std::nullopt, v);
    const auto b = lift(parabola_series(), std::nullopt, I1 - v);
    CHECK(a.projectively_equal(b, 1e-12));
    CHECK(std::abs(a[0]) == 0.0);
    CHECK(std::abs(a[2]) <= 1e-15);
  }
}

TEST_CASE("osculating sphere") {
  check_close(osculating_sphere_point(Complex{0.0}), Quaternion{-0.75});
  check_close(osculating_sphere_point(std::nullopt), Quaternion{0.25});
  check_close(osculating_sphere_point(Complex{1e8}), Quaternion{0.25}, 1e-7);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex u = testing::random_complex(3.0);
    const Quaternion p = osculating_sphere_point(u);
    CHECK(std::abs((p.w + 0.25) * (p.w + 0.25) + p.y * p.y + p.z * p.z - 0.25) <= 1e-14);
    CHECK(p.x == 0.0);
    // image of the point of the sphere S/2 in the chart
    check_close(f_par(phi(u, Complex{0.0, 0.5})), p, 1e-13);
  }
}
