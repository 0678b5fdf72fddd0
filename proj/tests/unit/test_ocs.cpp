#include <cmath>

#include "slicereg/error.hpp"
#include "slicereg/ocs.hpp"
#include "test_support.hpp"

using namespace slicereg;
using testing::check_close;

namespace {

RegularSeries parabola_map() { return RegularSeries({Quaternion{}, kI, kOne}); }

Quaternion random_nonreal(double scale = 1.0) {
  Quaternion q = testing::random_quaternion(scale);
  while (q.imag_norm() < 0.05) q = testing::random_quaternion(scale);
  return q;
}

}  // namespace

TEST_CASE("j_standard") {
  check_close(j_standard(kJ).unit(), kJ);
  check_close(j_standard(Quaternion{1, 2, 0, 0}).unit(), kI);
  CHECK_THROWS_AS(j_standard(Quaternion{3.0}), Error);
  try {
    j_standard(Quaternion{3.0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RealArgument);
  }
}

TEST_CASE("OCSValue is an orthogonal complex structure") {
  for (int trial = 0; trial < 200; ++trial) {
    const OCSValue J = j_standard(random_nonreal());
    const Quaternion v = testing::random_quaternion();
    CHECK(std::abs(J.apply(v).norm() - v.norm()) <= 1e-14);
    check_close(J.apply(J.apply(v)), -v, 1e-14);
    const Eigen::Matrix4d m = J.matrix();
    CHECK((m * m + Eigen::Matrix4d::Identity()).norm() <= 1e-14);
    CHECK((m.transpose() * m - Eigen::Matrix4d::Identity()).norm() <= 1e-14);

    // the adapted basis is orthonormal and realizes the constant block matrix
    const auto basis = J.adapted_basis();
    Eigen::Matrix4d change;
    for (int c = 0; c < 4; ++c) {
      const Quaternion b = basis[static_cast<std::size_t>(c)];
      change.col(c) << b.w, b.x, b.y, b.z;
    }
    CHECK((change.transpose() * change - Eigen::Matrix4d::Identity()).norm() <= 1e-13);
    CHECK((change.transpose() * m * change - OCSValue::adapted_matrix()).norm() <= 1e-13);
  }
}

TEST_CASE("induced_ocs examples") {
  const auto id = induced_ocs(RegularSeries::identity(), kJ);
  check_close(id.image, kJ);
  check_close(id.structure.unit(), kJ);

  const auto at_one = induced_ocs(parabola_map(), Quaternion{std::sqrt(3.0) / 2, -0.5, 0, 0});
  check_close(at_one.image, kOne, 1e-14);
  check_close(at_one.structure.unit(), -kI);

  const auto at_j = induced_ocs(parabola_map(), kJ);
  check_close(at_j.image, Quaternion{-1, 0, 0, -1});
  check_close(at_j.structure.unit(), kJ);

  CHECK_THROWS_AS(induced_ocs(parabola_map(), Quaternion{2.0}), Error);
  try {
    induced_ocs(parabola_map(), Quaternion{0, -0.5, 1, 0});
    FAIL("expected SingularPoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularPoint);
  }
}

TEST_CASE("mobius examples") {
  for (int trial = 0; trial < 20; ++trial) {
    const Quaternion q = testing::random_quaternion();
    check_close(mobius(MobiusCoeffs::identity(), q), q);
  }
  const MobiusCoeffs inversion(Quaternion{}, kOne, kOne, Quaternion{});
  check_close(mobius(inversion, kI * 2.0), -kI * 0.5);
  check_close(mobius(MobiusCoeffs(kOne, kI, Quaternion{}, kOne), kJ), kJ + kI);
  CHECK_THROWS_AS(mobius(inversion, Quaternion{}), Error);
  CHECK_THROWS_AS(MobiusCoeffs(kOne, kOne, kOne, kOne), Error);
  CHECK_THROWS_AS(MobiusCoeffs(kI, kJ, kI * 2.0, kJ * 2.0), Error);
}

TEST_CASE("invertibility scalar matches the real 2x2 determinant for real coefficients") {
  for (int trial = 0; trial < 100; ++trial) {
    const double a = testing::uniform(), b = testing::uniform(), c = testing::uniform(), d = testing::uniform();
    const double det = a * d - b * c;
    CHECK(std::abs(MobiusCoeffs::invertibility_scalar(a, b, c, d) - det * det) <= 1e-14);
  }
}

TEST_CASE("is_so2h") {
  CHECK(is_so2h(MobiusCoeffs::identity()));
  const Quaternion eps = Quaternion{0, 1, 1, 0} / std::sqrt(2.0);
  CHECK(is_so2h(MobiusCoeffs(eps * 2.0, eps, eps, eps * 3.0)));
  CHECK_FALSE(is_so2h(MobiusCoeffs(kI, kJ, Quaternion{}, kOne)));
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion e = testing::random_unit();
    const double a = testing::uniform(), b = testing::uniform(), c = testing::uniform(), d = testing::uniform();
    if (std::abs(a * d - b * c) < 1e-3) continue;
    CHECK(is_so2h(MobiusCoeffs(e * a, e * b, e * c, e * d)));
  }
}

TEST_CASE("SO(2,H) maps preserve the complement of the real axis") {
  for (int trial = 0; trial < 200; ++trial) {
    const Quaternion e = testing::random_unit();
    const double a = testing::uniform(), b = testing::uniform(), c = testing::uniform(), d = testing::uniform();
    if (std::abs(a * d - b * c) < 1e-2) continue;
    const MobiusCoeffs m(e * a, e * b, e * c, e * d);
    const Quaternion q = random_nonreal();
    const Quaternion den = q * m.c() + m.d();
    if (den.norm() < 1e-3) continue;
    CHECK(mobius(m, q).imag_norm() > 0.0);
  }
}

TEST_CASE("real Mobius maps send spheres to spheres") {
  for (int trial = 0; trial < 50; ++trial) {
    const double a = testing::uniform(), b = testing::uniform(), c = testing::uniform(), d = testing::uniform();
    if (std::abs(a * d - b * c) < 1e-2) continue;
    const MobiusCoeffs m(a, b, c, d);
    const Sphere s{testing::uniform(), testing::uniform(0.1, 1.0)};
    const Quaternion first = mobius(m, s.point(kI));
    const Sphere target = sphere_of(first);
    for (int n = 0; n < 8; ++n) {
      const Quaternion u = testing::random_quaternion().imag();
      if (u.norm() < 1e-2) continue;
      CHECK(target.contains(mobius(m, s.point(u / u.norm())), 1e-10));
    }
  }
}

TEST_CASE("conj_by_unit") {
  const Quaternion q = testing::random_quaternion();
  check_close(conj_by_unit(kOne, q), q);
  check_close(conj_by_unit(kK, kI), -kI);
  check_close(conj_by_unit(kJ, Quaternion{2.5}), Quaternion{2.5});
  CHECK_THROWS_AS(conj_by_unit(Quaternion{2.0}, q), Error);
}

TEST_CASE("conjugation by a unit transports the standard structure") {
  for (int trial = 0; trial < 500; ++trial) {
    const Quaternion eps = testing::random_unit();
    const Quaternion q = random_nonreal();
    const Quaternion lhs = j_standard(conj_by_unit(eps, q)).unit();
    const Quaternion rhs = conj_by_unit(eps, j_standard(q).unit());
    check_close(lhs, rhs, 1e-12);
  }
}
