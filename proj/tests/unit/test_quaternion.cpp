#include <cmath>

#include "slicereg/error.hpp"
#include "test_support.hpp"

using namespace slicereg;
using testing::check_close;

TEST_CASE("Hamilton product relations") {
  check_close(kI * kJ, kK);
  check_close(kJ * kK, kI);
  check_close(kK * kI, kJ);
  check_close(kJ * kI, -kK);
  check_close(mul(kOne + kI, kOne + kJ), Quaternion{1, 1, 1, 1});
}

TEST_CASE("conjugation reverses products exactly on integer quaternions") {
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const Quaternion p{double(d(testing::rng())), double(d(testing::rng())), double(d(testing::rng())),
                       double(d(testing::rng()))};
    const Quaternion q{double(d(testing::rng())), double(d(testing::rng())), double(d(testing::rng())),
                       double(d(testing::rng()))};
    CHECK((p * q).conj() == q.conj() * p.conj());
  }
}

TEST_CASE("associativity and norm on random triples") {
  for (int t = 0; t < 500; ++t) {
    const auto a = testing::random_quaternion(3.0);
    const auto b = testing::random_quaternion(3.0);
    const auto c = testing::random_quaternion(3.0);
    const auto lhs = (a * b) * c;
    CHECK(distance(lhs, a * (b * c)) <= 1e-12 * std::max(1.0, lhs.norm()));
    CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) <= 1e-12 * std::max(1.0, (a * b).norm()));
  }
  CHECK(Quaternion{}.norm2() == 0.0);
}

TEST_CASE("imag_unit") {
  check_close(imag_unit({1, 2, 0, 0}), kI);
  check_close(imag_unit(kJ), kJ);
  CHECK_THROWS_AS(imag_unit(Quaternion{3.0}), Error);
  try {
    imag_unit(Quaternion{3.0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RealArgument);
  }
  for (int t = 0; t < 200; ++t) {
    const Quaternion unit = imag_unit(testing::random_quaternion());
    check_close(unit * unit, Quaternion{-1.0});
  }
}

TEST_CASE("sphere_of") {
  const Sphere a = sphere_of({2, 0, 3, 0});
  CHECK(a.x == 2.0);
  CHECK(a.y == 3.0);
  const Sphere b = sphere_of(Quaternion{5.0});
  CHECK(b.x == 5.0);
  CHECK(b.y == 0.0);
  const Sphere c = sphere_of(kI);
  CHECK(c.x == 0.0);
  CHECK(c.y == 1.0);
}

TEST_CASE("phi chart") {
  check_close(phi(Complex{0, 0}, Complex{2, 3}), Quaternion{2, 3});
  check_close(phi(Complex{1, 0}, Complex{0, 1}), kK);
  for (int t = 0; t < 20; ++t) check_close(phi(testing::random_complex(4.0), Complex{1.5, 0}), Quaternion{1.5});

  const ChartPoint a = phi_inverse({2, 3, 0, 0});
  REQUIRE(a.u);
  CHECK(std::abs(*a.u) <= 1e-15);
  CHECK(std::abs(a.v - Complex{2, 3}) <= 1e-15);

  const ChartPoint b = phi_inverse(kK);
  REQUIRE(b.u);
  CHECK(std::abs(*b.u - Complex{1, 0}) <= 1e-15);
  CHECK(std::abs(b.v - Complex{0, 1}) <= 1e-15);

  const ChartPoint c = phi_inverse(-kI);
  CHECK_FALSE(c.u);
  CHECK(std::abs(c.v - Complex{0, 1}) <= 1e-15);
  CHECK_THROWS_AS(phi(c), Error);
  CHECK_THROWS_AS(phi_inverse(Quaternion{4.0}), Error);
}

TEST_CASE("phi round trip and conjugate charts") {
  for (int t = 0; t < 1000; ++t) {
    const Quaternion q = testing::random_quaternion(2.0);
    const ChartPoint c = phi_inverse(q);
    REQUIRE(c.u);
    check_close(phi(c), q, 1e-12);
    // phi(u, v) and phi(u, conj v) are quaternion conjugates.
    check_close(phi(*c.u, std::conj(c.v)), phi(c).conj(), 1e-12);
  }
}

TEST_CASE("conjugation by a unit is a rotation fixing the real part") {
  for (int t = 0; t < 200; ++t) {
    const Quaternion e = testing::random_unit();
    const Quaternion q = testing::random_quaternion(3.0);
    const Quaternion r = e.inverse() * q * e;
    CHECK(std::abs(r.real() - q.real()) <= 1e-12);
    CHECK(std::abs(r.norm() - q.norm()) <= 1e-12);
  }
}
