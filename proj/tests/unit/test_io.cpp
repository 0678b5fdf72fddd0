#include "slicereg/error.hpp"
#include "slicereg/expression.hpp"
#include "slicereg/json_io.hpp"
#include "test_support.hpp"

using namespace slicereg;
using testing::check_close;

namespace {

void check_same(const RegularSeries& a, const RegularSeries& b, double tol = 1e-15) {
  REQUIRE(a.coeffs().size() == b.coeffs().size());
  for (std::size_t n = 0; n < a.coeffs().size(); ++n) check_close(a.coeffs()[n], b.coeffs()[n], tol);
}

}  // namespace

TEST_CASE("expression parser") {
  const RegularSeries parabola({Quaternion{}, kI, kOne});
  check_same(parse_polynomial("q^2 + q*i"), parabola);
  check_same(parse_polynomial("q² + qi"), parabola);
  check_same(parse_polynomial("qq + iq"), parabola);
  check_same(parse_polynomial("(q - i)*(q - j)"), RegularSeries({kK, -(kI + kJ), kOne}));
  check_same(parse_polynomial("(q−i)(q−j)"), RegularSeries({kK, -(kI + kJ), kOne}));
  check_same(parse_polynomial("q^2 + 1"), RegularSeries({kOne, Quaternion{}, kOne}));
  check_same(parse_polynomial("-q"), RegularSeries({Quaternion{}, -kOne}));
  check_same(parse_polynomial("-q^2"), RegularSeries({Quaternion{}, Quaternion{}, -kOne}));
  check_same(parse_polynomial("2.5e-1 q³"), RegularSeries({Quaternion{}, Quaternion{}, Quaternion{}, Quaternion{0.25}}));
  check_same(parse_polynomial("(q-5)^3"), star_mul(star_mul(RegularSeries::linear(Quaternion{5.0}),
                                                            RegularSeries::linear(Quaternion{5.0})),
                                                   RegularSeries::linear(Quaternion{5.0})));
  check_same(parse_polynomial("q ⋆ j"), RegularSeries({Quaternion{}, kJ}));
  check_same(parse_polynomial("5"), RegularSeries::constant(Quaternion{5.0}));
  check_same(parse_polynomial("ij"), RegularSeries::constant(kK));
  check_same(parse_polynomial("ji"), RegularSeries::constant(-kK));
  check_same(parse_polynomial("q^0"), RegularSeries::constant(kOne));
  CHECK(parse_polynomial("q - q").is_zero());

  for (const char* bad : {"", "q +", "(q", "q)", "q ^ 1.5", "x", "q^-1", "2 ^ q"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_polynomial(bad), Error);
  }
}

TEST_CASE("JSON round trips") {
  const Quaternion q{1.5, -2, 0.25, 3};
  CHECK(quaternion_from_json(to_json(q)) == q);
  CHECK(to_json(q).dump() == "[1.5,-2.0,0.25,3.0]");
  CHECK(complex_from_json(to_json(Complex{1, -2})) == Complex{1, -2});
  CHECK(complex_from_json(Json(3.0)) == Complex{3.0, 0.0});

  const auto f = testing::random_polynomial(4);
  check_same(series_from_json(to_json(f)), f, 0.0);
  CHECK(to_json(f)["radius"] == "inf");
  const RegularSeries g({kOne, kJ}, 2.0);
  CHECK(series_from_json(to_json(g)).radius() == 2.0);
  check_same(series_from_json(parse_json(R"({"coeffs": [[0,0,0,0],[0,1,0,0],[1,0,0,0]]})")),
             RegularSeries({Quaternion{}, kI, kOne}));

  const KleinPoint zeta({1.0, Complex{0, 2}, 3.0, 4.0, 5.0, Complex{6, -1}});
  CHECK(klein_point_from_json(to_json(zeta)).coords() == zeta.coords());
  const ProjectivePoint3 z(1.0, 2.0, Complex{0, 1}, 0.5);
  CHECK(projective_point_from_json(to_json(z)).projectively_equal(z, 0.0));

  RealLinearMap4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.matrix(r, c) = 4 * r + c;
  CHECK(to_json(m)[1] == 1.0);
  CHECK(to_json(m)[4] == 4.0);
  CHECK(linear_map_from_json(to_json(m)).matrix == m.matrix);

  const std::vector<CurveSample> curve{{Complex{0.5, 0.1}, zeta}};
  const auto back = curve_from_json(to_json(curve));
  REQUIRE(back.size() == 1);
  CHECK(back[0].v == curve[0].v);
}

TEST_CASE("malformed JSON is an InvalidArgument error") {
  for (const char* text : {R"([1,2,3])", R"({"coeffs": 3})", R"({"coeffs": [[1,2]]})",
                           R"({"coeffs": [[1,0,0,0]], "radius": "big"})", R"({"coeffs": [["a",0,0,0]]})"}) {
    INFO(text);
    try {
      series_from_json(parse_json(text));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
  }
  CHECK_THROWS_AS(parse_json("{not json"), Error);
  CHECK_THROWS_AS(quaternion_from_json(parse_json("[1,2,3]")), Error);
}

TEST_CASE("zero set encoding") {
  const auto j = to_json(zeros(parse_polynomial("(q^2+1)(q-2j)")));
  CHECK(j["total_multiplicity"] == 3);
  CHECK(j["spheres"].size() == 1);
  CHECK(j["spheres"][0]["multiplicity"] == 2);
  CHECK(j["points"][0]["multiplicity"] == 1);
}
