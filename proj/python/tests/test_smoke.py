import cmath
import math

import pytest

import slicereg as sr


def close(a, b, tol=1e-12):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def test_eval_parabola_at_j():
    assert close(sr.eval("q^2 + qi", (0, 0, 1, 0)), (-1, 0, 0, -1))


def test_expression_and_coefficients_agree():
    coeffs = sr.parse("(q - i)*(q - j)")
    assert close(sr.eval(coeffs, (1, 2, 3, 4)), sr.eval("(q - i)*(q - j)", (1, 2, 3, 4)))


def test_zeros_of_examples():
    sphere = sr.zeros("q^2 + 1")
    assert sphere["points"] == []
    assert sphere["spheres"] == [(0.0, 1.0, 2)]
    point = sr.zeros("(q - i)*(q - j)")
    assert len(point["points"]) == 1
    q, mult = point["points"][0]
    assert mult == 2 and close(q, (0, 1, 0, 0), 1e-8)


def test_singular_plane_of_parabola():
    singular, _ = sr.is_singular("q^2 + qi", (0, -0.5, 1, 0))
    assert singular
    assert sr.rank("q^2 + qi", (0, -0.5, 1, 0)) == 2
    assert sr.rank("q^2 + qi", (1, 1, 1, 1)) == 4


def test_lift_commutes_with_projection():
    u, v = 0.3 - 0.7j, 1.1 + 0.4j
    z = sr.lift("q^3 + qj + k", u, v)
    q = sr.phi(u, v)
    expected = sr.eval("q^3 + qj + k", q)
    # [Z0, Z1, Z2, Z3] projects to (Z0 + Z1 j)^{-1}(Z2 + Z3 j)
    a = (z[0].real, z[0].imag, z[1].real, z[1].imag)
    b = (z[2].real, z[2].imag, z[3].real, z[3].imag)
    n2 = sum(x * x for x in a)
    inv = (a[0] / n2, -a[1] / n2, -a[2] / n2, -a[3] / n2)
    w1, x1, y1, z1 = inv
    w2, x2, y2, z2 = b
    prod = (
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    )
    assert close(prod, expected, 1e-10)


def test_quartic_vanishes_on_lift():
    z = sr.lift("q^2 + qi", 0.2 + 0.5j, -0.8 + 1.3j)
    assert abs(sr.quartic_K(z)) < 1e-10
    assert sr.quartic_K((1, 1, 1 + 1j, 1 - 1j)) == 0


def test_round_trip_reconstruction():
    vs = [cmath.exp(2j * math.pi * k / 16) for k in range(16)]
    zetas = [sr.twistor_transform("q^2 + qi", v) for v in vs]
    r = sr.reconstruct(vs, zetas)
    assert r["polynomial"] and r["symmetric"]
    assert close(r["g"], [0, 1j, 1], 1e-10)


def test_parabola_fibers():
    assert sr.fiber_class((1, 0, 0, 0)) == "OnPlaneLi"
    assert sr.fiber_class((0, 0, 0.5, 0)) == "OnParaboloid"
    assert sr.fiber_class((1, 0, 1, 0)) == "GenericFour"
    assert sr.discriminant((1, 0, 1, 0)) == pytest.approx(98)
    assert close(sr.j_plus((1, 0, 0, 0)), (0, -1, 0, 0))
    for q in sr.preimages((1, 0, 1, 0)):
        assert close(sr.f_par(q), (1, 0, 1, 0), 1e-10)


def test_errors_carry_their_kind():
    with pytest.raises(sr.SliceregError, match="InvalidArgument"):
        sr.parse("q + ")
    with pytest.raises(sr.SliceregError, match="DomainError"):
        sr.j_plus((1, 1, 0, 0))


def test_verify_suite():
    assert "twistor-commute" in sr.suites()
    report = sr.verify("twistor-commute", seed=7, samples=50)
    assert report["passed"] and report["checks"] >= 50
