"""Exact-layer tests: polynomials, rational functions, log scalars."""

from fractions import Fraction

import pytest

from qzeta.exact import (DomainError, LogDegreeOverflow, LogScalar,
                         NonInvertible, QPolynomial, RationalFunction,
                         XPolynomial, eval_log_scalar_complex,
                         eval_log_scalar_mp)

F = Fraction


# -- QPolynomial -------------------------------------------------------------

def test_polynomial_trims_trailing_zeros():
    p = QPolynomial([1, 2, 0, 0])
    assert p.coeffs == (F(1), F(2))
    assert p.degree == 1
    assert QPolynomial([0, 0]).is_zero()
    assert QPolynomial().degree == -1


def test_polynomial_ring_ops():
    p = QPolynomial([1, 1])        # 1 + q
    q = QPolynomial([-1, 1])       # q - 1
    assert p * q == QPolynomial([-1, 0, 1])
    assert p + q == QPolynomial([0, 2])
    assert p - p == QPolynomial()
    assert p * QPolynomial() == QPolynomial()


def test_polynomial_immutable():
    p = QPolynomial([1])
    with pytest.raises(AttributeError):
        p.coeffs = (F(2),)


# -- RationalFunction --------------------------------------------------------

def test_rational_function_reduces_to_lowest_terms():
    # (q^2 - 1)/(q - 1) == q + 1
    r = RationalFunction(QPolynomial([-1, 0, 1]), QPolynomial([-1, 1]))
    assert r.num == QPolynomial([1, 1])
    assert r.den == QPolynomial([1])


def test_rational_function_monic_denominator():
    r = RationalFunction(QPolynomial([1]), QPolynomial([0, 2]))
    assert r.den.coeffs[-1] == 1


def test_rational_function_field_ops():
    q = RationalFunction.q_power(1)
    one = RationalFunction(1)
    r = one / (q - 1)
    assert r * (q - 1) == one
    assert (r + r) == 2 * r
    assert (q ** 3) == RationalFunction.q_power(3)
    assert RationalFunction.q_power(-2) * RationalFunction.q_power(2) == one


def test_rational_function_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RationalFunction(1, QPolynomial())
    with pytest.raises(NonInvertible):
        RationalFunction(1) / RationalFunction(0)


def test_rational_subst_q_power():
    q = RationalFunction.q_power(1)
    r = 1 / (q - 1)
    assert r.subst_q_power(3) == 1 / (RationalFunction.q_power(3) - 1)


# -- LogScalar ---------------------------------------------------------------

def test_log_scalar_linear_algebra():
    a = LogScalar(1, 2)            # 1 + 2L
    b = LogScalar(3)               # 3
    assert a + b == LogScalar(4, 2)
    assert a - a == LogScalar.zero()
    assert a * b == LogScalar(3, 6)
    assert b * a == LogScalar(3, 6)


def test_log_degree_overflow():
    lam = LogScalar.lam()
    with pytest.raises(LogDegreeOverflow):
        lam * lam
    with pytest.raises(LogDegreeOverflow):
        LogScalar(1, 1) * LogScalar(2, 1)


def test_log_scalar_inverse():
    a = LogScalar(RationalFunction(F(2, 3)))
    assert a.inverse() * a == LogScalar.one()
    with pytest.raises(NonInvertible):
        LogScalar(1, 1).inverse()


def test_log_scalar_subst_q_power_scales_log_part():
    q = RationalFunction.q_power(1)
    a = LogScalar(q, q)            # q + q*L
    s = a.subst_q_power(2)
    q2 = RationalFunction.q_power(2)
    assert s.rat == q2
    assert s.log == 2 * q2         # log q^2 = 2 log q


def test_log_scalar_json_round_trip():
    q = RationalFunction.q_power(1)
    a = LogScalar(1 / (q - 1), F(-5, 7) * q)
    assert LogScalar.from_json_dict(a.to_json_dict()) == a


def test_eval_log_scalar_complex():
    import cmath
    q = RationalFunction.q_power(1)
    a = LogScalar(q, 1)            # q + log q
    qv = 0.3 + 0.1j
    assert abs(eval_log_scalar_complex(a, qv) - (qv + cmath.log(qv))) < 1e-15
    with pytest.raises(DomainError):
        eval_log_scalar_complex(a, 1.5)
    with pytest.raises(DomainError):
        eval_log_scalar_complex(a, 0)


def test_eval_log_scalar_mp_matches_complex_eval():
    import math
    q = RationalFunction.q_power(1)
    a = LogScalar(1 / (q - 1), q)
    got = float(eval_log_scalar_mp(a, F(1, 2), dps=40))
    want = 1 / (0.5 - 1) + 0.5 * math.log(0.5)
    assert abs(got - want) < 1e-14


# -- XPolynomial -------------------------------------------------------------

def test_xpolynomial_eval_and_compose():
    # P(x) = x^2 + 3x + 2 with plain rational coefficients
    p = XPolynomial([2, 3, 1])
    assert p.eval_fraction(F(1, 2)) == LogScalar(F(15, 4))
    # P(2x + 1) = 4x^2 + 10x + 6
    assert p.compose_affine(2, 1) == XPolynomial([6, 10, 4])


def test_xpolynomial_eval_complex_with_log_coeff():
    import cmath
    p = XPolynomial([LogScalar(0, 1), LogScalar(1)])   # log q + x
    qv = 0.4
    got = p.eval_complex(2.0, qv)
    assert abs(got - (cmath.log(qv) + 2.0)) < 1e-15


def test_xpolynomial_subst_q_power():
    q = RationalFunction.q_power(1)
    p = XPolynomial([LogScalar(q, 1)])
    s = p.subst_q_power(3)
    assert s.coeffs[0] == LogScalar(RationalFunction.q_power(3), 3)
