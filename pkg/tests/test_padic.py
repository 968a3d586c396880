"""p-adic arithmetic, Volkenborn sums, and the p-adic identity verifiers."""

from fractions import Fraction

import pytest

from qzeta.characters import enumerate_characters
from qzeta.exact import LogScalar, RationalFunction
from qzeta.padic import (MonomialTestFunction, PadicDomainError, PadicNumber,
                         closed_form_verify, eval_log_scalar_padic,
                         padic_exp, padic_generalized_verify, padic_log,
                         padic_pow, q_bracket, q_volkenborn_sum,
                         shift_identity_verify, volkenborn_sum, witt_verify)

F = Fraction


def Q(p, fr, prec=30):
    return PadicNumber.from_fraction(p, fr, prec)


# -- PadicNumber arithmetic --------------------------------------------------

def test_valuation_and_unit():
    x = Q(5, F(50, 3))
    assert x.valuation() == 2
    assert x.unit % 5 != 0
    assert Q(5, F(3, 25)).valuation() == -2


def test_field_axioms_random_sample():
    import random
    rng = random.Random(7)
    for _ in range(50):
        a = Q(7, F(rng.randint(-99, 99), rng.choice([1, 2, 3, 5])) or 1)
        b = Q(7, F(rng.randint(1, 99), rng.choice([1, 2, 3, 5])))
        assert ((a + b) - b - a).is_zero()
        assert ((a * b) / b - a).is_zero()


def test_inverse_round_trip():
    x = Q(5, F(7, 3))
    assert (x * x.inverse() - 1).is_zero()
    with pytest.raises(ZeroDivisionError):
        PadicNumber.zero(5).inverse()


def test_exact_zero_handling():
    z = PadicNumber.zero(5)
    x = Q(5, F(2))
    assert (x + z - x).is_zero()
    assert (x * z).is_zero()


def test_precision_lifting_through_exact_tag():
    x = Q(5, F(1, 3), prec=4)
    y = x.at_precision(20)
    assert y.prec >= 20
    assert (y - Q(5, F(1, 3), 20)).valuation() >= 20


def test_repr_and_is_zero():
    x = Q(5, F(25))
    assert "5^2" in repr(x)
    assert not x.is_zero()


# -- log / exp / powers ------------------------------------------------------

def test_padic_log_exp_inverse():
    q = Q(5, F(6), 25)
    lg = padic_log(q)
    assert lg.valuation() == 1
    back = padic_exp(lg)
    assert (back - q).valuation() >= 20


def test_padic_log_domain():
    with pytest.raises(PadicDomainError):
        padic_log(Q(5, F(2)))       # v(q-1) = 0
    with pytest.raises(PadicDomainError):
        padic_exp(Q(5, F(2)))       # v(t) = 0


def test_padic_log_multiplicative():
    q = Q(7, F(8), 25)
    r = Q(7, F(15), 25)
    lhs = padic_log(q * r)
    rhs = padic_log(q) + padic_log(r)
    assert (lhs - rhs).valuation() >= 20


def test_padic_pow_integer_matches_repeated_product():
    q = Q(5, F(6), 20)
    acc = PadicNumber.from_fraction(5, 1, 20)
    for _ in range(7):
        acc = acc * q
    assert (padic_pow(q, 7) - acc).valuation() >= 18
    assert (padic_pow(q, -2) * padic_pow(q, 2) - 1).valuation() >= 18
    assert (padic_pow(q, 0) - 1).is_zero()


def test_padic_pow_rational_interpolates_integers():
    q = Q(5, F(6), 25)
    # q^(1/2) squared is q
    half = padic_pow(q, F(1, 2))
    assert (half * half - q).valuation() >= 18
    with pytest.raises(PadicDomainError):
        padic_pow(q, F(1, 5))       # |1/5|_5 > 1


def test_q_bracket_values():
    q = Q(5, F(6), 25)
    # [3]_q = 1 + q + q^2 = 43 at q = 6
    assert (q_bracket(3, q) - Q(5, F(43), 25)).valuation() >= 20


def test_eval_log_scalar_padic():
    # q/(q-1) + log q at q = 6, p = 5
    qrf = RationalFunction.q_power(1)
    a = LogScalar(qrf / (qrf - 1), 1)
    q = Q(5, F(6), 25)
    want = Q(5, F(6, 5), 25) + padic_log(q)
    got = eval_log_scalar_padic(a, q)
    assert (got - want).valuation() >= 15


# -- Volkenborn sums ---------------------------------------------------------

def test_volkenborn_classical_bernoulli():
    # h = 0: the level sums converge to the classical B_n
    q = Q(5, F(6), 30)
    s = volkenborn_sum(MonomialTestFunction(1, 0, q), 5, prec=12)
    assert (s - Q(5, F(-1, 2), 30)).valuation() >= 5
    s2 = volkenborn_sum(MonomialTestFunction(2, 0, q), 5, prec=12)
    assert (s2 - Q(5, F(1, 6), 30)).valuation() >= 4


def test_q_volkenborn_constant_is_one():
    q = Q(5, F(6), 40)
    s = q_volkenborn_sum(0, 1, 0, q, 3, prec=10)
    assert (s - 1).is_zero()


@pytest.mark.parametrize("h,n", [(0, 1), (1, 0), (1, 2), (2, 3)])
def test_witt_formula(h, n):
    q = Q(5, F(6), 40)
    rep = witt_verify(h, n, q, [3, 4, 5], prec=10)
    assert rep.passed
    vals = [v for _, v in rep.levels]
    assert vals == sorted(vals)


def test_witt_formula_p7():
    q = Q(7, F(8), 40)
    assert witt_verify(1, 2, q, [2, 3, 4], prec=10).passed


# -- identity verifiers ------------------------------------------------------

@pytest.mark.parametrize("b", [1, 2, 3])
def test_shift_identity(b):
    q = Q(5, F(6), 40)
    f = MonomialTestFunction(2, 1, q)
    rep = shift_identity_verify(f, b, 4, prec=12)
    assert rep.passed
    assert rep.levels[0][1] >= 4 - 3


def test_closed_form():
    q = Q(5, F(6), 40)
    t = Q(5, F(5), 40)
    for N in (3, 4, 5):
        rep = closed_form_verify(1, t, q, N, prec=12)
        assert rep.passed, N


def test_generalized_padic_vs_exact():
    q = Q(5, F(6), 40)
    chi3 = next(c for c in enumerate_characters(3) if not c.is_principal())
    chi4 = next(c for c in enumerate_characters(4) if not c.is_principal())
    for chi in (chi3, chi4):
        for n in (0, 1, 2):
            rep = padic_generalized_verify(chi, 1, n, q, [3, 4], prec=12)
            assert rep.passed, (chi.modulus, n)


def test_generalized_requires_coprime_modulus():
    q = Q(5, F(6), 40)
    chi5 = next(c for c in enumerate_characters(5) if not c.is_principal())
    with pytest.raises(PadicDomainError):
        padic_generalized_verify(chi5, 1, 1, q, [3], prec=10)
