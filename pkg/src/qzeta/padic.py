"""p-adic arithmetic at finite precision, p-adic log/exp, Volkenborn sums,
and the p-adic verification suite (Witt's formula, the shift identities, the
closed-form integral and the character-twisted integral).

A PadicNumber is (p, valuation, unit mantissa mod p^prec, prec); the value
is known modulo p^(valuation + prec).  Numbers built from an exact rational
remember it, which lets the Volkenborn machinery re-expand them at whatever
working precision a level-N sum needs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .characters import DirichletCharacter
from .exact import LogScalar
from .qbernoulli import (classical_bernoulli, generalized_q_bernoulli_exact,
                         q_bernoulli_number)
from .report import VerificationReport

_BIG = 10 ** 9  # valuation sentinel for an exact zero

DEFAULT_PRECISION = int(os.environ.get("QZK_DEFAULT_PRECISION", "16"))
DEFAULT_SLACK = 3


class PadicError(ArithmeticError):
    pass


class PrecisionExhausted(PadicError):
    pass


class PadicDomainError(PadicError):
    pass


def _vp(n: int, p: int) -> int:
    if n == 0:
        return _BIG
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PadicNumber:
    __slots__ = ("p", "val", "unit", "prec", "_exact")

    def __init__(self, p: int, val: int, unit: int, prec: int,
                 _exact: Fraction | None = None):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "_exact", _exact)

    def __setattr__(self, *a):
        raise AttributeError("PadicNumber is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, p: int, abs_prec: int = _BIG) -> "PadicNumber":
        return cls(p, abs_prec, 0, 0, Fraction(0) if abs_prec >= _BIG else None)

    @classmethod
    def from_fraction(cls, p: int, fr, prec: int = DEFAULT_PRECISION,
                      exact: bool = True) -> "PadicNumber":
        """Relative precision `prec`; remembers fr when exact=True."""
        fr = Fraction(fr)
        if fr == 0:
            return cls.zero(p) if exact else cls.zero(p, prec)
        prec = max(prec, 1)
        v = _vp(fr.numerator, p) - _vp(fr.denominator, p)
        num = fr.numerator // p ** max(_vp(fr.numerator, p), 0)
        den = fr.denominator // p ** max(_vp(fr.denominator, p), 0)
        mod = p ** prec
        unit = num * pow(den, -1, mod) % mod
        return cls(p, v, unit, prec, fr if exact else None)

    @classmethod
    def from_int_mod(cls, p: int, value: int, abs_prec: int) -> "PadicNumber":
        """Number known as `value` modulo p^abs_prec."""
        value %= p ** abs_prec
        if value == 0:
            return cls.zero(p, abs_prec)
        v = _vp(value, p)
        unit = value // p ** v
        return cls(p, v, unit, abs_prec - v)

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        """Zero to the known precision."""
        return self.unit == 0

    @property
    def abs_prec(self) -> int:
        return self.val + self.prec

    def valuation(self) -> int:
        """Exact valuation, or the absolute precision bound for a zero."""
        return self.val

    def at_precision(self, prec: int) -> "PadicNumber":
        """Same value at relative precision >= prec (lifts via the exact
        origin when available)."""
        if self.prec >= prec or self.is_zero():
            return self
        if self._exact is None:
            raise PrecisionExhausted(
                f"cannot lift to {prec} digits: no exact origin")
        return PadicNumber.from_fraction(self.p, self._exact, prec)

    def _lift_int(self, abs_prec: int) -> int:
        """Integer representative modulo p^abs_prec (value must be integral
        at this scale, i.e. val >= 0)."""
        x = self.at_precision(max(abs_prec - self.val, 1))
        if x.val < 0:
            raise PadicDomainError("negative valuation has no integer lift")
        return x.unit * self.p ** x.val % self.p ** abs_prec if x.unit else 0

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise PadicDomainError("mixed primes")
            return other
        if isinstance(other, (int, Fraction)):
            fr = Fraction(other)
            if fr == 0:
                return PadicNumber.zero(self.p)
            v = _vp(fr.numerator, self.p) - _vp(fr.denominator, self.p)
            # enough relative digits that the coerced operand never caps the
            # other operand's absolute precision
            need = max(2, min(self.abs_prec - v + 2, 4 * DEFAULT_PRECISION + 64))
            return PadicNumber.from_fraction(self.p, fr, need)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        n = min(self.abs_prec, o.abs_prec)
        ex = (self._exact + o._exact
              if self._exact is not None and o._exact is not None else None)
        terms = [z for z in (self, o) if not z.is_zero() and z.val < n]
        if not terms:
            return PadicNumber(p, n, 0, 0, ex)
        m = min(z.val for z in terms)
        mod = p ** (n - m)
        v = sum(z.unit * p ** (z.val - m) for z in terms) % mod
        if v == 0:
            return PadicNumber(p, n, 0, 0, ex)
        dv = _vp(v, p)
        return PadicNumber(p, m + dv, v // p ** dv, n - m - dv, ex)

    __radd__ = __add__

    def __neg__(self):
        ex = -self._exact if self._exact is not None else None
        if self.is_zero():
            return PadicNumber(self.p, self.val, 0, 0, ex)
        return PadicNumber(self.p, self.val,
                           (-self.unit) % self.p ** self.prec, self.prec, ex)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        ex = (self._exact * o._exact
              if self._exact is not None and o._exact is not None else None)
        if self.is_zero() or o.is_zero():
            # O(p^a) * (unit p^v) = O(p^(a+v))
            a = self.val + o.val
            return PadicNumber(p, a, 0, 0, Fraction(0) if ex == 0 else None)
        prec = min(self.prec, o.prec)
        unit = self.unit * o.unit % p ** prec
        return PadicNumber(p, self.val + o.val, unit, prec, ex)

    __rmul__ = __mul__

    def inverse(self) -> "PadicNumber":
        if self.is_zero():
            raise ZeroDivisionError("division by (p-adic) zero")
        ex = 1 / self._exact if self._exact else None
        return PadicNumber(self.p, -self.val,
                           pow(self.unit, -1, self.p ** self.prec), self.prec, ex)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, x: int):
        return padic_pow(self, x)

    def __repr__(self):
        if self.is_zero():
            return f"O({self.p}^{self.val})"
        return (f"{self.unit}*{self.p}^{self.val} + "
                f"O({self.p}^{self.abs_prec})")


# ---------------------------------------------------------------------------
# log / exp / powers
# ---------------------------------------------------------------------------

def _log_domain_ok(q: PadicNumber) -> bool:
    u = q - 1
    need = 2 if q.p == 2 else 1
    return u.is_zero() or u.val >= need


def padic_log(q: PadicNumber) -> PadicNumber:
    """log q = sum (-1)^(k+1) (q-1)^k / k for |q-1|_p < p^(-1/(p-1))."""
    p = q.p
    if not _log_domain_ok(q):
        raise PadicDomainError("padic_log needs v(q-1) >= 1 (>= 2 for p = 2)")
    u = q - 1
    if u.is_zero():
        return PadicNumber.zero(p, u.val)
    a = q.abs_prec
    vu = u.val
    if u._exact is not None:
        ufr = u._exact
    else:
        ufr = Fraction(u.unit * p ** vu)
    s = Fraction(0)
    k, term = 1, ufr
    while k * vu - _vp(k, p) < a:
        s += term / k if k % 2 else -term / k
        k += 1
        term *= ufr
    v = _vp(s.numerator, p) - _vp(s.denominator, p)
    return PadicNumber.from_fraction(p, s, max(a - v, 1), exact=False)


def _vp_factorial(k: int, p: int) -> int:
    v, pk = 0, p
    while pk <= k:
        v += k // pk
        pk *= p
    return v


def padic_exp(t: PadicNumber) -> PadicNumber:
    """exp t = sum t^k / k! for v(t) >= 1 (>= 2 for p = 2)."""
    p = t.p
    need = 2 if p == 2 else 1
    if not (t.is_zero() or t.val >= need):
        raise PadicDomainError("padic_exp needs v(t) >= 1 (>= 2 for p = 2)")
    if t.is_zero():
        return PadicNumber.from_fraction(
            p, 1, min(t.val, 4 * DEFAULT_PRECISION + 64))
    a = t.abs_prec
    vt = t.val
    tfr = t._exact if t._exact is not None else Fraction(t.unit * p ** vt)
    s = Fraction(1)
    k, term = 1, tfr
    while k * vt - _vp_factorial(k, p) < a:
        s += term / Fraction(_factorial_cached(k))
        k += 1
        term *= tfr
    return PadicNumber.from_fraction(p, s, a, exact=False)


_FACT = [1]


def _factorial_cached(k: int) -> int:
    while len(_FACT) <= k:
        _FACT.append(_FACT[-1] * len(_FACT))
    return _FACT[k]


def padic_pow(q: PadicNumber, x) -> PadicNumber:
    """q^x: integers by square-and-multiply on the mantissa, rational x with
    |x|_p <= 1 via exp(x log q)."""
    p = q.p
    if isinstance(x, int):
        if x == 0:
            return PadicNumber.from_fraction(p, 1, max(q.prec,
                                                       DEFAULT_PRECISION))
        if q.is_zero():
            if x < 0:
                raise ZeroDivisionError("0^negative")
            return PadicNumber(p, q.val * x, 0, 0)
        mod = p ** q.prec
        unit = pow(q.unit, x, mod)
        ex = None
        if q._exact is not None and abs(x) * max(
                q._exact.numerator.bit_length(),
                q._exact.denominator.bit_length()) < 10 ** 6:
            ex = q._exact ** x
        return PadicNumber(p, q.val * x, unit, q.prec, ex)
    x = Fraction(x)
    if _vp(x.denominator, p) > 0:
        raise PadicDomainError("exponent must satisfy |x|_p <= 1")
    return padic_exp(x * padic_log(q))


def q_bracket(x: int, q: PadicNumber) -> PadicNumber:
    """[x]_q = (1 - q^x) / (1 - q); q must differ from 1 at the working
    precision."""
    one_minus_q = 1 - q
    if one_minus_q.is_zero():
        raise PadicDomainError("[x]_q undefined at q = 1")
    return (1 - padic_pow(q, x)) / one_minus_q


# ---------------------------------------------------------------------------
# LogScalar evaluation at a p-adic point
# ---------------------------------------------------------------------------

def eval_log_scalar_padic(a: LogScalar, q: PadicNumber) -> PadicNumber:
    """rat(q) + log-part(q) * log_p q, with tracked precision."""
    if not _log_domain_ok(q):
        raise PadicDomainError("need |q-1|_p < p^(-1/(p-1))")

    def horner(poly) -> PadicNumber:
        if not poly.coeffs:
            return PadicNumber.zero(q.p)
        acc = PadicNumber.from_fraction(q.p, poly.coeffs[-1], q.prec + 2)
        for c in reversed(poly.coeffs[:-1]):
            acc = acc * q + c
        return acc

    def rf(r) -> PadicNumber:
        den = horner(r.den)
        if den.is_zero():
            raise PrecisionExhausted("denominator vanishes to working precision")
        return horner(r.num) / den

    out = rf(a.rat)
    if a.log:
        out = out + rf(a.log) * padic_log(q)
    return out


# ---------------------------------------------------------------------------
# Volkenborn sums
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialTestFunction:
    """f(x) = x^n q^{h x}."""
    n: int
    h: int
    q: PadicNumber


def _unit_int(q: PadicNumber, abs_prec: int) -> int:
    """Mantissa of a unit q modulo p^abs_prec, lifting if needed."""
    if q.val != 0:
        raise PadicDomainError("q must be a p-adic unit")
    return q.at_precision(abs_prec).unit % q.p ** abs_prec


def volkenborn_levels(n_max: int, h: int, q: PadicNumber, levels: list[int],
                      prec: int = DEFAULT_PRECISION) -> dict[int, list[PadicNumber]]:
    """S_N = p^-N sum_{x < p^N} q^{h x} x^n for n = 0..n_max and every N in
    `levels`, in one accumulation pass.

    Per the precision budget, the sum is accumulated modulo p^(prec+N) and
    divided by p^N at the end, certifying `prec` digits.
    """
    p = q.p
    n_top = max(levels)
    w = prec + n_top
    mod = p ** w
    qh = pow(_unit_int(q, w), h, mod)
    acc = [0] * (n_max + 1)
    snapshots: dict[int, list[int]] = {}
    marks = {p ** N: N for N in levels}
    qp = 1
    for x in range(p ** n_top):
        if x in marks:
            snapshots[marks[x]] = list(acc)
        xp = qp
        acc[0] = (acc[0] + qp) % mod
        for n in range(1, n_max + 1):
            xp = xp * x % mod
            acc[n] = (acc[n] + xp) % mod
        qp = qp * qh % mod
    snapshots[n_top] = list(acc)
    out = {}
    for N in levels:
        pn = p ** N
        out[N] = [
            PadicNumber.from_int_mod(p, s, w) / PadicNumber(p, N, 1, w)
            for s in snapshots[N]]
    return out


def volkenborn_sum(f: MonomialTestFunction, N: int,
                   prec: int = DEFAULT_PRECISION) -> PadicNumber:
    """Level-N Volkenborn approximant p^-N sum_{x<p^N} f(x)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return volkenborn_levels(f.n, f.h, f.q, [N], prec)[N][f.n]


def q_volkenborn_sum(n: int, h: int, x0, q: PadicNumber, N: int,
                     prec: int = DEFAULT_PRECISION) -> PadicNumber:
    """Level-N approximant of the q-Volkenborn integral of
    [x0 + x1]_q^n q^{x1 (h-1)} against mu_q:

        (1/[p^N]_q) sum_{x1 < p^N} [x0+x1]_q^n q^{x1 (h-1)} q^{x1}
    """
    p = q.p
    x0 = Fraction(x0)
    if _vp(x0.denominator, p) > 0:
        raise PadicDomainError("|x0|_p <= 1 required")
    w = prec + N + n + 4
    qw = q.at_precision(w)
    one_minus_q = 1 - qw
    if one_minus_q.is_zero():
        raise PadicDomainError("q = 1 is outside the q-Volkenborn domain")
    qx0 = padic_pow(qw, x0)     # q^{x0}
    inv_1mq = one_minus_q.inverse()
    acc = PadicNumber.zero(p, w)
    qpow = PadicNumber.from_fraction(p, 1, w)       # q^{x1}
    for x1 in range(p ** N):
        term = padic_pow(qpow, h - 1) * qpow
        if n > 0:
            bracket = (1 - qx0 * qpow) * inv_1mq
            term = padic_pow(bracket, n) * term
        acc = acc + term
        qpow = qpow * qw
    return acc / q_bracket(p ** N, qw)


# ---------------------------------------------------------------------------
# verification suite
# ---------------------------------------------------------------------------

def _diff_valuation(a: PadicNumber, b: PadicNumber) -> int:
    return (a - b).valuation()


def witt_verify(h: int, n: int, q: PadicNumber, levels: list[int],
                prec: int = DEFAULT_PRECISION,
                slack: int = DEFAULT_SLACK) -> VerificationReport:
    """S_N -> B_n^{(h)} at the given q: valuations of S_N - target must be
    nondecreasing and reach min(prec, N_max - slack)."""
    levels = sorted(levels)
    if h == 0:
        target = PadicNumber.from_fraction(q.p, classical_bernoulli(n)[n],
                                           prec + max(levels))
    else:
        qq = q.at_precision(prec + max(levels) + n + 4)
        target = eval_log_scalar_padic(q_bernoulli_number(h, n), qq)
    sums = volkenborn_levels(n, h, q, levels, prec)
    vals = [(N, _diff_valuation(sums[N][n], target)) for N in levels]
    seq = [v for _, v in vals]
    ok = all(a <= b for a, b in zip(seq, seq[1:])) and \
        seq[-1] >= min(prec, max(levels) - slack)
    return VerificationReport(
        identity="witt",
        params={"h": h, "n": n, "p": q.p, "prec": prec, "slack": slack},
        witnesses=tuple((f"N={N}", v) for N, v in vals),
        passed=ok,
        levels=tuple(vals),
    )


def _fprime(f: MonomialTestFunction, i: int, w: int) -> PadicNumber:
    """f'(i) = q^{h i} (n i^{n-1} + h log q * i^n)."""
    p = f.q.p
    qw = f.q.at_precision(w)
    n = f.n
    lead = Fraction(n * i ** (n - 1)) if n >= 1 else Fraction(0)
    out = PadicNumber.from_fraction(p, lead, w)
    if f.h:
        out = out + f.h * Fraction(i) ** n * padic_log(qw)
    return padic_pow(qw, f.h * i) * out


def shift_identity_verify(f: MonomialTestFunction, b: int, N: int,
                          prec: int = DEFAULT_PRECISION,
                          slack: int = DEFAULT_SLACK) -> VerificationReport:
    """I_1(f(.+b)) = I_1(f) + sum_{i<b} f'(i) at level N: the residual's
    valuation must be >= N - slack."""
    if b < 1:
        raise ValueError("b must be >= 1")
    p = f.q.p
    w = prec + N
    mod = p ** w
    qh = pow(_unit_int(f.q, w), f.h, mod)
    acc_f = acc_fb = 0
    qp = pow(qh, 0, mod)
    qpb = pow(qh, b, mod)
    for x in range(p ** N):
        acc_f = (acc_f + qp * pow(x, f.n, mod)) % mod
        acc_fb = (acc_fb + qpb * pow(x + b, f.n, mod)) % mod
        qp = qp * qh % mod
        qpb = qpb * qh % mod
    inv_pn = PadicNumber(p, N, 1, w)
    i_f = PadicNumber.from_int_mod(p, acc_f, w) / inv_pn
    i_fb = PadicNumber.from_int_mod(p, acc_fb, w) / inv_pn
    deriv = PadicNumber.zero(p, w)
    for i in range(b):
        deriv = deriv + _fprime(f, i, w)
    residual = i_fb - i_f - deriv
    v = residual.valuation()
    ok = v >= N - slack
    return VerificationReport(
        identity="shift",
        params={"n": f.n, "h": f.h, "b": b, "N": N, "p": p, "slack": slack},
        witnesses=((f"N={N}", v),),
        passed=ok,
        levels=((N, v),),
    )


def closed_form_verify(h: int, t: PadicNumber, q: PadicNumber, N: int,
                       prec: int = DEFAULT_PRECISION,
                       slack: int = DEFAULT_SLACK) -> VerificationReport:
    """Level-N sum of q^{h x} e^{x t} against (h log q + t)/(q^h e^t - 1)."""
    p = q.p
    w = prec + N + 6
    qw = q.at_precision(w)
    tw = t.at_precision(w)
    e_t = padic_exp(tw)
    r = padic_pow(qw, h) * e_t          # common ratio q^h e^t
    # sum_{x<p^N} r^x = (r^{p^N} - 1)/(r - 1)
    den = r - 1
    if den.is_zero():
        raise PadicDomainError("q^h e^t = 1 to working precision")
    lhs = (padic_pow(r, p ** N) - 1) / den / PadicNumber(p, N, 1, w)
    num = tw if h == 0 else h * padic_log(qw) + tw
    rhs = num / den
    v = (lhs - rhs).valuation()
    ok = v >= N - slack
    return VerificationReport(
        identity="closed-form",
        params={"h": h, "N": N, "p": p, "slack": slack},
        witnesses=((f"N={N}", v),),
        passed=ok,
        levels=((N, v),),
    )


def padic_generalized_verify(chi: DirichletCharacter, h: int, n: int,
                             q: PadicNumber, levels: list[int],
                             prec: int = DEFAULT_PRECISION,
                             slack: int = DEFAULT_SLACK) -> VerificationReport:
    """(1/(d p^N)) sum_{x < d p^N} chi(x) q^{h x} x^n against the exact
    twisted value, for quadratic chi with gcd(p, d) = 1."""
    p = q.p
    d = chi.modulus
    if d % p == 0:
        raise PadicDomainError("need gcd(p, d) = 1")
    if not chi.is_real():
        raise PadicDomainError("p-adic route needs a quadratic character")
    levels = sorted(levels)
    n_top = max(levels)
    w = prec + n_top
    mod = p ** w
    qh = pow(_unit_int(q, w), h, mod)
    chivals = [int(chi.value_rational(x)) for x in range(d)]
    acc = 0
    snapshots = {}
    marks = {d * p ** N: N for N in levels}
    qp = 1
    for x in range(d * p ** n_top):
        if x in marks:
            snapshots[marks[x]] = acc
        c = chivals[x % d]
        if c:
            acc = (acc + c * qp * pow(x, n, mod)) % mod
        qp = qp * qh % mod
    snapshots[n_top] = acc
    qq = q.at_precision(w + n + 4)
    target = eval_log_scalar_padic(generalized_q_bernoulli_exact(chi, h, n), qq)
    vals = []
    for N in levels:
        s = PadicNumber.from_int_mod(p, snapshots[N], w) \
            / PadicNumber(p, N, 1, w) / d
        vals.append((N, (s - target).valuation()))
    seq = [v for _, v in vals]
    ok = seq[-1] >= min(prec, n_top - slack)
    return VerificationReport(
        identity="twisted-volkenborn",
        params={"d": d, "exponents": list(chi.exponents), "h": h, "n": n,
                "p": p, "prec": prec, "slack": slack},
        witnesses=tuple((f"N={N}", v) for N, v in vals),
        passed=ok,
        levels=tuple(vals),
    )
