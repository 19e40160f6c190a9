"""Exact univariate polynomials over the rationals.

Coefficients are Python ``int`` or ``fractions.Fraction`` in ascending degree
order. Integral values are stored as ``int`` so integer polynomials compare
equal regardless of how they were produced.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import RootError

Number = int | Fraction


def _norm(c) -> Number:
    if isinstance(c, bool):
        c = int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    if hasattr(c, "__index__"):  # numpy integers
        return int(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Number, ...] = tuple(cs)

    @classmethod
    def from_descending(cls, coeffs: Sequence) -> Polynomial:
        return cls(list(coeffs)[::-1])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def descending(self) -> list[Number]:
        return list(self.coeffs[::-1])

    def __call__(self, x):
        acc = 0
        if isinstance(x, float):
            for c in reversed(self.coeffs):
                acc = acc * x + float(c)
            return acc
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __add__(self, other) -> Polynomial:
        other = _lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (size - len(self.coeffs))
        b = list(other.coeffs) + [0] * (size - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        return self + (-_lift(other))

    def __rsub__(self, other) -> Polynomial:
        return _lift(other) - self

    def __mul__(self, other) -> Polynomial:
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return Polynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        lead = Fraction(other.leading)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 1)
        for k in range(len(rem) - 1, dq - 1, -1):
            factor = rem[k] / lead
            if factor:
                quot[k - dq] = factor
                for i, c in enumerate(other.coeffs):
                    rem[k - dq + i] -= factor * c
        return Polynomial(quot), Polynomial(rem[:dq])

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def monic(self) -> Polynomial:
        lead = Fraction(self.leading)
        return Polynomial([Fraction(c) / lead for c in self.coeffs])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}*{power}" if isinstance(mag, Fraction) else f"{mag}{power}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _lift(value) -> Polynomial:
    return value if isinstance(value, Polynomial) else Polynomial([value])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: Polynomial) -> Polynomial:
    """``p / gcd(p, p')``, made monic: same distinct roots, all simple."""
    g = poly_gcd(p, p.derivative())
    return (p // g).monic() if g.degree > 0 else p.monic()


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            break
        chain.append(r)
    return chain


def _sign_changes(chain: list[Polynomial], x: Fraction) -> int:
    changes = 0
    prev = 0
    for q in chain:
        v = q(x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def cauchy_bound(p: Polynomial) -> Fraction:
    """Every complex root of ``p`` has modulus strictly below this bound."""
    lead = Fraction(p.leading)
    return 1 + max((abs(Fraction(c) / lead) for c in p.coeffs[:-1]), default=Fraction(0))


def count_real_roots(p: Polynomial, lo, hi) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    q = squarefree_part(p)
    chain = sturm_chain(q)
    return _sign_changes(chain, Fraction(lo)) - _sign_changes(chain, Fraction(hi))


def largest_real_root(p: Polynomial, bracket_hint: tuple[float, float] | None = None, tol: float = 1e-10) -> float:
    """Largest real root of an exact polynomial.

    Sturm sequences isolate the root with exact rational arithmetic; the
    isolated bracket is then narrowed by bisection on exact signs and the
    result polished with a Newton step that is only kept if it stays inside
    the bracket. ``bracket_hint`` is used when it provably brackets the
    largest root and is ignored otherwise.
    """
    if p.degree < 1:
        raise RootError("constant polynomial has no roots")
    q = squarefree_part(p)
    if q.degree < 1:
        raise RootError("polynomial has no roots")
    chain = sturm_chain(q)
    bound = cauchy_bound(q)
    v_top = _sign_changes(chain, bound)

    def roots_above(x: Fraction) -> int:
        return _sign_changes(chain, x) - v_top

    lo, hi = -bound, bound
    if roots_above(lo) == 0:
        raise RootError("no real root within the Cauchy bound")

    if bracket_hint is not None:
        a, b = Fraction(bracket_hint[0]), Fraction(bracket_hint[1])
        if -bound < a < b < bound and q(a) != 0:
            if q(b) == 0 and roots_above(b) == 0:
                return float(b)
            if roots_above(b) == 0 and roots_above(a) >= 1:
                lo, hi = a, b

    # isolate: exactly one distinct root in (lo, hi]
    while roots_above(lo) - roots_above(hi) > 1 or hi - lo > 1:
        mid = (lo + hi) / 2
        while q(mid) == 0:
            if roots_above(mid) == 0:
                return float(mid)
            mid = (mid + hi) / 2
        if roots_above(mid) >= 1:
            lo = mid
        else:
            hi = mid
    if q(hi) == 0:
        return float(hi)

    s_lo = 1 if q(lo) > 0 else -1
    width = Fraction(tol) / 4
    while hi - lo > width * max(1, abs(hi)):
        mid = (lo + hi) / 2
        v = q(mid)
        if v == 0:
            return float(mid)
        if (1 if v > 0 else -1) == s_lo:
            lo = mid
        else:
            hi = mid
        # keep dyadic denominators small
        if mid.denominator > 1 << 80:
            lo = Fraction(float(lo))
            hi = Fraction(float(hi))
            if not lo < hi:
                break

    x = float((lo + hi) / 2)
    dq = q.derivative()
    d = dq(x)
    if d != 0:
        y = x - q(x) / d
        if float(lo) <= y <= float(hi) and math.isfinite(y):
            x = y
    return x
