"""Exact rational arithmetic over Q_p: valuations, residues, roots of unity.

Rationals are :class:`fractions.Fraction`; residues mod ``p`` are plain ints
in ``[0, p)``.  Valuations are ints, with ``math.inf`` for zero and
``-math.inf`` standing for the valuation of differences with the point at
infinity.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from sympy import isprime, primitive_root

from .errors import PreconditionError

INF = math.inf
NEG_INF = -math.inf

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value) -> Fraction:
    """Parse ``"a"``, ``"-a"`` or ``"a/b"`` (or an int) into a Fraction.

    >>> parse_rational("-6/4")
    Fraction(-3, 2)
    """
    if isinstance(value, bool):
        raise PreconditionError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise PreconditionError(f"not a rational: {value!r}")
    m = _RATIONAL_RE.match(value)
    if m is None:
        raise PreconditionError(f"not a rational: {value!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise PreconditionError(f"zero denominator in {value!r}")
    return Fraction(int(num), int(den) if den else 1)


def check_prime(p: int) -> None:
    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise PreconditionError(f"p = {p!r} is not a prime")


def _vp_int(m: int, p: int) -> int:
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def vp(x: Rational, p: int):
    """p-adic valuation of a rational; ``inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return INF
    return _vp_int(x.numerator, p) - _vp_int(x.denominator, p)


def residue(x: Rational, p: int) -> int:
    """Reduction mod p of a p-integral rational."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise PreconditionError(f"{x} is not p-integral for p = {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


def unit_part(x: Rational, p: int) -> Fraction:
    """``x / p**vp(x)``."""
    x = Fraction(x)
    if x == 0:
        raise PreconditionError("zero has no unit residue")
    v = vp(x, p)
    return x / Fraction(p) ** v


def unit_residue(x: Rational, p: int) -> int:
    """Residue mod p of the unit part of a nonzero rational (never 0)."""
    return residue(unit_part(x, p), p)


@lru_cache(maxsize=None)
def least_primitive_root(p: int) -> int:
    return int(primitive_root(p))


def zeta(d: int, p: int) -> int:
    """The d-th root of unity ``g**((p-1)/d)`` with g the least primitive root.

    This choice is compatible across divisors: ``zeta(d*m, p)**m == zeta(d, p)``.
    """
    if d < 1 or (p - 1) % d:
        raise PreconditionError(f"no {d}-th roots of unity in residue field F_{p}")
    return pow(least_primitive_root(p), (p - 1) // d, p)


def dlog_mu(u: int, d: int, p: int) -> int:
    """The k in [0, d) with ``u**((p-1)/d) == zeta(d, p)**k`` in F_p.

    Frobenius sends a chosen d-th root of u to ``zeta(d)**k`` times itself.
    """
    u %= p
    if u == 0:
        raise PreconditionError("discrete log of 0 is undefined")
    z = zeta(d, p)
    target = pow(u, (p - 1) // d, p)
    acc = 1
    for k in range(d):
        if acc == target:
            return k
        acc = acc * z % p
    raise AssertionError("unreachable: power residue outside mu_d")


def divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
