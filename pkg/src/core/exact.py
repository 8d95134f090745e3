"""
SemiPrim - Exact Comparisons
Signs of small surd expressions, and rational enclosures of square roots and
base-2 logarithms refined until a comparison is decided. No floating point.
"""

import re
from fractions import Fraction
from math import isqrt

from src.core.errors import SemiPrimError

PRECISIONS = (4, 8, 12, 16)


def sign(x):
    return (x > 0) - (x < 0)


def sign_surd(p, q, z):
    """Sign of p + q*sqrt(z) for integers p, q and z >= 0."""
    if z < 0:
        raise ValueError(f"negative radicand {z}")
    sp = sign(p)
    sq = sign(q) if z else 0
    if sp == 0 or sq == 0 or sp == sq:
        return sp or sq
    return sp * sign(p * p - q * q * z)


def _sign_pair(alpha, x, beta, y):
    a = sign(alpha) if x else 0
    b = sign(beta) if y else 0
    if a == 0 or b == 0 or a == b:
        return a or b
    return a * sign(alpha * alpha * x - beta * beta * y)


def sign_two_surds(alpha, x, beta, y, gamma):
    """Sign of alpha*sqrt(x) + beta*sqrt(y) + gamma."""
    s = _sign_pair(alpha, x, beta, y)
    sg = sign(gamma)
    if s == 0 or sg == 0 or s == sg:
        return s or sg
    # |alpha sqrt x + beta sqrt y| against |gamma|, squared
    d = sign_surd(alpha * alpha * x + beta * beta * y - gamma * gamma, 2 * alpha * beta, x * y)
    if d > 0:
        return s
    if d < 0:
        return sg
    return 0


def at_least_sqrt(x, n):
    """x >= sqrt(n) for a rational x and integer n >= 0."""
    return x >= 0 and x * x >= n


# ---- Enclosures ----

def sqrt_bounds(n, bits):
    """(lo, hi) with lo <= sqrt(n) <= hi and hi - lo <= 2**-bits; lo == hi when exact."""
    scale = 1 << bits
    target = n * scale * scale
    root = isqrt(target)
    lo = Fraction(root, scale)
    hi = lo if root * root == target else Fraction(root + 1, scale)
    return lo, hi


def log2_bounds(n, bits):
    """(lo, hi) enclosing log2(n) for an integer n >= 1."""
    if n < 1:
        raise ValueError(f"log2 needs a positive integer, got {n}")
    power = n ** (1 << bits)
    k = power.bit_length() - 1
    lo = Fraction(k, 1 << bits)
    hi = lo if power == 1 << k else Fraction(k + 1, 1 << bits)
    return lo, hi


def mul_bounds(*intervals):
    """Product of nonnegative intervals."""
    lo, hi = Fraction(1), Fraction(1)
    for a, b in intervals:
        lo *= a
        hi *= b
    return lo, hi


def decide_le(lhs, rhs):
    """Decide lhs <= rhs where each side maps a precision to an enclosing interval."""
    for bits in PRECISIONS:
        a, b = lhs(bits)
        c, d = rhs(bits)
        if b <= c:
            return True
        if a > d:
            return False
    raise SemiPrimError(f"comparison undecided at {PRECISIONS[-1]} bits of precision")


def exact(value):
    """Constant interval for an integer or rational."""
    return lambda bits: (Fraction(value), Fraction(value))


# ---- Text form ----

_FRACTION = re.compile(r"^-?\d+/\d+$")


def to_text(value):
    """JSON-safe form of an exact value; rationals become "p/q"."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


def from_text(value):
    if isinstance(value, str) and _FRACTION.match(value):
        return Fraction(value)
    return value
