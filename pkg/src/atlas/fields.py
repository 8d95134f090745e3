"""
SemiPrim - Small Finite Fields
GF(q) for q in {2, 3, 4, 5, 7, 8, 9} with log/antilog tables. An element is
an int whose base-p digits are its polynomial coefficients, constant first.
"""

from functools import lru_cache

from src.core.errors import UnsupportedFieldError

SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9)

# (p, k, modulus coefficients low to high, monic)
_DEFINITIONS = {
    2: (2, 1, None),
    3: (3, 1, None),
    5: (5, 1, None),
    7: (7, 1, None),
    4: (2, 2, (1, 1, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (2, 2, 1)),
}


def _digits(x, p, k):
    return [(x // p ** i) % p for i in range(k)]


def _encode(digits, p):
    return sum(d * p ** i for i, d in enumerate(digits))


def _poly_mul(a, b, p, k, modulus):
    if modulus is None:
        return (a * b) % p
    da, db = _digits(a, p, k), _digits(b, p, k)
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(2 * k - 2, k - 1, -1):
        c = prod[deg]
        if c:
            for i, m in enumerate(modulus):
                prod[deg - k + i] = (prod[deg - k + i] - c * m) % p
    return _encode(prod[:k], p)


class GaloisField:
    def __init__(self, q):
        if q not in _DEFINITIONS:
            raise UnsupportedFieldError(f"field order {q} not in {SUPPORTED_ORDERS}")
        p, k, modulus = _DEFINITIONS[q]
        self.q, self.p, self.k = q, p, k
        self.elements = tuple(range(q))
        self._add = [
            [_encode([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p) for b in range(q)]
            for a in range(q)
        ]
        self._neg = [_encode([(-x) % p for x in _digits(a, p, k)], p) for a in range(q)]
        self.primitive = self._find_primitive(p, k, modulus)
        self.exp = [1] * (q - 1)
        for i in range(1, q - 1):
            self.exp[i] = _poly_mul(self.exp[i - 1], self.primitive, p, k, modulus)
        self.log = {x: i for i, x in enumerate(self.exp)}

    def _find_primitive(self, p, k, modulus):
        for z in range(2 if self.q > 2 else 1, self.q):
            x, seen = 1, set()
            for _ in range(self.q - 1):
                seen.add(x)
                x = _poly_mul(x, z, p, k, modulus)
            if len(seen) == self.q - 1:
                return z
        raise UnsupportedFieldError(f"no primitive element found for GF({self.q})")

    def __repr__(self):
        return f"GF({self.q})"

    def add(self, a, b):
        return self._add[a][b]

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[-self.log[a] % (self.q - 1)]

    def power(self, a, e):
        if a == 0:
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def frobenius(self, a):
        return self.power(a, self.p)

    def zeta(self, e=1):
        """Power of the primitive element."""
        return self.exp[e % (self.q - 1)]


@lru_cache(maxsize=None)
def field(q):
    return GaloisField(q)


# ---- Row-vector linear algebra: v -> vA ----

def vec_mat(F, v, A):
    n = len(A[0])
    out = [0] * n
    for i, x in enumerate(v):
        if x:
            row = A[i]
            for j in range(n):
                out[j] = F.add(out[j], F.mul(x, row[j]))
    return tuple(out)


def mat_mul(F, A, B):
    return tuple(vec_mat(F, row, B) for row in A)


def identity_matrix(d):
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def determinant(F, A):
    """Gaussian elimination over F."""
    rows = [list(r) for r in A]
    d = len(rows)
    det = 1
    for col in range(d):
        pivot = next((r for r in range(col, d) if rows[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = F.neg(det)
        det = F.mul(det, rows[col][col])
        inv = F.inv(rows[col][col])
        for r in range(col + 1, d):
            factor = F.mul(rows[r][col], inv)
            if factor:
                rows[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(rows[r], rows[col])]
    return det


def elementary(F, d, i, j, a):
    """I + a*E_ij."""
    return tuple(
        tuple((1 if r == c else 0) if (r, c) != (i, j) else a for c in range(d))
        for r in range(d)
    )


def diagonal(F, entries):
    d = len(entries)
    return tuple(tuple(entries[r] if r == c else 0 for c in range(d)) for r in range(d))
