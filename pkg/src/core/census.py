"""
SemiPrim - Element Census
Enumerates a group through its stabilizer chain. Images are packed as bytes
up to degree 256 (composition is a single bytes.translate) and as tuples above.
"""

from dataclasses import dataclass
from math import lcm

from sympy.combinatorics import Permutation

from src import config
from src.core.errors import CensusCapExceeded


class ImageArith:
    """Arithmetic on packed image tables; mul(a, b) applies a first, then b."""

    def __init__(self, degree):
        self.degree = degree
        self.packed = degree <= 256
        if self.packed:
            self.identity = bytes(range(degree))
            self._pad = bytes(range(degree, 256))
            self._ident_int = int.from_bytes(self.identity, "little")
        else:
            self.identity = tuple(range(degree))
            self._pad = None

    def pack(self, images):
        return bytes(images) if self.packed else tuple(images)

    def table(self, b):
        return b + self._pad if self.packed else b

    def mul(self, a, b):
        return self.mul_table(a, self.table(b))

    def mul_table(self, a, tb):
        if self.packed:
            return a.translate(tb)
        return tuple(map(tb.__getitem__, a))

    def inv(self, a):
        result = [0] * self.degree
        for i, v in enumerate(a):
            result[v] = i
        return self.pack(result)

    def conj(self, x, g, ginv):
        return self.mul(self.mul(ginv, x), g)

    def fixed(self, a):
        if self.packed:
            diff = int.from_bytes(a, "little") ^ self._ident_int
            return diff.to_bytes(self.degree, "little").count(0)
        return sum(1 for i, v in enumerate(a) if i == v)

    def order(self, a):
        seen = bytearray(self.degree)
        result = 1
        for start in range(self.degree):
            if seen[start]:
                continue
            length = 0
            pt = start
            while not seen[pt]:
                seen[pt] = 1
                pt = a[pt]
                length += 1
            result = lcm(result, length)
        return result

    def to_perm(self, a):
        return Permutation(list(a))


@dataclass(frozen=True)
class ConjugacyClass:
    representative: object
    size: int
    element_order: int
    fixed: int
    index: int


class Census:
    """Full element enumeration of a group, identity first, deterministic order."""

    def __init__(self, group, cap=None):
        cap = config.CENSUS_CAP if cap is None else cap
        order = group.order()
        if order > cap:
            raise CensusCapExceeded(order, cap)
        self.group = group
        self.order = order
        self.arith = ImageArith(group.degree)
        chain = group.chain()
        self._levels = [
            [self.arith.table(self.arith.pack(u.array_form)) for u in transversal.values()]
            for transversal in chain.transversals
        ]
        self._classes = None

    def __len__(self):
        return self.order

    def packed(self):
        if not self._levels:
            yield self.arith.identity
            return
        yield from self._walk(len(self._levels) - 1, self.arith.identity)

    def _walk(self, level, acc):
        mul = self.arith.mul_table
        if level == 0:
            for t in self._levels[0]:
                yield mul(acc, t)
        else:
            for t in self._levels[level]:
                yield from self._walk(level - 1, mul(acc, t))

    def elements(self):
        for a in self.packed():
            yield self.arith.to_perm(a)

    def classes(self):
        """Conjugacy classes; each representative is the first class member enumerated."""
        if self._classes is not None:
            return self._classes
        arith = self.arith
        gens = [arith.pack(g.array_form) for g in self.group.generators]
        pairs = [(g, arith.inv(g)) for g in gens]
        seen = set()
        classes = []
        for index, x in enumerate(self.packed()):
            if x in seen:
                continue
            seen.add(x)
            members = [x]
            for y in members:
                for g, ginv in pairs:
                    z = arith.conj(y, g, ginv)
                    if z not in seen:
                        seen.add(z)
                        members.append(z)
            classes.append(ConjugacyClass(x, len(members), arith.order(x), arith.fixed(x), index))
        self._classes = classes
        return classes

    def involution_count(self):
        if self._classes is not None:
            return sum(c.size for c in self._classes if c.element_order == 2)
        arith = self.arith
        ident = arith.identity
        return sum(1 for a in self.packed() if a != ident and arith.mul(a, a) == ident)

    def fixity_profile(self):
        """(fixed points, enumeration index, packed element) of the first element with maximal fixity."""
        ident = self.arith.identity
        best = None
        for index, a in enumerate(self.packed()):
            if a == ident:
                continue
            f = self.arith.fixed(a)
            if best is None or f > best[0]:
                best = (f, index, a)
        return best

    def has_element_of_order(self, k):
        if self._classes is not None:
            return any(c.element_order == k for c in self._classes)
        return any(self.arith.order(a) == k for a in self.packed())
