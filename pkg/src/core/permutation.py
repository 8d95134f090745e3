"""
SemiPrim - Permutations
Composition convention, disjoint-cycle notation and the generator file format.
Points are 0-based in code and 1-based in every text format.
"""

import pyparsing as pp
from sympy.combinatorics import Permutation

from src.core.errors import DegreeMismatchError, ExprSyntaxError, PointOutOfRangeError

_LP = pp.Suppress("(")
_RP = pp.Suppress(")")

point = pp.Word(pp.nums).set_parse_action(lambda tokens: int(tokens[0]))
cycle = pp.Group(_LP + pp.ZeroOrMore(point) + _RP)
cycle_product = pp.Group(pp.OneOrMore(cycle))

_perm_line = cycle_product + pp.StringEnd()
_degree_line = pp.Suppress(pp.Keyword("degree")) + point + pp.StringEnd()


def identity(degree):
    return Permutation(list(range(degree)))


def compose(p, q):
    """Apply p first, then q: the result maps i to q(p(i))."""
    if p.size != q.size:
        raise DegreeMismatchError(p.size, q.size)
    return p * q


def inverse(p):
    return ~p


def conjugate(x, g):
    """g^-1 x g, the image of x under conjugation by g."""
    return ~g * x * g


def commutator(a, b):
    return ~a * ~b * a * b


def image(p, pt):
    return p.array_form[pt]


def moved_count(p):
    return sum(1 for i, j in enumerate(p.array_form) if i != j)


def fixed_count(p):
    return sum(1 for i, j in enumerate(p.array_form) if i == j)


def check_point(pt, degree):
    if not 0 <= pt < degree:
        raise PointOutOfRangeError(pt, degree)
    return pt


def from_cycles(cycles, degree, offset=0):
    """Build a permutation from 1-based cycles, validating every point."""
    images = list(range(degree))
    seen = set()
    for cyc in cycles:
        for pt in cyc:
            if not 1 <= pt <= degree:
                raise ExprSyntaxError(f"point {pt} outside 1..{degree}", offset)
            if pt in seen:
                raise ExprSyntaxError(f"point {pt} repeated in cycle notation", offset)
            seen.add(pt)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
    return Permutation(images)


def parse_cycles(text, degree):
    """Parse disjoint-cycle notation such as ``(1 2 3)(4 5)``; ``()`` is the identity."""
    try:
        parsed = _perm_line.parse_string(text)
    except pp.ParseException as exc:
        raise ExprSyntaxError(f"bad cycle notation {text.strip()!r}", exc.loc) from None
    return from_cycles([list(c) for c in parsed[0]], degree)


def format_cycles(p):
    cycles = p.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


def as_cycles(p):
    """1-based cycle tuples of p, the identity as a single empty cycle."""
    cycles = tuple(tuple(i + 1 for i in c) for c in p.cyclic_form)
    return cycles or ((),)


# ---- Generator files ----

def parse_generators(text):
    """Read the generator format: a ``degree n`` line, then one permutation per line."""
    degree = None
    gens = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.split("#", 1)[0].strip()
        if line:
            if degree is None:
                try:
                    degree = _degree_line.parse_string(line)[0]
                except pp.ParseException as exc:
                    raise ExprSyntaxError("expected 'degree n' header", offset + exc.loc) from None
            else:
                try:
                    parsed = _perm_line.parse_string(line)
                except pp.ParseException as exc:
                    raise ExprSyntaxError(f"bad generator {line!r}", offset + exc.loc) from None
                gens.append(from_cycles([list(c) for c in parsed[0]], degree, offset))
        offset += len(raw)
    if degree is None:
        raise ExprSyntaxError("missing 'degree n' header", 0)
    return degree, gens


def format_generators(degree, gens):
    lines = [f"degree {degree}"]
    lines.extend(format_cycles(g) for g in gens)
    return "\n".join(lines) + "\n"


def read_generator_file(path):
    with open(path, encoding="ascii") as fh:
        return parse_generators(fh.read())


def write_generator_file(path, degree, gens):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_generators(degree, gens))
