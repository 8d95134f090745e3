"""
SemiPrim - Corpus Runner
Reads a corpus file (one atlas name, group expression or generator-file
path per line; `#` comments; `@` directives), analyzes each entry, and
reproduces the table of exceptional groups.
"""

import random
from dataclasses import dataclass, field
from pathlib import Path

from sympy.combinatorics import Permutation

from src import config
from src.atlas.expr import GroupExpr, is_group_expr
from src.atlas.registry import ATLAS_NAMES, atlas_load, construct
from src.core.errors import ExprSyntaxError, SemiPrimError
from src.core.group import PermGroup
from src.core.permutation import as_cycles, read_generator_file
from src.harness.bounds import STATUS_EXEMPT, STATUS_FAIL, STATUS_INFO, STATUS_PASS, BoundEngine
from src.harness.report import analyze
from src.metrics.base_size import base_size_exact
from src.metrics.degree import minimal_degree

DIRECTIVES = ("@census_cap", "@time_budget", "@random")


def resolve_group(target):
    """An atlas name, a group expression, or a path to a generator file."""
    target = target.strip()
    if target in ATLAS_NAMES:
        return atlas_load(target)
    if is_group_expr(target):
        return construct(target)
    path = Path(target)
    if path.exists():
        degree, gens = read_generator_file(path)
        return PermGroup(degree, gens, name=path.name)
    raise ExprSyntaxError(f"not an atlas name, group expression or generator file: {target!r}", 0)


# ---- Corpus files ----

def random_transitive_expressions(count, degree, seed):
    """Canonical expressions of random 2-generator transitive subgroups of S_degree."""
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        perms = []
        for _ in range(2):
            images = list(range(degree))
            rng.shuffle(images)
            perms.append(Permutation(images))
        if not PermGroup(degree, perms).is_transitive():
            continue
        cycles = tuple(as_cycles(p) for p in perms)
        found.append(str(GroupExpr("group", (degree, cycles))))
    return found


def parse_corpus(text, seed=None):
    """List of entries: ("entry", target) or ("set", name, value)."""
    seed = config.DEFAULT_SEED if seed is None else seed
    items = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("@"):
            items.append(("entry", line))
            continue
        parts = line.split()
        if parts[0] not in DIRECTIVES:
            raise ExprSyntaxError(f"unknown corpus directive {parts[0]!r}", raw.index(parts[0]))
        try:
            if parts[0] == "@census_cap":
                items.append(("set", "CENSUS_CAP", int(parts[1])))
            elif parts[0] == "@time_budget":
                items.append(("set", "TIME_BUDGET", float(parts[1])))
            else:
                count, degree = int(parts[1]), int(parts[2])
                items.extend(("entry", e) for e in random_transitive_expressions(count, degree, seed))
        except (IndexError, ValueError):
            raise ExprSyntaxError(f"malformed directive {line!r}", raw.index(parts[0])) from None
    return items


@dataclass
class CorpusResult:
    entries: list = field(default_factory=list)

    @property
    def reports(self):
        return [e for e in self.entries if not isinstance(e, dict)]

    @property
    def errors(self):
        return [e for e in self.entries if isinstance(e, dict)]

    def summary(self):
        counts = {STATUS_PASS: 0, STATUS_FAIL: 0, STATUS_EXEMPT: 0, STATUS_INFO: 0}
        for report in self.reports:
            for verdict in report.verdicts:
                counts[verdict.status] += 1
        counts["errors"] = len(self.errors)
        counts["groups"] = len(self.entries)
        return counts

    @property
    def exit_code(self):
        """Nonzero iff some verdict fails; errored entries are reported, not failed."""
        return 1 if any(r.failed for r in self.reports) else 0


def run_corpus(text, seed=None, engine=None, progress=None):
    """Analyze every corpus entry in file order; errors become {"name", "error"} records."""
    items = parse_corpus(text, seed)
    engine = engine or BoundEngine()
    result = CorpusResult()
    saved = {"CENSUS_CAP": config.CENSUS_CAP, "TIME_BUDGET": config.TIME_BUDGET}
    try:
        for item in items:
            if item[0] == "set":
                setattr(config, item[1], item[2])
                continue
            target = item[1]
            if progress:
                progress(target)
            try:
                group = resolve_group(target)
                result.entries.append(analyze(group, name=target, engine=engine))
            except SemiPrimError as e:
                result.entries.append({"name": target, "error": str(e)})
    finally:
        for key, value in saved.items():
            setattr(config, key, value)
    return result


def run_corpus_file(path, seed=None, engine=None, progress=None):
    with open(path, encoding="utf-8") as fh:
        return run_corpus(fh.read(), seed, engine, progress)


# ---- Table reproduction ----

# name -> (order, degree, base size, minimal degree)
EXPECTED_ROWS = {
    "24A7d112": (40320, 112, 5, 100),
    "AGL42d128": (322560, 128, 6, 112),
    "24A8nsd128": (322560, 128, 6, 112),
    "3A6d18": (1080, 18, 4, 12),
    "3A6x2d18": (2160, 18, 5, 12),
    "GL24d15": (180, 15, 2, 12),
    "GammaL24d15": (360, 15, 3, 12),
}


@dataclass(frozen=True)
class TableCheck:
    name: str
    expected: tuple
    computed: tuple

    @property
    def matches(self):
        return self.expected == self.computed

    def to_dict(self):
        keys = ("order", "degree", "base_size", "minimal_degree")
        return {
            "name": self.name,
            "expected": dict(zip(keys, self.expected)),
            "computed": dict(zip(keys, self.computed)),
            "matches": self.matches,
        }


def reproduce_tables(names=None, time_budget=None, progress=None):
    checks = []
    for name in names or EXPECTED_ROWS:
        if progress:
            progress(name)
        group = atlas_load(name)
        b, _ = base_size_exact(group, time_budget)
        m, _ = minimal_degree(group)
        checks.append(TableCheck(name, EXPECTED_ROWS[name], (group.order(), group.degree, b, m)))
    return checks
