"""
SemiPrim - Bound Engine
Checks a transitive group against the order, base-size, minimal-degree,
fixed-point-ratio and chief-length bounds for semiprimitive groups.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from src import config as settings
from src.actions.taxonomy import antiplinths, is_semiprimitive, quotient_image
from src.core.errors import PreconditionError
from src.core.exact import at_least_sqrt, decide_le, exact, from_text, log2_bounds, mul_bounds, sqrt_bounds, to_text
from src.metrics.summary import compute_metrics
from src.structure.lattice import socle_factors

# Verdict statuses
STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_EXEMPT = "exempt"
STATUS_INFO = "informational"

BOUND_IDS = ("order_4n", "order_basesize", "basesize", "mindeg", "fpr", "chieflen")

REASON_NOT_SEMIPRIMITIVE = "not semiprimitive"
REASON_ALTERNATING = "contains A_Omega"
REASON_SOCLE = "socle alternating"
REASON_TRIVIAL = "trivial group"


@dataclass(frozen=True)
class BoundVerdict:
    bound_id: str
    lhs: object
    rhs: object
    status: str
    exemption_reason: str = None
    holds: bool = None

    def to_dict(self):
        return {
            "bound_id": self.bound_id,
            "lhs": to_text(self.lhs),
            "rhs": to_text(self.rhs),
            "status": self.status,
            "exemption_reason": self.exemption_reason,
            "holds": self.holds,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            bound_id=data["bound_id"],
            lhs=from_text(data["lhs"]),
            rhs=from_text(data["rhs"]),
            status=data["status"],
            exemption_reason=data["exemption_reason"],
            holds=data["holds"],
        )


def contains_alternating(group):
    """G contains the alternating group on its points: |G| >= n!/2."""
    return 2 * group.order() >= factorial(group.degree)


def fpr_asserted(group):
    """True when some antiplinth's block image has a socle factor that is not alternating."""
    for normal in antiplinths(group):
        image = group if normal.is_trivial() else quotient_image(group, normal)
        if image.is_trivial():
            continue
        if any(shape.is_abelian or not shape.is_alternating for shape in socle_factors(image)):
            return True
    return False


class BoundEngine:
    def __init__(self, config=None):
        self.verdicts = []
        self.config = config or {}
        self.basesize_threshold = self.config.get("basesize_threshold", settings.BASESIZE_THRESHOLD)
        self.fpr_limit = Fraction(self.config.get("fpr_limit", Fraction(4, 7)))

    def evaluate(self, group, metrics=None):
        """Verdicts for every bound, in BOUND_IDS order."""
        if not group.is_transitive():
            raise PreconditionError("bound verification needs a transitive group", ["G transitive"])
        self.verdicts = []
        metrics = metrics or compute_metrics(group)

        if not is_semiprimitive(group):
            reason = REASON_NOT_SEMIPRIMITIVE
            general = chief = fpr_reason = reason
        else:
            general = REASON_ALTERNATING if contains_alternating(group) else None
            chief = None
            fpr_reason = general or (None if fpr_asserted(group) else REASON_SOCLE)

        self._check_order(group, metrics, general)
        self._check_order_basesize(group, metrics, general)
        self._check_basesize(group, metrics, general)
        self._check_mindeg(group, metrics, general)
        self._check_fpr(group, metrics, fpr_reason)
        self._check_chieflen(group, metrics, chief)
        return self.verdicts

    @property
    def failed(self):
        return any(v.status == STATUS_FAIL for v in self.verdicts)

    def _add(self, bound_id, lhs, rhs, holds, exemption=None, informational=False):
        if exemption:
            status = STATUS_EXEMPT
        elif informational:
            status = STATUS_INFO
        else:
            status = STATUS_PASS if holds else STATUS_FAIL
        self.verdicts.append(BoundVerdict(bound_id, lhs, rhs, status, exemption, holds))

    def _check_order(self, group, metrics, exemption):
        n = group.degree
        rhs = 4 ** n
        self._add("order_4n", metrics.order, rhs, metrics.order < rhs, exemption)

    def _check_order_basesize(self, group, metrics, exemption):
        n = group.degree

        def rhs(bits):
            log_n = log2_bounds(n, bits)
            return mul_bounds((4, 4), sqrt_bounds(n, bits), log_n, log_n)

        holds = decide_le(lambda bits: log2_bounds(metrics.order, bits), rhs)
        informational = n < self.basesize_threshold
        self._add("order_basesize", metrics.order, f"2^(4*sqrt({n})*log2({n})^2)", holds, exemption, informational)

    def _check_basesize(self, group, metrics, exemption):
        n = group.degree
        holds = decide_le(
            exact(metrics.base_size),
            lambda bits: mul_bounds((4, 4), sqrt_bounds(n, bits), log2_bounds(n, bits)),
        )
        informational = n < self.basesize_threshold
        self._add("basesize", metrics.base_size, f"4*sqrt({n})*log2({n})", holds, exemption, informational)

    def _check_mindeg(self, group, metrics, exemption):
        n = group.degree
        m = metrics.minimal_degree
        if m is None:
            self._add("mindeg", m, f"(sqrt({n})-1)/2", False, exemption or REASON_TRIVIAL)
            return
        # m >= (sqrt(n) - 1)/2  <=>  2m + 1 >= sqrt(n)
        self._add("mindeg", m, f"(sqrt({n})-1)/2", at_least_sqrt(2 * m + 1, n), exemption)

    def _check_fpr(self, group, metrics, exemption):
        if metrics.fpr is None:
            self._add("fpr", None, self.fpr_limit, False, exemption or REASON_TRIVIAL)
            return
        self._add("fpr", metrics.fpr, self.fpr_limit, metrics.fpr <= self.fpr_limit, exemption)

    def _check_chieflen(self, group, metrics, exemption):
        n = group.degree
        l = metrics.chief_length
        self._add("chieflen", l, f"2*log2({n})", 2 ** l <= n * n, exemption)


def verify_bounds(group, config=None, metrics=None):
    return BoundEngine(config).evaluate(group, metrics)
