"""
SemiPrim - Analysis Reports
One report per group: taxonomy, antiplinths, metrics, bound verdicts and,
where it applies, the alternating block-action classification. Reports
serialize to JSON and CSV.
"""

import csv
import json
from dataclasses import dataclass

from src.actions.taxonomy import antiplinths, classify
from src.classification.covers import ClassificationOutcome, ansn_cover_classify
from src.core.errors import PreconditionError
from src.harness.bounds import BOUND_IDS, STATUS_FAIL, BoundEngine, BoundVerdict
from src.metrics.summary import MetricReport, compute_metrics
from src.structure.lattice import plinths


@dataclass(frozen=True)
class AnalysisReport:
    name: str
    degree: int
    order: int
    label: str
    # (order, number of orbits) per antiplinth
    antiplinths: tuple
    plinths: tuple
    metrics: MetricReport = None
    verdicts: tuple = ()
    classification: ClassificationOutcome = None

    @property
    def failed(self):
        return any(v.status == STATUS_FAIL for v in self.verdicts)

    def to_dict(self):
        return {
            "name": self.name,
            "degree": self.degree,
            "order": self.order,
            "label": self.label,
            "antiplinths": [{"order": o, "orbits": k} for o, k in self.antiplinths],
            "plinths": list(self.plinths),
            "metrics": self.metrics.to_dict() if self.metrics else None,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "classification": self.classification.to_dict() if self.classification else None,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            name=data["name"],
            degree=data["degree"],
            order=data["order"],
            label=data["label"],
            antiplinths=tuple((a["order"], a["orbits"]) for a in data["antiplinths"]),
            plinths=tuple(data["plinths"]),
            metrics=MetricReport.from_dict(data["metrics"]) if data["metrics"] else None,
            verdicts=tuple(BoundVerdict.from_dict(v) for v in data["verdicts"]),
            classification=(
                ClassificationOutcome.from_dict(data["classification"]) if data["classification"] else None
            ),
        )


def analyze(group, name=None, time_budget=None, engine=None):
    label = classify(group)
    metrics = compute_metrics(group, time_budget)
    verdicts = ()
    outcome = None
    if label.is_transitive:
        engine = engine or BoundEngine()
        verdicts = tuple(engine.evaluate(group, metrics))
    if label.is_semiprimitive:
        try:
            outcome = ansn_cover_classify(group)
        except PreconditionError:
            outcome = None
    return AnalysisReport(
        name=name or group.name or f"group@{group.degree}",
        degree=group.degree,
        order=group.order(),
        label=label.label,
        antiplinths=tuple((a.order(), len(a.orbits())) for a in antiplinths(group)),
        plinths=tuple(p.order() for p in plinths(group)),
        metrics=metrics,
        verdicts=verdicts,
        classification=outcome,
    )


# ---- Serialization ----

def entry_to_dict(entry):
    """Reports serialize via to_dict; per-entry error records are already dicts."""
    return entry if isinstance(entry, dict) else entry.to_dict()


def entry_from_dict(data):
    return data if "error" in data else AnalysisReport.from_dict(data)


def to_json(entries):
    return json.dumps([entry_to_dict(e) for e in entries], indent=2)


def from_json(text):
    return [entry_from_dict(d) for d in json.loads(text)]


CSV_FIELDS = (
    "name", "degree", "order", "label", "base_size", "minimal_degree", "fpr_value", "chief_length",
) + BOUND_IDS + ("theorem_case", "table_row", "error")


def flatten(entry):
    if isinstance(entry, dict):
        return {"name": entry.get("name", ""), "error": entry["error"]}
    row = {"name": entry.name, "degree": entry.degree, "order": entry.order, "label": entry.label}
    if entry.metrics:
        metrics = entry.metrics.to_dict()
        for key in ("base_size", "minimal_degree", "chief_length"):
            row[key] = metrics[key]
        # "fpr" is the verdict column
        row["fpr_value"] = metrics["fpr"]
    for verdict in entry.verdicts:
        row[verdict.bound_id] = verdict.status
    if entry.classification:
        row["theorem_case"] = entry.classification.theorem_case
        row["table_row"] = entry.classification.row_key or ""
    return row


def write_rows(rows, stream, fields=None):
    """CSV with one row per dict; columns from ``fields`` or the first row's keys."""
    rows = list(rows)
    if fields is None:
        fields = list(rows[0]) if rows else []
    writer = csv.DictWriter(stream, fieldnames=list(fields), restval="", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def write_csv(entries, stream):
    write_rows((flatten(e) for e in entries), stream, CSV_FIELDS)
