"""Ontology agreement metrics and retrieval precision/recall.

The common-concepts percentage is 100 * common / (generated + manual),
truncated to three decimals.  Truncation (not rounding) is what the
reported reference figures imply: 500/68 prints as 7.352.  The division
is done in integer arithmetic so the third decimal is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ontology import Ontology
from .wordnet import WordnetDb, synonyms


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class ComparisonReport:
    case_name: str
    cc_percent: float
    generated_count: int
    manual_count: int
    common_count: int
    common_labels: frozenset[str]

    def to_dict(self) -> dict:
        return {
            "case": self.case_name,
            "cc_percent": self.cc_percent,
            "generated": self.generated_count,
            "manual": self.manual_count,
            "common": self.common_count,
            "common_labels": sorted(self.common_labels),
        }


def common_concepts(auto: set[str], manual: set[str], db: WordnetDb) -> set[str]:
    """Auto concepts whose synonym set (including themselves) hits manual."""
    common = set()
    for label in auto:
        if label in manual or (synonyms(db, label) & manual):
            common.add(label)
    return common


def cc_percent(common: int, generated: int, manual: int) -> float:
    """100*common/(generated+manual), truncated to exactly three decimals."""
    if common < 0:
        raise EvaluationError("common count must be >= 0")
    total = generated + manual
    if total <= 0:
        raise EvaluationError("generated + manual must be positive")
    return (100_000 * common // total) / 1000.0


def compare(
    auto_onto: Ontology,
    manual_classes: set[str],
    db: WordnetDb,
    case_name: str = "comparison",
) -> ComparisonReport:
    auto_labels = set(auto_onto.concepts)
    common = common_concepts(auto_labels, manual_classes, db)
    generated = len(auto_labels)
    manual = len(manual_classes)
    if generated + manual == 0:
        percent = 0.0
    else:
        percent = cc_percent(len(common), generated, manual)
    return ComparisonReport(
        case_name=case_name,
        cc_percent=percent,
        generated_count=generated,
        manual_count=manual,
        common_count=len(common),
        common_labels=frozenset(common),
    )


def format_report(report: ComparisonReport) -> str:
    """Human-readable row in the reference tables' column order."""
    header = (
        "Case\tCommon concepts (%)\tNo. generated concepts above threshold\t"
        "No. concepts manual ontology\tNo. common concepts"
    )
    row = (
        f"{report.case_name}\t{report.cc_percent:.3f}\t{report.generated_count}\t"
        f"{report.manual_count}\t{report.common_count}"
    )
    return header + "\n" + row + "\n"


def precision(retrieved: set, relevant: set) -> float:
    if not retrieved:
        raise EvaluationError("precision undefined for empty retrieved set")
    return len(retrieved & relevant) / len(retrieved)


def recall(retrieved: set, relevant: set) -> float:
    if not relevant:
        raise EvaluationError("recall undefined for empty relevant set")
    return len(retrieved & relevant) / len(relevant)
