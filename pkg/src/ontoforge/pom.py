"""Candidate-concept model: extraction, thresholds, expert review, boosting.

Concept relevance is the relative term frequency over the whole tagged
corpus (punctuation tokens included in the denominator).  Thresholds are
expressed in percent, so ``theta=0.00142`` keeps entities whose
``relevance * 100 >= 0.00142``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, replace
from pathlib import Path

from .nlp import NOUN_TAGS, TaggedDocument

MAX_COMPOUND_LEN = 3

REVIEW_HEADER = "label\tkind\tfrequency\trelevance\toverride"


class PomError(Exception):
    pass


class EmptyCorpusError(PomError):
    pass


class ReviewFileError(PomError):
    pass


@dataclass(frozen=True)
class PomEntity:
    label: str
    kind: str  # "concept" or "relation"
    relevance: float
    frequency: int
    override: float | None = None


@dataclass(frozen=True)
class Pom:
    entities: dict[str, PomEntity]
    corpus_token_count: int

    def sorted_entities(self) -> list[PomEntity]:
        return sorted(self.entities.values(), key=lambda e: (-e.relevance, e.label))


def extract_concepts(docs: list[TaggedDocument]) -> Pom:
    """One concept entity per distinct noun lemma and noun-compound n-gram.

    Compounds are the contiguous 2- and 3-token lemma sequences inside
    maximal runs of noun-tagged tokens.
    """
    token_count = sum(doc.token_count for doc in docs)
    if token_count == 0:
        raise EmptyCorpusError("tagged corpus has no tokens")
    counts: Counter[str] = Counter()
    for doc in docs:
        for sentence in doc.sentences:
            run: list[str] = []
            for token in sentence.tokens:
                if token.tag in NOUN_TAGS:
                    counts[token.lemma] += 1
                    run.append(token.lemma)
                else:
                    _count_compounds(run, counts)
                    run = []
            _count_compounds(run, counts)
    entities = {
        label: PomEntity(
            label=label,
            kind="concept",
            relevance=freq / token_count,
            frequency=freq,
        )
        for label, freq in counts.items()
    }
    return Pom(entities=entities, corpus_token_count=token_count)


def _count_compounds(run: list[str], counts: Counter) -> None:
    for n in range(2, MAX_COMPOUND_LEN + 1):
        for i in range(len(run) - n + 1):
            counts[" ".join(run[i:i + n])] += 1


def static_threshold(pom: Pom, theta: float) -> list[PomEntity]:
    """Entities with relevance*100 >= theta, best first; overrides ignored."""
    if theta < 0:
        raise ValueError("theta must be >= 0")
    kept = [e for e in pom.entities.values() if e.relevance * 100 >= theta]
    return sorted(kept, key=lambda e: (-e.relevance, e.label))


def variable_threshold(pom: Pom, theta: float) -> list[PomEntity]:
    """Static threshold with expert overrides: 1.0 forces keep, 0.0 drop."""
    kept = []
    for entity in pom.entities.values():
        if entity.override == 1.0:
            kept.append(entity)
        elif entity.override == 0.0:
            continue
        elif entity.relevance * 100 >= theta:
            kept.append(entity)
    return sorted(kept, key=lambda e: (-e.relevance, e.label))


def boost_concepts(pom: Pom, found_labels: set[str], factor: float) -> Pom:
    """Promote concepts confirmed by the document repository."""
    if factor <= 1:
        raise ValueError("boost factor must be > 1")
    entities = dict(pom.entities)
    for label in found_labels:
        entity = entities.get(label)
        if entity is not None:
            entities[label] = replace(entity, relevance=min(1.0, entity.relevance * factor))
    return Pom(entities=entities, corpus_token_count=pom.corpus_token_count)


def export_review(pom: Pom, path) -> None:
    """Write the review TSV (override column left blank for the expert)."""
    lines = [REVIEW_HEADER]
    for entity in pom.sorted_entities():
        lines.append(
            f"{entity.label}\t{entity.kind}\t{entity.frequency}\t{entity.relevance:.6f}\t"
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def import_review(pom: Pom, path) -> Pom:
    """Apply expert overrides from a review TSV; blank cells leave entities be."""
    text = Path(path).read_text(encoding="utf-8")
    lines = [line for line in text.splitlines() if line.strip()]
    if lines and lines[0].startswith("label\t"):
        lines = lines[1:]
    entities = dict(pom.entities)
    unknown: list[str] = []
    for lineno, line in enumerate(lines, 2):
        parts = line.split("\t")
        if len(parts) < 5:
            parts = parts + [""] * (5 - len(parts))
        label, cell = parts[0], parts[4].strip()
        if label not in entities:
            unknown.append(label)
            continue
        if not cell:
            continue
        if cell not in ("0", "0.0", "1", "1.0"):
            raise ReviewFileError(
                f"line {lineno}: override must be 0, 1 or blank, got {cell!r}"
            )
        entities[label] = replace(entities[label], override=float(cell))
    if unknown:
        raise ReviewFileError("unknown labels: " + ", ".join(sorted(unknown)))
    return Pom(entities=entities, corpus_token_count=pom.corpus_token_count)


def pom_to_dict(pom: Pom) -> dict:
    items = []
    for entity in pom.sorted_entities():
        item = {
            "label": entity.label,
            "kind": entity.kind,
            "relevance": entity.relevance,
            "frequency": entity.frequency,
        }
        if entity.override is not None:
            item["override"] = entity.override
        items.append(item)
    return {"corpus_token_count": pom.corpus_token_count, "entities": items}


def pom_from_dict(payload: dict) -> Pom:
    entities = {}
    for item in payload["entities"]:
        entities[item["label"]] = PomEntity(
            label=item["label"],
            kind=item["kind"],
            relevance=item["relevance"],
            frequency=item["frequency"],
            override=item.get("override"),
        )
    return Pom(entities=entities, corpus_token_count=payload["corpus_token_count"])


def save_pom(pom: Pom, path) -> None:
    Path(path).write_text(
        json.dumps(pom_to_dict(pom), indent=2, sort_keys=False) + "\n",
        encoding="utf-8",
    )


def load_pom(path) -> Pom:
    return pom_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
