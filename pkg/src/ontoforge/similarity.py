"""Concept similarity and similarity-driven concept-list reduction.

Two concepts sharing a WordNet noun synset score 1.0; otherwise the score
is the cosine of their corpus co-occurrence context vectors (raw counts,
no reweighting).
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass

from .nlp import NOUN_TAGS, VERB_TAGS, TaggedDocument
from .pom import PomEntity
from .wordnet import WordnetDb, are_synonyms

DEFAULT_WINDOW = 5
DEFAULT_REDUCTION_THRESHOLD = 0.95

_CONTEXT_TAGS = NOUN_TAGS | VERB_TAGS | {"JJ"}


@dataclass(frozen=True)
class ContextVector:
    concept: str
    weights: dict[str, float]


@dataclass(frozen=True)
class SimilarityPair:
    a: str
    b: str
    score: float
    source: str  # "synonym" or "cosine"


@dataclass(frozen=True)
class ReducedConcepts:
    kept: list[PomEntity]
    aliases: dict[str, tuple[str, ...]]  # kept label -> absorbed labels

    def __iter__(self):
        return iter(self.kept)

    def __len__(self) -> int:
        return len(self.kept)


def build_context_vectors(
    labels: list[str], docs: list[TaggedDocument], window: int = DEFAULT_WINDOW
) -> dict[str, ContextVector]:
    """Co-occurrence vectors for every label in one corpus pass.

    An occurrence of a (possibly multi-word) label contributes the
    noun/verb/adjective lemmas within +-window tokens of its span.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    by_first: dict[str, list[tuple[str, tuple[str, ...]]]] = defaultdict(list)
    for label in labels:
        parts = tuple(label.split(" "))
        by_first[parts[0]].append((label, parts))
    weights: dict[str, Counter] = {label: Counter() for label in labels}

    for doc in docs:
        for sentence in doc.sentences:
            tokens = sentence.tokens
            lemmas = [t.lemma for t in tokens]
            for i, lemma in enumerate(lemmas):
                for label, parts in by_first.get(lemma, ()):
                    width = len(parts)
                    if tuple(lemmas[i:i + width]) != parts:
                        continue
                    lo = max(0, i - window)
                    hi = min(len(tokens), i + width + window)
                    for j in range(lo, hi):
                        if i <= j < i + width:
                            continue
                        token = tokens[j]
                        if token.tag in _CONTEXT_TAGS and token.lemma != label:
                            weights[label][token.lemma] += 1
    return {
        label: ContextVector(concept=label, weights=dict(counter))
        for label, counter in weights.items()
    }


def context_vector(
    concept: str, docs: list[TaggedDocument], window: int = DEFAULT_WINDOW
) -> ContextVector:
    return build_context_vectors([concept], docs, window)[concept]


def cosine(u: ContextVector, v: ContextVector) -> float:
    """Cosine of two sparse count vectors; 0.0 when either is empty."""
    if not u.weights or not v.weights:
        return 0.0
    small, large = (u.weights, v.weights)
    if len(small) > len(large):
        small, large = large, small
    dot = sum(w * large[k] for k, w in small.items() if k in large)
    norm2 = sum(w * w for w in u.weights.values()) * sum(w * w for w in v.weights.values())
    return dot / math.sqrt(norm2)


def similarity(
    a: str,
    b: str,
    db: WordnetDb,
    docs: list[TaggedDocument],
    window: int = DEFAULT_WINDOW,
) -> SimilarityPair:
    """Synonyms score exactly 1.0; all other pairs get their cosine."""
    if a == b:
        raise ValueError("similarity is defined for distinct concepts")
    if are_synonyms(db, a, b):
        return SimilarityPair(a=a, b=b, score=1.0, source="synonym")
    vectors = build_context_vectors([a, b], docs, window)
    return SimilarityPair(
        a=a, b=b, score=cosine(vectors[a], vectors[b]), source="cosine"
    )


def reduce_by_similarity(
    concepts: list[PomEntity],
    threshold: float,
    db: WordnetDb,
    docs: list[TaggedDocument],
    window: int = DEFAULT_WINDOW,
) -> ReducedConcepts:
    """Drop concepts too similar to a higher-relevance concept.

    Concepts are scanned best-first; a dropped label becomes an alias of
    the kept concept that absorbed it.  Ties on relevance keep the
    lexicographically smaller label.
    """
    if not 0 < threshold <= 1:
        raise ValueError("threshold must be in (0, 1]")
    ordered = sorted(concepts, key=lambda e: (-e.relevance, e.label))
    vectors = build_context_vectors([e.label for e in ordered], docs, window)
    kept: list[PomEntity] = []
    aliases: dict[str, list[str]] = {}
    for candidate in ordered:
        absorbed_by = None
        for keeper in kept:
            if are_synonyms(db, keeper.label, candidate.label):
                score = 1.0
            else:
                score = cosine(vectors[keeper.label], vectors[candidate.label])
            if score >= threshold:
                absorbed_by = keeper.label
                break
        if absorbed_by is None:
            kept.append(candidate)
        else:
            aliases.setdefault(absorbed_by, []).append(candidate.label)
    return ReducedConcepts(
        kept=kept,
        aliases={label: tuple(absorbed) for label, absorbed in aliases.items()},
    )


def similar_pairs(
    labels: list[str],
    db: WordnetDb,
    docs: list[TaggedDocument],
    report_threshold: float,
    window: int = DEFAULT_WINDOW,
) -> list[SimilarityPair]:
    """All concept pairs scoring at or above the report threshold."""
    vectors = build_context_vectors(labels, docs, window)
    pairs: list[SimilarityPair] = []
    ordered = sorted(set(labels))
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if are_synonyms(db, a, b):
                pair = SimilarityPair(a=a, b=b, score=1.0, source="synonym")
            else:
                pair = SimilarityPair(
                    a=a, b=b, score=cosine(vectors[a], vectors[b]), source="cosine"
                )
            if pair.score >= report_threshold:
                pairs.append(pair)
    return pairs


def pairs_to_tsv(pairs: list[SimilarityPair]) -> str:
    lines = ["a\tb\tscore\tsource"]
    for pair in sorted(pairs, key=lambda p: (-p.score, p.a, p.b)):
        lines.append(f"{pair.a}\t{pair.b}\t{pair.score:.6f}\t{pair.source}")
    return "\n".join(lines) + "\n"
