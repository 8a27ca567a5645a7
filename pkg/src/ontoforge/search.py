"""Concept indexing of the document repository, query expansion and ranking.

A document is annotated with a concept when its lemma stream contains the
concept's label, an alias, or a WordNet synonym of either (multi-word
forms as contiguous lemmas inside one sentence).  Query terms resolve the
same way; graph-related concepts join at ``decay ** distance`` weight and
per-user profile ratings multiply matched-concept weights by
``1 + rating``.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .nlp import Tagger, lemmatize, tag_text
from .ontology import Ontology, related_concepts
from .pom import Pom, boost_concepts
from .wordnet import WordnetDb, synonyms

DEFAULT_DECAY = 0.5
DEFAULT_MAX_DISTANCE = 2
DEFAULT_INCREMENT = 1.0
DEFAULT_LITERAL_WEIGHT = 0.25
QUERY_MODES = ("expand", "trim", "substitute")


class SearchError(Exception):
    pass


class EmptyExpansionError(SearchError):
    pass


class UnknownDocumentError(SearchError):
    pass


@dataclass(frozen=True)
class IndexedMetadata:
    concept_to_docs: dict[str, frozenset[str]]
    doc_to_concepts: dict[str, frozenset[str]]
    doc_titles: dict[str, str]


@dataclass(frozen=True)
class UserProfile:
    user_id: str
    ratings: dict[str, float] = field(default_factory=dict)

    def rating(self, concept: str) -> float:
        return self.ratings.get(concept, 0.0)


@dataclass(frozen=True)
class ExpandedQuery:
    weighted_concepts: dict[str, float]
    original_terms: list[str]


@dataclass(frozen=True)
class SearchResult:
    doc_id: str
    title: str
    score: float
    matched_concepts: list[tuple[str, float]]


def _concept_forms(onto: Ontology, db: WordnetDb) -> dict[str, set[str]]:
    """All surface lemma phrases that should annotate each concept.

    Synonym lookups are strict (no head-noun fallback): a compound absent
    from WordNet must not inherit its head's synonyms, or every document
    naming the head would be annotated with the compound.
    """
    forms: dict[str, set[str]] = {}
    for label, info in onto.concepts.items():
        bag = {label} | set(info.aliases)
        bag |= synonyms(db, label, head_fallback=False)
        for alias in info.aliases:
            bag |= synonyms(db, alias, head_fallback=False)
        forms[label] = bag
    return forms


def index_repository(
    docs: list[tuple[str, str, str]],
    onto: Ontology,
    db: WordnetDb,
    tagger: Tagger | None = None,
) -> IndexedMetadata:
    """Annotate every document with the concepts whose forms it contains."""
    ids = [doc_id for doc_id, _, _ in docs]
    if len(set(ids)) != len(ids):
        raise SearchError("duplicate doc_ids in repository")
    by_first: dict[str, list[tuple[str, tuple[str, ...]]]] = defaultdict(list)
    for label, bag in _concept_forms(onto, db).items():
        for form in bag:
            parts = tuple(form.split(" "))
            by_first[parts[0]].append((label, parts))

    concept_to_docs: dict[str, set[str]] = defaultdict(set)
    doc_titles: dict[str, str] = {}
    for doc_id, title, text in docs:
        doc_titles[doc_id] = title
        for sentence in tag_text(text, tagger):
            lemmas = [t.lemma for t in sentence.tokens]
            for i, lemma in enumerate(lemmas):
                for label, parts in by_first.get(lemma, ()):
                    if tuple(lemmas[i:i + len(parts)]) == parts:
                        concept_to_docs[label].add(doc_id)

    doc_to_concepts: dict[str, set[str]] = defaultdict(set)
    for label, doc_ids in concept_to_docs.items():
        for doc_id in doc_ids:
            doc_to_concepts[doc_id].add(label)
    return IndexedMetadata(
        concept_to_docs={c: frozenset(d) for c, d in concept_to_docs.items()},
        doc_to_concepts={d: frozenset(c) for d, c in doc_to_concepts.items()},
        doc_titles=doc_titles,
    )


def _term_lemmas(term: str) -> list[str]:
    """Candidate lemma readings of a raw query term, most literal first."""
    lowered = term.strip().lower()
    candidates = [lowered]
    for tag in ("NNS", "VBZ"):
        lemma = lemmatize(lowered, tag)
        if lemma not in candidates:
            candidates.append(lemma)
    return candidates


def _resolve_term(term: str, onto: Ontology, db: WordnetDb) -> set[str]:
    """Concepts a query term names directly (label, alias or synonym)."""
    alias_index = onto.alias_index()
    for lemma in _term_lemmas(term):
        bag = {lemma} | synonyms(db, lemma)
        direct = {label for label in bag if label in onto.concepts}
        direct |= {alias_index[a] for a in bag if a in alias_index}
        if direct:
            return direct
    return set()


def expand_query(
    terms: list[str],
    onto: Ontology,
    db: WordnetDb,
    max_distance: int = DEFAULT_MAX_DISTANCE,
    decay: float = DEFAULT_DECAY,
    mode: str = "expand",
    literal_fallback: bool = True,
) -> ExpandedQuery:
    """Resolve terms to weighted concepts; see QUERY_MODES for rewriting."""
    if mode not in QUERY_MODES:
        raise SearchError(f"unknown query mode {mode!r}")
    if not 0 < decay < 1:
        raise SearchError("decay must be in (0, 1)")
    cleaned = [t for t in (term.strip().lower() for term in terms) if t]
    if not cleaned:
        raise EmptyExpansionError("query is empty")

    direct: set[str] = set()
    unmatched: list[str] = []
    for term in cleaned:
        concepts = _resolve_term(term, onto, db)
        if concepts:
            direct |= concepts
        else:
            unmatched.append(term)

    if mode == "substitute":
        direct = {_best_synonym_concept(label, onto, db) for label in direct}

    weighted: dict[str, float] = {label: 1.0 for label in direct}
    if max_distance >= 1:
        alias_index = onto.alias_index()
        for label in sorted(direct):
            for neighbor, distance in related_concepts(onto, label, max_distance):
                resolved = alias_index.get(neighbor, neighbor)
                if resolved not in onto.concepts:
                    continue
                weight = decay ** distance
                if weighted.get(resolved, 0.0) < weight:
                    weighted[resolved] = weight

    original_terms = [] if mode == "trim" else unmatched
    if not weighted and not (literal_fallback and original_terms):
        raise EmptyExpansionError(
            "no query term matched a concept and literal fallback is off"
        )
    return ExpandedQuery(weighted_concepts=weighted, original_terms=original_terms)


def _best_synonym_concept(label: str, onto: Ontology, db: WordnetDb) -> str:
    """The highest-relevance concept among a label and its synonym concepts."""
    candidates = [
        other for other in synonyms(db, label) | {label}
        if other in onto.concepts
    ]
    if not candidates:
        return label
    candidates.sort(key=lambda c: (-onto.concepts[c].relevance, c))
    return candidates[0]


def execute_query(
    q: ExpandedQuery,
    idx: IndexedMetadata,
    profile: UserProfile,
    literal_weight: float = DEFAULT_LITERAL_WEIGHT,
) -> list[SearchResult]:
    """Rank candidate documents by profile-amplified concept weights."""
    scores: dict[str, float] = defaultdict(float)
    matched: dict[str, list[tuple[str, float]]] = defaultdict(list)
    for concept in sorted(q.weighted_concepts):
        weight = q.weighted_concepts[concept]
        for doc_id in idx.concept_to_docs.get(concept, ()):
            scores[doc_id] += weight * (1.0 + profile.rating(concept))
            matched[doc_id].append((concept, weight))
    for term in q.original_terms:
        needle = term.lower()
        for doc_id, title in idx.doc_titles.items():
            if needle in title.lower() or needle in doc_id.lower():
                scores[doc_id] += literal_weight
                matched[doc_id].append((term, literal_weight))
    results = [
        SearchResult(
            doc_id=doc_id,
            title=idx.doc_titles.get(doc_id, doc_id),
            score=scores[doc_id],
            matched_concepts=sorted(matched[doc_id]),
        )
        for doc_id in scores
    ]
    results.sort(key=lambda r: (-r.score, r.doc_id))
    return results


def record_selection(
    profile: UserProfile,
    doc_id: str,
    idx: IndexedMetadata,
    increment: float = DEFAULT_INCREMENT,
) -> UserProfile:
    """Raise the rating of every concept annotating the selected document."""
    if increment <= 0:
        raise SearchError("increment must be > 0")
    if doc_id not in idx.doc_titles:
        raise UnknownDocumentError(f"unknown doc_id {doc_id!r}")
    ratings = dict(profile.ratings)
    for concept in idx.doc_to_concepts.get(doc_id, ()):
        ratings[concept] = ratings.get(concept, 0.0) + increment
    return UserProfile(user_id=profile.user_id, ratings=ratings)


def repository_feedback(idx: IndexedMetadata, pom: Pom, factor: float) -> Pom:
    """Boost POM concepts that annotate at least one repository document."""
    found = {c for c, docs in idx.concept_to_docs.items() if docs}
    if not found:
        return pom
    return boost_concepts(pom, found, factor)


# ---------------------------------------------------------------------------
# persistence and canonical JSON

def results_json(results: list[SearchResult]) -> str:
    """Canonical JSON for search results; shared by CLI and HTTP API."""
    payload = [
        {
            "doc_id": r.doc_id,
            "title": r.title,
            "score": r.score,
            "matched_concepts": [
                {"label": label, "weight": weight} for label, weight in r.matched_concepts
            ],
        }
        for r in results
    ]
    return json.dumps(payload, indent=2) + "\n"


def save_index(idx: IndexedMetadata, path) -> None:
    payload = {
        "concept_to_docs": {
            c: sorted(docs) for c, docs in sorted(idx.concept_to_docs.items())
        },
        "doc_titles": dict(sorted(idx.doc_titles.items())),
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def load_index(path) -> IndexedMetadata:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    concept_to_docs = {
        c: frozenset(docs) for c, docs in payload["concept_to_docs"].items()
    }
    doc_to_concepts: dict[str, set[str]] = defaultdict(set)
    for concept, docs in concept_to_docs.items():
        for doc_id in docs:
            doc_to_concepts[doc_id].add(concept)
    return IndexedMetadata(
        concept_to_docs=concept_to_docs,
        doc_to_concepts={d: frozenset(c) for d, c in doc_to_concepts.items()},
        doc_titles=payload["doc_titles"],
    )


def load_profile(profiles_dir, user_id: str) -> UserProfile:
    path = Path(profiles_dir) / f"{user_id}.json"
    if not path.exists():
        return UserProfile(user_id=user_id)
    payload = json.loads(path.read_text(encoding="utf-8"))
    return UserProfile(user_id=payload["user_id"], ratings=payload.get("ratings", {}))


def save_profile(profile: UserProfile, profiles_dir) -> None:
    directory = Path(profiles_dir)
    directory.mkdir(parents=True, exist_ok=True)
    payload = {"user_id": profile.user_id, "ratings": dict(sorted(profile.ratings.items()))}
    (directory / f"{profile.user_id}.json").write_text(
        json.dumps(payload, indent=2) + "\n", encoding="utf-8"
    )


def load_repository(directory) -> list[tuple[str, str, str]]:
    """Read a repository directory of .txt files.

    doc_id is the relative posix path; title is the first non-empty line.
    """
    directory = Path(directory)
    docs = []
    for path in sorted(directory.rglob("*.txt")):
        text = path.read_text(encoding="utf-8")
        title = next((line.strip() for line in text.splitlines() if line.strip()), path.stem)
        docs.append((path.relative_to(directory).as_posix(), title, text))
    return docs
