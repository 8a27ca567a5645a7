"""Ontology assembly, Turtle serialization, class extraction and graph queries.

Concepts become OWL classes; relations become object properties and are
kept only when both end phrases resolve to accepted concepts.  ``be``
relations from the copula rule turn into subclass edges instead (kept
acyclic).  Serialization is deterministic: everything is sorted.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from urllib.parse import quote

from . import rdf
from .pom import PomEntity
from .relations import Relation

DEFAULT_BASE_IRI = "http://ontoforge.local"


@dataclass(frozen=True)
class ConceptInfo:
    relevance: float
    aliases: tuple[str, ...] = ()


@dataclass(frozen=True)
class Ontology:
    concepts: dict[str, ConceptInfo]
    relations: tuple[Relation, ...] = ()
    subclass_edges: tuple[tuple[str, str], ...] = ()

    def alias_index(self) -> dict[str, str]:
        return {
            alias: label
            for label, info in self.concepts.items()
            for alias in info.aliases
        }


def build_ontology(
    concepts: list[PomEntity],
    relations: list[Relation],
    aliases: dict[str, tuple[str, ...]] | None = None,
    subclass_from_copula: bool = True,
) -> Ontology:
    """Assemble accepted concepts and the relations closed over them."""
    concept_map: dict[str, ConceptInfo] = {}
    for entity in concepts:
        label = entity.label.strip().lower()
        previous = concept_map.get(label)
        relevance = entity.relevance if previous is None else max(previous.relevance, entity.relevance)
        concept_map[label] = ConceptInfo(relevance=relevance)
    if aliases:
        for label, absorbed in aliases.items():
            if label not in concept_map:
                continue
            clean = tuple(sorted(a for a in set(absorbed) if a not in concept_map))
            info = concept_map[label]
            concept_map[label] = ConceptInfo(relevance=info.relevance, aliases=clean)

    alias_to_label = {
        alias: label for label, info in concept_map.items() for alias in info.aliases
    }

    def resolve(phrase: str) -> str | None:
        key = phrase.strip().lower()
        if key in concept_map:
            return key
        return alias_to_label.get(key)

    kept: dict[tuple[str, str, str], Relation] = {}
    subclass: list[tuple[str, str]] = []
    children: dict[str, set[str]] = {}

    def creates_cycle(child: str, parent: str) -> bool:
        seen = {parent}
        queue = deque([parent])
        while queue:
            node = queue.popleft()
            if node == child:
                return True
            for nxt in children.get(node, ()):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return False

    for relation in relations:
        domain = resolve(relation.domain)
        rng = resolve(relation.range)
        if domain is None or rng is None:
            continue
        if subclass_from_copula and relation.label == "be" and domain != rng:
            if not creates_cycle(domain, rng):
                if (domain, rng) not in set(subclass):
                    subclass.append((domain, rng))
                    children.setdefault(domain, set()).add(rng)
            continue
        key = (relation.label, domain, rng)
        previous = kept.get(key)
        if previous is None:
            kept[key] = Relation(
                label=relation.label,
                domain=domain,
                range=rng,
                sentence_ref=relation.sentence_ref,
                confidence=relation.confidence,
                count=relation.count,
            )
        else:
            kept[key] = Relation(
                label=previous.label,
                domain=previous.domain,
                range=previous.range,
                sentence_ref=previous.sentence_ref,
                confidence=max(previous.confidence, relation.confidence),
                count=previous.count + relation.count,
            )

    ordered = sorted(kept.values(), key=lambda r: (r.label, r.domain, r.range))
    return Ontology(
        concepts=concept_map,
        relations=tuple(ordered),
        subclass_edges=tuple(sorted(subclass)),
    )


def concept_iri(label: str, base_iri: str = DEFAULT_BASE_IRI) -> str:
    slug = quote(label.replace(" ", "-"), safe="-._~")
    return f"{base_iri}/concept/{slug}"


def serialize_turtle(onto: Ontology, base_iri: str = DEFAULT_BASE_IRI) -> str:
    """Deterministic Turtle text for the ontology."""
    lines = [
        "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .",
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .",
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .",
        "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .",
        f"@prefix of: <{base_iri}/ns#> .",
        "",
    ]
    for label in sorted(onto.concepts):
        info = onto.concepts[label]
        lines.append(f"<{concept_iri(label, base_iri)}> a owl:Class ;")
        lines.append(f'    rdfs:label "{rdf.escape_literal(label)}" ;')
        tail = " ;" if info.aliases else " ."
        lines.append(f'    of:relevance "{info.relevance:.9f}"^^xsd:decimal{tail}')
        if info.aliases:
            quoted = " , ".join(f'"{rdf.escape_literal(a)}"' for a in info.aliases)
            lines.append(f"    of:alias {quoted} .")
        lines.append("")
    for child, parent in onto.subclass_edges:
        lines.append(
            f"<{concept_iri(child, base_iri)}> rdfs:subClassOf "
            f"<{concept_iri(parent, base_iri)}> ."
        )
    if onto.subclass_edges:
        lines.append("")
    used_names: dict[str, int] = {}
    for relation in onto.relations:
        seen = used_names.get(relation.label, 0)
        used_names[relation.label] = seen + 1
        slug = quote(relation.label.replace(" ", "-"), safe="-._~")
        if seen:
            slug = f"{slug}-{seen + 1}"
        lines.append(f"<{base_iri}/relation/{slug}> a owl:ObjectProperty ;")
        lines.append(f'    rdfs:label "{rdf.escape_literal(relation.label)}" ;')
        lines.append(f'    of:confidence "{relation.confidence:.9f}"^^xsd:decimal ;')
        lines.append(f"    rdfs:domain <{concept_iri(relation.domain, base_iri)}> ;")
        lines.append(f"    rdfs:range <{concept_iri(relation.range, base_iri)}> .")
        lines.append("")
    while lines and lines[-1] == "":
        lines.pop()
    return "\n".join(lines) + "\n"


def write_turtle(onto: Ontology, path, base_iri: str = DEFAULT_BASE_IRI) -> None:
    Path(path).write_text(serialize_turtle(onto, base_iri), encoding="utf-8")


def extract_classes(graph: rdf.RdfGraph) -> set[str]:
    """Class labels per the fixed query: typed classes plus subClassOf ends.

    Labels come from every rdfs:label value when present, otherwise from
    the lowercased IRI local name; blank nodes are excluded.
    """
    candidates = set()
    candidates |= graph.subjects(rdf.RDF_TYPE, rdf.RDFS_CLASS)
    candidates |= graph.subjects(rdf.RDF_TYPE, rdf.OWL_CLASS)
    label_values: dict[str, set[str]] = {}
    for s, p, o in graph.triples:
        if p == rdf.RDFS_SUBCLASS:
            candidates.add(s)
            candidates.add(o)
        elif p == rdf.RDFS_LABEL and isinstance(o, rdf.Literal) and isinstance(s, str):
            label_values.setdefault(s, set()).add(o.value)
    labels: set[str] = set()
    for term in candidates:
        if not isinstance(term, str):
            continue  # blank nodes and stray literals
        if term in label_values:
            labels.update(v.strip().lower() for v in label_values[term])
        else:
            labels.add(rdf.local_name(term).lower())
    return labels


def ontology_from_graph(graph: rdf.RdfGraph) -> Ontology:
    """Rebuild an Ontology from its serialized Turtle graph.

    Sentence provenance is not serialized, so loaded relations carry an
    empty sentence reference.
    """
    labels_by_iri: dict[str, str] = {}
    relevance: dict[str, float] = {}
    aliases: dict[str, list[str]] = {}
    for subject in sorted(graph.subjects(rdf.RDF_TYPE, rdf.OWL_CLASS), key=str):
        if not isinstance(subject, str):
            continue
        label_values = sorted(
            o.value for o in graph.objects(subject, rdf.RDFS_LABEL)
            if isinstance(o, rdf.Literal)
        )
        label = label_values[0].strip().lower() if label_values else rdf.local_name(subject).lower()
        labels_by_iri[subject] = label
        relevance[label] = 0.0
        for s, p, o in graph.triples:
            if s != subject or not isinstance(o, rdf.Literal):
                continue
            name = rdf.local_name(p)
            if name == "relevance":
                try:
                    relevance[label] = float(o.value)
                except ValueError:
                    pass
            elif name == "alias":
                aliases.setdefault(label, []).append(o.value.strip().lower())

    concepts = {
        label: ConceptInfo(
            relevance=relevance.get(label, 0.0),
            aliases=tuple(sorted(set(aliases.get(label, ())))),
        )
        for label in labels_by_iri.values()
    }

    relations: list[Relation] = []
    for subject in sorted(graph.subjects(rdf.RDF_TYPE, rdf.OWL_OBJECT_PROPERTY), key=str):
        if not isinstance(subject, str):
            continue
        label_values = sorted(
            o.value for o in graph.objects(subject, rdf.RDFS_LABEL)
            if isinstance(o, rdf.Literal)
        )
        label = label_values[0].strip().lower() if label_values else rdf.local_name(subject).lower()
        domains = sorted(
            labels_by_iri[o] for o in graph.objects(subject, rdf.RDFS_NS + "domain")
            if isinstance(o, str) and o in labels_by_iri
        )
        ranges = sorted(
            labels_by_iri[o] for o in graph.objects(subject, rdf.RDFS_NS + "range")
            if isinstance(o, str) and o in labels_by_iri
        )
        confidence = 1.0
        for s, p, o in graph.triples:
            if s == subject and isinstance(o, rdf.Literal) and rdf.local_name(p) == "confidence":
                try:
                    confidence = float(o.value)
                except ValueError:
                    pass
        for domain in domains:
            for rng in ranges:
                relations.append(Relation(
                    label=label,
                    domain=domain,
                    range=rng,
                    sentence_ref=("", 0),
                    confidence=confidence,
                ))

    subclass = sorted(
        (labels_by_iri[s], labels_by_iri[o])
        for s, p, o in graph.triples
        if p == rdf.RDFS_SUBCLASS
        and isinstance(s, str) and isinstance(o, str)
        and s in labels_by_iri and o in labels_by_iri
    )
    relations.sort(key=lambda r: (r.label, r.domain, r.range))
    return Ontology(
        concepts=concepts,
        relations=tuple(relations),
        subclass_edges=tuple(subclass),
    )


def load_ontology(path) -> Ontology:
    return ontology_from_graph(rdf.parse_rdf(path))


def load_class_list(path) -> set[str]:
    """One label per line, lowercased and deduplicated; # comments skipped."""
    labels = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            labels.add(line.lower())
    return labels


def related_concepts(onto: Ontology, seed: str, max_distance: int) -> list[tuple[str, int]]:
    """BFS over relation, subclass and alias edges, undirected."""
    if max_distance < 1:
        raise ValueError("max_distance must be >= 1")
    edges: dict[str, set[str]] = {}

    def link(a: str, b: str) -> None:
        if a == b:
            return
        edges.setdefault(a, set()).add(b)
        edges.setdefault(b, set()).add(a)

    for relation in onto.relations:
        link(relation.domain, relation.range)
    for child, parent in onto.subclass_edges:
        link(child, parent)
    for label, info in onto.concepts.items():
        for alias in info.aliases:
            link(label, alias)

    start = seed.strip().lower()
    if start not in edges and start not in onto.concepts:
        return []
    distances: dict[str, int] = {start: 0}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if distances[node] >= max_distance:
            continue
        for neighbor in edges.get(node, ()):
            if neighbor not in distances:
                distances[neighbor] = distances[node] + 1
                queue.append(neighbor)
    found = [(label, dist) for label, dist in distances.items() if dist >= 1]
    found.sort(key=lambda item: (item[1], item[0]))
    return found
