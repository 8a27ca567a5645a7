"""End-to-end learning and indexing runs shared by the CLI and the service."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import ingest, nlp, ontology, pom, relations, search, similarity, wordnet
from .config import PipelineConfig


class PipelineError(Exception):
    pass


@dataclass(frozen=True)
class LearnResult:
    pom: pom.Pom
    concepts: list[pom.PomEntity]
    relations: list[relations.Relation]
    ontology: ontology.Ontology
    aliases: dict[str, tuple[str, ...]]

    @property
    def summary(self) -> dict:
        return {
            "concepts": len(self.ontology.concepts),
            "relations": len(self.ontology.relations),
            "subclass_edges": len(self.ontology.subclass_edges),
            "pom_entities": len(self.pom.entities),
        }


def make_tagger(config: PipelineConfig) -> nlp.Tagger:
    tagger = nlp.default_tagger()
    if config.lexicon_path:
        tagger = nlp.extend_lexicon(tagger, nlp.load_lexicon_file(config.lexicon_path))
    return tagger


def load_tagged_corpus(config: PipelineConfig, tagger: nlp.Tagger) -> list[nlp.TaggedDocument]:
    """Tag every corpus document; a sibling .tagged file bypasses the tagger."""
    corpus = ingest.load_corpus(config.corpus_dir)
    docs = []
    for doc in corpus.documents:
        pretagged = Path(config.corpus_dir) / f"{doc.doc_id}.tagged"
        if pretagged.exists():
            sentences = nlp.parse_pretagged(pretagged.read_text(encoding="utf-8"))
        else:
            sentences = nlp.tag_text(doc.text, tagger)
        docs.append(nlp.TaggedDocument(doc_id=doc.doc_id, sentences=tuple(sentences)))
    return docs


def load_wordnet_db(config: PipelineConfig) -> wordnet.WordnetDb:
    if config.wordnet_dir:
        return wordnet.load_wordnet(config.wordnet_dir)
    return wordnet.empty_db()


def load_rules(config: PipelineConfig) -> list[relations.PatternRule]:
    if config.rules_path:
        return relations.load_rules(config.rules_path)
    return relations.default_rules()


def _merge_overrides(model: pom.Pom, overrides: dict[str, float]) -> pom.Pom:
    entities = dict(model.entities)
    for label, value in overrides.items():
        entity = entities.get(label)
        if entity is not None:
            entities[label] = pom.PomEntity(
                label=entity.label,
                kind=entity.kind,
                relevance=entity.relevance,
                frequency=entity.frequency,
                override=value,
            )
    return pom.Pom(entities=entities, corpus_token_count=model.corpus_token_count)


def run_learn(
    config: PipelineConfig,
    reduce: bool = False,
    review_path=None,
    overrides: dict[str, float] | None = None,
    db: wordnet.WordnetDb | None = None,
    write: bool = True,
) -> LearnResult:
    """Corpus -> POM -> thresholded concepts -> relations -> ontology.

    Expert decisions survive re-learning: overrides persisted in a prior
    pom.json are carried onto the fresh extraction by label, then a
    review file (strict) and explicit ``overrides`` (lenient) may add
    more, and the variable threshold applies them all.
    """
    tagger = make_tagger(config)
    docs = load_tagged_corpus(config, tagger)
    if not docs or all(doc.token_count == 0 for doc in docs):
        raise PipelineError(f"corpus at {config.corpus_dir!r} is empty")

    model = pom.extract_concepts(docs)
    if config.pom_path.exists():
        previous = pom.load_pom(config.pom_path)
        carried = {
            label: entity.override
            for label, entity in previous.entities.items()
            if entity.override is not None
        }
        if carried:
            model = _merge_overrides(model, carried)
    if review_path is not None:
        model = pom.import_review(model, review_path)
    if overrides:
        model = _merge_overrides(model, overrides)

    concepts = pom.variable_threshold(model, config.static_theta)

    rules = load_rules(config)
    extracted = relations.extract_relations(docs, rules)
    split = [
        part
        for rel in extracted
        for part in relations.split_compound(rel, config.separator)
    ]

    db = db if db is not None else load_wordnet_db(config)
    aliases: dict[str, tuple[str, ...]] = {}
    if reduce:
        reduced = similarity.reduce_by_similarity(
            concepts, config.sim_threshold, db, docs, config.window
        )
        concepts = reduced.kept
        aliases = reduced.aliases

    onto = ontology.build_ontology(concepts, split, aliases)
    result = LearnResult(
        pom=model,
        concepts=concepts,
        relations=split,
        ontology=onto,
        aliases=aliases,
    )
    if write:
        write_artifacts(result, config)
    return result


def write_artifacts(result: LearnResult, config: PipelineConfig) -> None:
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    pom.save_pom(result.pom, config.pom_path)
    config.relations_path.write_text(
        relations.relations_to_tsv(result.relations), encoding="utf-8"
    )
    ontology.write_turtle(result.ontology, config.ontology_path, config.base_iri)


def run_index(
    config: PipelineConfig,
    onto: ontology.Ontology,
    db: wordnet.WordnetDb | None = None,
    write: bool = True,
) -> search.IndexedMetadata:
    docs = search.load_repository(config.repo_dir)
    db = db if db is not None else load_wordnet_db(config)
    tagger = make_tagger(config)
    idx = search.index_repository(docs, onto, db, tagger)
    if write:
        Path(config.out_dir).mkdir(parents=True, exist_ok=True)
        search.save_index(idx, config.index_path)
    return idx
