import pytest
from hypothesis import given, strategies as st

from ontoforge.ontology import build_ontology
from ontoforge.pom import Pom, PomEntity
from ontoforge.relations import Relation
from ontoforge.search import (
    EmptyExpansionError,
    ExpandedQuery,
    IndexedMetadata,
    UnknownDocumentError,
    UserProfile,
    execute_query,
    expand_query,
    index_repository,
    load_index,
    load_profile,
    load_repository,
    record_selection,
    repository_feedback,
    results_json,
    save_index,
    save_profile,
)
from ontoforge.wordnet import empty_db


def onto_of(*labels, relations=(), aliases=None):
    return build_ontology(
        [PomEntity(label=l, kind="concept", relevance=0.5, frequency=1) for l in labels],
        list(relations),
        aliases=aliases,
    )


def rel(label, domain, range_):
    return Relation(label=label, domain=domain, range=range_, sentence_ref=("d", 0))


class TestIndexRepository:
    def test_direct_label_match(self, wordnet_db):
        onto = onto_of("premium")
        idx = index_repository([("d1", "Doc", "the premium rises")], onto, wordnet_db)
        assert idx.concept_to_docs["premium"] == {"d1"}

    def test_synonym_match(self, wordnet_db):
        onto = onto_of("person")
        idx = index_repository([("d1", "Doc", "someone called")], onto, wordnet_db)
        assert idx.concept_to_docs["person"] == {"d1"}

    def test_alias_match(self, wordnet_db):
        onto = onto_of("insurance", aliases={"insurance": ("policy",)})
        idx = index_repository([("d1", "Doc", "the policy expired")], onto, wordnet_db)
        assert idx.concept_to_docs["insurance"] == {"d1"}

    def test_multiword_contiguous_match(self, wordnet_db):
        onto = onto_of("motor insurance")
        docs = [
            ("yes", "Doc", "cheap motor insurance deals"),
            ("no", "Doc", "the motor needs insurance"),
        ]
        idx = index_repository(docs, onto, wordnet_db)
        assert idx.concept_to_docs["motor insurance"] == {"yes"}

    def test_lemmatized_match(self, wordnet_db):
        onto = onto_of("premium")
        idx = index_repository([("d1", "Doc", "premiums rose sharply")], onto, wordnet_db)
        assert idx.concept_to_docs["premium"] == {"d1"}

    def test_empty_repository(self, wordnet_db):
        idx = index_repository([], onto_of("premium"), wordnet_db)
        assert idx.concept_to_docs == {} and idx.doc_titles == {}

    def test_inverse_maps_consistent(self, wordnet_db):
        onto = onto_of("premium", "policy", "claim")
        docs = [
            ("d1", "One", "premium and policy"),
            ("d2", "Two", "the claim and the premium"),
        ]
        idx = index_repository(docs, onto, wordnet_db)
        for concept, doc_ids in idx.concept_to_docs.items():
            for doc_id in doc_ids:
                assert concept in idx.doc_to_concepts[doc_id]
        for doc_id, concepts in idx.doc_to_concepts.items():
            for concept in concepts:
                assert doc_id in idx.concept_to_docs[concept]

    def test_duplicate_doc_ids_rejected(self, wordnet_db):
        with pytest.raises(Exception):
            index_repository(
                [("d1", "a", "x"), ("d1", "b", "y")], onto_of("premium"), wordnet_db
            )


class TestExpandQuery:
    def test_single_edge_bfs(self, wordnet_db):
        onto = onto_of("idv", "premium", relations=[rel("make", "idv", "premium")])
        q = expand_query(["idv"], onto, wordnet_db, max_distance=1, decay=0.5)
        assert q.weighted_concepts == {"idv": 1.0, "premium": 0.5}

    def test_unmatched_term_kept_literal(self, wordnet_db):
        onto = onto_of("premium")
        q = expand_query(["zzzunknown"], onto, wordnet_db)
        assert q.weighted_concepts == {}
        assert q.original_terms == ["zzzunknown"]

    def test_synonym_is_direct_not_graph(self, wordnet_db):
        onto = onto_of("insurance")
        q = expand_query(["policy"], onto, wordnet_db, max_distance=2, decay=0.5)
        assert q.weighted_concepts["insurance"] == 1.0

    def test_zero_distance_returns_only_direct(self, wordnet_db):
        onto = onto_of("idv", "premium", relations=[rel("make", "idv", "premium")])
        q = expand_query(["idv"], onto, wordnet_db, max_distance=0, decay=0.5)
        assert q.weighted_concepts == {"idv": 1.0}

    def test_collision_keeps_max_weight(self, wordnet_db):
        onto = onto_of(
            "a", "b", "c",
            relations=[rel("r", "a", "b"), rel("r", "b", "c"), rel("r", "a", "c")],
        )
        q = expand_query(["a"], onto, wordnet_db, max_distance=2, decay=0.5)
        assert q.weighted_concepts["c"] == 0.5  # direct edge, not the 2-hop path

    def test_trim_mode_drops_unmatched(self, wordnet_db):
        onto = onto_of("premium")
        q = expand_query(["premium", "zzz"], onto, wordnet_db, mode="trim")
        assert q.original_terms == []

    def test_substitute_mode_swaps_to_best_synonym_concept(self, wordnet_db):
        onto = build_ontology(
            [
                PomEntity(label="policy", kind="concept", relevance=0.2, frequency=1),
                PomEntity(label="insurance", kind="concept", relevance=0.9, frequency=9),
            ],
            [],
        )
        q = expand_query(["policy"], onto, wordnet_db, mode="substitute")
        assert "insurance" in q.weighted_concepts
        assert "policy" not in q.weighted_concepts

    def test_all_unmatched_without_fallback_errors(self, wordnet_db):
        with pytest.raises(EmptyExpansionError):
            expand_query(["zzz"], onto_of("premium"), wordnet_db, literal_fallback=False)

    def test_empty_query_errors(self, wordnet_db):
        with pytest.raises(EmptyExpansionError):
            expand_query(["  "], onto_of("premium"), wordnet_db)


def make_index(**concept_docs):
    titles = {}
    for docs in concept_docs.values():
        for doc_id in docs:
            titles.setdefault(doc_id, f"Title {doc_id}")
    inverse = {}
    for concept, docs in concept_docs.items():
        for doc_id in docs:
            inverse.setdefault(doc_id, set()).add(concept)
    return IndexedMetadata(
        concept_to_docs={c: frozenset(d) for c, d in concept_docs.items()},
        doc_to_concepts={d: frozenset(c) for d, c in inverse.items()},
        doc_titles=titles,
    )


class TestExecuteQuery:
    def test_weight_ordering(self):
        idx = make_index(idv=["A"], premium=["B"])
        q = ExpandedQuery(weighted_concepts={"idv": 1.0, "premium": 0.5}, original_terms=[])
        results = execute_query(q, idx, UserProfile("u"))
        assert [(r.doc_id, r.score) for r in results] == [("A", 1.0), ("B", 0.5)]

    def test_profile_promotion_flips_order(self):
        idx = make_index(idv=["A"], premium=["B"])
        q = ExpandedQuery(weighted_concepts={"idv": 1.0, "premium": 0.5}, original_terms=[])
        profile = UserProfile("u", ratings={"premium": 3.0})
        results = execute_query(q, idx, profile)
        assert [(r.doc_id, r.score) for r in results] == [("B", 2.0), ("A", 1.0)]

    def test_empty_index(self):
        q = ExpandedQuery(weighted_concepts={"idv": 1.0}, original_terms=[])
        assert execute_query(q, IndexedMetadata({}, {}, {}), UserProfile("u")) == []

    def test_literal_fallback_substring_on_title(self):
        idx = make_index(premium=["quarterly-report"])
        q = ExpandedQuery(weighted_concepts={}, original_terms=["quarterly"])
        results = execute_query(q, idx, UserProfile("u"))
        assert [r.doc_id for r in results] == ["quarterly-report"]
        assert results[0].score == 0.25

    def test_ties_break_by_doc_id(self):
        idx = make_index(idv=["B", "A"])
        q = ExpandedQuery(weighted_concepts={"idv": 1.0}, original_terms=[])
        assert [r.doc_id for r in execute_query(q, idx, UserProfile("u"))] == ["A", "B"]

    def test_direct_term_outranks_expansion_only(self):
        idx = make_index(direct=["A"], expanded=["B"])
        q = ExpandedQuery(weighted_concepts={"direct": 1.0, "expanded": 0.25}, original_terms=[])
        results = execute_query(q, idx, UserProfile("u"))
        assert results[0].doc_id == "A"

    @given(st.floats(0.1, 10))
    def test_order_invariant_under_uniform_profile_scaling(self, k):
        idx = make_index(a=["D1", "D2"], b=["D2"], c=["D3"])
        q = ExpandedQuery(weighted_concepts={"a": 1.0, "b": 0.5, "c": 0.25}, original_terms=[])
        base = UserProfile("u", ratings={"a": 1.0, "b": 2.0, "c": 0.5})
        # scale all (1 + rating) factors by k: rating' = k*(1+rating) - 1
        scaled = UserProfile("u", ratings={c: k * (1 + r) - 1 for c, r in base.ratings.items()})
        order = [r.doc_id for r in execute_query(q, idx, base)]
        scaled_order = [r.doc_id for r in execute_query(q, idx, scaled)]
        assert order == scaled_order

    def test_dominance(self):
        # A matches everything B matches plus more, same profile
        idx = make_index(x=["A", "B"], y=["A"])
        q = ExpandedQuery(weighted_concepts={"x": 0.5, "y": 0.5}, original_terms=[])
        results = {r.doc_id: r.score for r in execute_query(q, idx, UserProfile("u"))}
        assert results["A"] >= results["B"]


class TestSelections:
    def test_selection_increments_all_doc_concepts(self):
        idx = make_index(premium=["d1"], policy=["d1"])
        profile = record_selection(UserProfile("u"), "d1", idx)
        assert profile.ratings == {"premium": 1.0, "policy": 1.0}

    def test_two_selections_accumulate(self):
        idx = make_index(premium=["d1"])
        profile = record_selection(UserProfile("u"), "d1", idx)
        profile = record_selection(profile, "d1", idx)
        assert profile.ratings["premium"] == 2.0

    def test_never_decreases(self):
        idx = make_index(premium=["d1"], policy=["d2"])
        before = UserProfile("u", ratings={"policy": 5.0})
        after = record_selection(before, "d1", idx)
        assert all(after.ratings[c] >= r for c, r in before.ratings.items())

    def test_unknown_doc_rejected(self):
        with pytest.raises(UnknownDocumentError):
            record_selection(UserProfile("u"), "ghost", make_index(premium=["d1"]))

    def test_selection_raises_subsequent_score(self):
        idx = make_index(premium=["d1"])
        q = ExpandedQuery(weighted_concepts={"premium": 1.0}, original_terms=[])
        before = execute_query(q, idx, UserProfile("u"))[0].score
        profile = record_selection(UserProfile("u"), "d1", idx)
        after = execute_query(q, idx, profile)[0].score
        assert after > before


class TestRepositoryFeedback:
    def test_boosts_only_concepts_with_documents(self):
        pom = Pom(
            entities={
                "hit": PomEntity("hit", "concept", 0.004, 4),
                "miss": PomEntity("miss", "concept", 0.004, 4),
            },
            corpus_token_count=1000,
        )
        idx = make_index(hit=["d1"])
        boosted = repository_feedback(idx, pom, factor=2.0)
        assert boosted.entities["hit"].relevance == pytest.approx(0.008)
        assert boosted.entities["miss"].relevance == pytest.approx(0.004)

    def test_empty_index_is_identity(self):
        pom = Pom(entities={"x": PomEntity("x", "concept", 0.1, 1)}, corpus_token_count=10)
        assert repository_feedback(IndexedMetadata({}, {}, {}), pom, 2.0) == pom


class TestPersistence:
    def test_index_round_trip(self, tmp_path, wordnet_db):
        onto = onto_of("premium", "policy")
        idx = index_repository(
            [("d1", "One", "premium"), ("d2", "Two", "policy and premium")],
            onto, wordnet_db,
        )
        path = tmp_path / "index.json"
        save_index(idx, path)
        loaded = load_index(path)
        assert loaded.concept_to_docs == idx.concept_to_docs
        assert loaded.doc_to_concepts == idx.doc_to_concepts
        assert loaded.doc_titles == idx.doc_titles

    def test_profile_round_trip(self, tmp_path):
        profile = UserProfile("u1", ratings={"premium": 2.0})
        save_profile(profile, tmp_path)
        assert load_profile(tmp_path, "u1") == profile

    def test_missing_profile_is_empty(self, tmp_path):
        assert load_profile(tmp_path, "nobody") == UserProfile("nobody")

    def test_load_repository_titles(self, tmp_path):
        (tmp_path / "a.txt").write_text("\nFirst line title\nbody\n")
        (tmp_path / "sub").mkdir()
        (tmp_path / "sub" / "b.txt").write_text("Second doc\n")
        docs = load_repository(tmp_path)
        assert [(d[0], d[1]) for d in docs] == [
            ("a.txt", "First line title"),
            ("sub/b.txt", "Second doc"),
        ]

    def test_results_json_deterministic(self):
        idx = make_index(premium=["d1"])
        q = ExpandedQuery(weighted_concepts={"premium": 1.0}, original_terms=[])
        results = execute_query(q, idx, UserProfile("u"))
        assert results_json(results) == results_json(results)
        assert results_json(results).startswith("[")
