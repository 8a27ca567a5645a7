import math

import pytest
from hypothesis import given, strategies as st

from ontoforge.pom import PomEntity
from ontoforge.similarity import (
    ContextVector,
    build_context_vectors,
    context_vector,
    cosine,
    pairs_to_tsv,
    reduce_by_similarity,
    similar_pairs,
    similarity,
)
from ontoforge.wordnet import are_synonyms


def vec(**weights) -> ContextVector:
    return ContextVector(concept="v", weights=dict(weights))


def entity(label, relevance) -> PomEntity:
    return PomEntity(label=label, kind="concept", relevance=relevance, frequency=1)


class TestContextVector:
    def test_absent_concept_gives_empty_vector(self, pretag_doc):
        docs = [pretag_doc("the/DT premium/NN rises/VBZ")]
        assert context_vector("ghost", docs).weights == {}

    def test_single_cooccurrence(self, pretag_doc):
        docs = [pretag_doc("premium/NN rises/VBZ")]
        assert context_vector("premium", docs).weights == {"rise": 1}

    def test_weights_add_across_sentences(self, pretag_doc):
        docs = [pretag_doc("premium/NN rises/VBZ\npremium/NN rises/VBZ")]
        assert context_vector("premium", docs).weights == {"rise": 2}

    def test_window_limits_context(self, pretag_doc):
        docs = [pretag_doc(
            "premium/NN a/DT a/DT a/DT a/DT a/DT far/JJ"
        )]
        assert context_vector("premium", docs, window=5).weights == {}

    def test_own_occurrences_excluded(self, pretag_doc):
        docs = [pretag_doc("premium/NN premium/NN cost/NN")]
        assert context_vector("premium", docs).weights == {"cost": 2}

    def test_multiword_concept_span_excluded_from_context(self, pretag_doc):
        docs = [pretag_doc("motor/NN insurance/NN rises/VBZ")]
        vector = context_vector("motor insurance", docs)
        assert vector.weights == {"rise": 1}

    def test_only_content_tags_counted(self, pretag_doc):
        docs = [pretag_doc("premium/NN of/IN the/DT cost/NN")]
        assert context_vector("premium", docs).weights == {"cost": 1}

    def test_invalid_window(self, pretag_doc):
        with pytest.raises(ValueError):
            context_vector("x", [pretag_doc("a/NN")], window=0)


class TestCosine:
    def test_identical_vectors_exactly_one(self):
        u = vec(x=1, y=2, z=3)
        assert cosine(u, u) == 1.0

    def test_disjoint_supports_zero(self):
        assert cosine(vec(x=1), vec(y=1)) == 0.0

    def test_known_value(self):
        assert cosine(vec(x=1, y=1), vec(x=1)) == pytest.approx(1 / math.sqrt(2))

    def test_empty_vector_scores_zero(self):
        assert cosine(vec(), vec(x=1)) == 0.0
        assert cosine(vec(), vec()) == 0.0

    weights = st.dictionaries(
        st.sampled_from("abcdef"),
        st.floats(0.1, 50, allow_nan=False),
        max_size=6,
    )

    @given(weights, weights)
    def test_symmetric_and_in_range(self, wu, wv):
        u = ContextVector("u", wu)
        v = ContextVector("v", wv)
        assert abs(cosine(u, v) - cosine(v, u)) < 1e-12
        assert -1e-12 <= cosine(u, v) <= 1 + 1e-12

    @given(weights)
    def test_self_similarity_is_one(self, wu):
        u = ContextVector("u", wu)
        if wu:
            assert cosine(u, u) == pytest.approx(1.0, abs=1e-12)


class TestSimilarity:
    def test_synonym_pairs_score_one(self, wordnet_db, pretag_doc):
        docs = [pretag_doc("policy/NN insurance/NN")]
        pair = similarity("policy", "insurance", wordnet_db, docs)
        assert pair.score == 1.0
        assert pair.source == "synonym"

    def test_person_someone(self, wordnet_db, pretag_doc):
        pair = similarity("person", "someone", wordnet_db, [pretag_doc("a/NN")])
        assert (pair.score, pair.source) == (1.0, "synonym")

    def test_non_synonyms_use_cosine(self, wordnet_db, pretag_doc):
        docs = [pretag_doc("vehicle/NN crash/NN\nincident/NN crash/NN")]
        pair = similarity("vehicle", "incident", wordnet_db, docs)
        assert pair.source == "cosine"
        assert 0.0 <= pair.score <= 1.0

    def test_source_matches_are_synonyms(self, wordnet_db, pretag_doc):
        docs = [pretag_doc("vehicle/NN incident/NN claim/NN")]
        for a, b in [("vehicle", "incident"), ("policy", "insurance"), ("excess", "surplus")]:
            pair = similarity(a, b, wordnet_db, docs)
            assert (pair.source == "synonym") == are_synonyms(wordnet_db, a, b)

    def test_identical_labels_rejected(self, wordnet_db, pretag_doc):
        with pytest.raises(ValueError):
            similarity("x", "x", wordnet_db, [pretag_doc("a/NN")])


class TestReduction:
    def test_wordnet_synonym_lower_relevance_dropped(self, wordnet_db, pretag_doc):
        docs = [pretag_doc("policy/NN insurance/NN")]
        reduced = reduce_by_similarity(
            [entity("policy", 0.9), entity("insurance", 0.1)], 0.95, wordnet_db, docs
        )
        assert [e.label for e in reduced.kept] == ["policy"]
        assert reduced.aliases == {"policy": ("insurance",)}

    def test_no_pairs_above_threshold_keeps_all(self, wordnet_db, pretag_doc):
        docs = [pretag_doc("vehicle/NN crash/NN\nclaim/NN form/NN")]
        entities = [entity("vehicle", 0.5), entity("claim", 0.4)]
        reduced = reduce_by_similarity(entities, 1.0, wordnet_db, docs)
        assert [e.label for e in reduced.kept] == ["vehicle", "claim"]
        assert reduced.aliases == {}

    def test_output_never_larger_than_input(self, wordnet_db, pretag_doc):
        docs = [pretag_doc("policy/NN insurance/NN premium/NN cost/NN")]
        entities = [
            entity("policy", 0.5), entity("insurance", 0.4),
            entity("premium", 0.3), entity("cost", 0.2),
        ]
        reduced = reduce_by_similarity(entities, 0.95, wordnet_db, docs)
        assert len(reduced.kept) <= len(entities)

    def test_idempotent(self, wordnet_db, pretag_doc):
        docs = [pretag_doc("policy/NN insurance/NN premium/NN excess/NN surplus/NN")]
        entities = [
            entity("policy", 0.5), entity("insurance", 0.45),
            entity("excess", 0.3), entity("surplus", 0.2), entity("premium", 0.1),
        ]
        once = reduce_by_similarity(entities, 0.95, wordnet_db, docs)
        twice = reduce_by_similarity(once.kept, 0.95, wordnet_db, docs)
        assert twice.kept == once.kept
        assert twice.aliases == {}

    def test_no_two_kept_are_wordnet_synonyms(self, wordnet_db, pretag_doc):
        docs = [pretag_doc("risk/NN hazard/NN peril/NN damage/NN harm/NN")]
        entities = [
            entity("risk", 0.5), entity("hazard", 0.4), entity("peril", 0.35),
            entity("damage", 0.3), entity("harm", 0.25),
        ]
        reduced = reduce_by_similarity(entities, 0.95, wordnet_db, docs)
        kept = [e.label for e in reduced.kept]
        for i, a in enumerate(kept):
            for b in kept[i + 1:]:
                assert not are_synonyms(wordnet_db, a, b)

    def test_tie_keeps_lexicographically_smaller(self, wordnet_db, pretag_doc):
        docs = [pretag_doc("policy/NN insurance/NN")]
        reduced = reduce_by_similarity(
            [entity("policy", 0.5), entity("insurance", 0.5)], 0.95, wordnet_db, docs
        )
        assert [e.label for e in reduced.kept] == ["insurance"]

    def test_threshold_domain(self, wordnet_db, pretag_doc):
        with pytest.raises(ValueError):
            reduce_by_similarity([], 0.0, wordnet_db, [pretag_doc("a/NN")])


class TestPairsReport:
    def test_table_style_report(self, wordnet_db, pretag_doc):
        docs = [pretag_doc("policy/NN insurance/NN vehicle/NN")]
        pairs = similar_pairs(
            ["policy", "insurance", "vehicle"], wordnet_db, docs, report_threshold=0.9
        )
        assert any(p.source == "synonym" and {p.a, p.b} == {"policy", "insurance"} for p in pairs)
        text = pairs_to_tsv(pairs)
        assert text.splitlines()[0] == "a\tb\tscore\tsource"
