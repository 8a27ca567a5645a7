import pytest
from hypothesis import given, strategies as st

from ontoforge.evaluation import (
    EvaluationError,
    cc_percent,
    common_concepts,
    compare,
    format_report,
    precision,
    recall,
)
from ontoforge.ontology import build_ontology
from ontoforge.pom import PomEntity
from ontoforge.wordnet import empty_db

GOLDEN_ROWS = [
    ((5, 117, 27), 3.472),
    ((5, 41, 27), 7.352),
    ((5, 104, 27), 3.816),
    ((5, 34, 27), 8.196),
    ((36, 423, 276), 5.150),
    ((49, 79, 276), 13.802),
    ((36, 353, 276), 5.723),
    ((49, 52, 276), 14.939),
]


def onto_of(*labels):
    return build_ontology(
        [PomEntity(label=l, kind="concept", relevance=0.5, frequency=1) for l in labels], []
    )


class TestCcPercent:
    @pytest.mark.parametrize("args,expected", GOLDEN_ROWS)
    def test_golden_rows(self, args, expected):
        assert cc_percent(*args) == expected

    def test_zero_common(self):
        assert cc_percent(0, 10, 20) == 0.0

    def test_identical_ontologies_hit_fifty(self):
        assert cc_percent(7, 7, 7) == 50.0

    def test_undefined_for_empty_totals(self):
        with pytest.raises(EvaluationError):
            cc_percent(0, 0, 0)

    def test_negative_common_rejected(self):
        with pytest.raises(EvaluationError):
            cc_percent(-1, 1, 1)

    @given(st.integers(0, 500), st.integers(0, 1000), st.integers(0, 1000))
    def test_truncated_to_three_decimals(self, common, generated, manual):
        if generated + manual == 0 or common > generated + manual:
            return
        value = cc_percent(common, generated, manual)
        assert round(value, 3) == value
        exact = 100 * common / (generated + manual)
        assert 0 <= exact - value < 0.001 or value == exact


class TestCommonConcepts:
    def test_synonym_match(self, wordnet_db):
        assert common_concepts({"person"}, {"someone"}, wordnet_db) == {"person"}

    def test_direct_intersection(self, wordnet_db):
        assert common_concepts({"x"}, {"x"}, wordnet_db) == {"x"}

    def test_non_synonyms_disjoint(self, wordnet_db):
        assert common_concepts({"vehicle"}, {"incident"}, wordnet_db) == set()

    def test_counted_over_auto_concepts(self, wordnet_db):
        # two auto synonyms matching one manual concept count as two
        result = common_concepts({"person", "somebody"}, {"someone"}, wordnet_db)
        assert result == {"person", "somebody"}

    def test_empty_db_reduces_to_intersection(self):
        auto = {"a", "b", "c"}
        manual = {"b", "c", "d"}
        assert common_concepts(auto, manual, empty_db()) == auto & manual

    @given(
        st.sets(st.sampled_from(["person", "policy", "vehicle", "excess", "zzz"]), max_size=5),
        st.sets(st.sampled_from(["someone", "insurance", "incident", "surplus", "qqq"]), max_size=5),
        st.sets(st.sampled_from(["claim", "premium", "motor"]), max_size=3),
    )
    def test_monotone_in_manual(self, wordnet_db, auto, manual, extra):
        small = common_concepts(auto, manual, wordnet_db)
        large = common_concepts(auto, manual | extra, wordnet_db)
        assert small <= large


class TestCompare:
    def test_report_wires_counts_together(self, wordnet_db):
        onto = onto_of("person", "vehicle", "zzz")
        report = compare(onto, {"someone", "incident"}, wordnet_db, case_name="demo")
        assert report.generated_count == 3
        assert report.manual_count == 2
        assert report.common_count == 1
        assert report.common_labels == frozenset({"person"})
        assert report.cc_percent == cc_percent(1, 3, 2)

    def test_empty_auto_ontology(self, wordnet_db):
        report = compare(onto_of(), {"a"}, wordnet_db)
        assert report.cc_percent == 0.0
        assert report.common_labels == frozenset()

    def test_cc_never_exceeds_fifty(self, wordnet_db):
        labels = ["person", "policy", "vehicle", "claim", "premium"]
        report = compare(onto_of(*labels), set(labels), wordnet_db)
        assert report.cc_percent <= 50.0

    def test_table_shape_variable_with_reduction(self):
        assert cc_percent(5, 34, 27) == 8.196

    def test_table_shape_static_with_reduction_software(self):
        assert cc_percent(36, 353, 276) == 5.723

    def test_format_report_columns(self, wordnet_db):
        report = compare(onto_of("person"), {"someone"}, wordnet_db, case_name="case")
        text = format_report(report)
        header, row = text.strip().splitlines()
        assert header.split("\t") == [
            "Case",
            "Common concepts (%)",
            "No. generated concepts above threshold",
            "No. concepts manual ontology",
            "No. common concepts",
        ]
        assert row.split("\t") == ["case", "50.000", "1", "1", "1"]

    def test_to_dict_shape(self, wordnet_db):
        report = compare(onto_of("person"), {"someone"}, wordnet_db, case_name="c")
        payload = report.to_dict()
        assert set(payload) == {"case", "cc_percent", "generated", "manual", "common", "common_labels"}


class TestPrecisionRecall:
    def test_precision_half(self):
        assert precision({"d1", "d2"}, {"d1"}) == 0.5

    def test_precision_perfect(self):
        assert precision({"d1"}, {"d1", "d2"}) == 1.0

    def test_precision_zero(self):
        assert precision({"d1"}, {"d2"}) == 0.0

    def test_precision_empty_retrieved_undefined(self):
        with pytest.raises(EvaluationError):
            precision(set(), {"d1"})

    def test_recall_half(self):
        assert recall({"d1"}, {"d1", "d2"}) == 0.5

    def test_recall_perfect(self):
        assert recall({"d1", "d2", "d3"}, {"d1", "d2"}) == 1.0

    def test_recall_zero(self):
        assert recall({"d3"}, {"d1", "d2"}) == 0.0

    def test_recall_empty_relevant_undefined(self):
        with pytest.raises(EvaluationError):
            recall({"d1"}, set())

    @given(
        st.sets(st.integers(0, 20), min_size=1, max_size=10),
        st.sets(st.integers(0, 20), min_size=1, max_size=10),
    )
    def test_bounds(self, retrieved, relevant):
        assert 0.0 <= precision(retrieved, relevant) <= 1.0
        assert 0.0 <= recall(retrieved, relevant) <= 1.0
