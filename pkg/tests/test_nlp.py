import string

import pytest
from hypothesis import given, strategies as st

from ontoforge.nlp import (
    POS_TAGS,
    TaggingError,
    default_tagger,
    extend_lexicon,
    lemmatize,
    parse_pretagged,
    pos_tag,
    split_sentences,
    tokenize,
)


class TestSplitSentences:
    def test_two_sentences(self):
        assert split_sentences("A b. C d.") == ["A b.", "C d."]

    def test_empty(self):
        assert split_sentences("") == []

    def test_paper_conditional_stays_one_sentence(self):
        text = "If you raise the IDV, the premium rises."
        assert split_sentences(text) == [text]

    def test_abbreviation_does_not_split(self):
        assert split_sentences("See fig. 2 for details. Next sentence.") == [
            "See fig. 2 for details.",
            "Next sentence.",
        ]

    def test_lowercase_continuation_does_not_split(self):
        assert split_sentences("version 1.2 shipped. it works.") == [
            "version 1.2 shipped. it works."
        ]

    def test_question_and_exclamation(self):
        assert split_sentences("Really? Yes! Fine.") == ["Really?", "Yes!", "Fine."]


class TestTokenize:
    def test_punctuation_split_off(self):
        assert tokenize("the premium rises.") == ["the", "premium", "rises", "."]

    def test_empty(self):
        assert tokenize("") == []

    def test_hyphenated_word_kept_whole(self):
        assert tokenize("motor-insurance premium") == ["motor-insurance", "premium"]

    def test_brackets_and_commas(self):
        assert tokenize("(a premium), rises") == ["(", "a", "premium", ")", ",", "rises"]


class TestPosTag:
    def test_vbz_after_noun(self, tagger):
        sentence = tagger.tag(["the", "premium", "rises"])
        assert [t.tag for t in sentence.tokens] == ["DT", "NN", "VBZ"]

    def test_gerund_after_preposition(self, tagger):
        sentence = tagger.tag(["is", "analyzed", "by", "providing"])
        assert [t.tag for t in sentence.tokens] == ["VBZ", "VBN", "IN", "VBG"]

    def test_plural_after_determiner(self, tagger):
        sentence = tagger.tag(["the", "premiums"])
        assert sentence.tokens[1].tag == "NNS"

    def test_capitalized_mid_sentence_is_nnp(self, tagger):
        sentence = tagger.tag(["the", "IDV"])
        assert sentence.tokens[1].tag == "NNP"

    def test_capitalized_sentence_initial_defaults_nn(self, tagger):
        sentence = tagger.tag(["Coverage", "matters"])
        assert sentence.tokens[0].tag == "NN"

    def test_length_preserved_and_tags_valid(self, tagger):
        tokens = tokenize("The quick brown fox jumps over the lazy dog .")
        sentence = tagger.tag(tokens)
        assert len(sentence.tokens) == len(tokens)
        assert all(t.tag in POS_TAGS for t in sentence.tokens)

    def test_punctuation_and_numbers(self, tagger):
        sentence = tagger.tag([".", ",", "42", "3.5"])
        assert [t.tag for t in sentence.tokens] == ["OTHER", "OTHER", "CD", "CD"]

    @given(st.lists(st.text(alphabet=string.ascii_letters + ".-'", min_size=1, max_size=12), max_size=8))
    def test_deterministic_and_total(self, tokens):
        a = pos_tag(tokens)
        b = pos_tag(tokens)
        assert a == b
        assert len(a.tokens) == len(tokens)
        assert all(t.tag in POS_TAGS for t in a.tokens)


class TestLemmatize:
    @pytest.mark.parametrize("surface,tag,lemma", [
        ("rises", "VBZ", "rise"),
        ("policies", "NNS", "policy"),
        ("insurance", "NN", "insurance"),
        ("analyzed", "VBN", "analyze"),
        ("providing", "VBG", "provide"),
        ("made", "VBD", "make"),
        ("is", "VBZ", "be"),
        ("buses", "NNS", "bus"),
        ("cases", "NNS", "case"),
        ("classes", "NNS", "class"),
        ("running", "VBG", "run"),
        ("planned", "VBD", "plan"),
        ("IDV", "NNP", "idv"),
        ("Premium", "NN", "premium"),
    ])
    def test_examples(self, surface, tag, lemma):
        assert lemmatize(surface, tag) == lemma

    @given(
        st.text(alphabet=string.ascii_lowercase, min_size=1, max_size=12),
        st.sampled_from(sorted(POS_TAGS)),
    )
    def test_idempotent(self, word, tag):
        once = lemmatize(word, tag)
        assert lemmatize(once, tag) == once

    def test_lowercases(self):
        assert lemmatize("Policy", "NN") == "policy"


class TestExtendLexicon:
    def test_extension_wins(self, tagger):
        extended = extend_lexicon(tagger, [("IDV", "NNP")])
        sentence = extended.tag(["IDV", "matters"])
        assert sentence.tokens[0].tag == "NNP"

    def test_empty_extension_is_identity(self, tagger):
        assert extend_lexicon(tagger, []).lexicon == tagger.lexicon

    def test_last_write_wins(self, tagger):
        extended = extend_lexicon(tagger, [("risk", "NN"), ("risk", "VB")])
        assert extended.lexicon["risk"] == "VB"

    def test_unknown_tag_rejected(self, tagger):
        with pytest.raises(TaggingError):
            extend_lexicon(tagger, [("word", "XX")])

    def test_original_tagger_unchanged(self, tagger):
        before = dict(tagger.lexicon)
        extend_lexicon(tagger, [("zzz", "NN")])
        assert tagger.lexicon == before


class TestPretagged:
    def test_round_trip_format(self):
        sentences = parse_pretagged("the/DT premium/NN rises/VBZ\nit/PRP falls/VBZ")
        assert len(sentences) == 2
        assert [t.tag for t in sentences[0].tokens] == ["DT", "NN", "VBZ"]
        assert sentences[0].tokens[2].lemma == "rise"

    def test_unknown_tag_rejected(self):
        with pytest.raises(TaggingError):
            parse_pretagged("the/XX")

    def test_missing_tag_rejected(self):
        with pytest.raises(TaggingError):
            parse_pretagged("justaword")
