"""Sentence splitting, tokenization, rule-based POS tagging and lemmatization.

The tagger is deterministic: a closed-class lexicon, an open-class lexicon,
suffix heuristics keyed on the previous tag, and a default of NN.  No
statistical model is involved, so identical input always yields identical
tags.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .lexicon import (
    ABBREVIATIONS,
    CLOSED_CLASS,
    IRREGULAR_VERBS,
    NOUN_EXCEPTIONS,
    OPEN_CLASS,
)

POS_TAGS = frozenset({
    "NN", "NNS", "NNP", "NNPS",
    "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    "JJ", "IN", "DT", "PRP", "CC", "RB", "CD", "TO", "OTHER",
})
NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})
VERB_TAGS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"})

_VOWELS = "aeiou"
_BE_HAVE = frozenset({
    "is", "are", "was", "were", "be", "been", "being", "am",
    "has", "have", "had", "having",
})
_NUMBER_RE = re.compile(r"^[0-9][0-9.,]*%?$")


class TaggingError(ValueError):
    """Raised for malformed pre-tagged input or bad lexicon entries."""


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    tag: str
    lemma: str
    sentence_index: int
    token_index: int


@dataclass(frozen=True)
class TaggedSentence:
    tokens: tuple[TaggedToken, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


@dataclass(frozen=True)
class TaggedDocument:
    doc_id: str
    sentences: tuple[TaggedSentence, ...]

    @property
    def token_count(self) -> int:
        return sum(len(s) for s in self.sentences)


def split_sentences(text: str, abbreviations: frozenset[str] = ABBREVIATIONS) -> list[str]:
    """Split text on ./!/? followed by whitespace+capital or end of text."""
    sentences = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in ".!?":
            # absorb runs like "?!" or "..."
            j = i
            while j + 1 < n and text[j + 1] in ".!?":
                j += 1
            if ch == "." and j == i and _is_abbreviation(text, i, abbreviations):
                i += 1
                continue
            k = j + 1
            while k < n and text[k] in "\"')]":
                k += 1
            rest = text[k:]
            stripped = rest.lstrip()
            boundary = not stripped or (
                rest != stripped and stripped[0].isupper()
            )
            if boundary:
                sentence = text[start:k].strip()
                if sentence:
                    sentences.append(sentence)
                start = k
            i = j + 1
        else:
            i += 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _is_abbreviation(text: str, dot: int, abbreviations: frozenset[str]) -> bool:
    j = dot
    while j > 0 and (text[j - 1].isalnum() or text[j - 1] == "."):
        j -= 1
    word = text[j:dot].lower()
    return bool(word) and word in abbreviations


def tokenize(sentence: str) -> list[str]:
    """Whitespace tokenization with edge punctuation split off.

    Hyphenated words stay whole; interior apostrophes and dots are kept.
    """
    tokens: list[str] = []
    for chunk in sentence.split():
        lead: list[str] = []
        trail: list[str] = []
        while chunk and not chunk[0].isalnum():
            lead.append(chunk[0])
            chunk = chunk[1:]
        while chunk and not chunk[-1].isalnum():
            trail.append(chunk[-1])
            chunk = chunk[:-1]
        tokens.extend(lead)
        if chunk:
            tokens.append(chunk)
        tokens.extend(reversed(trail))
    return tokens


def lemmatize(surface: str, tag: str) -> str:
    """Lowercase lemma: suffix stripping for plural nouns and verb forms."""
    word = surface.lower()
    if tag in VERB_TAGS:
        return _verb_lemma(word)
    if tag in ("NNS", "NNPS"):
        return _noun_lemma(word)
    return word


def _restore_e(stem: str) -> bool:
    """Should a silent 'e' be re-appended after suffix stripping?"""
    if len(stem) < 2:
        return False
    last, prev = stem[-1], stem[-2]
    if last in "szcvu" and prev != last:
        return True
    if last == "g" and (prev == "n" or prev in _VOWELS):
        return True
    if last == "l" and prev not in _VOWELS and prev != "l":
        return True
    if len(stem) >= 3:
        third = stem[-3]
        if last == "r" and prev == "u" and third not in _VOWELS:
            return True
        if last == "n" and prev == "i" and third not in _VOWELS:
            return True
        if last == "t" and prev == "a" and third not in _VOWELS:
            return True
        if last == "d" and prev in "iu" and third not in _VOWELS:
            return True
    # short CVC stems ("mak", "stor") lost a silent e
    if (
        len(stem) <= 4
        and len(stem) >= 3
        and last not in _VOWELS
        and last not in "wxy"
        and prev in _VOWELS
        and stem[-3] not in _VOWELS
    ):
        return True
    return False


def _undouble(stem: str) -> str:
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS
        and stem[-1] not in "lszf"
    ):
        return stem[:-1]
    return stem


def _verb_lemma(word: str) -> str:
    if word in IRREGULAR_VERBS:
        return IRREGULAR_VERBS[word]
    if word.endswith("ies") and len(word) >= 5:
        return word[:-3] + "y"
    if word.endswith("es") and len(word) >= 4 and word[-3] in "sxzo" or (
        word.endswith("ches") or word.endswith("shes")
    ):
        stem = word[:-2]
        if stem.endswith(("ch", "sh", "x", "ss", "zz", "o")):
            return stem
        return stem + "e" if _restore_e(stem) else stem
    if word.endswith("s") and len(word) >= 3 and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    if word.endswith("ed") and len(word) >= 4 and not word.endswith("eed"):
        if word.endswith("ied") and len(word) >= 5:
            return word[:-3] + "y"
        stem = word[:-2]
        undoubled = _undouble(stem)
        if undoubled != stem:
            return undoubled
        return stem + "e" if _restore_e(stem) else stem
    if word.endswith("ing") and len(word) >= 5:
        stem = word[:-3]
        if len(stem) < 2:
            return word
        undoubled = _undouble(stem)
        if undoubled != stem:
            return undoubled
        return stem + "e" if _restore_e(stem) else stem
    return word


def _noun_lemma(word: str) -> str:
    if word in NOUN_EXCEPTIONS:
        return NOUN_EXCEPTIONS[word]
    if word.endswith("ses") and len(word) >= 5:
        return word[:-3] + "s"
    if word.endswith("ies") and len(word) >= 5:
        return word[:-3] + "y"
    if word.endswith("es") and len(word) >= 4 and (
        word.endswith(("ches", "shes", "xes", "zzes", "oes"))
    ):
        return word[:-2]
    if word.endswith("s") and len(word) >= 3 and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    return word


@dataclass(frozen=True)
class Tagger:
    """Deterministic lexicon+rules tagger over the fixed tag subset."""

    lexicon: dict[str, str]

    def tag(self, tokens: list[str], sentence_index: int = 0) -> TaggedSentence:
        tagged: list[TaggedToken] = []
        prev_tag = ""
        prev_surface = ""
        for index, surface in enumerate(tokens):
            tag = self._tag_one(surface, index, prev_tag, prev_surface)
            tagged.append(TaggedToken(
                surface=surface,
                tag=tag,
                lemma=lemmatize(surface, tag),
                sentence_index=sentence_index,
                token_index=index,
            ))
            prev_tag = tag
            prev_surface = surface.lower()
        return TaggedSentence(tokens=tuple(tagged))

    def _tag_one(self, surface: str, index: int, prev_tag: str, prev_surface: str) -> str:
        lower = surface.lower()
        if not any(c.isalnum() for c in surface):
            return "OTHER"
        if _NUMBER_RE.match(surface):
            return "CD"
        if lower in self.lexicon:
            return self.lexicon[lower]
        # suffix heuristics
        if lower.endswith("s") and len(lower) >= 3 and not lower.endswith("ss"):
            if prev_tag in NOUN_TAGS or prev_tag == "PRP":
                return "VBZ"
            return "NNS"
        if lower.endswith("ed") and len(lower) >= 4 and not lower.endswith("eed"):
            if prev_surface in _BE_HAVE:
                return "VBN"
            return "VBD"
        if lower.endswith("ing") and len(lower) >= 5:
            return "VBG"
        if lower.endswith("ly") and len(lower) >= 4:
            return "RB"
        if surface[0].isupper() and index > 0:
            return "NNP"
        return "NN"


def default_tagger() -> Tagger:
    lexicon = dict(CLOSED_CLASS)
    lexicon.update(OPEN_CLASS)
    return Tagger(lexicon=lexicon)


def extend_lexicon(tagger: Tagger, entries: list[tuple[str, str]]) -> Tagger:
    """Return a tagger where the given surface->tag entries win lookups."""
    for surface, tag in entries:
        if tag not in POS_TAGS:
            raise TaggingError(f"unknown tag {tag!r} for {surface!r}")
    merged = dict(tagger.lexicon)
    for surface, tag in entries:
        merged[surface.lower()] = tag
    return Tagger(lexicon=merged)


def load_lexicon_file(path) -> list[tuple[str, str]]:
    """Read a surface<TAB>TAG extension file."""
    entries = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise TaggingError(f"{path}:{lineno}: expected surface<TAB>TAG")
            entries.append((parts[0], parts[1]))
    return entries


def pos_tag(tokens: list[str], tagger: Tagger | None = None, sentence_index: int = 0) -> TaggedSentence:
    """Tag a token list with the default tagger unless one is supplied."""
    return (tagger or default_tagger()).tag(tokens, sentence_index)


def parse_pretagged(text: str) -> list[TaggedSentence]:
    """Parse the surface/TAG pre-tagged format, one sentence per line."""
    sentences = []
    for line_index, line in enumerate(s for s in text.splitlines() if s.strip()):
        tokens = []
        for token_index, item in enumerate(line.split()):
            if "/" not in item:
                raise TaggingError(f"line {line_index + 1}: token {item!r} lacks /TAG")
            surface, _, tag = item.rpartition("/")
            if tag not in POS_TAGS:
                raise TaggingError(f"line {line_index + 1}: unknown tag {tag!r}")
            tokens.append(TaggedToken(
                surface=surface,
                tag=tag,
                lemma=lemmatize(surface, tag),
                sentence_index=line_index,
                token_index=token_index,
            ))
        sentences.append(TaggedSentence(tokens=tuple(tokens)))
    return sentences


def tag_text(text: str, tagger: Tagger | None = None) -> list[TaggedSentence]:
    """Split, tokenize and tag a full document."""
    tagger = tagger or default_tagger()
    return [
        tagger.tag(tokenize(sentence), sentence_index=i)
        for i, sentence in enumerate(split_sentences(text))
    ]
