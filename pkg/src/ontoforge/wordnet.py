"""Noun synset lookups over WNdb-format dictionary files.

Only ``index.noun`` and ``data.noun`` are read.  Two lemmas are synonyms
when they share at least one noun synset; the synonym set of a lemma is
the union of the word forms of all its noun synsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path


class WordnetLoadError(Exception):
    """Missing or malformed WNdb file."""


@dataclass(frozen=True)
class Synset:
    offset: int
    word_forms: tuple[str, ...]


@dataclass(frozen=True)
class WordnetDb:
    index: dict[str, tuple[int, ...]]
    synsets: dict[int, Synset]


def _data_lines(path: Path):
    try:
        text = path.read_text(encoding="utf-8", errors="replace")
    except OSError as exc:
        raise WordnetLoadError(f"cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line or line.startswith(" "):
            continue  # license header
        yield lineno, line


def _parse_index_line(line: str, path: Path, lineno: int) -> tuple[str, tuple[int, ...]]:
    fields = line.split()
    try:
        lemma = fields[0]
        pos = fields[1]
        synset_cnt = int(fields[2])
        p_cnt = int(fields[3])
        rest = fields[4 + p_cnt:]
        int(rest[0])  # sense_cnt
        int(rest[1])  # tagsense_cnt
        offsets = tuple(int(x) for x in rest[2:2 + synset_cnt])
        if pos != "n" or len(offsets) != synset_cnt:
            raise ValueError("field count mismatch")
    except (IndexError, ValueError) as exc:
        raise WordnetLoadError(f"{path}:{lineno}: malformed index line ({exc})") from exc
    return lemma, offsets


def _parse_data_line(line: str, path: Path, lineno: int) -> Synset:
    body = line.split("|", 1)[0]
    fields = body.split()
    try:
        offset = int(fields[0])
        ss_type = fields[2]
        w_cnt = int(fields[3], 16)
        words = tuple(fields[4 + 2 * i].lower() for i in range(w_cnt))
        after = 4 + 2 * w_cnt
        p_cnt = int(fields[after], 10)
        if ss_type != "n" or len(fields) < after + 1 + 4 * p_cnt or not words:
            raise ValueError("field count mismatch")
    except (IndexError, ValueError) as exc:
        raise WordnetLoadError(f"{path}:{lineno}: malformed data line ({exc})") from exc
    return Synset(offset=offset, word_forms=words)


def load_wordnet(directory) -> WordnetDb:
    """Load the noun database from a WNdb-3.0 style dictionary directory."""
    directory = Path(directory)
    index_path = directory / "index.noun"
    data_path = directory / "data.noun"
    for required in (index_path, data_path):
        if not required.exists():
            raise WordnetLoadError(f"missing {required}")

    synsets: dict[int, Synset] = {}
    for lineno, line in _data_lines(data_path):
        synset = _parse_data_line(line, data_path, lineno)
        synsets[synset.offset] = synset

    index: dict[str, tuple[int, ...]] = {}
    for lineno, line in _data_lines(index_path):
        lemma, offsets = _parse_index_line(line, index_path, lineno)
        for offset in offsets:
            if offset not in synsets:
                raise WordnetLoadError(
                    f"{index_path}:{lineno}: offset {offset} not in data.noun"
                )
        index[lemma] = offsets

    for synset in synsets.values():
        for form in synset.word_forms:
            if form not in index:
                raise WordnetLoadError(
                    f"{data_path}: word form {form!r} of synset {synset.offset} "
                    "missing from index.noun"
                )
    return WordnetDb(index=index, synsets=synsets)


def empty_db() -> WordnetDb:
    return WordnetDb(index={}, synsets={})


def _normalize(lemma: str) -> str:
    return lemma.strip().lower().replace(" ", "_")


def _index_key(db: WordnetDb, lemma: str, head_fallback: bool) -> str | None:
    """Resolve a phrase to an index key; multi-word may fall back to its head noun."""
    key = _normalize(lemma)
    if key in db.index:
        return key
    if head_fallback and "_" in key:
        head = key.rsplit("_", 1)[-1]
        if head in db.index:
            return head
    return None


def noun_synsets(db: WordnetDb, lemma: str, head_fallback: bool = True) -> list[Synset]:
    """Synsets of a lemma in index order; empty when unknown."""
    key = _index_key(db, lemma, head_fallback)
    if key is None:
        return []
    return [db.synsets[offset] for offset in db.index[key]]


def synonyms(db: WordnetDb, lemma: str, head_fallback: bool = True) -> set[str]:
    """Union of word forms over all noun synsets, space-separated forms."""
    forms: set[str] = set()
    for synset in noun_synsets(db, lemma, head_fallback):
        for form in synset.word_forms:
            forms.add(form.replace("_", " "))
    return forms


def are_synonyms(db: WordnetDb, a: str, b: str) -> bool:
    """True when b is among a's synonyms; any term equals itself."""
    a_norm = _normalize(a)
    b_norm = _normalize(b)
    if a_norm == b_norm:
        return True
    return b_norm.replace("_", " ") in synonyms(db, a)
