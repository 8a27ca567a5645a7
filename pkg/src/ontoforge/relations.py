"""Pattern-rule engine over tagged sentences for verb-relation extraction.

Rules are sequences of parenthesised groups.  A group holds alternatives
(tag or literal-word constraints), an optional ``:name`` binding and an
optional trailing ``*`` meaning zero-or-more.  Matching is greedy and
deterministic: star groups take the maximal run and there is no
backtracking across groups; scanning is left to right with non-overlapping
matches.

Every occurrence of a matched pattern yields a relation.  Relations are
keyed by the (label, domain, range) triple, so the same verb with a
different argument pair stays a distinct relation; identical triples merge
into an occurrence count.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

from .nlp import POS_TAGS, TaggedDocument, TaggedSentence, TaggedToken


class RuleError(Exception):
    pass


class RuleSyntaxError(RuleError):
    def __init__(self, rule_name: str, offset: int, message: str):
        super().__init__(f"rule {rule_name!r} at offset {offset}: {message}")
        self.rule_name = rule_name
        self.offset = offset


@dataclass(frozen=True)
class Constraint:
    kind: str  # "tag" or "word"
    value: str

    def matches(self, token: TaggedToken) -> bool:
        if self.kind == "tag":
            return token.tag == self.value
        return token.surface.lower() == self.value.lower()


@dataclass(frozen=True)
class PatternElement:
    alternatives: tuple[Constraint, ...]
    quantifier: str = "one"  # "one" or "star"
    binding: str | None = None

    def admits(self, token: TaggedToken) -> bool:
        return any(c.matches(token) for c in self.alternatives)


@dataclass(frozen=True)
class PatternRule:
    name: str
    elements: tuple[PatternElement, ...]

    @property
    def bindings(self) -> dict[str, tuple[int, ...]]:
        positions: dict[str, list[int]] = defaultdict(list)
        for i, element in enumerate(self.elements):
            if element.binding:
                positions[element.binding].append(i)
        return {name: tuple(idx) for name, idx in positions.items()}


@dataclass(frozen=True)
class Match:
    start: int
    end: int
    bindings: dict[str, tuple[int, ...]]  # binding name -> token indices

    def text(self, name: str, sentence: TaggedSentence) -> str:
        return " ".join(sentence.tokens[i].surface for i in self.bindings.get(name, ()))

    def lemmas(self, name: str, sentence: TaggedSentence) -> str:
        return " ".join(sentence.tokens[i].lemma for i in self.bindings.get(name, ()))


@dataclass(frozen=True)
class Relation:
    label: str
    domain: str
    range: str
    sentence_ref: tuple[str, int]
    confidence: float = 1.0
    count: int = 1


# ---------------------------------------------------------------------------
# rule-file parsing

_HEADER_RE = re.compile(r"Rule\s*:\s*([A-Za-z_][A-Za-z0-9_]*)")
_CONSTRAINT_RE = re.compile(
    r"""Token\.(category|string)\s*==\s*(?:"([^"]*)"|'([^']*)'|([A-Za-z0-9_]+))""",
)


def _strip_comments(source: str) -> str:
    return "\n".join(line.split("//", 1)[0] for line in source.splitlines())


def _lex_body(body: str, rule_name: str, base_offset: int):
    """Yield (token_kind, value, offset) over a rule body."""
    i = 0
    n = len(body)
    while i < n:
        ch = body[i]
        if ch.isspace():
            i += 1
        elif ch in "()|*":
            yield {"(": "lparen", ")": "rparen", "|": "pipe", "*": "star"}[ch], ch, base_offset + i
            i += 1
        elif ch == ":":
            match = re.match(r":\s*([A-Za-z_][A-Za-z0-9_]*)", body[i:])
            if not match:
                raise RuleSyntaxError(rule_name, base_offset + i, "expected binding name after ':'")
            yield "binding", match.group(1), base_offset + i
            i += match.end()
        elif ch == "{":
            close = body.find("}", i)
            if close == -1:
                raise RuleSyntaxError(rule_name, base_offset + i, "unterminated constraint '{'")
            inner = body[i + 1:close]
            match = _CONSTRAINT_RE.fullmatch(inner.strip())
            if not match:
                raise RuleSyntaxError(
                    rule_name, base_offset + i,
                    f"bad constraint {inner.strip()!r}; expected Token.category == TAG "
                    "or Token.string == \"word\"",
                )
            field = match.group(1)
            value = next(v for v in match.groups()[1:] if v is not None)
            if field == "category":
                if value not in POS_TAGS:
                    raise RuleSyntaxError(rule_name, base_offset + i, f"unknown tag {value!r}")
                yield "constraint", Constraint("tag", value), base_offset + i
            else:
                yield "constraint", Constraint("word", value), base_offset + i
            i = close + 1
        else:
            raise RuleSyntaxError(rule_name, base_offset + i, f"unexpected character {ch!r}")


class _TokenStream:
    def __init__(self, tokens, rule_name: str, end_offset: int):
        self.tokens = list(tokens)
        self.pos = 0
        self.rule_name = rule_name
        self.end_offset = end_offset

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        token = self.peek()
        if token is None:
            raise RuleSyntaxError(self.rule_name, self.end_offset, "unexpected end of rule body")
        self.pos += 1
        return token


def _parse_group(stream: _TokenStream) -> PatternElement:
    kind, _, offset = stream.next()
    if kind != "lparen":
        raise RuleSyntaxError(stream.rule_name, offset, "expected '('")
    look = stream.peek()
    if look is None:
        raise RuleSyntaxError(stream.rule_name, stream.end_offset, "unexpected end of rule body")
    if look[0] == "lparen":
        inner = _parse_group(stream)
        alternatives = inner.alternatives
        binding = inner.binding
        star = inner.quantifier == "star"
    elif look[0] == "constraint":
        alts = [stream.next()[1]]
        while stream.peek() and stream.peek()[0] == "pipe":
            stream.next()
            kind, value, offset = stream.next()
            if kind != "constraint":
                raise RuleSyntaxError(stream.rule_name, offset, "expected constraint after '|'")
            alts.append(value)
        alternatives = tuple(alts)
        binding = None
        star = False
    else:
        raise RuleSyntaxError(stream.rule_name, look[2], "expected constraint or nested group")
    kind, _, offset = stream.next()
    if kind != "rparen":
        raise RuleSyntaxError(stream.rule_name, offset, "expected ')'")
    # optional ':name' then optional '*'
    if stream.peek() and stream.peek()[0] == "binding":
        name = stream.next()[1]
        if binding is not None and binding != name:
            raise RuleSyntaxError(stream.rule_name, offset, "conflicting bindings on one group")
        binding = name
    if stream.peek() and stream.peek()[0] == "star":
        stream.next()
        star = True
    return PatternElement(
        alternatives=alternatives,
        quantifier="star" if star else "one",
        binding=binding,
    )


def parse_rules(source: str) -> list[PatternRule]:
    """Parse a rule file: ``Rule:<name>`` headers, ``//`` comments."""
    source = _strip_comments(source)
    headers = list(_HEADER_RE.finditer(source))
    if not headers:
        if source.strip():
            raise RuleSyntaxError("<file>", 0, "content before any Rule: header")
        return []
    if source[:headers[0].start()].strip():
        raise RuleSyntaxError("<file>", 0, "content before first Rule: header")

    rules: list[PatternRule] = []
    seen: set[str] = set()
    for i, header in enumerate(headers):
        name = header.group(1)
        if name in seen:
            raise RuleError(f"duplicate rule name {name!r}")
        seen.add(name)
        body_start = header.end()
        body_end = headers[i + 1].start() if i + 1 < len(headers) else len(source)
        body = source[body_start:body_end]
        stream = _TokenStream(_lex_body(body, name, body_start), name, body_end)
        elements = []
        while stream.peek() is not None:
            elements.append(_parse_group(stream))
        if not elements:
            raise RuleSyntaxError(name, body_start, "rule has no elements")
        rules.append(PatternRule(name=name, elements=tuple(elements)))
    return rules


def load_rules(path) -> list[PatternRule]:
    return parse_rules(Path(path).read_text(encoding="utf-8"))


def default_rules() -> list[PatternRule]:
    return load_rules(Path(__file__).parent / "data" / "default.rules")


# ---------------------------------------------------------------------------
# matching

def _try_match(rule: PatternRule, sentence: TaggedSentence, start: int) -> Match | None:
    tokens = sentence.tokens
    n = len(tokens)
    pos = start
    bound: dict[str, list[int]] = defaultdict(list)
    for element in rule.elements:
        if element.quantifier == "one":
            if pos < n and element.admits(tokens[pos]):
                if element.binding:
                    bound[element.binding].append(pos)
                pos += 1
            else:
                return None
        else:  # greedy star, no backtracking
            while pos < n and element.admits(tokens[pos]):
                if element.binding:
                    bound[element.binding].append(pos)
                pos += 1
    if pos == start:
        return None  # zero-width matches are not matches
    return Match(start=start, end=pos, bindings={k: tuple(v) for k, v in bound.items()})


def match_rule(rule: PatternRule, sentence: TaggedSentence) -> list[Match]:
    """All non-overlapping matches, scanning left to right."""
    matches: list[Match] = []
    i = 0
    n = len(sentence.tokens)
    while i < n:
        match = _try_match(rule, sentence, i)
        if match is not None:
            matches.append(match)
            i = match.end
        else:
            i += 1
    return matches


def extract_relations(docs: list[TaggedDocument], rules: list[PatternRule]) -> list[Relation]:
    """Run every rule over every sentence; merge identical triples.

    All occurrences count: relations are keyed by (label, domain, range),
    never by label alone, and confidence is count / max count.
    """
    merged: dict[tuple[str, str, str], dict] = {}
    for doc in docs:
        for sentence_index, sentence in enumerate(doc.sentences):
            for rule in rules:
                for match in match_rule(rule, sentence):
                    verb_indices = match.bindings.get("verb", ())
                    if not verb_indices:
                        continue
                    head = sentence.tokens[verb_indices[-1]]
                    domain = match.lemmas("domain", sentence)
                    if not domain:
                        continue
                    key = (head.lemma, domain, match.lemmas("range", sentence))
                    entry = merged.get(key)
                    if entry is None:
                        merged[key] = {
                            "ref": (doc.doc_id, sentence_index),
                            "count": 1,
                        }
                    else:
                        entry["count"] += 1
    if not merged:
        return []
    max_count = max(entry["count"] for entry in merged.values())
    relations = [
        Relation(
            label=label,
            domain=domain,
            range=rng,
            sentence_ref=entry["ref"],
            confidence=entry["count"] / max_count,
            count=entry["count"],
        )
        for (label, domain, rng), entry in merged.items()
    ]
    relations.sort(key=lambda r: (r.sentence_ref[0], r.sentence_ref[1], r.label, r.domain, r.range))
    return relations


def split_compound(relation: Relation, separator: str = "#") -> list[Relation]:
    """Expand separator-joined domains/ranges into all part combinations."""
    if separator == " ":
        raise ValueError("separator must not be a space")
    domains = relation.domain.split(separator)
    ranges = relation.range.split(separator)
    if len(domains) == 1 and len(ranges) == 1:
        return [relation]
    return [
        Relation(
            label=relation.label,
            domain=d.strip(),
            range=r.strip(),
            sentence_ref=relation.sentence_ref,
            confidence=relation.confidence,
            count=relation.count,
        )
        for d in domains
        for r in ranges
    ]


def relations_to_tsv(relations: list[Relation]) -> str:
    lines = ["label\tdomain\trange\tdoc_id\tsentence_index\tcount"]
    for rel in relations:
        lines.append(
            f"{rel.label}\t{rel.domain}\t{rel.range}\t{rel.sentence_ref[0]}\t"
            f"{rel.sentence_ref[1]}\t{rel.count}"
        )
    return "\n".join(lines) + "\n"
