"""A Turtle-subset / N-Triples parser and triple graph.

Supported: @prefix/@base directives, IRIs, prefixed names, ``a``, string
literals with language tag or datatype, bare numbers, ``;``/``,``
continuation and bracketed blank nodes.  Collections and other constructs
fail with an explicit "unsupported" error.  IRIs are plain strings; blank
nodes and literals carry their own types.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from urllib.parse import urljoin

RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
RDFS_CLASS = RDFS_NS + "Class"
RDFS_SUBCLASS = RDFS_NS + "subClassOf"
RDFS_LABEL = RDFS_NS + "label"
OWL_NS = "http://www.w3.org/2002/07/owl#"
OWL_CLASS = OWL_NS + "Class"
OWL_OBJECT_PROPERTY = OWL_NS + "ObjectProperty"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"


class RdfSyntaxError(Exception):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnsupportedConstructError(RdfSyntaxError):
    def __init__(self, line: int, column: int, construct: str):
        super().__init__(line, column, f"unsupported construct: {construct}")
        self.construct = construct


@dataclass(frozen=True)
class BlankNode:
    id: str


@dataclass(frozen=True)
class Literal:
    value: str
    datatype: str | None = None
    lang: str | None = None


Term = "str | BlankNode | Literal"


@dataclass
class RdfGraph:
    triples: set = field(default_factory=set)

    def add(self, s, p, o) -> None:
        self.triples.add((s, p, o))

    def subjects(self, predicate: str, obj) -> set:
        return {s for s, p, o in self.triples if p == predicate and o == obj}

    def objects(self, subject, predicate: str) -> set:
        return {o for s, p, o in self.triples if s == subject and p == predicate}

    def __len__(self) -> int:
        return len(self.triples)


_ESCAPES = {"t": "\t", "n": "\n", "r": "\r", '"': '"', "\\": "\\", "'": "'", "b": "\b", "f": "\f"}


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _line_col(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        last_nl = self.text.rfind("\n", 0, pos)
        return line, pos - last_nl

    def error(self, message: str, pos: int | None = None) -> RdfSyntaxError:
        line, col = self._line_col(self.pos if pos is None else pos)
        return RdfSyntaxError(line, col, message)

    def unsupported(self, construct: str) -> UnsupportedConstructError:
        line, col = self._line_col(self.pos)
        return UnsupportedConstructError(line, col, construct)

    def skip_ws(self) -> None:
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in " \t\r\n":
                self.pos += 1
            elif ch == "#":
                nl = self.text.find("\n", self.pos)
                self.pos = len(self.text) if nl == -1 else nl + 1
            else:
                return

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, expected: str) -> None:
        self.skip_ws()
        if not self.text.startswith(expected, self.pos):
            raise self.error(f"expected {expected!r}")
        self.pos += len(expected)

    def try_take(self, expected: str) -> bool:
        self.skip_ws()
        if self.text.startswith(expected, self.pos):
            self.pos += len(expected)
            return True
        return False

    def match(self, pattern: re.Pattern) -> re.Match | None:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m


_IRIREF_RE = re.compile(r"<([^<>\"{}|^`\\\x00-\x20]*)>")
_PNAME_RE = re.compile(r"([A-Za-z][\w.-]*)?:([\w.-]*[\w-])?")
_BNODE_RE = re.compile(r"_:([\w-]+)")
_NUMBER_RE = re.compile(r"[+-]?\d+(\.\d+)?([eE][+-]?\d+)?")
_LANG_RE = re.compile(r"@([A-Za-z]+(-[A-Za-z0-9]+)*)")


class _Parser:
    def __init__(self, text: str, base: str | None = None):
        self.scanner = _Scanner(text)
        self.base = base
        self.prefixes: dict[str, str] = {}
        self.graph = RdfGraph()
        self._bnode_counter = 0

    def parse(self) -> RdfGraph:
        while not self.scanner.eof():
            if self.scanner.try_take("@prefix"):
                self._directive_prefix()
            elif self.scanner.try_take("@base"):
                self._directive_base()
            else:
                self._triples()
                self.scanner.take(".")
        return self.graph

    def _directive_prefix(self) -> None:
        m = self.scanner.match(re.compile(r"([A-Za-z][\w.-]*)?:"))
        if not m:
            raise self.scanner.error("expected prefix name")
        prefix = m.group(1) or ""
        iri = self._iriref()
        self.scanner.take(".")
        self.prefixes[prefix] = iri

    def _directive_base(self) -> None:
        self.base = self._iriref()
        self.scanner.take(".")

    def _iriref(self) -> str:
        m = self.scanner.match(_IRIREF_RE)
        if not m:
            raise self.scanner.error("expected <IRI>")
        iri = m.group(1)
        if self.base and "://" not in iri:
            return urljoin(self.base, iri)
        return iri

    def _fresh_bnode(self) -> BlankNode:
        self._bnode_counter += 1
        return BlankNode(f"gen{self._bnode_counter}")

    def _triples(self) -> None:
        subject = self._subject()
        self._predicate_object_list(subject)

    def _subject(self):
        ch = self.scanner.peek()
        if ch == "<":
            return self._iriref()
        if ch == "[":
            self.scanner.take("[")
            node = self._fresh_bnode()
            if not self.scanner.try_take("]"):
                self._predicate_object_list(node)
                self.scanner.take("]")
            return node
        if ch == "(":
            raise self.scanner.unsupported("collections")
        if self.scanner.text.startswith("_:", self.scanner.pos):
            m = self.scanner.match(_BNODE_RE)
            if not m:
                raise self.scanner.error("bad blank node label")
            return BlankNode(m.group(1))
        m = self.scanner.match(_PNAME_RE)
        if m:
            return self._expand_pname(m)
        raise self.scanner.error("expected subject")

    def _expand_pname(self, m: re.Match) -> str:
        prefix = m.group(1) or ""
        local = m.group(2) or ""
        if prefix not in self.prefixes:
            raise self.scanner.error(f"undefined prefix {prefix!r}:", pos=m.start())
        return self.prefixes[prefix] + local

    def _predicate_object_list(self, subject) -> None:
        while True:
            predicate = self._verb()
            while True:
                obj = self._object(subject_context=subject)
                self.graph.add(subject, predicate, obj)
                if not self.scanner.try_take(","):
                    break
            if not self.scanner.try_take(";"):
                return
            # allow trailing ';' before '.' or ']'
            if self.scanner.peek() in (".", "]", ""):
                return

    def _verb(self) -> str:
        self.scanner.skip_ws()
        text, pos = self.scanner.text, self.scanner.pos
        if text.startswith("a", pos):
            after = text[pos + 1] if pos + 1 < len(text) else " "
            if not (after.isalnum() or after in ":_.-"):
                self.scanner.pos = pos + 1
                return RDF_TYPE
        ch = self.scanner.peek()
        if ch == "<":
            return self._iriref()
        m = self.scanner.match(_PNAME_RE)
        if m:
            return self._expand_pname(m)
        raise self.scanner.error("expected predicate")

    def _object(self, subject_context):
        ch = self.scanner.peek()
        if ch == "<":
            return self._iriref()
        if ch in "\"'":
            return self._literal()
        if ch == "[":
            self.scanner.take("[")
            node = self._fresh_bnode()
            if not self.scanner.try_take("]"):
                self._predicate_object_list(node)
                self.scanner.take("]")
            return node
        if ch == "(":
            raise self.scanner.unsupported("collections")
        if self.scanner.text.startswith("_:", self.scanner.pos):
            m = self.scanner.match(_BNODE_RE)
            if not m:
                raise self.scanner.error("bad blank node label")
            return BlankNode(m.group(1))
        if ch and (ch.isdigit() or ch in "+-"):
            m = self.scanner.match(_NUMBER_RE)
            if not m:
                raise self.scanner.error("bad numeric literal")
            text = m.group(0)
            datatype = XSD_NS + ("decimal" if "." in text else "integer")
            if "e" in text.lower():
                datatype = XSD_NS + "double"
            return Literal(value=text, datatype=datatype)
        if self.scanner.try_take("true"):
            return Literal(value="true", datatype=XSD_NS + "boolean")
        if self.scanner.try_take("false"):
            return Literal(value="false", datatype=XSD_NS + "boolean")
        m = self.scanner.match(_PNAME_RE)
        if m:
            return self._expand_pname(m)
        raise self.scanner.error("expected object")

    def _literal(self) -> Literal:
        self.scanner.skip_ws()
        text = self.scanner.text
        pos = self.scanner.pos
        quote = text[pos]
        if text.startswith(quote * 3, pos):
            raise self.scanner.unsupported("triple-quoted literals")
        pos += 1
        chars: list[str] = []
        while pos < len(text):
            ch = text[pos]
            if ch == "\\":
                if pos + 1 >= len(text):
                    raise self.scanner.error("dangling escape")
                nxt = text[pos + 1]
                if nxt == "u" and pos + 5 < len(text):
                    chars.append(chr(int(text[pos + 2:pos + 6], 16)))
                    pos += 6
                    continue
                if nxt not in _ESCAPES:
                    raise self.scanner.error(f"bad escape \\{nxt}")
                chars.append(_ESCAPES[nxt])
                pos += 2
            elif ch == quote:
                pos += 1
                break
            elif ch == "\n":
                raise self.scanner.error("newline in single-line literal")
            else:
                chars.append(ch)
                pos += 1
        else:
            raise self.scanner.error("unterminated literal")
        self.scanner.pos = pos
        value = "".join(chars)
        if self.scanner.text.startswith("^^", self.scanner.pos):
            self.scanner.pos += 2
            ch = self.scanner.peek()
            if ch == "<":
                return Literal(value=value, datatype=self._iriref())
            m = self.scanner.match(_PNAME_RE)
            if not m:
                raise self.scanner.error("expected datatype after ^^")
            return Literal(value=value, datatype=self._expand_pname(m))
        m = _LANG_RE.match(self.scanner.text, self.scanner.pos)
        if m:
            self.scanner.pos = m.end()
            return Literal(value=value, lang=m.group(1))
        return Literal(value=value)


def parse_turtle(text: str, base: str | None = None) -> RdfGraph:
    return _Parser(text, base=base).parse()


def parse_rdf(path, base: str | None = None) -> RdfGraph:
    """Parse a Turtle-subset (or N-Triples) file into a graph."""
    return parse_turtle(Path(path).read_text(encoding="utf-8"), base=base)


def escape_literal(value: str) -> str:
    out = value.replace("\\", "\\\\").replace('"', '\\"')
    return out.replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t")


def local_name(iri: str) -> str:
    for sep in ("#", "/"):
        if sep in iri:
            tail = iri.rsplit(sep, 1)[1]
            if tail:
                return tail
    return iri
