"""Minimal RDF triple extraction for RDF/XML, Turtle, and N-Triples.

Only what the ontology index needs: subject/predicate/object triples with
URI, blank-node (``_:`` prefixed string), and literal terms.  No inference,
no imports resolution, no datatype interpretation beyond carrying the IRI.
"""

from __future__ import annotations

import re
import xml.parsers.expat
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Union
from urllib.parse import urljoin

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XML_NS = "http://www.w3.org/XML/1998/namespace"

RDF_TYPE = RDF_NS + "type"
RDFS_LABEL = RDFS_NS + "label"

_ABSOLUTE_IRI = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")


def resolve_iri(iri: str, base: str) -> str:
    """Resolve relative IRIs against a base; absolute IRIs pass through.

    urljoin alone would also normalize absolute IRIs, silently dropping a
    trailing '#' from namespace IRIs, so it is only applied to relative ones.
    """
    if not base or _ABSOLUTE_IRI.match(iri):
        return iri
    return urljoin(base, iri)


class RdfSyntax(Enum):
    RDF_XML = "rdfxml"
    TURTLE = "turtle"
    NTRIPLES = "ntriples"


class RdfSyntaxError(ValueError):
    """Malformed RDF input; carries the line/column where parsing stopped."""

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class UnsupportedSyntaxError(ValueError):
    """The requested or detected RDF serialization is not supported."""


@dataclass(frozen=True)
class Literal:
    value: str
    lang: str = ""
    datatype: str = ""


Term = Union[str, Literal]
Triple = tuple[str, str, Term]

_EXTENSION_SYNTAX = {
    ".rdf": RdfSyntax.RDF_XML,
    ".owl": RdfSyntax.RDF_XML,
    ".xml": RdfSyntax.RDF_XML,
    ".ttl": RdfSyntax.TURTLE,
    ".nt": RdfSyntax.NTRIPLES,
}


def syntax_for_path(path) -> RdfSyntax:
    """Pick the RDF syntax from a file extension."""
    suffix = Path(str(path)).suffix.lower()
    try:
        return _EXTENSION_SYNTAX[suffix]
    except KeyError:
        raise UnsupportedSyntaxError(
            f"cannot infer RDF syntax from {str(path)!r}; "
            "expected .rdf/.owl/.xml, .ttl, or .nt") from None


def parse_triples(data: bytes, syntax: RdfSyntax, base: str = "") -> list[Triple]:
    """Parse bytes in the given syntax into a triple list, in document order."""
    if not isinstance(syntax, RdfSyntax):
        raise UnsupportedSyntaxError(f"unknown RDF syntax {syntax!r}")
    if syntax is RdfSyntax.NTRIPLES:
        return _parse_ntriples(data)
    if syntax is RdfSyntax.TURTLE:
        return _parse_turtle(data, base)
    return _parse_rdfxml(data, base)


def _decode_utf8(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise RdfSyntaxError(f"input is not valid UTF-8: {exc}") from None


_STRING_ESCAPES = {
    "t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
    '"': '"', "'": "'", "\\": "\\",
}


def _unescape(text: str, line: int = 0) -> str:
    if "\\" not in text:
        return text
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        esc = text[i + 1] if i + 1 < len(text) else ""
        if esc in _STRING_ESCAPES:
            out.append(_STRING_ESCAPES[esc])
            i += 2
        elif esc == "u":
            out.append(chr(int(text[i + 2:i + 6], 16)))
            i += 6
        elif esc == "U":
            out.append(chr(int(text[i + 2:i + 10], 16)))
            i += 10
        else:
            raise RdfSyntaxError(f"bad escape sequence \\{esc}", line)
    return "".join(out)


# ---------------------------------------------------------------------------
# N-Triples

_NT_LINE = re.compile(
    r'^(<[^>]*>|_:\S+)\s+'
    r'<([^>]*)>\s+'
    r'(<[^>]*>|_:\S+|"(?:[^"\\]|\\.)*"(?:@[A-Za-z0-9-]+|\^\^<[^>]*>)?)'
    r'\s*\.\s*$')

_NT_LITERAL = re.compile(
    r'^"((?:[^"\\]|\\.)*)"(?:@([A-Za-z0-9-]+)|\^\^<([^>]*)>)?$')


def _nt_term(token: str, line: int) -> Term:
    if token.startswith("<"):
        return _unescape(token[1:-1], line)
    if token.startswith("_:"):
        return token
    match = _NT_LITERAL.match(token)
    if match is None:
        raise RdfSyntaxError(f"bad N-Triples term {token!r}", line)
    return Literal(_unescape(match.group(1), line),
                   lang=match.group(2) or "",
                   datatype=match.group(3) or "")


def _parse_ntriples(data: bytes) -> list[Triple]:
    triples = []
    for lineno, raw in enumerate(_decode_utf8(data).split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = _NT_LINE.match(line)
        if match is None:
            raise RdfSyntaxError(f"bad N-Triples statement: {line!r}", lineno)
        subject = _nt_term(match.group(1), lineno)
        predicate = _unescape(match.group(2), lineno)
        obj = _nt_term(match.group(3), lineno)
        triples.append((subject, predicate, obj))
    return triples


# ---------------------------------------------------------------------------
# Turtle

_XSD = "http://www.w3.org/2001/XMLSchema#"

_TURTLE_TOKEN = re.compile(r'''
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<iriref><[^<>"{}|^`\\\x00-\x20]*>)
  | (?P<string_long_q>"""(?:[^"\\]|\\.|"(?!""))*""")
  | (?P<string_long_a>\'\'\'(?:[^'\\]|\\.|'(?!''))*\'\'\')
  | (?P<string_q>"(?:[^"\\\n]|\\.)*")
  | (?P<string_a>'(?:[^'\\\n]|\\.)*')
  | (?P<langtag>@[A-Za-z]+(?:-[A-Za-z0-9]+)*)
  | (?P<dtype>\^\^)
  | (?P<number>[+-]?(?:\d*\.\d+(?:[eE][+-]?\d+)?|\d+(?:[eE][+-]?\d+)?))
  | (?P<bnode>_:[^\s;,.\])]+)
  | (?P<punct>[;,.\[\]()])
  | (?P<pname>(?:[A-Za-z0-9_\-À-￿][A-Za-z0-9_\-.À-￿]*)?:
       (?:[A-Za-z0-9_\-.:À-￿]|%[0-9A-Fa-f]{2}|\\[~.!$&'()*+,;=/?\#@%_\-])*)
  | (?P<keyword>@?[A-Za-z]+)
''', re.X)


@dataclass
class _Token:
    kind: str
    value: str
    line: int
    column: int


def _tokenize_turtle(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        match = _TURTLE_TOKEN.match(text, pos)
        if match is None:
            raise RdfSyntaxError(f"unexpected character {text[pos]!r}",
                                 line, pos - line_start)
        kind = match.lastgroup
        value = match.group()
        end = match.end()
        if kind == "pname":
            # PN_LOCAL cannot end with a bare dot: it terminates the statement
            while value.endswith(".") and not value.endswith("\\."):
                value = value[:-1]
                end -= 1
        elif kind == "langtag" and value.lower() in ("@prefix", "@base"):
            kind = "keyword"
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, value, line, match.start() - line_start))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = match.start() + value.rindex("\n") + 1
        pos = end
    tokens.append(_Token("eof", "", line, 0))
    return tokens


class _TurtleParser:
    def __init__(self, text: str, base: str):
        self.tokens = _tokenize_turtle(text)
        self.index = 0
        self.base = base
        self.prefixes: dict[str, str] = {}
        self.triples: list[Triple] = []
        self.bnode_count = 0

    def error(self, message: str) -> RdfSyntaxError:
        tok = self.peek()
        return RdfSyntaxError(message + f", got {tok.value!r}", tok.line,
                              tok.column)

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def next(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect_punct(self, char: str):
        tok = self.next()
        if tok.kind != "punct" or tok.value != char:
            self.index -= 1
            raise self.error(f"expected {char!r}")

    def fresh_bnode(self) -> str:
        self.bnode_count += 1
        return f"_:gen{self.bnode_count}"

    def resolve(self, iri: str) -> str:
        return resolve_iri(iri, self.base)

    def expand_pname(self, pname: str, line: int) -> str:
        prefix, _, local = pname.partition(":")
        if prefix not in self.prefixes:
            raise RdfSyntaxError(f"undeclared prefix {prefix + ':'!r}", line)
        # drop PN_LOCAL_ESC backslashes; %-encoded chars stay encoded
        local = re.sub(r'\\(.)', r'\1', local)
        return self.prefixes[prefix] + local

    def parse(self) -> list[Triple]:
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind == "keyword" and tok.value.lower() in (
                    "@prefix", "prefix", "@base", "base"):
                self.parse_directive()
            else:
                subject = self.parse_subject()
                self.parse_predicate_object_list(subject)
                self.expect_punct(".")
        return self.triples

    def parse_directive(self):
        keyword = self.next().value.lower()
        if keyword in ("@prefix", "prefix"):
            name = self.next()
            if name.kind != "pname" or not name.value.endswith(":"):
                raise self.error("expected prefix name")
            iri = self.next()
            if iri.kind != "iriref":
                raise self.error("expected IRI")
            self.prefixes[name.value[:-1]] = self.resolve(iri.value[1:-1])
        else:
            iri = self.next()
            if iri.kind != "iriref":
                raise self.error("expected IRI")
            self.base = self.resolve(iri.value[1:-1])
        if keyword.startswith("@"):
            self.expect_punct(".")

    def parse_subject(self) -> str:
        tok = self.peek()
        if tok.kind == "iriref":
            return self.resolve(_unescape(self.next().value[1:-1], tok.line))
        if tok.kind == "pname":
            return self.expand_pname(self.next().value, tok.line)
        if tok.kind == "bnode":
            return self.next().value
        if tok.kind == "punct" and tok.value == "[":
            return self.parse_bnode_property_list()
        if tok.kind == "punct" and tok.value == "(":
            return self.parse_collection()
        raise self.error("expected subject")

    def parse_verb(self) -> str:
        tok = self.peek()
        if tok.kind == "keyword" and tok.value == "a":
            self.next()
            return RDF_TYPE
        if tok.kind == "iriref":
            return self.resolve(_unescape(self.next().value[1:-1], tok.line))
        if tok.kind == "pname":
            return self.expand_pname(self.next().value, tok.line)
        raise self.error("expected predicate")

    def parse_predicate_object_list(self, subject: str):
        while True:
            predicate = self.parse_verb()
            while True:
                obj = self.parse_object()
                self.triples.append((subject, predicate, obj))
                if self.peek().kind == "punct" and self.peek().value == ",":
                    self.next()
                    continue
                break
            if self.peek().kind == "punct" and self.peek().value == ";":
                while self.peek().kind == "punct" and self.peek().value == ";":
                    self.next()
                ahead = self.peek()
                if ahead.kind == "punct" and ahead.value in (".", "]"):
                    return
                continue
            return

    def parse_object(self) -> Term:
        tok = self.peek()
        if tok.kind == "iriref":
            return self.resolve(_unescape(self.next().value[1:-1], tok.line))
        if tok.kind == "pname":
            return self.expand_pname(self.next().value, tok.line)
        if tok.kind == "bnode":
            return self.next().value
        if tok.kind in ("string_q", "string_a", "string_long_q",
                        "string_long_a"):
            return self.parse_literal()
        if tok.kind == "number":
            self.next()
            if "." in tok.value or "e" in tok.value or "E" in tok.value:
                datatype = _XSD + ("double" if "e" in tok.value.lower()
                                   else "decimal")
            else:
                datatype = _XSD + "integer"
            return Literal(tok.value, datatype=datatype)
        if tok.kind == "keyword" and tok.value in ("true", "false"):
            self.next()
            return Literal(tok.value, datatype=_XSD + "boolean")
        if tok.kind == "punct" and tok.value == "[":
            return self.parse_bnode_property_list()
        if tok.kind == "punct" and tok.value == "(":
            return self.parse_collection()
        raise self.error("expected object")

    def parse_literal(self) -> Literal:
        tok = self.next()
        quote_len = 3 if tok.kind.startswith("string_long") else 1
        value = _unescape(tok.value[quote_len:-quote_len], tok.line)
        nxt = self.peek()
        if nxt.kind == "langtag":
            self.next()
            return Literal(value, lang=nxt.value[1:])
        if nxt.kind == "dtype":
            self.next()
            dt = self.peek()
            if dt.kind == "iriref":
                return Literal(value, datatype=self.resolve(
                    _unescape(self.next().value[1:-1], dt.line)))
            if dt.kind == "pname":
                return Literal(value, datatype=self.expand_pname(
                    self.next().value, dt.line))
            raise self.error("expected datatype IRI")
        return Literal(value)

    def parse_bnode_property_list(self) -> str:
        self.expect_punct("[")
        node = self.fresh_bnode()
        if not (self.peek().kind == "punct" and self.peek().value == "]"):
            self.parse_predicate_object_list(node)
        self.expect_punct("]")
        return node

    def parse_collection(self) -> str:
        self.expect_punct("(")
        node = self.fresh_bnode()
        while not (self.peek().kind == "punct" and self.peek().value == ")"):
            self.parse_object()
        self.expect_punct(")")
        return node


def _parse_turtle(data: bytes, base: str) -> list[Triple]:
    return _TurtleParser(_decode_utf8(data), base).parse()


# ---------------------------------------------------------------------------
# RDF/XML

_RESERVED_RDF_ATTRS = {"about", "ID", "nodeID", "resource", "parseType",
                       "datatype", "RDF", "Description", "li"}


def _xml_name_uri(name: str) -> str:
    ns, sep, local = name.rpartition(" ")
    return ns + local if sep else local


def _attr(attrs: dict[str, str], local: str) -> str | None:
    value = attrs.get(RDF_NS + " " + local)
    if value is None:
        value = attrs.get(local)
    return value


class _RdfXmlReader:
    """Streaming RDF/XML reader: alternating node / property element levels."""

    def __init__(self, base: str):
        self.triples: list[Triple] = []
        self.stack: list[dict] = []
        self.bnode_count = 0
        self.base = base
        self.parser = xml.parsers.expat.ParserCreate(namespace_separator=" ")
        self.parser.StartElementHandler = self._start
        self.parser.EndElementHandler = self._end
        self.parser.CharacterDataHandler = self._chars

    def fresh_bnode(self) -> str:
        self.bnode_count += 1
        return f"_:genid{self.bnode_count}"

    def emit(self, subject: str, predicate: str, obj: Term):
        self.triples.append((subject, predicate, obj))

    def _scope(self) -> tuple[str, str]:
        if self.stack:
            return self.stack[-1]["base"], self.stack[-1]["lang"]
        return self.base, ""

    def _error(self, message: str) -> RdfSyntaxError:
        return RdfSyntaxError(message, self.parser.CurrentLineNumber,
                              self.parser.CurrentColumnNumber)

    def _start(self, name: str, attrs: dict[str, str]):
        top = self.stack[-1] if self.stack else None
        if top and top["kind"] == "xmlliteral":
            top["depth"] += 1
            return
        base, lang = self._scope()
        xml_base = attrs.get(XML_NS + " base")
        if xml_base is not None:
            base = resolve_iri(xml_base, base)
        lang = attrs.get(XML_NS + " lang", lang)

        if top is None:
            if name == RDF_NS + " RDF":
                self.stack.append({"kind": "root", "base": base, "lang": lang})
            else:
                self._start_node(name, attrs, base, lang)
        elif top["kind"] in ("root", "collection"):
            self._start_node(name, attrs, base, lang)
        elif top["kind"] == "node":
            self._start_property(name, attrs, base, lang, top["subject"])
        elif top["kind"] == "prop":
            subject = self._start_node(name, attrs, base, lang)
            if not top["object_seen"]:
                self.emit(top["subject"], top["predicate"], subject)
                top["object_seen"] = True
        else:
            raise self._error(f"unexpected element {name!r}")

    def _start_node(self, name: str, attrs: dict[str, str], base: str,
                    lang: str) -> str:
        about = _attr(attrs, "about")
        node_id = _attr(attrs, "nodeID")
        rdf_id = _attr(attrs, "ID")
        if about is not None:
            subject = resolve_iri(about, base)
        elif rdf_id is not None:
            subject = resolve_iri("#" + rdf_id, base)
        elif node_id is not None:
            subject = "_:" + node_id
        else:
            subject = self.fresh_bnode()
        uri = _xml_name_uri(name)
        if uri != RDF_NS + "Description":
            self.emit(subject, RDF_TYPE, uri)
        for attr_name, value in attrs.items():
            attr_uri = _xml_name_uri(attr_name)
            if attr_uri == RDF_TYPE:
                self.emit(subject, RDF_TYPE, resolve_iri(value, base))
            elif self._is_property_attr(attr_name):
                self.emit(subject, attr_uri, Literal(value, lang=lang))
        self.stack.append({"kind": "node", "subject": subject, "base": base,
                           "lang": lang})
        return subject

    def _is_property_attr(self, attr_name: str) -> bool:
        ns, sep, local = attr_name.rpartition(" ")
        if not sep:
            return local not in _RESERVED_RDF_ATTRS and local != "lang"
        return ns not in (RDF_NS, XML_NS) or (
            ns == RDF_NS and local not in _RESERVED_RDF_ATTRS)

    def _start_property(self, name: str, attrs: dict[str, str], base: str,
                        lang: str, subject: str):
        predicate = _xml_name_uri(name)
        parse_type = _attr(attrs, "parseType")
        frame = {"kind": "prop", "subject": subject, "predicate": predicate,
                 "base": base, "lang": lang, "text": [], "object_seen": False,
                 "datatype": _attr(attrs, "datatype") or ""}
        if parse_type == "Resource":
            inner = self.fresh_bnode()
            self.emit(subject, predicate, inner)
            self.stack.append({"kind": "node", "subject": inner, "base": base,
                               "lang": lang})
            return
        if parse_type == "Collection":
            self.emit(subject, predicate, self.fresh_bnode())
            self.stack.append({"kind": "collection", "base": base,
                               "lang": lang})
            return
        if parse_type == "Literal":
            self.stack.append({"kind": "xmlliteral", "depth": 1,
                               "subject": subject, "predicate": predicate,
                               "text": [], "base": base, "lang": lang})
            return
        resource = _attr(attrs, "resource")
        node_id = _attr(attrs, "nodeID")
        if resource is not None:
            self.emit(subject, predicate, resolve_iri(resource, base))
            frame["object_seen"] = True
        elif node_id is not None:
            self.emit(subject, predicate, "_:" + node_id)
            frame["object_seen"] = True
        else:
            prop_attrs = [(a, v) for a, v in attrs.items()
                          if self._is_property_attr(a)]
            if prop_attrs:
                inner = self.fresh_bnode()
                self.emit(subject, predicate, inner)
                for attr_name, value in prop_attrs:
                    self.emit(inner, _xml_name_uri(attr_name),
                              Literal(value, lang=lang))
                frame["object_seen"] = True
        self.stack.append(frame)

    def _end(self, name: str):
        top = self.stack.pop()
        if top["kind"] == "xmlliteral":
            if top["depth"] > 1:
                top["depth"] -= 1
                self.stack.append(top)
                return
            self.emit(top["subject"], top["predicate"],
                      Literal("".join(top["text"]),
                              datatype=RDF_NS + "XMLLiteral"))
        elif top["kind"] == "prop" and not top["object_seen"]:
            self.emit(top["subject"], top["predicate"],
                      Literal("".join(top["text"]), lang=top["lang"],
                              datatype=top["datatype"]))

    def _chars(self, data: str):
        if not self.stack:
            return
        top = self.stack[-1]
        if top["kind"] in ("prop", "xmlliteral"):
            top["text"].append(data)


def _parse_rdfxml(data: bytes, base: str) -> list[Triple]:
    reader = _RdfXmlReader(base)
    try:
        reader.parser.Parse(data, True)
    except xml.parsers.expat.ExpatError as exc:
        raise RdfSyntaxError(
            xml.parsers.expat.errors.messages[exc.code],
            reader.parser.ErrorLineNumber,
            reader.parser.ErrorColumnNumber) from None
    return reader.triples
