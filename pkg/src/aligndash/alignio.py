"""Reading and writing alignments in the Alignment API RDF/XML format.

This is the interchange format used by ontology matchers and by reference
alignments: an ``rdf:RDF`` document holding one ``Alignment`` element whose
``map``/``Cell`` children carry (entity1, entity2, relation, measure)
quadruples.  Parsing is a single expat pass, so files with hundreds of
thousands of cells stream through without building a DOM.
"""

from __future__ import annotations

import math
import xml.parsers.expat
from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Iterable, Iterator, Mapping, Union

ALIGN_NS = "http://knowledgeweb.semanticweb.org/heterogeneity/alignment"
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

_RDF_RESOURCE = RDF_NS + " resource"
_RDF_ABOUT = RDF_NS + " about"


class AlignmentParseError(ValueError):
    """Base for alignment parsing failures; carries the input position."""

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None, byte_index: int | None = None):
        self.line = line
        self.column = column
        self.byte_index = byte_index
        where = ""
        if line is not None:
            where = f" (line {line}, column {column}, byte {byte_index})"
        super().__init__(message + where)


class XmlSyntaxError(AlignmentParseError):
    """Input is not well-formed UTF-8 XML."""


class MissingEntityError(AlignmentParseError):
    """A Cell lacks a usable entity1/entity2 resource URI."""


class BadMeasureError(AlignmentParseError):
    """A Cell's measure text does not parse as a finite real number."""


class RelationKind(Enum):
    EQUIVALENCE = "="
    SUBSUMES = ">"
    SUBSUMED_BY = "<"
    INCOMPATIBLE = "%"
    OTHER = "other"


_TOKEN_TO_KIND = {
    "=": RelationKind.EQUIVALENCE,
    ">": RelationKind.SUBSUMES,
    "<": RelationKind.SUBSUMED_BY,
    "%": RelationKind.INCOMPATIBLE,
}


@dataclass(frozen=True)
class Relation:
    """A correspondence relation: its kind plus the original token.

    ``raw`` is preserved verbatim so that serializing reproduces exactly what
    was parsed, including tokens outside the four standard ones.
    """

    kind: RelationKind
    raw: str

    def __post_init__(self):
        expected = _TOKEN_TO_KIND.get(self.raw, RelationKind.OTHER)
        if self.kind is not expected:
            raise ValueError(f"relation token {self.raw!r} implies kind "
                             f"{expected.name}, not {self.kind.name}")

    @classmethod
    def from_token(cls, token: str) -> "Relation":
        return cls(_TOKEN_TO_KIND.get(token, RelationKind.OTHER), token)


EQUIVALENCE = Relation.from_token("=")


@dataclass(frozen=True)
class Correspondence:
    """One alignment cell: source and target entity URIs, relation, confidence.

    ``extensions`` keeps unknown Cell child elements (key is the element's
    local name, or ``{namespace}local`` for foreign namespaces).
    """

    source: str
    target: str
    relation: Relation = EQUIVALENCE
    confidence: float = 1.0
    extensions: Mapping[str, str] = field(default_factory=dict)

    @property
    def key(self) -> tuple[str, str, RelationKind]:
        return (self.source, self.target, self.relation.kind)


Key = tuple[str, str, RelationKind]


class Alignment:
    """A set of correspondences keyed by (source, target, relation kind).

    Duplicate keys collapse to the cell with the highest confidence (first
    wins on ties), so cell count always equals the number of distinct keys.
    Parser diagnostics that do not abort parsing (e.g. confidences outside
    [0, 1]) accumulate in ``warnings``; they never affect equality.
    """

    def __init__(self, cells: Iterable[Correspondence] = (),
                 onto1: str = "", onto2: str = "", level: str = "0",
                 type: str = "**"):
        self.cells: dict[Key, Correspondence] = {}
        self.onto1 = onto1
        self.onto2 = onto2
        self.level = level
        self.type = type
        self.warnings: list[str] = []
        for cell in cells:
            self.add(cell)

    def add(self, cell: Correspondence) -> None:
        """Insert a cell, keeping the higher-confidence one on key collision."""
        existing = self.cells.get(cell.key)
        if existing is None or cell.confidence > existing.confidence:
            self.cells[cell.key] = cell

    def get(self, key: Key) -> Correspondence | None:
        return self.cells.get(key)

    def keys(self) -> set[Key]:
        return set(self.cells)

    def __iter__(self) -> Iterator[Correspondence]:
        return iter(self.cells.values())

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, key: Key) -> bool:
        return key in self.cells

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alignment):
            return NotImplemented
        return (self.cells == other.cells and self.onto1 == other.onto1
                and self.onto2 == other.onto2 and self.level == other.level
                and self.type == other.type)

    def __repr__(self) -> str:
        return (f"Alignment({len(self.cells)} cells, onto1={self.onto1!r}, "
                f"onto2={self.onto2!r})")


_METADATA_FIELDS = ("xml", "level", "type", "onto1", "onto2")
_CELL_FIELDS = ("entity1", "entity2", "relation", "measure")


def _split_name(name: str) -> tuple[str, str]:
    ns, sep, local = name.rpartition(" ")
    return (ns, local) if sep else ("", name)


def _find_resource(attrs: dict[str, str]) -> str | None:
    value = attrs.get(_RDF_RESOURCE)
    if value is not None:
        return value
    for key, val in attrs.items():
        if _split_name(key)[1] == "resource":
            return val
    return None


class _AlignmentReader:
    """Expat handler state machine for one alignment document."""

    def __init__(self):
        self.alignment = Alignment(level="", type="")
        self.parser = xml.parsers.expat.ParserCreate(encoding="utf-8",
                                                     namespace_separator=" ")
        self.parser.StartElementHandler = self._start
        self.parser.EndElementHandler = self._end
        self.parser.CharacterDataHandler = self._chars
        self._buffer: list[str] = []
        self._capturing = False
        self._cell: dict | None = None
        self._cell_pos: tuple[int, int, int] | None = None
        self._measure_pos: tuple[int, int, int] | None = None
        self._ext_key: str | None = None
        self._ext_depth = 0
        self._meta_field: str | None = None

    def _pos(self) -> tuple[int, int, int]:
        p = self.parser
        return (p.CurrentLineNumber, p.CurrentColumnNumber, p.CurrentByteIndex)

    def _begin_capture(self):
        self._buffer = []
        self._capturing = True

    def _take_capture(self) -> str:
        self._capturing = False
        return "".join(self._buffer)

    def _start(self, name: str, attrs: dict[str, str]):
        ns, local = _split_name(name)
        if self._ext_key is not None:
            # nested markup inside an extension element: keep only its text
            self._ext_depth += 1
            return
        in_align_ns = ns in (ALIGN_NS, "")
        if self._cell is not None:
            if in_align_ns and local in ("entity1", "entity2"):
                resource = _find_resource(attrs)
                self._cell[local] = (resource, self._pos())
            elif in_align_ns and local in ("relation", "measure"):
                self._begin_capture()
                if local == "measure":
                    self._measure_pos = self._pos()
            else:
                key = local if in_align_ns else f"{{{ns}}}{local}"
                self._ext_key = key
                self._ext_depth = 1
                self._begin_capture()
        elif in_align_ns and local == "Cell":
            self._cell = {"extensions": {}}
            self._cell_pos = self._pos()
        elif in_align_ns and local in _METADATA_FIELDS:
            self._meta_field = local
            resource = _find_resource(attrs)
            if resource and local in ("onto1", "onto2"):
                setattr(self.alignment, local, resource)
            self._begin_capture()
        elif self._meta_field in ("onto1", "onto2"):
            # formal variant: <onto1><Ontology rdf:about="..."/></onto1>
            about = attrs.get(_RDF_ABOUT)
            if about:
                setattr(self.alignment, self._meta_field, about)

    def _end(self, name: str):
        if self._ext_key is not None:
            self._ext_depth -= 1
            if self._ext_depth == 0:
                self._cell["extensions"][self._ext_key] = self._take_capture()
                self._ext_key = None
            return
        ns, local = _split_name(name)
        if ns not in (ALIGN_NS, ""):
            return
        if self._cell is not None and local in ("relation", "measure"):
            self._cell[local] = (self._take_capture().strip(),
                                 self._measure_pos if local == "measure" else None)
        elif local == "Cell" and self._cell is not None:
            self._finish_cell()
        elif local == self._meta_field:
            text = self._take_capture().strip()
            if local != "xml" and text and not getattr(self.alignment, local, ""):
                setattr(self.alignment, local, text)
            self._meta_field = None

    def _chars(self, data: str):
        if self._capturing:
            self._buffer.append(data)

    def _finish_cell(self):
        cell = self._cell
        self._cell = None
        for which in ("entity1", "entity2"):
            uri, pos = cell.get(which, (None, self._cell_pos))
            if not uri:
                raise MissingEntityError(f"Cell has no {which} resource", *pos)
            if "://" not in uri and not uri.startswith("urn:"):
                raise MissingEntityError(
                    f"{which} is not an absolute URI: {uri!r}", *pos)
        source = cell["entity1"][0]
        target = cell["entity2"][0]
        measure_text, measure_pos = cell.get("measure", ("", None))
        if measure_text:
            try:
                confidence = float(measure_text)
            except ValueError:
                raise BadMeasureError(
                    f"measure {measure_text!r} is not a number",
                    *(measure_pos or self._cell_pos)) from None
            if not math.isfinite(confidence):
                raise BadMeasureError(
                    f"measure {measure_text!r} is not finite",
                    *(measure_pos or self._cell_pos))
        else:
            confidence = 1.0
        if not 0.0 <= confidence <= 1.0:
            self.alignment.warnings.append(
                f"confidence {confidence!r} outside [0, 1] for "
                f"<{source}> -> <{target}>")
        relation_raw = cell.get("relation", ("", None))[0] or "="
        self.alignment.add(Correspondence(
            source=source, target=target,
            relation=Relation.from_token(relation_raw),
            confidence=confidence, extensions=cell["extensions"]))


def parse_alignment(data: Union[bytes, IO[bytes]]) -> Alignment:
    """Parse an Alignment API RDF/XML document from bytes or a binary stream.

    Raises XmlSyntaxError for anything that is not well-formed UTF-8 XML
    (other encodings are rejected by design), MissingEntityError for cells
    without entity URIs, and BadMeasureError for unparseable confidences.
    """
    if hasattr(data, "read"):
        data = data.read()
    if isinstance(data, str):
        data = data.encode("utf-8")
    reader = _AlignmentReader()
    try:
        reader.parser.Parse(data, True)
    except xml.parsers.expat.ExpatError as exc:
        raise XmlSyntaxError(
            xml.parsers.expat.errors.messages[exc.code],
            reader.parser.ErrorLineNumber,
            reader.parser.ErrorColumnNumber,
            reader.parser.ErrorByteIndex) from None
    return reader.alignment


def _escape_text(text: str) -> str:
    # \r must go out as a char ref or XML end-of-line handling eats it
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;").replace("\r", "&#13;"))


def _escape_attr(text: str) -> str:
    # tabs/newlines in attribute values are normalized to spaces unless escaped
    return (_escape_text(text).replace('"', "&quot;")
            .replace("\t", "&#9;").replace("\n", "&#10;"))


def _extension_namespaces(alignment: Alignment) -> dict[str, str]:
    """Foreign extension namespaces in first-seen order, mapped to prefixes."""
    namespaces: dict[str, str] = {}
    for cell in alignment:
        for key in cell.extensions:
            if key.startswith("{"):
                ns = key[1:key.index("}")]
                if ns not in namespaces:
                    namespaces[ns] = f"ext{len(namespaces) + 1}"
    return namespaces


def serialize_alignment(alignment: Alignment) -> bytes:
    """Serialize to the Alignment API vocabulary; inverse of parse_alignment."""
    namespaces = _extension_namespaces(alignment)
    out = ['<?xml version="1.0" encoding="utf-8"?>']
    decls = [f'xmlns="{ALIGN_NS}"', f'xmlns:rdf="{RDF_NS}"',
             f'xmlns:xsd="{XSD_NS}"']
    decls += [f'xmlns:{prefix}="{_escape_attr(ns)}"'
              for ns, prefix in namespaces.items()]
    out.append(f'<rdf:RDF {" ".join(decls)}>')
    out.append('<Alignment>')
    out.append('<xml>yes</xml>')
    for name in ("level", "type", "onto1", "onto2"):
        value = getattr(alignment, name)
        if value:
            out.append(f'<{name}>{_escape_text(value)}</{name}>')
    for cell in alignment:
        out.append('<map><Cell>')
        out.append(f'<entity1 rdf:resource="{_escape_attr(cell.source)}"/>')
        out.append(f'<entity2 rdf:resource="{_escape_attr(cell.target)}"/>')
        out.append(f'<relation>{_escape_text(cell.relation.raw)}</relation>')
        out.append(f'<measure rdf:datatype="{XSD_NS}float">'
                   f'{cell.confidence!r}</measure>')
        for key, value in cell.extensions.items():
            if key.startswith("{"):
                ns = key[1:key.index("}")]
                tag = f'{namespaces[ns]}:{key[key.index("}") + 1:]}'
            else:
                tag = key
            out.append(f'<{tag}>{_escape_text(value)}</{tag}>')
        out.append('</Cell></map>')
    out.append('</Alignment>')
    out.append('</rdf:RDF>')
    return "\n".join(out).encode("utf-8")
