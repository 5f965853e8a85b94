"""Ontology indexing: element types and labels for alignment entities.

Loads just enough of an ontology to classify any URI as class, property,
or instance and to expose its human-readable names (local name plus
``rdfs:label`` values).  Declared types only, no reasoning, so indexing
stays linear in the number of triples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Union

from .rdf import (
    OWL_NS,
    RDF_NS,
    RDFS_LABEL,
    RDF_TYPE,
    RDFS_NS,
    Literal,
    RdfSyntax,
    RdfSyntaxError,
    UnsupportedSyntaxError,
    parse_triples,
    syntax_for_path,
)

__all__ = [
    "ElementType", "OntologyIndex", "load_ontology", "load_ontology_file",
    "local_name", "RdfSyntax", "RdfSyntaxError", "UnsupportedSyntaxError",
]


class ElementType(Enum):
    """What kind of ontology element a URI denotes; values are wire names."""

    CLASS = "CLASS"
    OBJECT_PROPERTY = "OBJECT_PROPERTY"
    DATATYPE_PROPERTY = "DATATYPE_PROPERTY"
    ANNOTATION_PROPERTY = "ANNOTATION_PROPERTY"
    GENERIC_PROPERTY = "RDF_PROPERTY"
    INSTANCE = "INSTANCE"
    UNKNOWN = "UNKNOWN"


# conflicting declarations resolve to the first matching entry
_TYPE_PRECEDENCE = (
    ElementType.CLASS,
    ElementType.OBJECT_PROPERTY,
    ElementType.DATATYPE_PROPERTY,
    ElementType.ANNOTATION_PROPERTY,
    ElementType.GENERIC_PROPERTY,
    ElementType.INSTANCE,
)

_DECLARATION_TYPES = {
    OWL_NS + "Class": ElementType.CLASS,
    RDFS_NS + "Class": ElementType.CLASS,
    OWL_NS + "ObjectProperty": ElementType.OBJECT_PROPERTY,
    OWL_NS + "DatatypeProperty": ElementType.DATATYPE_PROPERTY,
    OWL_NS + "AnnotationProperty": ElementType.ANNOTATION_PROPERTY,
    RDF_NS + "Property": ElementType.GENERIC_PROPERTY,
}


def local_name(uri: str) -> str:
    """Fragment after the last '#', else the last path segment, else the URI."""
    _, hash_sep, fragment = uri.rpartition("#")
    if hash_sep and fragment:
        return fragment
    _, slash_sep, tail = uri.rpartition("/")
    if slash_sep and tail:
        return tail
    return uri


@dataclass
class OntologyIndex:
    """Immutable-after-load view of one ontology's entity types and labels.

    ``entities`` lists every indexed URI (typed or labelled) in first-seen
    order; ``label_values`` holds rdfs:label literals only, while
    ``labels_of`` always prepends the URI's local name.
    """

    origin: str = ""
    types: dict[str, ElementType] = field(default_factory=dict)
    label_values: dict[str, list[str]] = field(default_factory=dict)
    entities: list[str] = field(default_factory=list)

    def type_of(self, uri: str) -> ElementType:
        """Total lookup: unindexed URIs are simply UNKNOWN."""
        return self.types.get(uri, ElementType.UNKNOWN)

    def labels_of(self, uri: str) -> list[str]:
        return [local_name(uri)] + self.label_values.get(uri, [])

    def __len__(self) -> int:
        return len(self.entities)


def load_ontology(data: Union[bytes, IO[bytes]], syntax: RdfSyntax,
                  origin: str = "") -> OntologyIndex:
    """Build an OntologyIndex from serialized RDF.

    Typing rules, in precedence order for conflicting declarations: declared
    owl/rdfs Class, then owl:ObjectProperty, owl:DatatypeProperty,
    owl:AnnotationProperty, plain rdf:Property, and finally instances
    (subjects whose rdf:type object is a class declared in this document).
    Blank-node subjects are skipped: correspondences only reference URIs.
    """
    if hasattr(data, "read"):
        data = data.read()
    triples = parse_triples(data, syntax, base=origin)

    declared: dict[str, set[ElementType]] = {}
    typed_by: dict[str, list[str]] = {}
    labels: dict[str, list[str]] = {}
    order: dict[str, None] = {}

    for subject, predicate, obj in triples:
        if not isinstance(subject, str) or subject.startswith("_:"):
            continue
        if predicate == RDF_TYPE and isinstance(obj, str):
            order.setdefault(subject, None)
            declared_type = _DECLARATION_TYPES.get(obj)
            if declared_type is not None:
                declared.setdefault(subject, set()).add(declared_type)
            else:
                typed_by.setdefault(subject, []).append(obj)
        elif predicate == RDFS_LABEL and isinstance(obj, Literal):
            order.setdefault(subject, None)
            labels.setdefault(subject, []).append(obj.value)

    declared_classes = {uri for uri, kinds in declared.items()
                        if ElementType.CLASS in kinds}
    types: dict[str, ElementType] = {}
    for uri in order:
        kinds = declared.get(uri, set())
        if not kinds and any(cls in declared_classes
                             for cls in typed_by.get(uri, ())):
            kinds = {ElementType.INSTANCE}
        for element_type in _TYPE_PRECEDENCE:
            if element_type in kinds:
                types[uri] = element_type
                break

    index = OntologyIndex(origin=origin, types=types, label_values=labels,
                          entities=[uri for uri in order
                                    if uri in types or uri in labels])
    return index


def load_ontology_file(path, syntax: RdfSyntax | None = None) -> OntologyIndex:
    """Load from disk, inferring the syntax from the extension unless given."""
    if syntax is None:
        syntax = syntax_for_path(path)
    with open(path, "rb") as handle:
        return load_ontology(handle, syntax, origin=str(path))
