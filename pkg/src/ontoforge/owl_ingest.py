"""Parser for the supported OWL subset.

The accepted grammar is deliberately small and frozen (see the repository
README for the full element grammar): an ``Ontology`` (or ``RDF``) root,
``Class`` declarations carrying ``ID``/``about``, with ``subClassOf``,
``equivalentClass`` and ``unionOf parseType="Collection"`` children, plus
``Individual``/``Thing`` elements that assign named individuals to classes.

Namespace prefixes are accepted and stripped; matching is on local names.
``resource``/``about`` values may be IRIs; only the fragment after the last
``#`` or ``/`` is used as the identifier.

Anything outside the subset is skipped with a warning diagnostic; the parser
never raises on well-formed XML.
"""

from __future__ import annotations

import xml.parsers.expat
from dataclasses import dataclass, field

from .diagnostics import (
    DANGLING_REFERENCE,
    DUPLICATE_CLASS,
    DUPLICATE_INDIVIDUAL,
    DUPLICATE_UNION_MEMBER,
    MALFORMED_XML,
    MISSING_IDENTIFIER,
    MULTIPLE_UNION,
    UNEXPECTED_ROOT,
    UNION_ARITY,
    UNSUPPORTED_CONSTRUCT,
    UNTYPED_INDIVIDUAL,
    Diagnostic,
    Location,
    error,
    has_errors,
    warning,
)


@dataclass
class ClassDecl:
    """One class declaration, in document order."""

    id: str
    super_refs: list[str] = field(default_factory=list)
    equivalent_refs: list[str] = field(default_factory=list)
    union_members: list[str] | None = None
    individuals: list[str] = field(default_factory=list)
    location: Location = field(default_factory=Location)


@dataclass
class OwlDocument:
    classes: list[ClassDecl] = field(default_factory=list)
    warnings: list[Diagnostic] = field(default_factory=list)

    def class_ids(self) -> list[str]:
        return [c.id for c in self.classes]


@dataclass
class _Element:
    tag: str
    attrs: dict[str, str]
    children: list["_Element"]
    location: Location


def _local(name: str) -> str:
    # Prefix-based stripping; the subset matches on local names only.
    return name.rsplit(":", 1)[-1]


def _fragment(value: str) -> str:
    for sep in ("#", "/"):
        if sep in value:
            value = value.rsplit(sep, 1)[-1]
    return value


def _parse_tree(data: bytes | str) -> _Element:
    parser = xml.parsers.expat.ParserCreate()
    parser.SetParamEntityParsing(xml.parsers.expat.XML_PARAM_ENTITY_PARSING_NEVER)
    root: list[_Element] = []
    stack: list[_Element] = []

    def start(name: str, attrs: dict[str, str]) -> None:
        local_attrs: dict[str, str] = {}
        for key, value in attrs.items():
            key = _local(key)
            if key.startswith("xmlns") or key == "xmlns":
                continue
            # First occurrence wins when prefixed and bare attrs collide.
            local_attrs.setdefault(key, value)
        element = _Element(
            tag=_local(name),
            attrs=local_attrs,
            children=[],
            location=Location(parser.CurrentLineNumber, parser.CurrentColumnNumber + 1),
        )
        if stack:
            stack[-1].children.append(element)
        else:
            root.append(element)
        stack.append(element)

    def end(_name: str) -> None:
        stack.pop()

    parser.StartElementHandler = start
    parser.EndElementHandler = end
    if isinstance(data, str):
        data = data.encode("utf-8")
    parser.Parse(data, True)
    if not root:
        raise xml.parsers.expat.ExpatError("no element found")
    return root[0]


class _DocBuilder:
    def __init__(self) -> None:
        self.classes: list[ClassDecl] = []
        self.by_id: dict[str, ClassDecl] = {}
        self.diagnostics: list[Diagnostic] = []
        # (individual, class name, location) assignments resolved at the end,
        # since forward references are legal.
        self.typed_individuals: list[tuple[str, str, Location]] = []

    def warn(self, code: str, message: str, loc: Location) -> None:
        self.diagnostics.append(warning(code, message, loc))

    def fail(self, code: str, message: str, loc: Location) -> None:
        self.diagnostics.append(error(code, message, loc))

    def walk_container(self, element: _Element) -> None:
        for child in element.children:
            if child.tag == "Class":
                self.handle_class(child)
            elif child.tag in ("Individual", "Thing"):
                self.handle_top_individual(child)
            elif child.tag == "Ontology":
                # Ontology headers / wrappers may carry class declarations.
                self.walk_container(child)
            else:
                self.warn(
                    UNSUPPORTED_CONSTRUCT,
                    f"element '{child.tag}' is outside the supported subset and was skipped",
                    child.location,
                )

    def identify(self, element: _Element) -> str | None:
        raw = element.attrs.get("ID") or element.attrs.get("about")
        if raw is None:
            return None
        name = _fragment(raw)
        return name or None

    def handle_class(self, element: _Element) -> None:
        name = self.identify(element)
        if name is None:
            self.warn(
                MISSING_IDENTIFIER,
                "Class declaration without ID or about attribute was skipped",
                element.location,
            )
            return
        if name in self.by_id:
            self.fail(DUPLICATE_CLASS, f"class '{name}' is declared more than once", element.location)
            return
        decl = ClassDecl(id=name, location=element.location)
        self.classes.append(decl)
        self.by_id[name] = decl
        for child in element.children:
            if child.tag == "subClassOf":
                self.handle_reference(child, decl.super_refs)
            elif child.tag == "equivalentClass":
                self.handle_reference(child, decl.equivalent_refs)
            elif child.tag == "unionOf":
                self.handle_union(child, decl)
            elif child.tag in ("Individual", "Thing"):
                self.handle_nested_individual(child, decl)
            else:
                self.warn(
                    UNSUPPORTED_CONSTRUCT,
                    f"element '{child.tag}' inside class '{name}' is not supported and was skipped",
                    child.location,
                )

    def handle_reference(self, element: _Element, into: list[str]) -> None:
        raw = element.attrs.get("resource")
        if raw is None:
            self.warn(
                UNSUPPORTED_CONSTRUCT,
                f"'{element.tag}' without a resource attribute is not supported and was skipped",
                element.location,
            )
            return
        for child in element.children:
            self.warn(
                UNSUPPORTED_CONSTRUCT,
                f"element '{child.tag}' nested in '{element.tag}' is not supported and was skipped",
                child.location,
            )
        into.append(_fragment(raw))

    def handle_union(self, element: _Element, decl: ClassDecl) -> None:
        if decl.union_members is not None:
            self.fail(
                MULTIPLE_UNION,
                f"class '{decl.id}' carries more than one unionOf block",
                element.location,
            )
            return
        if element.attrs.get("parseType") != "Collection":
            self.warn(
                UNSUPPORTED_CONSTRUCT,
                "unionOf without parseType=\"Collection\" is not supported and was skipped",
                element.location,
            )
            return
        members: list[str] = []
        for child in element.children:
            if child.tag != "Class":
                self.warn(
                    UNSUPPORTED_CONSTRUCT,
                    f"element '{child.tag}' inside unionOf is not supported and was skipped",
                    child.location,
                )
                continue
            member = self.identify(child)
            if member is None:
                self.warn(
                    MISSING_IDENTIFIER,
                    "unionOf member without ID or about attribute was skipped",
                    child.location,
                )
                continue
            for grandchild in child.children:
                self.warn(
                    UNSUPPORTED_CONSTRUCT,
                    f"element '{grandchild.tag}' nested in a unionOf member is not supported",
                    grandchild.location,
                )
            if member in members:
                self.warn(
                    DUPLICATE_UNION_MEMBER,
                    f"unionOf of class '{decl.id}' lists member '{member}' more than once",
                    child.location,
                )
                continue
            members.append(member)
        if len(members) < 2:
            self.warn(
                UNION_ARITY,
                f"unionOf of class '{decl.id}' has fewer than two distinct members and was dropped",
                element.location,
            )
            return
        decl.union_members = members

    def handle_nested_individual(self, element: _Element, decl: ClassDecl) -> None:
        name = self.identify(element)
        if name is None:
            self.warn(
                MISSING_IDENTIFIER,
                f"individual without ID or about inside class '{decl.id}' was skipped",
                element.location,
            )
            return
        self.assign_individual(decl, name, element.location)
        typed = element.attrs.get("type")
        if typed is not None:
            self.typed_individuals.append((name, _fragment(typed), element.location))

    def handle_top_individual(self, element: _Element) -> None:
        name = self.identify(element)
        if name is None:
            self.warn(
                MISSING_IDENTIFIER,
                "individual without ID or about attribute was skipped",
                element.location,
            )
            return
        typed = element.attrs.get("type")
        if typed is None:
            self.warn(
                UNTYPED_INDIVIDUAL,
                f"top-level individual '{name}' has no type attribute and was skipped",
                element.location,
            )
            return
        self.typed_individuals.append((name, _fragment(typed), element.location))

    def assign_individual(self, decl: ClassDecl, name: str, loc: Location) -> None:
        if name in decl.individuals:
            self.warn(
                DUPLICATE_INDIVIDUAL,
                f"individual '{name}' is assigned to class '{decl.id}' more than once",
                loc,
            )
            return
        decl.individuals.append(name)

    def resolve(self) -> None:
        for name, class_name, loc in self.typed_individuals:
            decl = self.by_id.get(class_name)
            if decl is None:
                self.fail(
                    DANGLING_REFERENCE,
                    f"individual '{name}' names undeclared class '{class_name}'",
                    loc,
                )
                continue
            self.assign_individual(decl, name, loc)
        for decl in self.classes:
            refs = list(decl.super_refs) + list(decl.equivalent_refs) + list(decl.union_members or [])
            for ref in refs:
                if ref not in self.by_id:
                    self.fail(
                        DANGLING_REFERENCE,
                        f"class '{decl.id}' references undeclared class '{ref}'",
                        decl.location,
                    )


def parse_owl(source) -> OwlDocument | list[Diagnostic]:
    """Parse an OWL document from a string, bytes, or readable stream.

    Returns an :class:`OwlDocument` whose ``warnings`` list holds every
    non-fatal diagnostic, or a list of diagnostics containing at least one
    error when the document cannot be accepted.
    """
    if hasattr(source, "read"):
        source = source.read()
    if not isinstance(source, (str, bytes)):
        raise TypeError("parse_owl expects a string, bytes, or a readable stream")
    try:
        root = _parse_tree(source)
    except xml.parsers.expat.ExpatError as exc:
        loc = Location(getattr(exc, "lineno", 0) or 0, getattr(exc, "offset", -1) + 1)
        return [error(MALFORMED_XML, f"XML parse error: {exc}", loc)]

    builder = _DocBuilder()
    if root.tag not in ("Ontology", "RDF"):
        return [
            error(
                UNEXPECTED_ROOT,
                f"root element '{root.tag}' is not an Ontology or RDF element",
                root.location,
            )
        ]
    builder.walk_container(root)
    builder.resolve()
    if has_errors(builder.diagnostics):
        return builder.diagnostics
    return OwlDocument(classes=builder.classes, warnings=builder.diagnostics)
