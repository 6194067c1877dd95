"""Event-B context AST and deterministic text rendering.

Contexts are immutable trees; rendering is a pure function of the tree and
the chosen style, so identical ASTs always produce byte-identical text.
Two styles are supported: ``ascii`` (keyboard notation) and ``unicode``
(glyph notation). The styles differ only in the token table.

Binder domains on quantifiers and comprehensions are evaluation annotations
for the finite checker; they are never printed. Rendered text is injective
on ASTs that differ anywhere outside those annotations.

Token table (ascii / unicode): membership ``:`` / ``∈``, inclusion ``<:`` /
``⊆``, union ``\\/`` / ``∪``, intersection ``/\\`` / ``∩``, maplet ``|->`` /
``↦``, relation space ``<->`` / ``↔``, cartesian product ``**`` / ``×``,
power set ``POW`` / ``ℙ``, universal ``!`` / ``∀``, existential ``#`` / ``∃``,
binder dot ``.`` / ``·``, implication ``=>`` / ``⇒``, equivalence ``<=>`` /
``⇔``, conjunction ``&`` / ``∧``, disjunction ``or`` / ``∨``, domain
restriction ``<|`` / ``◁``, empty set ``{}`` / ``∅``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .diagnostics import (
    DUPLICATE_LABEL,
    BAD_LABEL,
    SET_CONSTANT_OVERLAP,
    UNDECLARED_IDENTIFIER,
    Diagnostic,
    error,
)


class Node:
    """Base class for expressions and predicates."""

    __slots__ = ()


# --- Expressions -----------------------------------------------------------


@dataclass(frozen=True)
class Identifier(Node):
    name: str


@dataclass(frozen=True)
class SetLit(Node):
    elements: tuple[Node, ...] = ()


@dataclass(frozen=True)
class Maplet(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Union(Node):
    operands: tuple[Node, ...]


@dataclass(frozen=True)
class Inter(Node):
    operands: tuple[Node, ...]


@dataclass(frozen=True)
class RelSpace(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Cart(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Pow(Node):
    operand: Node


@dataclass(frozen=True)
class Ran(Node):
    operand: Node


@dataclass(frozen=True)
class DomRestrict(Node):
    restrictor: Node
    relation: Node


@dataclass(frozen=True)
class GenUnion(Node):
    """Generalized union over a set of sets."""

    operand: Node


@dataclass(frozen=True)
class Binder(Node):
    """Bound variable with its (unprinted) evaluation domain."""

    name: str
    domain: Node


@dataclass(frozen=True)
class Comprehension(Node):
    binders: tuple[Binder, ...]
    predicate: Node
    expr: Node

    def is_identity(self) -> bool:
        return (
            len(self.binders) == 1
            and isinstance(self.expr, Identifier)
            and self.expr.name == self.binders[0].name
        )


# --- Predicates ------------------------------------------------------------


@dataclass(frozen=True)
class Member(Node):
    element: Node
    container: Node


@dataclass(frozen=True)
class Subset(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Equal(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Partition(Node):
    whole: Node
    parts: tuple[Node, ...] = ()


@dataclass(frozen=True)
class And(Node):
    operands: tuple[Node, ...]


@dataclass(frozen=True)
class Or(Node):
    operands: tuple[Node, ...]


@dataclass(frozen=True)
class Implies(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Iff(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Forall(Node):
    binders: tuple[Binder, ...]
    body: Node


@dataclass(frozen=True)
class Exists(Node):
    binders: tuple[Binder, ...]
    body: Node


# --- Context ---------------------------------------------------------------


@dataclass(frozen=True)
class EventBContext:
    name: str
    extends: str | None = None
    sets: tuple[str, ...] = ()
    constants: tuple[str, ...] = ()
    axioms: tuple[tuple[str, Node], ...] = ()
    theorems: tuple[tuple[str, Node], ...] = ()


def make_context(
    name: str,
    *,
    extends: str | None = None,
    sets: tuple[str, ...] = (),
    constants: tuple[str, ...] = (),
    axioms: list[Node] | tuple[Node, ...] = (),
    theorems: list[Node] | tuple[Node, ...] = (),
) -> EventBContext:
    """Build a context, assigning consecutive ``axm<N>`` / ``thm<N>`` labels."""
    return EventBContext(
        name=name,
        extends=extends,
        sets=tuple(sets),
        constants=tuple(constants),
        axioms=tuple((f"axm{i}", pred) for i, pred in enumerate(axioms, start=1)),
        theorems=tuple((f"thm{i}", pred) for i, pred in enumerate(theorems, start=1)),
    )


# --- Rendering -------------------------------------------------------------

TOKEN_TABLES: dict[str, dict[str, str]] = {
    "ascii": {
        "in": ":",
        "subset": "<:",
        "union": "\\/",
        "inter": "/\\",
        "maplet": "|->",
        "rel": "<->",
        "cart": "**",
        "pow": "POW",
        "forall": "!",
        "exists": "#",
        "qdot": ".",
        "implies": "=>",
        "iff": "<=>",
        "and": "&",
        "or": "or",
        "domres": "<|",
        "empty": "{}",
    },
    "unicode": {
        "in": "∈",
        "subset": "⊆",
        "union": "∪",
        "inter": "∩",
        "maplet": "↦",
        "rel": "↔",
        "cart": "×",
        "pow": "ℙ",
        "forall": "∀",
        "exists": "∃",
        "qdot": "·",
        "implies": "⇒",
        "iff": "⇔",
        "and": "∧",
        "or": "∨",
        "domres": "◁",
        "empty": "∅",
    },
}

# Precedence levels; a child is parenthesized when its level is below the
# minimum its position requires. Union/intersection render self-parenthesized
# and therefore count as atoms.
_PREC_QUANT = 0
_PREC_IFF = 1
_PREC_IMPLIES = 2
_PREC_OR = 3
_PREC_AND = 4
_PREC_REL_ATOM = 5  # Member / Subset / Equal / Partition
_PREC_RELSPACE = 3
_PREC_CART = 4
_PREC_DOMRES = 5
_PREC_MAPLET = 6
_PREC_ATOM = 9


class RenderError(ValueError):
    pass


def _prec(node: Node) -> int:
    match node:
        case Forall() | Exists():
            return _PREC_QUANT
        case Iff():
            return _PREC_IFF
        case Implies():
            return _PREC_IMPLIES
        case Or():
            return _PREC_OR
        case And():
            return _PREC_AND
        case Member() | Subset() | Equal() | Partition():
            return _PREC_REL_ATOM
        case RelSpace():
            return _PREC_RELSPACE
        case Cart():
            return _PREC_CART
        case DomRestrict():
            return _PREC_DOMRES
        case Maplet():
            return _PREC_MAPLET
        case _:
            return _PREC_ATOM


def render(node: Node, style: str = "ascii") -> str:
    """Render a predicate or expression to text in the given style."""
    if style not in TOKEN_TABLES:
        raise RenderError(f"unknown style '{style}'")
    return _render(node, TOKEN_TABLES[style], 0)


def _render(node: Node, tok: dict[str, str], min_prec: int) -> str:
    text = _render_bare(node, tok)
    if _prec(node) < min_prec:
        return f"({text})"
    return text


def _binder_head(binders: tuple[Binder, ...]) -> str:
    return ", ".join(b.name for b in binders)


def _render_bare(node: Node, tok: dict[str, str]) -> str:
    match node:
        case Identifier(name):
            return name
        case SetLit(elements):
            if not elements:
                return tok["empty"]
            return "{" + ", ".join(_render(e, tok, 0) for e in elements) + "}"
        case Maplet(left, right):
            return f"{_render(left, tok, _PREC_MAPLET)} {tok['maplet']} {_render(right, tok, _PREC_MAPLET + 1)}"
        case Union(operands):
            return "(" + f" {tok['union']} ".join(_render(o, tok, _PREC_MAPLET + 1) for o in operands) + ")"
        case Inter(operands):
            return "(" + f" {tok['inter']} ".join(_render(o, tok, _PREC_MAPLET + 1) for o in operands) + ")"
        case RelSpace(left, right):
            return f"{_render(left, tok, _PREC_RELSPACE + 1)} {tok['rel']} {_render(right, tok, _PREC_RELSPACE + 1)}"
        case Cart(left, right):
            return f"{_render(left, tok, _PREC_CART + 1)} {tok['cart']} {_render(right, tok, _PREC_CART + 1)}"
        case Pow(operand):
            return f"{tok['pow']}({_render(operand, tok, 0)})"
        case Ran(operand):
            return f"ran({_render(operand, tok, 0)})"
        case DomRestrict(restrictor, relation):
            return f"{_render(restrictor, tok, _PREC_DOMRES + 1)} {tok['domres']} {_render(relation, tok, _PREC_DOMRES + 1)}"
        case GenUnion(operand):
            return f"union({_render(operand, tok, 0)})"
        case Comprehension() as comp:
            if comp.is_identity():
                return "{" + comp.binders[0].name + " | " + _render(comp.predicate, tok, 0) + "}"
            head = _binder_head(comp.binders)
            return (
                "{"
                + head
                + f" {tok['qdot']} "
                + _render(comp.predicate, tok, 0)
                + " | "
                + _render(comp.expr, tok, 0)
                + "}"
            )
        case Member(element, container):
            return f"{_render(element, tok, _PREC_RELSPACE)} {tok['in']} {_render(container, tok, _PREC_RELSPACE)}"
        case Subset(left, right):
            return f"{_render(left, tok, _PREC_RELSPACE)} {tok['subset']} {_render(right, tok, _PREC_RELSPACE)}"
        case Equal(left, right):
            return f"{_render(left, tok, _PREC_RELSPACE)} = {_render(right, tok, _PREC_RELSPACE)}"
        case Partition(whole, parts):
            args = [_render(whole, tok, 0)] + [_render(p, tok, 0) for p in parts]
            return "partition(" + ", ".join(args) + ")"
        case And(operands):
            return f" {tok['and']} ".join(_render(o, tok, _PREC_AND + 1) for o in operands)
        case Or(operands):
            return f" {tok['or']} ".join(_render(o, tok, _PREC_OR + 2) for o in operands)
        case Implies(left, right):
            return f"{_render(left, tok, _PREC_IMPLIES + 1)} {tok['implies']} {_render(right, tok, _PREC_IMPLIES + 1)}"
        case Iff(left, right):
            return f"{_render(left, tok, _PREC_IFF + 2)} {tok['iff']} {_render(right, tok, _PREC_IFF + 2)}"
        case Forall(binders, body):
            return f"{tok['forall']}{_binder_head(binders)}{tok['qdot']}({_render(body, tok, 0)})"
        case Exists(binders, body):
            return f"{tok['exists']}{_binder_head(binders)}{tok['qdot']}({_render(body, tok, 0)})"
        case _:
            raise RenderError(f"cannot render node {node!r}")


def free_identifiers(node: Node, bound: frozenset[str] = frozenset()) -> set[str]:
    """Identifier leaves not bound by an enclosing binder.

    Binder domains resolve in the enclosing scope extended with the binders
    declared before them in the same node.
    """
    match node:
        case Identifier(name):
            return set() if name in bound else {name}
        case SetLit(elements):
            return set().union(*(free_identifiers(e, bound) for e in elements)) if elements else set()
        case Maplet(a, b) | RelSpace(a, b) | Cart(a, b) | DomRestrict(a, b) | Member(a, b) | Subset(a, b) | Equal(a, b) | Implies(a, b) | Iff(a, b):
            return free_identifiers(a, bound) | free_identifiers(b, bound)
        case Pow(operand) | Ran(operand) | GenUnion(operand):
            return free_identifiers(operand, bound)
        case Union(operands) | Inter(operands) | And(operands) | Or(operands):
            return set().union(*(free_identifiers(o, bound) for o in operands)) if operands else set()
        case Partition(whole, parts):
            out = free_identifiers(whole, bound)
            for p in parts:
                out |= free_identifiers(p, bound)
            return out
        case Comprehension(binders, predicate, expr):
            out, inner = _free_in_binders(binders, bound)
            return out | free_identifiers(predicate, inner) | free_identifiers(expr, inner)
        case Forall(binders, body) | Exists(binders, body):
            out, inner = _free_in_binders(binders, bound)
            return out | free_identifiers(body, inner)
        case _:
            raise RenderError(f"cannot analyze node {node!r}")


def _free_in_binders(
    binders: tuple[Binder, ...], bound: frozenset[str]
) -> tuple[set[str], frozenset[str]]:
    free: set[str] = set()
    scope = bound
    for binder in binders:
        free |= free_identifiers(binder.domain, scope)
        scope = scope | {binder.name}
    return free, scope


# --- Printing and validation ------------------------------------------------


def print_context(ctx: EventBContext, style: str = "ascii") -> str:
    """Render a whole context; clause order is fixed, empty clauses elided.

    Identifier resolution against an extended context is deferred to
    :func:`check_context`; a context without an extends link must be
    self-contained and printing it raises otherwise.
    """
    if style not in TOKEN_TABLES:
        raise RenderError(f"unknown style '{style}'")
    if ctx.extends is None:
        declared = frozenset(ctx.sets) | frozenset(ctx.constants)
        for label, pred in tuple(ctx.axioms) + tuple(ctx.theorems):
            unknown = sorted(free_identifiers(pred) - declared)
            if unknown:
                raise RenderError(f"undeclared identifier '{unknown[0]}' in {label}")
    lines = [f"CONTEXT {ctx.name}"]
    if ctx.extends is not None:
        lines.append(f"EXTENDS {ctx.extends}")
    if ctx.sets:
        lines.append("SETS")
        lines.extend(f"  {name}" for name in ctx.sets)
    if ctx.constants:
        lines.append("CONSTANTS")
        lines.extend(f"  {name}" for name in ctx.constants)
    if ctx.axioms:
        lines.append("AXIOMS")
        lines.extend(f"  {label}: {render(pred, style)}" for label, pred in ctx.axioms)
    if ctx.theorems:
        lines.append("THEOREMS")
        lines.extend(f"  {label}: {render(pred, style)}" for label, pred in ctx.theorems)
    lines.append("END")
    return "\n".join(lines) + "\n"


_LABEL_RE = re.compile(r"^(axm|thm)([1-9][0-9]*)$")


def check_context(ctx: EventBContext, parent: EventBContext | None = None) -> list[Diagnostic]:
    """Validate labels, declaration uniqueness, and identifier resolution."""
    diagnostics: list[Diagnostic] = []

    seen_labels: set[str] = set()
    for kind, clauses in (("axm", ctx.axioms), ("thm", ctx.theorems)):
        for position, (label, _pred) in enumerate(clauses, start=1):
            if label in seen_labels:
                diagnostics.append(error(DUPLICATE_LABEL, f"label '{label}' is used more than once"))
                continue
            seen_labels.add(label)
            matched = _LABEL_RE.match(label)
            if not matched or matched.group(1) != kind or int(matched.group(2)) != position:
                diagnostics.append(
                    error(BAD_LABEL, f"label '{label}' must be {kind}{position} at position {position}")
                )

    declared: set[str] = set()
    for name in tuple(ctx.sets) + tuple(ctx.constants):
        if name in declared:
            diagnostics.append(
                error(SET_CONSTANT_OVERLAP, f"identifier '{name}' is declared more than once")
            )
        declared.add(name)

    if parent is not None:
        if ctx.extends != parent.name:
            diagnostics.append(
                error(
                    UNDECLARED_IDENTIFIER,
                    f"context extends '{ctx.extends}' but was checked against '{parent.name}'",
                )
            )
        declared |= set(parent.sets) | set(parent.constants)

    for label, pred in tuple(ctx.axioms) + tuple(ctx.theorems):
        for name in sorted(free_identifiers(pred) - declared):
            diagnostics.append(
                error(UNDECLARED_IDENTIFIER, f"identifier '{name}' in {label} is not declared")
            )
    return diagnostics
