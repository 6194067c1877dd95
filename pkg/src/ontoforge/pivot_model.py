"""Language-neutral intermediate representation between ingest and codegen.

The pivot holds nothing OWL-specific: class identifiers, subsumption pairs,
equivalence pairs (stored symmetrically, reflexive pairs implied), n-ary
union definitions, and instance assignments. New input languages plug in by
producing a :class:`PivotOntology`; the code generators never look further
back than this module.

Properties and data types are deliberate extension points: the IR reserves
room for them, but no generator consumes them yet.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .diagnostics import (
    CYCLE_IN_SUBSUMPTION,
    DANGLING_REFERENCE,
    IDENTIFIER_COLLISION,
    REDUNDANT_EQUIV_SUBCLASS,
    SELF_REFERENTIAL_UNION,
    UNION_TARGET_DIRECT_INSTANCES,
    Diagnostic,
    error,
    warning,
)
from .owl_ingest import OwlDocument

# Clause keywords of the output language, plus the fixed output vocabulary
# (carrier sets, generated constants, operator names). Identifiers that
# collide with these are suffixed so generated contexts stay well formed.
STRUCTURAL_KEYWORDS = frozenset(
    {"CONTEXT", "EXTENDS", "SETS", "CONSTANTS", "AXIOMS", "THEOREMS", "END"}
)
OUTPUT_VOCABULARY = frozenset(
    {
        "Thing",
        "CLASS",
        "PROPERTY",
        "INSTANCE",
        "VALUES",
        "HAS_INSTANCES",
        "IS_A",
        "EQUIVALENCE",
        "UNION_OF",
        "isA",
        "eQ",
        "unionOf",
        "hasInstances",
        "partition",
        "union",
        "ran",
        "dom",
        "POW",
    }
)
RESERVED_IDENTIFIERS = STRUCTURAL_KEYWORDS | OUTPUT_VOCABULARY

_INVALID_CHARS = re.compile(r"[^A-Za-z0-9_]")
_LEADING_LETTER = re.compile(r"[A-Za-z]")


def sanitize_identifier(raw: str) -> str:
    """Map an arbitrary nonempty string to a valid output identifier.

    Characters outside ``[A-Za-z0-9_]`` become ``_``; a ``c_`` prefix is added
    when the first character is not a letter; a ``_`` suffix is added when the
    result collides with the reserved output vocabulary. Idempotent.
    """
    if not raw:
        raise ValueError("identifier must be nonempty")
    out = _INVALID_CHARS.sub("_", raw)
    if not _LEADING_LETTER.match(out[0]):
        out = "c_" + out
    if out in RESERVED_IDENTIFIERS:
        out = out + "_"
    return out


@dataclass(frozen=True)
class UnionDef:
    target: str
    members: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.members) < 2:
            raise ValueError("union definitions need at least two members")
        if len(set(self.members)) != len(self.members):
            raise ValueError("union members must be pairwise distinct")
        if self.target in self.members:
            raise ValueError("union target cannot be one of its own members")


@dataclass(frozen=True)
class PivotOntology:
    """Normalized ontology: identifiers are sanitized, order is document order.

    ``is_a`` pairs are (child, parent). ``equiv`` stores both orientations of
    every declared equivalence, in declaration order, without reflexive pairs.
    ``instances_of`` maps a class to its directly declared instances.
    """

    classes: tuple[str, ...] = ()
    is_a: tuple[tuple[str, str], ...] = ()
    equiv: tuple[tuple[str, str], ...] = ()
    unions: tuple[UnionDef, ...] = ()
    instances_of: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def equiv_canonical(self) -> list[tuple[str, str]]:
        """Deduplicate equiv to one orientation; declaration order, declarer first."""
        seen: set[frozenset[str]] = set()
        pairs: list[tuple[str, str]] = []
        for a, b in self.equiv:
            key = frozenset((a, b))
            if key in seen:
                continue
            seen.add(key)
            pairs.append((a, b))
        return pairs

    def all_instances(self) -> tuple[str, ...]:
        """Global instance order: first appearance, scanning classes in order."""
        out: dict[str, None] = {}
        for cls in self.classes:
            for inst in self.instances_of.get(cls, ()):
                out.setdefault(inst, None)
        return tuple(out)

    def parents_of(self, cls: str) -> list[str]:
        return [p for c, p in self.is_a if c == cls]

    def union_targets(self) -> set[str]:
        return {u.target for u in self.unions}


def to_pivot(doc: OwlDocument) -> PivotOntology | list[Diagnostic]:
    """Normalize a parsed document into the pivot IR.

    Identifiers are sanitized; distinct source names that collide after
    sanitization are rejected, as are references to undeclared classes and
    self-referential unions.
    """
    diagnostics: list[Diagnostic] = []
    sanitized: dict[str, str] = {}
    owners: dict[str, tuple[str, str]] = {}  # sanitized -> (kind, raw)

    def claim(kind: str, raw: str) -> str:
        clean = sanitize_identifier(raw)
        previous = owners.get(clean)
        if previous is not None and previous != (kind, raw):
            diagnostics.append(
                error(
                    IDENTIFIER_COLLISION,
                    f"'{raw}' and '{previous[1]}' both map to identifier '{clean}'",
                )
            )
        else:
            owners[clean] = (kind, raw)
        sanitized[raw] = clean
        return clean

    declared = {decl.id for decl in doc.classes}

    def resolve(owner: str, raw: str) -> str | None:
        if raw not in declared:
            diagnostics.append(
                error(
                    DANGLING_REFERENCE,
                    f"class '{owner}' references undeclared class '{raw}'",
                )
            )
            return None
        return sanitize_identifier(raw)

    classes: list[str] = []
    for decl in doc.classes:
        classes.append(claim("class", decl.id))

    is_a: list[tuple[str, str]] = []
    equiv: list[tuple[str, str]] = []
    unions: list[UnionDef] = []
    instances: dict[str, list[str]] = {}

    for decl in doc.classes:
        child = sanitized[decl.id]
        for raw_parent in decl.super_refs:
            parent = resolve(decl.id, raw_parent)
            if parent is None:
                continue
            pair = (child, parent)
            if pair not in is_a:
                is_a.append(pair)
        for raw_other in decl.equivalent_refs:
            other = resolve(decl.id, raw_other)
            if other is None or other == child:
                continue  # reflexive pairs are implied, not stored
            for pair in ((child, other), (other, child)):
                if pair not in equiv:
                    equiv.append(pair)
        if decl.union_members is not None:
            members: list[str] = []
            for raw_member in decl.union_members:
                member = resolve(decl.id, raw_member)
                if member is not None and member not in members:
                    members.append(member)
            if child in members:
                diagnostics.append(
                    error(
                        SELF_REFERENTIAL_UNION,
                        f"union target '{child}' appears in its own member list",
                    )
                )
            elif len(members) >= 2:
                unions.append(UnionDef(target=child, members=tuple(members)))
        for raw_inst in decl.individuals:
            inst = claim("instance", raw_inst)
            instances.setdefault(child, [])
            if inst not in instances[child]:
                instances[child].append(inst)

    if any(d.is_error for d in diagnostics):
        return diagnostics
    return PivotOntology(
        classes=tuple(classes),
        is_a=tuple(is_a),
        equiv=tuple(equiv),
        unions=tuple(unions),
        instances_of={cls: tuple(vals) for cls, vals in instances.items()},
    )


def validate_pivot(pivot: PivotOntology) -> list[Diagnostic]:
    """Flag semantically suspect but representable shapes. Never errors."""
    diagnostics: list[Diagnostic] = []
    for scc in _strongly_connected(pivot):
        diagnostics.append(
            warning(
                CYCLE_IN_SUBSUMPTION,
                "subsumption cycle forces set equality between: " + ", ".join(scc),
            )
        )
    is_a = set(pivot.is_a)
    for a, b in pivot.equiv_canonical():
        if (a, b) in is_a or (b, a) in is_a:
            diagnostics.append(
                warning(
                    REDUNDANT_EQUIV_SUBCLASS,
                    f"classes '{a}' and '{b}' are both equivalent and in a subclass relation",
                )
            )
    for union in pivot.unions:
        if pivot.instances_of.get(union.target):
            diagnostics.append(
                warning(
                    UNION_TARGET_DIRECT_INSTANCES,
                    f"union target '{union.target}' also has directly assigned instances",
                )
            )
    return diagnostics


def _strongly_connected(pivot: PivotOntology) -> list[list[str]]:
    """Nontrivial SCCs of the subsumption digraph, members in pivot order.

    Iterative Tarjan; a single-node component counts only with a self-loop.
    """
    graph: dict[str, list[str]] = {cls: [] for cls in pivot.classes}
    for child, parent in pivot.is_a:
        graph[child].append(parent)

    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    result: list[list[str]] = []
    counter = 0

    for start in pivot.classes:
        if start in index:
            continue
        work: list[tuple[str, int]] = [(start, 0)]
        while work:
            node, child_pos = work[-1]
            if child_pos == 0:
                index[node] = lowlink[node] = counter
                counter += 1
                stack.append(node)
                on_stack.add(node)
            advanced = False
            for position in range(child_pos, len(graph[node])):
                successor = graph[node][position]
                if successor not in index:
                    work[-1] = (node, position + 1)
                    work.append((successor, 0))
                    advanced = True
                    break
                if successor in on_stack:
                    lowlink[node] = min(lowlink[node], index[successor])
            if advanced:
                continue
            work.pop()
            if work:
                parent_node = work[-1][0]
                lowlink[parent_node] = min(lowlink[parent_node], lowlink[node])
            if lowlink[node] == index[node]:
                component: list[str] = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                if len(component) > 1 or (node, node) in set(pivot.is_a):
                    order = {cls: i for i, cls in enumerate(pivot.classes)}
                    component.sort(key=lambda cls: order[cls])
                    result.append(component)
    return result


def close_instance_map(
    pivot: PivotOntology, seed: dict[str, tuple[str, ...]]
) -> dict[str, tuple[str, ...]]:
    """Deductive closure of an instance assignment, as an ordered fixpoint.

    Rules, iterated until stable: subsumption propagates instances upward;
    equivalent classes share instances; a union target receives its members'
    instances; instances a union target holds beyond its members are
    attributed to the first member, so union equalities stay satisfiable.
    Insertion order is preserved, which keeps downstream output stable.
    """
    closed: dict[str, list[str]] = {cls: list(seed.get(cls, ())) for cls in pivot.classes}

    def add(cls: str, items: list[str]) -> bool:
        changed = False
        for item in items:
            if item not in closed[cls]:
                closed[cls].append(item)
                changed = True
        return changed

    changed = True
    while changed:
        changed = False
        for child, parent in pivot.is_a:
            changed |= add(parent, closed[child])
        for a, b in pivot.equiv:
            changed |= add(b, closed[a])
        for union in pivot.unions:
            member_pool = [i for m in union.members for i in closed[m]]
            changed |= add(union.target, member_pool)
            extras = [i for i in closed[union.target] if i not in member_pool]
            changed |= add(union.members[0], extras)
    return {cls: tuple(values) for cls, values in closed.items()}


def pivot_to_json(pivot: PivotOntology) -> str:
    """Canonical JSON dump (stable key order) for debugging and goldens."""
    payload = {
        "classes": list(pivot.classes),
        "is_a": [list(pair) for pair in pivot.is_a],
        "equiv": [list(pair) for pair in pivot.equiv_canonical()],
        "unions": [
            {"target": union.target, "members": list(union.members)} for union in pivot.unions
        ],
        "instances_of": {cls: list(insts) for cls, insts in pivot.instances_of.items()},
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
