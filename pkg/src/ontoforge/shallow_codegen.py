"""Shallow encoding: one self-contained context, classes as subsets of Thing.

Emission walks classes in pivot order and interleaves the four relationship
rules per class, so axiom numbering follows declaration order:

1. root typing ``C <: Thing``, only for classes whose typing is not already
   carried by another axiom with ``C`` on the left (a subclass axiom, an
   equivalence it declares, or a union definition it targets);
2. ``C <: P`` per subsumption pair;
3. ``A = B`` per equivalence, deduplicated to the declaring orientation;
4. ``T = (M1 \\/ M2 \\/ ...)`` per union definition, members listed
   lexicographically;

then rule 5 appends ``i : C`` for every declared instance assignment.
"""

from __future__ import annotations

from .eventb_ast import EventBContext, Equal, Identifier, Member, Node, Subset, Union, make_context
from .pivot_model import PivotOntology

ROOT_SET = "Thing"


def emit_shallow(pivot: PivotOntology, name: str) -> EventBContext:
    """Emit the shallow context for a valid pivot. Pure; no diagnostics."""
    instances = pivot.all_instances()
    constants = tuple(pivot.classes) + instances

    equiv_pairs = pivot.equiv_canonical()
    union_targets = pivot.union_targets()
    typed_elsewhere = (
        {child for child, _parent in pivot.is_a}
        | {a for a, _b in equiv_pairs}
        | union_targets
    )

    axioms: list[Node] = []
    for cls in pivot.classes:
        if cls not in typed_elsewhere:
            axioms.append(Subset(Identifier(cls), Identifier(ROOT_SET)))
        for child, parent in pivot.is_a:
            if child == cls:
                axioms.append(Subset(Identifier(cls), Identifier(parent)))
        for a, b in equiv_pairs:
            if a == cls:
                axioms.append(Equal(Identifier(a), Identifier(b)))
        for union in pivot.unions:
            if union.target == cls:
                members = tuple(Identifier(m) for m in sorted(union.members))
                axioms.append(Equal(Identifier(cls), Union(members)))
    for cls in pivot.classes:
        for inst in pivot.instances_of.get(cls, ()):
            axioms.append(Member(Identifier(inst), Identifier(cls)))

    return make_context(name, sets=(ROOT_SET,), constants=constants, axioms=axioms)
