"""Deep encoding: a fixed generic context plus a per-ontology instance context.

The generic context ``Ontology_Model`` declares the carrier sets and the
relation families ``HAS_INSTANCES``, ``IS_A``, ``EQUIVALENCE``, ``UNION_OF``;
it never depends on the ontology. The specific context extends it,
enumerates the ontology's classes with a partition axiom, gives the
``isA`` / ``eQ`` / ``unionOf`` constants as explicit maplet-set literals, and
states membership of each literal in its family as a theorem.

``eQ`` is emitted as the reflexive-symmetric-transitive closure of the
declared equivalences over all classes (reflexive maplets first, in pivot
order), which is exactly what membership in ``EQUIVALENCE`` requires.

The instance extension (instance partition plus a ``hasInstances`` literal
holding the closed assignment) is emitted only when the ontology declares
individuals.
"""

from __future__ import annotations

from .diagnostics import NARY_UNION_SPLIT, Diagnostic, warning
from .eventb_ast import (
    And,
    Binder,
    Cart,
    Comprehension,
    DomRestrict,
    Equal,
    EventBContext,
    Exists,
    Forall,
    GenUnion,
    Identifier,
    Implies,
    Maplet,
    Member,
    Node,
    Or,
    Partition,
    Pow,
    Ran,
    RelSpace,
    SetLit,
    Subset,
    make_context,
)
from .pivot_model import PivotOntology, close_instance_map

GENERIC_NAME = "Ontology_Model"

_CLASS = Identifier("CLASS")
_INSTANCE = Identifier("INSTANCE")
_HAS_INSTANCES = Identifier("HAS_INSTANCES")


def _instance_pool(var: str) -> Node:
    """union({r . r : HAS_INSTANCES | ran({var} <| r)})"""
    r = Identifier("r")
    return GenUnion(
        Comprehension(
            binders=(Binder("r", _HAS_INSTANCES),),
            predicate=Member(r, _HAS_INSTANCES),
            expr=Ran(DomRestrict(SetLit((Identifier(var),)), r)),
        )
    )


def _subsumption_family() -> Node:
    x, y, is_a = Identifier("x"), Identifier("y"), Identifier("IsA")
    rule = Forall(
        binders=(Binder("x", _CLASS), Binder("y", _CLASS)),
        body=Implies(
            And((Member(x, _CLASS), Member(y, _CLASS), Member(Maplet(x, y), is_a))),
            Subset(_instance_pool("x"), _instance_pool("y")),
        ),
    )
    return Comprehension(
        binders=(Binder("IsA", RelSpace(_CLASS, _CLASS)),),
        predicate=And((Member(is_a, RelSpace(_CLASS, _CLASS)), rule)),
        expr=is_a,
    )


def _equivalence_family() -> Node:
    x, y, z, eqo = Identifier("x"), Identifier("y"), Identifier("z"), Identifier("EQo")
    reflexive = Forall(
        binders=(Binder("x", _CLASS),),
        body=Implies(Member(x, _CLASS), Member(Maplet(x, x), eqo)),
    )
    symmetric = Forall(
        binders=(Binder("x", _CLASS), Binder("y", _CLASS)),
        body=Implies(
            And((Member(x, _CLASS), Member(y, _CLASS), Member(Maplet(x, y), eqo))),
            Member(Maplet(y, x), eqo),
        ),
    )
    transitive = Forall(
        binders=(Binder("x", _CLASS), Binder("y", _CLASS), Binder("z", _CLASS)),
        body=Implies(
            And(
                (
                    Member(x, _CLASS),
                    Member(y, _CLASS),
                    Member(z, _CLASS),
                    Member(Maplet(x, y), eqo),
                    Member(Maplet(y, z), eqo),
                )
            ),
            Member(Maplet(x, z), eqo),
        ),
    )
    return Comprehension(
        binders=(Binder("EQo", RelSpace(_CLASS, _CLASS)),),
        predicate=And((Member(eqo, RelSpace(_CLASS, _CLASS)), reflexive, symmetric, transitive)),
        expr=eqo,
    )


def _union_family() -> Node:
    x, y, z = Identifier("x"), Identifier("y"), Identifier("z")
    n, m = Identifier("n"), Identifier("m")
    instance, has = Identifier("instance"), Identifier("hasInstance")
    union_of = Identifier("unionOf")
    space = RelSpace(Cart(Pow(_CLASS), Pow(_CLASS)), _CLASS)

    collect = Forall(
        binders=(Binder("n", x), Binder("m", y)),
        body=Implies(
            And(
                (
                    Member(n, x),
                    Member(m, y),
                    Or((Member(Maplet(n, instance), has), Member(Maplet(m, instance), has))),
                )
            ),
            Member(Maplet(z, instance), has),
        ),
    )
    witness = Exists(
        binders=(Binder("hasInstance", _HAS_INSTANCES),),
        body=Implies(Member(has, _HAS_INSTANCES), collect),
    )
    per_instance = Forall(
        binders=(Binder("instance", _INSTANCE),),
        body=Implies(Member(instance, _INSTANCE), witness),
    )
    rule = Forall(
        binders=(Binder("x", Pow(_CLASS)), Binder("y", Pow(_CLASS)), Binder("z", _CLASS)),
        body=Implies(
            And(
                (
                    Member(x, Pow(_CLASS)),
                    Member(y, Pow(_CLASS)),
                    Member(z, _CLASS),
                    Member(Maplet(Maplet(x, y), z), union_of),
                )
            ),
            per_instance,
        ),
    )
    return Comprehension(
        binders=(Binder("unionOf", space),),
        predicate=And((Member(union_of, space), rule)),
        expr=union_of,
    )


def emit_deep_generic() -> EventBContext:
    """Emit the constant generic context. Independent of the ontology."""
    axioms: list[Node] = [
        Equal(_HAS_INSTANCES, RelSpace(_CLASS, _INSTANCE)),
        Equal(Identifier("IS_A"), _subsumption_family()),
        Equal(Identifier("EQUIVALENCE"), _equivalence_family()),
        Equal(Identifier("UNION_OF"), _union_family()),
    ]
    return make_context(
        GENERIC_NAME,
        sets=("CLASS", "PROPERTY", "INSTANCE", "VALUES"),
        constants=("HAS_INSTANCES", "IS_A", "EQUIVALENCE", "UNION_OF"),
        axioms=axioms,
    )


def _equivalence_closure(pivot: PivotOntology) -> list[tuple[str, str]]:
    """Reflexive maplets over all classes in pivot order, then the symmetric-
    transitive closure pairs of the declared equivalences, ordered by pivot
    position of each component and endpoint."""
    order = {cls: i for i, cls in enumerate(pivot.classes)}
    component: dict[str, str] = {cls: cls for cls in pivot.classes}

    def find(cls: str) -> str:
        while component[cls] != cls:
            component[cls] = component[component[cls]]
            cls = component[cls]
        return cls

    for a, b in pivot.equiv:
        ra, rb = find(a), find(b)
        if ra != rb:
            low, high = sorted((ra, rb), key=lambda c: order[c])
            component[high] = low

    pairs = [(cls, cls) for cls in pivot.classes]
    groups: dict[str, list[str]] = {}
    for cls in pivot.classes:
        groups.setdefault(find(cls), []).append(cls)
    for root in sorted(groups, key=lambda c: order[c]):
        members = sorted(groups[root], key=lambda c: order[c])
        if len(members) < 2:
            continue
        for a in members:
            for b in members:
                if a != b:
                    pairs.append((a, b))
    return pairs


def emit_deep_specific(pivot: PivotOntology, name: str) -> tuple[EventBContext, list[Diagnostic]]:
    """Emit the per-ontology context extending the generic one."""
    diagnostics: list[Diagnostic] = []
    instances = pivot.all_instances()

    constants = tuple(pivot.classes) + ("isA", "eQ", "unionOf")
    if instances:
        constants += instances + ("hasInstances",)

    axioms: list[Node] = [
        Partition(_CLASS, tuple(SetLit((Identifier(cls),)) for cls in pivot.classes)),
        Equal(
            Identifier("isA"),
            SetLit(tuple(Maplet(Identifier(c), Identifier(p)) for c, p in pivot.is_a)),
        ),
        Equal(
            Identifier("eQ"),
            SetLit(tuple(Maplet(Identifier(a), Identifier(b)) for a, b in _equivalence_closure(pivot))),
        ),
    ]

    union_maplets: list[Node] = []
    for union in pivot.unions:
        if len(union.members) > 2:
            diagnostics.append(
                warning(
                    NARY_UNION_SPLIT,
                    f"union for '{union.target}' has {len(union.members)} members; "
                    "encoded as first member versus the rest",
                )
            )
        head = SetLit((Identifier(union.members[0]),))
        rest = SetLit(tuple(Identifier(m) for m in union.members[1:]))
        union_maplets.append(Maplet(Maplet(head, rest), Identifier(union.target)))
    axioms.append(Equal(Identifier("unionOf"), SetLit(tuple(union_maplets))))

    if instances:
        axioms.append(Partition(_INSTANCE, tuple(SetLit((Identifier(i),)) for i in instances)))
        closed = close_instance_map(pivot, pivot.instances_of)
        assignment = tuple(
            Maplet(Identifier(cls), Identifier(inst))
            for cls in pivot.classes
            for inst in closed.get(cls, ())
        )
        axioms.append(Equal(Identifier("hasInstances"), SetLit(assignment)))

    theorems: list[Node] = [
        Member(Identifier("isA"), Identifier("IS_A")),
        Member(Identifier("eQ"), Identifier("EQUIVALENCE")),
        Member(Identifier("unionOf"), Identifier("UNION_OF")),
    ]

    ctx = make_context(
        name,
        extends=GENERIC_NAME,
        constants=constants,
        axioms=axioms,
        theorems=theorems,
    )
    return ctx, diagnostics


def emit_deep(pivot: PivotOntology, name: str) -> tuple[EventBContext, EventBContext, list[Diagnostic]]:
    """Emit the (generic, specific) pair for a valid pivot."""
    specific, diagnostics = emit_deep_specific(pivot, name)
    return emit_deep_generic(), specific, diagnostics
