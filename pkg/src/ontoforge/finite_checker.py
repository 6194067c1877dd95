"""Exhaustive evaluation of context predicates over finite interpretations.

Values are Python atoms (strings), pairs (2-tuples), and frozensets, plus two
lazy set forms that make the generated generic axioms tractable:

* ``LazyPow`` represents the power set of a finite base (relation spaces and
  power sets evaluate to it). Membership is structural; enumeration and
  materialization are refused beyond the configurable cap with a
  ``DOMAIN_TOO_LARGE`` error.
* ``LazyComprehension`` represents an unmaterialized set comprehension.
  When the comprehension maps a single bound variable to itself, membership
  is decided by substitution, so huge candidate spaces never need to be
  enumerated; otherwise membership materializes the comprehension.

``check_context_against`` applies a documented protocol on top of plain
evaluation:

* an axiom ``C = RHS`` whose left side is a constant the interpretation does
  not bind *defines* that constant (the right side is evaluated, possibly to
  a lazy value, and bound); the axiom is reported TRUE with note ``defined``;
* an axiom ``C = RHS`` whose left side is bound and whose right side is a
  pure type-space expression (relation spaces, cartesian products, power
  sets over identifiers) is checked as sort conformance: every element of
  the bound value must inhabit the space. This is the finite-checking
  reading of typing axioms whose literal value would be the full space;
* everything else is evaluated literally.

Quantifier and comprehension binders carry explicit domains; bodies are
evaluated under every binding of those domains, in canonical value order,
so reported counterexamples are deterministic.
"""

from __future__ import annotations

import itertools
import json
from contextlib import contextmanager
from dataclasses import dataclass, field

from .diagnostics import DOMAIN_TOO_LARGE
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
    Iff,
    Implies,
    Inter,
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
    Union,
)
from .pivot_model import PivotOntology, close_instance_map

DEFAULT_MAX_DOMAIN = 2**20

UNBOUND_IDENTIFIER = "UNBOUND_IDENTIFIER"
ILL_TYPED = "ILL_TYPED"


class EvalError(Exception):
    """Evaluation failure, carrying a stable code and the predicate path."""

    def __init__(self, code: str, message: str, path: str):
        self.code = code
        self.path = path
        super().__init__(f"{code} at {path}: {message}")


class CheckError(Exception):
    """Evaluation failure inside a labelled clause of a context check."""

    def __init__(self, label: str, cause: EvalError):
        self.label = label
        self.cause = cause
        super().__init__(f"{label}: {cause}")


def _value_key(value):
    """Total order on concrete values: atoms, then pairs, then sets."""
    if isinstance(value, str):
        return (0, value)
    if isinstance(value, tuple):
        return (1, _value_key(value[0]), _value_key(value[1]))
    if isinstance(value, frozenset):
        return (2, len(value), tuple(sorted(_value_key(e) for e in value)))
    raise TypeError(f"not a concrete value: {value!r}")


def value_repr(value) -> str:
    """Stable human-readable form used in traces and reports."""
    if isinstance(value, str):
        return value
    if isinstance(value, tuple):
        return f"{value_repr(value[0])} |-> {value_repr(value[1])}"
    if isinstance(value, frozenset):
        return "{" + ", ".join(value_repr(e) for e in sorted(value, key=_value_key)) + "}"
    if isinstance(value, LazyPow):
        return f"<2^{len(value.base)} subsets>"
    if isinstance(value, LazyComprehension):
        return "<comprehension>"
    return repr(value)


class LazyPow:
    """All subsets of a finite base, kept symbolic until enumerated."""

    __slots__ = ("base", "_base_set")

    def __init__(self, elements):
        self.base = tuple(sorted(set(elements), key=_value_key))
        self._base_set = frozenset(self.base)

    @property
    def cardinality(self) -> int:
        return 2 ** len(self.base)

    def contains(self, value) -> bool:
        return isinstance(value, frozenset) and value <= self._base_set

    def enumerate(self, cap: int, path: str) -> list[frozenset]:
        if self.cardinality > cap:
            raise EvalError(
                DOMAIN_TOO_LARGE,
                f"power set of {len(self.base)} elements exceeds the cap of {cap}",
                path,
            )
        out: list[frozenset] = []
        for size in range(len(self.base) + 1):
            out.extend(frozenset(c) for c in itertools.combinations(self.base, size))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, LazyPow) and self._base_set == other._base_set

    def __hash__(self) -> int:
        return hash(("LazyPow", self._base_set))


class LazyComprehension:
    """Unmaterialized ``{vars . predicate | expr}`` over evaluated context."""

    def __init__(self, binders: tuple[Binder, ...], predicate: Node, expr: Node, env: dict, cap: int, first_domain):
        self.binders = binders
        self.predicate = predicate
        self.expr = expr
        self.env = dict(env)
        self.cap = cap
        self.first_domain = first_domain
        self.identity = (
            len(binders) == 1
            and isinstance(expr, Identifier)
            and expr.name == binders[0].name
        )
        self._materialized: frozenset | None = None

    def contains(self, value, path: str = "comprehension") -> bool:
        if self.identity:
            if not _static_contains(self.first_domain, value, path):
                return False
            inner = _Evaluator({**self.env, self.binders[0].name: value}, self.cap)
            return inner.predicate(self.predicate, path)
        return value in self.materialize(path)

    def materialize(self, path: str = "comprehension") -> frozenset:
        if self._materialized is None:
            inner = _Evaluator(dict(self.env), self.cap)
            out = []
            for binding in inner.bindings(self.binders, path):
                with inner.bound(binding):
                    if inner.predicate(self.predicate, path):
                        out.append(inner.concrete(inner.expression(self.expr, path), path))
            self._materialized = frozenset(out)
        return self._materialized


def _static_contains(container, element, path: str) -> bool:
    if isinstance(container, frozenset):
        return element in container
    if isinstance(container, LazyPow):
        return container.contains(element)
    if isinstance(container, LazyComprehension):
        return container.contains(element, path)
    raise EvalError(ILL_TYPED, "membership test against a non-set value", path)


@dataclass(frozen=True)
class FiniteInterpretation:
    """Finite domains for carrier sets and values for constants."""

    carrier_domains: dict[str, tuple] = field(default_factory=dict)
    constant_values: dict = field(default_factory=dict)

    def environment(self) -> dict:
        env: dict = {name: frozenset(dom) for name, dom in self.carrier_domains.items()}
        env.update(self.constant_values)
        return env


@dataclass(frozen=True)
class Trace:
    kind: str  # "counterexample" | "no-witness" | "partition"
    binding: tuple[tuple[str, str], ...] = ()
    detail: str = ""

    def __str__(self) -> str:
        parts = [f"{name}={value}" for name, value in self.binding]
        if self.detail:
            parts.append(self.detail)
        return ", ".join(parts) if parts else self.kind


@dataclass(frozen=True)
class EvalResult:
    value: bool
    trace: Trace | None = None


class _Evaluator:
    def __init__(self, env: dict, cap: int):
        self.env = env
        self.cap = cap

    # -- helpers ----------------------------------------------------------

    def iterate(self, value, path: str) -> list:
        if isinstance(value, frozenset):
            return sorted(value, key=_value_key)
        if isinstance(value, LazyPow):
            return value.enumerate(self.cap, path)
        if isinstance(value, LazyComprehension):
            return sorted(value.materialize(path), key=_value_key)
        raise EvalError(ILL_TYPED, f"cannot enumerate {value_repr(value)}", path)

    def as_set(self, value, path: str) -> frozenset:
        if isinstance(value, frozenset):
            return value
        if isinstance(value, (LazyPow, LazyComprehension)):
            return frozenset(self.iterate(value, path))
        raise EvalError(ILL_TYPED, f"expected a set, got {value_repr(value)}", path)

    def concrete(self, value, path: str):
        if isinstance(value, (LazyPow, LazyComprehension)):
            return self.as_set(value, path)
        return value

    def contains(self, container, element, path: str) -> bool:
        return _static_contains(container, self.concrete(element, path), path)

    def values_equal(self, a, b, path: str) -> bool:
        if isinstance(a, LazyPow) and isinstance(b, LazyPow):
            return a == b
        if isinstance(a, LazyComprehension):
            return self.values_equal(a.materialize(path), b, path)
        if isinstance(b, LazyComprehension):
            return self.values_equal(a, b.materialize(path), path)
        if isinstance(a, LazyPow) or isinstance(b, LazyPow):
            lazy, concrete = (a, b) if isinstance(a, LazyPow) else (b, a)
            if not isinstance(concrete, frozenset):
                return False
            if len(concrete) != lazy.cardinality:
                return False
            return all(lazy.contains(e) for e in concrete)
        return a == b

    def bindings(self, binders: tuple[Binder, ...], path: str) -> list[dict]:
        """Every assignment of the binders, in canonical domain order.

        Later binder domains are evaluated under the earlier bindings, so
        domains may reference preceding variables.
        """
        out: list[dict] = []

        def rec(i: int, names: list[str]) -> None:
            if i == len(binders):
                out.append({name: self.env[name] for name in names})
                if len(out) > self.cap:
                    raise EvalError(
                        DOMAIN_TOO_LARGE,
                        f"binder enumeration exceeds the cap of {self.cap}",
                        path,
                    )
                return
            binder = binders[i]
            domain = self.expression(binder.domain, f"{path}/{binder.name}")
            values = self.iterate(domain, f"{path}/{binder.name}")
            had, old = binder.name in self.env, self.env.get(binder.name)
            try:
                for value in values:
                    self.env[binder.name] = value
                    rec(i + 1, names + [binder.name])
            finally:
                if had:
                    self.env[binder.name] = old
                else:
                    self.env.pop(binder.name, None)

        rec(0, [])
        return out

    @contextmanager
    def bound(self, binding: dict):
        saved = {name: (name in self.env, self.env.get(name)) for name in binding}
        self.env.update(binding)
        try:
            yield
        finally:
            for name, (had, old) in saved.items():
                if had:
                    self.env[name] = old
                else:
                    self.env.pop(name, None)

    # -- evaluation -------------------------------------------------------

    def predicate(self, node: Node, path: str) -> bool:
        match node:
            case Member(element, container):
                c = self.expression(container, f"{path}/container")
                e = self.expression(element, f"{path}/element")
                return self.contains(c, e, path)
            case Subset(left, right):
                lv = self.as_set(self.expression(left, f"{path}/left"), path)
                rv = self.expression(right, f"{path}/right")
                return all(self.contains(rv, e, path) for e in lv)
            case Equal(left, right):
                lv = self.expression(left, f"{path}/left")
                rv = self.expression(right, f"{path}/right")
                return self.values_equal(lv, rv, path)
            case Partition(whole, parts):
                return self._partition(whole, parts, path)[0]
            case And(operands):
                return all(self.predicate(o, f"{path}/and[{i}]") for i, o in enumerate(operands))
            case Or(operands):
                return any(self.predicate(o, f"{path}/or[{i}]") for i, o in enumerate(operands))
            case Implies(left, right):
                return not self.predicate(left, f"{path}/antecedent") or self.predicate(
                    right, f"{path}/consequent"
                )
            case Iff(left, right):
                return self.predicate(left, f"{path}/left") == self.predicate(right, f"{path}/right")
            case Forall(binders, body):
                for binding in self.bindings(binders, path):
                    with self.bound(binding):
                        if not self.predicate(body, f"{path}/forall"):
                            return False
                return True
            case Exists(binders, body):
                for binding in self.bindings(binders, path):
                    with self.bound(binding):
                        if self.predicate(body, f"{path}/exists"):
                            return True
                return False
            case _:
                raise EvalError(ILL_TYPED, f"not a predicate: {node!r}", path)

    def _partition(self, whole: Node, parts: tuple[Node, ...], path: str):
        target = self.as_set(self.expression(whole, f"{path}/whole"), path)
        part_values = [
            self.as_set(self.expression(p, f"{path}/part[{i}]"), path)
            for i, p in enumerate(parts)
        ]
        for i in range(len(part_values)):
            for j in range(i + 1, len(part_values)):
                overlap = part_values[i] & part_values[j]
                if overlap:
                    return False, f"parts {i + 1} and {j + 1} overlap on {value_repr(frozenset(overlap))}"
        covered = frozenset().union(*part_values) if part_values else frozenset()
        if covered != target:
            missing = target - covered
            excess = covered - target
            if missing:
                return False, f"parts do not cover {value_repr(frozenset(missing))}"
            return False, f"parts exceed the set by {value_repr(frozenset(excess))}"
        return True, ""

    def expression(self, node: Node, path: str):
        match node:
            case Identifier(name):
                if name not in self.env:
                    raise EvalError(UNBOUND_IDENTIFIER, f"identifier '{name}' is not bound", path)
                return self.env[name]
            case SetLit(elements):
                return frozenset(
                    self.concrete(self.expression(e, f"{path}/elem[{i}]"), path)
                    for i, e in enumerate(elements)
                )
            case Maplet(left, right):
                return (
                    self.concrete(self.expression(left, f"{path}/left"), path),
                    self.concrete(self.expression(right, f"{path}/right"), path),
                )
            case Union(operands):
                out: frozenset = frozenset()
                for i, o in enumerate(operands):
                    out |= self.as_set(self.expression(o, f"{path}/union[{i}]"), path)
                return out
            case Inter(operands):
                if not operands:
                    raise EvalError(ILL_TYPED, "intersection needs at least one operand", path)
                sets = [
                    self.as_set(self.expression(o, f"{path}/inter[{i}]"), path)
                    for i, o in enumerate(operands)
                ]
                out = sets[0]
                for s in sets[1:]:
                    out &= s
                return out
            case RelSpace(left, right):
                lv = self.as_set(self.expression(left, f"{path}/left"), path)
                rv = self.as_set(self.expression(right, f"{path}/right"), path)
                if len(lv) * len(rv) > self.cap:
                    raise EvalError(
                        DOMAIN_TOO_LARGE,
                        f"relation base of {len(lv)}x{len(rv)} pairs exceeds the cap",
                        path,
                    )
                return LazyPow((a, b) for a in lv for b in rv)
            case Cart(left, right):
                lv = self.as_set(self.expression(left, f"{path}/left"), path)
                rv = self.as_set(self.expression(right, f"{path}/right"), path)
                if len(lv) * len(rv) > self.cap:
                    raise EvalError(
                        DOMAIN_TOO_LARGE,
                        f"cartesian product of {len(lv)}x{len(rv)} pairs exceeds the cap",
                        path,
                    )
                return frozenset((a, b) for a in lv for b in rv)
            case Pow(operand):
                return LazyPow(self.as_set(self.expression(operand, f"{path}/pow"), path))
            case Ran(operand):
                relation = self.as_set(self.expression(operand, f"{path}/ran"), path)
                return frozenset(self._pair(p, path)[1] for p in relation)
            case DomRestrict(restrictor, relation):
                sv = self.as_set(self.expression(restrictor, f"{path}/restrictor"), path)
                rv = self.as_set(self.expression(relation, f"{path}/relation"), path)
                return frozenset(p for p in rv if self._pair(p, path)[0] in sv)
            case GenUnion(operand):
                family = self.expression(operand, f"{path}/union")
                out = frozenset()
                for member in self.iterate(family, path):
                    out |= self.as_set(member, path)
                return out
            case Comprehension(binders, predicate, expr):
                first_domain = self.expression(binders[0].domain, f"{path}/domain")
                return LazyComprehension(binders, predicate, expr, self.env, self.cap, first_domain)
            case _:
                raise EvalError(ILL_TYPED, f"not an expression: {node!r}", path)

    def _pair(self, value, path: str) -> tuple:
        if not isinstance(value, tuple):
            raise EvalError(ILL_TYPED, f"expected a maplet pair, got {value_repr(value)}", path)
        return value


class _Explainer(_Evaluator):
    """Second pass over a falsified predicate, collecting a counterexample."""

    def explain(self, node: Node, path: str = "predicate") -> Trace | None:
        match node:
            case And(operands):
                for i, op in enumerate(operands):
                    if not self.predicate(op, path):
                        return self.explain(op, f"{path}/and[{i}]")
                return None
            case Or(operands):
                for i, op in enumerate(operands):
                    trace = self.explain(op, f"{path}/or[{i}]")
                    if trace is not None:
                        return trace
                return None
            case Implies(_, right):
                return self.explain(right, f"{path}/consequent")
            case Iff(left, right):
                if not self.predicate(left, path):
                    return self.explain(left, f"{path}/left")
                return self.explain(right, f"{path}/right")
            case Forall(binders, body):
                for binding in self.bindings(binders, path):
                    with self.bound(binding):
                        if not self.predicate(body, path):
                            outer = tuple(
                                (b.name, value_repr(binding[b.name])) for b in binders
                            )
                            inner = self.explain(body, f"{path}/forall")
                            if inner is not None:
                                return Trace(
                                    "counterexample", outer + inner.binding, inner.detail
                                )
                            return Trace("counterexample", outer)
                return None
            case Exists(binders, _):
                names = ", ".join(b.name for b in binders)
                return Trace("no-witness", (), f"no witness for {names}")
            case Partition(whole, parts):
                ok, detail = self._partition(whole, parts, path)
                if not ok:
                    return Trace("partition", (), detail)
                return None
            case _:
                return None


def eval_predicate(
    pred: Node, interp: FiniteInterpretation, max_domain: int = DEFAULT_MAX_DOMAIN
) -> EvalResult:
    """Evaluate one predicate under an interpretation.

    All free identifiers of the predicate must be bound by the
    interpretation; quantifiers enumerate their binder domains exhaustively.
    On falsification the result carries a counterexample trace when the
    failing node is a quantifier or a partition.
    """
    value = _Evaluator(interp.environment(), max_domain).predicate(pred, "predicate")
    if value:
        return EvalResult(True, None)
    trace = _Explainer(interp.environment(), max_domain).explain(pred)
    return EvalResult(False, trace)


def eval_expression(expr: Node, interp: FiniteInterpretation, max_domain: int = DEFAULT_MAX_DOMAIN):
    """Evaluate one expression to a value (possibly lazy)."""
    return _Evaluator(interp.environment(), max_domain).expression(expr, "expression")


def materialize_value(value, max_domain: int = DEFAULT_MAX_DOMAIN) -> frozenset:
    """Force a (possibly lazy) set value into a concrete frozenset."""
    return _Evaluator({}, max_domain).as_set(value, "materialize")


# --- Derived interpretation --------------------------------------------------


@dataclass(frozen=True)
class DerivedInterpretation:
    """Shallow and deep views of the canonical interpretation of a pivot.

    The two encodings give the same constant names different kinds of values
    (instance sets versus class atoms), so each gets its own binding map.
    """

    shallow: FiniteInterpretation
    deep: FiniteInterpretation
    universe: tuple[str, ...]
    closed: dict[str, tuple[str, ...]]


def derive_interpretation(pivot: PivotOntology) -> DerivedInterpretation:
    """Build the canonical finite interpretation for a pivot.

    Declared instances seed the assignment; when the ontology declares no
    instances at all, every leaf class that is not a union target receives
    one fresh synthetic instance so inclusion checks are non-vacuous. The
    assignment is closed with :func:`close_instance_map`. The deep view
    binds ``HAS_INSTANCES`` to the singleton family holding the closed
    assignment relation, which is what makes the family-membership theorems
    informative on finite domains.
    """
    declared = pivot.all_instances()
    seed = {cls: list(pivot.instances_of.get(cls, ())) for cls in pivot.classes}
    synthetics: list[str] = []
    if not declared:
        parents = {parent for _child, parent in pivot.is_a}
        union_targets = pivot.union_targets()
        for cls in pivot.classes:
            if cls not in parents and cls not in union_targets:
                name = f"{cls}#inst"
                synthetics.append(name)
                seed[cls].append(name)
    closed = close_instance_map(pivot, {cls: tuple(v) for cls, v in seed.items()})
    universe = tuple(declared) + tuple(synthetics)

    shallow_constants: dict = {cls: frozenset(closed.get(cls, ())) for cls in pivot.classes}
    shallow_constants.update({inst: inst for inst in declared})
    shallow = FiniteInterpretation(
        carrier_domains={"Thing": universe},
        constant_values=shallow_constants,
    )

    assignment = frozenset(
        (cls, inst) for cls in pivot.classes for inst in closed.get(cls, ())
    )
    deep_constants: dict = {cls: cls for cls in pivot.classes}
    deep_constants.update({inst: inst for inst in declared})
    deep_constants["hasInstances"] = assignment
    deep_constants["HAS_INSTANCES"] = frozenset({assignment})
    deep = FiniteInterpretation(
        carrier_domains={
            "CLASS": tuple(pivot.classes),
            "PROPERTY": (),
            "INSTANCE": universe,
            "VALUES": (),
        },
        constant_values=deep_constants,
    )
    return DerivedInterpretation(shallow=shallow, deep=deep, universe=universe, closed=closed)


# --- Context checking ---------------------------------------------------------


@dataclass(frozen=True)
class CheckEntry:
    context: str
    label: str
    kind: str  # "axiom" | "theorem"
    result: EvalResult
    note: str  # "checked" | "defined" | "conformance"


@dataclass(frozen=True)
class CheckReport:
    entries: tuple[CheckEntry, ...]

    @property
    def all_true(self) -> bool:
        return all(entry.result.value for entry in self.entries)

    @property
    def status(self) -> str:
        for entry in self.entries:
            if entry.kind == "axiom" and not entry.result.value:
                return "AXIOM_FALSE"
        for entry in self.entries:
            if entry.kind == "theorem" and not entry.result.value:
                return "THEOREM_FALSE"
        return "ALL_TRUE"

    def to_text(self) -> str:
        width = max((len(f"{e.context}.{e.label}") for e in self.entries), default=0)
        lines = []
        for entry in self.entries:
            name = f"{entry.context}.{entry.label}".ljust(width)
            verdict = "TRUE" if entry.result.value else "FALSE"
            line = f"{name}  {verdict}"
            if entry.result.trace is not None:
                line += f"  [{entry.result.trace}]"
            lines.append(line)
        lines.append(f"status: {self.status}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "status": self.status,
            "entries": [
                {
                    "context": entry.context,
                    "label": entry.label,
                    "kind": entry.kind,
                    "note": entry.note,
                    "value": entry.result.value,
                    "trace": str(entry.result.trace) if entry.result.trace else None,
                }
                for entry in self.entries
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _is_type_space(node: Node) -> bool:
    match node:
        case RelSpace(left, right) | Cart(left, right):
            return _is_type_space_operand(left) and _is_type_space_operand(right)
        case Pow(operand):
            return _is_type_space_operand(operand)
        case _:
            return False


def _is_type_space_operand(node: Node) -> bool:
    return isinstance(node, Identifier) or _is_type_space(node)


def check_context_against(
    ctx: EventBContext,
    parent: EventBContext | None,
    interp: FiniteInterpretation,
    max_domain: int = DEFAULT_MAX_DOMAIN,
) -> CheckReport:
    """Evaluate every axiom and theorem of ``parent`` then ``ctx``.

    Axioms follow the definitional / conformance protocol described in the
    module docstring; theorems are always evaluated literally. Evaluation
    errors propagate as :class:`CheckError` with the offending label.
    """
    env = interp.environment()
    entries: list[CheckEntry] = []
    for context in ([parent] if parent is not None else []) + [ctx]:
        for label, pred in context.axioms:
            entries.append(_check_axiom(context.name, label, pred, env, max_domain))
        for label, pred in context.theorems:
            entries.append(_check_clause(context.name, label, "theorem", pred, env, max_domain))
    return CheckReport(entries=tuple(entries))


def _check_axiom(
    context: str, label: str, pred: Node, env: dict, max_domain: int
) -> CheckEntry:
    if isinstance(pred, Equal) and isinstance(pred.left, Identifier):
        name = pred.left.name
        evaluator = _Evaluator(env, max_domain)
        try:
            if name not in env:
                env[name] = evaluator.expression(pred.right, label)
                return CheckEntry(context, label, "axiom", EvalResult(True, None), "defined")
            if _is_type_space(pred.right):
                space = evaluator.expression(pred.right, label)
                members = evaluator.as_set(env[name], label)
                ok = all(evaluator.contains(space, member, label) for member in members)
                return CheckEntry(context, label, "axiom", EvalResult(ok, None), "conformance")
        except EvalError as exc:
            raise CheckError(label, exc) from exc
    return _check_clause(context, label, "axiom", pred, env, max_domain)


def _check_clause(
    context: str, label: str, kind: str, pred: Node, env: dict, max_domain: int
) -> CheckEntry:
    try:
        ok = _Evaluator(env, max_domain).predicate(pred, label)
        trace = None
        if not ok:
            trace = _Explainer(dict(env), max_domain).explain(pred, label)
    except EvalError as exc:
        raise CheckError(label, exc) from exc
    return CheckEntry(context, label, kind, EvalResult(ok, trace), "checked")
