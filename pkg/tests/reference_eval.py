"""Naive reference evaluator, kept independent of the production evaluator.

Everything is eager: relation spaces and power sets materialize immediately,
comprehensions are enumerated on the spot, and there are no caps, laziness,
or traces. Only truth values and plain frozenset/tuple/str values exist.
Used as the oracle for randomized cross-checking.
"""

from itertools import combinations

from ontoforge.eventb_ast import (
    And,
    Cart,
    Comprehension,
    DomRestrict,
    Equal,
    Exists,
    Forall,
    GenUnion,
    Identifier,
    Iff,
    Implies,
    Inter,
    Maplet,
    Member,
    Or,
    Partition,
    Pow,
    Ran,
    RelSpace,
    SetLit,
    Subset,
    Union,
)


def _powerset(values):
    items = list(values)
    out = []
    for size in range(len(items) + 1):
        out.extend(frozenset(c) for c in combinations(items, size))
    return frozenset(out)


def _bindings(binders, env):
    if not binders:
        yield env
        return
    binder = binders[0]
    for value in ref_expr(binder.domain, env):
        yield from _bindings(binders[1:], {**env, binder.name: value})


def ref_pred(node, env) -> bool:
    if isinstance(node, Member):
        return ref_expr(node.element, env) in ref_expr(node.container, env)
    if isinstance(node, Subset):
        return ref_expr(node.left, env) <= ref_expr(node.right, env)
    if isinstance(node, Equal):
        return ref_expr(node.left, env) == ref_expr(node.right, env)
    if isinstance(node, Partition):
        whole = ref_expr(node.whole, env)
        parts = [ref_expr(p, env) for p in node.parts]
        union = frozenset().union(*parts) if parts else frozenset()
        disjoint = sum(len(p) for p in parts) == len(union)
        return disjoint and union == whole
    if isinstance(node, And):
        return all(ref_pred(o, env) for o in node.operands)
    if isinstance(node, Or):
        return any(ref_pred(o, env) for o in node.operands)
    if isinstance(node, Implies):
        return (not ref_pred(node.left, env)) or ref_pred(node.right, env)
    if isinstance(node, Iff):
        return ref_pred(node.left, env) == ref_pred(node.right, env)
    if isinstance(node, Forall):
        return all(ref_pred(node.body, e) for e in _bindings(node.binders, env))
    if isinstance(node, Exists):
        return any(ref_pred(node.body, e) for e in _bindings(node.binders, env))
    raise TypeError(f"not a predicate: {node!r}")


def ref_expr(node, env):
    if isinstance(node, Identifier):
        return env[node.name]
    if isinstance(node, SetLit):
        return frozenset(ref_expr(e, env) for e in node.elements)
    if isinstance(node, Maplet):
        return (ref_expr(node.left, env), ref_expr(node.right, env))
    if isinstance(node, Union):
        out = frozenset()
        for operand in node.operands:
            out |= ref_expr(operand, env)
        return out
    if isinstance(node, Inter):
        values = [ref_expr(o, env) for o in node.operands]
        out = values[0]
        for v in values[1:]:
            out &= v
        return out
    if isinstance(node, RelSpace):
        left = ref_expr(node.left, env)
        right = ref_expr(node.right, env)
        return _powerset((a, b) for a in left for b in right)
    if isinstance(node, Cart):
        left = ref_expr(node.left, env)
        right = ref_expr(node.right, env)
        return frozenset((a, b) for a in left for b in right)
    if isinstance(node, Pow):
        return _powerset(ref_expr(node.operand, env))
    if isinstance(node, Ran):
        return frozenset(b for (_a, b) in ref_expr(node.operand, env))
    if isinstance(node, DomRestrict):
        keep = ref_expr(node.restrictor, env)
        return frozenset(p for p in ref_expr(node.relation, env) if p[0] in keep)
    if isinstance(node, GenUnion):
        out = frozenset()
        for member in ref_expr(node.operand, env):
            out |= member
        return out
    if isinstance(node, Comprehension):
        out = set()
        for bound_env in _bindings(node.binders, env):
            if ref_pred(node.predicate, bound_env):
                out.add(ref_expr(node.expr, bound_env))
        return frozenset(out)
    raise TypeError(f"not an expression: {node!r}")


def ref_environment(interp):
    env = {name: frozenset(domain) for name, domain in interp.carrier_domains.items()}
    env.update(interp.constant_values)
    return env
