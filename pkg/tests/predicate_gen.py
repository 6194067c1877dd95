"""Seeded random generator of well-typed predicates and interpretations.

Two carriers S and T with two atoms each keep every construct enumerable by
the eager reference evaluator: the relation space S <-> T has only 16
members. The generator tracks bound variables with their sorts, so every
produced predicate is closed and well-typed over the fixed vocabulary.
"""

import random

from ontoforge.eventb_ast import (
    And,
    Binder,
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
from ontoforge.finite_checker import FiniteInterpretation

S_ATOMS = ("s0", "s1")
T_ATOMS = ("t0", "t1")

ATOM_CONSTS = {"S": ("aS", "bS"), "T": ("aT", "bT")}
SET_CONSTS = {"S": ("AS", "BS", "S"), "T": ("AT", "BT", "T")}
REL_CONSTS = ("R1", "R2")


def random_interpretation(rng: random.Random) -> FiniteInterpretation:
    def subset(atoms):
        return frozenset(a for a in atoms if rng.random() < 0.5)

    pairs = [(a, b) for a in S_ATOMS for b in T_ATOMS]
    return FiniteInterpretation(
        carrier_domains={"S": S_ATOMS, "T": T_ATOMS},
        constant_values={
            "AS": subset(S_ATOMS),
            "BS": subset(S_ATOMS),
            "AT": subset(T_ATOMS),
            "BT": subset(T_ATOMS),
            "aS": rng.choice(S_ATOMS),
            "bS": rng.choice(S_ATOMS),
            "aT": rng.choice(T_ATOMS),
            "bT": rng.choice(T_ATOMS),
            "R1": frozenset(p for p in pairs if rng.random() < 0.5),
            "R2": frozenset(p for p in pairs if rng.random() < 0.5),
        },
    )


class PredicateGen:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.scope: list[tuple[str, str]] = []  # (var name, sort)
        self.counter = 0

    def _fresh(self) -> str:
        self.counter += 1
        return f"v{self.counter}"

    def atom(self, sort: str):
        options = list(ATOM_CONSTS[sort]) + [n for n, s in self.scope if s == sort]
        return Identifier(self.rng.choice(options))

    def set_expr(self, sort: str, depth: int):
        if depth <= 0:
            return Identifier(self.rng.choice(SET_CONSTS[sort]))
        pick = self.rng.randrange(7)
        if pick == 0:
            return Identifier(self.rng.choice(SET_CONSTS[sort]))
        if pick == 1:
            size = self.rng.randrange(3)
            return SetLit(tuple(self.atom(sort) for _ in range(size)))
        if pick == 2:
            return Union((self.set_expr(sort, depth - 1), self.set_expr(sort, depth - 1)))
        if pick == 3:
            return Inter((self.set_expr(sort, depth - 1), self.set_expr(sort, depth - 1)))
        if pick == 4 and sort == "T":
            return Ran(self.rel_expr(depth - 1))
        if pick == 5:
            name = self._fresh()
            domain = self.set_expr(sort, depth - 1)
            self.scope.append((name, sort))
            try:
                pred = self.pred(depth - 1)
            finally:
                self.scope.pop()
            return Comprehension((Binder(name, domain),), pred, Identifier(name))
        name = self._fresh()
        domain = self.set_expr(sort, depth - 1)
        self.scope.append((name, sort))
        try:
            pred = self.pred(depth - 1)
        finally:
            self.scope.pop()
        family = Comprehension((Binder(name, domain),), pred, SetLit((Identifier(name),)))
        return GenUnion(family)

    def rel_expr(self, depth: int):
        if depth <= 0:
            return Identifier(self.rng.choice(REL_CONSTS))
        pick = self.rng.randrange(3)
        if pick == 0:
            return Identifier(self.rng.choice(REL_CONSTS))
        if pick == 1:
            size = self.rng.randrange(3)
            return SetLit(tuple(Maplet(self.atom("S"), self.atom("T")) for _ in range(size)))
        return DomRestrict(self.set_expr("S", depth - 1), self.rel_expr(depth - 1))

    def _leaf_pred(self, depth: int):
        pick = self.rng.randrange(9)
        sort = self.rng.choice(("S", "T"))
        if pick == 0:
            return Member(self.atom(sort), self.set_expr(sort, depth))
        if pick == 1:
            return Member(Maplet(self.atom("S"), self.atom("T")), self.rel_expr(depth))
        if pick == 2:
            return Member(self.set_expr(sort, depth - 1), Pow(self.set_expr(sort, depth - 1)))
        if pick == 3:
            return Member(self.rel_expr(depth - 1), RelSpace(Identifier("S"), Identifier("T")))
        if pick == 4:
            return Subset(self.set_expr(sort, depth), self.set_expr(sort, depth))
        if pick == 5:
            return Equal(self.set_expr(sort, depth), self.set_expr(sort, depth))
        if pick == 6:
            return Equal(self.atom(sort), self.atom(sort))
        if pick == 7:
            return Equal(Pow(self.set_expr(sort, depth - 1)), Pow(self.set_expr(sort, depth - 1)))
        size = self.rng.randrange(3)
        parts = tuple(self.set_expr(sort, depth - 1) for _ in range(size))
        return Partition(self.set_expr(sort, depth), parts)

    def pred(self, depth: int):
        if depth <= 0:
            return self._leaf_pred(0)
        pick = self.rng.randrange(8)
        if pick == 0:
            return And((self.pred(depth - 1), self.pred(depth - 1)))
        if pick == 1:
            return Or((self.pred(depth - 1), self.pred(depth - 1)))
        if pick == 2:
            return Implies(self.pred(depth - 1), self.pred(depth - 1))
        if pick == 3:
            return Iff(self.pred(depth - 1), self.pred(depth - 1))
        if pick in (4, 5):
            quantifier = Forall if pick == 4 else Exists
            count = self.rng.randrange(1, 3)
            binders = []
            pushed = 0
            for _ in range(count):
                sort = self.rng.choice(("S", "T"))
                name = self._fresh()
                binders.append(Binder(name, self.set_expr(sort, depth - 1)))
                self.scope.append((name, sort))
                pushed += 1
            try:
                body = self.pred(depth - 1)
            finally:
                for _ in range(pushed):
                    self.scope.pop()
            return quantifier(tuple(binders), body)
        return self._leaf_pred(depth)


def random_case(seed: int, depth: int = 3):
    rng = random.Random(seed)
    interp = random_interpretation(rng)
    predicate = PredicateGen(rng).pred(depth)
    return predicate, interp
