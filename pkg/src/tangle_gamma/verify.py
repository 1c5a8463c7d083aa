"""Machine checks: Gamma respects the tangle relations, and the
abelianization of a tangle group is free of rank (m+n)/2 + loops.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .abelian import AbelianInvariants, abelianize
from .cospan import DEFAULT_BUDGET, IsoVerdict, iso_check
from .gamma import gamma_eval
from .tangle import (
    Cap,
    Compose,
    Cup,
    Id,
    Tensor,
    Xm,
    Xp,
    arity,
    compose_all,
    connectivity,
)


@dataclass(frozen=True)
class RelationCase:
    id: str
    lhs: object
    rhs: object

    def __post_init__(self):
        if arity(self.lhs) != arity(self.rhs):
            raise ValueError(f"relation {self.id}: sides have different arities")


def relation_cases() -> list:
    """The defining relations of the tangle category, written diagrammatically.

    T1 is the Reidemeister I move, so its right-hand side is ``id(1)``.
    """
    one = Id(1)
    cases = [
        RelationCase("T0a", Compose(Tensor(Cup(), one), Tensor(one, Cap())), one),
        RelationCase("T0b", Compose(Tensor(one, Cup()), Tensor(Cap(), one)), one),
    ]
    for sign, x, y in (("+", Xp, Xm), ("-", Xm, Xp)):
        cases.append(RelationCase(
            f"T0'{sign}",
            Compose(Tensor(one, Cup()), Tensor(x(), one)),
            Compose(Tensor(Cup(), one), Tensor(one, y())),
        ))
    for sign, x, y in (("+", Xp, Xm), ("-", Xm, Xp)):
        cases.append(RelationCase(
            f"T0''{sign}",
            Compose(Tensor(x(), one), Tensor(one, Cap())),
            Compose(Tensor(one, y()), Tensor(Cap(), one)),
        ))
    for sign, x in (("+", Xp), ("-", Xm)):
        cases.append(RelationCase(
            f"T1{sign}",
            compose_all(Tensor(one, Cup()), Tensor(x(), one), Tensor(one, Cap())),
            one,
        ))
    cases.append(RelationCase("T2a", Compose(Xp(), Xm()), Id(2)))
    cases.append(RelationCase("T2b", Compose(Xm(), Xp()), Id(2)))
    a, b = Tensor(Xp(), one), Tensor(one, Xp())
    cases.append(RelationCase("T3", compose_all(a, b, a), compose_all(b, a, b)))
    return cases


@dataclass
class VerificationReport:
    case_id: str
    verdict: IsoVerdict
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.verdict.is_equal

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "case": self.case_id,
            "verdict": str(self.verdict.verdict),
            "invariant": self.verdict.invariant,
            "detail": self.verdict.detail,
            "witness": self.verdict.witness.to_json() if self.verdict.witness else None,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def check_relation(case: RelationCase, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    start = time.perf_counter()
    verdict = iso_check(gamma_eval(case.lhs), gamma_eval(case.rhs), budget)
    return VerificationReport(case.id, verdict, time.perf_counter() - start)


def check_all_relations(budget: int = DEFAULT_BUDGET) -> list:
    return [check_relation(c, budget) for c in relation_cases()]


@dataclass(frozen=True)
class RankReport:
    m: int
    n: int
    loops: int
    invariants: AbelianInvariants

    @property
    def expected_rank(self) -> int:
        return (self.m + self.n) // 2 + self.loops

    @property
    def holds(self) -> bool:
        return self.invariants.free_rank == self.expected_rank and not self.invariants.torsion


def check_abelianization_theorem(e) -> tuple[bool, RankReport]:
    """Compare the abelianized middle group with (m+n)/2 + loops."""
    a = arity(e)
    report = RankReport(a.m, a.n, connectivity(e).loops, abelianize(gamma_eval(e).middle))
    return report.holds, report


# --- random expressions ---------------------------------------------------------


def _atom(rng):
    k = rng.randrange(5)
    if k == 0:
        return Id(rng.randint(0, 2))
    return (Cup, Cap, Xp, Xm)[k - 1]()


def _gen(rng, budget):
    if budget < 3 or rng.random() < 0.1:
        return _atom(rng)
    if rng.random() < 0.4:
        k = rng.randint(1, budget - 2)
        return Tensor(_gen(rng, k), _gen(rng, budget - 1 - k))
    # leave room for one padding Tensor(., Id(d))
    if budget < 5:
        return _atom(rng)
    k = rng.randint(1, budget - 4)
    left, right = _gen(rng, k), _gen(rng, budget - 3 - k)
    return Compose(*pad(left, right))


def pad(left, right):
    """Widen the narrower side so that ``left ; right`` is valid.

    A gap of two is filled with a cup (or cap), which closes loops when it
    meets the other side; other gaps with an identity.
    """
    d = arity(right).m - arity(left).n
    if d == 2:
        left = Tensor(left, Cup())
    elif d == -2:
        right = Tensor(right, Cap())
    elif d > 0:
        left = Tensor(left, Id(d))
    elif d < 0:
        right = Tensor(right, Id(-d))
    return left, right


def random_expr(seed: int, max_nodes: int):
    """Seeded random arity-valid expression with at most ``max_nodes`` nodes.

    Built like the induction over tangles: atoms, closed under composition
    and tensor product.
    """
    if max_nodes < 1:
        raise ValueError("max_nodes must be >= 1")
    return _gen(random.Random(seed), max_nodes)


def random_composable(rng: random.Random, count: int, max_nodes: int = 3) -> list:
    """``count`` expressions, each composable with the next (after padding)."""
    exprs = [_gen(rng, max_nodes)]
    for _ in range(count - 1):
        nxt = _gen(rng, max_nodes)
        prev, nxt = pad(exprs[-1], nxt)
        exprs[-1] = prev
        # padding the previous one may break its own left neighbour
        for i in range(len(exprs) - 1, 0, -1):
            a, b = pad(exprs[i - 1], exprs[i])
            if (a, b) == (exprs[i - 1], exprs[i]):
                break
            exprs[i - 1], exprs[i] = a, b
        exprs.append(nxt)
    return exprs
