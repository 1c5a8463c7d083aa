"""Finite groups as multiplication tables, and homomorphism counting.

Counting homomorphisms from a presented group into a fixed finite group is
an isomorphism invariant that is exactly computable, which makes it the
main oracle for telling presented groups apart.
"""
from __future__ import annotations

import itertools
import json
from typing import Iterator, Sequence

from .errors import InvalidGroupTable
from .presentation import Presentation, Word


class FiniteGroup:
    """A finite group on elements ``0..order-1``; ``table[i][j] = i*j``."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = "G"):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.name = name
        self.order = len(self.table)
        self._validate()
        self.identity = next(
            e for e in range(self.order) if all(self.table[e][x] == x for x in range(self.order))
        )
        self.inverse = tuple(
            next(y for y in range(self.order) if self.table[x][y] == self.identity)
            for x in range(self.order)
        )

    def _validate(self):
        n = self.order
        t = self.table
        if n == 0:
            raise InvalidGroupTable("empty table")
        if any(len(row) != n for row in t):
            raise InvalidGroupTable("table is not square")
        if any(not 0 <= x < n for row in t for x in row):
            raise InvalidGroupTable("table entry out of range")
        ids = [e for e in range(n) if all(t[e][x] == x and t[x][e] == x for x in range(n))]
        if not ids:
            raise InvalidGroupTable("no two-sided identity")
        e = ids[0]
        for x in range(n):
            if not any(t[x][y] == e and t[y][x] == e for y in range(n)):
                raise InvalidGroupTable(f"element {x} has no inverse")
        for x, y, z in itertools.product(range(n), repeat=3):
            if t[t[x][y]][z] != t[x][t[y][z]]:
                raise InvalidGroupTable(f"not associative at ({x}, {y}, {z})")

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def evaluate(self, w: Word, assignment: dict) -> int:
        t, inv = self.table, self.inverse
        v = self.identity
        for g, e in w:
            x = assignment[g]
            v = t[v][x if e == 1 else inv[x]]
        return v

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    @classmethod
    def from_permutations(cls, perms, name="G") -> "FiniteGroup":
        perms = [tuple(p) for p in perms]
        index = {p: i for i, p in enumerate(perms)}
        table = [[index[tuple(p[q[k]] for k in range(len(q)))] for q in perms] for p in perms]
        return cls(table, name)

    @classmethod
    def from_json(cls, data, name="custom") -> "FiniteGroup":
        if isinstance(data, str):
            data = json.loads(data)
        table = data["table"]
        if data.get("order", len(table)) != len(table):
            raise InvalidGroupTable("'order' does not match the table size")
        return cls(table, name)


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], f"Z{n}")


def symmetric_group(n: int) -> FiniteGroup:
    # table[i][j] is the permutation "apply j, then i"
    return FiniteGroup.from_permutations(sorted(itertools.permutations(range(n))), f"S{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n."""
    rots = [tuple((k + r) % n for k in range(n)) for r in range(n)]
    refl = [tuple((r - k) % n for k in range(n)) for r in range(n)]
    return FiniteGroup.from_permutations(rots + refl, f"D{n}")


def builtin_group(name: str) -> FiniteGroup:
    """One of the shipped targets: S3, Z2, Z3, Z4, D4."""
    makers = {
        "S3": lambda: symmetric_group(3),
        "Z2": lambda: cyclic_group(2),
        "Z3": lambda: cyclic_group(3),
        "Z4": lambda: cyclic_group(4),
        "D4": lambda: dihedral_group(4),
    }
    key = name.upper().replace("/", "")
    if key not in makers:
        raise KeyError(f"unknown group {name!r}; choose from {sorted(makers)}")
    return makers[key]()


BUILTIN_GROUPS = ("S3", "Z2", "Z3", "Z4", "D4")


def iter_homs(p: Presentation, group: FiniteGroup) -> Iterator[dict]:
    """Yield every assignment generators -> elements killing all relators.

    Backtracking over generators in order. A relator is checked as soon as
    all its generators are assigned, and a relator with a single unassigned
    generator occurring once forces that generator's value.
    """
    gens = p.generators
    t, inv, e = group.table, group.inverse, group.identity
    rels = [(r, frozenset(r.generators())) for r in p.relators]
    n = group.order

    def prefix_value(letters, assignment):
        v = e
        for g, s in letters:
            x = assignment[g]
            v = t[v][x if s == 1 else inv[x]]
        return v

    def propagate(assignment):
        changed = True
        while changed:
            changed = False
            for r, gs in rels:
                missing = [g for g in gs if g not in assignment]
                if not missing:
                    if prefix_value(r.letters, assignment) != e:
                        return False
                    continue
                if len(missing) > 1:
                    continue
                x = missing[0]
                if r.count(x) != 1:
                    continue
                k = next(i for i, (g, _) in enumerate(r.letters) if g == x)
                before = prefix_value(r.letters[:k], assignment)
                after = prefix_value(r.letters[k + 1:], assignment)
                # before * x^s * after = 1
                val = t[inv[before]][inv[after]]
                assignment[x] = val if r.letters[k][1] == 1 else inv[val]
                changed = True
        return True

    def search(assignment):
        if not propagate(assignment):
            return
        free = next((g for g in gens if g not in assignment), None)
        if free is None:
            yield dict(assignment)
            return
        for x in range(n):
            trial = dict(assignment)
            trial[free] = x
            yield from search(trial)

    yield from search({})


def count_homs(p: Presentation, group: FiniteGroup) -> int:
    return sum(1 for _ in iter_homs(p, group))
