"""Abelianization of presented groups and of boundary legs."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .presentation import Gen, GroupHom, Presentation, Word
from .smith import IntegerMatrix, hermite_normal_form, left_kernel, smith_normal_form


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z/t1 + Z/t2 + ...`` with ``t1 | t2 | ...``."""

    free_rank: int
    torsion: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def exponent_vector(w: Word, generators: Sequence[Gen]) -> list:
    index = {g: i for i, g in enumerate(generators)}
    v = [0] * len(generators)
    for g, e in w:
        v[index[g]] += e
    return v


def exponent_matrix(p: Presentation) -> IntegerMatrix:
    """Relator-by-generator matrix of exponent sums."""
    return IntegerMatrix([exponent_vector(r, p.generators) for r in p.relators], len(p.generators))


def invariants_from_diagonal(ngens: int, diag) -> AbelianInvariants:
    rank = sum(1 for d in diag if d)
    return AbelianInvariants(ngens - rank, tuple(d for d in diag if d > 1))


def abelianize(p: Presentation) -> AbelianInvariants:
    _, d, _ = smith_normal_form(exponent_matrix(p))
    return invariants_from_diagonal(len(p.generators), d.diagonal())


def leg_kernel(middle: Presentation, legs: Sequence[GroupHom]) -> IntegerMatrix:
    """HNF basis of the boundary vectors that die in the abelianized middle.

    The boundary generators of all legs are concatenated in order; a vector
    ``x`` is in the kernel when the sum of ``x_i`` times the abelianized image
    of boundary generator ``i`` lies in the relator lattice. This lattice does
    not depend on the chosen presentation of the middle group, only on the
    isomorphism class of the cospan.
    """
    gens = middle.generators
    rows = [exponent_vector(img, gens) for leg in legs for img in leg.images]
    nb = len(rows)
    rows += exponent_matrix(middle).tolist()
    if not rows:
        return IntegerMatrix([], 0)
    kern = left_kernel(IntegerMatrix(rows, len(gens)))
    projected = IntegerMatrix([r[:nb] for r in kern.rows], nb)
    return hermite_normal_form(projected)
