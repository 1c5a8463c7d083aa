"""Exact integer matrices: Smith and Hermite normal forms.

All arithmetic uses Python integers, so there is no overflow at any size.
"""
from __future__ import annotations

from typing import Sequence


class IntegerMatrix:
    """An immutable ``nrows x ncols`` matrix of Python ints.

    Dimensions are stored explicitly so that ``0 x k`` and ``k x 0`` matrices
    keep their shape.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Sequence[Sequence[int]], ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntegerMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        return IntegerMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows], other.ncols
        )

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix([list(c) for c in zip(*self.rows)] if self.nrows else [[]] * self.ncols, self.nrows)

    def tolist(self) -> list:
        return [list(r) for r in self.rows]

    def diagonal(self) -> list:
        return [self.rows[i][i] for i in range(min(self.shape))]

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __repr__(self):
        return f"IntegerMatrix({self.tolist()!r}, ncols={self.ncols})"


def smith_normal_form(m: IntegerMatrix):
    """Return ``(U, D, V)`` with ``U @ m @ V == D``.

    ``D`` is diagonal with nonnegative entries ``d1 | d2 | ...`` and ``U``,
    ``V`` are unimodular. Pivots are chosen by least absolute value.
    """
    r, c = m.shape
    a = [list(row) for row in m.rows]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        ad, asrc = a[dst], a[src]
        for k in range(c):
            ad[k] += q * asrc[k]
        ud, us = u[dst], u[src]
        for k in range(r):
            ud[k] += q * us[k]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(r, c)):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            for i in range(t + 1, r):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, c):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            rest = [(abs(a[i][t]), i, None) for i in range(t + 1, r) if a[i][t]]
            rest += [(abs(a[t][j]), None, j) for j in range(t + 1, c) if a[t][j]]
            if rest:
                _, i, j = min(rest, key=lambda x: x[0])
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                ((i, j) for i in range(t + 1, r) for j in range(t + 1, c) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return IntegerMatrix(u, r), IntegerMatrix(a, c), IntegerMatrix(v, c)


def left_kernel(m: IntegerMatrix) -> IntegerMatrix:
    """A basis (as rows) of the integer lattice ``{x : x @ m == 0}``."""
    u, d, _ = smith_normal_form(m)
    rank = sum(1 for x in d.diagonal() if x)
    return IntegerMatrix(u.rows[rank:], m.nrows)


def hermite_normal_form(m: IntegerMatrix) -> IntegerMatrix:
    """Row-style Hermite normal form of the lattice spanned by the rows.

    Zero rows are dropped; the result is a canonical basis, so two matrices
    span the same lattice iff their HNFs are equal.
    """
    a = [list(row) for row in m.rows]
    ncols = m.ncols
    out = []
    col = 0
    while a and col < ncols:
        nz = [row for row in a if row[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda row: abs(row[col]))
            piv = nz[0]
            for row in nz[1:]:
                q = row[col] // piv[col]
                for k in range(ncols):
                    row[k] -= q * piv[k]
            nz = [row for row in nz if row[col]]
        piv = nz[0]
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        a = [row for row in a if row is not piv and any(row)]
        out.append(piv)
        col += 1
    # reduce entries above pivots
    for i, row in enumerate(out):
        pc = next(k for k, x in enumerate(row) if x)
        for prev in out[:i]:
            q = prev[pc] // row[pc]
            if q:
                for k in range(ncols):
                    prev[k] -= q * row[k]
    return IntegerMatrix(out, ncols)
