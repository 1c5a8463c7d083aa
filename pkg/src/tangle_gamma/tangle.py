"""Tangle expressions: AST, arity checking and strand connectivity.

``Compose(a, b)`` means "``a`` then ``b``": the upper endpoints of ``a`` are
glued to the lower endpoints of ``b``. ``Tensor(a, b)`` places ``b`` to the
right of ``a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .errors import ArityMismatch, UnknownBuiltin


@dataclass(frozen=True)
class Id:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("id arity must be nonnegative")


@dataclass(frozen=True)
class Cup:
    pass


@dataclass(frozen=True)
class Cap:
    pass


@dataclass(frozen=True)
class Xp:
    pass


@dataclass(frozen=True)
class Xm:
    pass


@dataclass(frozen=True)
class Compose:
    left: "TangleExpr"
    right: "TangleExpr"
    loc: tuple | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Tensor:
    left: "TangleExpr"
    right: "TangleExpr"
    loc: tuple | None = field(default=None, compare=False, repr=False)


TangleExpr = Union[Id, Cup, Cap, Xp, Xm, Compose, Tensor]
ATOMS = (Cup, Cap, Xp, Xm)


class Arity(NamedTuple):
    m: int
    n: int


_ATOM_ARITY = {Cup: Arity(0, 2), Cap: Arity(2, 0), Xp: Arity(2, 2), Xm: Arity(2, 2)}


def arity(e: TangleExpr, _path=()) -> Arity:
    if isinstance(e, Id):
        return Arity(e.n, e.n)
    a = _ATOM_ARITY.get(type(e))
    if a is not None:
        return a
    left = arity(e.left, _path + (0,))
    right = arity(e.right, _path + (1,))
    if isinstance(e, Tensor):
        return Arity(left.m + right.m, left.n + right.n)
    if left.n != right.m:
        raise ArityMismatch(
            f"cannot compose {left.m}->{left.n} with {right.m}->{right.n}",
            position=_path,
            location=e.loc,
        )
    return Arity(left.m, right.n)


def node_count(e: TangleExpr) -> int:
    if isinstance(e, (Compose, Tensor)):
        return 1 + node_count(e.left) + node_count(e.right)
    return 1


def compose_all(*parts: TangleExpr) -> TangleExpr:
    out = parts[0]
    for p in parts[1:]:
        out = Compose(out, p)
    return out


def tensor_all(*parts: TangleExpr) -> TangleExpr:
    out = parts[0]
    for p in parts[1:]:
        out = Tensor(out, p)
    return out


# --- connectivity -----------------------------------------------------------

LOWER, UPPER = "lower", "upper"


@dataclass(frozen=True)
class Connectivity:
    """Which boundary endpoints are joined by arcs, plus the closed loop count.

    Endpoints are ``("lower", i)`` for ``i = 1..m`` and ``("upper", j)`` for
    ``j = 1..n``; ``pairing`` maps every endpoint to its partner.
    """

    m: int
    n: int
    pairing: dict
    loops: int

    def __hash__(self):
        return hash((self.m, self.n, tuple(sorted(self.pairing.items())), self.loops))

    def partner(self, end):
        return self.pairing[end]

    @property
    def arcs(self) -> int:
        return (self.m + self.n) // 2

    def pairs(self) -> list:
        return sorted({tuple(sorted((a, b))) for a, b in self.pairing.items()})


def _generator_pairing(e) -> dict:
    if isinstance(e, Cup):
        pairs = [((UPPER, 1), (UPPER, 2))]
    elif isinstance(e, Cap):
        pairs = [((LOWER, 1), (LOWER, 2))]
    else:  # crossings transpose the two strands
        pairs = [((LOWER, 1), (UPPER, 2)), ((LOWER, 2), (UPPER, 1))]
    out = {}
    for a, b in pairs:
        out[a], out[b] = b, a
    return out


def _compose_connectivity(c1: Connectivity, c2: Connectivity) -> Connectivity:
    # glue c1's upper j to c2's lower j and walk
    def walk(side, end):
        while True:
            if side == 1:
                end = c1.pairing[end]
                if end[0] == LOWER:
                    return (LOWER, end[1])
                side, end = 2, (LOWER, end[1])
            else:
                end = c2.pairing[end]
                if end[0] == UPPER:
                    return (UPPER, end[1])
                side, end = 1, (UPPER, end[1])

    pairing = {}
    for i in range(1, c1.m + 1):
        pairing[(LOWER, i)] = walk(1, (LOWER, i))
    for j in range(1, c2.n + 1):
        pairing[(UPPER, j)] = walk(2, (UPPER, j))

    # interface points not reached from the boundary lie on new closed loops
    touched = set()

    def mark(side, end):
        # follow from an outer endpoint, recording interface indices crossed
        while True:
            if side == 1:
                end = c1.pairing[end]
                if end[0] == LOWER:
                    return
                touched.add(end[1])
                side, end = 2, (LOWER, end[1])
            else:
                end = c2.pairing[end]
                if end[0] == UPPER:
                    return
                touched.add(end[1])
                side, end = 1, (UPPER, end[1])

    for i in range(1, c1.m + 1):
        mark(1, (LOWER, i))
    for j in range(1, c2.n + 1):
        mark(2, (UPPER, j))
    new_loops = 0
    for k in range(1, c1.n + 1):
        if k in touched:
            continue
        new_loops += 1
        # walk the cycle through interface point k
        cur = k
        while cur not in touched:
            touched.add(cur)
            nxt = c2.pairing[(LOWER, cur)][1]  # stays on the interface
            touched.add(nxt)
            cur = c1.pairing[(UPPER, nxt)][1]
    return Connectivity(c1.m, c2.n, pairing, c1.loops + c2.loops + new_loops)


def _tensor_connectivity(c1: Connectivity, c2: Connectivity) -> Connectivity:
    pairing = dict(c1.pairing)
    shift = {LOWER: c1.m, UPPER: c1.n}
    for (sa, ia), (sb, ib) in c2.pairing.items():
        pairing[(sa, ia + shift[sa])] = (sb, ib + shift[sb])
    return Connectivity(c1.m + c2.m, c1.n + c2.n, pairing, c1.loops + c2.loops)


def connectivity(e: TangleExpr) -> Connectivity:
    """Boundary pairing and number of closed loops of an expression."""
    arity(e)
    return _connectivity(e)


def _connectivity(e) -> Connectivity:
    if isinstance(e, Id):
        pairing = {}
        for i in range(1, e.n + 1):
            pairing[(LOWER, i)] = (UPPER, i)
            pairing[(UPPER, i)] = (LOWER, i)
        return Connectivity(e.n, e.n, pairing, 0)
    if isinstance(e, ATOMS):
        a = _ATOM_ARITY[type(e)]
        return Connectivity(a.m, a.n, _generator_pairing(e), 0)
    left, right = _connectivity(e.left), _connectivity(e.right)
    if isinstance(e, Tensor):
        return _tensor_connectivity(left, right)
    return _compose_connectivity(left, right)


def components(e: TangleExpr) -> int:
    """Number of connected components: arcs plus closed loops."""
    c = connectivity(e)
    return c.arcs + c.loops


# --- built-in corpus ----------------------------------------------------------

_BUILTIN_SOURCES = {
    "unknot": "cup ; cap",
    "unlink2": "(cup ; cap) * (cup ; cap)",
    "hopf": (
        "cup ; id(1) * cup * id(1) ; id(2) * x+ ; id(2) * x+"
        " ; id(1) * cap * id(1) ; cap"
    ),
    "trefoil": (
        "cup ; id(1) * cup * id(1) ; id(2) * x+ ; id(2) * x+ ; id(2) * x+"
        " ; id(1) * cap * id(1) ; cap"
    ),
    "figure8": (
        "cup ; id(1) * cup * id(1) ; id(2) * cup * id(2)"
        " ; id(3) * x+ * id(1) ; id(4) * x- ; id(3) * x+ * id(1) ; id(4) * x-"
        " ; id(2) * cap * id(2) ; id(1) * cap * id(1) ; cap"
    ),
}

BUILTIN_NAMES = tuple(_BUILTIN_SOURCES)


def builtin_source(name: str) -> str:
    try:
        return _BUILTIN_SOURCES[name]
    except KeyError:
        raise UnknownBuiltin(name) from None


def builtin(name: str) -> TangleExpr:
    """A closed braid from the built-in corpus, e.g. ``builtin("trefoil")``."""
    from .dsl import parse

    return parse(builtin_source(name))
