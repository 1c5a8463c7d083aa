"""The functor Gamma from tangle expressions to cospans of groups.

Each generating tangle goes to a fixed cospan of free groups (below);
composition goes to pushout and tensor product to free product. Middle
generators are namespaced by the position of their node in the expression
tree, so the result does not depend on evaluation order.
"""
from __future__ import annotations

from functools import lru_cache

from . import cospan as cs
from .errors import NotALink
from .presentation import GroupHom, Presentation, Word, canonical_gens, gens
from .tangle import Cap, Compose, Cup, Id, Tensor, Xm, Xp, arity


def _w(*letters):
    return Word(letters)


def gamma_generator(kind) -> cs.Cospan:
    """Image of a generating tangle (``Cup``, ``Cap``, ``Xp`` or ``Xm``).

    Accepts either the node class or an instance.
    """
    return _generator(kind if isinstance(kind, type) else type(kind))


@lru_cache(maxsize=None)
def _generator(kind) -> cs.Cospan:
    if kind in (Cup, Cap):
        (b,) = gens("b", 1)
        mid = Presentation.free([b])
        empty = GroupHom((), mid, ())
        # the two punctures are encircled in opposite directions
        pair = GroupHom(canonical_gens(2), mid, [_w((b, 1)), _w((b, -1))])
        if kind is Cup:
            return cs.Cospan(mid, empty, pair)
        return cs.Cospan(mid, pair, empty)
    if kind in (Xp, Xm):
        b1, b2 = gens("b", 2)
        mid = Presentation.free([b1, b2])
        left = GroupHom(canonical_gens(2), mid, [_w((b1, 1)), _w((b2, 1))])
        if kind is Xp:
            right = [_w((b1, -1), (b2, 1), (b1, 1)), _w((b1, 1))]
        else:
            right = [_w((b2, 1)), _w((b2, 1), (b1, 1), (b2, -1))]
        return cs.Cospan(mid, left, GroupHom(canonical_gens(2), mid, right))
    raise TypeError(f"not a generating tangle: {kind!r}")


def gamma_eval(e, simplify_every_node: bool = False, simplify: bool = False) -> cs.Cospan:
    """Evaluate Gamma on an expression.

    The raw pushout presentation is returned unless ``simplify`` is set;
    ``simplify_every_node`` additionally simplifies every intermediate
    cospan, which keeps presentations small on large inputs.
    """
    arity(e)
    out = _eval(e, simplify_every_node)
    if simplify:
        out = out.simplify()
    return out


def _eval(e, every: bool) -> cs.Cospan:
    if isinstance(e, Id):
        return cs.identity_cospan(e.n)
    if isinstance(e, (Cup, Cap, Xp, Xm)):
        return gamma_generator(type(e))
    left, right = _eval(e.left, every), _eval(e.right, every)
    if isinstance(e, Compose):
        out = cs.compose(left, right)
    elif isinstance(e, Tensor):
        out = cs.tensor(left, right)
    else:
        raise TypeError(f"not a tangle expression: {e!r}")
    if every:
        out = out.simplify()
    return out


def knot_group(e, simplify_every_node: bool = False) -> Presentation:
    """Simplified presentation of the middle group of a closed tangle.

    Both legs start at the trivial group, so they carry no information and
    are dropped. Generators are renamed ``x1, x2, ...``.
    """
    a = arity(e)
    if a != (0, 0):
        raise NotALink(f"knot_group needs a closed tangle (0 -> 0), got {a.m} -> {a.n}")
    c = gamma_eval(e, simplify_every_node=simplify_every_node, simplify=True)
    mid, _ = c.middle.relabeled("x")
    return mid
