"""Deterministic Tietze simplification of presentations.

Homomorphisms into the presentation being simplified are carried along, so
that cospan legs stay valid after generators are eliminated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .presentation import GroupHom, Presentation, Word, cyclic_key, cyclic_reduce

DEFAULT_PASS_LIMIT = 100


@dataclass(frozen=True)
class TietzeMove:
    kind: str  # drop-trivial | drop-duplicate | eliminate | rebase
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


@dataclass
class SimplificationTrace:
    moves: list = field(default_factory=list)
    passes: int = 0

    def record(self, kind, detail):
        self.moves.append(TietzeMove(kind, detail))

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def counts(self) -> dict:
        out: dict = {}
        for m in self.moves:
            out[m.kind] = out.get(m.kind, 0) + 1
        return out


def _split_at(w: Word, g):
    """Write ``w = u g^s v`` for the unique occurrence of ``g``."""
    k = next(i for i, (h, _) in enumerate(w.letters) if h == g)
    return Word._trusted(w.letters[:k]), w.letters[k][1], Word._trusted(w.letters[k + 1:])


def tietze_simplify(
    p: Presentation,
    transported: Sequence[GroupHom] = (),
    pass_limit: int = DEFAULT_PASS_LIMIT,
):
    """Simplify ``p`` to a fixpoint of elementary Tietze moves.

    Moves, in priority order:

    1. cyclically reduce relators and drop trivial ones;
    2. drop relators equal to another up to rotation and inversion;
    3. eliminate a generator occurring exactly once in some relator,
       substituting its expression everywhere (shortest relator first);
    4. rebase: when a transported image ``u x^s v`` is not a single letter,
       replace ``x`` by the new generator ``u x^s v`` (same name), so the
       image becomes one letter.

    A generator that is the single-letter image of a generator of the k-th
    transported hom is only eliminated through a length-2 relator, or
    through a relator all of whose other generators are single-letter
    images of an earlier hom. Earlier homs thus keep short images, which
    makes simplified cospans comparable.

    Returns ``(presentation, homs, trace)``; ``homs`` are the transported homs
    composed with the isomorphism onto the new presentation.
    """
    for h in transported:
        if h.target != p:
            raise ValueError("transported hom does not target the presentation")
    gens = list(p.generators)
    rels = list(p.relators)
    images = [list(h.images) for h in transported]
    trace = SimplificationTrace()

    def substitute(mapping):
        nonlocal rels
        rels = [r.substitute(mapping) for r in rels]
        for imgs in images:
            imgs[:] = [w.substitute(mapping) for w in imgs]

    for n_pass in range(1, pass_limit + 1):
        trace.passes = n_pass
        changed = False

        reduced = []
        for r in rels:
            c = cyclic_reduce(r)
            if not c:
                trace.record("drop-trivial", str(r))
                changed = True
            else:
                reduced.append(c)
        rels = reduced

        seen = set()
        unique = []
        for r in rels:
            key = cyclic_key(r)
            if key in seen:
                trace.record("drop-duplicate", str(r))
                changed = True
            else:
                seen.add(key)
                unique.append(r)
        rels = unique

        position = {g: i for i, g in enumerate(gens)}
        level = {}
        for k, imgs in enumerate(images):
            for w in imgs:
                if len(w) == 1:
                    level.setdefault(w.letters[0][0], k)
        protected = set(level)

        best = None
        for ri, r in enumerate(rels):
            rgens = r.generators()
            for g in rgens:
                if r.count(g) != 1:
                    continue
                guarded = g in protected
                if guarded and len(r) != 2:
                    others = [level.get(h, len(images)) for h in rgens if h != g]
                    if not others or max(others) >= level[g]:
                        continue
                key = (len(r), guarded, -position[g], ri)
                if best is None or key < best[0]:
                    best = (key, ri, g)
        if best is not None:
            _, ri, g = best
            r = rels.pop(ri)
            u, s, v = _split_at(r, g)
            # u g^s v = 1  =>  g^s = u^-1 v^-1
            expr = u.inverse() * v.inverse()
            if s == -1:
                expr = expr.inverse()
            gens.remove(g)
            substitute({g: expr})
            trace.record("eliminate", f"{g} = {expr} from relator {r}")
            continue

        rebased = False
        for imgs in images:
            for w in imgs:
                if len(w) < 2:
                    continue
                cands = [g for g in gens if g not in protected and w.count(g) == 1]
                if not cands:
                    continue
                x = cands[-1]
                u, s, v = _split_at(w, x)
                if s == 1:
                    expr = u.inverse() * Word.of(x) * v.inverse()
                else:
                    expr = v * Word.of(x, -1) * u
                substitute({x: expr})
                trace.record("rebase", f"{x} := {w}")
                rebased = True
                break
            if rebased:
                break
        if not (changed or rebased):
            break

    result = Presentation(gens, rels)
    homs = [GroupHom(h.source, result, imgs) for h, imgs in zip(transported, images)]
    return result, homs, trace
