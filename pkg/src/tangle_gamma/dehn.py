"""A one-sided test for triviality of words in presented groups.

``provably_trivial`` only answers True when it has a derivation: free and
cyclic reduction plus Dehn-style replacements, each of which substitutes
more than half of a relator by the inverse of its remainder. False means
"no proof found", never "nontrivial".
"""
from __future__ import annotations

from functools import lru_cache

from .presentation import Presentation, Word, cyclic_reduce, rotations


@lru_cache(maxsize=512)
def symmetrized_relators(p: Presentation) -> tuple:
    out = set()
    for r in p.relators:
        r = cyclic_reduce(r)
        for base in (r, r.inverse()):
            for rot in rotations(base):
                out.add(rot.letters)
    return tuple(sorted(out, key=lambda x: (-len(x), x)))


def provably_trivial(w: Word, p: Presentation, max_rounds: int = 10_000) -> bool:
    w = cyclic_reduce(w)
    if not w:
        return True
    rels = symmetrized_relators(p)
    if not rels:
        return False
    for _ in range(max_rounds):
        a = w.letters
        n = len(a)
        replaced = None
        for s in range(n):
            rot = a[s:] + a[:s]
            for r in rels:
                k = 0
                lim = min(n, len(r))
                while k < lim and rot[k] == r[k]:
                    k += 1
                if 2 * k > len(r):
                    tail = Word._trusted(r[k:]).inverse()
                    replaced = tail * Word._trusted(rot[k:])
                    break
            if replaced is not None:
                break
        if replaced is None:
            return False
        w = cyclic_reduce(replaced)
        if not w:
            return True
    return False


def provably_equal(u: Word, v: Word, p: Presentation) -> bool:
    return provably_trivial(u * v.inverse(), p)
