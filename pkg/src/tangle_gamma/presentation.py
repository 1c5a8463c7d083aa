"""Words, finitely presented groups and homomorphisms between them.

Generators are namespaced symbols (:class:`Gen`). Every structural
operation that merges presentations (free products, pushouts) prefixes the
namespace of each side with a tag, so merged generator sets are always
disjoint and the names record where a generator came from.

Text form of a presentation::

    < b1, b2 | b1 b2 b1^-1 b2^-1 >

JSON form::

    {"generators": ["b1", "b2"], "relators": [[["b1", 1], ["b2", 1], ...]]}
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SourceMismatch, TangleSyntaxError, UnknownGenerator

_NAME_RE = re.compile(r"^([A-Za-z0-9_.]*[A-Za-z_.])(\d+)$")


@dataclass(frozen=True, order=True)
class Gen:
    """A generator symbol: namespace tag plus index, printed as ``tag + index``.

    The tag must not end in a digit so the printed name parses back
    unambiguously.
    """

    tag: str
    index: int

    def __str__(self):
        return f"{self.tag}{self.index}"

    __repr__ = __str__

    def under(self, prefix: str) -> "Gen":
        return Gen(f"{prefix}.{self.tag}", self.index)

    @classmethod
    def parse(cls, name: str) -> "Gen":
        m = _NAME_RE.match(name)
        if m is None:
            raise ValueError(f"malformed generator name {name!r}")
        return cls(m.group(1), int(m.group(2)))


def gens(tag: str, count: int, start: int = 1) -> tuple[Gen, ...]:
    return tuple(Gen(tag, i) for i in range(start, start + count))


def canonical_gens(k: int) -> tuple[Gen, ...]:
    """The fixed boundary generators p1..pk of the free group F_k."""
    return gens("p", k)


Letter = tuple  # (Gen, +1 | -1)


def _reduce(letters: Iterable[Letter]) -> tuple:
    out: list = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


class Word:
    """A freely reduced word in signed generator letters.

    Instances are immutable; the constructor always reduces, so two words
    are equal as Python objects iff they are the same free-group element.
    """

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        letters = tuple(letters)
        for letter in letters:
            if letter[1] not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {letter[1]!r}")
        self.letters = _reduce(letters)
        self._hash = None

    @classmethod
    def _trusted(cls, letters: tuple) -> "Word":
        w = cls.__new__(cls)
        w.letters = letters
        w._hash = None
        return w

    @classmethod
    def of(cls, g: Gen, power: int = 1) -> "Word":
        e = 1 if power >= 0 else -1
        return cls._trusted(((g, e),) * abs(power))

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    def __mul__(self, other: "Word") -> "Word":
        a, b = self.letters, other.letters
        i = 0
        n = min(len(a), len(b))
        while i < n and a[-1 - i][0] == b[i][0] and a[-1 - i][1] == -b[i][1]:
            i += 1
        return Word._trusted(a[: len(a) - i] + b[i:])

    def inverse(self) -> "Word":
        return Word._trusted(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        out = _IDENTITY
        for _ in range(abs(k)):
            out = out * base
        return out

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __lt__(self, other):
        return self.letters < other.letters

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def count(self, g: Gen) -> int:
        """Number of occurrences of ``g`` or its inverse."""
        return sum(1 for h, _ in self.letters if h == g)

    def exponent_sum(self, g: Gen) -> int:
        return sum(e for h, e in self.letters if h == g)

    def substitute(self, mapping: dict) -> "Word":
        """Replace each generator in ``mapping`` by the given word."""
        out: list = []
        for g, e in self.letters:
            img = mapping.get(g)
            if img is None:
                out.append((g, e))
            else:
                out.extend(img.letters if e == 1 else img.inverse().letters)
        return Word(out)

    def rename(self, mapping: dict) -> "Word":
        return Word._trusted(tuple((mapping.get(g, g), e) for g, e in self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(str(g) if e == 1 else f"{g}^-1" for g, e in self.letters)

    def __repr__(self):
        return f"Word({self})"

    def to_json(self) -> list:
        return [[str(g), e] for g, e in self.letters]

    @classmethod
    def from_json(cls, data) -> "Word":
        return cls((Gen.parse(name), int(e)) for name, e in data)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse whitespace separated ``g`` / ``g^k`` tokens; ``1`` is the identity."""
        text = text.strip()
        if text in ("", "1"):
            return _IDENTITY
        letters = []
        for tok in text.split():
            name, _, power = tok.partition("^")
            k = int(power) if power else 1
            g = Gen.parse(name)
            letters.extend([(g, 1 if k > 0 else -1)] * abs(k))
        return cls(letters)


_IDENTITY = Word._trusted(())


def free_reduce(letters: Iterable[Letter]) -> Word:
    return Word(letters)


def cyclic_reduce(w: Word) -> Word:
    """Strip inverse letter pairs from the two ends of ``w``."""
    a = w.letters
    i, j = 0, len(a)
    while j - i >= 2 and a[i][0] == a[j - 1][0] and a[i][1] == -a[j - 1][1]:
        i += 1
        j -= 1
    return Word._trusted(a[i:j])


def rotations(w: Word):
    a = w.letters
    for i in range(len(a)):
        yield Word._trusted(a[i:] + a[:i])


def cyclic_key(w: Word) -> tuple:
    """Canonical key of a cyclic word up to rotation and inversion."""
    w = cyclic_reduce(w)
    if not w:
        return ()
    return min(min(r.letters for r in rotations(w)), min(r.letters for r in rotations(w.inverse())))


class Presentation:
    """A finitely presented group ``< generators | relators >``.

    Relators are stored freely reduced; empty relators are dropped.
    """

    __slots__ = ("generators", "relators", "_index")

    def __init__(self, generators: Sequence[Gen] = (), relators: Iterable[Word] = ()):
        self.generators = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generators in presentation")
        self._index = {g: i for i, g in enumerate(self.generators)}
        rels = []
        for r in relators:
            if not isinstance(r, Word):
                r = Word(r)
            if not r:
                continue
            for g in r.generators():
                if g not in self._index:
                    raise UnknownGenerator(g)
            rels.append(r)
        self.relators = tuple(rels)

    @classmethod
    def free(cls, generators: Sequence[Gen]) -> "Presentation":
        return cls(generators, ())

    @classmethod
    def trivial(cls) -> "Presentation":
        return cls((), ())

    def __contains__(self, g):
        return g in self._index

    def index(self, g: Gen) -> int:
        return self._index[g]

    @property
    def is_free(self) -> bool:
        return not self.relators

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and self.generators == other.generators
            and self.relators == other.relators
        )

    def __hash__(self):
        return hash((self.generators, self.relators))

    def size(self) -> tuple[int, int]:
        return len(self.generators), len(self.relators)

    def rename(self, mapping: dict) -> "Presentation":
        return Presentation(
            [mapping.get(g, g) for g in self.generators],
            [r.rename(mapping) for r in self.relators],
        )

    def relabeled(self, tag: str = "x") -> tuple["Presentation", dict]:
        """Rename generators to ``tag1, tag2, ...`` in order; returns the map too."""
        mapping = {g: Gen(tag, i + 1) for i, g in enumerate(self.generators)}
        return self.rename(mapping), mapping

    # serialization
    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Presentation({self.to_text()})"

    def to_text(self) -> str:
        gs = ", ".join(str(g) for g in self.generators)
        rs = ", ".join(str(r) for r in self.relators)
        left = f"< {gs} " if gs else "< "
        right = f" {rs} >" if rs else " >"
        return f"{left}|{right}"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        s = text.strip()
        if not (s.startswith("<") and s.endswith(">")) or s.count("|") != 1:
            raise TangleSyntaxError("expected '< generators | relators >'", 1, 1)
        body = s[1:-1]
        gpart, rpart = body.split("|")
        names = [t.strip() for t in gpart.split(",") if t.strip()]
        rels = [Word.parse(t) for t in rpart.split(",") if t.strip()]
        return cls([Gen.parse(n) for n in names], rels)

    def to_json(self) -> dict:
        return {
            "generators": [str(g) for g in self.generators],
            "relators": [r.to_json() for r in self.relators],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        return cls(
            [Gen.parse(n) for n in data["generators"]],
            [Word.from_json(r) for r in data["relators"]],
        )


class GroupHom:
    """A homomorphism given by the images of the source generators.

    Sources are bare generator lists: every hom built here starts at a free
    group (boundary legs) or at a presentation whose relators are known to
    map to consequences of the target's (pushout injections).
    """

    __slots__ = ("source", "target", "images", "_map")

    def __init__(self, source: Sequence[Gen], target: Presentation, images: Sequence[Word]):
        self.source = tuple(source)
        self.target = target
        self.images = tuple(images)
        if len(self.images) != len(self.source):
            raise ValueError(
                f"{len(self.source)} source generators but {len(self.images)} images"
            )
        for img in self.images:
            for g in img.generators():
                if g not in target:
                    raise UnknownGenerator(g)
        self._map = dict(zip(self.source, self.images))

    @classmethod
    def identity(cls, p: Presentation) -> "GroupHom":
        return cls(p.generators, p, [Word.of(g) for g in p.generators])

    def image(self, g: Gen) -> Word:
        try:
            return self._map[g]
        except KeyError:
            raise UnknownGenerator(g) from None

    def __call__(self, w: Word) -> Word:
        return hom_apply(self, w)

    def then(self, other: "GroupHom") -> "GroupHom":
        """``self`` followed by ``other`` (the composite other∘self)."""
        return GroupHom(self.source, other.target, [hom_apply(other, w) for w in self.images])

    def retarget(self, target: Presentation) -> "GroupHom":
        return GroupHom(self.source, target, self.images)

    def __eq__(self, other):
        return (
            isinstance(other, GroupHom)
            and self.source == other.source
            and self.images == other.images
            and self.target == other.target
        )

    def __hash__(self):
        return hash((self.source, self.images))

    def __repr__(self):
        body = ", ".join(f"{g}->{w}" for g, w in zip(self.source, self.images))
        return f"GroupHom({body})"


def hom_apply(h: GroupHom, w: Word) -> Word:
    out: list = []
    m = h._map
    for g, e in w.letters:
        img = m.get(g)
        if img is None:
            raise UnknownGenerator(g)
        out.extend(img.letters if e == 1 else img.inverse().letters)
    return Word(out)


def free_product(p1: Presentation, p2: Presentation, tags=("0", "1")):
    """Free product with the canonical injections.

    Generators of ``p1`` and ``p2`` are moved under the namespaces
    ``tags[0]`` and ``tags[1]``.
    """
    m1 = {g: g.under(tags[0]) for g in p1.generators}
    m2 = {g: g.under(tags[1]) for g in p2.generators}
    prod = Presentation(
        [m1[g] for g in p1.generators] + [m2[g] for g in p2.generators],
        [r.rename(m1) for r in p1.relators] + [r.rename(m2) for r in p2.relators],
    )
    i1 = GroupHom(p1.generators, prod, [Word.of(m1[g]) for g in p1.generators])
    i2 = GroupHom(p2.generators, prod, [Word.of(m2[g]) for g in p2.generators])
    return prod, i1, i2


def pushout(f: GroupHom, g: GroupHom, tags=("0", "1")):
    """Pushout of ``G1 <-f- A -g-> G2``: the amalgamated free product.

    Returns the presentation and the two legs ``G1 -> P`` and ``G2 -> P``.
    One relator ``f(x) g(x)^-1`` is added per generator ``x`` of ``A``.
    """
    if f.source != g.source:
        raise SourceMismatch(
            f"pushout needs a common source, got {list(f.source)} and {list(g.source)}"
        )
    prod, i1, i2 = free_product(f.target, g.target, tags)
    amalgam = [hom_apply(i1, f.image(x)) * hom_apply(i2, g.image(x)).inverse() for x in f.source]
    result = Presentation(prod.generators, list(prod.relators) + amalgam)
    return result, i1.retarget(result), i2.retarget(result)
