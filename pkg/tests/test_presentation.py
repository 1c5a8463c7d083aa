import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tangle_gamma import (
    Gen,
    GroupHom,
    Presentation,
    SourceMismatch,
    UnknownGenerator,
    Word,
    count_homs,
    free_product,
    free_reduce,
    hom_apply,
    pushout,
)
from tangle_gamma.finite import cyclic_group, dihedral_group, symmetric_group
from tangle_gamma.presentation import canonical_gens, cyclic_key, cyclic_reduce, gens

from oracles import S3_ELEMENTS, brute_force_homs, eval_word, word_letters

B = gens("b", 3)
b1, b2, b3 = B


def w(text):
    return Word.parse(text)


letters = st.lists(st.tuples(st.sampled_from(B), st.sampled_from([1, -1])), max_size=12)


# --- words -----------------------------------------------------------------------


def test_free_reduce_cancels_adjacent_inverses():
    assert free_reduce([(b1, 1), (b2, 1), (b2, -1), (b1, -1)]) == Word.identity()
    assert free_reduce([(b1, 1), (b1, 1), (b2, -1)]) == w("b1 b1 b2^-1")


def test_word_text_round_trip():
    for text in ["1", "b1", "b1^-1 b2", "b1 b1 b2^-1 b2^-1 b3"]:
        assert str(w(text)) == text
    assert w("b1^2 b2^-2") == w("b1 b1 b2^-1 b2^-1")
    assert w("b1^0") == Word.identity()


def test_word_json_round_trip():
    x = w("b1 b1 b2^-1 b3")
    assert Word.from_json(x.to_json()) == x


def test_gen_names():
    assert str(Gen("b", 2)) == "b2"
    assert str(Gen("b", 1).under("0.1")) == "0.1.b1"
    assert Gen.parse("0.1.b12") == Gen("0.1.b", 12)


def _naive_reduce(seq):
    # repeatedly delete the leftmost cancelling pair
    seq = list(seq)
    i = 0
    while i < len(seq) - 1:
        if seq[i][0] == seq[i + 1][0] and seq[i][1] == -seq[i + 1][1]:
            del seq[i:i + 2]
            i = max(i - 1, 0)
        else:
            i += 1
    return seq


@given(letters, st.data())
def test_free_reduction_is_confluent(seq, data):
    # cancel an arbitrary pair first; the normal form must not change
    pairs = [i for i in range(len(seq) - 1) if seq[i][0] == seq[i + 1][0] and seq[i][1] == -seq[i + 1][1]]
    expected = _naive_reduce(seq)
    if pairs:
        i = data.draw(st.sampled_from(pairs))
        seq = seq[:i] + seq[i + 2:]
    assert list(free_reduce(seq)) == expected


@given(letters, letters)
def test_inverse_and_product(u, v):
    x, y = free_reduce(u), free_reduce(v)
    assert (x * y).inverse() == y.inverse() * x.inverse()
    assert x * x.inverse() == Word.identity()


@given(letters)
def test_cyclic_reduce_is_conjugate(u):
    x = free_reduce(u)
    c = cyclic_reduce(x)
    assert len(c) <= len(x)
    if c:
        assert c.letters[0] != (c.letters[-1][0], -c.letters[-1][1])
    # same S3 value up to conjugacy: check cycle type
    for images in itertools.product(S3_ELEMENTS, repeat=3):
        a = dict(zip(map(str, B), images))
        ident = (0, 1, 2)
        vx, vc = eval_word(word_letters(x), a, ident), eval_word(word_letters(c), a, ident)
        assert sorted(_cycle_type(vx)) == sorted(_cycle_type(vc))


def _cycle_type(p):
    seen, out = set(), []
    for i in range(len(p)):
        if i not in seen:
            n, j = 0, i
            while j not in seen:
                seen.add(j)
                j = p[j]
                n += 1
            out.append(n)
    return out


def test_cyclic_key_identifies_rotations_and_inverses():
    assert cyclic_key(w("b1 b2 b1^-1 b2^-1")) == cyclic_key(w("b2 b1^-1 b2^-1 b1"))
    assert cyclic_key(w("b1 b2")) == cyclic_key(w("b2^-1 b1^-1"))
    assert cyclic_key(w("b1 b2")) != cyclic_key(w("b1 b2^-1"))


# --- presentations and homs --------------------------------------------------------


def test_presentation_text_and_json():
    p = Presentation([b1, b2], [w("b1 b2 b1^-1 b2^-1")])
    assert p.to_text() == "< b1, b2 | b1 b2 b1^-1 b2^-1 >"
    assert Presentation.from_text(p.to_text()) == p
    assert Presentation.from_json(p.to_json()) == p
    assert Presentation.trivial().to_text() == "< | >"


def test_presentation_rejects_unknown_generator():
    with pytest.raises(UnknownGenerator):
        Presentation([b1], [w("b1 b2")])


def test_hom_apply_conjugation():
    # c1 -> b1^-1 b2 b1, c2 -> b1; c2 c1 c2^-1 collapses to b2 by hand
    c = gens("c", 2)
    h = GroupHom(c, Presentation.free([b1, b2]), [w("b1^-1 b2 b1"), w("b1")])
    assert hom_apply(h, w("c2 c1 c2^-1")) == w("b2")
    assert hom_apply(h, Word.identity()) == Word.identity()


@given(letters, letters)
def test_hom_property(u, v):
    target = Presentation.free([b1, b2])
    h = GroupHom(B, target, [w("b1 b2"), w("b2^-1"), w("b1^-1 b2 b1")])
    x, y = free_reduce(u), free_reduce(v)
    assert hom_apply(h, x * y) == hom_apply(h, x) * hom_apply(h, y)
    assert hom_apply(h, x.inverse()) == hom_apply(h, x).inverse()


def test_hom_composition_order():
    f = GroupHom((b1,), Presentation.free([b1, b2]), [w("b1 b2")])
    g = GroupHom((b1, b2), Presentation.free([b3]), [w("b3"), w("b3^2")])
    assert f.then(g).images == (w("b3^3"),)


def test_free_product_is_disjoint_union():
    z2 = Presentation([b1], [w("b1^2")])
    z3 = Presentation([b1], [w("b1^3")])
    p, i1, i2 = free_product(z2, z3)
    assert p.size() == (2, 2)
    assert hom_apply(i1, w("b1")) != hom_apply(i2, w("b1"))
    # brute force: homs Z2 * Z3 -> S3 are pairs (order|2, order|3) = 4 * 3
    assert count_homs(p, symmetric_group(3)) == 12


def test_pushout_amalgamates():
    # Z * Z glued along the common generator is Z
    a = canonical_gens(1)
    z = Presentation.free([b1])
    f = GroupHom(a, z, [w("b1")])
    p, _, _ = pushout(f, f)
    assert count_homs(p, symmetric_group(3)) == 6


def test_pushout_source_mismatch():
    z = Presentation.free([b1])
    f = GroupHom(canonical_gens(1), z, [w("b1")])
    g = GroupHom(canonical_gens(2), z, [w("b1"), w("b1")])
    with pytest.raises(SourceMismatch):
        pushout(f, g)


# --- pushout universality against brute force ---------------------------------------

TARGETS = [("Z2", cyclic_group(2)), ("Z3", cyclic_group(3)), ("Z4", cyclic_group(4)), ("S3", symmetric_group(3)), ("D4", dihedral_group(4))]


def _perm_group(group):
    """Regular permutation representation of a table group, for the oracle."""
    n = group.order
    return [tuple(group.mul(g, x) for x in range(n)) for g in range(n)]


short_words = st.lists(st.tuples(st.sampled_from(B[:2]), st.sampled_from([1, -1])), min_size=0, max_size=3)


@settings(max_examples=25, deadline=None)
@given(
    st.lists(short_words, min_size=1, max_size=2),
    st.lists(short_words, min_size=1, max_size=2),
    st.lists(short_words, max_size=1),
    st.lists(short_words, max_size=1),
    st.sampled_from(TARGETS),
)
def test_pushout_universal_property_counts(fimg, gimg, rel1, rel2, target):
    k = min(len(fimg), len(gimg))
    src = canonical_gens(k)
    g1 = Presentation([b1, b2], [free_reduce(r) for r in rel1])
    g2 = Presentation([b1, b2], [free_reduce(r) for r in rel2])
    f = GroupHom(src, g1, [free_reduce(x) for x in fimg[:k]])
    g = GroupHom(src, g2, [free_reduce(x) for x in gimg[:k]])
    p, _, _ = pushout(f, g)

    name, group = target
    elements = _perm_group(group)
    ident = tuple(range(group.order))
    h1 = brute_force_homs(["b1", "b2"], [word_letters(r) for r in g1.relators], elements)
    h2 = brute_force_homs(["b1", "b2"], [word_letters(r) for r in g2.relators], elements)
    expected = sum(
        all(eval_word(word_letters(x), a1, ident) == eval_word(word_letters(y), a2, ident)
            for x, y in zip(f.images, g.images))
        for a1 in h1 for a2 in h2
    )
    assert count_homs(p, group) == expected
