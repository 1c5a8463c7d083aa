import math
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import invariant_factors

from tangle_gamma import AbelianInvariants, IntegerMatrix, Presentation, Word, abelianize, smith_normal_form
from tangle_gamma.abelian import leg_kernel
from tangle_gamma.presentation import GroupHom, canonical_gens, free_product, gens
from tangle_gamma.smith import hermite_normal_form, left_kernel


def sympy_det(m: IntegerMatrix) -> int:
    if m.nrows == 0:
        return 1
    return int(sympy.Matrix(m.tolist()).det())


def sympy_invariants(rows, ncols):
    if not rows or not ncols:
        return ()
    return tuple(int(abs(x)) for x in invariant_factors(sympy.Matrix(rows), domain=sympy.ZZ))


def check_snf(rows, ncols):
    m = IntegerMatrix(rows, ncols)
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(sympy_det(u)) == 1 and abs(sympy_det(v)) == 1
    diag = d.diagonal()
    for i in range(d.nrows):
        for j in range(d.ncols):
            if i != j:
                assert d[i, j] == 0
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert diag[:len(nz)] == nz, "zeros must trail"
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    return diag


def test_known_example():
    # a standard textbook matrix; invariant factors 2, 6, 12 (sympy agrees)
    rows = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    assert check_snf(rows, 3) == [2, 6, 12]
    assert sympy_invariants(rows, 3) == (2, 6, 12)


def test_diag_2_3_becomes_1_6():
    assert check_snf([[2, 0], [0, 3]], 2) == [1, 6]


@pytest.mark.parametrize("shape", [(0, 3), (3, 0), (1, 1), (2, 5), (5, 2)])
def test_degenerate_shapes(shape):
    r, c = shape
    check_snf([[0] * c for _ in range(r)], c)


def test_large_entries_do_not_overflow():
    big = 10 ** 30
    diag = check_snf([[big, 1], [1, big]], 2)
    assert diag == [1, big * big - 1]


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6), st.data())
def test_snf_properties_match_sympy(r, c, data):
    rows = [[data.draw(st.integers(-20, 20)) for _ in range(c)] for _ in range(r)]
    diag = check_snf(rows, c)
    nz = tuple(x for x in diag if x)
    assert nz == tuple(x for x in sympy_invariants(rows, c) if x)


def test_left_kernel():
    m = IntegerMatrix([[1, 2], [2, 4], [0, 1]])
    k = left_kernel(m)
    assert k.nrows == 1
    assert k @ m == IntegerMatrix.zeros(1, 2)


def test_hermite_normal_form_is_canonical():
    a = IntegerMatrix([[2, 4], [0, 3]])
    b = IntegerMatrix([[2, 7], [2, 4], [4, 11]])  # spans the same lattice
    assert hermite_normal_form(a) == hermite_normal_form(b)


def test_seeded_random_matrices_8x8():
    rng = random.Random(7)
    for _ in range(30):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        check_snf([[rng.randint(-20, 20) for _ in range(c)] for _ in range(r)], c)


# --- abelianization ---------------------------------------------------------------

x1, x2, x3 = gens("x", 3)
W = Word.parse


@pytest.mark.parametrize("pres, expected", [
    (Presentation.free([x1]), AbelianInvariants(1)),
    (Presentation.free([x1, x2]), AbelianInvariants(2)),
    (Presentation([x1, x2], [W("x1 x2 x1^-1 x2^-1")]), AbelianInvariants(2)),
    # trefoil: x1 x2 x1 = x2 x1 x2 makes x1 ~ x2
    (Presentation([x1, x2], [W("x1 x2 x1 x2^-1 x1^-1 x2^-1")]), AbelianInvariants(1)),
    (Presentation([x1], [W("x1^6")]), AbelianInvariants(0, (6,))),
    (Presentation([x1, x2], [W("x1^2"), W("x2^3")]), AbelianInvariants(0, (6,))),
    (Presentation([x1, x2], [W("x1^2"), W("x2^4")]), AbelianInvariants(0, (2, 4))),
    (Presentation.trivial(), AbelianInvariants(0)),
])
def test_abelianize(pres, expected):
    assert abelianize(pres) == expected


def test_invariants_validation_and_text():
    with pytest.raises(ValueError):
        AbelianInvariants(0, (4, 6))
    with pytest.raises(ValueError):
        AbelianInvariants(0, (1,))
    assert str(AbelianInvariants(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    assert str(AbelianInvariants(0)) == "0"


presentations = st.builds(
    lambda n, rels: Presentation(gens("x", n), [W(" ".join(r) or "1") for r in rels]),
    st.integers(1, 3),
    st.lists(st.lists(st.sampled_from(["x1", "x1^-1", "x1^2"]), max_size=4), max_size=3),
)


@settings(max_examples=50, deadline=None)
@given(presentations, presentations)
def test_abelianization_of_free_product_adds(p, q):
    fp, _, _ = free_product(p, q)
    a, b, c = abelianize(p), abelianize(q), abelianize(fp)
    assert c.free_rank == a.free_rank + b.free_rank
    assert math.prod(c.torsion) == math.prod(a.torsion) * math.prod(b.torsion)


def test_leg_kernel_of_cup_legs():
    # cup: p1 -> b, p2 -> b^-1, so p1 + p2 dies in the abelianization
    b = gens("b", 1)
    mid = Presentation.free(b)
    leg = GroupHom(canonical_gens(2), mid, [W("b1"), W("b1^-1")])
    assert leg_kernel(mid, [leg]).tolist() == [[1, 1]]
