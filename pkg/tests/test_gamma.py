import pytest

from tangle_gamma import (
    Cap,
    Cup,
    Id,
    NotALink,
    Presentation,
    Word,
    Xm,
    Xp,
    abelianize,
    builtin,
    count_homs,
    gamma_eval,
    gamma_generator,
    iso_check,
    knot_group,
    parse,
    tensor,
)
from tangle_gamma.abelian import AbelianInvariants
from tangle_gamma.finite import BUILTIN_GROUPS, builtin_group, symmetric_group
from tangle_gamma.presentation import canonical_gens, gens
from tangle_gamma.verify import check_abelianization_theorem, random_expr

from oracles import brute_force_count, word_letters

W = Word.parse

# generator images with boundary generators p1, p2 and middle generators b1, b2
GOLDEN = {
    Cup: ([], ["b1", "b1^-1"]),
    Cap: (["b1", "b1^-1"], []),
    Xp: (["b1", "b2"], ["b1^-1 b2 b1", "b1"]),
    Xm: (["b1", "b2"], ["b2", "b2 b1 b2^-1"]),
}


@pytest.mark.parametrize("kind", [Cup, Cap, Xp, Xm], ids=lambda k: k.__name__)
def test_generator_golden_data(kind):
    c = gamma_generator(kind)
    left, right = GOLDEN[kind]
    assert c.middle.is_free
    assert [str(w) for w in c.left.images] == left
    assert [str(w) for w in c.right.images] == right
    assert c.left.source == canonical_gens(len(left))
    assert c.right.source == canonical_gens(len(right))
    assert gamma_generator(kind()) is c


def test_identity():
    c = gamma_eval(Id(3))
    assert c.middle == Presentation.free(canonical_gens(3))
    assert c.left.images == c.right.images


def test_evaluation_order_does_not_change_names():
    e = parse("cup * cup ; id(1) * x+ * id(1) ; cap * cap")
    assert gamma_eval(e).same_data(gamma_eval(parse("cup * cup ; id(1) * x+ * id(1) ; cap * cap")))


def test_tensor_maps_to_free_product():
    e = parse("x+ * cup")
    direct = gamma_eval(e)
    assert direct.same_data(tensor(gamma_generator(Xp), gamma_generator(Cup)))


def test_composition_is_associative_up_to_iso():
    a, b, c = parse("x+"), parse("x-"), parse("x+")
    from tangle_gamma import Compose

    left = gamma_eval(Compose(Compose(a, b), c))
    right = gamma_eval(Compose(a, Compose(b, c)))
    assert iso_check(left, right).is_equal


@pytest.mark.parametrize("seed", range(20))
def test_simplify_every_node_agrees(seed):
    e = random_expr(seed, 10)
    raw = gamma_eval(e)
    every = gamma_eval(e, simplify_every_node=True)
    assert abelianize(raw.middle) == abelianize(every.middle)
    assert count_homs(raw.simplify().middle, symmetric_group(3)) == count_homs(every.middle, symmetric_group(3))


# --- knot groups -------------------------------------------------------------------------


def test_unknot_group():
    g = knot_group(builtin("unknot"))
    assert g.size() == (1, 0)
    assert abelianize(g) == AbelianInvariants(1)


def test_trefoil_group_text():
    g = knot_group(builtin("trefoil"))
    assert g.size() == (2, 1)
    assert g.generators == gens("x", 2)


# frozen by the exhaustive oracle on the presentations returned by knot_group;
# the S3 values agree with the standard counts (unknot 6, trefoil 12, unlink 36)
EXPECTED_S3 = {"unknot": 6, "unlink2": 36, "hopf": 18, "trefoil": 12, "figure8": 6}


@pytest.mark.parametrize("name", sorted(EXPECTED_S3))
def test_knot_group_s3_counts(name):
    g = knot_group(builtin(name))
    oracle = brute_force_count([str(x) for x in g.generators], [word_letters(r) for r in g.relators])
    assert oracle == EXPECTED_S3[name]
    assert count_homs(g, symmetric_group(3)) == oracle


@pytest.mark.parametrize("name", sorted(EXPECTED_S3))
def test_hom_counts_do_not_depend_on_simplification(name):
    e = builtin(name)
    raw = gamma_eval(e).middle
    simple = knot_group(e)
    for gname in BUILTIN_GROUPS:
        grp = builtin_group(gname)
        if len(raw.generators) <= 8 or grp.order <= 3:
            assert count_homs(raw, grp) == count_homs(simple, grp), gname


def test_knot_group_needs_closed_tangle():
    with pytest.raises(NotALink):
        knot_group(parse("x+"))


@pytest.mark.parametrize("name, rank", [
    ("hopf", 2), ("unlink2", 2), ("trefoil", 1), ("unknot", 1), ("figure8", 1),
])
def test_link_abelianization_rank_is_component_count(name, rank):
    assert abelianize(knot_group(builtin(name))) == AbelianInvariants(rank)


@pytest.mark.parametrize("seed", range(50))
def test_rank_theorem(seed):
    holds, report = check_abelianization_theorem(random_expr(seed, 12))
    assert holds, report
