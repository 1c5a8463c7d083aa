"""Tangle expressions to cospans of finitely presented groups.

>>> from tangle_gamma import builtin, knot_group, count_homs, symmetric_group
>>> count_homs(knot_group(builtin("trefoil")), symmetric_group(3))
12
"""
from .abelian import AbelianInvariants, abelianize
from .cospan import (
    Cospan,
    IsoVerdict,
    IsoWitness,
    Verdict,
    compose,
    identity_cospan,
    iso_check,
    lambda_embed,
    tensor,
)
from .dsl import parse, to_text
from .errors import (
    ArityMismatch,
    InvalidGroupTable,
    NotALink,
    SourceMismatch,
    TangleGammaError,
    TangleSyntaxError,
    UnknownBuiltin,
    UnknownGenerator,
)
from .finite import FiniteGroup, builtin_group, count_homs, cyclic_group, dihedral_group, symmetric_group
from .gamma import gamma_eval, gamma_generator, knot_group
from .presentation import (
    Gen,
    GroupHom,
    Presentation,
    Word,
    canonical_gens,
    free_product,
    free_reduce,
    hom_apply,
    pushout,
)
from .smith import IntegerMatrix, smith_normal_form
from .tangle import (
    Arity,
    Cap,
    Compose,
    Connectivity,
    Cup,
    Id,
    Tensor,
    Xm,
    Xp,
    arity,
    builtin,
    connectivity,
)
from .tietze import tietze_simplify
from .verify import (
    RelationCase,
    VerificationReport,
    check_abelianization_theorem,
    check_relation,
    random_expr,
    relation_cases,
)

__version__ = "0.1.0"
