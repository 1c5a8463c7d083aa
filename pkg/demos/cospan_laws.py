"""Category laws for cospans of groups, checked on random tangle pieces."""
import random

from tangle_gamma import (
    GroupHom,
    Presentation,
    Word,
    compose,
    gamma_eval,
    identity_cospan,
    iso_check,
    lambda_embed,
    parse,
    tensor,
    to_text,
)
from tangle_gamma.presentation import gens
from tangle_gamma.verify import random_composable

rng = random.Random(0)
a, b, c = random_composable(rng, 3, 3)
print("pieces:", to_text(a), "|", to_text(b), "|", to_text(c))
A, B, C = gamma_eval(a), gamma_eval(b), gamma_eval(c)

print("associativity:", iso_check(compose(compose(A, B), C), compose(A, compose(B, C))))
print("left unit:    ", iso_check(compose(identity_cospan(A.m), A), A))
print("interchange:  ", iso_check(tensor(compose(A, B), compose(A, B)),
                                  compose(tensor(A, A), tensor(B, B))))

# A crossing and its mirror image differ; S3 colorings of the boundary tell them apart.
print("x+ vs x-:     ", iso_check(gamma_eval(parse("x+")), gamma_eval(parse("x-"))))

# Plain homomorphisms embed as cospans with an identity right leg.
F1, F2 = Presentation.free(gens("a", 2)), Presentation.free(gens("b", 1))
f = GroupHom(F1.generators, F2, [Word.parse("b1"), Word.parse("b1 b1")])
g = GroupHom(F2.generators, F2, [Word.parse("b1^-1")])
print("lambda(f then g) vs lambda(f) ; lambda(g):",
      iso_check(lambda_embed(f.then(g)), compose(lambda_embed(f), lambda_embed(g))))
