"""Knot groups of the built-in closed braids, and what S3 sees of them."""
from tangle_gamma import abelianize, builtin, count_homs, gamma_eval, knot_group, symmetric_group
from tangle_gamma.tangle import builtin_source, components

s3 = symmetric_group(3)

for name in ["unknot", "unlink2", "hopf", "trefoil", "figure8"]:
    e = builtin(name)
    raw = gamma_eval(e).middle
    g = knot_group(e)
    print(f"{name}: {builtin_source(name)}")
    print(f"  raw pushout presentation: {raw.size()[0]} generators, {raw.size()[1]} relators")
    print(f"  simplified: {g.to_text()}")
    print(f"  abelianization {abelianize(g)}, components {components(e)}")
    print(f"  homs into S3: {count_homs(g, s3)}")

# The trefoil has 12 S3 colorings against 6 for the unknot, so the two
# groups are not isomorphic even though both abelianize to Z.
