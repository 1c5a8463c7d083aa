"""Check that Gamma respects every defining relation of the tangle category."""
from tangle_gamma import check_relation, relation_cases, to_text

for case in relation_cases():
    rep = check_relation(case)
    print(f"{case.id:6} {to_text(case.lhs)}  ==  {to_text(case.rhs)}")
    print(f"       {rep.verdict}  ({rep.elapsed * 1000:.1f} ms)")
    if rep.verdict.witness is not None:
        w = rep.verdict.witness
        fw = ", ".join(f"{g} -> {img}" for g, img in zip(w.forward.source, w.forward.images))
        print(f"       forward witness: {fw or '(no generators)'}")

# With no room to search, nothing can be certified and the verdicts are Unknown.
print(check_relation(relation_cases()[-1], budget=0).verdict)
