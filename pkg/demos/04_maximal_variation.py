"""How the tangent variety varies with the base point: the maximality verdict.

The verdict needs three exact numbers at the origin: the rank of the
differential of the lowest equation, the dimension of the tangent space to
its coordinate-change orbit, and the dimension of their intersection.
The two built-in families achieve rank n, orbit n^2 and intersection 0;
a Fermat sextic shows a degenerate case.
"""

from fractions import Fraction

from vmrt import (
    Hypersurface,
    dmu_formula,
    dmu_jet,
    explicit_family,
    parse_poly,
    variation_report,
)


def show(hyp, label):
    rep = variation_report(hyp)
    print(f"{label}")
    print(f"  rank dmu         = {rep.rank_dmu}")
    print(f"  dim orbit        = {rep.dim_orbit}")
    print(f"  dim intersection = {rep.dim_intersection}")
    print(f"  maximal          = {rep.maximal}")
    print()


fam2 = explicit_family(4, 2, 1, 1)
print(f"m = 2 family: f = {fam2.f}\n")
show(fam2, "verdict (expect 4, 16, 0, True):")

fam3 = explicit_family(4, 3, 1, 1)
print(f"m = 3 family: f = {fam3.f}\n")
show(fam3, "verdict (expect 4, 16, 0, True):")

print("The closed-form differential is independently confirmed by jets:")
print(f"  m=2 family: dmu_formula == dmu_jet -> {dmu_formula(fam2) == dmu_jet(fam2)}")
print(f"  m=3 family: dmu_formula == dmu_jet -> {dmu_formula(fam3) == dmu_jet(fam3)}")
print()

print("Nonzero parameters do not matter for the verdict:")
for b, c in ((Fraction(2, 3), Fraction(-5)), (Fraction(-1, 7), Fraction(9, 2))):
    rep = variation_report(explicit_family(4, 2, b, c))
    print(f"  b={b}, c={c}: maximal = {rep.maximal}")
print()

show(
    Hypersurface(parse_poly("t0^6 + t1^6 + t2^6 + t3^6 + t4^6")),
    "Fermat sextic (m = 3, middle part missing; expect rank 0, not maximal):",
)
