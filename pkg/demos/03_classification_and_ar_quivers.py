"""Classifying indecomposables and drawing Auslander-Reiten quivers.

Over a small field the engine enumerates submodules of sums of projectives,
closes under subs and quotients, splits everything, and deduplicates up to
isomorphism.  Arrow multiplicities are dim rad/rad^2 of Hom spaces.
"""

from homcat.algebras import preset
from homcat.modules import ar_quiver, classify_indecomposables

for name in ("lambda1", "lambda2", "lambda3", "truncpoly(3)"):
    alg = preset(name, 2)
    ind = classify_indecomposables(alg)
    print(f"{name}: {len(ind)} indecomposables with dims {sorted(m.dim for m in ind)}")

print("\nAR quiver of lambda1 (the mesh of the linearly oriented A3 quiver):")
quiver = ar_quiver(preset("lambda1", 2))
print(quiver.to_dot("lambda1_ar"))

print("AR quiver of truncpoly(3) (a line with arrows both ways):")
print(ar_quiver(preset("truncpoly(3)", 2)).to_dot("truncpoly3_ar"))
