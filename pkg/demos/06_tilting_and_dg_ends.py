"""Tilting modules and dg endomorphism algebras.

Two modules over the upper triangular algebra have endomorphism rings
isomorphic to the other two presets; the dg endomorphism algebra of a
resolution of the simples has cohomology equal to the full Ext algebra.
"""

from homcat.algebras import preset
from homcat.complexes import direct_sum_cx
from homcat.derived import dg_cohomology_dims, dg_end, ext, proj_resolution, tilting_check
from homcat.modules import (
    direct_sum,
    projective_module,
    quotient_module,
    radical_submodule,
    simple_module,
    socle,
)

lam1 = preset("lambda1", 101)
p1, p2, p3 = (projective_module(lam1, j) for j in range(3))

# B = P1 + P2 + P2/socle, C = P1/rad + P1 + P3.
b_mod, _, _ = direct_sum([p1, p2, quotient_module(p2, socle(p2)[1].mat)[0]])
c_mod, _, _ = direct_sum([quotient_module(p1, radical_submodule(p1))[0], p1, p3])

report_b = tilting_check(b_mod, preset("lambda2", 101))
print("End(B): dim", report_b["end_dim"], "- matches lambda2:",
      report_b["iso_found"], f"({report_b['iso_side']} side)")
report_c = tilting_check(c_mod, preset("lambda3", 101))
print("End(C): dim", report_c["end_dim"], "- matches lambda3:",
      report_c["iso_found"], f"({report_c['iso_side']} side)")
print("derived images separate the indecomposables:",
      report_b["injective_on_shifts"] and report_c["injective_on_shifts"])

# The dg endomorphism algebra of a projective resolution of the simples.
simples = [simple_module(lam1, j) for j in range(3)]
resolutions = [proj_resolution(s).res for s in simples]
total, _, _ = direct_sum_cx(resolutions)
dga = dg_end(total)  # Leibniz and associativity are verified on construction
dims = dg_cohomology_dims(dga)
print("\ndg end of the resolution of S1 + S2 + S3 has H-dims:",
      {n: d for n, d in sorted(dims.items()) if d})
print("matching the Ext algebra:",
      {n: sum(ext(a, b, n) for a in simples for b in simples) for n in (0, 1)})
