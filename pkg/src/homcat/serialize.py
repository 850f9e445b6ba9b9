"""JSON formats for complexes, Ext tables, and quivers.

The algebra description format lives in ``homcat.algebras``; this module adds
the complex format (support interval, per-degree module data or named
references, per-degree differential matrices) and the tabular reports.
"""

from __future__ import annotations

from homcat.algebras import Alg, algebra_from_json, algebra_to_json, preset
from homcat.complexes import Cx, make_complex
from homcat.errors import ValidationError
from homcat.linalg import Mat
from homcat.modules import (
    MMap,
    Mod,
    make_module,
    projective_module,
    regular_module,
    simple_module,
    zero_module,
)

__all__ = ["complex_to_json", "complex_from_json", "module_to_json", "module_from_json"]


def module_to_json(m: Mod) -> dict:
    return {"dim": m.dim, "action": [[list(map(int, row)) for row in a.a] for a in m.action]}


def module_from_json(alg: Alg, data) -> Mod:
    """Inline action data, or a named reference like "proj:1", "simple:0",
    "regular", "zero"."""
    if isinstance(data, str):
        if data == "regular":
            return regular_module(alg)
        if data == "zero":
            return zero_module(alg)
        kind, _, idx = data.partition(":")
        if kind == "proj":
            return projective_module(alg, int(idx))
        if kind == "simple":
            return simple_module(alg, int(idx))
        raise ValidationError(f"unknown module reference {data!r}")
    import numpy as np

    dim = int(data["dim"])
    mats = [
        Mat(alg.p, np.array(rows, dtype="int64").reshape(dim, dim))
        for rows in data["action"]
    ]
    return make_module(alg, mats)


def complex_to_json(x: Cx) -> dict:
    return {
        "algebra": algebra_to_json(x.alg),
        "support": [x.lo, x.hi] if not x.is_zero() else [0, -1],
        "modules": [module_to_json(x.obj(n)) for n in x.degrees()],
        "differentials": [
            [list(map(int, row)) for row in x.diff(n).mat.a]
            for n in list(x.degrees())[:-1]
        ],
    }


def complex_from_json(data: dict, alg: Alg | None = None) -> Cx:
    """Rebuild and re-validate a complex; the algebra may be inline or passed."""
    if alg is None:
        alg_data = data["algebra"]
        alg = (
            preset(alg_data, data["prime"])
            if isinstance(alg_data, str)
            else algebra_from_json(alg_data)
        )
    import numpy as np

    lo, hi = data["support"]
    mods = [module_from_json(alg, m) for m in data["modules"]]
    diffs = []
    for k, rows in enumerate(data.get("differentials", [])):
        mat = Mat(alg.p, np.array(rows, dtype="int64").reshape(mods[k + 1].dim, mods[k].dim))
        diffs.append(MMap(mods[k], mods[k + 1], mat))
    return make_complex(alg, lo, mods, diffs)
