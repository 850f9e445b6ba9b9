"""Seeded random generators for modules, complexes, and chain maps.

Everything takes a numpy Generator so verification suites are reproducible:
the same seed always produces the same objects, across runs and platforms.
"""

from __future__ import annotations

import numpy as np

from homcat.algebras import Alg
from homcat.complexes import CMap, Cx, Htp, chain_map_basis, make_complex
from homcat.linalg import Mat, column_space, kernel_basis
from homcat.modules import (
    MMap,
    Mod,
    direct_sum,
    hom_space,
    injective_envelope,
    projective_module,
    quotient_module,
    simple_module,
    submodule,
    zero_module,
)

__all__ = [
    "random_module",
    "random_complex",
    "random_chain_map",
    "random_homotopic_pair",
    "random_injective_complex",
]


def random_module(alg: Alg, rng: np.random.Generator, max_projectives: int = 2, dim_cap: int = 6) -> Mod:
    """A random module: a sum of projectives, cut down by a random submodule
    or quotient, capped in dimension."""
    n_idem = len(alg.idempotents)
    count = int(rng.integers(1, max_projectives + 1))
    picks = [int(rng.integers(0, n_idem)) for _ in range(count)]
    total, _, _ = direct_sum([projective_module(alg, j) for j in picks], alg)
    mode = int(rng.integers(0, 3))
    if mode == 0 or total.dim == 0:
        mod = total
    else:
        # random invariant span from one or two cyclic generators
        gens = []
        for _ in range(int(rng.integers(1, 3))):
            v = rng.integers(0, alg.p, size=total.dim)
            cols = [total.rho(alg.basis_vector(i)).a @ v for i in range(alg.dim)]
            gens.append(np.stack(cols, axis=1))
        span = column_space(Mat(alg.p, np.hstack(gens) % alg.p))
        if mode == 1:
            mod = submodule(total, span)[0]
        else:
            mod = quotient_module(total, span)[0]
    if mod.dim > dim_cap:
        # fall back to a plain projective to stay small
        mod = projective_module(alg, picks[0])
    return mod


def _constrained_random_map(
    src: Mod, dst: Mod, rng: np.random.Generator, after: MMap | None
) -> MMap:
    """A random hom src -> dst, composing to zero with ``after`` if given."""
    basis = hom_space(src, dst)
    if not basis:
        return MMap.zero(src, dst)
    p = src.alg.p
    if after is not None and not after.mat.is_zero():
        rows = np.stack([(f.mat @ after.mat).a.reshape(-1) for f in basis], axis=1)
        allowed = kernel_basis(Mat(p, rows))
    else:
        allowed = Mat.identity(p, len(basis))
    if allowed.cols == 0:
        return MMap.zero(src, dst)
    coeffs = (allowed.a @ rng.integers(0, p, size=allowed.cols)) % p
    acc = np.zeros((dst.dim, src.dim), dtype=np.int64)
    for c, f in zip(coeffs, basis):
        if c:
            acc = acc + int(c) * f.mat.a
    return MMap(src, dst, Mat(p, acc))


def random_complex(
    alg: Alg,
    rng: np.random.Generator,
    max_support: int = 4,
    dim_cap: int = 6,
    lo_range: tuple[int, int] = (-3, 1),
) -> Cx:
    """A random bounded complex with genuinely random differentials.

    Modules are drawn degreewise; each differential is a uniform draw from
    the subspace of maps composing to zero with the previous differential.
    """
    length = int(rng.integers(1, max_support + 1))
    lo = int(rng.integers(lo_range[0], lo_range[1] + 1))
    mods = []
    for _ in range(length):
        if rng.random() < 0.15:
            mods.append(zero_module(alg))
        else:
            mods.append(random_module(alg, rng, dim_cap=dim_cap))
    diffs = []
    prev: MMap | None = None
    for k in range(length - 1):
        d = _constrained_random_map(mods[k], mods[k + 1], rng, prev)
        diffs.append(d)
        prev = d
    return make_complex(alg, lo, mods, diffs)


def random_chain_map(x: Cx, y: Cx, rng: np.random.Generator) -> CMap:
    """A uniform draw from the space of chain maps x -> y."""
    basis = chain_map_basis(x, y)
    if not basis:
        return CMap.zero(x, y)
    out = CMap.zero(x, y)
    for f in basis:
        c = int(rng.integers(0, x.alg.p))
        if c:
            out = out + f.scale(c)
    return out


def random_homotopic_pair(x: Cx, y: Cx, rng: np.random.Generator) -> tuple[CMap, CMap, Htp]:
    """A chain map, a homotopic perturbation phi + dh + hd, and the witness."""
    phi = random_chain_map(x, y, rng)
    comps = {}
    for n in range(min(x.lo, y.lo), max(x.hi, y.hi) + 2):
        if x.obj(n).dim and y.obj(n - 1).dim:
            hs = hom_space(x.obj(n), y.obj(n - 1))
            if not hs:
                continue
            acc = np.zeros((y.obj(n - 1).dim, x.obj(n).dim), dtype=np.int64)
            for f in hs:
                c = int(rng.integers(0, x.alg.p))
                if c:
                    acc = acc + c * f.mat.a
            comps[n] = MMap(x.obj(n), y.obj(n - 1), Mat(x.alg.p, acc))
    perturbation_comps = {}
    for n in range(min(x.lo, y.lo), max(x.hi, y.hi) + 1):
        h_n = comps.get(n)
        h_n1 = comps.get(n + 1)
        term = MMap.zero(x.obj(n), y.obj(n))
        if h_n is not None:
            term = term + y.diff(n - 1) @ h_n
        if h_n1 is not None:
            term = term + h_n1 @ x.diff(n)
        if not term.is_zero():
            perturbation_comps[n] = term
    psi = phi + CMap.build(x, y, perturbation_comps)
    cert = Htp(psi, phi, comps)
    return phi, psi, cert


def random_injective_complex(
    alg: Alg, rng: np.random.Generator, max_support: int = 3, max_summands: int = 2
) -> Cx:
    """A random bounded complex whose components are sums of indecomposable
    injectives (duals of projective covers of the simples)."""
    injectives = [injective_envelope(simple_module(alg, j))[0] for j in range(len(alg.idempotents))]
    length = int(rng.integers(1, max_support + 1))
    lo = int(rng.integers(-2, 2))
    mods = []
    for _ in range(length):
        count = int(rng.integers(1, max_summands + 1))
        picks = [injectives[int(rng.integers(0, len(injectives)))] for _ in range(count)]
        mods.append(direct_sum(picks, alg)[0])
    diffs = []
    prev = None
    for k in range(length - 1):
        d = _constrained_random_map(mods[k], mods[k + 1], rng, prev)
        diffs.append(d)
        prev = d
    return make_complex(alg, lo, mods, diffs)
