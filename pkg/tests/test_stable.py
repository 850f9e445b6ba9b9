"""Stable category machinery over self-injective algebras."""

import numpy as np
import pytest

from homcat.algebras import preset
from homcat.complexes import cohomology_data, shift
from homcat.errors import GuardError, ValidationError
from homcat.modules import (
    classify_indecomposables,
    is_isomorphic,
    known_indecomposables,
    projective_module,
    regular_module,
    simple_module,
)
from homcat.stable import (
    assert_self_injective,
    complete_resolution,
    cosyzygy,
    stable_ar_quiver,
    stable_hom,
    stable_hom_via_cr,
    stable_indecomposables,
    syzygy,
    z0,
)

T2 = preset("truncpoly(2)", 101)
T3 = preset("truncpoly(3)", 101)
T4 = preset("truncpoly(4)", 101)
GF = preset("ground_field", 101)
L1 = preset("lambda1", 101)


def _kmod(alg):
    return simple_module(alg, 0)


def test_self_injective_certificates():
    assert assert_self_injective(T2)
    assert assert_self_injective(T3)
    assert assert_self_injective(GF)


def test_lambda1_not_self_injective():
    with pytest.raises(ValidationError, match="self-injective"):
        assert_self_injective(L1)


def test_stable_hom_projective_source_or_target():
    reg = regular_module(T2)
    k = _kmod(T2)
    assert stable_hom(reg, k)[0] == 0
    assert stable_hom(k, reg)[0] == 0


def test_stable_hom_simple_truncpoly2():
    k = _kmod(T2)
    dim, reps = stable_hom(k, k)
    assert dim == 1
    assert len(reps) == 1


def test_syzygy_of_projective_vanishes():
    assert syzygy(regular_module(T3)).dim == 0


def test_syzygy_values_truncpoly():
    # Omega(k[T]/(T^j)) = k[T]/(T^(n-j)) over k[T]/(T^n)
    mods4 = sorted(known_indecomposables(T4), key=lambda m: m.dim)
    for j in range(1, 4):
        om = syzygy(mods4[j - 1])
        assert om.dim == 4 - j


def test_cosyzygy_inverts_syzygy():
    k = _kmod(T3)
    om = syzygy(k)
    back = cosyzygy(om)
    assert is_isomorphic(back, k) is not None


def test_complete_resolution_truncpoly2():
    k = _kmod(T2)
    cr = complete_resolution(k, (-3, 3))
    for n in cr.cx.degrees():
        assert cr.cx.obj(n).dim == 2  # every component is the regular module
    # differentials all have rank one (multiplication by T)
    from homcat.linalg import rank

    for n in range(-3, 3):
        assert rank(cr.cx.diff(n).mat) == 1
    assert cr.z0_iso.src.dim == 1


def test_complete_resolution_middle_module_truncpoly4():
    mods = sorted(known_indecomposables(T4), key=lambda m: m.dim)
    m2 = mods[1]  # k[T]/(T^2) over k[T]/(T^4): Omega(m2) = m2
    cr = complete_resolution(m2, (-3, 3))
    from homcat.linalg import rank

    for n in range(-3, 3):
        assert rank(cr.cx.diff(n).mat) == 2  # multiplication by T^2
    assert is_isomorphic(z0(cr.cx), m2) is not None


def test_complete_resolution_rejects_projective_summand():
    with pytest.raises(ValidationError, match="projective summand"):
        complete_resolution(regular_module(T2), (-3, 3))


def test_complete_resolution_window_guard():
    with pytest.raises(ValidationError, match="window"):
        complete_resolution(_kmod(T2), (-1, 1))


def test_z0_of_complete_resolution():
    k = _kmod(T3)
    cr = complete_resolution(k, (-3, 3))
    assert is_isomorphic(z0(cr.cx), k) is not None


def test_z0_of_shifted_complete_resolution_is_syzygy():
    # shifting down by one turns Z^0 into the syzygy, up by one into the
    # cosyzygy; over k[T]/(T^3) these differ from the module itself
    k = _kmod(T3)
    cr = complete_resolution(k, (-4, 4))
    om = syzygy(k)
    assert om.dim == 2
    assert is_isomorphic(z0(shift(cr.cx, -1)), om) is not None
    assert is_isomorphic(z0(shift(cr.cx, 1)), cosyzygy(k)) is not None


def test_stable_hom_via_cr_matches_direct_truncpoly2():
    k = _kmod(T2)
    assert stable_hom_via_cr(k, k, (-4, 4)) == stable_hom(k, k)[0] == 1


def test_stable_hom_via_cr_matches_direct_truncpoly3():
    mods = sorted(stable_indecomposables(preset("truncpoly(3)", 2)), key=lambda m: m.dim)
    for a in mods:
        for b in mods:
            assert stable_hom_via_cr(a, b, (-4, 4)) == stable_hom(a, b)[0]


def test_stable_indecomposables_counts():
    assert len(stable_indecomposables(preset("truncpoly(2)", 2))) == 1
    assert len(stable_indecomposables(preset("truncpoly(3)", 2))) == 2
    assert stable_indecomposables(preset("ground_field", 2)) == []


def test_stable_indecomposables_guard():
    with pytest.raises(GuardError):
        stable_indecomposables(preset("lambda1", 2))


def test_injective_envelopes_are_projective_when_self_injective():
    from homcat.modules import injective_envelope
    from homcat.stable import _is_projective

    for n in (2, 3, 4):
        alg = preset(f"truncpoly({n})", 2)
        for m in stable_indecomposables(alg):
            env, _ = injective_envelope(m)
            assert _is_projective(env)


def test_stable_ar_quiver_truncpoly2():
    q = stable_ar_quiver(preset("truncpoly(2)", 2))
    assert len(q.vertices) == 1
    assert q.n_arrows == 0


def test_stable_ar_quiver_truncpoly3():
    q = stable_ar_quiver(preset("truncpoly(3)", 2))
    assert len(q.vertices) == 2
    assert q.n_arrows == 2
    arrow_set = {(s, t) for s, t, _ in q.arrows}
    assert arrow_set == {(0, 1), (1, 0)}
