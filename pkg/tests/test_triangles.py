"""Triangulated structure: cones, certification, rotation, sums, octahedra,
fill-ins, split sequences, semisimple splitting."""

import numpy as np
import pytest

from homcat.algebras import preset
from homcat.complexes import (
    CMap,
    cohomology_dims,
    cone_complex,
    make_complex,
    null_homotopy,
    shift,
    shift_map,
    stalk,
)
from homcat.errors import GuardError, ValidationError
from homcat.linalg import Mat, rank
from homcat.modules import MMap, hom_space, projective_module, simple_module
from homcat.samples import random_chain_map, random_complex
from homcat.triangles import (
    Tri,
    certify_triangle,
    cone_triangle,
    fill_in,
    fillin_ambiguity,
    identity_triangle,
    octahedron,
    rotate,
    semisimple_split,
    split_seq_to_triangle,
    sum_triangles,
    verify_cone_les,
)

L1 = preset("lambda1", 101)
L1_2 = preset("lambda1", 2)
GF101 = preset("ground_field", 101)
GF2 = preset("ground_field", 2)


def _random_map(alg, rng, **kw):
    x = random_complex(alg, rng, **kw)
    y = random_complex(alg, rng, **kw)
    return random_chain_map(x, y, rng)


def test_cone_triangle_certificates_verify():
    rng = np.random.default_rng(0)
    for _ in range(5):
        f = _random_map(L1, rng, max_support=3, dim_cap=4)
        tri = cone_triangle(f)
        assert tri.kind == "cone"


def test_cone_les_exactness():
    rng = np.random.default_rng(1)
    for _ in range(8):
        f = _random_map(L1, rng, max_support=3, dim_cap=4)
        assert verify_cone_les(f)


def test_identity_triangle():
    x = stalk(projective_module(L1, 0), 0)
    tri = identity_triangle(x)
    assert tri.kind == "iso-to-cone"
    assert tri.z.is_zero()


def test_rotate_certifies_and_rotates_thrice():
    rng = np.random.default_rng(2)
    f = _random_map(L1, rng, max_support=2, dim_cap=3)
    tri = cone_triangle(f)
    r1 = rotate(tri)
    assert r1.x == tri.y and r1.y == tri.z
    r3 = rotate(rotate(r1))
    assert r3.x == shift(tri.x, 1)
    assert r3.y == shift(tri.y, 1)
    assert r3.z == shift(tri.z, 1)


def test_sum_of_cone_triangles_strict_certificate():
    rng = np.random.default_rng(3)
    f1 = _random_map(L1, rng, max_support=2, dim_cap=3)
    f2 = _random_map(L1, rng, max_support=2, dim_cap=3)
    t1, t2 = cone_triangle(f1), cone_triangle(f2)
    total = sum_triangles([t1, t2])
    assert total.kind == "iso-to-cone"
    assert total.z.total_dim() == t1.z.total_dim() + t2.z.total_dim()


def test_sum_of_rotated_triangles_via_solver():
    rng = np.random.default_rng(4)
    f1 = _random_map(GF101, rng, max_support=2, dim_cap=2)
    f2 = _random_map(GF101, rng, max_support=2, dim_cap=2)
    t1, t2 = rotate(cone_triangle(f1)), rotate(cone_triangle(f2))
    total = sum_triangles([t1, t2])
    assert total.kind == "iso-to-cone"


def test_singleton_sum_is_identity():
    rng = np.random.default_rng(5)
    f = _random_map(L1, rng, max_support=2, dim_cap=3)
    tri = cone_triangle(f)
    assert sum_triangles([tri]) is tri


def test_octahedron_on_projective_maps():
    p3 = projective_module(L1, 2)
    p2 = projective_module(L1, 1)
    p1 = projective_module(L1, 0)
    f = CMap.build(stalk(p3, 0), stalk(p2, 0), {0: hom_space(p3, p2)[0]})
    g = CMap.build(stalk(p2, 0), stalk(p1, 0), {0: hom_space(p2, p1)[0]})
    oct_ = octahedron(f, g)
    assert oct_.tri_cones.kind == "iso-to-cone"
    # cohomology bookkeeping across the third cone
    hc = cohomology_dims(oct_.tri_cones.z.obj(0) and oct_.tri_g.z or oct_.tri_g.z)
    assert cohomology_dims(oct_.tri_g.z) == cohomology_dims(oct_.tri_cones.z)


def test_octahedron_random():
    rng = np.random.default_rng(6)
    for _ in range(4):
        x = random_complex(L1, rng, max_support=2, dim_cap=3)
        y = random_complex(L1, rng, max_support=2, dim_cap=3)
        z = random_complex(L1, rng, max_support=2, dim_cap=3)
        f = random_chain_map(x, y, rng)
        g = random_chain_map(y, z, rng)
        oct_ = octahedron(f, g)
        for cert in oct_.square_certs:
            assert cert.phi == cert.psi  # strict squares


def test_octahedron_identity_edge_cases():
    rng = np.random.default_rng(7)
    x = random_complex(L1, rng, max_support=2, dim_cap=3)
    y = random_complex(L1, rng, max_support=2, dim_cap=3)
    f = random_chain_map(x, y, rng)
    oct1 = octahedron(CMap.identity(x), f)
    oct2 = octahedron(f, CMap.identity(y))
    assert cohomology_dims(oct1.tri_gf.z) == cohomology_dims(oct1.tri_g.z)
    assert cohomology_dims(oct2.tri_gf.z) == cohomology_dims(oct2.tri_f.z)


def test_fill_in_identity_square():
    rng = np.random.default_rng(8)
    f = _random_map(L1, rng, max_support=2, dim_cap=3)
    tri = cone_triangle(f)
    phi3, s1, s2 = fill_in(tri, tri, CMap.identity(tri.x), CMap.identity(tri.y))
    assert phi3.src == tri.z and phi3.dst == tri.z


def test_fill_in_rejects_non_commuting_square():
    # square: id o id vs 0 o id does not commute up to homotopy on a stalk
    s1 = stalk(simple_module(L1, 0), 0)
    t1 = cone_triangle(CMap.identity(s1))
    t2 = cone_triangle(CMap.zero(s1, s1))
    with pytest.raises(ValidationError, match="commute"):
        fill_in(t1, t2, CMap.identity(s1), CMap.identity(s1))
    # mismatched endpoints
    s2 = stalk(simple_module(L1, 1), 0)
    t3 = cone_triangle(CMap.identity(s2))
    with pytest.raises(ValidationError, match="endpoints"):
        fill_in(t1, t3, CMap.identity(s1), CMap.zero(s1, s2))


def test_fillin_ambiguity_designated_triangle():
    # zero map from a stalk one degree up: cone is k^2 in a single degree,
    # where the off-diagonal fill-in survives
    k = simple_module(GF2, 0)
    x = stalk(k, 1)
    y = stalk(k, 0)
    tri = cone_triangle(CMap.zero(x, y))
    witness = fillin_ambiguity(tri)
    assert witness is not None
    a, b = witness
    assert null_homotopy(a, b) is None


def test_fillin_ambiguity_absent_for_same_degree_stalks():
    # both stalks in degree 0: the cone splits across two degrees and the
    # fill-in is unique up to homotopy
    k = simple_module(GF2, 0)
    tri = cone_triangle(CMap.zero(stalk(k, 0), stalk(k, 0)))
    assert fillin_ambiguity(tri) is None


def test_fillin_ambiguity_guard():
    k = simple_module(GF101, 0)
    tri = cone_triangle(CMap.zero(stalk(k, 1), stalk(k, 0)))
    with pytest.raises(GuardError):
        fillin_ambiguity(tri)


def test_semisimple_split_stalk_and_contractible():
    k = simple_module(GF101, 0)
    x = stalk(k, 0)
    s, p, sm, htp = semisimple_split(x)
    assert cohomology_dims(s) == {0: 1}
    # contractible: k --id--> k
    x2 = make_complex(GF101, 0, [k, k], [MMap.identity(k)])
    s2, _, _, _ = semisimple_split(x2)
    assert s2.is_zero()


def test_semisimple_split_random_betti():
    rng = np.random.default_rng(9)
    for _ in range(6):
        x = random_complex(GF101, rng, max_support=4, dim_cap=5)
        s, p, sm, htp = semisimple_split(x)
        for n in x.degrees():
            d = x.diff(n).mat
            d_prev = x.diff(n - 1).mat
            betti = x.obj(n).dim - rank(d) - rank(d_prev)
            assert s.obj(n).dim == betti


def test_semisimple_split_refuses_non_semisimple():
    x = stalk(simple_module(L1, 0), 0)
    with pytest.raises(ValidationError, match="semisimple"):
        semisimple_split(x)


def test_split_seq_to_triangle_canonical():
    # Y = X (+) Z with canonical maps: connecting map zero, certified
    from homcat.complexes import direct_sum_cx

    rng = np.random.default_rng(10)
    x = random_complex(L1, rng, max_support=2, dim_cap=3)
    z = random_complex(L1, rng, max_support=2, dim_cap=3)
    y, injs, projs = direct_sum_cx([x, z])
    tri, data = split_seq_to_triangle(injs[0], projs[1])
    assert tri.kind == "iso-to-cone"
    assert tri.h.is_zero()


def test_split_seq_from_cone():
    # 0 -> Y -> cone(f) -> Sigma X -> 0 is degreewise split by construction
    rng = np.random.default_rng(11)
    f = _random_map(L1, rng, max_support=2, dim_cap=3)
    c, parts = cone_complex(f)
    tri, data = split_seq_to_triangle(parts.iota, parts.pi)
    assert tri.kind == "iso-to-cone"


def test_split_seq_rejects_non_split():
    # 0 -> S3 -> P2 -> S2 -> 0 over Lambda_1 is exact but not split
    p2 = projective_module(L1, 1)
    s2 = simple_module(L1, 1)
    s3 = simple_module(L1, 2)
    epi = hom_space(p2, s2)[0]
    mono = hom_space(s3, p2)[0]
    with pytest.raises(ValidationError):
        split_seq_to_triangle(
            CMap.build(stalk(s3, 0), stalk(p2, 0), {0: mono}),
            CMap.build(stalk(p2, 0), stalk(s2, 0), {0: epi}),
        )


def test_certify_rejects_wrong_third_object():
    # claim cone of f is Sigma X (+) Y when f is NOT null-homotopic: must fail
    p2 = projective_module(L1, 1)
    s2 = simple_module(L1, 1)
    f_mod = hom_space(p2, s2)[0]
    x = stalk(p2, 0)
    y = stalk(s2, 0)
    f = CMap.build(x, y, {0: f_mod})
    from homcat.complexes import direct_sum_cx

    fake_z, injs, projs = direct_sum_cx([shift(x, 1), y])
    with pytest.raises(ValidationError):
        certify_triangle(f, injs[1], projs[0])
