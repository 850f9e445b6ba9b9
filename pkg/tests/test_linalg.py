"""Elimination-layer tests: frozen small cases plus randomized invariants."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homcat.linalg import (
    Fp,
    Mat,
    block_diag,
    column_space,
    in_column_span,
    inverse,
    is_nilpotent,
    is_prime,
    kernel_basis,
    quotient_structure,
    rank,
    rref,
    solve,
)


def test_prime_validation():
    assert is_prime(2) and is_prime(101)
    assert not is_prime(1) and not is_prime(91)
    with pytest.raises(ValueError):
        Mat.zeros(6, 2, 2)
    with pytest.raises(ValueError):
        Fp(1, 10)


def test_fp_arithmetic():
    a = Fp(3, 5)
    b = Fp(4, 5)
    assert (a + b).residue == 2
    assert (a * b).residue == 2
    assert (-a).residue == 2
    assert (a.inv() * a).residue == 1


def test_rref_identity_f5():
    m = Mat.identity(5, 2)
    r, pivots = rref(m)
    assert r == m
    assert pivots == (0, 1)


def test_rref_zero():
    m = Mat.zeros(7, 3, 4)
    r, pivots = rref(m)
    assert r == m
    assert pivots == ()


def test_rref_dependent_rows_f5():
    # hand row-reduction: second row is twice the first
    m = Mat.from_rows(5, [[1, 2], [2, 4]])
    r, pivots = rref(m)
    assert r == Mat.from_rows(5, [[1, 2], [0, 0]])
    assert pivots == (0,)


def test_kernel_identity_and_zero():
    assert kernel_basis(Mat.identity(3, 4)).cols == 0
    k = kernel_basis(Mat.zeros(3, 4, 4))
    assert k.cols == 4
    assert rank(k) == 4


def test_kernel_f3_enumeration_oracle():
    # oracle: enumerate all of F_3^2 and keep the vectors killed by [[1,1]]
    m = Mat.from_rows(3, [[1, 1]])
    true_kernel = {
        (x, y)
        for x, y in itertools.product(range(3), repeat=2)
        if (x + y) % 3 == 0
    }
    k = kernel_basis(m)
    assert (m @ k).is_zero()
    assert k.cols == 1
    spanned = {tuple((k.a[:, 0] * t) % 3) for t in range(3)}
    assert spanned == true_kernel


def test_solve_trivial_cases():
    b = Mat.from_rows(7, [[1], [2]])
    assert solve(Mat.identity(7, 2), b) == b
    assert solve(Mat.zeros(7, 2, 2), b) is None
    with pytest.raises(ValueError):
        solve(Mat.zeros(7, 3, 2), b)


def test_solve_f7_brute_force_oracle():
    a = Mat.from_rows(7, [[1, 1], [0, 1]])
    b = Mat.from_rows(7, [[2], [3]])
    # oracle: brute force over F_7^2
    sols = [
        (x, y)
        for x, y in itertools.product(range(7), repeat=2)
        if (x + y) % 7 == 2 and y % 7 == 3
    ]
    assert sols == [(6, 3)]
    x = solve(a, b)
    assert x is not None
    assert a @ x == b
    assert tuple(x.a[:, 0]) == (6, 3)


def test_quotient_structure_trivial():
    proj, sec = quotient_structure(3, Mat.zeros(101, 3, 0))
    assert proj == Mat.identity(101, 3)
    assert sec == Mat.identity(101, 3)
    proj, sec = quotient_structure(2, Mat.identity(2, 2))
    assert proj.rows == 0 and proj.cols == 2


def test_quotient_structure_f2_kernel_by_enumeration():
    sub = Mat.from_rows(2, [[1], [1]])
    proj, sec = quotient_structure(2, sub)
    assert proj.rows == 1
    assert (proj @ sub).is_zero()
    assert proj @ sec == Mat.identity(2, 1)
    # oracle: the kernel of proj over F_2^2 is exactly {0, (1,1)}
    killed = {
        (x, y)
        for x, y in itertools.product(range(2), repeat=2)
        if ((proj.a @ np.array([x, y])) % 2 == 0).all()
    }
    assert killed == {(0, 0), (1, 1)}


def test_column_space_picks_original_columns():
    m = Mat.from_rows(5, [[1, 2, 0], [2, 4, 1]])
    cs = column_space(m)
    assert cs.cols == 2
    assert in_column_span(cs, m)


def test_inverse_and_nilpotence():
    m = Mat.from_rows(3, [[1, 1], [0, 1]])
    mi = inverse(m)
    assert mi is not None and m @ mi == Mat.identity(3, 2)
    assert inverse(Mat.from_rows(5, [[1, 2], [2, 1]])) is not None
    assert inverse(Mat.from_rows(3, [[1, 2], [2, 4]])) is None
    assert is_nilpotent(Mat.from_rows(5, [[0, 1], [0, 0]]))
    assert not is_nilpotent(Mat.identity(5, 2))


def test_block_diag_shapes():
    b = block_diag([Mat.identity(3, 2), Mat.zeros(3, 1, 3)])
    assert b.shape == (3, 5)


PRIMES = st.sampled_from([2, 3, 5, 101])


@st.composite
def matrices(draw, max_dim=6):
    p = draw(PRIMES)
    r = draw(st.integers(min_value=0, max_value=max_dim))
    c = draw(st.integers(min_value=0, max_value=max_dim))
    entries = draw(
        st.lists(
            st.integers(min_value=0, max_value=200),
            min_size=r * c,
            max_size=r * c,
        )
    )
    return Mat(p, np.array(entries, dtype=np.int64).reshape(r, c))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_properties(m):
    r, pivots = rref(m)
    assert len(pivots) == rank(m)
    assert all(pivots[i] < pivots[i + 1] for i in range(len(pivots) - 1))
    # pivot columns are standard basis columns
    for i, pc in enumerate(pivots):
        col = r.a[:, pc]
        assert col[i] == 1 and (np.delete(col, i) == 0).all()
    # row space preserved: each reduced row solves against original rows
    if m.rows and m.cols:
        assert in_column_span(m.transpose(), r.transpose())
        assert in_column_span(r.transpose(), m.transpose())


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_kernel_rank_nullity(m):
    k = kernel_basis(m)
    assert (m @ k).is_zero()
    assert rank(m) + k.cols == m.cols
    assert rank(k) == k.cols


@settings(max_examples=100, deadline=None)
@given(matrices(max_dim=5), st.integers(min_value=0, max_value=4))
def test_solve_round_trip(a, c):
    # manufacture a consistent right-hand side, then solve must verify
    rng = np.random.default_rng(0)
    x0 = Mat(a.p, rng.integers(0, a.p, size=(a.cols, c)))
    b = a @ x0
    x = solve(a, b)
    assert x is not None
    assert a @ x == b


@settings(max_examples=100, deadline=None)
@given(matrices(max_dim=5))
def test_quotient_structure_properties(m):
    proj, sec = quotient_structure(m.rows, m)
    r = rank(m)
    assert proj.rows == m.rows - r
    assert (proj @ m).is_zero()
    assert rank(proj) == m.rows - r
    assert proj @ sec == Mat.identity(m.p, m.rows - r)
