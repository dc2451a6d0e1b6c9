"""The Smith normal form backends against a dense sympy oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homkn import boundary_matrix, complete, enumerate_skeleton, smith_normal_form
from homkn import snf as snf_module
from homkn._snf_py import snf_diagonal
from homkn.snf import normalize_diagonal, snf_triplets
from oracles import dense_snf


def factors_of(rows):
    rank, diag = snf_diagonal(len(rows), len(rows[0]) if rows else 0,
                              [(r, c, v) for r, row in enumerate(rows) for c, v in enumerate(row) if v])
    return rank, normalize_diagonal(diag)


def test_zero_matrix():
    assert factors_of([[0, 0], [0, 0]]) == (0, ())
    res = smith_normal_form({})
    assert res.rank == 0 and res.invariant_factors == ()


def test_diag_two():
    assert factors_of([[2]]) == (1, (2,))


def test_already_diagonal_chain():
    assert factors_of([[6, 0], [0, 4]]) == (2, (2, 12))


def test_torsion_textbook():
    # cokernel Z/2 + Z/6
    rank, factors = factors_of([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert (rank, factors) == (3, (2, 2, 156))


def test_hexagon_rank():
    sk = enumerate_skeleton(complete(2), 3, 1)
    res = smith_normal_form(boundary_matrix(sk, 1))
    assert res.rank == 5
    assert res.invariant_factors == (1, 1, 1, 1, 1)


def test_normalize_diagonal():
    assert normalize_diagonal([]) == ()
    assert normalize_diagonal([1, 1, 2]) == (1, 1, 2)
    assert normalize_diagonal([6, 10, 15]) == (1, 30, 30)
    assert normalize_diagonal([-4, 6]) == (2, 12)


def test_big_integers_pure_backend():
    big = 10**30
    rank, factors = snf_triplets(2, 2, [(0, 0, big), (1, 1, 3)], force_pure=True)
    assert rank == 2 and factors == (1, 3 * big)
    rank2, factors2 = snf_triplets(2, 2, [(0, 0, big), (1, 1, 4 * big)], force_pure=True)
    assert rank2 == 2 and factors2 == (big, 4 * big)


@st.composite
def small_matrices(draw):
    n_rows = draw(st.integers(min_value=1, max_value=5))
    n_cols = draw(st.integers(min_value=1, max_value=5))
    rows = [
        [draw(st.integers(min_value=-9, max_value=9)) for _ in range(n_cols)]
        for _ in range(n_rows)
    ]
    return rows


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_matches_sympy_oracle(rows):
    rank, factors = factors_of(rows)
    o_rank, o_factors = dense_snf(rows)
    assert rank == o_rank
    assert factors == o_factors


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_backends_agree(rows):
    triplets = [(r, c, v) for r, row in enumerate(rows) for c, v in enumerate(row) if v]
    pure = snf_triplets(len(rows), len(rows[0]), triplets, force_pure=True)
    active = snf_triplets(len(rows), len(rows[0]), triplets)
    assert pure == active


@pytest.mark.skipif(snf_module._snf_core is None, reason="compiled kernel not built")
def test_compiled_backend_present_and_agrees():
    sk = enumerate_skeleton(complete(3), 5, 2)
    m = boundary_matrix(sk, 2)
    pure = snf_triplets(m.n_rows, m.n_cols, m.triplets(), force_pure=True)
    fast = snf_module._snf_core.snf_diagonal(m.n_rows, m.n_cols, m.triplets())
    assert pure == (fast[0], normalize_diagonal(fast[1]))
