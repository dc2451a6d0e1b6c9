import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homkn import (
    Chain,
    InputError,
    PreconditionError,
    boundary,
    boundary_chain,
    cell_of,
    complete,
    cycle,
    enumerate_skeleton,
    make_graph,
    nullify_cycle,
    path,
    reduce_cycle,
    simplex_boundary,
    simplex_fill,
    star,
    verify_certificate,
    vgap,
)
from conftest import build_chain


# ---------------------------------------------------------------- simplex_fill


def test_simplex_fill_triangle():
    z = {(3, 4): -1, (3, 5): 1, (4, 5): -1}
    assert simplex_fill(z) == {(3, 4, 5): -1}


def test_simplex_fill_rejects_non_cycles_and_zero():
    with pytest.raises(InputError):
        simplex_fill({(1, 2): 1})
    with pytest.raises(InputError):
        simplex_fill({})


def test_simplex_fill_cone_recovers_simplex():
    z = simplex_boundary({(2, 4, 6): 1})
    tau = simplex_fill(z)
    assert tau == {(2, 4, 6): 1}


@st.composite
def simplex_cycles(draw):
    verts = draw(st.lists(st.integers(min_value=1, max_value=9), min_size=3, max_size=6, unique=True))
    verts = tuple(sorted(verts))
    top = draw(st.integers(min_value=2, max_value=len(verts) - 1))
    from itertools import combinations

    chain = {}
    for s in combinations(verts, top + 1):
        k = draw(st.integers(min_value=-3, max_value=3))
        if k:
            chain[s] = k
    return simplex_boundary(chain)


@settings(max_examples=80, deadline=None)
@given(simplex_cycles())
def test_simplex_fill_fills_every_cycle(z):
    if not z:
        return
    tau = simplex_fill(z)
    assert simplex_boundary(tau) == z
    support = {v for s in z for v in s}
    assert {v for s in tau for v in s} <= support


# ---------------------------------------------------------------- reduce_cycle


def test_reduce_golden_worked_example(
    square_diag, eight_term_cycle, reduced_after_coord3, reduced_final
):
    snapshots = {}

    def hook(stage, pos, coord, chain):
        snapshots[(stage, coord)] = chain

    out, cert = reduce_cycle(square_diag, 7, eight_term_cycle, 2, phase_hook=hook)
    assert snapshots[("nonprefix", 3)] == reduced_after_coord3
    assert out == reduced_final
    assert verify_certificate(square_diag, 7, eight_term_cycle, out, cert).ok
    assert not boundary_chain(out)


def test_reduce_i3_continues_from_reduced(square_diag, reduced_final):
    out, cert = reduce_cycle(square_diag, 7, reduced_final, 3)
    assert verify_certificate(square_diag, 7, reduced_final, out, cert).ok
    from homkn import chain_in_filtration

    assert chain_in_filtration(square_diag, out, 3, square_diag.lam)


def test_reduce_empty_chain():
    out, cert = reduce_cycle(cycle(5), 5, Chain(1), 2)
    assert not out and cert.additions == ()


def test_reduce_rejects_non_cycle(square_diag):
    ch = Chain(1, {cell_of([[1], [6, 7], [2], [3]]): 1})
    with pytest.raises(PreconditionError):
        reduce_cycle(square_diag, 7, ch, 2)


def test_reduce_rejects_out_of_range_dimension():
    g = star(3)  # maxval 3, so n = 6 admits only t = 1
    c = boundary(cell_of([[1, 2], [1, 2], [1], [3, 4]]))  # a 2-cycle
    assert c.dim == 2 and not boundary_chain(c)
    with pytest.raises(PreconditionError):
        reduce_cycle(g, 6, c, 2)


def test_reduce_rejects_support_outside_filtration(square_diag, eight_term_cycle):
    with pytest.raises(PreconditionError):
        reduce_cycle(square_diag, 7, eight_term_cycle, 3)


def test_reduce_rejects_invalid_cells():
    g = complete(2)
    bad = Chain(1, {cell_of([[1, 2], [2]]): 1})
    with pytest.raises(InputError):
        reduce_cycle(g, 4, bad, 2)


def test_reduce_phase_keeps_untouched_coordinates_inside_their_support(square_diag):
    # While coordinate v is being purged, the colors used on every other
    # coordinate stay inside the supersets they occupied before the phase.
    sk = enumerate_skeleton(square_diag, 6, 2)
    rng = random.Random(99)
    for _ in range(10):
        sigma = rng.choice(sk.cells_by_dim[2])
        c = boundary(sigma)
        snapshots = [(None, c)]

        def hook(stage, pos, coord, chain):
            snapshots.append((coord, chain))

        out, cert = reduce_cycle(square_diag, 6, c, 2, phase_hook=hook)
        assert verify_certificate(square_diag, 6, c, out, cert).ok
        for (prev_coord, before), (coord, after) in zip(snapshots, snapshots[1:]):
            for b in range(1, 5):
                if b == coord:
                    continue
                sup_before = 0
                for cell in before.terms:
                    sup_before |= cell[b - 1]
                for cell in after.terms:
                    assert not cell[b - 1] & ~sup_before


# --------------------------------------------------------------- nullify_cycle


def test_nullify_boundary_of_single_cell():
    g = cycle(5)
    sk = enumerate_skeleton(g, 5, 2)
    rng = random.Random(4)
    for _ in range(5):
        sigma = rng.choice(sk.cells_by_dim[2])
        c = boundary(sigma)
        cert = nullify_cycle(g, 5, c)
        assert verify_certificate(g, 5, c, Chain(c.dim), cert).ok


def test_nullify_worked_example_cycle(square_diag, eight_term_cycle):
    assert vgap(square_diag, 7) == 4
    cert = nullify_cycle(square_diag, 7, eight_term_cycle)
    assert verify_certificate(square_diag, 7, eight_term_cycle, Chain(2), cert).ok


def test_nullify_hexagon_cycle_in_k2_k4():
    g = complete(2)
    # the hexagon of Hom(K_2, K_3) sits inside Hom(K_2, K_4), where vgap = 2
    cells = [
        [[1], [2, 3]], [[2], [1, 3]], [[3], [1, 2]],
        [[1, 2], [3]], [[1, 3], [2]], [[2, 3], [1]],
    ]
    ch = Chain(1)
    for lists in cells:
        cell = cell_of(lists)
        face_signs = boundary(cell)
        ch.add(cell, 1)
    # build a genuine 1-cycle: alternate orientations around the hexagon
    ch = _hexagon_cycle()
    assert not boundary_chain(ch)
    cert = nullify_cycle(g, 4, ch)
    assert verify_certificate(g, 4, ch, Chain(1), cert).ok


def _hexagon_cycle():
    verts = [(1, 2), (1, 3), (2, 3), (2, 1), (3, 1), (3, 2)]
    ch = Chain(1)
    for k in range(6):
        a, b = verts[k], verts[(k + 1) % 6]
        edge = tuple((1 << (x - 1)) | (1 << (y - 1)) if x != y else (1 << (x - 1))
                     for x, y in zip(a, b))
        face = boundary(edge)
        av = tuple(1 << (x - 1) for x in a)
        bv = tuple(1 << (x - 1) for x in b)
        # orient the edge from a to b
        ch.add(edge, face.coefficient(bv))
    return ch


def test_nullify_rejects_dimension_zero_and_too_big():
    g = cycle(5)
    sk = enumerate_skeleton(g, 5, 2)
    c = boundary(sk.cells_by_dim[1][0])  # dim 0
    with pytest.raises(PreconditionError):
        nullify_cycle(g, 5, c)
    sk6 = enumerate_skeleton(g, 6, 4)
    c3 = boundary(sk6.cells_by_dim[4][0])  # t = 3 > vgap(C_5,6)-1 = 2
    with pytest.raises(PreconditionError):
        nullify_cycle(g, 6, c3)


def test_nullify_empty_chain():
    cert = nullify_cycle(cycle(5), 5, Chain(1))
    assert cert.additions == ()


def test_nullify_across_suite_graphs():
    rng = random.Random(31)
    cases = [(path(3), 5, 1), (path(4), 5, 1), (cycle(4), 6, 2), (star(3), 6, 1),
             (make_graph(3, []), 4, 2)]
    for g, n, t in cases:
        sk = enumerate_skeleton(g, n, t + 1)
        for _ in range(3):
            sigma = rng.choice(sk.cells_by_dim[t + 1])
            c = boundary(sigma)
            cert = nullify_cycle(g, n, c)
            assert verify_certificate(g, n, c, Chain(t), cert).ok, (g, n, t)


# ---------------------------------------------------------- verify_certificate


def test_verify_rejects_perturbed_coefficient(square_diag, eight_term_cycle, reduced_final):
    out, cert = reduce_cycle(square_diag, 7, eight_term_cycle, 2)
    coeff, cell = cert.additions[0]
    from homkn import ChainCertificate

    bad = ChainCertificate(
        cert.t, ((coeff + 1, cell),) + cert.additions[1:], cert.initial, cert.final
    )
    res = verify_certificate(square_diag, 7, eight_term_cycle, out, bad)
    assert not res.ok and res.trail


def test_verify_rejects_invalid_cell(square_diag, eight_term_cycle):
    out, cert = reduce_cycle(square_diag, 7, eight_term_cycle, 2)
    from homkn import ChainCertificate

    bad_cell = cell_of([[1], [1, 6], [2, 3], [2]])  # hits coordinate 1 across an edge
    bad = ChainCertificate(
        cert.t, cert.additions + ((1, bad_cell),), cert.initial, cert.final
    )
    res = verify_certificate(square_diag, 7, eight_term_cycle, out, bad)
    assert not res.ok


def test_verify_empty_certificate_equal_chains(eight_term_cycle, square_diag):
    from homkn import ChainCertificate

    cert = ChainCertificate(2, (), eight_term_cycle, eight_term_cycle)
    assert verify_certificate(
        square_diag, 7, eight_term_cycle, eight_term_cycle, cert
    ).ok
