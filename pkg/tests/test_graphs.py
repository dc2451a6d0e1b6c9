from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homkn import (
    InputError,
    complete,
    cycle,
    disjoint_union,
    make_graph,
    maximal_independent_prefix,
    maxval,
    path,
    remove_independent_prefix,
    star,
    vgap,
)


def test_make_graph_square():
    g = make_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert g.p == 4
    assert g.edges == ((1, 2), (1, 4), (2, 3), (3, 4))
    assert maxval(g) == 2


def test_make_graph_symmetrizes_and_dedups():
    g = make_graph(3, [(1, 2), (2, 1), (2, 1)])
    assert g.edges == ((1, 2),)
    assert g.has_edge(1, 2) and g.has_edge(2, 1)


def test_make_graph_single_vertex():
    g = make_graph(1, [])
    assert g.p == 1 and g.lam == 1


def test_make_graph_rejects_loops_and_range():
    with pytest.raises(InputError):
        make_graph(3, [(2, 2)])
    with pytest.raises(InputError):
        make_graph(3, [(1, 4)])
    with pytest.raises(InputError):
        make_graph(3, [(0, 1)])


def test_builders_match_known_edge_sets():
    assert set(cycle(3).edges) == set(complete(3).edges)
    assert set(path(2).edges) == set(complete(2).edges)
    assert maxval(complete(5)) == 4
    assert maxval(cycle(7)) == 2
    assert maxval(path(3)) == 2
    assert maxval(star(3)) == 3
    with pytest.raises(InputError):
        cycle(2)
    with pytest.raises(InputError):
        complete(0)


def test_maxval_edgeless():
    assert maxval(make_graph(5, [])) == 0


def test_vgap_values():
    assert vgap(cycle(5), 5) == 2
    assert vgap(complete(1), 1) == 0
    assert vgap(star(3), 3) == -1
    with pytest.raises(InputError):
        vgap(complete(2), 0)


def test_greedy_prefix_square():
    # Scanning 1, 2, 3, 4: vertex 2 is blocked by 1, vertex 3 is free.
    order, lam = maximal_independent_prefix(cycle(4))
    assert order == (1, 3, 2, 4)
    assert lam == 2


def test_greedy_prefix_edgeless_and_complete():
    assert maximal_independent_prefix(make_graph(3, [])) == ((1, 2, 3), 3)
    assert maximal_independent_prefix(complete(3)) == ((1, 2, 3), 1)


def test_star_prefix_is_the_leaves():
    g = star(3)
    assert g.lam == 3
    assert g.order == (1, 2, 3, 4)


def test_disjoint_union():
    g = disjoint_union(complete(1), complete(1))
    assert g.p == 2 and g.edges == ()
    h = disjoint_union(complete(2), complete(2))
    assert h.p == 4 and len(h.edges) == 2 and maxval(h) == 1
    c = disjoint_union(cycle(4), complete(1))
    assert maxval(c) == 2 and c.lam == 3


def test_remove_independent_prefix():
    g = cycle(4)  # order (1,3,2,4), prefix {1,3}
    h, kept = remove_independent_prefix(g)
    assert kept == [2, 4]
    assert h.p == 2 and h.edges == ()
    h2, kept2 = remove_independent_prefix(complete(4))
    assert kept2 == [2, 3, 4] and set(h2.edges) == {(1, 2), (1, 3), (2, 3)}


@st.composite
def random_graphs(draw):
    p = draw(st.integers(min_value=1, max_value=8))
    pairs = list(combinations(range(1, p + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return make_graph(p, chosen)


@given(random_graphs())
def test_prefix_is_maximal_independent(g):
    prefix = set(g.order[: g.lam])
    for u in prefix:
        assert not any(v in prefix for v in g.neighbors(u))
    for v in range(1, g.p + 1):
        if v not in prefix:
            assert any(w in prefix for w in g.neighbors(v))
    assert (g.lam == g.p) == (g.edges == ())
    assert sorted(g.order) == list(range(1, g.p + 1))


@given(random_graphs())
def test_handshake(g):
    assert sum(g.degree(v) for v in range(1, g.p + 1)) == 2 * len(g.edges)


@given(random_graphs(), random_graphs())
def test_union_maxval(g, h):
    assert maxval(disjoint_union(g, h)) == max(maxval(g), maxval(h))


@given(random_graphs())
def test_prefix_removal_reduces_maxval(g):
    h, _ = remove_independent_prefix(g)
    if g.edges:
        assert maxval(h) < maxval(g)
    else:
        assert h.p == 0
