import pytest

from homkn import Chain, cell_dim, cell_of, make_graph


def build_chain(terms):
    """Chain from (coeff, color-lists) pairs, e.g. (1, [[1],[6,7],[2],[3]])."""
    cells = [(cell_of(lists), k) for k, lists in terms]
    ch = Chain(cell_dim(cells[0][0]))
    for cell, k in cells:
        ch.add(cell, k)
    return ch


@pytest.fixture
def square_diag():
    """The 4-cycle labeled so vertices 1, 2 are the independent diagonal.

    Its greedy order is the identity, so coordinates of cells coincide
    with graph-order positions.
    """
    return make_graph(4, [(1, 3), (2, 3), (2, 4), (1, 4)])


@pytest.fixture
def eight_term_cycle():
    """A 2-cycle in Hom(C_4, K_7) living over the diagonal-labeled square."""
    return build_chain(
        [
            (-1, [[1], [7], [2, 3, 4], [2]]),
            (+1, [[1], [6], [2, 3, 4], [2]]),
            (-1, [[1], [6, 7], [3, 4], [2]]),
            (+1, [[1], [6, 7], [2, 4], [2]]),
            (+1, [[1], [7], [2, 3, 5], [2]]),
            (-1, [[1], [6], [2, 3, 5], [2]]),
            (+1, [[1], [6, 7], [3, 5], [2]]),
            (-1, [[1], [6, 7], [2, 5], [2]]),
        ]
    )


@pytest.fixture
def reduced_after_coord3():
    return build_chain(
        [
            (-1, [[1], [6, 7], [3, 4], [2]]),
            (+1, [[1], [6, 7], [3, 5], [2]]),
            (-1, [[1], [6, 7], [4, 5], [2]]),
            (-1, [[1], [7], [3, 4, 5], [2]]),
            (+1, [[1], [6], [3, 4, 5], [2]]),
        ]
    )


@pytest.fixture
def reduced_final():
    return build_chain(
        [
            (-1, [[2], [6, 7], [3, 4], [3]]),
            (+1, [[2], [6, 7], [3, 5], [3]]),
            (-1, [[2], [6, 7], [4, 5], [3]]),
            (-1, [[2], [7], [3, 4, 5], [3]]),
            (+1, [[2], [6], [3, 4, 5], [3]]),
        ]
    )
