"""Independent brute-force oracles the test suite checks the library against.

Nothing here shares code with the implementation paths under test:
cells come from exhaustive tuple iteration instead of pruned
backtracking, ranks and invariant factors from sympy's dense Smith
normal form, component counts from BFS instead of union-find.
"""

from itertools import product

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form


def brute_colorings(G, n):
    """All proper n-colorings, by filtering the full color-tuple product."""
    out = []
    for combo in product(range(1, n + 1), repeat=G.p):
        if all(combo[u - 1] != combo[v - 1] for u, v in G.edges):
            out.append(combo)
    return out


def brute_cells(G, n, max_dim):
    """All cells of dimension <= max_dim, by filtering all subset tuples."""
    subsets = [frozenset(s) for s in _nonempty_subsets(n)]
    cells = []
    for combo in product(subsets, repeat=G.p):
        dim = sum(len(s) for s in combo) - G.p
        if dim > max_dim:
            continue
        if all(not (combo[u - 1] & combo[v - 1]) for u, v in G.edges):
            cells.append(tuple(tuple(sorted(s)) for s in combo))
    return sorted(cells)


def _nonempty_subsets(n):
    for bits in range(1, 1 << n):
        yield [c for c in range(1, n + 1) if bits >> (c - 1) & 1]


def dense_snf(rows):
    """(rank, invariant factors incl. units) via sympy, dense and exact."""
    m = Matrix(rows)
    if m.rows == 0 or m.cols == 0:
        return 0, ()
    d = smith_normal_form(m, domain=ZZ)
    diag = [abs(d[i, i]) for i in range(min(d.rows, d.cols)) if d[i, i] != 0]
    return len(diag), tuple(sorted(diag, key=lambda v: (v != 1, v)))


def dense_rank(rows):
    m = Matrix(rows)
    return 0 if m.rows == 0 or m.cols == 0 else m.rank()


def bfs_component_count(vertices, edges):
    """Connected components of an abstract (vertex set, edge list) graph."""
    adj = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = set()
    comps = 0
    for v in vertices:
        if v in seen:
            continue
        comps += 1
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return comps


def matrix_product_is_zero(A, B):
    """Exact check that two sparse {(r, c): v} matrices compose to zero."""
    b_rows = {}
    for (k, c), v in B.items():
        b_rows.setdefault(k, []).append((c, v))
    result = {}
    for (r, k), va in A.items():
        for c, vb in b_rows.get(k, []):
            key = (r, c)
            result[key] = result.get(key, 0) + va * vb
    return all(v == 0 for v in result.values())
