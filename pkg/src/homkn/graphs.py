"""Finite simple graphs with a canonical independent-prefix vertex order.

Vertices are 1-based (1..p).  Every graph carries `order`, a permutation
of its vertices such that the first `lam` entries form a maximal
independent set; both constructive algorithms in this package process
coordinates in that order.  The prefix is computed by a deterministic
greedy rule so that all emitted certificates are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected loopless graph on vertices 1..p.

    edges      normalized (u < v), sorted
    order      permutation of 1..p; order[:lam] is a maximal independent set
    lam        length of the independent prefix
    adj_masks  adj_masks[v-1] has bit (w-1) set iff (v, w) is an edge
    """

    p: int
    edges: tuple[tuple[int, int], ...]
    order: tuple[int, ...]
    lam: int
    adj_masks: tuple[int, ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return _mask_bits(self.adj_masks[v - 1])

    def degree(self, v: int) -> int:
        return self.adj_masks[v - 1].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_masks[u - 1] >> (v - 1) & 1)

    def __repr__(self):
        return f"Graph(p={self.p}, edges={list(self.edges)})"


def _mask_bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def make_graph(p: int, edges) -> Graph:
    """Build a Graph from a vertex count and unordered edge pairs.

    Symmetrizes and deduplicates the edge set.  Rejects loops (u, u) and
    out-of-range endpoints.
    """
    if p < 0:
        raise InputError(f"vertex count must be nonnegative, got {p}")
    adj = [0] * p
    seen = set()
    for pair in edges:
        u, v = pair
        if u == v:
            raise InputError(f"loop edge ({u},{u}) not allowed")
        if not (1 <= u <= p and 1 <= v <= p):
            raise InputError(f"edge ({u},{v}) out of range 1..{p}")
        if u > v:
            u, v = v, u
        seen.add((u, v))
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    order, lam = _greedy_prefix(p, adj)
    return Graph(p, tuple(sorted(seen)), order, lam, tuple(adj))


def _greedy_prefix(p, adj):
    """Greedy maximal independent set, scanning vertices in ascending index.

    A vertex joins the independent set iff none of its neighbors was
    already selected.  Selected vertices come first (ascending), the rest
    follow (ascending).
    """
    selected_mask = 0
    selected = []
    rest = []
    for v in range(1, p + 1):
        if adj[v - 1] & selected_mask:
            rest.append(v)
        else:
            selected.append(v)
            selected_mask |= 1 << (v - 1)
    return tuple(selected + rest), len(selected)


def maximal_independent_prefix(G: Graph) -> tuple[tuple[int, ...], int]:
    """Return the (order, lam) the graph was constructed with."""
    return G.order, G.lam


def maxval(G: Graph) -> int:
    """Maximum vertex degree; 0 for edgeless graphs."""
    if G.p == 0:
        return 0
    return max(m.bit_count() for m in G.adj_masks)


def vgap(G: Graph, n: int) -> int:
    """Color-valency gap n - maxval(G) - 1 (may be negative)."""
    if n < 1:
        raise InputError(f"color count must be >= 1, got {n}")
    return n - maxval(G) - 1


def complete(m: int) -> Graph:
    """Complete graph K_m."""
    if m < 1:
        raise InputError(f"complete(m) needs m >= 1, got {m}")
    return make_graph(m, [(u, v) for u in range(1, m + 1) for v in range(u + 1, m + 1)])


def cycle(m: int) -> Graph:
    """Cycle C_m, m >= 3 (smaller cycles would need loops or multi-edges)."""
    if m < 3:
        raise InputError(f"cycle(m) needs m >= 3, got {m}")
    return make_graph(m, [(v, v % m + 1) for v in range(1, m + 1)])


def path(m: int) -> Graph:
    """Path P_m on m vertices."""
    if m < 1:
        raise InputError(f"path(m) needs m >= 1, got {m}")
    return make_graph(m, [(v, v + 1) for v in range(1, m)])


def star(k: int) -> Graph:
    """Star K_{1,k}: leaves 1..k, hub k+1.

    Leaves are numbered first so the greedy rule selects all of them as
    the independent prefix (lam = k).
    """
    if k < 1:
        raise InputError(f"star(k) needs k >= 1, got {k}")
    return make_graph(k + 1, [(j, k + 1) for j in range(1, k + 1)])


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """Disjoint union; H's vertices are shifted by G.p, ordering recomputed."""
    edges = list(G.edges) + [(u + G.p, v + G.p) for (u, v) in H.edges]
    return make_graph(G.p + H.p, edges)


def remove_independent_prefix(G: Graph) -> tuple[Graph, list[int]]:
    """Induced subgraph on the non-prefix vertices, renumbered 1..p'.

    Returns (H, kept) where kept[k-1] is the original label of H's vertex
    k (ascending).  Because the prefix is a maximal independent set, every
    kept vertex loses at least one neighbor, so maxval strictly drops
    whenever G had any edges; both recursive algorithms rely on that.
    """
    prefix = set(G.order[: G.lam])
    kept = [v for v in range(1, G.p + 1) if v not in prefix]
    rank = {v: i + 1 for i, v in enumerate(kept)}
    sub_edges = [(rank[u], rank[v]) for (u, v) in G.edges if u in rank and v in rank]
    return make_graph(len(kept), sub_edges), kept
