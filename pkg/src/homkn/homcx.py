"""Cells, chains and skeleta of the coloring complex Hom(G, K_n).

A cell is a p-tuple of nonempty color sets (A_1, ..., A_p), one set per
vertex of G, with A_u and A_v disjoint across every edge (u, v).  Color
sets are stored as machine-word bitmasks: bit (c-1) stands for color c,
so n is capped at 62.  The dimension of a cell is sum(|A_j|) - p; the
0-cells are exactly the proper n-colorings of G.

The canonical order on cells is plain tuple comparison of the mask
tuples (position-major).  Every "pick a cell" step elsewhere in the
package scans in this order, which pins down all certificates.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError, ResourceLimitError
from .graphs import Graph

MAX_COLORS = 62
DEFAULT_CELL_CAP = 10_000_000

Cell = tuple  # p-tuple of int color masks


def mask_of(colors: Iterable[int]) -> int:
    m = 0
    for c in colors:
        m |= 1 << (c - 1)
    return m


def colors_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def _as_mask(entry) -> int:
    """Accept either a ready-made mask (int) or an iterable of colors."""
    if isinstance(entry, int):
        return entry
    return mask_of(entry)


def cell_of(colorsets) -> Cell:
    """Normalize a sequence of color sets (or masks) into a mask tuple."""
    return tuple(_as_mask(s) for s in colorsets)


def cell_to_lists(cell: Cell) -> list[list[int]]:
    return [list(colors_of(m)) for m in cell]


def is_cell(G: Graph, n: int, colorsets) -> bool:
    """True iff the tuple is a valid cell of Hom(G, K_n).

    Every set must be nonempty and contained in 1..n, and the two sets at
    the ends of every edge must be disjoint.  A tuple of the wrong length
    is rejected as an error, not reported False.
    """
    _check_colors(n)
    cell = cell_of(colorsets)
    if len(cell) != G.p:
        raise InputError(f"cell has {len(cell)} coordinates, graph has {G.p}")
    full = (1 << n) - 1
    for m in cell:
        if m == 0 or m & ~full:
            return False
    for u, v in G.edges:
        if cell[u - 1] & cell[v - 1]:
            return False
    return True


def is_hom_cell(G: Graph, H: Graph, colorsets) -> bool:
    """Cell test for a general target graph H (all-pairs adjacency check).

    For H = K_n this reduces to is_cell.  Only the membership test is
    supported for general H; enumeration and homology are restricted to
    complete targets.
    """
    cell = cell_of(colorsets)
    if len(cell) != G.p:
        raise InputError(f"cell has {len(cell)} coordinates, graph has {G.p}")
    full = (1 << H.p) - 1
    for m in cell:
        if m == 0 or m & ~full:
            return False
    for u, v in G.edges:
        for a in colors_of(cell[u - 1]):
            for b in colors_of(cell[v - 1]):
                if not H.has_edge(a, b):
                    return False
    return True


def _check_colors(n: int):
    if n < 1:
        raise InputError(f"color count must be >= 1, got {n}")
    if n > MAX_COLORS:
        raise InputError(f"color count {n} exceeds supported maximum {MAX_COLORS}")


def cell_dim(cell: Cell) -> int:
    """sum(|A_j|) - p."""
    return sum(m.bit_count() for m in cell) - len(cell)


class Chain:
    """Integer linear combination of equal-dimension cells.

    terms maps cell -> nonzero coefficient.  The dimension is stored
    explicitly so the zero chain of any dimension is representable.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms=None):
        self.dim = dim
        self.terms: dict[Cell, int] = {}
        if terms:
            for cell, coeff in (terms.items() if isinstance(terms, dict) else terms):
                self.add(cell, coeff)

    def add(self, cell: Cell, coeff: int):
        """Accumulate coeff * cell, dropping the term if it cancels."""
        if coeff == 0:
            return
        if cell_dim(cell) != self.dim:
            raise InputError(
                f"cell of dimension {cell_dim(cell)} in chain of dimension {self.dim}"
            )
        new = self.terms.get(cell, 0) + coeff
        if new == 0:
            self.terms.pop(cell, None)
        else:
            self.terms[cell] = new

    def add_scaled(self, other: "Chain", k: int = 1):
        if other.dim != self.dim:
            raise InputError("chain dimensions differ")
        for cell, coeff in other.terms.items():
            self.add(cell, k * coeff)

    def coefficient(self, cell: Cell) -> int:
        return self.terms.get(cell, 0)

    def copy(self) -> "Chain":
        ch = Chain(self.dim)
        ch.terms = dict(self.terms)
        return ch

    def sorted_items(self) -> list[tuple[Cell, int]]:
        return sorted(self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Chain)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return f"Chain(dim={self.dim}, 0)"
        bits = []
        for cell, coeff in self.sorted_items():
            body = ",".join("".join(map(str, colors_of(m))) for m in cell)
            bits.append(f"{'+' if coeff > 0 else '-'}{abs(coeff) if abs(coeff) != 1 else ''}({body})")
        return f"Chain(dim={self.dim}, {''.join(bits)})"


def boundary(cell: Cell) -> Chain:
    """Signed boundary of a single cell.

    For each color x sitting in a coordinate set of size >= 2, removing x
    contributes the face with sign (-1)^c(x) where c(x) counts the colors
    in all earlier coordinates plus the colors below x in its own
    coordinate.  0-cells have zero boundary.
    """
    dim = cell_dim(cell)
    out = Chain(dim - 1 if dim > 0 else 0)
    if dim == 0:
        return out
    prefix = 0
    for pos, m in enumerate(cell):
        size = m.bit_count()
        if size >= 2:
            below = 0
            mm = m
            while mm:
                low = mm & -mm
                face = cell[:pos] + (m ^ low,) + cell[pos + 1 :]
                out.add(face, -1 if (prefix + below) & 1 else 1)
                below += 1
                mm ^= low
        prefix += size
    return out


def boundary_chain(ch: Chain) -> Chain:
    """Linear extension of the boundary operator, with cancellation."""
    out = Chain(ch.dim - 1 if ch.dim > 0 else 0)
    for cell, coeff in ch.terms.items():
        out.add_scaled(boundary(cell), coeff)
    return out


def in_filtration(G: Graph, cell: Cell, i: int, j: int) -> bool:
    """True iff the first j coordinates in graph order use only colors >= i.

    These cells form the subcomplex the reduction algorithms push chains
    and paths into, one color floor at a time.
    """
    if not 0 <= j <= G.p:
        raise InputError(f"prefix length {j} out of range 0..{G.p}")
    allowed = ~((1 << (i - 1)) - 1)
    return all(not cell[G.order[q] - 1] & ~allowed for q in range(j))


def chain_in_filtration(G: Graph, ch: Chain, i: int, j: int) -> bool:
    return all(in_filtration(G, cell, i, j) for cell in ch.terms)


class ComplexSkeleton:
    """All cells of Hom(G, K_n) of dimension <= max_dim, canonically ordered."""

    def __init__(self, graph: Graph, n: int, max_dim: int, cells_by_dim):
        self.graph = graph
        self.n = n
        self.max_dim = max_dim
        self.cells_by_dim: tuple[tuple[Cell, ...], ...] = tuple(
            tuple(c) for c in cells_by_dim
        )
        self._index = None

    @property
    def index(self) -> dict[Cell, tuple[int, int]]:
        """cell -> (dim, position in the canonical order of that dimension)."""
        if self._index is None:
            self._index = {
                cell: (d, i)
                for d, cells in enumerate(self.cells_by_dim)
                for i, cell in enumerate(cells)
            }
        return self._index

    def total_cells(self) -> int:
        return sum(len(c) for c in self.cells_by_dim)

    def __repr__(self):
        return (
            f"ComplexSkeleton(p={self.graph.p}, n={self.n}, "
            f"max_dim={self.max_dim}, f={list(f_vector(self))})"
        )


def f_vector(sk: ComplexSkeleton) -> tuple[int, ...]:
    """Cell counts per dimension 0..max_dim."""
    return tuple(len(cells) for cells in sk.cells_by_dim)


def _subsets_of_mask(mask: int, max_size: int) -> Iterator[int]:
    bits = [1 << b for b in range(mask.bit_length()) if mask >> b & 1]
    for size in range(1, min(len(bits), max_size) + 1):
        for combo in combinations(bits, size):
            m = 0
            for b in combo:
                m |= b
            yield m


def enumerate_skeleton(
    G: Graph, n: int, max_dim: int, cell_cap: int = DEFAULT_CELL_CAP
) -> ComplexSkeleton:
    """Enumerate every cell of dimension <= max_dim by pruned backtracking.

    Vertices are assigned in graph order; each receives a nonempty color
    set disjoint from all previously assigned neighbors, and a branch is
    pruned as soon as the accumulated size excess exceeds max_dim.  Cells
    are sorted into canonical (mask-tuple) order per dimension.

    Raises ResourceLimitError when more than cell_cap cells would be
    produced, naming the offending dimension.
    """
    _check_colors(n)
    if max_dim < 0:
        raise InputError(f"max_dim must be >= 0, got {max_dim}")
    if cell_cap <= 0:
        raise InputError(f"cell_cap must be positive, got {cell_cap}")

    p = G.p
    full = (1 << n) - 1
    order = G.order
    # Neighbors already assigned when a vertex comes up, as order positions.
    earlier = []
    pos_of = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        earlier.append([pos_of[w] for w in G.neighbors(v) if pos_of[w] < i])

    cells_by_dim: list[list[Cell]] = [[] for _ in range(max_dim + 1)]
    count = 0
    assigned = [0] * p  # assigned[i] = mask of vertex order[i]
    native_slot = [pos_of[v] for v in range(1, p + 1)]

    def rec(i: int, excess: int):
        nonlocal count
        if i == p:
            cell = tuple(assigned[s] for s in native_slot)
            count += 1
            if count > cell_cap:
                raise ResourceLimitError(
                    f"cell cap {cell_cap} exceeded while enumerating dimension {excess}",
                    dimension=excess,
                    count=count,
                )
            cells_by_dim[excess].append(cell)
            return
        avail = full
        for j in earlier[i]:
            avail &= ~assigned[j]
        if avail == 0:
            return
        for m in _subsets_of_mask(avail, max_dim - excess + 1):
            assigned[i] = m
            rec(i + 1, excess + m.bit_count() - 1)
        assigned[i] = 0

    if p == 0:
        cells_by_dim[0].append(())
    else:
        rec(0, 0)
    for cells in cells_by_dim:
        cells.sort()
    return ComplexSkeleton(G, n, max_dim, cells_by_dim)


def count_proper_colorings(G: Graph, n: int, cell_cap: int = DEFAULT_CELL_CAP) -> int:
    """Number of proper n-colorings of G (the 0-cells of Hom(G, K_n))."""
    return len(enumerate_skeleton(G, n, 0, cell_cap).cells_by_dim[0])
