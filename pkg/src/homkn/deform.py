"""Loop contraction in the 1-skeleton of Hom(G, K_n), with move certificates.

A closed edge-path is a cyclic sequence of proper colorings, consecutive
entries differing in exactly one coordinate.  When vgap(G, n) >= 2 any
such loop contracts to a point, and contract_loop produces the explicit
sequence of elementary homotopies doing so.  Each move is supported on a
single 1- or 2-cell, so a verifier can replay the whole deformation and
check every step locally (verify_moves).

The contraction strategy: for i = 2..n deform the loop so the colors on
the independent-prefix coordinates climb from {i-1,...,n} into {i,...,n}
(advance_path_filtration); after i = n those coordinates are pinned to
the single color n, the loop lives in the subcomplex on the remaining
vertices with one color fewer, and recursion finishes the job.  The
maximal degree strictly drops each level, so the recursion terminates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InputError, InternalInvariantError, PreconditionError
from .graphs import Graph, maxval, remove_independent_prefix, vgap
from .homcx import Cell, cell_dim, enumerate_skeleton, is_cell

Coloring = tuple  # p-tuple of colors (plain ints)

DROP_REPEAT = "drop_repeat"
INSERT_PAIR = "insert_pair"
DELETE_VERTEX = "delete_vertex"


@dataclass(frozen=True)
class HomotopyMove:
    """One elementary homotopy applied at `position` of the current path.

    drop_repeat    removes the duplicate following position (no support)
    insert_pair    splices two vertices after position, supported on a
                   2-cell (or a 1-cell when the pair is degenerate)
    delete_vertex  removes the vertex at position, supported on a 2-cell
                   (or a 1-cell when its two neighbors agree)
    """

    kind: str
    position: int
    inserted: tuple[Coloring, Coloring] | None = None
    deleted: Coloring | None = None
    support: Cell | None = None


class EdgePath:
    """Closed edge-path, stored without the closing duplicate.

    The wrap-around step from the last vertex back to the first is
    implicit.  An input sequence whose last entry equals its first is
    accepted and the redundant closing entry dropped.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        verts = [tuple(v) for v in vertices]
        if not verts:
            raise InputError("a closed path needs at least one vertex")
        if len(verts) > 1 and verts[0] == verts[-1]:
            verts.pop()
        plen = len(verts[0])
        if any(len(v) != plen for v in verts):
            raise InputError("path vertices have inconsistent lengths")
        self.vertices = verts

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return isinstance(other, EdgePath) and self.vertices == other.vertices

    def __repr__(self):
        return f"EdgePath({self.vertices})"


def _diff_coords(u: Coloring, w: Coloring) -> list[int]:
    """1-based coordinates where two colorings differ."""
    return [j + 1 for j, (a, b) in enumerate(zip(u, w)) if a != b]


def _vertex_cell(u: Coloring) -> Cell:
    return tuple(1 << (c - 1) for c in u)


def _support_cell(u: Coloring, overrides: dict[int, int]) -> Cell:
    """Cell with u's singleton masks except at the overridden coordinates."""
    return tuple(
        overrides.get(j + 1, 1 << (u[j] - 1)) for j in range(len(u))
    )


def _with_color(u: Coloring, coord: int, color: int) -> Coloring:
    return u[: coord - 1] + (color,) + u[coord:]


def validate_path(G: Graph, n: int, path: EdgePath):
    """Reject paths that are not closed edge-paths in the 1-skeleton."""
    verts = path.vertices
    if len(verts[0]) != G.p:
        raise InputError(f"path vertices have {len(verts[0])} coordinates, graph has {G.p}")
    for u in verts:
        if not is_cell(G, n, _vertex_cell(u)):
            raise InputError(f"path vertex {u} is not a proper {n}-coloring")
    m = len(verts)
    if m == 1:
        return
    for k in range(m):
        d = _diff_coords(verts[k], verts[(k + 1) % m])
        if len(d) > 1:
            raise InputError(
                f"vertices {k} and {(k + 1) % m} differ in coordinates {d}; not an edge"
            )


def _normalize_inplace(verts: list, moves: list):
    while len(verts) >= 2:
        m = len(verts)
        k = next((i for i in range(m) if verts[i] == verts[(i + 1) % m]), None)
        if k is None:
            return
        moves.append(HomotopyMove(DROP_REPEAT, k))
        del verts[(k + 1) % m]


def normalize_path(path: EdgePath) -> tuple[EdgePath, list[HomotopyMove]]:
    """Remove consecutive duplicate vertices, recording DropRepeat moves.

    Rejects sequences where some consecutive pair differs in two or more
    coordinates (not a path at all).
    """
    verts = path.vertices
    m = len(verts)
    if m > 1:
        for k in range(m):
            d = _diff_coords(verts[k], verts[(k + 1) % m])
            if len(d) > 1:
                raise InputError(
                    f"vertices {k} and {(k + 1) % m} differ in coordinates {d}; not a path"
                )
    out = list(verts)
    moves: list[HomotopyMove] = []
    _normalize_inplace(out, moves)
    return EdgePath(out), moves


def _smallest_replacement(G: Graph, n: int, u, w, coord: int, col: int) -> int:
    """Smallest color usable at `coord` by both endpoint colorings.

    Avoids col and every color either coloring puts on a neighbor of the
    coordinate's vertex; vgap >= 2 guarantees such a color exists.
    """
    banned = 1 << (col - 1)
    for nb in G.neighbors(coord):
        banned |= 1 << (u[nb - 1] - 1)
        banned |= 1 << (w[nb - 1] - 1)
    avail = ((1 << n) - 1) & ~banned
    if avail == 0:
        raise PreconditionError(
            f"no replacement color at coordinate {coord}: requires n >= maxval + 3"
        )
    return (avail & -avail).bit_length()


def _purge_color(G, n, verts, coord, col, moves, pick):
    """Deform the loop so no vertex uses color col at coordinate coord.

    First splices a detour past every adjacent pair that both use col
    there (insert_pair over a 2-cell); afterwards the offenders are
    isolated and each is deleted (delete_vertex over a 2-cell, or over a
    1-cell when its two neighbors agree).
    """
    # A constant loop whose single vertex is the offender: reroute it
    # across the connecting 1-cell.
    if len(verts) == 1 and verts[0][coord - 1] == col:
        u = verts[0]
        z = pick(u, u)
        U = _with_color(u, coord, z)
        support = _support_cell(u, {coord: (1 << (z - 1)) | (1 << (col - 1))})
        moves.append(HomotopyMove(INSERT_PAIR, 0, inserted=(U, U), support=support))
        verts.extend([U, U])
        moves.append(HomotopyMove(DROP_REPEAT, 1))
        del verts[2]
        moves.append(HomotopyMove(DELETE_VERTEX, 0, deleted=u, support=support))
        del verts[0]
        return

    # Separate col-col pairs.
    k = 0
    while len(verts) >= 2 and k < len(verts):
        u = verts[k]
        w = verts[(k + 1) % len(verts)]
        if u[coord - 1] == col and w[coord - 1] == col:
            z = pick(u, w)
            diffs = _diff_coords(u, w)
            if len(diffs) != 1:
                raise InternalInvariantError("unnormalized pair during color purge")
            mu = diffs[0]
            U1 = _with_color(u, coord, z)
            U2 = _with_color(w, coord, z)
            support = _support_cell(
                u,
                {
                    coord: (1 << (z - 1)) | (1 << (col - 1)),
                    mu: (1 << (u[mu - 1] - 1)) | (1 << (w[mu - 1] - 1)),
                },
            )
            moves.append(HomotopyMove(INSERT_PAIR, k, inserted=(U1, U2), support=support))
            verts[k + 1 : k + 1] = [U1, U2]
            k += 3
        else:
            k += 1

    # Delete the now-isolated offenders.
    while True:
        k = next((i for i, u in enumerate(verts) if u[coord - 1] == col), None)
        if k is None:
            return
        m = len(verts)
        if m == 1:
            raise InternalInvariantError("cannot delete the only vertex of a loop")
        victim = verts[k]
        pred = verts[(k - 1) % m]
        succ = verts[(k + 1) % m]
        x = pred[coord - 1]
        y = succ[coord - 1]
        if x == col or y == col:
            raise InternalInvariantError("offender not isolated after pair separation")
        mask = (1 << (x - 1)) | (1 << (y - 1)) | (1 << (col - 1))
        support = _support_cell(victim, {coord: mask})
        moves.append(HomotopyMove(DELETE_VERTEX, k, deleted=victim, support=support))
        del verts[k]
        m = len(verts)
        if m >= 2 and pred == succ:
            pi = (k - 1) % m
            moves.append(HomotopyMove(DROP_REPEAT, pi))
            del verts[k % m]


def _advance_inplace(G, n, verts, i, moves):
    lam = G.lam
    order = G.order
    for pos in range(lam, G.p):
        coord = order[pos]
        _purge_color(
            G, n, verts, coord, i,
            moves, lambda u, w, c=coord: _smallest_replacement(G, n, u, w, c, i),
        )
    for pos in range(lam):
        coord = order[pos]
        _purge_color(
            G, n, verts, coord, i - 1,
            moves, lambda u, w, c=coord: _lift_color(G, i, u, w, c),
        )


def _lift_color(G, i, u, w, coord):
    """Steps on prefix coordinates always lift i-1 to i; the prefix is
    independent, so after the first stage no neighbor of coord uses i."""
    for nb in G.neighbors(coord):
        if u[nb - 1] == i or w[nb - 1] == i:
            raise InternalInvariantError(
                f"color {i} still present on a neighbor of coordinate {coord}"
            )
    return i


def advance_path_filtration(G: Graph, n: int, path: EdgePath, i: int):
    """Deform a loop whose prefix colors lie in {i-1..n} to one in {i..n}.

    The first stage removes color i from every non-prefix coordinate (in
    graph order); the second removes i-1 from the prefix coordinates by
    lifting it to i.  Returns the deformed path and the move list
    replaying the deformation.  Requires vgap(G, n) >= 2.
    """
    if vgap(G, n) < 2:
        raise PreconditionError(f"vgap({n}) = {vgap(G, n)} < 2")
    if not 2 <= i <= n:
        raise InputError(f"color floor i={i} out of range 2..{n}")
    validate_path(G, n, path)
    floor_mask = (1 << (i - 2)) - 1  # colors < i-1
    for idx, u in enumerate(path.vertices):
        for pos in range(G.lam):
            coord = G.order[pos]
            if (1 << (u[coord - 1] - 1)) & floor_mask:
                raise PreconditionError(
                    f"vertex {idx} uses color {u[coord - 1]} < {i - 1} "
                    f"at prefix coordinate {coord}"
                )
    verts = list(path.vertices)
    moves: list[HomotopyMove] = []
    _normalize_inplace(verts, moves)
    _advance_inplace(G, n, verts, i, moves)
    out = EdgePath(verts)
    bad_mask = (1 << (i - 1)) - 1  # colors < i
    for u in out.vertices:
        for pos in range(G.lam):
            coord = G.order[pos]
            if (1 << (u[coord - 1] - 1)) & bad_mask:
                raise InternalInvariantError("prefix coordinate kept a low color")
    return out, moves


def _lift_coloring(u_sub, keep, p, n):
    out = [n] * p
    for idx, v in enumerate(keep):
        out[v - 1] = u_sub[idx]
    return tuple(out)


def _lift_cell(cell_sub, keep, p, n):
    out = [1 << (n - 1)] * p
    for idx, v in enumerate(keep):
        out[v - 1] = cell_sub[idx]
    return tuple(out)


def _lift_move(mv: HomotopyMove, keep, p, n) -> HomotopyMove:
    return HomotopyMove(
        mv.kind,
        mv.position,
        inserted=tuple(_lift_coloring(u, keep, p, n) for u in mv.inserted)
        if mv.inserted
        else None,
        deleted=_lift_coloring(mv.deleted, keep, p, n) if mv.deleted else None,
        support=_lift_cell(mv.support, keep, p, n) if mv.support else None,
    )


def contract_loop(G: Graph, n: int, path: EdgePath) -> list[HomotopyMove]:
    """Contract a closed edge-path to a single vertex; vgap(G, n) >= 2.

    Returns the move list; replaying it from `path` (see verify_moves)
    ends in a constant loop.
    """
    if vgap(G, n) < 2:
        raise PreconditionError(
            f"contraction requires vgap >= 2; vgap = {vgap(G, n)} for n = {n}"
        )
    validate_path(G, n, path)
    verts = list(path.vertices)
    moves = _contract_rec(G, n, verts)
    if len(verts) != 1:
        raise InternalInvariantError("contraction finished with a non-constant loop")
    return moves


def _contract_rec(G, n, verts) -> list[HomotopyMove]:
    moves: list[HomotopyMove] = []
    _normalize_inplace(verts, moves)
    if len(verts) == 1:
        return moves
    for i in range(2, n + 1):
        _advance_inplace(G, n, verts, i, moves)
        if len(verts) == 1:
            return moves
    H, keep = remove_independent_prefix(G)
    if H.p == 0:
        raise InternalInvariantError("nonconstant loop survived full color pinning")
    if maxval(G) > 0 and maxval(H) >= maxval(G):
        raise InternalInvariantError("prefix removal did not reduce the maximal degree")
    sub_verts = []
    for u in verts:
        if any(u[v - 1] == n for v in keep):
            raise InternalInvariantError("non-prefix coordinate still uses the top color")
        sub_verts.append(tuple(u[v - 1] for v in keep))
    sub_moves = _contract_rec(H, n - 1, sub_verts)
    moves.extend(_lift_move(mv, keep, G.p, n) for mv in sub_moves)
    verts[:] = [_lift_coloring(u, keep, G.p, n) for u in sub_verts]
    return moves


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    final_path: EdgePath
    trail: tuple[str, ...]

    def __bool__(self):
        return self.ok


def _in_closure(u: Coloring, support: Cell) -> bool:
    return all((1 << (c - 1)) & m for c, m in zip(u, support))


def _nonsingleton_sizes(support: Cell) -> list[int]:
    return sorted(m.bit_count() for m in support if m.bit_count() > 1)


def verify_moves(G: Graph, n: int, p_start: EdgePath, moves) -> VerifyResult:
    """Replay a move list from p_start, checking every step locally.

    A move is valid when its support is a genuine cell, the replaced and
    replacement segments both lie in the support's closure with the same
    attachment vertices, and the support has the documented shape (a
    2-cell with two doubleton coordinates for insert_pair, a 2-cell with
    one tripleton coordinate for delete_vertex, with 1-cell degenerations
    when the relevant vertices coincide).  Never raises: returns ok=False
    plus a diagnostic trail.
    """
    trail: list[str] = []
    verts = list(p_start.vertices)
    try:
        validate_path(G, n, p_start)
    except InputError as exc:
        return VerifyResult(False, EdgePath(verts), (f"start path invalid: {exc}",))

    def fail(idx, msg):
        trail.append(f"move {idx}: {msg}")
        return VerifyResult(False, EdgePath(verts), tuple(trail))

    for idx, mv in enumerate(moves):
        m = len(verts)
        k = mv.position
        if not 0 <= k < m:
            return fail(idx, f"position {k} out of range for path of length {m}")
        if mv.kind == DROP_REPEAT:
            if m < 2:
                return fail(idx, "drop_repeat on a single-vertex loop")
            if verts[k] != verts[(k + 1) % m]:
                return fail(idx, "drop_repeat where neighbors differ")
            del verts[(k + 1) % m]
        elif mv.kind == INSERT_PAIR:
            if mv.inserted is None or mv.support is None:
                return fail(idx, "insert_pair without inserted pair or support")
            u1, u2 = mv.inserted
            try:
                if not is_cell(G, n, mv.support):
                    return fail(idx, "support is not a cell")
            except InputError as exc:
                return fail(idx, f"malformed support: {exc}")
            sizes = _nonsingleton_sizes(mv.support)
            if u1 == u2:
                if cell_dim(mv.support) != 1 or sizes != [2]:
                    return fail(idx, "degenerate insert_pair needs a 1-cell support")
            elif cell_dim(mv.support) != 2 or sizes != [2, 2]:
                return fail(idx, "insert_pair support must be a 2-cell with two doubletons")
            seq = [verts[k], tuple(u1), tuple(u2), verts[(k + 1) % m]]
            for u in seq:
                if not _in_closure(u, mv.support):
                    return fail(idx, f"vertex {u} outside the support's closure")
            for a, b in zip(seq, seq[1:]):
                if len(_diff_coords(a, b)) > 1:
                    return fail(idx, "inserted segment is not an edge sequence")
            verts[k + 1 : k + 1] = [tuple(u1), tuple(u2)]
        elif mv.kind == DELETE_VERTEX:
            if m < 2:
                return fail(idx, "delete_vertex on a single-vertex loop")
            if mv.support is None:
                return fail(idx, "delete_vertex without support")
            if mv.deleted is not None and verts[k] != tuple(mv.deleted):
                return fail(idx, "deleted vertex does not match the path")
            try:
                if not is_cell(G, n, mv.support):
                    return fail(idx, "support is not a cell")
            except InputError as exc:
                return fail(idx, f"malformed support: {exc}")
            pred = verts[(k - 1) % m]
            succ = verts[(k + 1) % m]
            sizes = _nonsingleton_sizes(mv.support)
            if pred == succ:
                if cell_dim(mv.support) != 1 or sizes != [2]:
                    return fail(idx, "spur deletion needs a 1-cell support")
            elif cell_dim(mv.support) != 2 or sizes != [3]:
                return fail(idx, "delete_vertex support must be a 2-cell with one tripleton")
            for u in (pred, verts[k], succ):
                if not _in_closure(u, mv.support):
                    return fail(idx, f"vertex {u} outside the support's closure")
            if len(_diff_coords(pred, succ)) > 1:
                return fail(idx, "deletion would break the path")
            del verts[k]
        else:
            return fail(idx, f"unknown move kind {mv.kind!r}")
    return VerifyResult(True, EdgePath(verts), tuple(trail))


def random_loop(
    G: Graph,
    n: int,
    steps: int,
    rng: random.Random,
    cell_cap: int = 10_000_000,
) -> EdgePath:
    """Seeded random loop: a random walk closed up along a spanning tree.

    Walks `steps` random edges in the 1-skeleton from a random start, then
    returns to the start along breadth-first spanning-tree edges, which
    guarantees closedness without any search.
    """
    sk0 = enumerate_skeleton(G, n, 0, cell_cap)
    colorings = [tuple(m.bit_length() for m in cell) for cell in sk0.cells_by_dim[0]]
    if not colorings:
        raise PreconditionError(f"Hom(G, K_{n}) is empty; no loops exist")

    def neighbors(u):
        out = []
        for coord in range(1, G.p + 1):
            banned = 0
            for nb in G.neighbors(coord):
                banned |= 1 << (u[nb - 1] - 1)
            for c in range(1, n + 1):
                if c != u[coord - 1] and not banned >> (c - 1) & 1:
                    out.append(_with_color(u, coord, c))
        return out

    start = colorings[rng.randrange(len(colorings))]
    parent = {start: None}
    queue = [start]
    while queue:
        u = queue.pop(0)
        for w in neighbors(u):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    walk = [start]
    cur = start
    for _ in range(steps):
        cur = rng.choice(neighbors(cur))
        walk.append(cur)
    back = []
    x = cur
    while parent[x] is not None:
        x = parent[x]
        back.append(x)
    return EdgePath(walk + back)
