"""Exact integer homology of enumerated skeleta, and the connectivity verdict.

Boundary matrices are assembled in the canonical cell order and reduced
with exact integer Smith normal form (homkn.snf), giving Betti numbers
and torsion invariant factors.  Everything is exact over the integers;
there are no tolerances anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InputError, PreconditionError, ResourceLimitError
from .graphs import Graph, maxval, vgap
from .homcx import (
    DEFAULT_CELL_CAP,
    ComplexSkeleton,
    boundary,
    enumerate_skeleton,
    f_vector,
)
from .snf import snf_triplets


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse matrix of the boundary map from t-cells to (t-1)-cells.

    Rows are indexed by (t-1)-cells, columns by t-cells, both in canonical
    order; entries are +-1 by construction.
    """

    t: int
    n_rows: int
    n_cols: int
    entries: dict[tuple[int, int], int]

    def triplets(self):
        return [(r, c, v) for (r, c), v in self.entries.items()]

    def column(self, c: int) -> dict[int, int]:
        return {r: v for (r, c2), v in self.entries.items() if c2 == c}


@dataclass(frozen=True)
class SNFResult:
    rank: int
    invariant_factors: tuple[int, ...]


@dataclass(frozen=True)
class HomologySummary:
    """Betti numbers and torsion invariant factors per dimension 0..t_max."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def to_json(self):
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}


def boundary_matrix(sk: ComplexSkeleton, t: int) -> BoundaryMatrix:
    """Assemble the t-th boundary matrix of an enumerated skeleton."""
    if not 1 <= t <= sk.max_dim:
        raise InputError(f"boundary dimension {t} outside enumerated range 1..{sk.max_dim}")
    lower = {cell: i for i, cell in enumerate(sk.cells_by_dim[t - 1])}
    entries = {}
    for c, cell in enumerate(sk.cells_by_dim[t]):
        for face, coeff in boundary(cell).terms.items():
            entries[(lower[face], c)] = coeff
    return BoundaryMatrix(
        t, len(sk.cells_by_dim[t - 1]), len(sk.cells_by_dim[t]), entries
    )


def smith_normal_form(M) -> SNFResult:
    """Exact Smith normal form: rank and the full invariant-factor list.

    Accepts a BoundaryMatrix, a dense list-of-lists, or a dict mapping
    (row, col) to value.  invariant_factors includes unit factors, so its
    length equals the rank; each factor divides the next.
    """
    if isinstance(M, BoundaryMatrix):
        triplets = M.triplets()
        shape = (M.n_rows, M.n_cols)
    elif isinstance(M, dict):
        triplets = [(r, c, v) for (r, c), v in M.items()]
        shape = (
            1 + max((r for r, _ in M), default=-1),
            1 + max((c for _, c in M), default=-1),
        )
    else:
        triplets = [
            (r, c, v) for r, row in enumerate(M) for c, v in enumerate(row) if v
        ]
        shape = (len(M), len(M[0]) if M else 0)
    rank, factors = snf_triplets(shape[0], shape[1], triplets)
    return SNFResult(rank, factors)


def homology_summary(sk: ComplexSkeleton, t_max: int) -> HomologySummary:
    """Integral homology H_t for 0 <= t <= t_max; H_0 is unreduced.

    H_t needs the (t+1)-cells to pin down the image of the boundary map,
    so the skeleton must have been enumerated to max_dim >= t_max + 1;
    anything less is refused rather than silently under-reported.
    """
    if t_max < 0:
        raise InputError(f"t_max must be >= 0, got {t_max}")
    if sk.max_dim < t_max + 1:
        raise PreconditionError(
            f"H_{t_max} needs the {t_max + 1}-skeleton; "
            f"only max_dim={sk.max_dim} was enumerated"
        )
    f = f_vector(sk)
    ranks = [0] * (t_max + 2)
    factors = [()] * (t_max + 2)
    for t in range(1, t_max + 2):
        if f[t]:
            res = smith_normal_form(boundary_matrix(sk, t))
            ranks[t], factors[t] = res.rank, res.invariant_factors
    betti = []
    torsion = []
    for t in range(t_max + 1):
        betti.append(f[t] - ranks[t] - ranks[t + 1])
        torsion.append(tuple(d for d in factors[t + 1] if d > 1))
    return HomologySummary(tuple(betti), tuple(torsion))


def component_count(sk: ComplexSkeleton) -> int:
    """Connected components of the vertex-edge graph, by union-find.

    Independent of the Smith normal form route that produces betti_0.
    """
    n = len(sk.cells_by_dim[0])
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if sk.max_dim >= 1:
        idx = {cell: i for i, cell in enumerate(sk.cells_by_dim[0])}
        for edge in sk.cells_by_dim[1]:
            ends = [idx[cell] for cell in boundary(edge).terms]
            a, b = find(ends[0]), find(ends[1])
            if a != b:
                parent[a] = b
    return sum(1 for x in range(n) if find(x) == x)


def pi1_free_rank(sk: ComplexSkeleton) -> int:
    """Free rank e - v + 1 of the fundamental group of a connected graph.

    Collapsing a spanning tree of a connected 1-dimensional complex
    leaves a bouquet of e - v + 1 circles.  The skeleton must have been
    enumerated to max_dim >= 2 so the absence of 2-cells is a verified
    fact, not an assumption.
    """
    if sk.max_dim < 2:
        raise PreconditionError(
            "pi1_free_rank needs enumeration to max_dim >= 2 to certify "
            "that no 2-cells exist"
        )
    f = f_vector(sk)
    if any(f[2:]):
        raise PreconditionError(
            f"complex is not 1-dimensional: f-vector {list(f)}"
        )
    if f[0] == 0:
        raise PreconditionError("complex is empty")
    if component_count(sk) != 1:
        raise PreconditionError("complex is disconnected; free rank undefined")
    return f[1] - f[0] + 1


@dataclass(frozen=True)
class ConnectivityCheck:
    name: str
    detail: str
    ok: bool

    def to_json(self):
        return {"name": self.name, "detail": self.detail, "ok": self.ok}


@dataclass(frozen=True)
class ConnectivityReport:
    graph_p: int
    n: int
    maxval: int
    vgap: int
    checks: tuple[ConnectivityCheck, ...]
    verdict: str  # PASS, FAIL or INCOMPLETE
    note: str
    seed: int | None = None
    f_vector: tuple[int, ...] = field(default=())

    def to_json(self):
        return {
            "p": self.graph_p,
            "n": self.n,
            "maxval": self.maxval,
            "vgap": self.vgap,
            "f_vector": list(self.f_vector),
            "checks": [c.to_json() for c in self.checks],
            "verdict": self.verdict,
            "note": self.note,
            "seed": self.seed,
        }


_REPORT_NOTE = (
    "Homology vanishing plus contracted sample loops is evidence consistent "
    "with the connectivity bound n - maxval(G) - 2; it is not by itself a "
    "proof of topological connectivity."
)


def connectivity_report(
    G: Graph,
    n: int,
    cell_cap: int = DEFAULT_CELL_CAP,
    seed: int = 0,
    loop_samples: int = 3,
) -> ConnectivityReport:
    """Check everything the connectivity bound predicts for Hom(G, K_n).

    vgap >= 0 predicts nonemptiness, vgap >= 1 a single component
    (H_0 = Z), vgap >= 2 additionally H_t = 0 for 1 <= t <= vgap - 1,
    plus sampled random loops that must contract.  If the cell cap is hit
    the verdict is INCOMPLETE instead of a silent partial answer.
    """
    d = maxval(G)
    g = vgap(G, n)
    checks = []
    fv: tuple[int, ...] = ()
    verdict = "PASS"
    try:
        if g >= 0:
            sk0 = enumerate_skeleton(G, n, 0, cell_cap)
            nonempty = len(sk0.cells_by_dim[0]) > 0
            checks.append(
                ConnectivityCheck(
                    "nonempty",
                    f"{len(sk0.cells_by_dim[0])} proper colorings",
                    nonempty,
                )
            )
        if g >= 1:
            depth = max(g, 1)
            sk = enumerate_skeleton(G, n, depth, cell_cap)
            fv = f_vector(sk)
            summary = homology_summary(sk, g - 1)
            checks.append(
                ConnectivityCheck(
                    "H_0 = Z",
                    f"betti_0 = {summary.betti[0]}",
                    summary.betti[0] == 1 and not summary.torsion[0],
                )
            )
            for t in range(1, g):
                checks.append(
                    ConnectivityCheck(
                        f"H_{t} = 0",
                        f"betti_{t} = {summary.betti[t]}, torsion {list(summary.torsion[t])}",
                        summary.betti[t] == 0 and not summary.torsion[t],
                    )
                )
        if g >= 2 and loop_samples > 0:
            from .deform import contract_loop, random_loop, verify_moves

            rng = random.Random(seed)
            contracted = 0
            for _ in range(loop_samples):
                loop = random_loop(G, n, steps=6, rng=rng, cell_cap=cell_cap)
                moves = contract_loop(G, n, loop)
                res = verify_moves(G, n, loop, moves)
                if res.ok and len(res.final_path.vertices) == 1:
                    contracted += 1
            checks.append(
                ConnectivityCheck(
                    "sampled loops contract",
                    f"{contracted}/{loop_samples} seeded loops contracted and verified",
                    contracted == loop_samples,
                )
            )
    except ResourceLimitError as exc:
        checks.append(ConnectivityCheck("resource limit", str(exc), False))
        verdict = "INCOMPLETE"
    if verdict != "INCOMPLETE":
        verdict = "PASS" if all(c.ok for c in checks) else "FAIL"
    return ConnectivityReport(
        G.p, n, d, g, tuple(checks), verdict, _REPORT_NOTE, seed, fv
    )
