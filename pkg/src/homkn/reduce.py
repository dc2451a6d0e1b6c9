"""Cycle reduction and nullification in Hom(G, K_n), with chain certificates.

reduce_cycle pushes a t-cycle whose independent-prefix coordinates use
colors >= i-1 into the subcomplex where they use colors >= i, by adding
boundaries of explicitly chosen (t+1)-cells.  Every boundary added is
recorded, so the output comes with a certificate D satisfying
C - C' = boundary(D) that a verifier can replay term by term.

nullify_cycle chains these reductions for i = 2..n, which pins the
prefix coordinates to the single color n; the cycle then lives in the
subcomplex on the remaining vertices with one color fewer, and recursion
(with a strictly smaller maximal degree) produces a chain whose boundary
is the original cycle.  This works for every cycle of dimension
1 <= t <= vgap(G, n) - 1.

All arithmetic is exact over the integers; quantities the construction
proves to vanish are asserted at runtime and raise
InternalInvariantError instead of producing a wrong certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InternalInvariantError, PreconditionError
from .graphs import Graph, maxval, remove_independent_prefix, vgap
from .homcx import (
    Cell,
    Chain,
    boundary,
    boundary_chain,
    cell_dim,
    chain_in_filtration,
    colors_of,
    is_cell,
    mask_of,
)

Simplex = tuple  # strictly increasing tuple of vertex labels
SimplexChain = dict  # Simplex -> nonzero int


@dataclass(frozen=True)
class ChainCertificate:
    """Witness that initial - final = boundary(sum of additions).

    additions is the ordered list of (coefficient, (t+1)-cell) recording
    every boundary the reduction added, so a verification failure can be
    localized to a single step.
    """

    t: int
    additions: tuple[tuple[int, Cell], ...]
    initial: Chain
    final: Chain

    def added_chain(self) -> Chain:
        ch = Chain(self.t + 1)
        for coeff, cell in self.additions:
            ch.add(cell, coeff)
        return ch


# ---------------------------------------------------------------------------
# simplex chains (used to fill cycles inside one coordinate's color simplex)


def simplex_boundary(chain: SimplexChain) -> SimplexChain:
    """Boundary of a chain of simplices, with the usual alternating signs."""
    out: SimplexChain = {}
    for simplex, k in chain.items():
        for b in range(len(simplex)):
            face = simplex[:b] + simplex[b + 1 :]
            coeff = out.get(face, 0) + (-k if b & 1 else k)
            if coeff == 0:
                out.pop(face, None)
            else:
                out[face] = coeff
    return out


def simplex_fill(z: SimplexChain) -> SimplexChain:
    """A chain tau with boundary(tau) = z, for any cycle z in a simplex.

    tau is the cone of z at the smallest vertex occurring in z's support:
    prefix that vertex to every simplex not already containing it.  Since
    the apex is the global minimum, every prefix lands in position 0 and
    carries sign +1, and the cone uses no vertex outside z's support,
    which the pullback into Hom cells depends on.
    """
    if not z:
        raise InputError("cannot fill the zero chain")
    if any(k == 0 for k in z.values()):
        raise InputError("simplex chain carries a zero coefficient")
    if simplex_boundary(z):
        raise InputError("chain is not a cycle; it has no filling")
    apex = min(min(s) for s in z)
    tau: SimplexChain = {}
    for simplex, k in z.items():
        if apex in simplex:
            continue
        coned = (apex,) + simplex
        coeff = tau.get(coned, 0) + k
        if coeff == 0:
            tau.pop(coned, None)
        else:
            tau[coned] = coeff
    if simplex_boundary(tau) != z:
        raise InternalInvariantError("cone filling failed to bound the cycle")
    return tau


# ---------------------------------------------------------------------------
# cycle reduction


def _prefix_sizes(cell: Cell, coord: int) -> int:
    return sum(cell[j].bit_count() for j in range(coord - 1))


def _frame(cell: Cell, coord: int):
    return cell[: coord - 1] + cell[coord:]


def _with_mask(cell: Cell, coord: int, mask: int) -> Cell:
    return cell[: coord - 1] + (mask,) + cell[coord:]


def _smallest_partner(G: Graph, n: int, cell: Cell, coord: int, col: int) -> int:
    """Smallest color that can join {col} at coord keeping the cell valid."""
    banned = 1 << (col - 1)
    for nb in G.neighbors(coord):
        banned |= cell[nb - 1]
    avail = ((1 << n) - 1) & ~banned
    if avail == 0:
        raise InternalInvariantError(
            f"no partner color at coordinate {coord}; dimension bound violated"
        )
    return (avail & -avail).bit_length()


def _purge_chain(G, n, chain, coord, col, additions, lift):
    """Add boundaries until no cell of `chain` uses color col at coord.

    Singleton stage: a cell with {col} there is killed by adding the
    boundary of the cell with {col, partner} instead, partner being the
    smallest color keeping it valid (or the forced lift color on prefix
    coordinates).  Doubleton-and-up stage: cells are grouped by their
    frame (all other coordinates) and color-list size l; at l = 2 two
    frame-mates {col,x}, {col,y} are merged through {col,x,y}; at l >= 3
    the frame's cells map onto an (l-2)-cycle in the simplex on the other
    colors, which is coned and pulled back.  Each stage strictly shrinks
    what it measures, and sizes are bounded by n, so this terminates.
    """
    col_bit = 1 << (col - 1)

    while True:
        eta = min((c for c in chain.terms if c[coord - 1] == col_bit), default=None)
        if eta is None:
            break
        k = chain.terms[eta]
        if lift is None:
            partner = _smallest_partner(G, n, eta, coord, col)
        else:
            partner = lift
            for nb in G.neighbors(coord):
                if eta[nb - 1] >> (partner - 1) & 1:
                    raise InternalInvariantError(
                        f"lift color {partner} still on a neighbor of {coord}"
                    )
        eta2 = _with_mask(eta, coord, col_bit | (1 << (partner - 1)))
        K = _prefix_sizes(eta, coord) + (1 if col < partner else 0)
        sign = -1 if K & 1 else 1
        additions.append((sign * k, eta2))
        chain.add_scaled(boundary(eta2), -sign * k)

    while True:
        levels = [
            c[coord - 1].bit_count() for c in chain.terms if c[coord - 1] & col_bit
        ]
        if not levels:
            break
        l = min(levels)
        if l < 2 or l > n:
            raise InternalInvariantError(f"impossible color-list size {l} at {coord}")
        frames = sorted(
            {
                _frame(c, coord)
                for c in chain.terms
                if c[coord - 1] & col_bit and c[coord - 1].bit_count() == l
            }
        )
        for frame in frames:
            if l == 2:
                _pair_off(chain, coord, col, frame, additions)
            else:
                _cone_off(G, n, chain, coord, col, frame, l, additions)
        if any(
            c[coord - 1] & col_bit and c[coord - 1].bit_count() == l
            for c in chain.terms
        ):
            raise InternalInvariantError(
                f"size-{l} cells with color {col} survived their own level"
            )


def _level_cells(chain, coord, col_bit, frame, l):
    return sorted(
        c
        for c in chain.terms
        if c[coord - 1] & col_bit
        and c[coord - 1].bit_count() == l
        and _frame(c, coord) == frame
    )


def _pair_off(chain, coord, col, frame, additions):
    col_bit = 1 << (col - 1)
    while True:
        cells = _level_cells(chain, coord, col_bit, frame, 2)
        if not cells:
            return
        if len(cells) == 1:
            raise InternalInvariantError(
                "a lone {col,x} cell cannot occur in a cycle"
            )
        eta, xi = cells[0], cells[1]
        k = chain.terms[eta]
        x = (eta[coord - 1] ^ col_bit).bit_length()
        y = (xi[coord - 1] ^ col_bit).bit_length()
        sigma = _with_mask(eta, coord, col_bit | (1 << (x - 1)) | (1 << (y - 1)))
        between = 1 if (col < y < x or x < y < col) else 0
        K = _prefix_sizes(eta, coord) + between
        sign = -1 if K & 1 else 1
        additions.append((sign * k, sigma))
        chain.add_scaled(boundary(sigma), -sign * k)


def _cone_off(G, n, chain, coord, col, frame, l, additions):
    col_bit = 1 << (col - 1)
    cells = _level_cells(chain, coord, col_bit, frame, l)
    z: SimplexChain = {}
    for c in cells:
        k = chain.terms[c]
        rest = c[coord - 1] ^ col_bit
        flips = (rest >> col).bit_count()  # colors above col in the list
        simplex = colors_of(rest)
        coeff = z.get(simplex, 0) + (-k if flips & 1 else k)
        if coeff == 0:
            z.pop(simplex, None)
        else:
            z[simplex] = coeff
    if simplex_boundary(z):
        raise InternalInvariantError(
            "frame image is not a cycle; boundary bookkeeping is broken"
        )
    tau = simplex_fill(z)
    eps_parity = sum(m.bit_count() for m in frame[: coord - 1]) & 1
    eps = -1 if eps_parity else 1
    for simplex, k_tau in sorted(tau.items()):
        mask = mask_of(simplex) | col_bit
        cell = frame[: coord - 1] + (mask,) + frame[coord - 1 :]
        if not is_cell(G, n, cell):
            raise InternalInvariantError(
                "cone pullback left the complex; support containment failed"
            )
        flips = ((mask ^ col_bit) >> col).bit_count()
        coeff = eps * (-k_tau if flips & 1 else k_tau)
        additions.append((coeff, cell))
        chain.add_scaled(boundary(cell), -coeff)


def reduce_cycle(G: Graph, n: int, C: Chain, i: int, phase_hook=None):
    """Reduce a cycle from prefix colors >= i-1 to prefix colors >= i.

    Requires boundary(C) = 0, cycle dimension 1 <= t <= n - maxval - 2,
    support inside the i-1 prefix filtration, and 2 <= i <= n.  Returns
    (C', certificate) with C - C' = boundary(sum of the certificate's
    additions), C' supported in the i filtration.

    phase_hook, if given, is called as phase_hook(stage, order_position,
    coordinate, chain_snapshot) after each coordinate finishes; stage is
    "nonprefix" or "prefix".
    """
    if not 2 <= i <= n:
        raise InputError(f"color floor i={i} out of range 2..{n}")
    t = C.dim
    if not C:
        cert = ChainCertificate(t, (), C.copy(), C.copy())
        return C.copy(), cert
    for cell in C.terms:
        if not is_cell(G, n, cell):
            raise InputError(f"chain contains an invalid cell {cell}")
    if boundary_chain(C):
        raise PreconditionError("chain is not a cycle (nonzero boundary)")
    d = maxval(G)
    if not 1 <= t <= n - d - 2:
        raise PreconditionError(
            f"cycle dimension {t} outside the admissible range 1..{n - d - 2}"
        )
    if not chain_in_filtration(G, C, i - 1, G.lam):
        raise PreconditionError(
            f"cycle uses colors below {i - 1} on the independent prefix"
        )

    work = C.copy()
    additions: list[tuple[int, Cell]] = []
    for pos in range(G.lam, G.p):
        coord = G.order[pos]
        _purge_chain(G, n, work, coord, i, additions, lift=None)
        if phase_hook:
            phase_hook("nonprefix", pos + 1, coord, work.copy())
    for pos in range(G.lam):
        coord = G.order[pos]
        _purge_chain(G, n, work, coord, i - 1, additions, lift=i)
        if phase_hook:
            phase_hook("prefix", pos + 1, coord, work.copy())

    if boundary_chain(work):
        raise InternalInvariantError("reduction output is not a cycle")
    if not chain_in_filtration(G, work, i, G.lam):
        raise InternalInvariantError("reduction output escaped the target filtration")
    cert = ChainCertificate(t, tuple(additions), C.copy(), work.copy())
    return work, cert


# ---------------------------------------------------------------------------
# nullification


def _transport_parities(G: Graph, kept: list[int]) -> list[int]:
    """Parity of the number of dropped coordinates before each kept one.

    Dropping singleton coordinates shifts the prefix sums inside the
    boundary operator's sign, so coefficients transport with the twist
    (-1)^(sum of these parities times the coordinate's color count);
    with it the reindexing commutes with the boundary operator exactly.
    """
    dropped = sorted(set(range(1, G.p + 1)) - set(kept))
    return [sum(1 for w in dropped if w < v) & 1 for v in kept]


def _twist(parities, sub_cell: Cell) -> int:
    s = 0
    for r, m in zip(parities, sub_cell):
        if r:
            s ^= m.bit_count() & 1
    return -1 if s else 1


def nullify_cycle(G: Graph, n: int, C: Chain) -> ChainCertificate:
    """Produce D with boundary(D) = C, for a cycle of dimension <= vgap-1."""
    t = C.dim
    if not C:
        return ChainCertificate(t, (), C.copy(), Chain(t))
    for cell in C.terms:
        if not is_cell(G, n, cell):
            raise InputError(f"chain contains an invalid cell {cell}")
    if boundary_chain(C):
        raise PreconditionError("chain is not a cycle (nonzero boundary)")
    g = vgap(G, n)
    if not 1 <= t <= g - 1:
        raise PreconditionError(
            f"nullification holds for 1 <= t <= vgap-1 = {g - 1}; got t = {t}"
        )
    additions = _nullify_rec(G, n, C)
    cert = ChainCertificate(t, tuple(additions), C.copy(), Chain(t))
    if boundary_chain(cert.added_chain()) != C:
        raise InternalInvariantError("assembled chain does not bound the input cycle")
    return cert


def _nullify_rec(G, n, C):
    additions: list[tuple[int, Cell]] = []
    work = C.copy()
    for i in range(2, n + 1):
        work, cert = reduce_cycle(G, n, work, i)
        additions.extend(cert.additions)
        if not work:
            return additions
    # Prefix coordinates are now pinned to {n}; the cycle lives in the
    # subcomplex on the remaining vertices, one color fewer.
    H, kept = remove_independent_prefix(G)
    if H.p == 0:
        raise InternalInvariantError("nonzero cycle survived full color pinning")
    top_bit = 1 << (n - 1)
    parities = _transport_parities(G, kept)
    sub = Chain(work.dim)
    for cell, k in work.terms.items():
        for v in G.order[: G.lam]:
            if cell[v - 1] != top_bit:
                raise InternalInvariantError("prefix coordinate not pinned")
        sub_cell = tuple(cell[v - 1] for v in kept)
        if any(m & top_bit for m in sub_cell):
            raise InternalInvariantError("kept coordinate still uses the top color")
        sub.add(sub_cell, k * _twist(parities, sub_cell))
    if boundary_chain(sub):
        raise InternalInvariantError("orientation transport broke the cycle")
    for k_sub, sub_cell in _nullify_rec(H, n - 1, sub):
        lifted = [top_bit] * G.p
        for idx, v in enumerate(kept):
            lifted[v - 1] = sub_cell[idx]
        additions.append((k_sub * _twist(parities, sub_cell), tuple(lifted)))
    return additions


@dataclass(frozen=True)
class CertVerifyResult:
    ok: bool
    trail: tuple[str, ...]

    def __bool__(self):
        return self.ok


def verify_certificate(
    G: Graph, n: int, C: Chain, C_prime: Chain, cert: ChainCertificate
) -> CertVerifyResult:
    """Check a reduction certificate exactly over the integers.

    Valid iff every recorded cell is a genuine (t+1)-cell and the summed
    boundary of the additions equals C - C'.  Never raises; failures come
    back with a diagnostic trail.
    """
    trail = []
    if C.dim != cert.t or C_prime.dim != cert.t:
        trail.append(
            f"dimension mismatch: chains of dim {C.dim}/{C_prime.dim}, certificate t={cert.t}"
        )
        return CertVerifyResult(False, tuple(trail))
    for idx, (coeff, cell) in enumerate(cert.additions):
        if coeff == 0:
            trail.append(f"addition {idx} has zero coefficient")
            return CertVerifyResult(False, tuple(trail))
        try:
            ok = is_cell(G, n, cell)
        except InputError as exc:
            trail.append(f"addition {idx}: malformed cell: {exc}")
            return CertVerifyResult(False, tuple(trail))
        if not ok:
            trail.append(f"addition {idx}: not a cell of Hom(G, K_{n})")
            return CertVerifyResult(False, tuple(trail))
        if cell_dim(cell) != cert.t + 1:
            trail.append(
                f"addition {idx}: dimension {cell_dim(cell)}, expected {cert.t + 1}"
            )
            return CertVerifyResult(False, tuple(trail))
    diff = C.copy()
    diff.add_scaled(C_prime, -1)
    if boundary_chain(cert.added_chain()) != diff:
        trail.append("boundary of the added chain differs from C - C'")
        return CertVerifyResult(False, tuple(trail))
    return CertVerifyResult(True, tuple(trail))
