"""Sparse Smith diagonalization over the integers, pure Python.

Reference implementation and overflow-proof fallback for the compiled
kernel in _snf_core.  Arithmetic uses Python ints, so intermediate
coefficient growth can never overflow; the price is speed.

The routine diagonalizes by unimodular row/column operations and returns
(rank, diagonal).  The diagonal is positive but not yet normalized into
a divisibility chain; homkn.snf does that normalization, which is cheap
and identical for both backends.
"""

from __future__ import annotations

from collections import deque

# How many queued unit pivots to compare before committing to one.  A
# small lookahead keeps fill-in down without the cost of a full
# minimum-degree ordering.
_LOOKAHEAD = 8


def snf_diagonal(n_rows: int, n_cols: int, entries) -> tuple[int, list[int]]:
    """Diagonalize the sparse integer matrix given as (row, col, value) triples.

    Duplicate positions are accumulated.  Returns (rank, diag) with
    len(diag) == rank and every diag entry positive.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, dict[int, None]] = {}
    for r, c, v in entries:
        if v == 0:
            continue
        row = rows.setdefault(r, {})
        new = row.get(c, 0) + v
        if new == 0:
            del row[c]
            col = cols[c]
            del col[r]
            if not col:
                del cols[c]
            if not row:
                del rows[r]
        else:
            row[c] = new
            cols.setdefault(c, {})[r] = None

    units = deque((r, c) for r, row in rows.items() for c, v in row.items() if abs(v) == 1)
    diag: list[int] = []

    def drop_entry(r, c):
        row = rows[r]
        del row[c]
        if not row:
            del rows[r]
        col = cols[c]
        del col[r]
        if not col:
            del cols[c]

    def set_entry(r, c, v):
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, {})[r] = None
        if abs(v) == 1:
            units.append((r, c))

    def row_axpy(dst, src, mult):
        """rows[dst] += mult * rows[src]."""
        for c, v in list(rows[src].items()):
            cur = rows.get(dst, {}).get(c, 0)
            new = cur + mult * v
            if new == 0:
                if cur != 0:
                    drop_entry(dst, c)
            else:
                set_entry(dst, c, new)

    def retire_pivot(r, c, v):
        """Clear column c by row ops, then discard row r (column ops that
        touch nothing else, since its column is already clear)."""
        for r2 in [x for x in cols[c] if x != r]:
            row_axpy(r2, r, -(rows[r2][c] // v))
        for c2 in list(rows[r]):
            drop_entry(r, c2)
        diag.append(abs(v))

    while True:
        # Unit pivots first: they never leave remainders and dominate
        # boundary matrices in practice.
        while units:
            best = None
            sampled = []
            for _ in range(min(_LOOKAHEAD, len(units))):
                r, c = units.popleft()
                v = rows.get(r, {}).get(c, 0)
                if abs(v) != 1:
                    continue  # stale
                fill = (len(rows[r]) - 1) * (len(cols[c]) - 1)
                sampled.append((fill, r, c))
            if not sampled:
                continue
            sampled.sort()
            best = sampled[0]
            units.extendleft((r, c) for _, r, c in reversed(sampled[1:]))
            _, r, c = best
            retire_pivot(r, c, rows[r][c])
        if not rows:
            break
        # General pivot: smallest magnitude, then least fill.  Reduce its
        # row and column Euclid-style until it divides both, then retire.
        r, c, v = min(
            ((r, c, v) for r, row in rows.items() for c, v in row.items()),
            key=lambda t: (abs(t[2]), (len(rows[t[0]]) - 1) * (len(cols[t[1]]) - 1), t[0], t[1]),
        )
        while True:
            v = rows[r][c]
            bad_r = next((r2 for r2 in cols[c] if r2 != r and rows[r2][c] % v != 0), None)
            if bad_r is not None:
                row_axpy(bad_r, r, -(rows[bad_r][c] // v))
                r = bad_r
                continue
            bad_c = next((c2 for c2, w in rows[r].items() if c2 != c and w % v != 0), None)
            if bad_c is not None:
                # Column op: add a multiple of column c to column bad_c.
                q = -(rows[r][bad_c] // v)
                for r2 in list(cols[c]):
                    w = rows[r2].get(bad_c, 0) + q * rows[r2][c]
                    if w == 0:
                        if rows[r2].get(bad_c, 0) != 0:
                            drop_entry(r2, bad_c)
                    else:
                        set_entry(r2, bad_c, w)
                c = bad_c
                continue
            break
        if abs(v) == 1:
            continue  # let the unit loop handle it (it is queued by set_entry)
        retire_pivot(r, c, v)

    return len(diag), diag
