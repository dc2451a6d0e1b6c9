"""Backend selection for exact integer Smith normal form.

The compiled kernel (homkn._snf_core, Cython/C++) works in int64 and
raises OverflowError if intermediate coefficients threaten to overflow;
in that case, or when the extension was not built, the computation runs
on the pure Python backend (arbitrary precision).  Both backends return
the same (rank, invariant factors) on every input: the Smith normal form
is unique, so backend choice can never change a result.

Set HOMKN_PURE=1 to force the pure backend.
"""

from __future__ import annotations

import os
from math import gcd

from . import _snf_py

try:  # pragma: no cover - presence depends on the build environment
    from . import _snf_core
except ImportError:  # pragma: no cover
    _snf_core = None

FORCE_PURE = os.environ.get("HOMKN_PURE") == "1"
BACKEND = "compiled" if (_snf_core is not None and not FORCE_PURE) else "pure"

# Values at or above this bound go straight to the pure backend.
_INT64_SAFE = 1 << 60


def snf_triplets(n_rows, n_cols, triplets, force_pure=False):
    """(rank, invariant_factors) of the matrix given as (row, col, value) triples.

    invariant_factors has length rank, includes unit factors, and each
    factor divides the next.
    """
    use_pure = force_pure or BACKEND == "pure"
    if not use_pure and any(abs(v) >= _INT64_SAFE for _, _, v in triplets):
        use_pure = True
    if use_pure:
        rank, diag = _snf_py.snf_diagonal(n_rows, n_cols, triplets)
    else:
        try:
            rank, diag = _snf_core.snf_diagonal(n_rows, n_cols, triplets)
        except OverflowError:
            rank, diag = _snf_py.snf_diagonal(n_rows, n_cols, triplets)
    return rank, normalize_diagonal(diag)


def normalize_diagonal(diag) -> tuple[int, ...]:
    """Normalize a diagonal (any order, any signs) into a divisibility chain.

    diag(a, b) is equivalent to diag(gcd(a,b), lcm(a,b)), and that
    exchange is a compare-exchange on the prime exponents of a and b.
    len(vals) bubble passes of it therefore sort every prime's exponents
    simultaneously, which is exactly the divisibility chain.
    """
    ones = sum(1 for d in diag if abs(d) == 1)
    vals = sorted(abs(d) for d in diag if abs(d) != 1)
    for _ in range(len(vals)):
        changed = False
        for i in range(len(vals) - 1):
            a, b = vals[i], vals[i + 1]
            if b % a != 0:
                g = gcd(a, b)
                vals[i], vals[i + 1] = g, a // g * b
                changed = True
        if not changed:
            break
    assert all(vals[i + 1] % vals[i] == 0 for i in range(len(vals) - 1))
    # gcd factors can collapse to 1 during the sweeps
    extra_ones = sum(1 for v in vals if v == 1)
    return tuple([1] * (ones + extra_ones) + [v for v in vals if v != 1])
