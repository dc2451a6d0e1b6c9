# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""int64 kernel for sparse integer Smith diagonalization.

This is the same algorithm as homkn._snf_py.snf_diagonal, including its
data-structure iteration order: rows and columns are insertion-ordered
maps (hash map plus order log with tombstones), reproducing Python dict
semantics.  Pivot trajectories, and therefore fill-in behavior and the
emitted diagonal, are bit-identical to the pure backend; only the
arithmetic runs on C int64.  Whenever an intermediate value could leave
the safe int64 window the kernel raises OverflowError and the
dispatcher reruns the computation on the pure big-integer backend.
"""

from cython.operator cimport dereference as deref
from libcpp.deque cimport deque
from libcpp.pair cimport pair
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

ctypedef long long i64

cdef i64 STORE_LIMIT = (<i64>1) << 61
cdef i64 PROD_LIMIT = (<i64>1) << 62
cdef int LOOKAHEAD = 8


cdef inline i64 _iabs(i64 x) nogil:
    return -x if x < 0 else x


cdef inline i64 _fdiv(i64 a, i64 b) nogil:
    """Floor division, matching Python's // for negative operands."""
    cdef i64 q = a / b
    if a % b != 0 and (a < 0) != (b < 0):
        q -= 1
    return q


cdef struct Entry:
    i64 value
    int pos  # live position inside the order log


cdef struct Cand:
    i64 fill
    int r
    int c


# Insertion-ordered sparse axes.  vals[i] maps key -> (value, position in
# order[i]); order[i] may hold tombstones, skipped because only the entry
# whose recorded position matches is live.  Re-inserting a deleted key
# appends it again, exactly like a Python dict.
cdef class _Axis:
    cdef vector[unordered_map[int, Entry]] vals
    cdef vector[vector[int]] order

    def __cinit__(self, int n):
        self.vals.resize(n)
        self.order.resize(n)

    cdef inline bint has(self, int i, int k):
        return self.vals[i].count(k) != 0

    cdef inline i64 get(self, int i, int k):
        cdef unordered_map[int, Entry].iterator it = self.vals[i].find(k)
        if it == self.vals[i].end():
            return 0
        return deref(it).second.value

    cdef inline size_t size(self, int i):
        return self.vals[i].size()

    cdef void set(self, int i, int k, i64 v):
        cdef unordered_map[int, Entry].iterator it = self.vals[i].find(k)
        cdef Entry e
        if it != self.vals[i].end():
            deref(it).second.value = v
            return
        e.value = v
        e.pos = <int>self.order[i].size()
        self.vals[i][k] = e
        self.order[i].push_back(k)
        if self.order[i].size() > 2 * self.vals[i].size() + 8:
            self.compact(i)

    cdef void erase(self, int i, int k):
        self.vals[i].erase(k)

    cdef void compact(self, int i):
        cdef vector[int] fresh
        cdef size_t j
        cdef int k
        cdef unordered_map[int, Entry].iterator it
        for j in range(self.order[i].size()):
            k = self.order[i][j]
            it = self.vals[i].find(k)
            if it != self.vals[i].end() and deref(it).second.pos == <int>j:
                deref(it).second.pos = <int>fresh.size()
                fresh.push_back(k)
        self.order[i].swap(fresh)

    cdef void items(self, int i, vector[pair[int, i64]]& out):
        """Live (key, value) pairs in insertion order."""
        out.clear()
        cdef size_t j
        cdef int k
        cdef unordered_map[int, Entry].iterator it
        for j in range(self.order[i].size()):
            k = self.order[i][j]
            it = self.vals[i].find(k)
            if it != self.vals[i].end() and deref(it).second.pos == <int>j:
                out.push_back(pair[int, i64](k, deref(it).second.value))


cdef class _Elim:
    cdef _Axis rows  # rows.vals[r]: col -> value
    cdef _Axis cols  # cols.vals[c]: row -> anything (set semantics)
    cdef deque[pair[int, int]] units
    cdef vector[int] touch_order  # rows in the order they became nonempty
    cdef vector[int] touch_pos
    cdef long long n_entries

    def __cinit__(self, int n_rows, int n_cols):
        self.rows = _Axis(n_rows)
        self.cols = _Axis(n_cols)
        self.touch_pos.resize(n_rows, -1)
        self.n_entries = 0

    cdef void drop(self, int r, int c):
        if self.rows.has(r, c):
            self.rows.erase(r, c)
            self.cols.erase(c, r)
            self.n_entries -= 1

    cdef int put(self, int r, int c, i64 v) except -1:
        if _iabs(v) > STORE_LIMIT:
            raise OverflowError("snf kernel: entry exceeds the int64 window")
        if v == 0:
            self.drop(r, c)
            return 0
        if not self.rows.has(r, c):
            if self.rows.size(r) == 0:
                self.touch_pos[r] = <int>self.touch_order.size()
                self.touch_order.push_back(r)
            self.cols.set(c, r, 1)
            self.n_entries += 1
        self.rows.set(r, c, v)
        if v == 1 or v == -1:
            self.units.push_back(pair[int, int](r, c))
        return 0

    cdef int row_axpy(self, int dst, int src, i64 mult) except -1:
        """rows[dst] += mult * rows[src]"""
        cdef vector[pair[int, i64]] items
        self.rows.items(src, items)
        cdef size_t idx
        cdef i64 v
        cdef i64 am = _iabs(mult)
        for idx in range(items.size()):
            v = items[idx].second
            if am != 0 and _iabs(v) > PROD_LIMIT / am:
                raise OverflowError("snf kernel: product exceeds the int64 window")
            self.put(dst, items[idx].first, self.rows.get(dst, items[idx].first) + mult * v)
        return 0

    cdef int retire(self, int r, int c) except -1:
        """Clear column c by row ops, then discard row r with its column."""
        cdef i64 v = self.rows.get(r, c)
        cdef vector[pair[int, i64]] col_rows
        self.cols.items(c, col_rows)
        cdef size_t idx
        cdef int r2
        for idx in range(col_rows.size()):
            r2 = col_rows[idx].first
            if r2 != r:
                self.row_axpy(r2, r, -_fdiv(self.rows.get(r2, c), v))
        cdef vector[pair[int, i64]] row_cols
        self.rows.items(r, row_cols)
        for idx in range(row_cols.size()):
            self.drop(r, row_cols[idx].first)
        return 0


def snf_diagonal(n_rows, n_cols, triplets):
    """(rank, positive diagonal) of the sparse matrix, int64 arithmetic.

    Same contract and same elimination trajectory as
    homkn._snf_py.snf_diagonal; duplicates accumulate.  Raises
    OverflowError instead of ever returning a wrong answer.
    """
    cdef _Elim st = _Elim(n_rows, n_cols)
    cdef int r, c
    cdef i64 v
    for item in triplets:
        r = item[0]
        c = item[1]
        pv = item[2]
        if pv > STORE_LIMIT or -pv > STORE_LIMIT:
            raise OverflowError("snf kernel: input exceeds the int64 window")
        v = pv
        st.put(r, c, st.rows.get(r, c) + v)
    cdef int r2, c2, br, bc, found, k, best_idx, idx, j
    cdef i64 bv, best_fill, fill, av
    cdef pair[int, int] cand
    cdef vector[Cand] sampled
    cdef Cand cd
    cdef vector[pair[int, i64]] row_items
    # Rebuild the unit queue in first-touch row order (the order a Python
    # dict of rows would iterate), so the initial scan matches the pure
    # backend; put() queued the column-major arrival order instead.
    st.units.clear()
    for j in range(<int>st.touch_order.size()):
        r = st.touch_order[j]
        if st.touch_pos[r] != j or st.rows.size(r) == 0:
            continue
        st.rows.items(r, row_items)
        for idx in range(<int>row_items.size()):
            v = row_items[idx].second
            if v == 1 or v == -1:
                st.units.push_back(pair[int, int](r, row_items[idx].first))

    diag = []

    while True:
        # unit pivots first: FIFO queue, least-fill pick among a small sample
        while st.units.size() > 0:
            sampled.clear()
            k = 0
            while st.units.size() > 0 and k < LOOKAHEAD:
                k += 1
                cand = st.units.front()
                st.units.pop_front()
                v = st.rows.get(cand.first, cand.second)
                if v != 1 and v != -1:
                    continue  # stale
                cd.fill = (<i64>st.rows.size(cand.first) - 1) * (
                    <i64>st.cols.size(cand.second) - 1
                )
                cd.r = cand.first
                cd.c = cand.second
                sampled.push_back(cd)
            if sampled.size() == 0:
                continue
            best_idx = 0
            for k in range(1, <int>sampled.size()):
                if (sampled[k].fill, sampled[k].r, sampled[k].c) < (
                    sampled[best_idx].fill,
                    sampled[best_idx].r,
                    sampled[best_idx].c,
                ):
                    best_idx = k
            _push_losers_front(st, sampled, best_idx)
            st.retire(sampled[best_idx].r, sampled[best_idx].c)
            diag.append(1)
        if st.n_entries == 0:
            break
        # general pivot: smallest magnitude, then least fill, then position
        found = 0
        br = bc = -1
        bv = 0
        best_fill = 0
        for r in range(<int>st.rows.vals.size()):
            if st.rows.size(r) == 0:
                continue
            st.rows.items(r, row_items)
            for idx in range(<int>row_items.size()):
                av = _iabs(row_items[idx].second)
                fill = (<i64>st.rows.size(r) - 1) * (
                    <i64>st.cols.size(row_items[idx].first) - 1
                )
                if (
                    not found
                    or av < _iabs(bv)
                    or (av == _iabs(bv) and fill < best_fill)
                ):
                    found = 1
                    br = r
                    bc = row_items[idx].first
                    bv = row_items[idx].second
                    best_fill = fill
        if not found:
            break
        # Euclid-reduce until the pivot divides its column and row
        while True:
            bv = st.rows.get(br, bc)
            r2 = -1
            st.cols.items(bc, row_items)
            for idx in range(<int>row_items.size()):
                r = row_items[idx].first
                if r != br and st.rows.get(r, bc) % bv != 0:
                    r2 = r
                    break
            if r2 >= 0:
                st.row_axpy(r2, br, -_fdiv(st.rows.get(r2, bc), bv))
                br = r2
                continue
            c2 = -1
            st.rows.items(br, row_items)
            for idx in range(<int>row_items.size()):
                if row_items[idx].first != bc and row_items[idx].second % bv != 0:
                    c2 = row_items[idx].first
                    break
            if c2 >= 0:
                _col_axpy(st, c2, bc, -_fdiv(st.rows.get(br, c2), bv))
                bc = c2
                continue
            break
        bv = st.rows.get(br, bc)
        if bv == 1 or bv == -1:
            continue  # queued by put; the unit loop takes it
        st.retire(br, bc)
        diag.append(_iabs(bv))
    return len(diag), diag


cdef int _push_losers_front(_Elim st, vector[Cand]& sampled, int best_idx) except -1:
    """Return non-chosen candidates to the queue front in (fill, r, c) order."""
    cdef vector[Cand] losers
    cdef int k, j
    cdef Cand tmp
    for k in range(<int>sampled.size()):
        if k != best_idx:
            losers.push_back(sampled[k])
    # insertion sort by (fill, r, c); LOOKAHEAD is tiny
    for k in range(1, <int>losers.size()):
        tmp = losers[k]
        j = k - 1
        while j >= 0 and (losers[j].fill, losers[j].r, losers[j].c) > (
            tmp.fill,
            tmp.r,
            tmp.c,
        ):
            losers[j + 1] = losers[j]
            j -= 1
        losers[j + 1] = tmp
    for k in range(<int>losers.size() - 1, -1, -1):
        st.units.push_front(pair[int, int](losers[k].r, losers[k].c))
    return 0


cdef int _col_axpy(_Elim st, int dst, int src, i64 mult) except -1:
    """cols[dst] += mult * cols[src]"""
    cdef vector[pair[int, i64]] src_rows
    st.cols.items(src, src_rows)
    cdef size_t idx
    cdef int r
    cdef i64 v
    cdef i64 am = _iabs(mult)
    for idx in range(src_rows.size()):
        r = src_rows[idx].first
        v = st.rows.get(r, src)
        if am != 0 and _iabs(v) > PROD_LIMIT / am:
            raise OverflowError("snf kernel: product exceeds the int64 window")
        st.put(r, dst, st.rows.get(r, dst) + mult * v)
    return 0
