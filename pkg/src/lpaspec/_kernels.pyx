# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) row reduction; same interface as ``_kernels_py``.

The working row is a dense scratch array indexed by column, but only touched
columns are visited: a binary min-heap yields the next nonzero column, so a
reduction costs O(t log t) for t touched entries. Pivot rows live in one flat
buffer of (column, value) pairs.
"""
from libc.stdlib cimport realloc, free

ctypedef long long i64


cdef inline i64 _inv(i64 a, i64 p):
    # extended Euclid; p is prime and a is nonzero mod p
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef void *_grow_buf(void *buf, i64 n, size_t size) except NULL:
    cdef void *out = realloc(buf, n * size)
    if out == NULL:
        raise MemoryError()
    return out


cdef class ModpEchelon:
    cdef readonly i64 p
    cdef i64 ncols                      # capacity of the per-column arrays
    cdef i64 *work
    cdef int *pivot_index               # column -> pivot row number, or -1
    cdef char *marked                   # column currently in the heap
    cdef int *heap
    cdef i64 heap_n
    cdef int *touched
    cdef i64 touched_n
    cdef i64 *row_start                 # pivot row k occupies [row_start[k], row_start[k+1])
    cdef i64 rows_cap
    cdef int *flat_cols
    cdef i64 *flat_vals
    cdef i64 flat_n, flat_cap
    cdef int _rank

    def __cinit__(self, p):
        self.p = p
        self.ncols = 0
        self.heap_n = 0
        self.touched_n = 0
        self.rows_cap = 64
        self.row_start = <i64 *> _grow_buf(NULL, self.rows_cap + 1, sizeof(i64))
        self.row_start[0] = 0
        self.flat_cap = 1024
        self.flat_n = 0
        self.flat_cols = <int *> _grow_buf(NULL, self.flat_cap, sizeof(int))
        self.flat_vals = <i64 *> _grow_buf(NULL, self.flat_cap, sizeof(i64))
        self._rank = 0

    def __dealloc__(self):
        free(self.work)
        free(self.pivot_index)
        free(self.marked)
        free(self.heap)
        free(self.touched)
        free(self.row_start)
        free(self.flat_cols)
        free(self.flat_vals)

    @property
    def rank(self):
        return self._rank

    cdef int _grow(self, i64 need) except -1:
        cdef i64 cap = self.ncols, i
        if need <= cap:
            return 0
        cap = max(need, 2 * cap, 64)
        self.work = <i64 *> _grow_buf(self.work, cap, sizeof(i64))
        self.pivot_index = <int *> _grow_buf(self.pivot_index, cap, sizeof(int))
        self.marked = <char *> _grow_buf(self.marked, cap, sizeof(char))
        self.heap = <int *> _grow_buf(self.heap, cap, sizeof(int))
        self.touched = <int *> _grow_buf(self.touched, cap, sizeof(int))
        for i in range(self.ncols, cap):
            self.work[i] = 0
            self.pivot_index[i] = -1
            self.marked[i] = 0
        self.ncols = cap
        return 0

    cdef inline void _touch(self, int c):
        cdef i64 i, parent
        cdef int tmp
        if self.marked[c]:
            return
        self.marked[c] = 1
        self.touched[self.touched_n] = c
        self.touched_n += 1
        i = self.heap_n
        self.heap[i] = c
        self.heap_n += 1
        while i > 0:
            parent = (i - 1) >> 1
            if self.heap[parent] <= self.heap[i]:
                break
            tmp = self.heap[parent]
            self.heap[parent] = self.heap[i]
            self.heap[i] = tmp
            i = parent

    cdef inline int _pop(self):
        cdef int top = self.heap[0], tmp
        cdef i64 i = 0, l, r, m
        self.heap_n -= 1
        self.heap[0] = self.heap[self.heap_n]
        while True:
            l = 2 * i + 1
            r = l + 1
            m = i
            if l < self.heap_n and self.heap[l] < self.heap[m]:
                m = l
            if r < self.heap_n and self.heap[r] < self.heap[m]:
                m = r
            if m == i:
                break
            tmp = self.heap[m]
            self.heap[m] = self.heap[i]
            self.heap[i] = tmp
            i = m
        return top

    cdef int _load(self, cols, vals) except -1:
        cdef i64 c, v, hi = -1
        for c in cols:
            if c > hi:
                hi = c
        self._grow(hi + 1)
        for c, v in zip(cols, vals):
            v %= self.p
            if v < 0:
                v += self.p
            self.work[c] = (self.work[c] + v) % self.p
            self._touch(<int> c)
        return 0

    cdef i64 _eliminate(self):
        """Reduce ``work``; returns the first column without a pivot (left in place), or -1."""
        cdef i64 p = self.p, f, k, end
        cdef int c, col, idx
        while self.heap_n > 0:
            c = self._pop()
            if self.work[c] == 0:
                continue
            idx = self.pivot_index[c]
            if idx < 0:
                return c
            f = self.work[c]
            end = self.row_start[idx + 1]
            for k in range(self.row_start[idx], end):
                col = self.flat_cols[k]
                self.work[col] = (self.work[col] - f * self.flat_vals[k]) % p
                if self.work[col] < 0:
                    self.work[col] += p
                self._touch(col)
        return -1

    cdef void _clear(self):
        cdef i64 k
        cdef int c
        for k in range(self.touched_n):
            c = self.touched[k]
            self.work[c] = 0
            self.marked[c] = 0
        self.touched_n = 0
        self.heap_n = 0

    def add_row(self, cols, vals):
        cdef i64 lead, inv, k, need = 0
        cdef int c
        self._load(cols, vals)
        lead = self._eliminate()
        if lead < 0:
            self._clear()
            return False
        # the row is reduced at every column up to lead; the rest may still hold pivot columns,
        # which is fine for an echelon (not reduced-echelon) basis
        for k in range(self.touched_n):
            c = self.touched[k]
            if c >= lead and self.work[c] != 0:
                need += 1
        if self.flat_n + need > self.flat_cap:
            self.flat_cap = max(2 * self.flat_cap, self.flat_n + need)
            self.flat_cols = <int *> _grow_buf(self.flat_cols, self.flat_cap, sizeof(int))
            self.flat_vals = <i64 *> _grow_buf(self.flat_vals, self.flat_cap, sizeof(i64))
        if self._rank + 1 >= self.rows_cap:
            self.rows_cap *= 2
            self.row_start = <i64 *> _grow_buf(self.row_start, self.rows_cap + 1, sizeof(i64))
        inv = _inv(self.work[lead], self.p)
        for k in range(self.touched_n):
            c = self.touched[k]
            if c >= lead and self.work[c] != 0:
                self.flat_cols[self.flat_n] = c
                self.flat_vals[self.flat_n] = (self.work[c] * inv) % self.p
                self.flat_n += 1
        self.pivot_index[lead] = self._rank
        self._rank += 1
        self.row_start[self._rank] = self.flat_n
        self._clear()
        return True

    def contains(self, cols, vals):
        self._load(cols, vals)
        cdef i64 lead = self._eliminate()
        self._clear()
        return lead < 0


def modp_rank(rows, p):
    ech = ModpEchelon(p)
    for cols, vals in rows:
        ech.add_row(cols, vals)
    return ech.rank
