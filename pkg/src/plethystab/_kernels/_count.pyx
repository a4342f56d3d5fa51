# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice-point counter; same contract as ``_count_py.count_matrix_points``."""

from libc.stdlib cimport malloc, free
from cpython.bytes cimport PyBytes_FromStringAndSize

from math import comb


cdef class _Search:
    cdef int k, L, nrows
    cdef long *w          # k * L
    cdef long *sufmax     # (k + 1) * L
    cdef long *rows
    cdef long *tail       # nrows + 1
    cdef long *stack      # residual frames, one per recursion depth
    cdef long *keybuf
    cdef list ways
    cdef dict memo

    def __cinit__(self, list rows, list weights, list mults, int L):
        cdef int i, j, c
        self.k = len(weights)
        self.L = L
        self.nrows = len(rows)
        self.w = <long *> malloc(max(1, self.k * L) * sizeof(long))
        self.sufmax = <long *> malloc(max(1, (self.k + 1) * L) * sizeof(long))
        self.rows = <long *> malloc(max(1, self.nrows) * sizeof(long))
        self.tail = <long *> malloc((self.nrows + 1) * sizeof(long))
        self.stack = <long *> malloc(max(1, (self.nrows * (self.k + 1) + 2) * L) * sizeof(long))
        self.keybuf = <long *> malloc((L + 3) * sizeof(long))
        if (self.w == NULL or self.sufmax == NULL or self.rows == NULL or self.tail == NULL
                or self.stack == NULL or self.keybuf == NULL):
            raise MemoryError()
        for c in range(self.k):
            for j in range(L):
                self.w[c * L + j] = weights[c][j]
        for j in range(L):
            self.sufmax[self.k * L + j] = 0
        for c in range(self.k - 1, -1, -1):
            for j in range(L):
                self.sufmax[c * L + j] = max(self.sufmax[(c + 1) * L + j], self.w[c * L + j])
        for i in range(self.nrows):
            self.rows[i] = rows[i]
        self.tail[self.nrows] = 0
        for i in range(self.nrows - 1, -1, -1):
            self.tail[i] = self.tail[i + 1] + self.rows[i]
        top = max(rows)
        self.ways = [[comb(m + K - 1, K - 1) for m in range(top + 1)] for K in mults]
        self.memo = {}

    def __dealloc__(self):
        free(self.w)
        free(self.sufmax)
        free(self.rows)
        free(self.tail)
        free(self.stack)
        free(self.keybuf)

    cdef object go(self, int i, int c, long r, int depth):
        cdef long *resid = self.stack + depth * self.L
        cdef long *nxt = resid + self.L
        cdef long *wc
        cdef long *sm
        cdef long *gm
        cdef long later, top_m, m, q
        cdef int j
        cdef object total, sub, key, hit
        cdef list ways_c

        if r == 0:
            i += 1
            if i == self.nrows:
                for j in range(self.L):
                    if resid[j] != 0:
                        return 0
                return 1
            c = 0
            r = self.rows[i]

        self.keybuf[0] = i
        self.keybuf[1] = c
        self.keybuf[2] = r
        for j in range(self.L):
            self.keybuf[3 + j] = resid[j]
        key = PyBytes_FromStringAndSize(<char *> self.keybuf, (self.L + 3) * sizeof(long))
        hit = self.memo.get(key)
        if hit is not None:
            return hit

        later = self.tail[i + 1]
        sm = self.sufmax + c * self.L
        gm = self.sufmax
        for j in range(self.L):
            if resid[j] > r * sm[j] + later * gm[j]:
                self.memo[key] = 0
                return 0

        wc = self.w + c * self.L
        ways_c = <list> self.ways[c]
        if c == self.k - 1:
            for j in range(self.L):
                nxt[j] = resid[j] - r * wc[j]
                if nxt[j] < 0:
                    self.memo[key] = 0
                    return 0
            total = ways_c[r] * self.go(i, c + 1, 0, depth + 1)
            self.memo[key] = total
            return total

        top_m = r
        for j in range(self.L):
            if wc[j] > 0:
                q = resid[j] // wc[j]
                if q < top_m:
                    top_m = q
        total = 0
        m = top_m
        while m >= 0:
            for j in range(self.L):
                nxt[j] = resid[j] - m * wc[j]
            sub = self.go(i, c + 1, r - m, depth + 1)
            if sub:
                total += ways_c[m] * sub
            m -= 1
        self.memo[key] = total
        return total

    cdef object run(self, tuple target):
        cdef int j
        for j in range(self.L):
            self.stack[j] = target[j]
        return self.go(0, 0, self.rows[0], 0)


def count_matrix_points(row_sums, weights, mults, target):
    rows = [int(r) for r in row_sums if r > 0]
    target = tuple(int(x) for x in target)
    if any(x < 0 for x in target):
        return 0
    if not rows:
        return int(not any(target))
    if len(weights) == 0:
        return 0
    weights = [tuple(int(x) for x in w) for w in weights]
    search = _Search(rows, weights, [int(K) for K in mults], len(target))
    return search.run(target)
