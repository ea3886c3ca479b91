# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitset kernels for exact searches on graphs with <= 64 vertices.

Same contract as gkgraphs._bitset_py; rows are neighbour bitmasks.  The
pair is interchangeable and the test suite checks them against each other.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "c"

cdef uint64_t ONE = 1


cdef inline uint64_t _mask_above(int v) nogil:
    # bits strictly above position v
    if v >= 63:
        return 0
    return ~((ONE << (v + 1)) - 1)


cdef void _expand(uint64_t* rows, uint64_t cand, int size, int* best) nogil:
    cdef int order[64]
    cdef int bounds[64]
    cdef int count = 0
    cdef int colour = 0
    cdef uint64_t uncoloured = cand
    cdef uint64_t avail, low, nxt
    cdef int v, i
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            low = avail & (~avail + 1)
            v = __builtin_ctzll(low)
            avail &= ~rows[v] & ~low
            uncoloured ^= low
            order[count] = v
            bounds[count] = colour
            count += 1
    for i in range(count - 1, -1, -1):
        if size + bounds[i] <= best[0]:
            return
        v = order[i]
        nxt = cand & rows[v]
        if nxt:
            _expand(rows, nxt, size + 1, best)
        elif size + 1 > best[0]:
            best[0] = size + 1
        cand &= ~(ONE << v)


def max_clique_size(rows):
    """Exact maximum-clique size, branch and bound with a colouring bound."""
    cdef int n = len(rows)
    if n == 0:
        return 0
    cdef uint64_t g[64]
    cdef int i
    for i in range(n):
        g[i] = rows[i]
    cdef int best = 0
    cdef uint64_t full = (ONE << (n - 1) << 1) - 1
    with nogil:
        _expand(g, full, 0, &best)
    return best


cdef bint _place(uint64_t* rows, int* order, uint64_t* classes,
                 int n, int k, int i, int used) nogil:
    if i == n:
        return True
    cdef int v = order[i]
    cdef uint64_t bit = ONE << v
    cdef uint64_t nb = rows[v]
    cdef int c
    for c in range(used):
        if classes[c] & nb == 0:
            classes[c] |= bit
            if _place(rows, order, classes, n, k, i + 1, used):
                return True
            classes[c] &= ~bit
    if used < k:
        classes[used] |= bit
        if _place(rows, order, classes, n, k, i + 1, used + 1):
            return True
        classes[used] &= ~bit
    return False


def is_k_colorable(rows, k):
    """Exact backtracking test for a proper colouring with <= k colours."""
    cdef int n = len(rows)
    if k >= n:
        return True
    if k <= 0:
        return n == 0
    cdef int kk = k
    cdef uint64_t g[64]
    cdef int degs[64]
    cdef int order[64]
    cdef uint64_t classes[64]
    cdef int i, j, v
    for i in range(n):
        g[i] = rows[i]
        degs[i] = __builtin_popcountll(g[i])
        order[i] = i
    # stable insertion sort by degree descending, mirroring the tie
    # behaviour of the pure-Python sorted()
    for i in range(1, n):
        v = order[i]
        j = i - 1
        while j >= 0 and degs[order[j]] < degs[v]:
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = v
    for i in range(kk):
        classes[i] = 0
    cdef bint ok
    with nogil:
        ok = _place(g, order, classes, n, kk, 0, 0)
    return bool(ok)


def find_triangle(rows):
    """A triangle (i < j < l as vertex indices) if one exists, else None."""
    cdef int n = len(rows)
    cdef uint64_t g[64]
    cdef int i, j
    cdef uint64_t ri, above, common
    for i in range(n):
        g[i] = rows[i]
    for i in range(n):
        ri = g[i]
        above = ri & _mask_above(i)
        while above:
            j = __builtin_ctzll(above & (~above + 1))
            common = ri & g[j] & _mask_above(j)
            if common:
                return (i, j, __builtin_ctzll(common & (~common + 1)))
            above &= above - 1
    return None
