# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: uint64-key cell enumeration and word-sliced GF(2) rank.

Same contracts as homtopo._kernels.pure; the enumeration fast path requires
n_g * n_h <= 64 (the wrapper routes larger instances to pure Python).
"""

from libc.stdlib cimport malloc, free, realloc, qsort
from libc.string cimport memcpy

from homtopo.errors import BudgetError

cdef extern from *:
    """
    #include <stdint.h>
    static inline int _ctz64(uint64_t x) { return __builtin_ctzll(x); }
    """
    int _ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64


cdef int _cmp_u64(const void* a, const void* b) noexcept nogil:
    cdef u64 x = (<const u64*> a)[0]
    cdef u64 y = (<const u64*> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


def enumerate_hom_cells(list adj_g, list adj_h, long long budget):
    cdef int n_g = len(adj_g)
    cdef int n_h = len(adj_h)
    cdef int i, j, d, e, b, nlater
    cdef u64 s, c, keybits
    if n_g == 0:
        return [0]
    assert n_g * n_h <= 64

    cdef u64 adjh[64]
    cdef u64 full_h = (<u64> 1 << n_h) - 1 if n_h else 0
    for i in range(n_h):
        adjh[i] = <u64> adj_h[i]

    # high-degree G-vertices first
    order = sorted(range(n_g), key=lambda v: (-int(adj_g[v]).bit_count(), v))
    cdef int shift[64]
    cdef int looped[64]
    cdef u64 adjg[64]
    for d in range(n_g):
        i = order[d]
        adjg[d] = <u64> adj_g[i]
        shift[d] = (n_g - 1 - i) * n_h
        looped[d] = (adj_g[i] >> i) & 1
    # later[d][..]: positions after d adjacent to order[d]
    cdef int later[64][64]
    cdef int nlat[64]
    for d in range(n_g):
        nlater = 0
        for e in range(d + 1, n_g):
            if (adjg[d] >> (<int> order[e])) & 1:
                later[d][nlater] = e
                nlater += 1
        nlat[d] = nlater

    cdef u64* allowed = <u64*> malloc(n_g * n_g * sizeof(u64))
    cdef u64 sub[64]
    cdef u64 key[65]
    cdef Py_ssize_t cap = 4096
    cdef Py_ssize_t count = 0
    cdef u64* out = <u64*> malloc(cap * sizeof(u64))
    cdef u64* tmp
    if allowed == NULL or out == NULL:
        free(allowed)
        free(out)
        raise MemoryError()

    for e in range(n_g):
        allowed[e] = full_h
    key[0] = 0
    d = 0
    sub[0] = allowed[0]
    cdef u64* row
    cdef u64* nxt
    cdef u64 m2
    cdef bint ok
    while True:
        s = sub[d]
        row = allowed + d * n_g
        if s == 0:
            d -= 1
            if d < 0:
                break
            row = allowed + d * n_g
            sub[d] = (sub[d] - 1) & row[d]
            continue
        # common H-neighbors of s
        c = full_h
        m2 = s
        while m2:
            c &= adjh[_ctz64(m2)]
            m2 &= m2 - 1
        if looped[d] and (s & ~c):
            sub[d] = (s - 1) & row[d]
            continue
        if d + 1 == n_g:
            out[count] = key[d] | (s << shift[d])
            count += 1
            if count > budget:
                free(allowed)
                free(out)
                raise BudgetError(f"cell budget {budget} exceeded", found=count)
            if count == cap:
                cap <<= 1
                tmp = <u64*> realloc(out, cap * sizeof(u64))
                if tmp == NULL:
                    free(allowed)
                    free(out)
                    raise MemoryError()
                out = tmp
            sub[d] = (s - 1) & row[d]
            continue
        nxt = allowed + (d + 1) * n_g
        memcpy(nxt, row, n_g * sizeof(u64))
        ok = True
        for j in range(nlat[d]):
            e = later[d][j]
            nxt[e] &= c
            if nxt[e] == 0:
                ok = False
                break
        if ok:
            key[d + 1] = key[d] | (s << shift[d])
            d += 1
            sub[d] = nxt[d]
        else:
            sub[d] = (s - 1) & row[d]

    qsort(out, count, sizeof(u64), _cmp_u64)
    res = [0] * count
    cdef Py_ssize_t k
    for k in range(count):
        res[k] = out[k]
    free(allowed)
    free(out)
    return res


def gf2_rank(cols, Py_ssize_t nbits):
    """Rank over GF(2); columns are Python ints on `nbits` rows."""
    cdef Py_ssize_t m = len(cols)
    cdef Py_ssize_t nwords = (nbits + 63) >> 6
    if nwords == 0:
        nwords = 1
    cdef u64* mat = <u64*> malloc(m * nwords * sizeof(u64)) if m else NULL
    cdef Py_ssize_t* piv = <Py_ssize_t*> malloc(nwords * 64 * sizeof(Py_ssize_t))
    if (mat == NULL and m) or piv == NULL:
        free(mat)
        free(piv)
        raise MemoryError()
    cdef Py_ssize_t i, w, w0, bitpos, p
    cdef u64* row
    cdef u64* other
    cdef bytes bb
    cdef const char* src
    for i in range(nwords * 64):
        piv[i] = -1
    cdef Py_ssize_t nbytes = nwords * 8
    for i in range(m):
        bb = cols[i].to_bytes(nbytes, "little")
        src = bb
        memcpy(mat + i * nwords, src, nbytes)
    cdef Py_ssize_t rank = 0
    for i in range(m):
        row = mat + i * nwords
        w0 = 0
        while True:
            bitpos = -1
            for w in range(w0, nwords):
                if row[w]:
                    bitpos = (w << 6) + _ctz64(row[w])
                    break
            if bitpos < 0:
                break
            w0 = bitpos >> 6
            p = piv[bitpos]
            if p < 0:
                piv[bitpos] = i
                rank += 1
                break
            other = mat + p * nwords
            for w in range(w0, nwords):
                row[w] ^= other[w]
    free(mat)
    free(piv)
    return rank
