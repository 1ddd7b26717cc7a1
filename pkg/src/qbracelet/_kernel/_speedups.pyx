# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled convolution kernels.

``conv_mod2_packed`` packs mod-2 coefficients into machine words and runs a
word-parallel carryless (XOR) schoolbook convolution.  ``conv_mod_small``
is a flat schoolbook loop with raw uint64 accumulation; callers must
guarantee (m-1)^2 * min(len(x), len(y)) < 2**63 so no cell overflows.
"""

from libc.stdlib cimport calloc, free
from libc.stdint cimport uint64_t


def conv_mod_small(x, y, Py_ssize_t n_out, unsigned long long m):
    """Coefficients 0..n_out of x*y with entries reduced into [0, m)."""
    cdef Py_ssize_t nx = len(x)
    cdef Py_ssize_t ny = len(y)
    cdef Py_ssize_t count = n_out + 1
    if nx > count:
        nx = count
    if ny > count:
        ny = count
    cdef uint64_t *ax = <uint64_t *> calloc(nx, sizeof(uint64_t))
    cdef uint64_t *ay = <uint64_t *> calloc(ny, sizeof(uint64_t))
    cdef uint64_t *acc = <uint64_t *> calloc(count, sizeof(uint64_t))
    if ax == NULL or ay == NULL or acc == NULL:
        free(ax); free(ay); free(acc)
        raise MemoryError()
    cdef Py_ssize_t i, j, jmax
    cdef uint64_t v
    try:
        for i in range(nx):
            ax[i] = x[i]
        for j in range(ny):
            ay[j] = y[j]
        for i in range(nx):
            v = ax[i]
            if v == 0:
                continue
            jmax = ny - 1
            if jmax > n_out - i:
                jmax = n_out - i
            for j in range(jmax + 1):
                acc[i + j] += v * ay[j]
        result = [0] * count
        for i in range(count):
            result[i] = acc[i] % m
        return result
    finally:
        free(ax)
        free(ay)
        free(acc)


def conv_mod2_packed(x, y, Py_ssize_t n_out):
    """Coefficients 0..n_out of x*y over GF(2), via word-parallel XOR."""
    cdef Py_ssize_t nx = len(x)
    cdef Py_ssize_t ny = len(y)
    cdef Py_ssize_t count = n_out + 1
    if nx > count:
        nx = count
    if ny > count:
        ny = count
    cdef Py_ssize_t wx_n = (nx + 63) >> 6
    cdef Py_ssize_t wy_n = (ny + 63) >> 6
    cdef Py_ssize_t wa_n = (count + 63) >> 6
    cdef uint64_t *wx = <uint64_t *> calloc(wx_n, sizeof(uint64_t))
    cdef uint64_t *wy = <uint64_t *> calloc(wy_n, sizeof(uint64_t))
    cdef uint64_t *acc = <uint64_t *> calloc(wa_n, sizeof(uint64_t))
    if wx == NULL or wy == NULL or acc == NULL:
        free(wx); free(wy); free(acc)
        raise MemoryError()
    cdef Py_ssize_t i, w, wo, wmax
    cdef int bo
    try:
        for i in range(nx):
            if x[i] & 1:
                wx[i >> 6] |= (<uint64_t> 1) << (i & 63)
        for i in range(ny):
            if y[i] & 1:
                wy[i >> 6] |= (<uint64_t> 1) << (i & 63)
        for i in range(nx):
            if not (wx[i >> 6] >> (i & 63)) & 1:
                continue
            wo = i >> 6
            bo = i & 63
            if bo == 0:
                wmax = wy_n
                if wmax > wa_n - wo:
                    wmax = wa_n - wo
                for w in range(wmax):
                    acc[wo + w] ^= wy[w]
            else:
                wmax = wy_n
                if wmax > wa_n - wo:
                    wmax = wa_n - wo
                for w in range(wmax):
                    acc[wo + w] ^= wy[w] << bo
                wmax = wy_n
                if wmax > wa_n - wo - 1:
                    wmax = wa_n - wo - 1
                for w in range(wmax):
                    acc[wo + w + 1] ^= wy[w] >> (64 - bo)
        result = [0] * count
        for i in range(count):
            result[i] = (acc[i >> 6] >> (i & 63)) & 1
        return result
    finally:
        free(wx)
        free(wy)
        free(acc)
