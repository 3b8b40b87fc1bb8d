# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled flip kernel; same stream and semantics as ``_kernel_py``."""
from libc.stdint cimport int32_t, int64_t, uint32_t, uint64_t

NAME = "cython"
RELEASES_GIL = True


cdef inline uint64_t _next(uint64_t *s) noexcept nogil:
    s[0] += 0x9E3779B97F4A7C15ULL
    cdef uint64_t z = s[0]
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline uint32_t _below(uint64_t *s, uint32_t bound) noexcept nogil:
    cdef uint64_t m = (_next(s) >> 32) * bound
    cdef uint32_t low = <uint32_t>m
    cdef uint32_t threshold
    if low < bound:
        threshold = (<uint32_t>0 - bound) % bound
        while low < threshold:
            m = (_next(s) >> 32) * bound
            low = <uint32_t>m
    return <uint32_t>(m >> 32)


def run_chains(int32_t[:, ::1] mates, const int32_t[:, ::1] blocks, uint64_t[::1] states,
               int64_t flips, bint check=False):
    cdef Py_ssize_t nchains = mates.shape[0]
    cdef uint32_t nb = <uint32_t>blocks.shape[0]
    cdef Py_ssize_t ch
    cdef int64_t step
    cdef uint64_t s
    cdef uint32_t k
    cdef int32_t c00, c10, c01, c11
    cdef int32_t *mate
    cdef int64_t bad = 0
    if nchains == 0 or flips == 0:
        return 0
    with nogil:
        for ch in range(nchains):
            s = states[ch]
            mate = &mates[ch, 0]
            for step in range(flips):
                k = _below(&s, nb)
                c00 = blocks[k, 0]
                c10 = blocks[k, 1]
                c01 = blocks[k, 2]
                c11 = blocks[k, 3]
                if mate[c00] == c10 and mate[c01] == c11:
                    mate[c00] = c01
                    mate[c01] = c00
                    mate[c10] = c11
                    mate[c11] = c10
                elif mate[c00] == c01 and mate[c10] == c11:
                    mate[c00] = c10
                    mate[c10] = c00
                    mate[c01] = c11
                    mate[c11] = c01
                if check:
                    if mate[mate[c00]] != c00:
                        bad += 1
                    if mate[mate[c10]] != c10:
                        bad += 1
                    if mate[mate[c01]] != c01:
                        bad += 1
                    if mate[mate[c11]] != c11:
                        bad += 1
            states[ch] = s
    return bad
