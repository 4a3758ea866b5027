# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-enumeration kernel.

Meet-in-the-middle over one machine word: unions of closed neighborhoods
are tabulated for every subset of the low half of the candidate list, then
each high-half subset is tested against every low-half union.
"""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, calloc, free


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def count_block(cand_masks, uint64_t target, uint64_t base, int n_low,
                uint64_t hi_start, uint64_t hi_stop):
    """Size-indexed counts of candidate subsets ``S`` with
    ``target <= base | N[S]`` whose high half lies in ``[hi_start, hi_stop)``.
    """
    cdef int k = len(cand_masks)
    cdef int n_high = k - n_low
    cdef uint64_t n_lo = (<uint64_t>1) << n_low
    cdef uint64_t* masks = <uint64_t*>malloc((k + 1) * sizeof(uint64_t))
    cdef uint64_t* lo = <uint64_t*>malloc(n_lo * sizeof(uint64_t))
    cdef unsigned char* lo_pop = <unsigned char*>malloc(n_lo)
    cdef int64_t* counts = <int64_t*>calloc(k + 1, sizeof(int64_t))
    cdef uint64_t h, l, uh, need, lo_all = 0
    cdef int i, ph
    if masks == NULL or lo == NULL or lo_pop == NULL or counts == NULL:
        free(masks); free(lo); free(lo_pop); free(counts)
        raise MemoryError()
    try:
        for i in range(k):
            masks[i] = cand_masks[i]
        with nogil:
            lo[0] = 0
            lo_pop[0] = 0
            for l in range(1, n_lo):
                lo[l] = lo[l & (l - 1)] | masks[__builtin_ctzll(l)]
                lo_pop[l] = <unsigned char>__builtin_popcountll(l)
            for l in range(n_lo):
                lo_all |= lo[l]
            for h in range(hi_start, hi_stop):
                uh = base
                for i in range(n_high):
                    if (h >> i) & 1:
                        uh |= masks[n_low + i]
                need = target & ~uh
                if need & ~lo_all:
                    continue
                ph = __builtin_popcountll(h)
                if need == 0:
                    for l in range(n_lo):
                        counts[ph + lo_pop[l]] += 1
                else:
                    for l in range(n_lo):
                        if (lo[l] & need) == need:
                            counts[ph + lo_pop[l]] += 1
        return [counts[i] for i in range(k + 1)]
    finally:
        free(masks)
        free(lo)
        free(lo_pop)
        free(counts)
