# cython: boundscheck=False, wraparound=False, nonecheck=False, cdivision=True
"""Compiled closed-pattern enumeration kernel.

Same contract as ``_lcm_py.closed_patterns``; bitsets are packed into
uint64 words and the depth-first search keeps one candidate cursor per
level, so memory stays at O(depth * context width).
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport uint64_t
from libc.string cimport memset

from ..errors import CapacityError


cdef inline int _popcount(uint64_t x) noexcept:
    x = x - ((x >> 1) & <uint64_t>0x5555555555555555)
    x = (x & <uint64_t>0x3333333333333333) + ((x >> 2) & <uint64_t>0x3333333333333333)
    x = (x + (x >> 4)) & <uint64_t>0x0F0F0F0F0F0F0F0F
    return <int>((x * <uint64_t>0x0101010101010101) >> 56)


cdef inline bint _prefix_equal(uint64_t *a, uint64_t *b, int j) noexcept:
    # do a and b agree on all bits strictly below j?
    cdef int fw = j >> 6
    cdef int i
    for i in range(fw):
        if a[i] != b[i]:
            return 0
    cdef uint64_t mask = (<uint64_t>1 << (j & 63)) - 1
    if (a[fw] ^ b[fw]) & mask:
        return 0
    return 1


cdef inline void _closure(uint64_t *extent, uint64_t *intent, uint64_t *cols,
                          int m, int w, int wa) noexcept:
    cdef int k, i
    cdef uint64_t *col
    cdef bint ok
    memset(intent, 0, wa * sizeof(uint64_t))
    for k in range(m):
        col = cols + k * w
        ok = 1
        for i in range(w):
            if extent[i] & ~col[i]:
                ok = 0
                break
        if ok:
            intent[k >> 6] |= <uint64_t>1 << (k & 63)


cdef object _words_to_int(uint64_t *words, int k):
    cdef object out = 0
    cdef int i
    for i in range(k - 1, -1, -1):
        out = (out << 64) | words[i]
    return out


def closed_patterns(cols, int n_objects, int min_extent, budget=None, start=None):
    """Enumerate closed attribute sets with extents of >= min_extent objects.

    Mirrors the pure-Python kernel: returns (extent_mask, intent_mask)
    pairs and raises CapacityError past ``budget`` patterns.
    """
    cdef int m = len(cols)
    if n_objects < min_extent and start is None:
        return []
    cdef int w = (n_objects + 63) >> 6
    if w == 0:
        w = 1
    cdef int wa = (m + 63) >> 6
    if wa == 0:
        wa = 1
    cdef long long cap = -1
    if budget is not None:
        cap = budget

    cdef int depth_cap = (n_objects if n_objects < m else m) + 2
    cdef uint64_t *ccols = <uint64_t *>PyMem_Malloc(<size_t>m * w * sizeof(uint64_t))
    cdef uint64_t *ext_stack = <uint64_t *>PyMem_Malloc(<size_t>depth_cap * w * sizeof(uint64_t))
    cdef uint64_t *int_stack = <uint64_t *>PyMem_Malloc(<size_t>depth_cap * wa * sizeof(uint64_t))
    cdef int *cursor = <int *>PyMem_Malloc(<size_t>depth_cap * sizeof(int))
    if ccols == NULL or ext_stack == NULL or int_stack == NULL or cursor == NULL:
        PyMem_Free(ccols)
        PyMem_Free(ext_stack)
        PyMem_Free(int_stack)
        PyMem_Free(cursor)
        raise MemoryError()

    out = []
    cdef int k, i, j, d, cnt, tail
    cdef object v
    cdef uint64_t *extent
    cdef uint64_t *intent
    cdef uint64_t *cext
    cdef uint64_t *cint
    try:
        for k in range(m):
            v = cols[k]
            for i in range(w):
                ccols[k * w + i] = <uint64_t>(v & <object>0xFFFFFFFFFFFFFFFF)
                v >>= 64

        extent = ext_stack
        intent = int_stack
        if start is None:
            for i in range(w):
                extent[i] = <uint64_t>0 - 1
            tail = n_objects & 63
            if tail:
                extent[w - 1] = (<uint64_t>1 << tail) - 1
            if n_objects == 0:
                extent[0] = 0
            _closure(extent, intent, ccols, m, w, wa)
            cursor[0] = 0
        else:
            v = start[0]
            for i in range(w):
                extent[i] = <uint64_t>(v & <object>0xFFFFFFFFFFFFFFFF)
                v >>= 64
            v = start[1]
            for i in range(wa):
                intent[i] = <uint64_t>(v & <object>0xFFFFFFFFFFFFFFFF)
                v >>= 64
            cursor[0] = <int>start[2] + 1

        out.append((_words_to_int(extent, w), _words_to_int(intent, wa)))
        if cap >= 0 and len(out) > cap:
            raise CapacityError(f"closed-pattern budget of {budget} exceeded")

        d = 0
        while d >= 0:
            extent = ext_stack + d * w
            intent = int_stack + d * wa
            cext = ext_stack + (d + 1) * w
            cint = int_stack + (d + 1) * wa
            j = cursor[d]
            while j < m:
                cursor[d] = j + 1
                if intent[j >> 6] >> (j & 63) & 1:
                    j += 1
                    continue
                cnt = 0
                for i in range(w):
                    cext[i] = extent[i] & ccols[j * w + i]
                    cnt += _popcount(cext[i])
                if cnt < min_extent:
                    j += 1
                    continue
                _closure(cext, cint, ccols, m, w, wa)
                if not _prefix_equal(cint, intent, j):
                    j += 1
                    continue
                out.append((_words_to_int(cext, w), _words_to_int(cint, wa)))
                if cap >= 0 and len(out) > cap:
                    raise CapacityError(
                        f"closed-pattern budget of {budget} exceeded"
                    )
                d += 1
                cursor[d] = j + 1
                break
            else:
                d -= 1
        return out
    finally:
        PyMem_Free(ccols)
        PyMem_Free(ext_stack)
        PyMem_Free(int_stack)
        PyMem_Free(cursor)
