# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of coxshuffle._kernels_py (same four functions, same outputs).

Golden integers a + b*phi are (int64, int64) pairs; rank tests use
fraction-free Bareiss elimination, whose entries are minors of the input
matrix and therefore stay far below the int64 range for the root data
handled here (coordinates bounded by 8, dimension at most 8).
"""

from libc.stdlib cimport free, malloc

ctypedef long long i64
ctypedef unsigned long long u64

DEF MAXDIM = 8
DEF MAXROWS = 9


cdef inline void gmul(i64 a1, i64 b1, i64 a2, i64 b2, i64 *ra, i64 *rb) nogil:
    ra[0] = a1 * a2 + b1 * b2
    rb[0] = a1 * b2 + b1 * a2 + b1 * b2


cdef bint gdiv_exact(i64 ua, i64 ub, i64 va, i64 vb, i64 *ra, i64 *rb) nogil:
    # u / v via the rational norm; returns False if not exactly divisible
    cdef i64 n = va * va + va * vb - vb * vb
    cdef i64 wa, wb
    if n == 0:
        return False
    gmul(ua, ub, va + vb, -vb, &wa, &wb)
    if wa % n != 0 or wb % n != 0:
        return False
    ra[0] = wa / n
    rb[0] = wb / n
    return True


cdef int _rank(i64 *ma, i64 *mb, int nrows, int ncols) nogil:
    """Fraction-free Bareiss rank of an nrows x ncols golden-integer matrix."""
    cdef int rank = 0, col, r, i, j, piv
    cdef i64 pa, pb, prev_a = 1, prev_b = 0
    cdef i64 t1a, t1b, t2a, t2b, na, nb
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if ma[r * ncols + col] != 0 or mb[r * ncols + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(ncols):
                t1a = ma[rank * ncols + j]
                t1b = mb[rank * ncols + j]
                ma[rank * ncols + j] = ma[piv * ncols + j]
                mb[rank * ncols + j] = mb[piv * ncols + j]
                ma[piv * ncols + j] = t1a
                mb[piv * ncols + j] = t1b
        pa = ma[rank * ncols + col]
        pb = mb[rank * ncols + col]
        for i in range(rank + 1, nrows):
            for j in range(ncols):
                if j == col:
                    continue
                gmul(pa, pb, ma[i * ncols + j], mb[i * ncols + j], &t1a, &t1b)
                gmul(ma[i * ncols + col], mb[i * ncols + col],
                     ma[rank * ncols + j], mb[rank * ncols + j], &t2a, &t2b)
                na = t1a - t2a
                nb = t1b - t2b
                if prev_a != 1 or prev_b != 0:
                    if not gdiv_exact(na, nb, prev_a, prev_b, &na, &nb):
                        return -1
                ma[i * ncols + j] = na
                mb[i * ncols + j] = nb
            ma[i * ncols + col] = 0
            mb[i * ncols + col] = 0
        prev_a = pa
        prev_b = pb
        rank += 1
        if rank == nrows:
            break
    return rank


def span_mask(root_pairs, basis_idx):
    """Bitmask of the roots lying in the span of the given basis roots."""
    cdef int n = len(root_pairs)
    cdef int k = len(basis_idx)
    if k == 0:
        return 0
    cdef int dim = len(root_pairs[0])
    if dim > MAXDIM or k + 1 > MAXROWS or n > 63:
        raise ValueError("dimension out of range for the compiled kernel")
    cdef i64 ba[MAXROWS * MAXDIM]
    cdef i64 bb[MAXROWS * MAXDIM]
    cdef i64 wa[MAXROWS * MAXDIM]
    cdef i64 wb[MAXROWS * MAXDIM]
    cdef int i, j, r
    cdef u64 mask = 0
    for r in range(k):
        root = root_pairs[basis_idx[r]]
        for j in range(dim):
            ba[r * dim + j] = root[j][0]
            bb[r * dim + j] = root[j][1]
    for r in range(k * dim):
        wa[r] = ba[r]
        wb[r] = bb[r]
    cdef int base_rank = _rank(wa, wb, k, dim)  # basis may be dependent
    if base_rank < 0:
        raise RuntimeError("inexact division in Bareiss elimination")
    cdef int rank
    for i in range(n):
        root = root_pairs[i]
        for r in range(k * dim):
            wa[r] = ba[r]
            wb[r] = bb[r]
        for j in range(dim):
            wa[k * dim + j] = root[j][0]
            wb[k * dim + j] = root[j][1]
        rank = _rank(wa, wb, k + 1, dim)
        if rank < 0:
            raise RuntimeError("inexact division in Bareiss elimination")
        if rank == base_rank:
            mask |= (<u64> 1) << i
    return mask


def moebius_from_bottom(flat_masks, flat_ranks, bottom):
    """Identical to the pure-Python version: (ids above bottom sorted by rank,
    aligned Moebius values)."""
    cdef int m = len(flat_masks)
    cdef u64 bmask = <u64> <object> flat_masks[bottom]
    cdef list ids = []
    cdef int i
    cdef u64 fm
    for i in range(m):
        fm = <u64> <object> flat_masks[i]
        if fm & bmask == bmask:
            ids.append(i)
    ids.sort(key=lambda j: (flat_ranks[j], j))
    cdef int na = len(ids)
    cdef u64 *masks = <u64 *> malloc(na * sizeof(u64))
    cdef long long *mu = <long long *> malloc(na * sizeof(long long))
    if masks == NULL or mu == NULL:
        free(masks)
        free(mu)
        raise MemoryError()
    for i in range(na):
        masks[i] = <u64> <object> flat_masks[ids[i]]
    cdef int pos, q, bpos = ids.index(bottom)
    cdef long long total
    cdef u64 mi
    try:
        for pos in range(na):
            if pos == bpos:
                mu[pos] = 1
                continue
            mi = masks[pos]
            total = 0
            for q in range(pos):
                if masks[q] & mi == masks[q]:
                    total += mu[q]
            mu[pos] = -total
        return ids, [mu[i] for i in range(na)]
    finally:
        free(masks)
        free(mu)


def coset_minreps(rmult, lengths, gens, by_length):
    """Minimal coset representative per element (see the pure twin)."""
    cdef int n = len(lengths)
    cdef int ng = len(gens)
    if ng == 0:
        return list(range(n))
    cdef long long *tables = <long long *> malloc(ng * n * sizeof(long long))
    cdef long long *rep = <long long *> malloc(n * sizeof(long long))
    cdef long long *lens = <long long *> malloc(n * sizeof(long long))
    cdef long long *stack = <long long *> malloc(n * sizeof(long long))
    cdef long long *seen = <long long *> malloc(n * sizeof(long long))
    if tables == NULL or rep == NULL or lens == NULL or stack == NULL or seen == NULL:
        free(tables); free(rep); free(lens); free(stack); free(seen)
        raise MemoryError()
    cdef int g, i, j, top, nseen, seed
    cdef long long lmin
    try:
        for g in range(ng):
            row = rmult[gens[g]]
            for i in range(n):
                tables[g * n + i] = row[i]
        for i in range(n):
            rep[i] = -1
            lens[i] = lengths[i]
        for idx in by_length:
            seed = idx
            if rep[seed] >= 0:
                continue
            lmin = lens[seed]
            rep[seed] = seed
            stack[0] = seed
            seen[0] = seed
            top = 1
            nseen = 1
            while top:
                top -= 1
                i = stack[top]
                for g in range(ng):
                    j = tables[g * n + i]
                    if rep[j] < 0:
                        rep[j] = seed
                        stack[top] = j
                        seen[nseen] = j
                        top += 1
                        nseen += 1
            for i in range(1, nseen):
                if lens[seen[i]] <= lmin:
                    raise AssertionError("coset minimum is not unique")
        return [rep[i] for i in range(n)]
    finally:
        free(tables); free(rep); free(lens); free(stack); free(seen)


def conjugacy_closure(rmult, lmult, n_gens):
    """Conjugacy class id per element, classes numbered by smallest member."""
    cdef int n = len(rmult[0])
    cdef int ng = n_gens
    cdef long long *rt = <long long *> malloc(ng * n * sizeof(long long))
    cdef long long *lt = <long long *> malloc(ng * n * sizeof(long long))
    cdef long long *cls = <long long *> malloc(n * sizeof(long long))
    cdef long long *stack = <long long *> malloc(n * sizeof(long long))
    if rt == NULL or lt == NULL or cls == NULL or stack == NULL:
        free(rt); free(lt); free(cls); free(stack)
        raise MemoryError()
    cdef int g, i, j, seed, top, ncls = 0
    try:
        for g in range(ng):
            rrow = rmult[g]
            lrow = lmult[g]
            for i in range(n):
                rt[g * n + i] = rrow[i]
                lt[g * n + i] = lrow[i]
        for i in range(n):
            cls[i] = -1
        for seed in range(n):
            if cls[seed] >= 0:
                continue
            cls[seed] = ncls
            stack[0] = seed
            top = 1
            while top:
                top -= 1
                i = stack[top]
                for g in range(ng):
                    j = lt[g * n + rt[g * n + i]]
                    if cls[j] < 0:
                        cls[j] = ncls
                        stack[top] = j
                        top += 1
            ncls += 1
        return [cls[i] for i in range(n)]
    finally:
        free(rt); free(lt); free(cls); free(stack)
