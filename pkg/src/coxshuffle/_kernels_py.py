"""Pure-Python implementations of the enumeration kernels.

These are the reference implementations of the inner loops that dominate
the H3/H4 pipelines: golden-integer span tests for arrangement flats,
Moebius computation over bitmask posets, coset minimal representatives,
and conjugacy-orbit closure.  The compiled twin in _kernels.pyx exports
the same four functions; coxshuffle._accel picks one at import time.

Scalars here are ring integers of Q or Q(phi) encoded as int pairs (a, b)
meaning a + b*phi; multiplication uses phi**2 = phi + 1.  All elimination
is division-free, so everything stays in plain Python ints.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple


def _gmul(x: Tuple[int, int], y: Tuple[int, int]) -> Tuple[int, int]:
    a1, b1 = x
    a2, b2 = y
    return (a1 * a2 + b1 * b2, a1 * b2 + b1 * a2 + b1 * b2)


def _echelon(rows: List[List[Tuple[int, int]]]):
    """Division-free row echelon form; returns (rows, pivot columns)."""
    if not rows:
        return [], []
    ncols = len(rows[0])
    piv_cols = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][col] != (0, 0):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][col]
        for i in range(r + 1, len(rows)):
            e = rows[i][col]
            if e == (0, 0):
                continue
            row = rows[i]
            for j in range(ncols):
                pj = _gmul(p, row[j])
                ej = _gmul(e, rows[r][j])
                row[j] = (pj[0] - ej[0], pj[1] - ej[1])
        piv_cols.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], piv_cols


def span_mask(root_pairs: Sequence[Sequence[Tuple[int, int]]], basis_idx: Sequence[int]) -> int:
    """Bitmask of the roots lying in the span of the given basis roots."""
    basis = [list(root_pairs[i]) for i in basis_idx]
    ech, piv_cols = _echelon(basis)
    mask = 0
    for idx, root in enumerate(root_pairs):
        v = list(root)
        for row, col in zip(ech, piv_cols):
            e = v[col]
            if e == (0, 0):
                continue
            p = row[col]
            for j in range(len(v)):
                pj = _gmul(p, v[j])
                ej = _gmul(e, row[j])
                v[j] = (pj[0] - ej[0], pj[1] - ej[1])
        if all(x == (0, 0) for x in v):
            mask |= 1 << idx
    return mask


def moebius_from_bottom(
    flat_masks: Sequence[int], flat_ranks: Sequence[int], bottom: int
) -> Tuple[List[int], List[int]]:
    """Moebius values mu(bottom, Y) over all flats Y above the bottom flat.

    Flats are identified with their root bitmasks; Y >= X iff mask(Y) is a
    superset of mask(X).  Returns (flat ids above bottom sorted by rank,
    aligned mu values), using the defining recursion of the Moebius function.
    """
    bmask = flat_masks[bottom]
    ids = [i for i, m in enumerate(flat_masks) if m & bmask == bmask]
    ids.sort(key=lambda i: (flat_ranks[i], i))
    mu: List[int] = []
    masks = [flat_masks[i] for i in ids]
    for pos, i in enumerate(ids):
        if i == bottom:
            mu.append(1)
            continue
        mi = masks[pos]
        total = 0
        for q in range(pos):
            if masks[q] & mi == masks[q]:
                total += mu[q]
        mu.append(-total)
    return ids, mu


def coset_minreps(
    rmult: Sequence[Sequence[int]], lengths: Sequence[int], gens: Sequence[int], by_length: Sequence[int]
) -> List[int]:
    """Minimal-length representative of w<W_K> for every element w.

    rmult[g][i] is the index of (element i) * (generator g); gens lists the
    generators of the standard parabolic; by_length is every element index
    sorted by length.  Each coset is the orbit of any member under right
    multiplication by the parabolic's generators, and its first element in
    length order is its unique minimum (uniqueness asserted).
    """
    n = len(lengths)
    rep = [-1] * n
    for seed in by_length:
        if rep[seed] >= 0:
            continue
        seen = [seed]
        rep[seed] = seed
        stack = [seed]
        lmin = lengths[seed]
        while stack:
            i = stack.pop()
            for g in gens:
                j = rmult[g][i]
                if rep[j] < 0:
                    rep[j] = seed
                    seen.append(j)
                    stack.append(j)
        for i in seen:
            if i != seed and lengths[i] <= lmin:
                raise AssertionError("coset minimum is not unique")
    return rep


def conjugacy_closure(
    rmult: Sequence[Sequence[int]], lmult: Sequence[Sequence[int]], n_gens: int
) -> List[int]:
    """Conjugacy class id per element, classes numbered by smallest member."""
    n = len(rmult[0])
    cls = [-1] * n
    n_classes = 0
    for seed in range(n):
        if cls[seed] >= 0:
            continue
        cid = n_classes
        n_classes += 1
        cls[seed] = cid
        stack = [seed]
        while stack:
            i = stack.pop()
            for g in range(n_gens):
                j = lmult[g][rmult[g][i]]  # s * w * s
                if cls[j] < 0:
                    cls[j] = cid
                    stack.append(j)
    return cls
