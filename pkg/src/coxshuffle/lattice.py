"""Intersection lattice of a reflection arrangement.

A flat is the intersection of some of the reflecting hyperplanes; it is
identified by the bitmask of positive roots whose hyperplanes contain it
(equivalently, the roots lying in the span of its defining normals).
Containment of flats is then a subset test on masks, which keeps the
Moebius recursion cheap even for the 60-hyperplane H4 arrangement.

Flats are generated level by level: a flat of rank k+1 is the closure of
a rank-k flat plus one root outside it.  Every root inside the closure
produces the same child, so each covering edge costs one span computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Union

from ._accel import kernels
from .linalg import Subspace, nullspace
from .rootdata import RootSystem


@dataclass(frozen=True)
class Flat:
    mask: int  # positive roots whose hyperplane contains the flat
    rank: int  # codimension of the flat
    basis: tuple  # indices of roots spanning the normals


@dataclass(frozen=True)
class CharPoly:
    """Integer-coefficient characteristic polynomial, low to high degree."""

    coefficients: tuple

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        out = 0
        for c in reversed(self.coefficients):
            out = out * x + c
        return out

    def __str__(self):
        return " + ".join(f"{c}*x^{i}" for i, c in enumerate(self.coefficients) if c)


class IntersectionLattice:
    """Poset of arrangement flats under reverse inclusion, V at the bottom."""

    def __init__(self, rs: RootSystem):
        if rs.n_positive > 60:
            raise ValueError("arrangement too large (more than 60 hyperplanes)")
        self.root_system = rs
        self.flats: List[Flat] = []
        self.mask_to_id: Dict[int, int] = {}
        self._moebius: Dict[int, Dict[int, int]] = {}
        self._subspaces: Dict[int, Subspace] = {}
        self._build()

    def _build(self):
        rs = self.root_system
        pairs = rs.root_pairs
        n = rs.n_positive

        def add(mask: int, rank: int, basis: tuple) -> int:
            fid = self.mask_to_id.get(mask)
            if fid is None:
                fid = len(self.flats)
                self.flats.append(Flat(mask, rank, basis))
                self.mask_to_id[mask] = fid
            return fid

        add(0, 0, ())
        level = []
        covered = 0
        for j in range(n):
            if covered >> j & 1:
                continue
            mask = kernels.span_mask(pairs, (j,))
            covered |= mask
            level.append(add(mask, 1, (j,)))

        for rank in range(2, rs.rank + 1):
            nxt = []
            for fid in level:
                flat = self.flats[fid]
                done = flat.mask
                for j in range(n):
                    if done >> j & 1:
                        continue
                    mask = kernels.span_mask(pairs, flat.basis + (j,))
                    done |= mask
                    gid = add(mask, rank, flat.basis + (j,))
                    if gid == len(self.flats) - 1 and self.flats[gid].rank == rank:
                        nxt.append(gid)
            # keep only genuinely new flats of this rank, deduplicated
            level = sorted(fid for fid in set(nxt) if self.flats[fid].rank == rank)
            if not level:
                break

        # deterministic ordering: by rank, then mask
        order = sorted(range(len(self.flats)), key=lambda i: (self.flats[i].rank, self.flats[i].mask))
        self.flats = [self.flats[i] for i in order]
        self.mask_to_id = {f.mask: i for i, f in enumerate(self.flats)}
        self.ranks = [f.rank for f in self.flats]
        self.masks = [f.mask for f in self.flats]

    # -- poset structure ---------------------------------------------------

    def __len__(self):
        return len(self.flats)

    def flat_dim(self, fid: int) -> int:
        return self.root_system.rank - self.flats[fid].rank

    def leq(self, a: int, b: int) -> bool:
        """a <= b in the reverse-inclusion order (V is the minimum)."""
        ma, mb = self.masks[a], self.masks[b]
        return ma & mb == ma

    def bottom_id(self) -> int:
        return self.mask_to_id[0]

    def top_id(self) -> int:
        return max(range(len(self.flats)), key=lambda i: self.ranks[i])

    def moebius_from(self, bottom: int) -> Dict[int, int]:
        """mu(bottom, Y) for every flat Y >= bottom."""
        cached = self._moebius.get(bottom)
        if cached is None:
            ids, mu = kernels.moebius_from_bottom(self.masks, self.ranks, bottom)
            cached = dict(zip(ids, mu))
            self._moebius[bottom] = cached
        return cached

    def moebius(self, a: int, b: int) -> int:
        if not self.leq(a, b):
            return 0
        return self.moebius_from(a).get(b, 0)

    def verify_moebius(self, bottoms: Optional[Sequence[int]] = None) -> bool:
        """Re-verify the defining recursion by summation over intervals."""
        if bottoms is None:
            bottoms = range(len(self.flats))
        for a in bottoms:
            mu = self.moebius_from(a)
            above = sorted(mu, key=lambda i: self.ranks[i])
            for b in above:
                total = sum(mu[z] for z in above if self.leq(z, b))
                expect = 1 if b == a else 0
                if total != expect:
                    return False
        return True

    # -- characteristic polynomials -----------------------------------------

    def flat_id_of_subspace(self, X: Subspace) -> int:
        """Map a flat, given as a subspace of V, back to its id."""
        rs = self.root_system
        mask = 0
        for j, root in enumerate(rs.positive_roots):
            functional = _root_functional(rs, root)
            if all(_dot(functional, v) == 0 for v in X.basis):
                mask |= 1 << j
        fid = self.mask_to_id.get(mask)
        if fid is None or self.flat_dim(fid) != X.dim:
            raise ValueError("subspace is not a flat of the arrangement")
        return fid

    def char_poly(self, X: Union[int, Subspace]) -> CharPoly:
        """chi of the restricted poset of flats above X (X = V gives chi(L, x))."""
        fid = X if isinstance(X, int) else self.flat_id_of_subspace(X)
        if not 0 <= fid < len(self.flats):
            raise ValueError("not a flat id")
        mu = self.moebius_from(fid)
        coeffs = [0] * (self.flat_dim(fid) + 1)
        for y, m in mu.items():
            coeffs[self.flat_dim(y)] += m
        return CharPoly(tuple(coeffs))

    def flat_subspace(self, fid: int) -> Subspace:
        """The flat itself, as a canonical subspace of V."""
        cached = self._subspaces.get(fid)
        if cached is None:
            rs = self.root_system
            rows = [
                _root_functional(rs, rs.positive_roots[j]) for j in self.flats[fid].basis
            ]
            cached = nullspace(rows, rs.rank)
            self._subspaces[fid] = cached
        return cached

    def flats_as_subspaces(self) -> List[Subspace]:
        return [self.flat_subspace(i) for i in range(len(self.flats))]


def _root_functional(rs: RootSystem, root) -> tuple:
    """Row vector of the linear form v -> (root, v) in simple-root coordinates."""
    G = rs.gram
    r = rs.rank
    return tuple(sum(root[i] * G[i][j] for i in range(r)) for j in range(r))


def _dot(row, v):
    return sum(a * b for a, b in zip(row, v))


def build_lattice(rs: RootSystem) -> IntersectionLattice:
    """Flats generated by iterated intersection of the reflecting hyperplanes."""
    return IntersectionLattice(rs)


def integer_roots(coeffs: Sequence[int], bound: int) -> Optional[List[int]]:
    """Roots (with multiplicity) of a monic integer polynomial, searched in
    0..bound; None if the polynomial does not split over that range."""
    poly = list(coeffs)
    roots = []
    for b in range(bound + 1):
        while len(poly) > 1:
            # synthetic division by (x - b)
            quot = [0] * (len(poly) - 1)
            carry = 0
            for i in range(len(poly) - 1, 0, -1):
                quot[i - 1] = poly[i] + carry
                carry = quot[i - 1] * b
            if poly[0] + carry != 0:
                break
            poly = quot
            roots.append(b)
    if len(poly) != 1 or poly[0] != 1:
        return None
    return sorted(roots)


def coexponents(group, K) -> List[int]:
    """Integer roots of the restricted characteristic polynomial above Fix(W_K)."""
    from .measures import get_lattice  # lattice cache lives with the measures

    lat = get_lattice(group)
    mask = group.standard_parabolic_mask(K)
    fid = lat.mask_to_id[mask]
    cp = lat.char_poly(fid)
    max_exp = max(group.exponents())
    roots = integer_roots(cp.coefficients, max_exp)
    if roots is None:
        raise RuntimeError(
            f"restricted characteristic polynomial {cp} does not split over the integers"
        )
    return roots
