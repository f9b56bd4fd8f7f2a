"""Necklace combinatorics: plain, twisted, and blinking necklaces, signed
ornaments, the Gessel-Reutenauer bijection, and the two encodings that turn
irreducible polynomials into primitive necklaces.

Twisted necklaces of size m are fixed-point-free orbits of integer words
under the order-2m shift-and-negate action g(a_1..a_m) = (a_2..a_m, -a_1);
blinking necklaces are orbits under rotation and global negation whose
rotation action alone is free.  A signed ornament is a set of primitive
twisted necklaces plus a multiset of primitive blinking necklaces; its type
is the pair of partitions (blinking sizes, twisted sizes).

The polynomial encodings: a root of an irreducible factor is written in a
normal basis (conjugation becomes rotation of coordinates), or its discrete
log is expanded in base p (Golomb's encoding).  Either way an irreducible
of degree i becomes a primitive plain i-necklace, and even polynomials
f(z) = f(-z) become signed ornaments through the conjugate-pair splitting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Sequence, Tuple

from .gfpoly import FqContext, FqPoly, factor, is_irreducible, is_prime
from .orbits import b_pair_type


# -- canonical forms ------------------------------------------------------------


def _rotations(word: tuple) -> Iterator[tuple]:
    for k in range(len(word)):
        yield word[k:] + word[:k]


def _twisted_orbit(word: tuple) -> List[tuple]:
    out = []
    cur = word
    for _ in range(2 * len(word)):
        out.append(cur)
        cur = cur[1:] + (-cur[0],)
    return out


def canonicalize_necklace(kind: str, word: Sequence[int]) -> Tuple[tuple, bool]:
    """Canonical (lexicographically minimal) orbit representative and the
    primitivity flag for the given necklace kind."""
    word = tuple(word)
    if not word:
        raise ValueError("empty word")
    m = len(word)
    if kind == "plain":
        orbit = list(_rotations(word))
        return min(orbit), len(set(orbit)) == m
    if kind == "twisted":
        orbit = _twisted_orbit(word)
        return min(orbit), len(set(orbit)) == 2 * m
    if kind == "blinking":
        rots = list(_rotations(word))
        orbit = rots + [tuple(-a for a in w) for w in rots]
        return min(orbit), len(set(rots)) == m
    raise ValueError(f"unknown necklace kind {kind!r}")


def primitive_necklaces(kind: str, size: int, bound: int) -> List[tuple]:
    """All primitive necklaces of the kind and size with entries in [-bound, bound]."""
    out = []
    for word in itertools.product(range(-bound, bound + 1), repeat=size):
        canon, primitive = canonicalize_necklace(kind, word)
        if primitive and canon == word:
            out.append(word)
    return out


# -- signed ornaments -------------------------------------------------------------


@dataclass(frozen=True)
class SignedOrnament:
    """A set of primitive twisted necklaces and a multiset of blinking ones."""

    twisted: frozenset
    blinking: tuple  # sorted, with multiplicity

    @property
    def size(self) -> int:
        return sum(len(w) for w in self.twisted) + sum(len(w) for w in self.blinking)

    def max_entry(self) -> int:
        entries = [abs(a) for w in self.twisted for a in w]
        entries += [abs(a) for w in self.blinking for a in w]
        return max(entries, default=0)

    def type_pair(self) -> Tuple[tuple, tuple]:
        """(blinking-size partition, twisted-size partition)."""
        lam = tuple(sorted((len(w) for w in self.blinking), reverse=True))
        mu = tuple(sorted((len(w) for w in self.twisted), reverse=True))
        return lam, mu


def make_ornament(twisted: Sequence[tuple], blinking: Sequence[tuple]) -> SignedOrnament:
    tw = frozenset(twisted)
    if len(tw) != len(list(twisted)):
        raise ValueError("twisted necklaces of an ornament must be distinct")
    return SignedOrnament(tw, tuple(sorted(blinking)))


def enumerate_signed_ornaments(n: int, q: int) -> Iterator[SignedOrnament]:
    """All signed ornaments of size n with entries bounded by (q-1)/2."""
    if q % 2 == 0 or not is_prime(q):
        raise ValueError("q must be an odd prime")
    bound = (q - 1) // 2
    tw = {m: primitive_necklaces("twisted", m, bound) for m in range(1, n + 1)}
    bl = {m: primitive_necklaces("blinking", m, bound) for m in range(1, n + 1)}

    def blinking_multisets(remaining: int, size: int):
        """Multisets of primitive blinking necklaces of total size `remaining`,
        using sizes >= size."""
        if remaining == 0:
            yield ()
            return
        if size > remaining:
            return
        for count in range(remaining // size, -1, -1):
            for combo in itertools.combinations_with_replacement(bl[size], count):
                for rest in blinking_multisets(remaining - count * size, size + 1):
                    yield combo + rest

    def twisted_sets(remaining: int, size: int):
        """Sets of distinct primitive twisted necklaces of total size <= remaining."""
        if size > remaining:
            yield ()
            return
        for count in range(remaining // size, -1, -1):
            for combo in itertools.combinations(tw[size], count):
                for rest in twisted_sets(remaining - count * size, size + 1):
                    yield combo + rest

    for twisted in twisted_sets(n, 1):
        t_size = sum(len(w) for w in twisted)
        for blinking in blinking_multisets(n - t_size, 1):
            yield make_ornament(twisted, blinking)


def count_signed_ornaments(n: int, q: int) -> int:
    return sum(1 for _ in enumerate_signed_ornaments(n, q))


# -- Reiner-style s-vector counts ---------------------------------------------------


def _binom(x, n: int) -> Fraction:
    num = Fraction(1)
    for j in range(n):
        num *= Fraction(x) - j
    return num / factorial(n)


def s_vector_count(group, w_index: int, q: int) -> int:
    """Number of weakly decreasing s in {0..(q-1)/2}^n strictly decreasing at
    the descents of w (sentinel s_(n+1) = 0): the binomial
    C((q-1)/2 + n - d(w), n)."""
    if q % 2 == 0:
        raise ValueError("q must be odd")
    n = group.rank
    d = len(group.descent_set(w_index))
    val = _binom(Fraction(q - 1, 2) + n - d, n)
    assert val.denominator == 1
    return int(val)


def s_vector_count_brute(group, w_index: int, q: int) -> int:
    """The same count by direct enumeration (cross-validation oracle)."""
    n = group.rank
    bound = (q - 1) // 2
    strict = group.descent_set(w_index)  # descent at i: s_(i+1) > s_(i+2), s_(n+1) = 0

    def count(pos: int, ceil: int) -> int:
        if ceil < 0:
            return 0
        if pos == n:
            return 1
        total = 0
        for v in range(ceil + 1):
            if pos == n - 1:
                total += 0 if (pos in strict and v == 0) else 1
            else:
                total += count(pos + 1, v - 1 if pos in strict else v)
        return total

    return count(0, bound)


# -- the Gessel-Reutenauer bijection ---------------------------------------------


def gessel_reutenauer(necklaces: Sequence[Sequence[int]]) -> Tuple[tuple, List[List[int]]]:
    """Permutation whose cycles are the given necklaces, entries replaced by
    the lexicographic ranks of their clockwise infinite readings.

    Ties between equal necklaces are broken by list position (a fixed
    arbitrary order), which does not change the resulting permutation.
    Returns (one-line form, cycles in input order).
    """
    necklaces = [tuple(w) for w in necklaces]
    if not necklaces or any(not w for w in necklaces):
        raise ValueError("need nonempty necklaces")
    n = sum(len(w) for w in necklaces)
    horizon = 2 * n + 1
    positions = []
    for ni, w in enumerate(necklaces):
        m = len(w)
        for off in range(m):
            reading = tuple((w * ((horizon // m) + 2))[off : off + horizon])
            positions.append((reading, ni, off))
    positions.sort()
    rank: Dict[Tuple[int, int], int] = {}
    for r, (_, ni, off) in enumerate(positions, start=1):
        rank[(ni, off)] = r
    cycles = []
    one_line = [0] * n
    for ni, w in enumerate(necklaces):
        cyc = [rank[(ni, off)] for off in range(len(w))]
        cycles.append(cyc)
        for j, a in enumerate(cyc):
            one_line[a - 1] = cyc[(j + 1) % len(cyc)]
    return tuple(one_line), cycles


def cycles_string(cycles: Sequence[Sequence[int]]) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


# -- polynomial-to-necklace encodings --------------------------------------------


_NORMAL_BASIS: Dict[Tuple[int, int], object] = {}


def normal_basis(q: int, m: int):
    """First field element whose Frobenius orbit is a basis of GF(q^m) over GF(q)."""
    if not is_prime(q):
        raise ValueError("prime base fields only")
    if q**m > 10**5:
        raise ValueError("field too large for exhaustive normal-basis search")
    key = (q, m)
    cached = _NORMAL_BASIS.get(key)
    if cached is not None:
        return cached
    ext = FqContext.get(q, m)
    for alpha in ext.elements():
        if ext.is_zero(alpha):
            continue
        vectors = []
        cur = alpha
        for _ in range(m):
            vectors.append(cur if m > 1 else (cur,))
            cur = ext.pow(cur, q)
        if _rank_mod_p([list(v) for v in vectors], q) == m:
            _NORMAL_BASIS[key] = alpha
            return alpha
    raise RuntimeError("no normal basis found")  # unreachable: existence is classical


def _rank_mod_p(rows: List[List[int]], p: int) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _normal_coordinates(ext: FqContext, q: int, m: int, beta) -> List[int]:
    """Coordinates of beta in the normal basis alpha^(q^j), j = 0..m-1."""
    alpha = normal_basis(q, m)
    cols = []
    cur = alpha
    for _ in range(m):
        cols.append(list(cur) if m > 1 else [cur])
        cur = ext.pow(cur, q)
    nvec = list(beta) if m > 1 else [beta]
    # solve cols * c = beta over GF(q)
    aug = [[cols[j][i] for j in range(m)] + [nvec[i]] for i in range(m)]
    rank = 0
    for col in range(m):
        piv = next((i for i in range(rank, m) if aug[i][col] % q), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = pow(aug[rank][col], -1, q)
        aug[rank] = [x * inv % q for x in aug[rank]]
        for i in range(m):
            if i != rank and aug[i][col] % q:
                f = aug[i][col]
                aug[i] = [(x - f * y) % q for x, y in zip(aug[i], aug[rank])]
        rank += 1
    if rank != m:
        raise RuntimeError("normal basis is singular")
    return [aug[i][m] % q for i in range(m)]


def _roots_in_extension(phi: FqPoly, ext: FqContext) -> list:
    return [a for a in ext.elements() if ext.is_zero(phi.eval_in(ext, a))]


def normal_basis_encode(phi: FqPoly) -> tuple:
    """Primitive plain necklace of an irreducible: normal-basis coordinates
    of any root (root choice only rotates the word)."""
    p = phi.ctx.p
    if phi.ctx.e != 1:
        raise ValueError("prime base fields only")
    i = phi.degree
    if not is_irreducible(phi):
        raise ValueError("polynomial is not irreducible")
    ext = FqContext.get(p, i)
    beta = _roots_in_extension(phi, ext)[0]
    coords = _normal_coordinates(ext, p, i, beta)
    canon, primitive = canonicalize_necklace("plain", tuple(coords))
    if not primitive:
        raise RuntimeError("encoding produced an imprimitive necklace")
    return canon


def golomb_encode(phi: FqPoly, beta=None) -> tuple:
    """Primitive plain necklace of an irreducible (not z): base-p digits of
    the discrete log of any root with respect to a generator beta."""
    p = phi.ctx.p
    if phi.ctx.e != 1:
        raise ValueError("prime base fields only")
    i = phi.degree
    if phi.coeffs == (phi.ctx.zero, phi.ctx.one):
        raise ValueError("z has no discrete log; it is not encodable")
    if not is_irreducible(phi):
        raise ValueError("polynomial is not irreducible")
    ext = FqContext.get(p, i)
    if beta is None:
        beta = ext.generator()
    elif not ext.is_generator(beta):
        raise ValueError("beta does not generate the multiplicative group")
    root = _roots_in_extension(phi, ext)[0]
    x = ext.dlog(root, beta)
    digits = []
    for _ in range(i):
        digits.append(x % p)
        x //= p
    canon, primitive = canonicalize_necklace("plain", tuple(digits))
    if not primitive:
        raise RuntimeError("encoding produced an imprimitive necklace")
    return canon


def _lift_symmetric(c: int, q: int) -> int:
    return c if c <= (q - 1) // 2 else c - q


def ornament_from_polynomial(f: FqPoly, q: int) -> SignedOrnament:
    """Signed ornament of an even monic polynomial of degree 2n over F_q.

    Conjugate pairs of irreducibles of degree m give blinking necklaces of
    size m (normal-basis coordinates of a root; negation swaps the pair);
    self-conjugate irreducibles of degree 2m give twisted necklaces of size
    m (the second coordinate half is minus the first, which is asserted).
    """
    if q % 2 == 0 or not is_prime(q):
        raise ValueError("q must be an odd prime")
    if not f.is_even_function() or not f.is_monic:
        raise ValueError("expected a monic polynomial with f(z) = f(-z)")
    fac = factor(f)
    twisted: List[tuple] = []
    blinking: List[tuple] = []
    done = set()
    for phi, k in fac:
        if phi in done:
            continue
        star = phi.conjugate_monic()
        deg = phi.degree
        if star != phi:
            done.add(star)
            rep = min(phi, star)
            ext = FqContext.get(q, deg)
            beta = _roots_in_extension(rep, ext)[0]
            coords = _normal_coordinates(ext, q, deg, beta)
            word = tuple(_lift_symmetric(c, q) for c in coords)
            canon, primitive = canonicalize_necklace("blinking", word)
            assert primitive
            blinking.extend([canon] * k)
        elif deg == 1:  # phi = z, even multiplicity
            blinking.extend([(0,)] * (k // 2))
        else:
            r, s = divmod(k, 2)
            m = deg // 2
            ext = FqContext.get(q, deg)
            beta = _roots_in_extension(phi, ext)[0]
            coords = _normal_coordinates(ext, q, deg, beta)
            if any((coords[j] + coords[j + m]) % q for j in range(m)):
                raise RuntimeError("second half of a self-conjugate root is not negated")
            if r:
                word = tuple(_lift_symmetric(c, q) for c in coords)
                canon, primitive = canonicalize_necklace("blinking", word)
                assert primitive
                blinking.extend([canon] * r)
            if s:
                word = tuple(_lift_symmetric(c, q) for c in coords[:m])
                canon, primitive = canonicalize_necklace("twisted", word)
                assert primitive
                twisted.append(canon)
    ornament = make_ornament(twisted, blinking)
    if ornament.type_pair() != b_pair_type(fac):
        raise RuntimeError("ornament type disagrees with the factorization type")
    return ornament


# -- the refinement pipeline for type A --------------------------------------------


def refine_phi_A(f: FqPoly, mode: str = "normal_basis") -> Tuple[tuple, List[List[int]]]:
    """Permutation refinement of the class map: factor, encode each factor as
    a primitive necklace, then apply the Gessel-Reutenauer bijection.

    In golomb mode the factor z (no discrete log) is encoded by the one
    degree-1 necklace missing from the Golomb image, (p-1,), which keeps the
    polynomial-to-necklace-multiset map bijective over all monic polynomials.
    Returns (one-line permutation, cycles)."""
    p = f.ctx.p
    if f.ctx.e != 1:
        raise ValueError("prime base fields only")
    if not f.is_monic or f.degree < 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    z = FqPoly.from_ints(f.ctx, [0, 1])
    necklaces: List[tuple] = []
    for phi, k in factor(f):
        if mode == "normal_basis":
            neck = normal_basis_encode(phi)
        elif mode == "golomb":
            neck = (p - 1,) if phi == z else golomb_encode(phi)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        necklaces.extend([neck] * k)
    necklaces.sort()
    one_line, cycles = gessel_reutenauer(necklaces)
    expected = factor(f).degree_partition()
    got = tuple(sorted((len(c) for c in cycles), reverse=True))
    if got != expected:
        raise RuntimeError("cycle type disagrees with the factorization type")
    return one_line, cycles


def descent_count(one_line: Sequence[int]) -> int:
    return sum(1 for i in range(len(one_line) - 1) if one_line[i] > one_line[i + 1])
