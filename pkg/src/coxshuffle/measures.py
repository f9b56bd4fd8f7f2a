"""The signed measures H(W, x) and everything built on them.

Three independent routes to the same measure:

  definition   group data per standard parabolic K (subgroup order,
               normalizer order, number of equivalent subsets) times the
               restricted characteristic polynomial of the arrangement;
  os_sign      the sign-and-evaluation rewrite of the same face weight,
               chi(x) / (x^r * chi(-1)) with alternating sign;
  closed_form  the piecewise-rational closed forms for families
               A, B, H3, H4, keyed by descent statistics.

Also: the one-step chamber walk (an independent oracle via coset minima),
transition matrices with their exact spectrum identity, convolution in the
group algebra, the identity/longest-element product formulas, the positive
solution counting identity for crystallographic types, and class pushforwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from .group import ClassLabel, CoxeterGroup
from .lattice import IntersectionLattice, build_lattice
from .rootdata import affine_data, p_count

_LATTICES: Dict[int, IntersectionLattice] = {}


def get_lattice(g: CoxeterGroup) -> IntersectionLattice:
    lat = _LATTICES.get(id(g))
    if lat is None:
        from . import cache

        key = f"lattice_{g.root_system.type_name()}"
        lat = cache.cached(key, lambda: build_lattice(g.root_system))
        _LATTICES[id(g)] = lat
    return lat


def binom(x: Union[int, Fraction], n: int) -> Fraction:
    """Generalized binomial coefficient: x(x-1)...(x-n+1)/n!."""
    num = Fraction(1)
    for j in range(n):
        num *= Fraction(x) - j
    return num / factorial(n)


# -- measures -----------------------------------------------------------------


class WMeasure:
    """Signed measure on the group; coefficients sum to one exactly."""

    def __init__(self, group: CoxeterGroup, x_param: Optional[Fraction], dense: Sequence[Fraction]):
        if len(dense) != group.size:
            raise ValueError("wrong number of values")
        total = sum(dense)
        if total != 1:
            raise ValueError(f"measure coefficients sum to {total}, not 1")
        self.group = group
        self.x_param = x_param
        self._dense = tuple(dense)
        self._by_descent: Optional[Dict[FrozenSet[int], Fraction]] = None

    @classmethod
    def from_descent_values(
        cls, group: CoxeterGroup, x_param, values: Dict[FrozenSet[int], Fraction]
    ) -> "WMeasure":
        dense = [values[group.descent_set(i)] for i in range(group.size)]
        m = cls(group, x_param, dense)
        m._by_descent = dict(values)
        return m

    def value(self, i: int) -> Fraction:
        return self._dense[i]

    def dense(self) -> Tuple[Fraction, ...]:
        return self._dense

    def by_descent(self) -> Dict[FrozenSet[int], Fraction]:
        """Descent-class compression; requires constancy on descent classes."""
        if self._by_descent is None:
            out: Dict[FrozenSet[int], Fraction] = {}
            for i, v in enumerate(self._dense):
                d = self.group.descent_set(i)
                if d in out:
                    if out[d] != v:
                        raise ValueError("measure is not constant on descent classes")
                else:
                    out[d] = v
            self._by_descent = out
        return self._by_descent

    def __eq__(self, other):
        return (
            isinstance(other, WMeasure)
            and self.group is other.group
            and self._dense == other._dense
        )

    def __hash__(self):
        return hash((id(self.group), self._dense))

    def min_value(self) -> Fraction:
        return min(self._dense)


@dataclass
class FaceWeights:
    """Weight v_K shared by every face of type K (the cosets of W_K)."""

    group: CoxeterGroup
    x_param: Fraction
    weights: Dict[FrozenSet[int], Fraction]
    method: str

    def face_total(self) -> Fraction:
        g = self.group
        return sum(
            Fraction(g.size, g.parabolic_data(K).subgroup_order) * v
            for K, v in self.weights.items()
        )

    def min_weight(self) -> Fraction:
        return min(self.weights.values())


def _all_subsets(r: int):
    for m in range(1 << r):
        yield frozenset(i for i in range(r) if m >> i & 1)


def face_weights(g: CoxeterGroup, x, method: str = "definition") -> FaceWeights:
    """The group-theoretic face weights of the one-step chamber walk."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("x must be nonzero")
    lat = get_lattice(g)
    r = g.rank
    xr = x**r
    weights: Dict[FrozenSet[int], Fraction] = {}
    for K in _all_subsets(r):
        fid = lat.mask_to_id[g.standard_parabolic_mask(K)]
        chi = lat.char_poly(fid)
        if method == "definition":
            pd = g.parabolic_data(K)
            weights[K] = (
                Fraction(pd.subgroup_order)
                * chi(x)
                / (xr * pd.normalizer_order * pd.lambda_count)
            )
        elif method == "os_sign":
            chi_neg1 = chi(-1)
            if chi_neg1 == 0:
                raise RuntimeError("restricted characteristic polynomial vanishes at -1")
            weights[K] = Fraction((-1) ** (r - len(K))) * chi(x) / (xr * chi_neg1)
        else:
            raise ValueError(f"unknown face-weight method {method!r}")
    return FaceWeights(g, x, weights, method)


def h_measure(g: CoxeterGroup, x, method: str = "definition") -> WMeasure:
    """The shuffling measure, by one of the three independent methods."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("x must be nonzero")
    if method in ("definition", "os_sign"):
        fw = face_weights(g, x, method)
        values: Dict[FrozenSet[int], Fraction] = {}
        for D in _all_subsets(g.rank):
            values[D] = sum(v for K, v in fw.weights.items() if not (K & D))
        return WMeasure.from_descent_values(g, x, values)
    if method == "closed_form":
        return _closed_form(g, x)
    raise ValueError(f"unknown method {method!r}")


# piecewise closed forms for the two golden families, keyed by descent data;
# numerators are products of (x + c) over the listed shifts
_H3_SHIFTS = {0: (9, 5, 1), 1: (5, 1, -1), 2: (1, -1, -5), 3: (-1, -5, -9)}
_H4_SHIFTS_D = {0: (29, 19, 11, 1), 3: (1, -1, -11, -19), 4: (-1, -11, -19, -29)}


def _closed_form(g: CoxeterGroup, x: Fraction) -> WMeasure:
    fam = g.root_system.family
    r = g.rank
    values: Dict[FrozenSet[int], Fraction] = {}
    if fam == "A":
        n = r + 1
        for D in _all_subsets(r):
            values[D] = binom(x + n - 1 - len(D), n) / x**n
    elif fam == "B":
        n = r
        denom = x**n * 2**n * factorial(n)
        for D in _all_subsets(r):
            d = len(D)
            num = Fraction(1)
            for i in range(1, n + 1):
                num *= x + 2 * i - 1 - 2 * d
            values[D] = num / denom
    elif fam == "H3":
        denom = 120 * x**3
        for D in _all_subsets(3):
            num = Fraction(1)
            for c in _H3_SHIFTS[len(D)]:
                num *= x + c
            values[D] = num / denom
    elif fam == "H4":
        denom = 14400 * x**4
        for D in _all_subsets(4):
            d = len(D)
            if d in _H4_SHIFTS_D:
                num = Fraction(1)
                for c in _H4_SHIFTS_D[d]:
                    num *= x + c
            elif d == 1:
                quad = x * x + 30 * x + (149 if D <= {0, 1} else 269)
                num = (x + 1) * (x - 1) * quad
            else:  # d == 2
                if D == frozenset({2, 3}):
                    num = ((x + 1) * (x - 1)) ** 2
                else:
                    num = (x + 11) * (x + 1) * (x - 1) * (x - 11)
            values[D] = num / denom
    else:
        raise ValueError(f"no closed form for type {g.root_system.type_name()}")
    return WMeasure.from_descent_values(g, x, values)


# -- identity / longest element ------------------------------------------------


def longshort_values(
    g: CoxeterGroup, x, measure: Optional[WMeasure] = None
) -> Tuple[Fraction, Fraction]:
    """(value at the longest element, value at the identity): the exact
    products prod(x - m_i) and prod(x + m_i) over x^r |W|.  If a measure is
    supplied, both values are asserted against it."""
    x = Fraction(x)
    exps = g.exponents()
    denom = x**g.rank * g.size
    at_w0 = Fraction(1)
    at_id = Fraction(1)
    for m in exps:
        at_w0 *= x - m
        at_id *= x + m
    at_w0 /= denom
    at_id /= denom
    if measure is not None:
        if measure.value(g.longest_index) != at_w0:
            raise AssertionError("longest-element value does not match the product formula")
        if measure.value(0) != at_id:
            raise AssertionError("identity value does not match the product formula")
    return at_w0, at_id


@dataclass
class SommersReport:
    """Outcome of the positive-solution counting identity
    sum over proper subsets S of p(S, x) = f * prod(x + m_i) / |W|."""

    type_name: str
    x: int
    marks: tuple
    hypothesis_ok: bool
    lhs: Optional[int] = None
    rhs: Optional[Fraction] = None
    passed: Optional[bool] = None


def sommers_identity_check(g: CoxeterGroup, x: int) -> SommersReport:
    ad = affine_data(g.root_system)
    if any(gcd(x, c) != 1 for c in ad.marks):
        return SommersReport(g.root_system.type_name(), x, ad.marks, hypothesis_ok=False)
    total = 0
    ext = ad.extended_size
    for m in range((1 << ext) - 1):  # proper subsets S of the extended base
        S = {i for i in range(ext) if m >> i & 1}
        total += p_count(ad, S, x)
    rhs = Fraction(ad.index_of_connection)
    for e in g.exponents():
        rhs *= x + e
    rhs /= g.size
    return SommersReport(
        g.root_system.type_name(), x, ad.marks, True, total, rhs, Fraction(total) == rhs
    )


# -- the chamber walk ----------------------------------------------------------


def bhr_step(g: CoxeterGroup, fw: FaceWeights) -> WMeasure:
    """One step of the chamber walk started at the identity chamber.

    For each face (a coset uW_K) the landing chamber is the coset element
    of minimal length; the walk lands on w with the total weight of the
    faces whose minimum is w.  Computed independently of h_measure, as a
    cross-check oracle."""
    total = fw.face_total()
    if total != 1:
        raise ValueError(f"face weights sum to {total}, not 1")
    dense = [Fraction(0)] * g.size
    for K, v in fw.weights.items():
        reps = g.coset_minreps(K)
        for i in range(g.size):
            if reps[i] == i:
                dense[i] += v
    return WMeasure(g, fw.x_param, dense)


def uniform_chamber_weights(g: CoxeterGroup) -> FaceWeights:
    """All weight on the chambers (type-empty faces), uniformly."""
    weights = {K: Fraction(0) for K in _all_subsets(g.rank)}
    weights[frozenset()] = Fraction(1, g.size)
    return FaceWeights(g, Fraction(0), weights, "manual")


def transition_matrix(g: CoxeterGroup, x, method: str = "definition"):
    """One-step transition matrix M[u][w] of the chamber walk."""
    if g.size > 1200:
        raise ValueError("transition matrix materialization capped at |W| = 1200")
    dense = h_measure(g, x, method).dense()
    M = []
    for u in range(g.size):
        inv_u = g.inverse[u]
        M.append([dense[g.multiply(inv_u, w)] for w in range(g.size)])
    return M


def spectrum_check(M: List[List[Fraction]], x, rank: int) -> bool:
    """Exact check that prod over i = 0..rank of (M - x^-i I) vanishes."""
    x = Fraction(x)
    n = len(M)
    prod = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(rank + 1):
        c = x**-i
        factor = [[M[a][b] - (c if a == b else 0) for b in range(n)] for a in range(n)]
        prod = _mat_mul_frac(prod, factor)
    return all(prod[a][b] == 0 for a in range(n) for b in range(n))


def _mat_mul_frac(A, B):
    n = len(A)
    return [
        [sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


# -- group-algebra operations ---------------------------------------------------


def convolve(m1: WMeasure, m2: WMeasure) -> WMeasure:
    """Group-algebra product: out(w) = sum over uv = w of m1(u) m2(v)."""
    if m1.group is not m2.group:
        raise ValueError("measures live on different groups")
    g = m1.group
    out = [Fraction(0)] * g.size
    d1, d2 = m1.dense(), m2.dense()
    for u in range(g.size):
        a = d1[u]
        if a == 0:
            continue
        for v in range(g.size):
            b = d2[v]
            if b != 0:
                out[g.multiply(u, v)] += a * b
    return WMeasure(g, None, out)


def point_mass(g: CoxeterGroup, i: int) -> WMeasure:
    dense = [Fraction(0)] * g.size
    dense[i] = Fraction(1)
    return WMeasure(g, None, dense)


@dataclass
class ClassMeasure:
    """Probability (or signed) measure on conjugacy-class labels."""

    values: Dict[ClassLabel, Fraction]

    def __post_init__(self):
        if sum(self.values.values()) != 1:
            raise ValueError("class measure does not sum to 1")

    def __eq__(self, other):
        # classes of mass zero may be absent on either side
        return isinstance(other, ClassMeasure) and self.nonzero() == other.nonzero()

    def nonzero(self) -> Dict[ClassLabel, Fraction]:
        return {k: v for k, v in self.values.items() if v != 0}

    def sorted_items(self):
        return sorted(self.values.items(), key=lambda kv: kv[0].sort_key())


def pushforward_classes(m: WMeasure) -> ClassMeasure:
    """Total measure of each conjugacy class."""
    g = m.group
    out: Dict[ClassLabel, Fraction] = {}
    for c in g.conjugacy_classes():
        out[c.label] = sum(m.value(i) for i in c.members)
    return ClassMeasure(out)


def good_prime_bound(g: CoxeterGroup) -> Dict[int, bool]:
    """Good primes below the maximum exponent: good iff equal to an exponent."""
    exps = set(g.exponents())
    out = {}
    for p in range(2, max(exps) + 1):
        if all(p % d for d in range(2, p)):
            out[p] = p in exps
    return out
