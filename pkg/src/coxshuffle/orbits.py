"""Semisimple adjoint orbits of types A and B, modeled as polynomials.

Type A orbits over F_q are the monic degree-n polynomials with vanishing
z^(n-1) coefficient (q^(n-1) of them); type B orbits are the monic degree-2n
polynomials fixed by z -> -z (q^n of them, odd characteristic).  The class
map sends a polynomial to a conjugacy-class label of the Weyl group through
its irreducible factorization: factor degrees for type A; for type B the
unique splitting into conjugate pairs [phi(z)phi(-z)]^r times self-conjugate
factors phi^s with s in {0,1}, giving a pair of partitions.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from .gfpoly import FactorMultiset, FqContext, FqPoly, factor, is_prime
from .group import ClassLabel
from .measures import ClassMeasure


@dataclass(frozen=True)
class OrbitFamily:
    tag: str  # "A" or "B"
    n: int
    q: int  # field size (prime power; acceptance runs use primes)
    ctx: FqContext

    @property
    def rank(self) -> int:
        return self.n - 1 if self.tag == "A" else self.n

    @property
    def very_good(self) -> bool:
        if self.tag == "A":
            return self.n % self.ctx.p != 0
        return self.ctx.p != 2

    @property
    def orbit_count(self) -> int:
        return self.q**self.rank


def orbit_family(tag: str, n: int, q: int, e: int = 1) -> OrbitFamily:
    tag = tag.upper()
    if tag not in ("A", "B"):
        raise ValueError("family must be A or B")
    if tag == "B" and (q**e) % 2 == 0:
        raise ValueError("type B needs odd characteristic")
    if not is_prime(q):
        raise ValueError("base must be prime (use e for prime powers)")
    fam = OrbitFamily(tag, n, q**e, FqContext.get(q, e))
    if fam.orbit_count > 10**6:
        raise ValueError(f"enumeration would need {fam.orbit_count} representatives")
    return fam


def enumerate_orbits(fam: OrbitFamily) -> Iterator[FqPoly]:
    """All orbit representatives: trace-zero monics (A) or even monics (B)."""
    ctx = fam.ctx
    if fam.tag == "A":
        n = fam.n
        for lower in itertools.product(range(fam.q), repeat=n - 1):
            coeffs = [ctx.from_int(k) for k in lower] + [ctx.zero, ctx.one]
            yield FqPoly.make(ctx, coeffs)
    else:
        n = fam.n
        for even in itertools.product(range(fam.q), repeat=n):
            coeffs = []
            for k in even:
                coeffs.extend([ctx.from_int(k), ctx.zero])
            coeffs.append(ctx.one)
            yield FqPoly.make(ctx, coeffs)


def phi_map(fam: OrbitFamily, f: FqPoly) -> ClassLabel:
    """Weyl-group class label of the orbit represented by f."""
    if fam.tag == "A":
        if f.degree != fam.n or not f.is_monic:
            raise ValueError("expected a monic polynomial of degree n")
        if len(f.coeffs) >= fam.n and not f.ctx.is_zero(f.coeffs[fam.n - 1]):
            raise ValueError("coefficient of z^(n-1) must vanish")
        return ClassLabel("partition", factor(f).degree_partition())
    if f.degree != 2 * fam.n or not f.is_monic or not f.is_even_function():
        raise ValueError("expected a monic even polynomial of degree 2n")
    lam, mu = b_pair_type(factor(f))
    return ClassLabel("bipartition", (lam, mu))


def b_pair_type(fac: FactorMultiset) -> Tuple[tuple, tuple]:
    """Pair of partitions from the conjugate-pair splitting of an even monic.

    Conjugate pairs {phi, phi*} of degree m contribute their multiplicity to
    lambda_m.  Self-conjugate factors split as k = 2r + s with s in {0, 1}:
    phi = z (whose even multiplicity pairs with itself) sends r to lambda_1;
    an even-degree self-conjugate phi of degree 2e sends r to lambda_(2e)
    and s to mu_e.
    """
    lam: Counter = Counter()
    mu: Counter = Counter()
    done = set()
    for phi, k in fac:
        if phi in done:
            continue
        star = phi.conjugate_monic()
        if star != phi:
            done.add(star)
            if fac.multiplicity(star) != k:
                raise ValueError("polynomial is not fixed by z -> -z")
            lam[phi.degree] += k
        elif phi.degree == 1:  # phi = z in odd characteristic
            if k % 2:
                raise ValueError("odd multiplicity of z in an even polynomial")
            lam[1] += k // 2
        else:
            if phi.degree % 2:
                raise ValueError("odd-degree self-conjugate factor other than z")
            r, s = divmod(k, 2)
            lam[phi.degree] += r
            mu[phi.degree // 2] += s
    return _partition(lam), _partition(mu)


def _partition(counter: Counter) -> tuple:
    parts = []
    for size, count in counter.items():
        parts.extend([size] * count)
    return tuple(sorted(parts, reverse=True))


def orbit_class_distribution(fam: OrbitFamily) -> ClassMeasure:
    """Uniform measure over orbit representatives, pushed through the class map."""
    counts: Dict[ClassLabel, int] = {}
    total = 0
    for f in enumerate_orbits(fam):
        label = phi_map(fam, f)
        counts[label] = counts.get(label, 0) + 1
        total += 1
    if total != fam.orbit_count:
        raise RuntimeError("orbit enumeration produced the wrong count")
    return ClassMeasure({k: Fraction(v, total) for k, v in counts.items()})


def identity_class_label(fam: OrbitFamily) -> ClassLabel:
    if fam.tag == "A":
        return ClassLabel("partition", (1,) * fam.n)
    return ClassLabel("bipartition", ((1,) * fam.n, ()))


def weyl_exponents(fam: OrbitFamily) -> List[int]:
    if fam.tag == "A":
        return list(range(1, fam.n))
    return list(range(1, 2 * fam.n, 2))


def identity_class_count(fam: OrbitFamily) -> int:
    """Number of representatives mapping to the identity class (exhaustive)."""
    target = identity_class_label(fam)
    return sum(1 for f in enumerate_orbits(fam) if phi_map(fam, f) == target)


def identity_class_prediction(fam: OrbitFamily) -> Fraction:
    """prod (q + m_i) / (1 + m_i) over the exponents of the Weyl group."""
    out = Fraction(1)
    for m in weyl_exponents(fam):
        out *= Fraction(fam.q + m, 1 + m)
    return out


def split_census_constant_one(n: int, q: int) -> Tuple[int, Fraction]:
    """Conjugacy-class-side counterexample census: monic degree-n polynomials
    over F_q splitting into linear factors with constant term 1, against the
    orbit-side prediction prod (q + m_i)/(1 + m_i)."""
    ctx = FqContext.get(q)
    census = 0
    for roots in itertools.combinations_with_replacement(range(q), n):
        prod = 1
        for a in roots:
            prod = prod * (-a) % q
        if prod % q == 1 % q:
            census += 1
    prediction = Fraction(1)
    for m in range(1, n):
        prediction *= Fraction(q + m, 1 + m)
    return census, prediction


@dataclass
class TranslationReport:
    n: int
    q: int
    hypothesis_ok: bool
    fibers_identical: bool = None
    distribution: dict = None


def translation_invariance_check(n: int, q: int) -> TranslationReport:
    """Factorization-type distribution on every fiber of the z^(n-1) coefficient.

    The change of variables z -> z + k moves the fiber without changing the
    factorization type, so for p not dividing n all fibers must agree; checked
    here exhaustively."""
    ctx = FqContext.get(q)
    if n % ctx.p == 0:
        return TranslationReport(n, q, hypothesis_ok=False)
    fibers: Dict[int, Counter] = {b: Counter() for b in range(q)}
    for lower in itertools.product(range(q), repeat=n):
        coeffs = [ctx.from_int(k) for k in lower] + [ctx.one]
        f = FqPoly.make(ctx, coeffs)
        b = ctx.to_int(f.coeffs[n - 1]) if f.degree >= 1 and len(f.coeffs) > n - 1 else 0
        fibers[b][factor(f).degree_partition()] += 1
    first = fibers[0]
    ok = all(fibers[b] == first for b in range(q))
    return TranslationReport(n, q, True, ok, dict(first))
