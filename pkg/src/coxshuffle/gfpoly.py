"""Finite fields GF(p^e) and exact polynomial arithmetic over them.

Prime fields represent elements as ints 0..p-1; extensions as coefficient
tuples over the prime field modulo a monic irreducible (the first one in
lexicographic order, so contexts are canonical).  Factorization is by
trial division against a sieved table of all monic irreducibles of degree
up to deg(f)/2 — after those are removed, any nontrivial remainder is
itself irreducible — so it is deterministic and trivially correct at the
degrees used here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FqContext:
    """GF(p) for prime p, or GF(p^e) modulo a monic irreducible of degree e."""

    _cache: Dict[Tuple[int, int], "FqContext"] = {}

    def __init__(self, p: int, e: int = 1, modulus: Optional[Tuple[int, ...]] = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.order = p**e
        if e == 1:
            self.modulus = None
        else:
            if modulus is None:
                modulus = _first_irreducible(p, e)
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree e")
            base = FqContext.get(p, 1)
            if not is_irreducible(FqPoly.make(base, modulus)):
                raise ValueError("modulus must be irreducible")
            self.modulus = modulus
        self._dlog: Dict[object, int] = {}
        self._generator = None

    @classmethod
    def get(cls, p: int, e: int = 1) -> "FqContext":
        ctx = cls._cache.get((p, e))
        if ctx is None:
            ctx = cls(p, e)
            cls._cache[(p, e)] = ctx
        return ctx

    # -- element arithmetic ------------------------------------------------

    @property
    def zero(self):
        return 0 if self.e == 1 else (0,) * self.e

    @property
    def one(self):
        return 1 if self.e == 1 else (1,) + (0,) * (self.e - 1)

    def from_int(self, k: int):
        """Base-p digits of k as an element (prime subfield for k < p)."""
        if self.e == 1:
            return k % self.p
        digits = []
        k %= self.order
        for _ in range(self.e):
            digits.append(k % self.p)
            k //= self.p
        return tuple(digits)

    def to_int(self, a) -> int:
        if self.e == 1:
            return a
        out = 0
        for d in reversed(a):
            out = out * self.p + d
        return out

    def elements(self) -> Iterator:
        """All elements, in the deterministic base-p order."""
        for k in range(self.order):
            yield self.from_int(k)

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        if self.e == 1:
            return (a - b) % self.p
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        if self.e == 1:
            return -a % self.p
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        if self.e == 1:
            return a * b % self.p
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self._reduce(prod)

    def _reduce(self, coeffs: List[int]):
        p, e, mod = self.p, self.e, self.modulus
        for i in range(len(coeffs) - 1, e - 1, -1):
            c = coeffs[i] % p
            if c:
                for j in range(e):
                    coeffs[i - e + j] -= c * mod[j]
            coeffs[i] = 0
        return tuple(c % p for c in coeffs[:e])

    def pow(self, a, k: int):
        out = self.one
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("finite-field division by zero")
        return self.pow(a, self.order - 2)

    def is_zero(self, a) -> bool:
        return a == self.zero

    # -- multiplicative structure --------------------------------------------

    def generator(self):
        """Smallest generator of the multiplicative group (deterministic)."""
        if self._generator is None:
            q1 = self.order - 1
            prime_factors = _prime_factors(q1)
            for a in self.elements():
                if self.is_zero(a):
                    continue
                if all(self.pow(a, q1 // r) != self.one for r in prime_factors):
                    self._generator = a
                    break
        return self._generator

    def is_generator(self, a) -> bool:
        if self.is_zero(a):
            return False
        q1 = self.order - 1
        return all(self.pow(a, q1 // r) != self.one for r in _prime_factors(q1))

    def dlog(self, a, base=None) -> int:
        """Discrete log by table lookup (fields here have at most 10^5 elements)."""
        if base is None:
            base = self.generator()
        key = base
        if not self._dlog.get(("base",)) == key:
            table = {}
            cur = self.one
            for k in range(self.order - 1):
                table[cur] = k
                cur = self.mul(cur, base)
            self._dlog = table
            self._dlog[("base",)] = key
        if a not in self._dlog:
            raise ValueError("element is zero or base is not a generator")
        return self._dlog[a]

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"


def _prime_factors(n: int) -> List[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials ---------------------------------------------------------------


@dataclass(frozen=True)
class FqPoly:
    """Polynomial over an FqContext; coefficients low-to-high, trimmed."""

    ctx: FqContext
    coeffs: tuple

    @staticmethod
    def make(ctx: FqContext, coeffs: Sequence) -> "FqPoly":
        cs = list(coeffs)
        while cs and ctx.is_zero(cs[-1]):
            cs.pop()
        return FqPoly(ctx, tuple(cs))

    @staticmethod
    def from_ints(ctx: FqContext, ints: Sequence[int]) -> "FqPoly":
        return FqPoly.make(ctx, [ctx.from_int(k) for k in ints])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial: -1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, FqPoly) and self.ctx is other.ctx and self.coeffs == other.coeffs
        )

    def __lt__(self, other):
        a = [self.ctx.to_int(c) for c in self.coeffs]
        b = [self.ctx.to_int(c) for c in other.coeffs]
        return (len(a), a[::-1]) < (len(b), b[::-1])

    def add(self, other: "FqPoly") -> "FqPoly":
        ctx = self.ctx
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [ctx.zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [ctx.zero] * (n - len(other.coeffs))
        return FqPoly.make(ctx, [ctx.add(x, y) for x, y in zip(a, b)])

    def mul(self, other: "FqPoly") -> "FqPoly":
        ctx = self.ctx
        if self.is_zero or other.is_zero:
            return FqPoly.make(ctx, [])
        out = [ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if ctx.is_zero(x):
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
        return FqPoly.make(ctx, out)

    def scale(self, c) -> "FqPoly":
        ctx = self.ctx
        return FqPoly.make(ctx, [ctx.mul(c, x) for x in self.coeffs])

    def monic(self) -> "FqPoly":
        if self.is_zero:
            return self
        return self.scale(self.ctx.inv(self.coeffs[-1]))

    def divmod(self, other: "FqPoly") -> Tuple["FqPoly", "FqPoly"]:
        ctx = self.ctx
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead_inv = ctx.inv(other.coeffs[-1])
        quot = [ctx.zero] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if ctx.is_zero(c):
                continue
            f = ctx.mul(c, lead_inv)
            quot[i - d] = f
            for j in range(d + 1):
                rem[i - d + j] = ctx.sub(rem[i - d + j], ctx.mul(f, other.coeffs[j]))
        return FqPoly.make(ctx, quot), FqPoly.make(ctx, rem)

    def mod(self, other: "FqPoly") -> "FqPoly":
        return self.divmod(other)[1]

    def divides(self, other: "FqPoly") -> bool:
        return other.divmod(self)[1].is_zero

    def eval(self, a):
        ctx = self.ctx
        out = ctx.zero
        for c in reversed(self.coeffs):
            out = ctx.add(ctx.mul(out, a), c)
        return out

    def eval_in(self, ext: FqContext, a):
        """Evaluate a prime-field polynomial at a point of an extension field."""
        out = ext.zero
        for c in reversed(self.coeffs):
            out = ext.add(ext.mul(out, a), ext.from_int(c))
        return out

    def substitute_negative(self) -> "FqPoly":
        """The polynomial f(-z)."""
        ctx = self.ctx
        return FqPoly.make(
            ctx, [c if i % 2 == 0 else ctx.neg(c) for i, c in enumerate(self.coeffs)]
        )

    def conjugate_monic(self) -> "FqPoly":
        """Monic associate of f(-z)."""
        return self.substitute_negative().monic()

    def is_even_function(self) -> bool:
        return self == self.substitute_negative()

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if self.ctx.is_zero(c):
                continue
            cs = str(self.ctx.to_int(c))
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append("z" if cs == "1" else f"{cs}z")
            else:
                terms.append(f"z^{i}" if cs == "1" else f"{cs}z^{i}")
        return "+".join(terms)


def monic_polys(ctx: FqContext, degree: int) -> Iterator[FqPoly]:
    """All monic polynomials of the given degree, in deterministic order."""
    for lower in itertools.product(range(ctx.order), repeat=degree):
        coeffs = [ctx.from_int(k) for k in lower] + [ctx.one]
        yield FqPoly.make(ctx, coeffs)


_IRRED_CACHE: Dict[Tuple[int, int, int], List[FqPoly]] = {}


def _monic_index(ctx: FqContext, f: FqPoly, degree: int) -> int:
    """Rank of a monic degree-d polynomial among all of them (by low coeffs)."""
    idx = 0
    for i in range(degree - 1, -1, -1):
        c = f.coeffs[i] if i < len(f.coeffs) - 1 else ctx.zero
        idx = idx * ctx.order + ctx.to_int(c)
    return idx


def irreducibles(ctx: FqContext, degree: int) -> List[FqPoly]:
    """All monic irreducibles of exactly this degree, by an Eratosthenes-style
    sieve: every product of an irreducible of smaller degree with a monic
    cofactor is marked reducible; the unmarked monics remain."""
    key = (ctx.p, ctx.e, degree)
    cached = _IRRED_CACHE.get(key)
    if cached is not None:
        return cached
    if degree == 1:
        out = list(monic_polys(ctx, 1))
        _IRRED_CACHE[key] = out
        return out
    marked = bytearray(ctx.order**degree)
    for d in range(1, degree):
        if d > degree - d:
            break
        for g in irreducibles(ctx, d):
            for h in monic_polys(ctx, degree - d):
                marked[_monic_index(ctx, g.mul(h), degree)] = 1
    out = [
        f
        for f in monic_polys(ctx, degree)
        if not marked[_monic_index(ctx, f, degree)]
    ]
    _IRRED_CACHE[key] = out
    return out


def is_irreducible(f: FqPoly) -> bool:
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    for d in range(1, f.degree // 2 + 1):
        if any(g.divides(f) for g in irreducibles(f.ctx, d)):
            return False
    return True


def _first_irreducible(p: int, e: int) -> Tuple[int, ...]:
    ctx = FqContext(p, 1)
    for f in monic_polys(ctx, e):
        if is_irreducible(f):
            return tuple(f.coeffs) + (0,) * (e + 1 - len(f.coeffs))
    raise RuntimeError("no irreducible found")  # unreachable


class FactorMultiset:
    """Irreducible factorization as a list of (factor, multiplicity)."""

    def __init__(self, pairs: List[Tuple[FqPoly, int]]):
        self.pairs = sorted(pairs, key=lambda fk: (fk[0].degree, fk[0].coeffs))

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def multiplicity(self, f: FqPoly) -> int:
        for g, k in self.pairs:
            if g == f:
                return k
        return 0

    def product(self, ctx: FqContext) -> FqPoly:
        out = FqPoly.make(ctx, [ctx.one])
        for f, k in self.pairs:
            for _ in range(k):
                out = out.mul(f)
        return out

    def degree_partition(self) -> tuple:
        parts = []
        for f, k in self.pairs:
            parts.extend([f.degree] * k)
        return tuple(sorted(parts, reverse=True))

    def __str__(self):
        return " * ".join(f"({f})^{k}" if k > 1 else f"({f})" for f, k in self.pairs)


def factor(f: FqPoly) -> FactorMultiset:
    """Complete factorization of a monic polynomial of degree >= 1."""
    if not f.is_monic or f.degree < 1:
        raise ValueError("factor() expects a monic polynomial of degree >= 1")
    pairs = []
    rem = f
    for d in range(1, f.degree // 2 + 1):
        if rem.degree < 2 * d:
            break
        for g in irreducibles(f.ctx, d):
            if rem.degree < d:
                break
            k = 0
            while True:
                q, r = rem.divmod(g)
                if not r.is_zero:
                    break
                rem = q
                k += 1
            if k:
                pairs.append((g, k))
    if rem.degree >= 1:
        # anything left has no factor of degree <= deg(f)/2, hence irreducible
        pairs.append((rem, 1))
    fm = FactorMultiset(pairs)
    if fm.product(f.ctx) != f:
        raise RuntimeError("factorization failed to recombine")
    return fm


def necklace_irreducible_count(q: int, m: int) -> int:
    """(1/m) sum over d | m of mu(d) q^(m/d): the count of monic irreducibles."""
    total = 0
    for d in range(1, m + 1):
        if m % d == 0:
            total += _moebius_int(d) * q ** (m // d)
    return total // m


def _moebius_int(n: int) -> int:
    out = 1
    for r in _prime_factors(n):
        k = 0
        while n % r == 0:
            n //= r
            k += 1
        if k > 1:
            return 0
        out = -out
    return out
