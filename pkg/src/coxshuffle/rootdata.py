"""Root systems for the supported reflection groups, in simple-root coordinates.

Every group is realized essentially (ambient dimension = rank) on the basis
of simple roots, so reflection matrices and root coordinates live in Z or in
the golden integers Z[phi].  Supported families:

  A rank 1..5, B rank 2..4, D rank 4, G2, I2(m) for m in {2,3,4,5,6,10},
  H3, H4.

The remaining dihedral orders m <= 12 (7, 8, 9, 11, 12) would need exact
coordinates outside Q and Q(phi) (degree of 2*cos(pi/m) exceeds 2), so they
are rejected with an explicit unsupported-type error.

Also houses the affine data used by the positive-solution counting identity:
highest root, marks, index of connection, and the counter p_count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .golden import GoldenRational, golden_sign

SUPPORTED_I2 = (2, 3, 4, 5, 6, 10)

# order of the full group and number of positive roots, per family
_GROUP_ORDER = {
    "A": lambda r: _factorial(r + 1),
    "B": lambda r: 2**r * _factorial(r),
    "D": lambda r: 2 ** (r - 1) * _factorial(r),
    "G2": lambda r: 12,
    "H3": lambda r: 120,
    "H4": lambda r: 14400,
    "I2": None,  # filled per m
}
_N_POSITIVE = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "G2": lambda r: 6,
    "H3": lambda r: 15,
    "H4": lambda r: 60,
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


class UnsupportedTypeError(ValueError):
    """Raised for (family, rank) pairs outside the supported set."""


def _scalar_sign(x) -> int:
    if isinstance(x, GoldenRational):
        return golden_sign(x)
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class RootSystem:
    """Base of simple roots plus the full set of positive roots."""

    family: str
    rank: int
    m_param: Optional[int]  # dihedral order for I2, else None
    scalar_field: str  # "rational" or "golden"
    cartan_like_matrix: tuple  # C[i][j] = 2(a_i, a_j)/(a_i, a_i)
    gram: tuple  # (a_i, a_j)
    simple_roots: tuple  # unit coordinate vectors
    positive_roots: tuple  # coordinates in the simple-root basis
    root_index: dict = field(hash=False, compare=False, repr=False, default=None)
    root_pairs: tuple = field(hash=False, compare=False, repr=False, default=None)

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def group_order(self) -> int:
        if self.family == "I2":
            return 2 * self.m_param
        return _GROUP_ORDER[self.family](self.rank)

    @property
    def crystallographic(self) -> bool:
        return self.family in ("A", "B", "D", "G2")

    def type_name(self) -> str:
        if self.family == "I2":
            return f"I2({self.m_param})"
        if self.family in ("G2", "H3", "H4"):
            return self.family
        return f"{self.family}{self.rank}"

    def reflection_matrix(self, i: int) -> tuple:
        """Matrix of the i-th simple reflection in simple-root coordinates."""
        C = self.cartan_like_matrix
        rows = []
        for k in range(self.rank):
            if k != i:
                rows.append(tuple(_one_zero(self, k, j) for j in range(self.rank)))
            else:
                rows.append(tuple(_one_zero(self, k, j) - C[i][j] for j in range(self.rank)))
        return tuple(rows)

    def apply_simple(self, i: int, v: Sequence) -> tuple:
        """Image of a coordinate vector under the i-th simple reflection."""
        C = self.cartan_like_matrix
        coeff = sum(C[i][j] * v[j] for j in range(self.rank))
        w = list(v)
        w[i] = v[i] - coeff
        return tuple(w)

    def root_sign(self, v: Sequence) -> int:
        """+1 for a positive root, -1 for a negative root."""
        signs = {_scalar_sign(x) for x in v}
        signs.discard(0)
        if signs == {1}:
            return 1
        if signs == {-1}:
            return -1
        raise ValueError(f"not a root: {v}")

    def signed_index(self, v: Sequence) -> int:
        """Index of v among signed roots: j for positive, j + n_pos for -roots."""
        n = self.n_positive
        idx = self.root_index.get(tuple(v))
        if idx is not None:
            return idx
        idx = self.root_index.get(tuple(-x for x in v))
        if idx is not None:
            return idx + n
        raise ValueError(f"not a root: {v}")


def _one_zero(rs: RootSystem, i: int, j: int):
    x = rs.cartan_like_matrix[0][0]
    one = x / x
    return one if i == j else one * 0


def _cartan_and_gram(family: str, rank: int, m: Optional[int]):
    F = Fraction
    phi = GoldenRational(0, 1)

    def zeros(n, golden=False):
        z = GoldenRational(0, 0) if golden else F(0)
        return [[z] * n for _ in range(n)]

    if family == "A":
        C = zeros(rank)
        for i in range(rank):
            C[i][i] = F(2)
            if i + 1 < rank:
                C[i][i + 1] = C[i + 1][i] = F(-1)
        return C, [row[:] for row in C]

    if family == "B":
        C = zeros(rank)
        G = zeros(rank)
        for i in range(rank):
            C[i][i] = F(2)
            G[i][i] = F(2) if i < rank - 1 else F(1)
        for i in range(rank - 1):
            G[i][i + 1] = G[i + 1][i] = F(-1)
            C[i][i + 1] = F(-1)
            C[i + 1][i] = F(-1) if i + 1 < rank - 1 else F(-2)
        return C, G

    if family == "D":
        # three outer nodes 0, 2, 3 attached to the center node 1
        C = zeros(rank)
        edges = [(0, 1), (1, 2), (1, 3)]
        for i in range(rank):
            C[i][i] = F(2)
        for i, j in edges:
            C[i][j] = C[j][i] = F(-1)
        return C, [row[:] for row in C]

    if family == "G2" or (family == "I2" and m == 6):
        C = [[F(2), F(-1)], [F(-3), F(2)]]
        G = [[F(6), F(-3)], [F(-3), F(2)]]
        return C, G

    if family == "I2":
        if m == 2:
            C = [[F(2), F(0)], [F(0), F(2)]]
            return C, [row[:] for row in C]
        if m == 3:
            return _cartan_and_gram("A", 2, None)
        if m == 4:
            return _cartan_and_gram("B", 2, None)
        if m == 5:
            two = GoldenRational(2, 0)
            C = [[two, -phi], [-phi, two]]
            return C, [row[:] for row in C]
        if m == 10:
            lam = GoldenRational(2, 1)  # 4*cos(pi/10)^2 = 2 + phi
            C = [[GoldenRational(2, 0), GoldenRational(-1, 0)], [-lam, GoldenRational(2, 0)]]
            G = [[2 * lam, -lam], [-lam, GoldenRational(2, 0)]]
            return C, G
        raise UnsupportedTypeError(
            f"I2({m}) unsupported: 2*cos(pi/{m}) is not in Q or Q(phi); supported m: {SUPPORTED_I2}"
        )

    if family in ("H3", "H4"):
        rank = 3 if family == "H3" else 4
        two = GoldenRational(2, 0)
        mone = GoldenRational(-1, 0)
        zero = GoldenRational(0, 0)
        C = [[zero] * rank for _ in range(rank)]
        for i in range(rank):
            C[i][i] = two
        C[0][1] = C[1][0] = -phi  # the 5-labeled bond sits between nodes 1 and 2
        for i in range(1, rank - 1):
            C[i][i + 1] = C[i + 1][i] = mone
        return C, [row[:] for row in C]

    raise UnsupportedTypeError(f"unsupported type {family}{rank}")


def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system; for I2 the rank argument carries m."""
    family = family.upper() if family.lower() != "i2" else "I2"
    m = None
    if family == "I2":
        m = rank
        rank = 2
        if m not in SUPPORTED_I2:
            # distinguish "never buildable exactly" from nonsense input
            if 2 <= m <= 12:
                raise UnsupportedTypeError(
                    f"I2({m}) unsupported: needs scalars outside Q and Q(phi)"
                )
            raise UnsupportedTypeError(f"unsupported type I2({m})")
    elif family == "A":
        if not 1 <= rank <= 5:
            raise UnsupportedTypeError(f"unsupported type A{rank} (rank 1..5)")
    elif family == "B":
        if not 2 <= rank <= 4:
            raise UnsupportedTypeError(f"unsupported type B{rank} (rank 2..4)")
    elif family == "D":
        if rank != 4:
            raise UnsupportedTypeError(f"unsupported type D{rank} (only D4)")
    elif family == "G2":
        rank = 2
    elif family == "H3":
        rank = 3
    elif family == "H4":
        rank = 4
    else:
        raise UnsupportedTypeError(f"unsupported type {family}{rank}")

    C, G = _cartan_and_gram(family, rank, m)
    golden = isinstance(C[0][0], GoldenRational)
    one = C[0][0] / C[0][0]
    zero = one * 0
    simple = [tuple(one if j == i else zero for j in range(rank)) for i in range(rank)]

    rs_stub = RootSystem(
        family=family,
        rank=rank,
        m_param=m,
        scalar_field="golden" if golden else "rational",
        cartan_like_matrix=tuple(tuple(r) for r in C),
        gram=tuple(tuple(r) for r in G),
        simple_roots=tuple(simple),
        positive_roots=(),
    )

    # closure of the simple roots under all simple reflections
    positives: List[tuple] = list(simple)
    seen = set(positives)
    frontier = list(simple)
    while frontier:
        new = []
        for v in frontier:
            for i in range(rank):
                w = rs_stub.apply_simple(i, v)
                if w in seen:
                    continue
                neg = tuple(-x for x in w)
                if neg in seen:
                    continue
                if rs_stub.root_sign(w) < 0:
                    w = neg
                seen.add(w)
                positives.append(w)
                new.append(w)
        frontier = new

    n_expected = m if family == "I2" else _N_POSITIVE[family](rank)
    if len(positives) != n_expected:
        raise RuntimeError(
            f"{family}{rank}: found {len(positives)} positive roots, expected {n_expected}"
        )

    index = {v: i for i, v in enumerate(positives)}
    pairs = tuple(tuple(_int_pair(x) for x in v) for v in positives)
    return RootSystem(
        family=family,
        rank=rank,
        m_param=m,
        scalar_field=rs_stub.scalar_field,
        cartan_like_matrix=rs_stub.cartan_like_matrix,
        gram=rs_stub.gram,
        simple_roots=rs_stub.simple_roots,
        positive_roots=tuple(positives),
        root_index=index,
        root_pairs=pairs,
    )


def _int_pair(x) -> Tuple[int, int]:
    """Root coordinates as ring integers (a, b) meaning a + b*phi."""
    if isinstance(x, GoldenRational):
        if x.a.denominator != 1 or x.b.denominator != 1:
            raise ValueError(f"non-integral root coordinate {x}")
        return (int(x.a), int(x.b))
    f = Fraction(x)
    if f.denominator != 1:
        raise ValueError(f"non-integral root coordinate {x}")
    return (int(f), 0)


def parse_type(name: str) -> RootSystem:
    """Parse CLI type names like A3, B2, D4, G2, H3, H4, I2(5)."""
    s = name.strip()
    if s.upper().startswith("I2"):
        inner = s[2:].strip("()")
        if not inner.isdigit():
            raise UnsupportedTypeError(f"cannot parse dihedral type {name!r}")
        return build_root_system("I2", int(inner))
    if s.upper() in ("G2", "H3", "H4"):
        fam = s.upper()
        return build_root_system(fam, int(fam[1]))
    fam, num = s[0].upper(), s[1:]
    if not num.isdigit():
        raise UnsupportedTypeError(f"cannot parse type {name!r}")
    return build_root_system(fam, int(num))


# -- affine data -------------------------------------------------------------


@dataclass(frozen=True)
class AffineData:
    """Highest root, marks on the extended base, and the index of connection."""

    root_system: RootSystem
    highest_root: tuple
    marks: tuple  # marks for (simple_0, ..., simple_{r-1}, alpha_0); last is 1
    index_of_connection: int

    @property
    def extended_size(self) -> int:
        return self.root_system.rank + 1


def affine_data(rs: RootSystem) -> AffineData:
    """Affine marks of the extended base; only for crystallographic families."""
    if not rs.crystallographic:
        raise ValueError(f"no affine data for non-crystallographic type {rs.type_name()}")
    best = None
    for v in rs.positive_roots:
        if best is None or sum(v) > sum(best):
            best = v
    # the highest root dominates every positive root coordinatewise
    for v in rs.positive_roots:
        if any(_scalar_sign(b - x) < 0 for b, x in zip(best, v)):
            raise RuntimeError("root poset has no unique maximum")
    marks = tuple(int(Fraction(x)) for x in best) + (1,)
    f = abs(_int_det([[int(Fraction(x)) for x in row] for row in rs.cartan_like_matrix]))
    return AffineData(rs, best, marks, f)


def _int_det(m: List[List[int]]) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _int_det(minor)
    return total


def p_count(ad: AffineData, S: Iterable[int], x: int) -> int:
    """Number of strictly positive integer solutions of sum c_a y_a = x,
    the sum running over the extended base minus S (indices 0..rank for
    the simple roots, rank for alpha_0)."""
    if x < 1:
        raise ValueError("x must be a positive integer")
    S = frozenset(S)
    if not S <= set(range(ad.extended_size)) or len(S) == ad.extended_size:
        raise ValueError("S must be a proper subset of the extended base")
    coeffs = [ad.marks[i] for i in range(ad.extended_size) if i not in S]
    ways: Dict[int, int] = {0: 1}
    for c in coeffs:
        nxt: Dict[int, int] = {}
        for t, cnt in ways.items():
            y = 1
            while t + c * y <= x:
                nxt[t + c * y] = nxt.get(t + c * y, 0) + cnt
                y += 1
        ways = nxt
    return ways.get(x, 0)
