"""Full enumeration of the supported reflection groups.

Elements act faithfully on the signed roots, so each element is keyed by
its root permutation packed into bytes; composition is then a single
``bytes.translate`` call.  Breadth-first closure from the simple
reflections yields lengths; descent sets come from testing which simple
roots an element sends negative.  Reflection-representation matrices are
exact and computed on demand (for H4, materializing all 14400 4x4 golden
matrices up front would cost tens of MB; the byte keys cost 3.5 MB).

Conjugacy classes, standard-parabolic data (normalizer orders, equivalent
subsets, fixed spaces), and the exponents (extracted from the length
generating function) all live here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ._accel import kernels
from .linalg import Subspace, nullspace
from .rootdata import RootSystem


@dataclass(frozen=True)
class ClassLabel:
    """Conjugacy class label: a partition (family A), a pair of partitions
    (family B), or an opaque index with a representative element."""

    kind: str  # "partition" | "bipartition" | "opaque"
    data: tuple

    def __str__(self):
        if self.kind == "partition":
            return "(" + ",".join(map(str, self.data)) + ")"
        if self.kind == "bipartition":
            lam, mu = self.data
            return "(" + ",".join(map(str, lam)) + "|" + ",".join(map(str, mu)) + ")"
        return f"class{self.data[0]}"

    def sort_key(self):
        return (self.kind, self.data)


@dataclass(frozen=True)
class ConjugacyClass:
    label: ClassLabel
    members: tuple
    representative: int


@dataclass(frozen=True)
class ParabolicData:
    K: frozenset
    subgroup_order: int
    fixed_space: Subspace
    normalizer_order: int
    lambda_count: int
    conjugacy_rep: tuple


class CoxeterGroup:
    """Fully enumerated finite Coxeter group over its root system."""

    def __init__(self, rs: RootSystem):
        self.root_system = rs
        self._build()
        self._matrices: Dict[int, tuple] = {}
        self._classes: Optional[List[ConjugacyClass]] = None
        self._class_of: Optional[List[int]] = None
        self._parabolic: Dict[frozenset, ParabolicData] = {}
        self._subgroups: Dict[frozenset, tuple] = {}
        self._minreps: Dict[frozenset, list] = {}
        self._exponents: Optional[Tuple[int, ...]] = None

    # -- construction ------------------------------------------------------

    def _build(self):
        rs = self.root_system
        r = rs.rank
        n_pos = rs.n_positive
        m = 2 * n_pos
        pad = bytes(range(m, 256))

        gen_keys = []
        for g in range(r):
            img = [0] * m
            for j, root in enumerate(rs.positive_roots):
                s = rs.signed_index(rs.apply_simple(g, root))
                img[j] = s
                img[j + n_pos] = s + n_pos if s < n_pos else s - n_pos
            gen_keys.append(bytes(img))

        ident = bytes(range(m))
        keys = [ident]
        tables = [ident + pad]
        index = {ident: 0}
        parent = [-1]
        gen_of = [-1]
        length = [0]
        rmult: List[List[int]] = [[] for _ in range(r)]
        for g in range(r):
            rmult[g].append(-1)

        queue = deque([0])
        while queue:
            i = queue.popleft()
            ti = tables[i]
            for g in range(r):
                child = gen_keys[g].translate(ti)  # w * s_g
                j = index.get(child)
                if j is None:
                    j = len(keys)
                    index[child] = j
                    keys.append(child)
                    tables.append(child + pad)
                    parent.append(i)
                    gen_of.append(g)
                    length.append(length[i] + 1)
                    for h in range(r):
                        rmult[h].append(-1)
                    queue.append(j)
                rmult[g][i] = j

        size = len(keys)
        if size != rs.group_order:
            raise RuntimeError(
                f"{rs.type_name()}: enumerated {size} elements, expected {rs.group_order}"
            )

        lmult: List[List[int]] = [[0] * size for _ in range(r)]
        for g in range(r):
            tg = tables[index[gen_keys[g]]]
            lg = lmult[g]
            for i in range(size):
                lg[i] = index[keys[i].translate(tg)]

        inverse = [0] * size
        for i in range(size):
            k = keys[i]
            inv = bytearray(m)
            for a in range(m):
                inv[k[a]] = a
            inverse[i] = index[bytes(inv)]

        descent_mask = [0] * size
        for i in range(size):
            k = keys[i]
            dm = 0
            for g in range(r):
                if k[g] >= n_pos:  # simple root g is sent to a negative root
                    dm |= 1 << g
            descent_mask[i] = dm

        self.size = size
        self.n_pos = n_pos
        self.keys = keys
        self.tables = tables
        self.index = index
        self.parent = parent
        self.gen_of = gen_of
        self.length = length
        self.rmult = rmult
        self.lmult = lmult
        self.inverse = inverse
        self.descent_mask = descent_mask
        self.by_length = sorted(range(size), key=lambda i: (length[i], i))
        self.one_line = self._build_one_line()

        longest = max(range(size), key=lambda i: length[i])
        if length[longest] != n_pos or descent_mask[longest] != (1 << rs.rank) - 1:
            raise RuntimeError("longest element is inconsistent")
        if sum(1 for i in range(size) if descent_mask[i] == 0) != 1:
            raise RuntimeError("identity descent set is not unique")
        self.longest_index = longest

    def _build_one_line(self):
        rs = self.root_system
        if rs.family == "A":
            n = rs.rank + 1
            flip = False
        elif rs.family == "B":
            n = rs.rank
            flip = True
        else:
            return None
        lines = [None] * self.size
        lines[0] = tuple(range(1, n + 1))
        for i in self.by_length:
            if i == 0:
                continue
            p, g = self.parent[i], self.gen_of[i]
            base = list(lines[p])
            if flip and g == rs.rank - 1:
                base[-1] = -base[-1]
            else:
                base[g], base[g + 1] = base[g + 1], base[g]
            lines[i] = tuple(base)
        return lines

    # -- elementary queries --------------------------------------------------

    @property
    def rank(self) -> int:
        return self.root_system.rank

    def multiply(self, i: int, j: int) -> int:
        """Index of the product w_i * w_j."""
        return self.index[self.keys[j].translate(self.tables[i])]

    def descent_set(self, i: int) -> FrozenSet[int]:
        dm = self.descent_mask[i]
        return frozenset(g for g in range(self.rank) if dm >> g & 1)

    def word(self, i: int) -> Tuple[int, ...]:
        out = []
        while i > 0:
            out.append(self.gen_of[i])
            i = self.parent[i]
        return tuple(reversed(out))

    def element_matrix(self, i: int) -> tuple:
        """Reflection-representation matrix (simple-root coordinates)."""
        cached = self._matrices.get(i)
        if cached is not None:
            return cached
        chain = []
        j = i
        while j not in self._matrices and j != 0:
            chain.append(j)
            j = self.parent[j]
        if 0 not in self._matrices:
            rs = self.root_system
            one = rs.cartan_like_matrix[0][0] / rs.cartan_like_matrix[0][0]
            zero = one * 0
            ident = tuple(
                tuple(one if a == b else zero for b in range(rs.rank)) for a in range(rs.rank)
            )
            self._matrices[0] = ident
        C = self.root_system.cartan_like_matrix
        for j in reversed(chain):
            m = self._matrices[self.parent[j]]
            g = self.gen_of[j]
            # right-multiply by s_g: column update via row g of the Cartan-like matrix
            self._matrices[j] = tuple(
                tuple(m[a][b] - m[a][g] * C[g][b] for b in range(len(m)))
                for a in range(len(m))
            )
        return self._matrices[i]

    def line_image_sets(self, mask_roots: Sequence[int]):
        """Yields (element, image of the given root-line set) for all elements."""
        n_pos = self.n_pos
        mb = bytes(mask_roots)
        line = bytes([x if x < n_pos else x - n_pos for x in range(2 * n_pos)]) + bytes(
            range(2 * n_pos, 256)
        )
        for i in range(self.size):
            yield i, frozenset(mb.translate(self.tables[i]).translate(line))

    # -- conjugacy classes ---------------------------------------------------

    def conjugacy_classes(self) -> List[ConjugacyClass]:
        if self._classes is not None:
            return self._classes
        cls_of = kernels.conjugacy_closure(self.rmult, self.lmult, self.rank)
        groups: Dict[int, List[int]] = {}
        for i, c in enumerate(cls_of):
            groups.setdefault(c, []).append(i)
        classes = []
        for c in sorted(groups, key=lambda c: min(groups[c])):
            members = tuple(sorted(groups[c]))
            rep = members[0]
            classes.append(ConjugacyClass(self._class_label(rep, len(classes)), members, rep))
        if sum(len(c.members) for c in classes) != self.size:
            raise RuntimeError("class sizes do not sum to the group order")
        self._classes = classes
        class_of = [0] * self.size
        for ci, c in enumerate(classes):
            for i in c.members:
                class_of[i] = ci
        self._class_of = class_of
        return classes

    def class_of(self, i: int) -> int:
        self.conjugacy_classes()
        return self._class_of[i]

    def _class_label(self, rep: int, opaque_idx: int) -> ClassLabel:
        fam = self.root_system.family
        if fam == "A":
            return ClassLabel("partition", cycle_type(self.one_line[rep]))
        if fam == "B":
            return ClassLabel("bipartition", signed_cycle_type(self.one_line[rep]))
        return ClassLabel("opaque", (opaque_idx,))

    # -- parabolic data --------------------------------------------------------

    def subgroup_elements(self, K: Iterable[int]) -> tuple:
        K = frozenset(K)
        cached = self._subgroups.get(K)
        if cached is not None:
            return cached
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for g in K:
                j = self.rmult[g][i]
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        out = tuple(sorted(seen))
        self._subgroups[K] = out
        return out

    def standard_parabolic_mask(self, K: Iterable[int]) -> int:
        """Bitmask of positive roots in the span of the simple roots in K."""
        K = tuple(sorted(K))
        if not K:
            return 0
        return kernels.span_mask(self.root_system.root_pairs, K)

    def parabolic_data(self, K: Iterable[int]) -> ParabolicData:
        K = frozenset(K)
        cached = self._parabolic.get(K)
        if cached is not None:
            return cached
        rs = self.root_system
        sub_order = len(self.subgroup_elements(K))
        rows = [rs.cartan_like_matrix[i] for i in sorted(K)]
        one = rs.cartan_like_matrix[0][0] / rs.cartan_like_matrix[0][0]
        fixed = nullspace(rows, rs.rank, one=one)

        mask = self.standard_parabolic_mask(K)
        base_set = frozenset(_bits(mask))
        std_sets = {
            frozenset(_bits(self.standard_parabolic_mask(J))): J
            for J in _all_subsets(rs.rank)
        }
        if not base_set:
            normalizer = self.size
            orbit = {frozenset()}
        else:
            orbit = set()
            normalizer = 0
            for _, img in self.line_image_sets(sorted(base_set)):
                if img == base_set:
                    normalizer += 1
                orbit.add(img)
        equivalent = sorted(
            (tuple(sorted(J)) for s, J in std_sets.items() if s in orbit),
            key=lambda t: (len(t), t),
        )
        data = ParabolicData(
            K=K,
            subgroup_order=sub_order,
            fixed_space=fixed,
            normalizer_order=normalizer,
            lambda_count=len(equivalent),
            conjugacy_rep=equivalent[0],
        )
        self._parabolic[K] = data
        return data

    def coset_minreps(self, K: Iterable[int]) -> list:
        """For each element, the minimal-length element of its coset w*W_K."""
        K = frozenset(K)
        cached = self._minreps.get(K)
        if cached is None:
            cached = kernels.coset_minreps(self.rmult, self.length, sorted(K), self.by_length)
            self._minreps[K] = cached
        return cached

    # -- exponents ---------------------------------------------------------------

    def length_generating_coeffs(self) -> List[int]:
        coeffs = [0] * (self.n_pos + 1)
        for l in self.length:
            coeffs[l] += 1
        return coeffs

    def exponents(self) -> Tuple[int, ...]:
        """Exponents, from factoring the length generating function as a
        product of truncated geometric series (iterated exact division)."""
        if self._exponents is not None:
            return self._exponents
        q = self.length_generating_coeffs()
        for _ in range(self.rank):  # multiply by (1-t)^rank
            q = [a - b for a, b in zip(q + [0], [0] + q)]
        degrees = []
        for _ in range(self.rank):
            d = next((i for i in range(1, len(q)) if q[i] != 0), None)
            if d is None:
                raise RuntimeError("length generating function does not factor")
            out = q[:]
            for i in range(d, len(q)):  # exact division by (1 - t^d)
                out[i] = q[i] + out[i - d]
            q = out
            while len(q) > 1 and q[-1] == 0:
                q.pop()
            degrees.append(d)
        if q != [1]:
            raise RuntimeError("length generating function does not factor")
        exps = tuple(sorted(d - 1 for d in degrees))
        order = 1
        for e in exps:
            order *= e + 1
        if order != self.size:
            raise RuntimeError("exponent product check failed")
        self._exponents = exps
        return exps


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _all_subsets(r: int):
    for m in range(1 << r):
        yield frozenset(_bits(m))


def cycle_type(one_line: Sequence[int]) -> tuple:
    """Cycle type of a permutation in one-line form over 1..n."""
    n = len(one_line)
    seen = [False] * (n + 1)
    parts = []
    for s in range(1, n + 1):
        if seen[s]:
            continue
        ln = 0
        j = s
        while not seen[j]:
            seen[j] = True
            j = one_line[j - 1]
            ln += 1
        parts.append(ln)
    return tuple(sorted(parts, reverse=True))


def signed_cycle_type(one_line: Sequence[int]) -> tuple:
    """(positive cycle lengths, negative cycle lengths) of a signed permutation."""
    n = len(one_line)
    seen = [False] * (n + 1)
    lam, mu = [], []
    for s in range(1, n + 1):
        if seen[s]:
            continue
        ln, sign, j = 0, 1, s
        while not seen[j]:
            seen[j] = True
            img = one_line[j - 1]
            if img < 0:
                sign = -sign
            j = abs(img)
            ln += 1
        (lam if sign > 0 else mu).append(ln)
    return (tuple(sorted(lam, reverse=True)), tuple(sorted(mu, reverse=True)))


def enumerate_group(rs: RootSystem) -> CoxeterGroup:
    """Breadth-first closure of the simple reflections."""
    return CoxeterGroup(rs)


def conjugacy_classes(g: CoxeterGroup) -> List[ConjugacyClass]:
    return g.conjugacy_classes()


def parabolic_data(g: CoxeterGroup, K: Iterable[int]) -> ParabolicData:
    return g.parabolic_data(K)


def exponents(g: CoxeterGroup) -> Tuple[int, ...]:
    return g.exponents()


_GROUPS: Dict[str, CoxeterGroup] = {}


def get_group(type_name: str) -> CoxeterGroup:
    """Process-wide registry of enumerated groups (built once, shared);
    also persisted to disk when COXSHUFFLE_CACHE is set."""
    key = type_name.strip().upper().replace(" ", "")
    g = _GROUPS.get(key)
    if g is None:
        from . import cache
        from .rootdata import parse_type

        g = cache.cached(f"group_{key}", lambda: CoxeterGroup(parse_type(type_name)))
        _GROUPS[key] = g
    return g
