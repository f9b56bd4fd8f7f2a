"""Group enumeration: lengths, descents, classes, parabolics, exponents."""

import itertools
from collections import Counter
from fractions import Fraction

import pytest

from coxshuffle.group import cycle_type, get_group, signed_cycle_type
from coxshuffle.rootdata import parse_type


def inversions(perm):
    return sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )


def test_a2_enumeration_against_direct_s3():
    g = get_group("A2")
    assert g.size == 6
    # oracle: S_3 by direct permutation enumeration, lengths = inversions
    expected = sorted(inversions(p) for p in itertools.permutations((1, 2, 3)))
    assert sorted(g.length) == expected == [0, 1, 1, 2, 2, 3]
    assert sorted(g.one_line) == sorted(itertools.permutations((1, 2, 3)))


def test_b2_longest_element():
    g = get_group("B2")
    assert g.size == 8
    assert g.length[g.longest_index] == 4
    assert sum(1 for i in range(8) if g.length[i] == 4) == 1


def test_h3_descent_histogram():
    g = get_group("H3")
    hist = Counter(len(g.descent_set(i)) for i in range(g.size))
    assert hist[0] == 1 and hist[3] == 1 and sum(hist.values()) == 120


def test_descents_match_classical_type_a():
    for t in ("A1", "A2", "A3"):
        g = get_group(t)
        for i in range(g.size):
            line = g.one_line[i]
            classical = {j for j in range(len(line) - 1) if line[j] > line[j + 1]}
            assert g.descent_set(i) == frozenset(classical)


def lambda_order_descents(line):
    """Oracle: descents from the linear order +1 < ... < +n < -n < ... < -1,
    with the sentinel n+1 placed immediately above +n."""
    n = len(line)

    def key(v):
        if v == n + 1:
            return n + Fraction(1, 2)
        return v if v > 0 else 2 * n + 1 + v  # -n -> n+1, -1 -> 2n

    ext = list(line) + [n + 1]
    return frozenset(i for i in range(n) if key(ext[i]) > key(ext[i + 1]))


def test_descents_match_lambda_order_type_b():
    for t in ("B2", "B3", "B4"):
        g = get_group(t)
        for i in range(g.size):
            assert g.descent_set(i) == lambda_order_descents(g.one_line[i])


def test_one_line_composition_consistency():
    import random

    rng = random.Random(3)
    for t in ("A3", "B3"):
        g = get_group(t)
        for _ in range(50):
            i, j = rng.randrange(g.size), rng.randrange(g.size)
            k = g.multiply(i, j)
            a, b = g.one_line[i], g.one_line[j]
            composed = tuple(
                a[b[p] - 1] if b[p] > 0 else -a[-b[p] - 1] for p in range(len(a))
            )
            assert g.one_line[k] == composed


def brute_conjugacy_classes(g):
    """Oracle: orbit refinement using only multiply and inverse."""
    remaining = set(range(g.size))
    classes = []
    while remaining:
        seed = min(remaining)
        orbit = {g.multiply(g.multiply(u, seed), g.inverse[u]) for u in range(g.size)}
        classes.append(frozenset(orbit))
        remaining -= orbit
    return sorted(classes, key=min)


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "I2(5)"])
def test_conjugacy_classes_against_brute_force(t):
    g = get_group(t)
    ours = sorted((frozenset(c.members) for c in g.conjugacy_classes()), key=min)
    assert ours == brute_conjugacy_classes(g)


def test_a2_class_labels():
    g = get_group("A2")
    got = {c.label.data: len(c.members) for c in g.conjugacy_classes()}
    assert got == {(1, 1, 1): 1, (2, 1): 3, (3,): 2}


def test_b2_class_count_and_identity_label():
    g = get_group("B2")
    classes = g.conjugacy_classes()
    assert len(classes) == 5
    assert sum(len(c.members) for c in classes) == 8
    assert classes[g.class_of(0)].label.data == ((1, 1), ())


def test_signed_cycle_type_examples():
    assert signed_cycle_type((1, 2, 3)) == ((1, 1, 1), ())
    assert signed_cycle_type((-1, 2)) == ((1,), (1,))
    assert signed_cycle_type((2, -1)) == ((), (2,))
    assert cycle_type((2, 3, 1)) == (3,)


def brute_parabolic(g, K):
    """Oracle for normalizer order and equivalent-subset count, using only
    generic group operations (subgroup sets and conjugation)."""
    sub = set(g.subgroup_elements(K))
    norm = sum(
        1
        for w in range(g.size)
        if {g.multiply(g.multiply(w, h), g.inverse[w]) for h in sub} == sub
    )
    lam = 0
    for m in range(1 << g.rank):
        J = frozenset(i for i in range(g.rank) if m >> i & 1)
        subJ = set(g.subgroup_elements(J))
        if len(subJ) != len(sub):
            continue
        if any(
            {g.multiply(g.multiply(w, h), g.inverse[w]) for h in sub} == subJ
            for w in range(g.size)
        ):
            lam += 1
    return norm, lam


def test_parabolic_trivial_and_full():
    for t in ("A2", "B3", "H3"):
        g = get_group(t)
        pd = g.parabolic_data(frozenset())
        assert pd.subgroup_order == 1
        assert pd.fixed_space.dim == g.rank
        assert pd.normalizer_order == g.size
        assert pd.lambda_count == 1
        pd = g.parabolic_data(frozenset(range(g.rank)))
        assert pd.subgroup_order == g.size
        assert pd.fixed_space.dim == 0
        assert pd.lambda_count == 1


def test_parabolic_a2_singleton():
    g = get_group("A2")
    pd = g.parabolic_data(frozenset({0}))
    assert (pd.subgroup_order, pd.normalizer_order, pd.lambda_count) == (2, 2, 2)
    norm, lam = brute_parabolic(g, frozenset({0}))
    assert (norm, lam) == (2, 2)


@pytest.mark.parametrize("t", ["A3", "B2", "B3", "G2", "I2(5)"])
def test_parabolic_data_against_brute_force(t):
    g = get_group(t)
    for m in range(1 << g.rank):
        K = frozenset(i for i in range(g.rank) if m >> i & 1)
        pd = g.parabolic_data(K)
        norm, lam = brute_parabolic(g, K)
        assert pd.normalizer_order == norm, (t, sorted(K))
        assert pd.lambda_count == lam, (t, sorted(K))
        assert pd.subgroup_order % 1 == 0 and g.size % pd.subgroup_order == 0
        assert pd.normalizer_order % pd.subgroup_order == 0


def test_lambda_counts_sum():
    # every subset of the base is equivalent to exactly one representative
    for t in ("A3", "B3", "H3"):
        g = get_group(t)
        reps = {}
        for m in range(1 << g.rank):
            K = frozenset(i for i in range(g.rank) if m >> i & 1)
            pd = g.parabolic_data(K)
            reps.setdefault(pd.conjugacy_rep, pd.lambda_count)
        assert sum(reps.values()) == 2**g.rank


def test_index_over_normalizer_integrality():
    for t in ("A3", "B3", "G2"):
        g = get_group(t)
        seen = {}
        for m in range(1 << g.rank):
            K = frozenset(i for i in range(g.rank) if m >> i & 1)
            pd = g.parabolic_data(K)
            total = seen.setdefault(pd.conjugacy_rep, Fraction(0))
            seen[pd.conjugacy_rep] = total + Fraction(g.size, pd.normalizer_order) / pd.lambda_count
        for rep, total in seen.items():
            assert total.denominator == 1


@pytest.mark.parametrize(
    "t,exps",
    [("A2", (1, 2)), ("A3", (1, 2, 3)), ("B3", (1, 3, 5)), ("G2", (1, 5)),
     ("H3", (1, 5, 9)), ("D4", (1, 3, 3, 5)), ("I2(5)", (1, 4))],
)
def test_exponents(t, exps):
    g = get_group(t)
    assert g.exponents() == exps
    prod = 1
    for m in exps:
        prod *= m + 1
    assert prod == g.size


def test_exponents_h4():
    g = get_group("H4")
    assert g.exponents() == (1, 11, 19, 29)


def test_descent_complement_when_longest_is_minus_identity():
    for t in ("A1", "B2", "B3", "G2", "I2(2)", "I2(4)", "I2(6)", "D4", "H3", "H4"):
        g = get_group(t)
        w0 = g.longest_index
        mat = g.element_matrix(w0)
        r = g.rank
        is_minus_id = all(
            mat[i][j] == (-1 if i == j else 0) for i in range(r) for j in range(r)
        )
        assert is_minus_id, t
        full = frozenset(range(r))
        for i in range(g.size):
            assert g.descent_set(g.multiply(i, w0)) == full - g.descent_set(i)


def test_matrices_multiply():
    import random

    from coxshuffle.linalg import mat_mul

    rng = random.Random(11)
    for t in ("B2", "H3"):
        g = get_group(t)
        for _ in range(20):
            i, j = rng.randrange(g.size), rng.randrange(g.size)
            assert g.element_matrix(g.multiply(i, j)) == tuple(
                mat_mul(g.element_matrix(i), g.element_matrix(j))
            )


def test_word_reconstruction():
    g = get_group("B3")
    for i in (0, 5, g.longest_index):
        w = g.word(i)
        acc = 0
        for s in w:
            acc = g.rmult[s][acc]
        assert acc == i
        assert len(w) == g.length[i]


def test_coset_minreps_definitions():
    g = get_group("B3")
    for K in (frozenset(), frozenset({0}), frozenset({0, 2}), frozenset({0, 1, 2})):
        reps = g.coset_minreps(K)
        sub = g.subgroup_elements(K)
        for i in range(g.size):
            coset = {g.multiply(i, u) for u in sub}
            best = min(coset, key=lambda j: g.length[j])
            assert reps[i] == best
