"""The shuffling measures: three methods, walk oracle, convolution, spectrum."""

import itertools
from fractions import Fraction
from math import factorial

import pytest

from coxshuffle.group import get_group
from coxshuffle.measures import (
    ClassMeasure,
    WMeasure,
    bhr_step,
    binom,
    convolve,
    face_weights,
    h_measure,
    longshort_values,
    point_mass,
    pushforward_classes,
    sommers_identity_check,
    spectrum_check,
    transition_matrix,
    uniform_chamber_weights,
)
from coxshuffle.shuffling import exact_shuffle_law

SMALL_TYPES = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "G2",
               "I2(2)", "I2(5)", "I2(6)", "I2(10)", "D4"]


def test_a1_x2_against_shuffle_oracle():
    # oracle: brute-force enumeration of one 2-shuffle of 2 cards
    g = get_group("A1")
    law = exact_shuffle_law("gsr_a", 2, 2)
    m = h_measure(g, 2, "definition")
    assert m.value(0) == law[(1, 2)] == Fraction(3, 4)
    assert m.value(1) == law[(2, 1)] == Fraction(1, 4)


@pytest.mark.parametrize("t", SMALL_TYPES)
@pytest.mark.parametrize("x", [2, 3, Fraction(1, 2), -1])
def test_triple_agreement_small(t, x):
    g = get_group(t)
    md = h_measure(g, x, "definition")
    assert md == h_measure(g, x, "os_sign")
    if g.root_system.family in ("A", "B"):
        assert md == h_measure(g, x, "closed_form")


def test_closed_form_rejected_for_unsupported_families():
    with pytest.raises(ValueError):
        h_measure(get_group("G2"), 2, "closed_form")


def test_x_zero_rejected():
    with pytest.raises(ValueError):
        h_measure(get_group("A2"), 0)


def test_mass_on_longest_at_minus_one():
    for t in SMALL_TYPES + ["H3"]:
        g = get_group(t)
        m = h_measure(g, -1, "definition")
        assert m.value(g.longest_index) == 1


def test_normalization_worpitzky():
    # for family A the normalization is the classical power-sum identity
    for n, x in [(3, 2), (3, 5), (4, 3)]:
        total = sum(
            binom(
                x + n - 1 - sum(1 for i in range(n - 1) if p[i] > p[i + 1]), n
            )
            for p in itertools.permutations(range(1, n + 1))
        )
        assert total == Fraction(x) ** n


def test_descent_class_constancy():
    g = get_group("B3")
    m = h_measure(g, 3, "definition")
    by_descent = m.by_descent()
    for i in range(g.size):
        assert m.value(i) == by_descent[g.descent_set(i)]


def test_measure_sum_guard():
    g = get_group("A1")
    with pytest.raises(ValueError):
        WMeasure(g, None, [Fraction(1, 2), Fraction(1, 4)])


def test_longshort_examples():
    g = get_group("A2")
    w0v, idv = longshort_values(g, 2, h_measure(g, 2, "definition"))
    assert (w0v, idv) == (Fraction(0), Fraction(1, 2))
    g = get_group("B2")
    _, idv = longshort_values(g, 3, h_measure(g, 3, "definition"))
    assert idv == Fraction(24, 72)
    # at x = -1 the longest element carries everything, the identity nothing
    for t in SMALL_TYPES:
        g = get_group(t)
        w0v, idv = longshort_values(g, -1, h_measure(g, -1, "definition"))
        assert w0v == 1 and idv == 0


def test_longshort_assertion_fires_on_wrong_measure():
    g = get_group("A2")
    wrong = h_measure(g, 3, "definition")
    with pytest.raises(AssertionError):
        longshort_values(g, 2, wrong)


def brute_sommers_lhs(g, x):
    from coxshuffle.rootdata import affine_data

    ad = affine_data(g.root_system)
    total = 0
    for mask in range((1 << ad.extended_size) - 1):
        S = {i for i in range(ad.extended_size) if mask >> i & 1}
        coeffs = [ad.marks[i] for i in range(ad.extended_size) if i not in S]
        for ys in itertools.product(*[range(1, x + 1) for _ in coeffs]):
            if sum(c * y for c, y in zip(coeffs, ys)) == x:
                total += 1
    return total


def test_sommers_examples():
    r = sommers_identity_check(get_group("A1"), 5)
    assert r.lhs == 6 and r.rhs == Fraction(6) and r.passed
    assert brute_sommers_lhs(get_group("A1"), 5) == 6
    r = sommers_identity_check(get_group("A2"), 4)
    assert r.passed and r.lhs == brute_sommers_lhs(get_group("A2"), 4)
    r = sommers_identity_check(get_group("G2"), 5)
    assert r.passed


def test_sommers_hypothesis_gate():
    r = sommers_identity_check(get_group("B2"), 2)  # 2 divides a mark
    assert not r.hypothesis_ok and r.passed is None


def test_bhr_point_mass_on_full_type():
    g = get_group("B2")
    weights = {K: Fraction(0) for K in map(frozenset, _subsets(g.rank))}
    weights[frozenset(range(g.rank))] = Fraction(1)
    fw = face_weights(g, 2, "definition")
    fw.weights = weights
    m = bhr_step(g, fw)
    assert m.value(0) == 1  # the chamber closest to the identity is the identity


def test_bhr_uniform_chamber_weights():
    g = get_group("A2")
    m = bhr_step(g, uniform_chamber_weights(g))
    assert all(v == Fraction(1, g.size) for v in m.dense())


def test_bhr_rejects_unnormalized_weights():
    g = get_group("A2")
    fw = face_weights(g, 2, "definition")
    fw.weights = dict(fw.weights)
    fw.weights[frozenset()] = Fraction(1)
    with pytest.raises(ValueError):
        bhr_step(g, fw)


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "H3"])
@pytest.mark.parametrize("x", [2, 3])
def test_walk_oracle_small(t, x):
    g = get_group(t)
    assert bhr_step(g, face_weights(g, x, "definition")) == h_measure(g, x, "definition")


def _subsets(r):
    for m in range(1 << r):
        yield [i for i in range(r) if m >> i & 1]


def brute_transition_row(g, x, u):
    """Oracle: one walk row by direct minimization over every coset face."""
    dense = h_measure(g, x, "definition")  # only for the face weights below
    fw = face_weights(g, x, "definition")
    row = [Fraction(0)] * g.size
    for K, v in fw.weights.items():
        sub = g.subgroup_elements(K)
        seen = set()
        for c in range(g.size):
            if c in seen:
                continue
            coset = [g.multiply(c, h) for h in sub]
            seen.update(coset)
            landing = min(coset, key=lambda j: g.length[g.multiply(g.inverse[u], j)])
            row[landing] += v
    return row


def test_transition_matrix_examples():
    g = get_group("A1")
    M = transition_matrix(g, 2)
    assert M[0] == [Fraction(3, 4), Fraction(1, 4)]
    assert M[1] == [Fraction(1, 4), Fraction(3, 4)]
    assert spectrum_check(M, 2, 1)


def test_transition_rows_against_face_minimization():
    g = get_group("A2")
    M = transition_matrix(g, 2)
    for u in range(g.size):
        assert M[u] == brute_transition_row(g, 2, u)


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_spectrum_identity(t):
    g = get_group(t)
    M = transition_matrix(g, 2)
    assert all(sum(row) == 1 for row in M)
    assert spectrum_check(M, 2, g.rank)
    assert not spectrum_check(M, 2, 0)  # M is not the identity


def test_transition_matrix_size_guard():
    with pytest.raises(ValueError):
        transition_matrix(get_group("H4"), 2)


def test_convolution_identity_element():
    g = get_group("B2")
    m = h_measure(g, 3, "definition")
    assert convolve(m, point_mass(g, 0)) == m
    assert convolve(point_mass(g, 0), m) == m


def test_convolution_a1():
    g = get_group("A1")
    c = convolve(h_measure(g, 2), h_measure(g, 3))
    # oracle: the closed form at x = 6 gives C(7,2)/36 at the identity
    assert c.value(0) == Fraction(binom(7, 2), 36) == Fraction(7, 12)
    assert c == h_measure(g, 6)


@pytest.mark.parametrize("t", ["A2", "A3", "B2", "I2(5)", "I2(6)", "I2(10)"])
def test_convolution_property(t):
    g = get_group(t)
    assert convolve(h_measure(g, 2), h_measure(g, 3)) == h_measure(g, 6)


def test_convolution_fails_for_d4():
    # exploratory data point: the product measure stays constant on descent
    # classes but does not equal the x*y measure
    g = get_group("D4")
    prod = convolve(h_measure(g, 2), h_measure(g, 3))
    assert prod != h_measure(g, 6)
    prod.by_descent()  # still descent-class constant


def test_face_weights_methods_agree_per_type():
    # finer than measure equality: the two face-weight formulas agree K by K
    for t in ("A3", "B3", "G2", "I2(5)", "H3"):
        g = get_group(t)
        for x in (2, Fraction(1, 2), -1):
            fa = face_weights(g, x, "definition").weights
            fb = face_weights(g, x, "os_sign").weights
            assert fa == fb, (t, x)


def test_convolution_group_mismatch():
    with pytest.raises(ValueError):
        convolve(h_measure(get_group("A1"), 2), h_measure(get_group("A2"), 2))


def s3_class_masses(x):
    """Oracle: closed-form binomials and the descent statistics of S_3."""
    by_type = {}
    for p in itertools.permutations((1, 2, 3)):
        d = sum(1 for i in range(2) if p[i] > p[i + 1])
        mass = binom(x + 2 - d, 3) / x**3
        from coxshuffle.group import cycle_type

        key = cycle_type(p)
        by_type[key] = by_type.get(key, Fraction(0)) + mass
    return by_type


def test_pushforward_classes_a2_x7():
    g = get_group("A2")
    cm = pushforward_classes(h_measure(g, 7, "definition"))
    oracle = s3_class_masses(7)
    got = {k.data: v for k, v in cm.values.items()}
    assert got == oracle
    assert got[(1, 1, 1)] == Fraction(12, 49)
    assert got[(2, 1)] == Fraction(21, 49)
    assert got[(3,)] == Fraction(16, 49)


def test_pushforward_at_minus_one():
    g = get_group("B2")
    cm = pushforward_classes(h_measure(g, -1, "definition"))
    w0_class = g.conjugacy_classes()[g.class_of(g.longest_index)].label
    assert cm.nonzero() == {w0_class: Fraction(1)}


def test_pushforward_sums_to_one():
    cm = pushforward_classes(h_measure(get_group("B3"), 3, "definition"))
    assert sum(cm.values.values()) == 1


def test_nonnegativity_good_primes():
    grids = [("A1", [2, 3, 5, 7]), ("A3", [2, 3, 5, 7]), ("B2", [3, 5, 7]),
             ("B3", [3, 5, 7]), ("G2", [5, 7])]
    for t, xs in grids:
        g = get_group(t)
        for x in xs:
            assert face_weights(g, x, "definition").min_weight() >= 0, (t, x)
            assert h_measure(g, x, "definition").min_value() >= 0, (t, x)


def test_face_weights_total_is_one():
    for t in ("A2", "B3", "H3"):
        g = get_group(t)
        for x in (2, Fraction(1, 2), -1):
            assert face_weights(g, x, "definition").face_total() == 1


def test_i26_and_g2_give_same_measure_values():
    a = h_measure(get_group("I2(6)"), 5, "definition")
    b = h_measure(get_group("G2"), 5, "definition")
    assert sorted(a.dense()) == sorted(b.dense())


def test_h3_closed_form_shifts():
    # the four cases are products of (x+9)(x+5)(x+1) with shifts sliding down
    g = get_group("H3")
    x = Fraction(7)
    m = h_measure(g, x, "closed_form")
    assert m.value(0) == (x + 9) * (x + 5) * (x + 1) / (120 * x**3)
    assert m.value(g.longest_index) == (x - 1) * (x - 5) * (x - 9) / (120 * x**3)
