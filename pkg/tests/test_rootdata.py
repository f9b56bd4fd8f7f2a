"""Root systems, affine marks, and positive-solution counting."""

import itertools
from fractions import Fraction

import pytest

from coxshuffle.rootdata import (
    UnsupportedTypeError,
    affine_data,
    build_root_system,
    p_count,
    parse_type,
)


@pytest.mark.parametrize(
    "family,rank,n_pos,order",
    [
        ("A", 2, 3, 6),
        ("B", 2, 4, 8),
        ("A", 4, 10, 120),
        ("B", 4, 16, 384),
        ("D", 4, 12, 192),
        ("G2", 2, 6, 12),
        ("H3", 3, 15, 120),
        ("H4", 4, 60, 14400),
    ],
)
def test_build_examples(family, rank, n_pos, order):
    rs = build_root_system(family, rank)
    assert rs.n_positive == n_pos
    assert rs.group_order == order


def test_dihedral_parameters():
    for m in (2, 3, 4, 5, 6, 10):
        rs = build_root_system("I2", m)
        assert rs.n_positive == m and rs.group_order == 2 * m


@pytest.mark.parametrize("family,rank", [("A", 6), ("A", 0), ("B", 5), ("D", 3), ("E", 6)])
def test_unsupported_types(family, rank):
    with pytest.raises(UnsupportedTypeError):
        build_root_system(family, rank)


@pytest.mark.parametrize("m", [7, 8, 9, 11, 12, 13])
def test_unsupported_dihedral(m):
    # 2*cos(pi/m) lies outside Q and Q(phi) for 7, 8, 9, 11, 12
    with pytest.raises(UnsupportedTypeError):
        build_root_system("I2", m)


def test_positive_roots_are_nonnegative_combinations():
    for t in ("A3", "B3", "G2", "H3", "I2(5)"):
        rs = parse_type(t)
        for root in rs.positive_roots:
            assert rs.root_sign(root) == 1


def test_parse_type_round_trip():
    assert parse_type("I2(5)").m_param == 5
    assert parse_type("h3").family == "H3"
    assert parse_type("B3").rank == 3
    with pytest.raises(UnsupportedTypeError):
        parse_type("Z9")


def test_affine_marks_a1():
    ad = affine_data(parse_type("A1"))
    assert ad.marks == (1, 1)
    assert ad.index_of_connection == 2
    # the defining relation: highest root minus the marked combination is zero
    rs = ad.root_system
    combo = [sum(ad.marks[i] * rs.simple_roots[i][j] for i in range(rs.rank)) for j in range(rs.rank)]
    assert tuple(combo) == ad.highest_root


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_index_of_connection_type_a(n):
    ad = affine_data(build_root_system("A", n - 1))
    assert ad.index_of_connection == n


def test_affine_g2():
    ad = affine_data(parse_type("G2"))
    assert 3 in ad.marks
    assert ad.index_of_connection == 1
    # oracle: the Cartan determinant computed independently over Fractions
    C = [[Fraction(x) for x in row] for row in ad.root_system.cartan_like_matrix]
    det = C[0][0] * C[1][1] - C[0][1] * C[1][0]
    assert abs(det) == ad.index_of_connection


def test_affine_rejects_noncrystallographic():
    with pytest.raises(ValueError):
        affine_data(parse_type("H3"))
    with pytest.raises(ValueError):
        affine_data(parse_type("I2(5)"))


def brute_p_count(marks, S, x):
    """Oracle: exhaustive loop over bounded positive integer vectors."""
    coeffs = [marks[i] for i in range(len(marks)) if i not in S]
    count = 0
    ranges = [range(1, x // c + 1) for c in coeffs]
    for ys in itertools.product(*ranges):
        if sum(c * y for c, y in zip(coeffs, ys)) == x:
            count += 1
    return count


def test_p_count_examples():
    ad = affine_data(parse_type("A1"))
    assert p_count(ad, {0}, 5) == 1
    assert p_count(ad, set(), 5) == 4
    ad2 = affine_data(parse_type("A2"))
    assert p_count(ad2, set(), 4) == brute_p_count(ad2.marks, set(), 4) == 3


def test_p_count_matches_oracle_everywhere():
    for t in ("A2", "B2", "B3", "G2", "D4"):
        ad = affine_data(parse_type(t))
        ext = ad.extended_size
        for mask in range((1 << ext) - 1):
            S = {i for i in range(ext) if mask >> i & 1}
            for x in (1, 4, 5):
                assert p_count(ad, S, x) == brute_p_count(ad.marks, S, x)


def test_p_count_rejects_bad_subsets():
    ad = affine_data(parse_type("A1"))
    with pytest.raises(ValueError):
        p_count(ad, {0, 1}, 3)
    with pytest.raises(ValueError):
        p_count(ad, set(), 0)
