"""Finite fields and polynomial factorization."""

import itertools

import pytest

from coxshuffle.gfpoly import (
    FqContext,
    FqPoly,
    factor,
    irreducibles,
    is_irreducible,
    is_prime,
    monic_polys,
    necklace_irreducible_count,
)


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_factor_split_example():
    c5 = FqContext.get(5)
    f = FqPoly.from_ints(c5, [0, -1, 0, 1])  # z^3 - z = z(z-1)(z+1)
    fac = factor(f)
    assert fac.degree_partition() == (1, 1, 1)
    assert {str(g) for g, k in fac} == {"z", "z+1", "z+4"}
    assert all(k == 1 for _, k in fac)


def test_factor_irreducible_cubic_f2():
    c2 = FqContext.get(2)
    f = FqPoly.from_ints(c2, [1, 1, 0, 1])  # z^3 + z + 1
    # oracle: no roots in F_2 and no monic degree-1 divisor
    assert f.eval(0) != 0 and f.eval(1) != 0
    fac = factor(f)
    assert len(fac) == 1 and fac.pairs[0][1] == 1
    assert is_irreducible(f)


def test_factor_f3_quartic():
    c3 = FqContext.get(3)
    f = FqPoly.from_ints(c3, [0, 0, 1, 0, 1])  # z^4 + z^2 = z^2 (z^2+1)
    fac = factor(f)
    got = {(str(g), k) for g, k in fac}
    assert got == {("z", 2), ("z^2+1", 1)}
    # -1 is not a square mod 3, so z^2+1 is irreducible
    assert all(pow(a, 2, 3) != 2 for a in range(3))


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_irreducible_counts_necklace_formula(q):
    ctx = FqContext.get(q)
    for m in range(1, 7):
        if q**m > 10**6:
            break
        assert len(irreducibles(ctx, m)) == necklace_irreducible_count(q, m)


@pytest.mark.parametrize("q,d", [(2, 4), (3, 3), (5, 2)])
def test_factor_recombines_exhaustively(q, d):
    ctx = FqContext.get(q)
    for f in monic_polys(ctx, d):
        fac = factor(f)
        assert fac.product(ctx) == f
        for g, _ in fac:
            assert is_irreducible(g)


def test_factor_rejects_nonmonic():
    c3 = FqContext.get(3)
    with pytest.raises(ValueError):
        factor(FqPoly.from_ints(c3, [1, 2]))


def test_extension_field_axioms():
    f9 = FqContext.get(3, 2)
    els = list(f9.elements())
    assert len(els) == 9
    one, zero = f9.one, f9.zero
    for a in els:
        assert f9.add(a, zero) == a
        assert f9.mul(a, one) == a
        if a != zero:
            assert f9.mul(a, f9.inv(a)) == one
    import random

    rng = random.Random(1)
    for _ in range(60):
        a, b, c = (els[rng.randrange(9)] for _ in range(3))
        assert f9.mul(a, f9.mul(b, c)) == f9.mul(f9.mul(a, b), c)
        assert f9.mul(a, f9.add(b, c)) == f9.add(f9.mul(a, b), f9.mul(a, c))


def test_generator_and_dlog():
    for p, e in [(3, 2), (2, 3), (5, 2), (7, 1)]:
        ctx = FqContext.get(p, e)
        gen = ctx.generator()
        assert ctx.is_generator(gen)
        seen = set()
        cur = ctx.one
        for _ in range(ctx.order - 1):
            seen.add(cur)
            cur = ctx.mul(cur, gen)
        assert len(seen) == ctx.order - 1
        for k in (0, 1, ctx.order - 2):
            assert ctx.dlog(ctx.pow(gen, k)) == k


def test_custom_modulus_validation():
    # a user-supplied modulus must be monic, degree e, and irreducible
    ctx = FqContext(3, 2, modulus=(1, 0, 1))  # z^2 + 1 is irreducible mod 3
    assert ctx.order == 9
    assert ctx.mul((0, 1), (0, 1)) == (2, 0)  # z^2 = -1
    with pytest.raises(ValueError):
        FqContext(3, 2, modulus=(2, 0, 1))  # z^2 + 2 = (z-1)(z+1)
    with pytest.raises(ValueError):
        FqContext(3, 2, modulus=(1, 0, 0, 1))  # wrong degree
    with pytest.raises(ValueError):
        FqContext(4, 1)  # not prime


def test_frobenius_fixes_prime_field():
    f8 = FqContext.get(2, 3)
    for a in f8.elements():
        assert f8.pow(a, 8) == a  # x^q = x on the whole field


def test_even_function_detection():
    c3 = FqContext.get(3)
    assert FqPoly.from_ints(c3, [1, 0, 1]).is_even_function()
    assert not FqPoly.from_ints(c3, [0, 1, 1]).is_even_function()
    f = FqPoly.from_ints(c3, [0, 1])  # z
    assert f.conjugate_monic() == f


def test_poly_str_and_order():
    c5 = FqContext.get(5)
    f = FqPoly.from_ints(c5, [1, 0, 3, 1])
    assert str(f) == "z^3+3z^2+1"
    g = FqPoly.from_ints(c5, [0, 1])
    assert g < f
