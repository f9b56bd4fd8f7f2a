"""The compiled kernels and their pure-Python twins must agree exactly."""

import itertools

import pytest

from coxshuffle import _kernels_py
from coxshuffle._accel import BACKEND, kernels
from coxshuffle.group import get_group
from coxshuffle.measures import get_lattice
from coxshuffle.rootdata import parse_type

try:
    from coxshuffle import _kernels as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="extension not built")


def test_backend_reported():
    assert BACKEND in ("compiled", "pure-python", "pure-python (forced)")
    assert kernels is not None


@needs_compiled
@pytest.mark.parametrize("t", ["A3", "B3", "G2", "I2(5)", "H3", "D4", "I2(10)", "H4"])
def test_span_mask_equivalence(t):
    rs = parse_type(t)
    n = rs.n_positive
    for k in (1, 2, 3):
        if k > rs.rank:
            break
        for basis in itertools.islice(itertools.combinations(range(n), k), 80):
            assert compiled.span_mask(rs.root_pairs, basis) == _kernels_py.span_mask(
                rs.root_pairs, basis
            )


@needs_compiled
@pytest.mark.parametrize("t", ["B3", "H3"])
def test_moebius_equivalence(t):
    lat = get_lattice(get_group(t))
    for bottom in range(0, len(lat), max(1, len(lat) // 7)):
        a = compiled.moebius_from_bottom(lat.masks, lat.ranks, bottom)
        b = _kernels_py.moebius_from_bottom(lat.masks, lat.ranks, bottom)
        assert a[0] == b[0] and list(a[1]) == list(b[1])


@needs_compiled
@pytest.mark.parametrize("t", ["B3", "H3"])
def test_coset_minreps_equivalence(t):
    g = get_group(t)
    for m in range(1 << g.rank):
        K = sorted(i for i in range(g.rank) if m >> i & 1)
        a = compiled.coset_minreps(g.rmult, g.length, K, g.by_length)
        b = _kernels_py.coset_minreps(g.rmult, g.length, K, g.by_length)
        assert list(a) == list(b)


@needs_compiled
@pytest.mark.parametrize("t", ["B3", "H3", "D4"])
def test_conjugacy_closure_equivalence(t):
    g = get_group(t)
    a = compiled.conjugacy_closure(g.rmult, g.lmult, g.rank)
    b = _kernels_py.conjugacy_closure(g.rmult, g.lmult, g.rank)
    assert list(a) == list(b)


@needs_compiled
def test_span_mask_dependent_basis():
    rs = parse_type("A3")
    # dependent triples must be handled identically by both implementations
    for basis in itertools.combinations(range(rs.n_positive), 3):
        assert compiled.span_mask(rs.root_pairs, basis) == _kernels_py.span_mask(
            rs.root_pairs, basis
        )


def test_pure_kernels_power_a_full_pipeline(monkeypatch):
    # the fallback must be able to run the measure pipeline on its own
    import coxshuffle.lattice as lattice_mod

    monkeypatch.setattr(lattice_mod, "kernels", _kernels_py)
    lat = lattice_mod.build_lattice(parse_type("B3"))
    assert len(lat) == 24
    chi = lat.char_poly(lat.bottom_id())
    assert chi.coefficients == (-15, 23, -9, 1)  # (x-1)(x-3)(x-5)
