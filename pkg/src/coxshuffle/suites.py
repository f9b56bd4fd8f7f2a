"""Verification suites: every identity the library computes, re-checked
end to end with exact arithmetic and machine-readable reports.

The registry is data-driven: each suite reads its parameter grid from
DEFAULT_PARAMS, and any grid entry can be overridden from the CLI without
code changes (e.g. ``verify convolution --type D4`` explores a type the
default grid leaves out).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Dict, Optional

from .gfpoly import FqContext, monic_polys
from .group import get_group
from .measures import (
    bhr_step,
    convolve,
    face_weights,
    h_measure,
    longshort_values,
    pushforward_classes,
    sommers_identity_check,
    spectrum_check,
    transition_matrix,
)
from .necklaces import (
    count_signed_ornaments,
    cycles_string,
    descent_count,
    enumerate_signed_ornaments,
    gessel_reutenauer,
    refine_phi_A,
    s_vector_count,
)
from .orbits import (
    identity_class_count,
    identity_class_prediction,
    orbit_class_distribution,
    orbit_family,
    split_census_constant_one,
)
from .report import Report, exact_str
from .shuffling import empirical_law, tv_distance

ALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "G2", "I2(5)", "I2(6)", "H3", "H4"]

DEFAULT_PARAMS: Dict[str, dict] = {
    "triple_agreement": {"types": ALL_TYPES, "xs": [2, 3, 5, 7, -1, Fraction(1, 2)]},
    "longshort": {"types": ALL_TYPES, "xs": [2, 3, 7, -1]},
    "sommers": {
        "grid": [("A1", 2), ("A1", 3), ("A2", 2), ("A2", 5), ("A3", 2), ("A3", 5),
                 ("B2", 3), ("B2", 5), ("B3", 3), ("B3", 5), ("G2", 5), ("G2", 7)]
    },
    "convolution": {
        "types": ["A1", "A2", "A3", "A4", "B2", "B3", "I2(2)", "I2(3)", "I2(4)",
                  "I2(5)", "I2(6)", "H3"],
        "x": 2, "y": 3,
    },
    "h4_counterexample": {"x": 2},
    "spectrum": {"types": ["A2", "B2", "G2"], "x": 2},
    "walk_oracle": {"types": ALL_TYPES, "xs": [2, 3]},
    "nonnegativity": {
        "grid": [("A1", [2, 3, 5, 7]), ("A2", [2, 3, 5, 7]), ("A3", [2, 3, 5, 7]),
                 ("A4", [2, 3, 5, 7]), ("B2", [3, 5, 7]), ("B3", [3, 5, 7]),
                 ("G2", [5, 7])]
    },
    "problem1_A": {"grid": [(2, 5), (2, 7), (3, 5), (3, 7), (4, 5), (4, 7)]},
    "problem1_B": {"grid": [(2, 3), (2, 5), (3, 3), (3, 5)]},
    "sl35_counterexample": {"n": 3, "q": 5},
    "gr_census": {"grid": [(5, 3, "normal_basis"), (3, 2, "normal_basis"),
                           (3, 3, "normal_basis"), (3, 4, "normal_basis"),
                           (5, 3, "golomb"), (3, 4, "golomb")]},
    "reiner_counts": {"grid": [(n, q) for n in (1, 2, 3, 4) for q in (3, 5, 7)]},
    "ornament_counts": {"grid": [(n, q) for n in (1, 2, 3, 4) for q in (3, 5, 7)]},
    "sampler_tv": {"count": 100000, "seed": 7, "tolerance": Fraction(1, 50)},
}


def run_suite(name: str, params: Optional[dict] = None) -> Report:
    """Run one suite with defaults merged under the given overrides."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    merged = dict(DEFAULT_PARAMS.get(name, {}))
    for k, v in (params or {}).items():
        if v is not None:
            merged[k] = v
    return SUITES[name](merged).finish()


# -- measure suites ----------------------------------------------------------


def _suite_triple_agreement(p: dict) -> Report:
    rep = Report("triple_agreement", p)
    for t in p["types"]:
        g = get_group(t)
        fam = g.root_system.family
        for x in p["xs"]:
            md = h_measure(g, x, "definition")
            mo = h_measure(g, x, "os_sign")
            rep.add(
                f"{t} x={exact_str(Fraction(x))}: definition vs os_sign",
                "equal", "equal" if md == mo else "different", "independent-methods",
            )
            if fam in ("A", "B", "H3", "H4"):
                mc = h_measure(g, x, "closed_form")
                rep.add(
                    f"{t} x={exact_str(Fraction(x))}: definition vs closed form",
                    "equal", "equal" if md == mc else "different", "closed-form-table",
                )
    return rep


def _suite_longshort(p: dict) -> Report:
    rep = Report("longshort", p)
    for t in p["types"]:
        g = get_group(t)
        for x in p["xs"]:
            m = h_measure(g, x, "definition")
            w0v, idv = longshort_values(g, x)
            rep.add(f"{t} x={x}: measure at longest element", w0v,
                    m.value(g.longest_index), "product-formula")
            rep.add(f"{t} x={x}: measure at identity", idv, m.value(0), "product-formula")
    return rep


def _suite_sommers(p: dict) -> Report:
    rep = Report("sommers", p)
    for t, x in p["grid"]:
        r = sommers_identity_check(get_group(t), x)
        if not r.hypothesis_ok:
            rep.add(f"{t} x={x}: hypothesis (x coprime to marks)", "coprime",
                    f"marks {r.marks} share a factor with {x}", "gate", passed=False)
            continue
        rep.add(f"{t} x={x}: sum of p(S,x) over proper subsets", r.rhs,
                Fraction(r.lhs), "counting-identity")
    return rep


def _suite_convolution(p: dict) -> Report:
    rep = Report("convolution", p)
    x, y = p["x"], p["y"]
    for t in p["types"]:
        g = get_group(t)
        prod = convolve(h_measure(g, x, "definition"), h_measure(g, y, "definition"))
        target = h_measure(g, x * y, "definition")
        rep.add(f"{t}: H_{x} * H_{y} vs H_{x*y}", "equal",
                "equal" if prod == target else "different", "group-algebra")
    return rep


def _suite_h4_counterexample(p: dict) -> Report:
    rep = Report("h4_counterexample", p)
    x = p["x"]
    g = get_group("H4")
    special = frozenset({2, 3})
    w = next(i for i in range(g.size) if g.descent_set(i) == special)
    ww0 = g.multiply(w, g.longest_index)
    rep.add(
        "descent set of w*w0 is complementary",
        sorted(frozenset(range(4)) - special), sorted(g.descent_set(ww0)), "group-structure",
    )
    m = h_measure(g, -x, "closed_form")
    a, b = m.value(w), m.value(ww0)
    rep.add(
        f"H(-{x}) separates w (descents {{3,4}}) from w*w0",
        "different values", "different values" if a != b else f"both {exact_str(a)}",
        "closed-form-table", passed=(a != b),
    )
    rep.add("value at w", exact_str(a), exact_str(a), "closed-form-table")
    rep.add("value at w*w0", exact_str(b), exact_str(b), "closed-form-table")
    return rep


def _suite_spectrum(p: dict) -> Report:
    rep = Report("spectrum", p)
    x = p["x"]
    for t in p["types"]:
        g = get_group(t)
        M = transition_matrix(g, x)
        rep.add(f"{t} x={x}: rows sum to 1", "stochastic",
                "stochastic" if all(sum(r) == 1 for r in M) else "defective", "identity")
        rep.add(f"{t} x={x}: product of (M - x^-i I) for i = 0..rank", "zero matrix",
                "zero matrix" if spectrum_check(M, x, g.rank) else "nonzero",
                "minimal-polynomial")
    return rep


def _suite_walk_oracle(p: dict) -> Report:
    rep = Report("walk_oracle", p)
    for t in p["types"]:
        g = get_group(t)
        for x in p["xs"]:
            fw = face_weights(g, x, "definition")
            walked = bhr_step(g, fw)
            rep.add(f"{t} x={x}: one walk step vs measure", "equal",
                    "equal" if walked == h_measure(g, x, "definition") else "different",
                    "coset-minima")
    return rep


def _suite_nonnegativity(p: dict) -> Report:
    rep = Report("nonnegativity", p)
    for t, xs in p["grid"]:
        g = get_group(t)
        for x in xs:
            fw = face_weights(g, x, "definition")
            m = h_measure(g, x, "definition")
            ok = fw.min_weight() >= 0 and m.min_value() >= 0
            rep.add(f"{t} x={x}: face weights and measure nonnegative",
                    "nonnegative", "nonnegative" if ok else "negative value found",
                    "good-prime-claim")
    return rep


# -- orbit suites ---------------------------------------------------------------


def _suite_problem1(tag: str, p: dict) -> Report:
    rep = Report(f"problem1_{tag}", p)
    for n, q in p["grid"]:
        fam = orbit_family(tag, n, q)
        dist = orbit_class_distribution(fam)
        group_type = f"A{n - 1}" if tag == "A" else f"B{n}"
        g = get_group(group_type)
        push = pushforward_classes(h_measure(g, q, "definition"))
        # one row per class: orbit count vs q^rank * measure mass
        labels = sorted(set(dist.nonzero()) | set(push.nonzero()),
                        key=lambda k: k.sort_key())
        total = fam.orbit_count
        for label in labels:
            orbit_count = dist.values.get(label, Fraction(0)) * total
            mass_scaled = push.values.get(label, Fraction(0)) * total
            rep.add(
                f"{tag} n={n} q={q} class {label}: orbit count vs q^r * measure mass",
                mass_scaled, orbit_count, "exhaustive",
            )
        count = identity_class_count(fam)
        pred = identity_class_prediction(fam)
        rep.add(f"{tag} n={n} q={q}: identity-class orbit count", pred,
                Fraction(count), "product-formula")
    if tag == "A" and (3, 7) in [tuple(e) for e in p["grid"]]:
        fam = orbit_family("A", 3, 7)
        dist = orbit_class_distribution(fam)
        spot = {str(k): str(v) for k, v in dist.sorted_items()}
        rep.add("spot values for (3,7)",
                "{(1,1,1): 12/49, (2,1): 3/7, (3): 16/49}",
                "{" + ", ".join(f"{k}: {v}" for k, v in sorted(spot.items())) + "}",
                "exhaustive")
    return rep


def _suite_sl35(p: dict) -> Report:
    rep = Report("sl35_counterexample", p)
    census, prediction = split_census_constant_one(p["n"], p["q"])
    rep.add("census of split monics with constant term 1", 5, census, "exhaustive")
    rep.add("orbit-side prediction", 7, int(prediction), "product-formula")
    rep.add("mismatch is expected", "census != prediction",
            "census != prediction" if census != prediction else "equal",
            "counterexample", passed=(census != prediction))
    return rep


# -- bijection suites -------------------------------------------------------------


def _binom_int(x: int, n: int) -> int:
    num = 1
    for j in range(n):
        num *= x - j
    from math import factorial

    v = Fraction(num, factorial(n))
    assert v.denominator == 1
    return int(v)


def _suite_gr_census(p: dict) -> Report:
    rep = Report("gr_census", p)
    one, cyc = gessel_reutenauer([(1, 2), (1, 2), (2,), (2, 3), (2, 3, 2, 3, 3)])
    rep.add("worked multiset example", "(1 3)(2 4)(5)(6 9)(7 11 8 12 10)",
            cycles_string(cyc), "worked-example")
    for q, n, mode in p["grid"]:
        ctx = FqContext.get(q)
        counts: Dict[tuple, int] = {}
        for f in monic_polys(ctx, n):
            w, _ = refine_phi_A(f, mode)
            counts[w] = counts.get(w, 0) + 1
        bad = []
        for w in itertools.permutations(range(1, n + 1)):
            expect = _binom_int(q + n - 1 - descent_count(w), n)
            if counts.get(tuple(w), 0) != expect:
                bad.append(w)
        rep.add(f"p={q} n={n} {mode}: per-element counts C(p+n-1-d(w), n)",
                "all match", "all match" if not bad else f"mismatch at {bad[:3]}",
                "exhaustive")
        rep.add(f"p={q} n={n} {mode}: total count", q**n, sum(counts.values()),
                "exhaustive")
    return rep


def _suite_reiner_counts(p: dict) -> Report:
    rep = Report("reiner_counts", p)
    for n, q in p["grid"]:
        g = get_group(f"B{n}") if n >= 2 else None
        if n == 1:
            # rank-1 hyperoctahedral group: two elements, d(id) = 0, d(s) = 1
            total = _binom_int((q - 1) // 2 + 1, 1) + _binom_int((q - 1) // 2, 1)
        else:
            total = sum(s_vector_count(g, i, q) for i in range(g.size))
        rep.add(f"n={n} q={q}: sum over the group of s-vector counts", q**n, total,
                "bijection-cardinality")
        if n >= 2:
            by_type: Dict[tuple, int] = {}
            for i in range(g.size):
                label = g.conjugacy_classes()[g.class_of(i)].label
                by_type[label.data] = by_type.get(label.data, 0) + s_vector_count(g, i, q)
            orn_by_type: Dict[tuple, int] = {}
            for o in enumerate_signed_ornaments(n, q):
                tp = o.type_pair()
                orn_by_type[tp] = orn_by_type.get(tp, 0) + 1
            ok = all(by_type.get(tp, 0) == c for tp, c in orn_by_type.items()) and all(
                orn_by_type.get(tp, 0) == c for tp, c in by_type.items()
            )
            rep.add(f"n={n} q={q}: per-type s-vector counts vs ornament counts",
                    "equal", "equal" if ok else "different", "bijection-type")
    return rep


def _suite_ornament_counts(p: dict) -> Report:
    rep = Report("ornament_counts", p)
    for n, q in p["grid"]:
        c = count_signed_ornaments(n, q)
        rep.add(f"n={n} q={q}: number of signed ornaments", q**n, c, "exhaustive")
    return rep


def _suite_sampler_tv(p: dict) -> Report:
    rep = Report("sampler_tv", p)
    count, seed, tol = p["count"], p["seed"], Fraction(p["tolerance"])
    for model, n, x, t in [("gsr_a", 4, 2, "A3"), ("typeB_flip", 3, 3, "B3")]:
        g = get_group(t)
        exact = {g.one_line[i]: v for i, v in enumerate(h_measure(g, x, "closed_form").dense())}
        emp = empirical_law(model, n, x, count, seed)
        tv = tv_distance(emp, exact)
        rep.add(
            f"{model} n={n} x={x}: TV(empirical {count} samples, exact law) <= {exact_str(tol)}",
            f"<= {exact_str(tol)}", exact_str(tv), "statistical", passed=(tv <= tol),
        )
    return rep


SUITES: Dict[str, Callable[[dict], Report]] = {
    "triple_agreement": _suite_triple_agreement,
    "longshort": _suite_longshort,
    "sommers": _suite_sommers,
    "convolution": _suite_convolution,
    "h4_counterexample": _suite_h4_counterexample,
    "spectrum": _suite_spectrum,
    "walk_oracle": _suite_walk_oracle,
    "nonnegativity": _suite_nonnegativity,
    "problem1_A": lambda p: _suite_problem1("A", p),
    "problem1_B": lambda p: _suite_problem1("B", p),
    "sl35_counterexample": _suite_sl35,
    "gr_census": _suite_gr_census,
    "reiner_counts": _suite_reiner_counts,
    "ornament_counts": _suite_ornament_counts,
    "sampler_tv": _suite_sampler_tv,
}
