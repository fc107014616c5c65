import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from altspectra.cheeger import (
    boundary_size,
    brute_force_h,
    canonical_boundary,
    canonical_cut,
    cheeger_bounds,
    corollary_bounds,
    cut_ratio,
)
from altspectra.errors import OrderCapError
from altspectra.spectra import dense_spectrum


def _boundary_via_edge_filter(G, S):
    inside = set(int(v) for v in np.asarray(S).ravel())
    return sum(1 for u, v in G.edges_array() if (int(u) in inside) != (int(v) in inside))


def test_boundary_sizes_of_canonical_cuts(graph):
    assert boundary_size(graph("AG", 4), canonical_cut("AG", 4, 1)) == 6
    assert boundary_size(graph("EAG", 4), canonical_cut("EAG", 4, 1)) == 12
    assert boundary_size(graph("CAG", 4), canonical_cut("CAG", 4, 1)) == 18


@pytest.mark.parametrize("family", ["AG", "EAG", "CAG"])
@pytest.mark.parametrize("n", [4, 5])
def test_boundary_matches_formula_and_edge_filter(graph, family, n):
    G = graph(family, n)
    S = canonical_cut(family, n, 1)
    b = boundary_size(G, S)
    assert b == canonical_boundary(family, n)
    assert b == _boundary_via_edge_filter(G, S)


def test_boundary_is_symmetric_under_complement(graph):
    G = graph("EAG", 4)
    rng = random.Random(5)
    for _ in range(10):
        size = rng.randrange(1, G.order)
        S = rng.sample(range(G.order), size)
        comp = sorted(set(range(G.order)) - set(S))
        assert boundary_size(G, S) == boundary_size(G, comp)


def test_boundary_rejects_improper_subsets(graph):
    G = graph("AG", 4)
    with pytest.raises(ValueError):
        boundary_size(G, [])
    with pytest.raises(ValueError):
        boundary_size(G, list(range(12)))


@pytest.mark.parametrize(
    "family,expected",
    [("AG", lambda n: 2), ("EAG", lambda n: 2 * n - 4), ("CAG", lambda n: n * n - 3 * n + 2)],
)
@pytest.mark.parametrize("n", [4, 5])
def test_canonical_cut_ratios(graph, family, expected, n):
    G = graph(family, n)
    report = cut_ratio(G, canonical_cut(family, n, 1), description="canonical")
    assert report.ratio == Fraction(expected(n))


def test_cheeger_bounds_values():
    lower, upper = cheeger_bounds(2, 4)
    assert lower == 1.0
    assert upper == pytest.approx(12 ** 0.5)
    assert cheeger_bounds(0, 5) == (0.0, 0.0)
    lower, upper = cheeger_bounds(2 * 5 - 3, (5 - 1) * (5 - 2))
    assert (lower, upper) == (3.5, pytest.approx((7 * 17) ** 0.5))
    with pytest.raises(ValueError):
        cheeger_bounds(-1, 4)
    with pytest.raises(ValueError):
        cheeger_bounds(9, 4)


def test_brute_force_K3(graph):
    h, witness = brute_force_h(graph("AG", 3))
    assert h == Fraction(2)
    assert witness == (0,)


def test_brute_force_K2():
    from altspectra.cayley import Graph

    K2 = Graph(offsets=np.array([0, 1, 2]), neighbors=np.array([1, 0], dtype=np.int32))
    h, witness = brute_force_h(K2)
    assert h == Fraction(1)
    assert witness == (0,)


def test_brute_force_AG4_frozen_value(graph):
    # Exhaustion over the 2^11 - 1 proper splits; value pinned from the
    # independent enumeration below.
    h, witness = brute_force_h(graph("AG", 4))
    assert h == Fraction(4, 3)
    assert witness == (0, 1, 3, 5, 7, 9)
    assert Fraction(1) <= h <= Fraction(2)


def test_brute_force_matches_plain_enumeration(graph):
    G = graph("AG", 4)
    edges = [tuple(map(int, e)) for e in G.edges_array()]
    best = None
    for size in range(1, G.order // 2 + 1):
        for S in combinations(range(G.order), size):
            inside = set(S)
            bnd = sum(1 for u, v in edges if (u in inside) != (v in inside))
            r = Fraction(bnd, min(size, G.order - size))
            if best is None or r < best:
                best = r
    assert brute_force_h(G)[0] == best


def test_brute_force_cap(graph):
    with pytest.raises(OrderCapError):
        brute_force_h(graph("AG", 5))


def test_brute_force_witness_boundary_consistent(graph):
    G = graph("EAG", 4)
    h, witness = brute_force_h(G)
    size = len(witness)
    assert Fraction(boundary_size(G, list(witness)), min(size, G.order - size)) == h


@pytest.mark.parametrize(
    "family,n,expected",
    [
        ("AG", 6, (Fraction(1), Fraction(2))),
        ("EAG", 6, (Fraction(9, 2), Fraction(8))),
        ("CAG", 6, (Fraction(12), Fraction(20))),
    ],
)
def test_corollary_bounds(family, n, expected):
    assert corollary_bounds(family, n) == expected


def test_corollary_bounds_reject_small_n():
    with pytest.raises(ValueError):
        corollary_bounds("AG", 3)


@pytest.mark.parametrize("family", ["AG", "EAG", "CAG"])
def test_spectral_bracket_contains_exact_h(graph, family):
    G = graph(family, 4)
    h, _ = brute_force_h(G)
    mu = dense_spectrum(G).gap
    lower, upper = cheeger_bounds(mu, G.degree)
    assert float(h) >= lower - 1e-9
    assert float(h) <= upper + 1e-9
