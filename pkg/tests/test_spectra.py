import json

import numpy as np
import pytest

from altspectra.cayley import build_cayley, custom_generating_set
from altspectra.cheeger import canonical_cut
from altspectra.errors import ConvergenceError, OrderCapError
from altspectra.perm import from_cycle
from altspectra.spectra import (
    SpectrumReport,
    dense_eigenpairs,
    dense_spectrum,
    distinct_eigenvalues,
    gap_report,
    integrality_check,
    lambda2_iterative,
    predicted,
    rayleigh,
    spectral_gap,
)


def test_dense_AG4_distinct_values(graph):
    rep = dense_spectrum(graph("AG", 4))
    distinct = distinct_eigenvalues(rep)
    assert np.allclose(distinct, [4, 2, 0, -2], atol=1e-8)
    # multiplicity of the degree eigenvalue is 1, the rest carry 11
    assert rep.multiplicities[0] == 1
    assert sum(rep.multiplicities[1:]) == 11


def test_dense_K3(graph):
    rep = dense_spectrum(graph("AG", 3))
    assert np.allclose(rep.eigenvalues, [2, -1, -1], atol=1e-10)
    assert rep.gap == pytest.approx(3.0, abs=1e-10)


def test_dense_spectrum_sums_to_zero(graph):
    for family in ("AG", "EAG", "CAG"):
        rep = dense_spectrum(graph(family, 4))
        assert abs(sum(rep.eigenvalues)) < rep.order * 1e-8
        assert min(rep.eigenvalues) >= -rep.degree - 1e-8


def test_dense_residuals_within_tolerance(graph):
    G = graph("EAG", 4)
    vals, vecs = dense_eigenpairs(G)
    A = G.adjacency_dense()
    resid = np.linalg.norm(A @ vecs - vecs * vals, axis=0).max()
    assert resid <= 1e-8 * G.degree


def test_dense_order_cap(graph):
    with pytest.raises(OrderCapError):
        dense_spectrum(graph("AG", 5), order_cap=10)


@pytest.mark.parametrize(
    "family,n,expected",
    [("AG", 5, 4.0), ("EAG", 5, 5.0), ("CAG", 5, 5.0), ("AG", 4, 2.0), ("EAG", 4, 1.0), ("CAG", 4, 0.0)],
)
def test_lambda2_iterative_matches_closed_form(graph, family, n, expected):
    assert lambda2_iterative(graph(family, n), tol=1e-8) == pytest.approx(expected, abs=1e-7)


@pytest.mark.parametrize("family,n,expected", [("AG", 6, 2.0), ("EAG", 6, 9.0), ("CAG", 6, 24.0)])
def test_spectral_gap(graph, family, n, expected):
    assert spectral_gap(graph(family, n), tol=1e-8) == pytest.approx(expected, abs=1e-6)


@pytest.mark.parametrize("family", ["AG", "EAG", "CAG"])
@pytest.mark.parametrize("n", [4, 5, 6])
def test_dense_and_iterative_agree(graph, family, n):
    G = graph(family, n)
    dense = dense_spectrum(G).lambda2
    iterative = lambda2_iterative(G, tol=1e-8)
    assert abs(dense - iterative) < 1e-6


def test_predicted_values():
    assert predicted("AG", 7) == (10, 8, 2)
    assert predicted("EAG", 7) == (30, 19, 11)
    assert predicted("CAG", 7) == (70, 35, 35)
    assert predicted("AG", 3) == (2, -1, 3)
    assert predicted("EAG", 3) == (2, -1, 3)
    assert predicted("CAG", 3) == (2, -1, 3)
    with pytest.raises(ValueError):
        predicted("AG", 2)


@pytest.mark.parametrize("n", [4, 5])
def test_CAG_spectrum_is_integral(graph, n):
    ok, worst = integrality_check(dense_spectrum(graph("CAG", n)))
    assert ok and worst < 1e-8


def test_integrality_check_rejects_halves():
    rep = SpectrumReport(
        family=None, n=None, order=2, degree=1, solver="dense", tolerance=0.0,
        seed=None, eigenvalues=(1.5, -0.5), multiplicities=(1, 1),
        lambda1=1.5, lambda2=-0.5, gap=2.0,
    )
    ok, worst = integrality_check(rep)
    assert not ok and worst == pytest.approx(0.5)


def test_divisor_values_appear_in_AG_spectrum(graph):
    for n in (4, 5):
        vals = np.asarray(dense_spectrum(graph("AG", n)).eigenvalues)
        for target in (2 * n - 4, 2 * n - 6, n - 4, 2 - n):
            assert np.abs(vals - target).min() < 1e-6


@pytest.mark.parametrize("n", [4, 5])
def test_EAG_second_value_multiplicity(graph, n):
    vals = np.asarray(dense_spectrum(graph("EAG", n)).eigenvalues)
    target = n * n - 5 * n + 5
    assert np.count_nonzero(np.abs(vals - target) < 1e-6) >= n - 2


@pytest.mark.parametrize("n", [4, 5])
def test_CAG_second_value_multiplicity(graph, n):
    vals = np.asarray(dense_spectrum(graph("CAG", n)).eigenvalues)
    target = n * (n - 2) * (n - 4) // 3
    assert np.count_nonzero(np.abs(vals - target) < 1e-6) >= n - 1


def test_rayleigh_all_ones(graph):
    G = graph("AG", 4)
    assert rayleigh(G, np.ones(G.order)) == pytest.approx(4.0, abs=1e-12)


def test_rayleigh_reproduces_eigenvalues(graph):
    G = graph("EAG", 4)
    vals, vecs = dense_eigenpairs(G)
    for k in (0, 3, G.order - 1):
        assert rayleigh(G, vecs[:, k]) == pytest.approx(vals[k], abs=1e-10)


def test_rayleigh_of_centered_block_indicator_is_bounded(graph):
    G = graph("AG", 4)
    f = np.zeros(G.order)
    f[canonical_cut("AG", 4, 1)] = 1.0
    f -= f.mean()
    lam2 = dense_spectrum(G).lambda2
    assert rayleigh(G, f) <= lam2 + 1e-8


def test_rayleigh_rejects_zero_vector(graph):
    with pytest.raises(ValueError):
        rayleigh(graph("AG", 4), np.zeros(12))


def test_lambda2_flags_disconnected_graph():
    gens = custom_generating_set(4, [from_cycle(4, [1, 2, 3]), from_cycle(4, [1, 3, 2])])
    G = build_cayley(4, gens)
    with pytest.warns(UserWarning, match="disconnected"):
        lam2 = lambda2_iterative(G, tol=1e-8)
    assert lam2 == pytest.approx(2.0, abs=1e-7)


def test_lambda2_iteration_cap(graph):
    with pytest.raises(ConvergenceError) as exc:
        lambda2_iterative(graph("AG", 5), tol=1e-12, max_iterations=2)
    assert exc.value.residual is not None


def test_lambda2_deterministic_per_seed(graph):
    G = graph("EAG", 5)
    a = lambda2_iterative(G, seed=7)
    b = lambda2_iterative(G, seed=7)
    c = lambda2_iterative(G, seed=8)
    assert a == b
    assert a == pytest.approx(c, abs=1e-7)


def test_report_json_schema(graph):
    rep = gap_report(graph("AG", 5))
    data = json.loads(rep.to_json())
    assert list(data) == [
        "family", "n", "order", "degree", "solver", "tolerance", "seed",
        "eigenvalues", "multiplicities", "lambda1", "lambda2", "gap",
    ]
    assert data["solver"] == "iterative"
    assert data["gap"] == pytest.approx(2.0, abs=1e-7)
    assert rep.algebraic_connectivity == rep.gap
