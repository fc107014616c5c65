"""Adjacency spectra: dense solves for small orders, iterative second
eigenvalue for large ones, and the closed-form predictions per family.

The iterative solver runs power iteration on the shifted operator A + d*I
restricted to the complement of the all-ones vector.  For a d-regular graph
every shifted eigenvalue lies in [0, 2d], so the dominant eigenvalue on
that complement is lambda_2 + d even when |lambda_min| exceeds lambda_2
(AG_4 already has lambda_min = -lambda_2).  Deflation is enforced by
re-projecting the iterate off the all-ones vector every step, and the
matrix-vector product works directly on the compressed adjacency; no dense
matrix is ever formed in this mode.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from math import comb

import numpy as np

from .cayley import CayleyGraph, Graph, is_connected
from .errors import ConvergenceError, OrderCapError

DENSE_ORDER_CAP = 3000
ITERATION_CAP = 200_000


@dataclass(frozen=True)
class SpectrumReport:
    family: str | None
    n: int | None
    order: int
    degree: int
    solver: str
    tolerance: float
    seed: int | None
    eigenvalues: tuple[float, ...]
    multiplicities: tuple[int, ...] | None
    lambda1: float
    lambda2: float
    gap: float

    @property
    def algebraic_connectivity(self) -> float:
        # Valid because every graph handled here is regular.
        return self.gap

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "order": self.order,
            "degree": self.degree,
            "solver": self.solver,
            "tolerance": self.tolerance,
            "seed": self.seed,
            "eigenvalues": list(self.eigenvalues),
            "multiplicities": list(self.multiplicities) if self.multiplicities else None,
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "gap": self.gap,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _meta(G: Graph) -> tuple[str | None, int | None, int]:
    degree = G.uniform_degree()
    if degree is None:
        raise ValueError("spectral routines expect a regular graph")
    if isinstance(G, CayleyGraph):
        return G.family_tag, G.n, degree
    return None, None, degree


def dense_eigenpairs(G: Graph, order_cap: int = DENSE_ORDER_CAP) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and orthonormal eigenvectors of the adjacency matrix."""
    if G.order > order_cap:
        raise OrderCapError(
            f"order {G.order} above dense cap {order_cap}; use the iterative solver"
        )
    vals, vecs = np.linalg.eigh(G.adjacency_dense())
    return vals, vecs


def dense_spectrum(G: Graph, tol: float = 1e-8, order_cap: int = DENSE_ORDER_CAP) -> SpectrumReport:
    """Full spectrum by dense symmetric diagonalization.

    The achieved tolerance recorded in the report is the largest eigenpair
    residual ||A v - lambda v|| divided by the degree; it must come in
    under ``tol`` or the solve is treated as failed.
    """
    family, n, degree = _meta(G)
    if G.order > order_cap:
        raise OrderCapError(
            f"order {G.order} above dense cap {order_cap}; use the iterative solver"
        )
    A = G.adjacency_dense()
    vals, vecs = np.linalg.eigh(A)
    resid = float(np.linalg.norm(A @ vecs - vecs * vals, axis=0).max())
    achieved = resid / max(degree, 1)
    if achieved > tol:
        raise ConvergenceError(
            f"dense solve residual {achieved:.3e} above tolerance {tol:.3e}", achieved
        )
    desc = vals[::-1].copy()
    lambda1 = float(desc[0])
    lambda2 = float(desc[1]) if len(desc) > 1 else float("nan")
    if is_connected(G) and abs(lambda1 - degree) > max(tol * max(degree, 1), achieved * 10):
        raise ConvergenceError(
            f"largest eigenvalue {lambda1} differs from degree {degree}", achieved
        )
    return SpectrumReport(
        family=family,
        n=n,
        order=G.order,
        degree=degree,
        solver="dense",
        tolerance=achieved,
        seed=None,
        eigenvalues=tuple(float(x) for x in desc),
        multiplicities=tuple(cluster_multiplicities(desc, 100 * tol)),
        lambda1=lambda1,
        lambda2=lambda2,
        gap=lambda1 - lambda2,
    )


def cluster_multiplicities(values_desc: np.ndarray, threshold: float) -> list[int]:
    """Group consecutive eigenvalues closer than ``threshold`` into one cluster."""
    mults = []
    run = 1
    for a in range(1, len(values_desc)):
        if values_desc[a - 1] - values_desc[a] < threshold:
            run += 1
        else:
            mults.append(run)
            run = 1
    mults.append(run)
    return mults


def distinct_eigenvalues(report: SpectrumReport) -> list[float]:
    """Cluster representatives (means) of the report's eigenvalue list."""
    out = []
    pos = 0
    for m in report.multiplicities or [1] * len(report.eigenvalues):
        out.append(float(np.mean(report.eigenvalues[pos : pos + m])))
        pos += m
    return out


def lambda2_iterative(
    G: Graph,
    tol: float = 1e-8,
    seed: int = 42,
    max_iterations: int = ITERATION_CAP,
) -> float:
    """Second-largest adjacency eigenvalue of a connected regular graph.

    Converges when successive Rayleigh quotients move by less than tol/10
    and the eigenpair residual drops below tol; for a symmetric matrix the
    residual bounds the eigenvalue error directly.  A result within 10*tol
    of the degree is flagged with a warning: it usually means the graph was
    not connected.
    """
    degree = G.uniform_degree()
    if degree is None:
        raise ValueError("iterative solver expects a regular graph")
    if G.order < 2:
        raise ValueError("graph must have at least two vertices")
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(G.order)
    v -= v.mean()
    v /= np.linalg.norm(v)
    prev_rq = np.inf
    resid = np.inf
    for _ in range(max_iterations):
        av = G.matvec(v)
        rq = float(v @ av)
        resid = float(np.linalg.norm(av - rq * v))
        if abs(rq - prev_rq) < tol / 10 and resid < tol:
            break
        prev_rq = rq
        w = av + degree * v
        w -= w.mean()
        norm = np.linalg.norm(w)
        if norm < 1e-12:
            # (A + d I) annihilates v on the deflated space, so v already is
            # an exact eigenvector of eigenvalue -d and rq is exact.
            break
        v = w / norm
    else:
        raise ConvergenceError(
            f"no convergence in {max_iterations} iterations (residual {resid:.3e})",
            resid,
        )
    if abs(rq - degree) <= 10 * tol:
        warnings.warn(
            "second eigenvalue equals the degree; the graph is likely disconnected",
            stacklevel=2,
        )
    return rq


def spectral_gap(G: Graph, tol: float = 1e-8, seed: int = 42) -> float:
    """Degree minus the second-largest adjacency eigenvalue."""
    degree = G.uniform_degree()
    if degree is None:
        raise ValueError("spectral gap is defined here for regular graphs")
    return degree - lambda2_iterative(G, tol=tol, seed=seed)


def gap_report(G: Graph, tol: float = 1e-8, seed: int = 42) -> SpectrumReport:
    """Iterative-solver report carrying just the top two eigenvalues."""
    family, n, degree = _meta(G)
    lam2 = lambda2_iterative(G, tol=tol, seed=seed)
    return SpectrumReport(
        family=family,
        n=n,
        order=G.order,
        degree=degree,
        solver="iterative",
        tolerance=tol,
        seed=seed,
        eigenvalues=(float(degree), lam2),
        multiplicities=None,
        lambda1=float(degree),
        lambda2=lam2,
        gap=degree - lam2,
    )


def predicted(family: str, n: int) -> tuple[int, int, int]:
    """Closed-form (lambda1, lambda2, gap) for each family; exact integers."""
    if family == "AG":
        if n == 3:
            return (2, -1, 3)
        if n < 3:
            raise ValueError(f"AG is defined for n >= 3, got {n}")
        return (2 * n - 4, 2 * n - 6, 2)
    if family == "EAG":
        if n < 3:
            raise ValueError(f"EAG is defined for n >= 3, got {n}")
        return ((n - 1) * (n - 2), n * n - 5 * n + 5, 2 * n - 3)
    if family == "CAG":
        if n < 3:
            raise ValueError(f"CAG is defined for n >= 3, got {n}")
        lam2 = n * (n - 2) * (n - 4) // 3
        return (2 * comb(n, 3), lam2, n * n - 2 * n)
    raise ValueError(f"unknown family {family!r}")


def integrality_check(report: SpectrumReport, tol: float = 1e-8) -> tuple[bool, float]:
    """Whether every eigenvalue sits within tol of an integer, plus the worst offset."""
    vals = np.asarray(report.eigenvalues)
    offsets = np.abs(vals - np.round(vals))
    worst = float(offsets.max(initial=0.0))
    return worst <= tol, worst


def rayleigh(G: Graph, f: np.ndarray) -> float:
    """Quotient f^T A f / f^T f for a vertex-indexed vector."""
    f = np.asarray(f, dtype=np.float64)
    if f.shape != (G.order,):
        raise ValueError(f"vector length {f.shape} does not match order {G.order}")
    denom = float(f @ f)
    if denom == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return float(f @ G.matvec(f)) / denom
