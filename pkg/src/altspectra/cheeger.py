"""Edge boundaries, canonical cuts, spectral bounds on the isoperimetric
number, and an exact brute-force oracle for small graphs.

Ratios are kept as exact fractions (integer boundary over integer side
size) so near-ties order correctly; floats appear only when reporting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, sqrt

import numpy as np

from .cayley import BLOCK_POSITION, FAMILIES, Graph
from .errors import OrderCapError
from .perm import alternating_images


@dataclass(frozen=True)
class CutReport:
    subset_size: int
    boundary: int
    ratio: Fraction
    description: str

    def __post_init__(self):
        if self.subset_size <= 0:
            raise ValueError("cut subset must be nonempty and proper")

    def to_dict(self) -> dict:
        return {
            "subset_size": self.subset_size,
            "boundary": self.boundary,
            "ratio": _fraction_str(self.ratio),
            "ratio_float": float(self.ratio),
            "description": self.description,
        }


def _fraction_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _subset_mask(G: Graph, S) -> np.ndarray:
    S = np.unique(np.asarray(S, dtype=np.int64))
    if S.size == 0 or S.size == G.order:
        raise ValueError("subset must be nonempty and proper")
    if S[0] < 0 or S[-1] >= G.order:
        raise ValueError("subset contains out-of-range vertices")
    mask = np.zeros(G.order, dtype=bool)
    mask[S] = True
    return mask


def boundary_size(G: Graph, S) -> int:
    """Number of edges with exactly one endpoint in S."""
    mask = _subset_mask(G, S)
    src = np.repeat(np.arange(G.order, dtype=np.int64), np.diff(G.offsets))
    return int(np.count_nonzero(mask[src] & ~mask[G.neighbors]))


def cut_ratio(G: Graph, S, description: str = "subset") -> CutReport:
    mask = _subset_mask(G, S)
    size = int(mask.sum())
    boundary = boundary_size(G, S)
    return CutReport(
        subset_size=size,
        boundary=boundary,
        ratio=Fraction(boundary, min(size, G.order - size)),
        description=description,
    )


def canonical_cut(family: str, n: int, i: int = 1) -> np.ndarray:
    """The family's distinguished block: {g_n = i} (AG), {g_2 = i} (EAG),
    {g_1 = i} (CAG)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not 1 <= i <= n:
        raise ValueError(f"value {i} outside 1..{n}")
    j = BLOCK_POSITION[family] or n
    verts = alternating_images(n)
    return np.nonzero(verts[:, j - 1] == i)[0]


def canonical_boundary(family: str, n: int) -> int:
    """Exact boundary size of the canonical cut: (n-1)!, (n-2)(n-1)! or
    (n-1)(n-2)(n-1)!/2."""
    if family == "AG":
        return factorial(n - 1)
    if family == "EAG":
        return (n - 2) * factorial(n - 1)
    if family == "CAG":
        return (n - 1) * (n - 2) * factorial(n - 1) // 2
    raise ValueError(f"unknown family {family!r}")


def cheeger_bounds(mu: float, delta: float) -> tuple[float, float]:
    """Spectral bracket (mu/2, sqrt(mu(2*delta - mu))) on the isoperimetric
    number.

    The lower bound holds for any graph with at least two vertices; the
    upper bound fails only for K_1, K_2 and K_3, which callers must exclude
    themselves.
    """
    if mu < 0 or mu > 2 * delta:
        raise ValueError(f"algebraic connectivity {mu} outside [0, {2 * delta}]")
    return (mu / 2, sqrt(mu * (2 * delta - mu)))


def corollary_bounds(family: str, n: int) -> tuple[Fraction, Fraction]:
    """Exact rational bracket on the isoperimetric number of each family."""
    if family == "AG":
        if n < 4:
            raise ValueError(f"AG bounds need n >= 4, got {n}")
        return (Fraction(1), Fraction(2))
    if family == "EAG":
        if n < 3:
            raise ValueError(f"EAG bounds need n >= 3, got {n}")
        return (Fraction(2 * n - 3, 2), Fraction(2 * n - 4))
    if family == "CAG":
        if n < 3:
            raise ValueError(f"CAG bounds need n >= 3, got {n}")
        return (Fraction(n * n - 2 * n, 2), Fraction(n * n - 3 * n + 2))
    raise ValueError(f"unknown family {family!r}")


def brute_force_h(G: Graph, max_order: int = 20) -> tuple[Fraction, tuple[int, ...]]:
    """Exact isoperimetric number by exhaustion, with a minimizing subset.

    Enumerates every subset containing vertex 0 (each {S, complement} pair
    has exactly one such representative) in Gray-code order so each step
    updates the boundary in O(degree).  Ties break toward the subset whose
    sorted index tuple is lexicographically least; that subset always
    contains vertex 0, so the representative is also the lex-least member
    of its pair.
    """
    order = G.order
    if order > max_order:
        raise OrderCapError(
            f"order {order} above brute-force cap {max_order}; raise max_order to insist"
        )
    if order < 2:
        raise ValueError("isoperimetric number needs at least two vertices")
    nbr_mask = [0] * order
    degs = [0] * order
    for v in range(order):
        m = 0
        for u in G.neighbors_of(v):
            m |= 1 << int(u)
        nbr_mask[v] = m
        degs[v] = G.degree_of(v)

    smask = 1  # vertex 0 always in
    boundary = degs[0]
    best: Fraction | None = None
    best_witness: tuple[int, ...] = ()

    def consider(mask: int, bnd: int):
        nonlocal best, best_witness
        size = mask.bit_count()
        ratio = Fraction(bnd, min(size, order - size))
        if best is None or ratio < best:
            best = ratio
            best_witness = _mask_to_tuple(mask)
        elif ratio == best:
            w = _mask_to_tuple(mask)
            if w < best_witness:
                best_witness = w

    consider(smask, boundary)
    for m in range(1, 1 << (order - 1)):
        v = (m & -m).bit_length()  # flip vertex = trailing-zero count + 1
        bit = 1 << v
        if smask & bit:
            smask ^= bit
            boundary -= degs[v] - 2 * (nbr_mask[v] & smask).bit_count()
        else:
            boundary += degs[v] - 2 * (nbr_mask[v] & smask).bit_count()
            smask ^= bit
        if smask.bit_count() == order:
            continue
        consider(smask, boundary)
    assert best is not None
    return best, best_witness


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)
