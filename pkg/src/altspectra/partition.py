"""Vertex block families, the equitable-partition check, and divisor matrices.

A partition of the vertex set is equitable when the number of neighbors a
vertex has in each block depends only on the vertex's own block.  The k x k
matrix of those counts is the divisor matrix; its eigenvalues are a subset
of the graph's spectrum.

Block families used throughout, all defined on the ranked vertices of A_n:

- ``blocks_AG(n, i)``: the four blocks {g_n = i}, {g_1 = i}, {g_2 = i} and
  the rest, labelled X(i), Y(i), Z(i), W(i).
- ``blocks_Xij(n, i=...)``: the n blocks {g : g_1 = i}, ..., {g : g_n = i}
  that pin where the value i sits (equitable for EAG_n and CAG_n).
- ``blocks_Xij(n, j=...)``: the n blocks that pin the value at position j
  (a partition, but not equitable in general).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

import numpy as np

from .cayley import Graph
from .perm import alternating_images, alternating_order


@dataclass(frozen=True)
class VertexPartition:
    blocks: tuple[np.ndarray, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.blocks) != len(self.labels):
            raise ValueError("labels do not match blocks")
        for b in self.blocks:
            if b.size == 0:
                raise ValueError("empty block in partition")
            if np.any(np.diff(b) <= 0):
                raise ValueError("block indices must be sorted and distinct")
            b.setflags(write=False)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(int(b.size) for b in self.blocks)

    def block_assignment(self, order: int) -> np.ndarray:
        """Block index per vertex; raises unless blocks partition 0..order-1."""
        assignment = np.full(order, -1, dtype=np.int32)
        total = 0
        for bi, block in enumerate(self.blocks):
            if block[0] < 0 or block[-1] >= order:
                raise ValueError(f"block {self.labels[bi]} has out-of-range vertices")
            if np.any(assignment[block] != -1):
                raise ValueError(f"block {self.labels[bi]} overlaps an earlier block")
            assignment[block] = bi
            total += block.size
        if total != order:
            raise ValueError(f"blocks cover {total} of {order} vertices")
        return assignment


@dataclass(frozen=True)
class DivisorMatrix:
    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError("divisor matrix must be square")
        object.__setattr__(self, "entries", e)
        self.entries.setflags(write=False)

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    def row_sums(self) -> np.ndarray:
        return self.entries.sum(axis=1)


@dataclass(frozen=True)
class EquitableWitness:
    """Two same-block vertices with different neighbor counts toward a block."""

    block_index: int
    block_label: str
    target_index: int
    target_label: str
    vertex_a: int
    vertex_b: int
    count_a: int
    count_b: int

    def __str__(self) -> str:
        return (
            f"vertices {self.vertex_a} and {self.vertex_b} of block "
            f"{self.block_label} have {self.count_a} vs {self.count_b} "
            f"neighbors in block {self.target_label}"
        )


def blocks_AG(n: int, i: int) -> VertexPartition:
    """The four-block partition pinning where the value i appears."""
    if n < 4:
        raise ValueError(f"four-block partitions need n >= 4, got {n}")
    if not 1 <= i <= n:
        raise ValueError(f"value {i} outside 1..{n}")
    verts = alternating_images(n)
    x = np.nonzero(verts[:, n - 1] == i)[0]
    y = np.nonzero(verts[:, 0] == i)[0]
    z = np.nonzero(verts[:, 1] == i)[0]
    rest = (verts[:, 0] != i) & (verts[:, 1] != i) & (verts[:, n - 1] != i)
    w = np.nonzero(rest)[0]
    return VertexPartition(
        blocks=(x, y, z, w),
        labels=(f"X({i})", f"Y({i})", f"Z({i})", f"W({i})"),
    )


def blocks_Xij(n: int, *, i: int | None = None, j: int | None = None) -> VertexPartition:
    """The n-block partitions built from a single pinned value or position.

    Exactly one selector must be given: ``i`` fixes a value and the blocks
    run over the position holding it (X_i(1), ..., X_i(n)); ``j`` fixes a
    position and the blocks run over the value found there (X_1(j), ...,
    X_n(j)).  Every block has (n-1)!/2 vertices.
    """
    if n < 3:
        raise ValueError(f"partitions need n >= 3, got {n}")
    if (i is None) == (j is None):
        raise ValueError("give exactly one of i= (fixed value) or j= (fixed position)")
    verts = alternating_images(n)
    if i is not None:
        if not 1 <= i <= n:
            raise ValueError(f"value {i} outside 1..{n}")
        blocks = tuple(np.nonzero(verts[:, jj - 1] == i)[0] for jj in range(1, n + 1))
        labels = tuple(f"X_{i}({jj})" for jj in range(1, n + 1))
    else:
        if not 1 <= j <= n:
            raise ValueError(f"position {j} outside 1..{n}")
        blocks = tuple(np.nonzero(verts[:, j - 1] == v)[0] for v in range(1, n + 1))
        labels = tuple(f"X_{v}({j})" for v in range(1, n + 1))
    return VertexPartition(blocks=blocks, labels=labels)


def check_equitable(G: Graph, P: VertexPartition) -> DivisorMatrix | EquitableWitness:
    """Divisor matrix when P is equitable, else the first counterexample.

    The counterexample is found by scanning vertices in ascending order and
    comparing each vertex's per-block neighbor counts against the lowest
    vertex of its own block; ties on the vertex break by the lowest target
    block.
    """
    order = G.order
    assignment = P.block_assignment(order)
    k = P.k
    counts = _neighbor_block_counts(G, assignment, k)
    first_of_block = np.array([b[0] for b in P.blocks], dtype=np.int64)
    reference = counts[first_of_block]
    diff = counts != reference[assignment]
    bad = np.nonzero(diff.any(axis=1))[0]
    if bad.size:
        v = int(bad[0])
        bi = int(assignment[v])
        tj = int(np.nonzero(diff[v])[0][0])
        u = int(first_of_block[bi])
        return EquitableWitness(
            block_index=bi,
            block_label=P.labels[bi],
            target_index=tj,
            target_label=P.labels[tj],
            vertex_a=u,
            vertex_b=v,
            count_a=int(counts[u, tj]),
            count_b=int(counts[v, tj]),
        )
    return DivisorMatrix(entries=reference.astype(np.int64))


def _neighbor_block_counts(G: Graph, assignment: np.ndarray, k: int) -> np.ndarray:
    nbr_blocks = assignment[G.neighbors]
    d = G.uniform_degree()
    counts = np.empty((G.order, k), dtype=np.int32)
    if d is not None and d > 0:
        mat = nbr_blocks.reshape(G.order, d)
        for b in range(k):
            counts[:, b] = (mat == b).sum(axis=1)
    else:
        counts[:] = 0
        src = np.repeat(np.arange(G.order, dtype=np.int64), np.diff(G.offsets))
        np.add.at(counts, (src, nbr_blocks.astype(np.int64)), 1)
    return counts


def divisor_closed_form(family: str, n: int) -> DivisorMatrix:
    """The block neighbor-count matrix of each family, as a formula in n."""
    if family == "AG":
        if n < 4:
            raise ValueError(f"AG divisor matrix needs n >= 4, got {n}")
        entries = np.array(
            [
                [2 * n - 6, 1, 1, 0],
                [1, 0, n - 2, n - 3],
                [1, n - 2, 0, n - 3],
                [0, 1, 1, 2 * n - 6],
            ],
            dtype=np.int64,
        )
    elif family == "EAG":
        if n < 3:
            raise ValueError(f"EAG divisor matrix needs n >= 3, got {n}")
        entries = np.full((n, n), 1, dtype=np.int64)
        entries[0, :] = n - 2
        entries[:, 0] = n - 2
        entries[0, 0] = 0
        for a in range(1, n):
            entries[a, a] = (n - 2) * (n - 3)
    elif family == "CAG":
        if n < 3:
            raise ValueError(f"CAG divisor matrix needs n >= 3, got {n}")
        entries = np.full((n, n), n - 2, dtype=np.int64)
        np.fill_diagonal(entries, 2 * comb(n - 1, 3))
    else:
        raise ValueError(f"unknown family {family!r}")
    return DivisorMatrix(entries=entries)


def divisor_eigenvalues_closed_form(family: str, n: int) -> list[int]:
    """Eigenvalues of the closed-form divisor matrix, descending with multiplicity."""
    if family == "AG":
        if n < 4:
            raise ValueError(f"AG divisor eigenvalues need n >= 4, got {n}")
        return [2 * n - 4, 2 * n - 6, n - 4, 2 - n]
    if family == "EAG":
        if n < 3:
            raise ValueError(f"EAG divisor eigenvalues need n >= 3, got {n}")
        return [(n - 1) * (n - 2)] + [n * n - 5 * n + 5] * (n - 2) + [2 - n]
    if family == "CAG":
        if n < 3:
            raise ValueError(f"CAG divisor eigenvalues need n >= 3, got {n}")
        return [2 * comb(n, 3)] + [n * (n - 2) * (n - 4) // 3] * (n - 1)
    raise ValueError(f"unknown family {family!r}")


def divisor_spectrum(B: DivisorMatrix, tol: float = 1e-10) -> np.ndarray:
    """All eigenvalues of B, descending, via the general dense solver.

    Divisor matrices of equitable partitions always have real spectra even
    when non-symmetric; a residual imaginary part above ``tol`` (relative
    to the matrix scale) is reported as an error rather than discarded.
    """
    entries = np.asarray(B.entries, dtype=np.float64)
    w = np.linalg.eigvals(entries)
    scale = max(1.0, float(np.abs(entries).max()))
    if np.abs(w.imag).max(initial=0.0) > tol * scale:
        raise ValueError("matrix has genuinely complex eigenvalues")
    return np.sort(w.real)[::-1]


def partition_to_json(P: VertexPartition) -> str:
    return json.dumps(
        {"blocks": [b.tolist() for b in P.blocks], "labels": list(P.labels)},
        separators=(",", ":"),
    )


def partition_from_json(text: str) -> VertexPartition:
    data = json.loads(text)
    blocks = tuple(np.asarray(sorted(b), dtype=np.int64) for b in data["blocks"])
    labels = tuple(data.get("labels") or [f"V{i + 1}" for i in range(len(blocks))])
    return VertexPartition(blocks=blocks, labels=labels)


def block_sizes_AG(n: int) -> tuple[int, int, int, int]:
    """Expected sizes of X, Y, Z, W: three of (n-1)!/2 and one of (n-3)(n-1)!/2."""
    s = alternating_order(n - 1)
    return (s, s, s, (n - 3) * s)
