"""Cayley graphs on A_n in compressed adjacency form.

Vertices are even permutations numbered by :func:`altspectra.perm.rank`.
The neighbors of a vertex g are the products t*g for t in the generating
set, with t applied first (left multiplication under the package-wide
left-to-right composition).  Built graphs are immutable: neighbor lists are
sorted, stored in one flat array, and marked read-only, so a graph can be
shared freely across threads.

Three generating families are provided:

- T1: the 3-cycles (1,2,i) and (1,i,2) for 3 <= i <= n,
- T2: the 3-cycles through the point 1,
- T3: all 3-cycles.

The resulting graphs are called AG_n, EAG_n and CAG_n respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import OrderCapError
from .perm import (
    Permutation,
    alternating_images,
    alternating_order,
    alternating_ranks,
    from_cycle,
    identity,
    inverse,
    sign,
)

FAMILIES = ("AG", "EAG", "CAG")
FAMILY_TO_TAG = {"AG": "T1", "EAG": "T2", "CAG": "T3"}
TAG_TO_FAMILY = {v: k for k, v in FAMILY_TO_TAG.items()}

# 9!/2; larger builds must be requested explicitly via max_order.
DEFAULT_MAX_ORDER = 181_440

# Position that the defining block of each family pins: X(i) = {g : g_n = i}
# for AG, {g : g_2 = i} for EAG, {g : g_1 = i} for CAG.
BLOCK_POSITION = {"AG": None, "EAG": 2, "CAG": 1}


@dataclass(frozen=True)
class GeneratingSet:
    """An inverse-closed, identity-free set of even permutations."""

    n: int
    elements: tuple[Permutation, ...]
    family_tag: str = "custom"

    def __post_init__(self):
        seen = set()
        for t in self.elements:
            if t.n != self.n:
                raise ValueError(f"generator {t.images!r} is not on {self.n} points")
            if t.images in seen:
                raise ValueError(f"duplicate generator {t}")
            seen.add(t.images)
        if identity(self.n).images in seen:
            raise ValueError("generating set contains the identity")
        for t in self.elements:
            if sign(t) != 1:
                raise ValueError(f"generator {t} is odd; all generators must be even")
            if inverse(t).images not in seen:
                raise ValueError(f"generating set is not closed under inverses at {t}")

    @property
    def size(self) -> int:
        return len(self.elements)


def generating_set(family: str, n: int) -> GeneratingSet:
    """The T1 / T2 / T3 generating set on {1..n}."""
    if n < 3:
        raise ValueError(f"generating sets need n >= 3, got {n}")
    elements: list[Permutation] = []
    if family == "T1":
        for i in range(3, n + 1):
            elements.append(from_cycle(n, [1, 2, i]))
            elements.append(from_cycle(n, [1, i, 2]))
    elif family == "T2":
        for i in range(2, n + 1):
            for j in range(i + 1, n + 1):
                elements.append(from_cycle(n, [1, i, j]))
                elements.append(from_cycle(n, [1, j, i]))
    elif family == "T3":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    elements.append(from_cycle(n, [i, j, k]))
                    elements.append(from_cycle(n, [i, k, j]))
    else:
        raise ValueError(f"unknown generating family {family!r} (expected T1, T2 or T3)")
    return GeneratingSet(n=n, elements=tuple(elements), family_tag=family)


def custom_generating_set(n: int, elements) -> GeneratingSet:
    return GeneratingSet(n=n, elements=tuple(elements), family_tag="custom")


def expected_degree(family: str, n: int) -> int:
    if family == "AG":
        return 2 * n - 4
    if family == "EAG":
        return (n - 1) * (n - 2)
    if family == "CAG":
        return 2 * comb(n, 3)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected graph in compressed adjacency layout.

    ``neighbors[offsets[v]:offsets[v+1]]`` is the sorted neighbor list of
    vertex v.  Equality is canonical: two graphs are equal iff their arrays
    match entry for entry.
    """

    offsets: np.ndarray
    neighbors: np.ndarray

    def __post_init__(self):
        self.offsets.setflags(write=False)
        self.neighbors.setflags(write=False)

    @property
    def order(self) -> int:
        return len(self.offsets) - 1

    @property
    def edge_count(self) -> int:
        return len(self.neighbors) // 2

    def degree_of(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def neighbors_of(self, v: int) -> np.ndarray:
        return self.neighbors[self.offsets[v] : self.offsets[v + 1]]

    def uniform_degree(self) -> int | None:
        degs = np.diff(self.offsets)
        if len(degs) and (degs == degs[0]).all():
            return int(degs[0])
        return None

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors_of(u)
        k = np.searchsorted(row, v)
        return k < len(row) and row[k] == v

    def edges_array(self) -> np.ndarray:
        """(E, 2) array of edges with u < v, sorted lexicographically."""
        src = np.repeat(np.arange(self.order, dtype=np.int64), np.diff(self.offsets))
        mask = src < self.neighbors
        return np.column_stack([src[mask], self.neighbors[mask]])

    def matvec(self, v: np.ndarray) -> np.ndarray:
        """Adjacency-matrix product A @ v without materializing A."""
        v = np.asarray(v, dtype=np.float64)
        d = self.uniform_degree()
        if d is not None:
            if d == 0:
                return np.zeros(self.order)
            return v[self.neighbors.reshape(self.order, d)].sum(axis=1)
        src = np.repeat(np.arange(self.order, dtype=np.int64), np.diff(self.offsets))
        return np.bincount(src, weights=v[self.neighbors], minlength=self.order)

    def adjacency_dense(self) -> np.ndarray:
        A = np.zeros((self.order, self.order))
        src = np.repeat(np.arange(self.order, dtype=np.int64), np.diff(self.offsets))
        A[src, self.neighbors] = 1.0
        return A

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.neighbors, other.neighbors)
        )


@dataclass(frozen=True, eq=False)
class CayleyGraph(Graph):
    n: int = 0
    degree: int = 0
    family_tag: str = "custom"


@dataclass(frozen=True)
class VertexMap:
    """A pairing of source vertices with target vertices."""

    source: str
    target: str
    pairs: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def is_injective(self) -> bool:
        targets = {t for _, t in self.pairs}
        return len(targets) == len(self.pairs)


def _graph_from_rows(rows: list[np.ndarray]) -> Graph:
    offsets = np.zeros(len(rows) + 1, dtype=np.int64)
    np.cumsum([len(r) for r in rows], out=offsets[1:])
    neighbors = (
        np.concatenate(rows).astype(np.int32)
        if rows and offsets[-1] > 0
        else np.empty(0, dtype=np.int32)
    )
    return Graph(offsets=offsets, neighbors=neighbors)


def build_cayley(n: int, gens: GeneratingSet, max_order: int = DEFAULT_MAX_ORDER) -> CayleyGraph:
    """Cayley graph of A_n with respect to ``gens``.

    Vertex v is the even permutation ``unrank(n, v)``; its neighbors are the
    ranks of t*g (t first) over all generators t.
    """
    if gens.n != n:
        raise ValueError(f"generating set is on {gens.n} points, graph wants {n}")
    if n < 3:
        raise ValueError(f"Cayley graphs need n >= 3, got {n}")
    order = alternating_order(n)
    if order > max_order:
        raise OrderCapError(
            f"order {order} exceeds cap {max_order}; pass max_order explicitly to override"
        )
    verts = alternating_images(n)
    degree = gens.size
    nbrs = np.empty((order, degree), dtype=np.int32)
    for c, t in enumerate(gens.elements):
        idx = np.asarray(t.images, dtype=np.intp) - 1
        # Row for vertex g of t*g: point i goes to g[t_i].
        nbrs[:, c] = alternating_ranks(verts[:, idx])
    nbrs.sort(axis=1)
    offsets = np.arange(order + 1, dtype=np.int64) * degree
    return CayleyGraph(
        offsets=offsets,
        neighbors=nbrs.reshape(-1),
        n=n,
        degree=degree,
        family_tag=TAG_TO_FAMILY.get(gens.family_tag, "custom"),
    )


def build_family(family: str, n: int, max_order: int = DEFAULT_MAX_ORDER) -> CayleyGraph:
    """AG_n, EAG_n or CAG_n."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r} (expected one of {FAMILIES})")
    return build_cayley(n, generating_set(FAMILY_TO_TAG[family], n), max_order=max_order)


def is_connected(G: Graph) -> bool:
    """True iff a breadth-first search from vertex 0 reaches every vertex."""
    order = G.order
    if order == 0:
        return False
    seen = np.zeros(order, dtype=bool)
    seen[0] = True
    frontier = np.array([0], dtype=np.int64)
    d = G.uniform_degree()
    while frontier.size:
        if d is not None and d > 0:
            nxt = G.neighbors.reshape(order, d)[frontier].reshape(-1)
        else:
            nxt = np.concatenate([G.neighbors_of(int(v)) for v in frontier]) if frontier.size else frontier
        nxt = np.unique(nxt)
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt
    return bool(seen.all())


def induced_subgraph(G: Graph, S) -> tuple[Graph, VertexMap]:
    """Subgraph on vertex subset ``S`` plus the new-index -> old-index map."""
    S = np.unique(np.asarray(S, dtype=np.int64))
    if S.size == 0:
        raise ValueError("vertex subset is empty")
    if S[0] < 0 or S[-1] >= G.order:
        raise ValueError("vertex subset out of range")
    inset = np.zeros(G.order, dtype=bool)
    inset[S] = True
    new_id = np.full(G.order, -1, dtype=np.int64)
    new_id[S] = np.arange(S.size)
    rows = []
    for v in S:
        nb = G.neighbors_of(int(v))
        rows.append(new_id[nb[inset[nb]]])
    sub = _graph_from_rows(rows)
    pairs = tuple((int(k), int(v)) for k, v in enumerate(S))
    return sub, VertexMap(source="induced", target="parent", pairs=pairs)


def phi_isomorphism(n: int, i: int, family: str) -> VertexMap:
    """Bijection from the defining block of the family onto A_{n-1} vertices.

    The block is {g : g_j = i} with j = n (AG), 2 (EAG) or 1 (CAG).  Each
    member is mapped by deleting position j, shifting later positions down,
    and renaming the value n to i (a no-op when i = n).  That pairing
    already preserves products g' * g^{-1}, hence adjacency; when the raw
    images come out odd, a fixed swap of the values 1 and 2 is applied on
    top, which leaves products untouched and lands the block in A_{n-1}.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r} (expected one of {FAMILIES})")
    if n < 4:
        raise ValueError(f"block isomorphisms need n >= 4, got {n}")
    if not 1 <= i <= n:
        raise ValueError(f"block value {i} outside 1..{n}")
    j = BLOCK_POSITION[family] or n
    verts = alternating_images(n)
    block = np.nonzero(verts[:, j - 1] == i)[0]
    imgs = np.delete(verts[block], j - 1, axis=1).astype(np.uint8)
    if i != n:
        imgs[imgs == n] = i
    # Parity offset is uniform across the block; probe the first member.
    if _inversion_parity(imgs[0]) != 0:
        low = imgs <= 2
        imgs[low] = 3 - imgs[low]
    targets = alternating_ranks(imgs)
    pairs = tuple((int(u), int(w)) for u, w in zip(block, targets))
    vm = VertexMap(source=f"{family}_{n}:pos{j}={i}", target=f"{family}_{n - 1}", pairs=pairs)
    if not vm.is_injective() or vm.size != alternating_order(n - 1):
        raise AssertionError("block map failed to biject onto A_{n-1}")
    return vm


def _inversion_parity(row: np.ndarray) -> int:
    inv = 0
    for a in range(len(row) - 1):
        inv += int((row[a + 1 :] < row[a]).sum())
    return inv % 2


def graph_invariant_violations(G: Graph) -> list[str]:
    """Structural defects of the adjacency layout; empty list means clean."""
    problems = []
    if not np.all(np.diff(G.offsets) >= 0) or G.offsets[0] != 0 or G.offsets[-1] != len(G.neighbors):
        problems.append("offsets are not a valid cumulative layout")
        return problems
    if len(G.neighbors) and (G.neighbors.min() < 0 or G.neighbors.max() >= G.order):
        problems.append("neighbor index out of range")
        return problems
    src = np.repeat(np.arange(G.order, dtype=np.int64), np.diff(G.offsets))
    if np.any(src == G.neighbors):
        problems.append("self-loop present")
    if len(G.neighbors) > 1:
        diffs = np.diff(G.neighbors.astype(np.int64))
        within_row = np.ones(len(diffs), dtype=bool)
        row_starts = G.offsets[1:-1]
        within_row[row_starts[(row_starts > 0) & (row_starts < len(G.neighbors))] - 1] = False
        if np.any(diffs[within_row] <= 0):
            problems.append("a neighbor list is not strictly increasing")
    forward = np.lexsort((G.neighbors, src))
    backward = np.lexsort((src, G.neighbors))
    if not (
        np.array_equal(src[forward], G.neighbors[backward])
        and np.array_equal(G.neighbors[forward], src[backward])
    ):
        problems.append("adjacency is not symmetric")
    if isinstance(G, CayleyGraph):
        degs = np.diff(G.offsets)
        if len(degs) and not np.all(degs == G.degree):
            problems.append(f"graph is not {G.degree}-regular")
    return problems


def export_edges(G: Graph, path, family: str = "custom", n: int | None = None) -> None:
    """Write the edge list: header comment, then one ``u v`` pair per line.

    Vertices are 0-based ranks, u < v, LF line endings.
    """
    if isinstance(G, CayleyGraph):
        family = G.family_tag
        n = G.n
    degree = G.uniform_degree()
    with open(path, "w", newline="\n") as fh:
        fh.write(f"# family={family} n={n} order={G.order} degree={degree}\n")
        for u, v in G.edges_array():
            fh.write(f"{u} {v}\n")
