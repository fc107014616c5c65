"""Permutations of {1..n} and lexicographic enumeration of the even ones.

Conventions, fixed once for the whole package:

- One-line notation: a permutation is the tuple of images ``(p_1, ..., p_n)``
  where ``p_i`` is the image of point ``i``.  Points are 1-based.
- Products compose left to right: ``compose(s, t)`` applies ``s`` first and
  then ``t``, so point ``i`` goes to ``t[s[i]]``.  Every neighbor formula in
  the graph modules depends on this order; do not flip it.
- Even permutations are numbered by the lexicographic order of their image
  tuples.  In the lexicographic list of all n! permutations, consecutive
  pairs share the first n-2 entries and differ by a swap of the last two,
  so exactly one member of each pair is even and the even rank is the full
  Lehmer rank halved.

Everything here is a pure value; no function mutates its arguments, so all
operations are safe to call concurrently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _all_permutations
from math import factorial

import numpy as np

# n! must stay well inside 64-bit arithmetic; graphs are built for far
# smaller n anyway.
MAX_POINTS = 12


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1, 2, ..., n."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if not 1 <= n <= MAX_POINTS:
            raise ValueError(f"point count must be in 1..{MAX_POINTS}, got {n}")
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"images {self.images!r} are not a bijection of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.images)

    def apply(self, point: int) -> int:
        """Image of a single 1-based point."""
        return self.images[point - 1]

    def __str__(self) -> str:
        return cycle_string(self)


def identity(n: int) -> Permutation:
    """The identity permutation on {1..n}."""
    return Permutation(tuple(range(1, n + 1)))


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """Product that applies ``sigma`` first, then ``tau``.

    >>> compose(from_cycle(3, [1, 2, 3]), from_cycle(3, [1, 2, 3])).images
    (3, 1, 2)
    """
    if sigma.n != tau.n:
        raise ValueError(f"cannot compose permutations of {sigma.n} and {tau.n} points")
    return Permutation(tuple(tau.images[s - 1] for s in sigma.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, v in enumerate(p.images):
        inv[v - 1] = i + 1
    return Permutation(tuple(inv))


def from_cycle(n: int, cycle) -> Permutation:
    """Permutation of {1..n} acting cyclically on ``cycle``, fixing the rest.

    >>> from_cycle(4, [1, 2, 3]).images
    (2, 3, 1, 4)
    """
    cycle = list(cycle)
    if len(set(cycle)) != len(cycle):
        raise ValueError(f"cycle {cycle!r} has repeated points")
    images = list(range(1, n + 1))
    for pos, point in enumerate(cycle):
        if not 1 <= point <= n:
            raise ValueError(f"cycle point {point} outside 1..{n}")
        images[point - 1] = cycle[(pos + 1) % len(cycle)]
    return Permutation(tuple(images))


def from_cycles(n: int, cycles) -> Permutation:
    """Left-to-right product of cycles (the leftmost cycle acts first)."""
    result = identity(n)
    for cyc in cycles:
        result = compose(result, from_cycle(n, cyc))
    return result


def sign(p: Permutation) -> int:
    """Parity: +1 for even permutations, -1 for odd ones."""
    return 1 if _inversions(p.images) % 2 == 0 else -1


def cycle_string(p: Permutation) -> str:
    """Disjoint-cycle rendering, e.g. ``(1,2,3)``; fixed points omitted."""
    seen = [False] * p.n
    out = []
    for start in range(1, p.n + 1):
        if seen[start - 1] or p.images[start - 1] == start:
            continue
        cyc = [start]
        seen[start - 1] = True
        point = p.images[start - 1]
        while point != start:
            cyc.append(point)
            seen[point - 1] = True
            point = p.images[point - 1]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


def _inversions(images) -> int:
    inv = 0
    for a in range(len(images)):
        for b in range(a + 1, len(images)):
            if images[a] > images[b]:
                inv += 1
    return inv


def _lehmer_rank(images) -> int:
    n = len(images)
    r = 0
    for a in range(n):
        smaller_later = sum(1 for b in range(a + 1, n) if images[b] < images[a])
        r += smaller_later * factorial(n - 1 - a)
    return r


def _lehmer_unrank(n: int, r: int) -> list[int]:
    avail = list(range(1, n + 1))
    images = []
    for a in range(n):
        f = factorial(n - 1 - a)
        digit, r = divmod(r, f)
        images.append(avail.pop(digit))
    return images


def alternating_order(n: int) -> int:
    """|A_n|: n!/2 for n >= 2, and 1 for n = 1."""
    return factorial(n) // 2 if n >= 2 else 1


def rank(p: Permutation) -> int:
    """Index of the even permutation ``p`` in lexicographic order of A_n."""
    if sign(p) != 1:
        raise ValueError(f"rank is defined for even permutations only, got {p.images!r}")
    return _lehmer_rank(p.images) // 2


def unrank(n: int, v: int) -> Permutation:
    """Inverse of :func:`rank`: the v-th even permutation of {1..n}."""
    order = alternating_order(n)
    if not 0 <= v < order:
        raise ValueError(f"alternating rank {v} outside [0, {order})")
    if n == 1:
        return identity(1)
    images = _lehmer_unrank(n, 2 * v)
    # The pair {2v, 2v+1} differs by swapping the last two entries and
    # contains exactly one even permutation.
    if _inversions(images) % 2 != 0:
        images[-1], images[-2] = images[-2], images[-1]
    return Permutation(tuple(images))


def enumerate_alternating(n: int) -> list[Permutation]:
    """All n!/2 even permutations of {1..n} in rank order."""
    if not 3 <= n <= MAX_POINTS:
        raise ValueError(f"enumeration supported for 3 <= n <= {MAX_POINTS}, got {n}")
    return [Permutation(tuple(int(x) for x in row)) for row in alternating_images(n)]


@lru_cache(maxsize=None)
def alternating_images(n: int) -> np.ndarray:
    """(n!/2, n) uint8 array of even permutations in lexicographic order.

    Row v is the image tuple of ``unrank(n, v)``; the graph and partition
    modules index vertices straight into this array.  The returned array is
    cached and marked read-only.
    """
    if not 1 <= n <= MAX_POINTS:
        raise ValueError(f"point count must be in 1..{MAX_POINTS}, got {n}")
    full = np.array(list(_all_permutations(range(1, n + 1))), dtype=np.uint8)
    inv = np.zeros(len(full), dtype=np.int64)
    for a in range(n - 1):
        inv += (full[:, a + 1 :] < full[:, a : a + 1]).sum(axis=1)
    verts = np.ascontiguousarray(full[inv % 2 == 0])
    verts.setflags(write=False)
    return verts


def alternating_ranks(images: np.ndarray) -> np.ndarray:
    """Vectorized :func:`rank` over rows of an array of even image tuples."""
    m, n = images.shape
    ranks = np.zeros(m, dtype=np.int64)
    for a in range(n - 1):
        smaller_later = (images[:, a + 1 :] < images[:, a : a + 1]).sum(
            axis=1, dtype=np.int64
        )
        ranks += smaller_later * factorial(n - 1 - a)
    return ranks // 2


_CYCLE_RE = re.compile(r"\(([0-9,]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation: ``"(1,2,3)"`` or a product ``"(1,2,3)(4,5,6)"``.

    Whitespace-insensitive; points are 1-based; cycles in a product act left
    to right.  ``"()"`` parses to the identity.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty cycle expression")
    cycles = []
    pos = 0
    for m in _CYCLE_RE.finditer(s):
        if m.start() != pos:
            raise ValueError(f"malformed cycle notation: {text!r}")
        body = m.group(1)
        if body:
            try:
                cycles.append([int(x) for x in body.split(",")])
            except ValueError:
                raise ValueError(f"malformed cycle notation: {text!r}") from None
        pos = m.end()
    if pos != len(s):
        raise ValueError(f"malformed cycle notation: {text!r}")
    return from_cycles(n, cycles)


def parse_generator_list(text: str, n: int) -> list[Permutation]:
    """Parse a list of cycle products separated by ``;`` or top-level ``,``.

    Example: ``"(1,2,3),(1,3,2)"`` or ``"(1,2,3)(4,5,6); (1,3,2)"``.
    """
    items = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        if ch in ",;" and depth == 0:
            items.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    items.append("".join(current))
    items = [item for item in items if item.strip()]
    if not items:
        raise ValueError("empty generator list")
    return [parse_cycles(item, n) for item in items]
