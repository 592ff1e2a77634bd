"""Lower-bound instance, closed-form bounds on c_k, and a seeded random generator."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .hypergraph import Hypergraph, is_connected

BLOCK_ORDER = (
    "X1L", "X1M", "X1R",
    "X2L", "X2M", "X2R",
    "X3L", "X3M", "X3R",
    "Y12", "Y23", "Y31",
    "Z",
)


class DomainError(ValueError):
    """Parameter outside the domain where a construction is defined."""


@dataclass(frozen=True)
class BlockLayout:
    k: int
    sizes: dict[str, int]
    ranges: dict[str, tuple[int, int]]   # half-open [start, stop)

    @property
    def n(self) -> int:
        return sum(self.sizes.values())

    def ids(self, *names: str) -> list[int]:
        out = []
        for name in names:
            out.extend(range(*self.ranges[name]))
        return out


def block_layout(k: int) -> BlockLayout:
    if k < 2:
        raise DomainError(f"construction needs k >= 2, got k={k}")
    side = k // 4
    mid = int(k % 4 in (2, 3))
    y = int(k % 2 == 1)
    z = k - (2 * side + 2 * y + mid)
    sizes = {}
    for i in (1, 2, 3):
        sizes.update({f"X{i}L": side, f"X{i}M": mid, f"X{i}R": side})
    sizes.update({"Y12": y, "Y23": y, "Y31": y, "Z": z})
    ranges, start = {}, 0
    for name in BLOCK_ORDER:
        ranges[name] = (start, start + sizes[name])
        start += sizes[name]
    return BlockLayout(k, sizes, ranges)


def tuza_instance(k: int) -> Hypergraph:
    """The 6-edge, 2k-vertex k-uniform hypergraph with transversal number 3."""
    lay = block_layout(k)
    X = {i: (f"X{i}L", f"X{i}M", f"X{i}R") for i in (1, 2, 3)}
    edges = [
        lay.ids(*X[1], "Y12", *X[2]),
        lay.ids(*X[2], "Y23", *X[3]),
        lay.ids(*X[3], "Y31", *X[1]),
        lay.ids("Y12", "X2L", "X2M", "Z", "Y31", "X3R"),
        lay.ids("Y23", "X3L", "X3M", "Z", "Y12", "X1R"),
        lay.ids("Y31", "X1L", "X1M", "Z", "Y23", "X2R"),
    ]
    return Hypergraph.from_edges(lay.n, edges, k, blocks=dict(lay.ranges))


def proposed_lower_bound(k: int) -> Fraction:
    """tau/(n+m) of the 6-edge instance: 3/(2k+6)."""
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    return Fraction(3, 2 * k + 6)


def lai_chang_lower_bound(k: int) -> Fraction:
    """2 / (k + 1 + floor(sqrt k) + ceil(k / floor(sqrt k))), in integers."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    r = math.isqrt(k)
    return Fraction(2, k + 1 + r + -(-k // r))


def alon_upper_bound(k: float) -> float:
    """(ln k) / k."""
    if k <= 1:
        raise DomainError(f"k must be > 1, got {k}")
    return math.log(k) / k


def random_uniform_hypergraph(k: int, n: int, m: int,
                              seed: Union[int, Sequence[int], None] = None,
                              require_connected: bool = False,
                              require_distinct_edges: bool = True,
                              max_attempts: int = 1000,
                              rng: Optional[np.random.Generator] = None) -> Hypergraph:
    """Draw ``m`` uniformly random k-subsets of ``range(n)``.

    Distinctness is enforced per edge by rejection; connectivity by
    redrawing the whole instance.  Deterministic for a fixed seed.
    """
    if k < 1 or n < k:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    if require_distinct_edges and m > math.comb(n, k):
        raise DomainError(f"m={m} exceeds C({n},{k}) distinct edges")
    if require_connected and m == 0 and n > 1:
        raise DomainError("an edgeless hypergraph on more than one vertex is disconnected")
    rng = np.random.default_rng(seed) if rng is None else rng
    for _ in range(max_attempts):
        edges: list[tuple[int, ...]] = []
        seen = set()
        draws = 0
        while len(edges) < m:
            draws += 1
            if draws > max_attempts * max(m, 1):
                raise DomainError("edge rejection exceeded the attempt cap")
            e = tuple(sorted(int(v) for v in rng.choice(n, size=k, replace=False)))
            if require_distinct_edges and e in seen:
                continue
            seen.add(e)
            edges.append(e)
        h = Hypergraph.from_edges(n, edges, k) if require_distinct_edges else \
            Hypergraph(n, tuple(edges), k)
        if not require_connected or is_connected(h):
            return h
    raise DomainError(f"no connected instance after {max_attempts} attempts")
