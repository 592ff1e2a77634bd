"""Exact transversal number: branch-and-bound, brute-force oracle and greedy bound."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .hypergraph import Hypergraph


class LimitExceeded(Exception):
    """No transversal of size <= limit exists."""


@dataclass(frozen=True)
class TransversalResult:
    tau: int
    witness: tuple[int, ...]
    nodes_explored: int = 0


def is_transversal(h: Hypergraph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(not s.isdisjoint(e) for e in h.edges)


def _check_no_empty_edge(h: Hypergraph) -> None:
    if any(len(e) == 0 for e in h.edges):
        raise ValueError("hypergraph has an empty edge; no transversal exists")


def tau_bruteforce(h: Hypergraph, limit: Optional[int] = None) -> TransversalResult:
    """Try every vertex subset by increasing size, lexicographically within a size."""
    _check_no_empty_edge(h)
    limit = h.n if limit is None else limit
    tried = 0
    for size in range(0, min(limit, h.n) + 1):
        for s in combinations(range(h.n), size):
            tried += 1
            if is_transversal(h, s):
                return TransversalResult(size, s, tried)
    raise LimitExceeded(f"no transversal of size <= {limit}")


def disjoint_edge_packing(edges: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    """Greedy family of pairwise-disjoint edges, smallest edges first.

    Each edge in the family needs its own transversal vertex, so its size is
    a lower bound on tau.
    """
    used: set[int] = set()
    packing = []
    for e in sorted((tuple(sorted(e)) for e in edges), key=lambda e: (len(e), e)):
        if used.isdisjoint(e):
            packing.append(e)
            used.update(e)
    return packing


def packing_lower_bound(h: Hypergraph) -> int:
    return len(disjoint_edge_packing(h.edges))


def greedy_transversal(h: Hypergraph) -> tuple[int, ...]:
    """Repeatedly take a vertex hitting the most unhit edges (smallest id on ties)."""
    _check_no_empty_edge(h)
    uncovered = [set(e) for e in h.edges]
    chosen = []
    while uncovered:
        deg: dict[int, int] = {}
        for e in uncovered:
            for v in e:
                deg[v] = deg.get(v, 0) + 1
        v = min(deg, key=lambda u: (-deg[u], u))
        chosen.append(v)
        uncovered = [e for e in uncovered if v not in e]
    return tuple(sorted(chosen))


class _Search:
    def __init__(self, h: Hypergraph):
        self.best: tuple[int, ...] = greedy_transversal(h)
        self.nodes = 0

    def run(self, chosen: tuple[int, ...], uncovered: list[frozenset]) -> None:
        self.nodes += 1
        # unit-edge forcing
        while True:
            if any(not e for e in uncovered):
                return
            unit = next((e for e in uncovered if len(e) == 1), None)
            if unit is None:
                break
            (v,) = unit
            chosen = chosen + (v,)
            uncovered = [e for e in uncovered if v not in e]
        if not uncovered:
            if len(chosen) < len(self.best):
                self.best = tuple(sorted(chosen))
            return
        if len(chosen) + len(disjoint_edge_packing(uncovered)) >= len(self.best):
            return
        edge = min(uncovered, key=lambda e: (len(e), sorted(e)))
        deg = {v: 0 for v in edge}
        for e in uncovered:
            for v in e & edge:
                deg[v] += 1
        order = sorted(edge, key=lambda v: (-deg[v], v))
        for i, v in enumerate(order):
            banned = frozenset(order[:i])
            rest = [e - banned for e in uncovered if v not in e]
            self.run(chosen + (v,), rest)


def _lex_first_transversal(h: Hypergraph, size: int) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest transversal with ``size`` vertices, if any."""
    edges = [frozenset(e) for e in h.edges]

    def dfs(start: int, chosen: tuple[int, ...], uncovered: list[frozenset]):
        if not uncovered:
            return chosen if len(chosen) == size else None
        room = size - len(chosen)
        if room == 0:
            return None
        tails = [frozenset(v for v in e if v >= start) for e in uncovered]
        if any(not t for t in tails) or len(disjoint_edge_packing(tails)) > room:
            return None
        candidates = sorted(set().union(*tails))
        for v in candidates:
            found = dfs(v + 1, chosen + (v,), [e for e in uncovered if v not in e])
            if found is not None:
                return found
        return None

    return dfs(0, (), edges)


def tau_exact(h: Hypergraph) -> TransversalResult:
    """Exact transversal number by branch-and-bound.

    Branches on the vertices of a smallest uncovered edge (highest degree
    first, earlier siblings excluded in later branches) and prunes with a
    disjoint-edge packing bound.  The returned witness is the
    lexicographically smallest minimum transversal, so it does not depend on
    search order.
    """
    _check_no_empty_edge(h)
    search = _Search(h)
    search.run((), [frozenset(e) for e in h.edges])
    tau = len(search.best)
    witness = _lex_first_transversal(h, tau)
    assert witness is not None
    return TransversalResult(tau, witness, search.nodes)
