"""Hypergraph data model, structural predicates and the closed-removal operation."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

Edge = tuple[int, ...]


class HypergraphError(ValueError):
    """Raised when a hypergraph violates its invariants or cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Hypergraph:
    """Vertices are ``0..n-1``; ``edges`` is an ordered tuple of vertex tuples.

    The constructor stores edges as given so that :func:`validate` can report
    malformed input.  Use :meth:`from_edges` to build a canonical, checked
    instance.
    """

    n: int
    edges: tuple[Edge, ...]
    k: Optional[int] = None
    blocks: Optional[dict[str, tuple[int, int]]] = field(default=None, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]], k: Optional[int] = None,
                   blocks: Optional[dict[str, tuple[int, int]]] = None) -> "Hypergraph":
        # sorted() keeps repeated ids, so validate still reports them
        h = cls(n, tuple(tuple(sorted(e)) for e in edges), k, blocks)
        problems = validate(h)
        if problems:
            raise HypergraphError("; ".join(problems))
        return h

    @property
    def m(self) -> int:
        return len(self.edges)

    def incidence(self) -> list[list[int]]:
        """Edge indices incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return inc

    def canonical(self) -> "Hypergraph":
        """Same hypergraph with edges sorted lexicographically."""
        return Hypergraph(self.n, tuple(sorted(self.edges)), self.k, self.blocks)


def validate(h: Hypergraph) -> list[str]:
    """Return a list of invariant violations; empty means valid."""
    problems = []
    if h.n < 0:
        problems.append(f"negative vertex count {h.n}")
    seen: dict[frozenset, int] = {}
    for i, e in enumerate(h.edges):
        bad = [v for v in e if not 0 <= v < h.n]
        if bad:
            problems.append(f"edge {i}: vertex id out of range {bad}")
        if len(set(e)) != len(e):
            problems.append(f"edge {i}: repeated vertex id")
        elif list(e) != sorted(e):
            problems.append(f"edge {i}: vertex ids not sorted")
        if h.k is not None and len(set(e)) != h.k:
            problems.append(f"edge {i}: cardinality {len(set(e))} != k={h.k}")
        key = frozenset(e)
        if key in seen:
            problems.append(f"edge {i}: duplicate edge (same as edge {seen[key]})")
        else:
            seen[key] = i
    return problems


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    histogram: dict[int, int]   # degree i -> n_i, for i >= 1 only

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def count(self, i: int) -> int:
        return self.histogram.get(i, 0)

    def count_at_least(self, i: int) -> int:
        return sum(c for d, c in self.histogram.items() if d >= i)


def degree_profile(h: Hypergraph) -> DegreeProfile:
    deg = [0] * h.n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    hist = Counter(d for d in deg if d > 0)
    return DegreeProfile(tuple(deg), dict(sorted(hist.items())))


def neighbors(h: Hypergraph, u: int) -> set[int]:
    if not 0 <= u < h.n:
        raise HypergraphError(f"vertex {u} out of range for n={h.n}")
    out: set[int] = set()
    for e in h.edges:
        if u in e:
            out.update(e)
    out.discard(u)
    return out


def _intersection_size(e: Sequence[int], f: Sequence[int]) -> int:
    # both sorted
    i = j = count = 0
    while i < len(e) and j < len(f):
        if e[i] == f[j]:
            count += 1
            i += 1
            j += 1
        elif e[i] < f[j]:
            i += 1
        else:
            j += 1
    return count


def edges_overlap(e: Sequence[int], f: Sequence[int]) -> bool:
    """Two edges overlap when they share at least two vertices."""
    return _intersection_size(sorted(e), sorted(f)) >= 2


def is_linear(h: Hypergraph) -> bool:
    return not any(edges_overlap(e, f) for e, f in combinations(h.edges, 2))


def remove_closed(h: Hypergraph, u_set: Iterable[int]) -> tuple[Hypergraph, dict[int, int]]:
    """Compute ``H - U`` and the old-to-new vertex id map.

    Deletes U, every edge meeting U, and every vertex whose incident edges
    were all deleted.  Vertices that were already isolated stay.
    """
    U = set(u_set)
    bad = sorted(u for u in U if not 0 <= u < h.n)
    if bad:
        raise HypergraphError(f"vertex ids out of range: {bad}")
    kept_edges = [e for e in h.edges if U.isdisjoint(e)]
    deg_before = degree_profile(h).degrees
    alive = set()
    for e in kept_edges:
        alive.update(e)
    survivors = [v for v in range(h.n)
                 if v not in U and (v in alive or deg_before[v] == 0)]
    mapping = {old: new for new, old in enumerate(survivors)}
    edges = tuple(tuple(mapping[v] for v in e) for e in kept_edges)
    return Hypergraph(len(survivors), edges, h.k), mapping


def induced_on(h: Hypergraph, vertices: Sequence[int]) -> Hypergraph:
    """Sub-hypergraph on ``vertices`` keeping edges fully inside it, re-indexed."""
    mapping = {old: new for new, old in enumerate(sorted(vertices))}
    edges = tuple(tuple(mapping[v] for v in e) for e in h.edges
                  if all(v in mapping for v in e))
    return Hypergraph(len(mapping), edges, h.k)


def component_vertex_sets(h: Hypergraph) -> list[list[int]]:
    """Vertex sets of the edge-connected components, ordered by smallest id."""
    inc = h.incidence()
    seen = [False] * h.n
    comps = []
    for start in range(h.n):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for ei in inc[v]:
                for w in h.edges[ei]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
        comps.append(sorted(comp))
    return comps


def connected_components(h: Hypergraph) -> list[Hypergraph]:
    return [induced_on(h, c) for c in component_vertex_sets(h)]


def is_connected(h: Hypergraph) -> bool:
    return len(component_vertex_sets(h)) <= 1


# -- interchange format ----------------------------------------------------

def to_dict(h: Hypergraph) -> dict:
    c = h.canonical()
    d = {"n": c.n, "k": c.k, "edges": [list(e) for e in c.edges]}
    if h.blocks is not None:
        d["blocks"] = {name: list(r) for name, r in h.blocks.items()}
    return d


def dumps(h: Hypergraph) -> str:
    """Canonical text form: one edge per line so diagnostics can cite lines."""
    d = to_dict(h)
    lines = ["{", f'  "n": {d["n"]},', f'  "k": {json.dumps(d["k"])},']
    edge_lines = [f"    {json.dumps(e)}" for e in d["edges"]]
    if edge_lines:
        lines.append('  "edges": [')
        lines.append(",\n".join(edge_lines))
        lines.append("  ]" + ("," if "blocks" in d else ""))
    else:
        lines.append('  "edges": []' + ("," if "blocks" in d else ""))
    if "blocks" in d:
        items = [f"    {json.dumps(name)}: {json.dumps(r)}" for name, r in d["blocks"].items()]
        lines.append('  "blocks": {')
        lines.append(",\n".join(items))
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _edge_line(text: str, index: int) -> Optional[int]:
    # locate the line of the index-th edge list inside "edges": [...]
    start = text.find('"edges"')
    if start < 0:
        return None
    depth, count = 0, -1
    for pos in range(text.index("[", start), len(text)):
        ch = text[pos]
        if ch == "[":
            depth += 1
            if depth == 2:
                count += 1
                if count == index:
                    return text.count("\n", 0, pos) + 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                return None
    return None


def loads(text: str) -> Hypergraph:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(exc.msg, exc.lineno) from exc
    if not isinstance(d, dict):
        raise HypergraphError("top level must be an object", 1)
    for key in ("n", "edges"):
        if key not in d:
            raise HypergraphError(f"missing field {key!r}")
    n, k, edges = d["n"], d.get("k"), d["edges"]
    if not isinstance(n, int) or (k is not None and not isinstance(k, int)):
        raise HypergraphError("fields 'n' and 'k' must be integers")
    if not isinstance(edges, list) or not all(
            isinstance(e, list) and all(isinstance(v, int) for v in e) for e in edges):
        raise HypergraphError("'edges' must be a list of integer lists")
    blocks = d.get("blocks")
    if blocks is not None:
        blocks = {name: tuple(r) for name, r in blocks.items()}
    h = Hypergraph(n, tuple(tuple(sorted(e)) for e in edges), k, blocks)
    problems = validate(h)
    if problems:
        first = problems[0]
        line = None
        if first.startswith("edge "):
            line = _edge_line(text, int(first.split()[1].rstrip(":")))
        raise HypergraphError("; ".join(problems), line)
    return h


def load(path) -> Hypergraph:
    with open(path) as fh:
        return loads(fh.read())


def save(h: Hypergraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(h))
