"""Small graph families and generators used by tests and the verifier."""

from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator

from .errors import InvalidArgument
from .graph import Graph

__all__ = [
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_graph",
    "random_connected_graph",
    "connected_graphs_up_to_iso",
]


def _labels(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def path_graph(n: int) -> Graph:
    labs = _labels(n)
    return Graph(labs, [(labs[i], labs[i + 1]) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidArgument("a cycle needs at least three vertices")
    labs = _labels(n)
    edges = [(labs[i], labs[i + 1]) for i in range(n - 1)] + [(labs[-1], labs[0])]
    return Graph(labs, edges)


def star_graph(n: int) -> Graph:
    """Star with one center and n - 1 leaves."""
    labs = _labels(n)
    return Graph(labs, [(labs[0], labs[i]) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    labs = _labels(n)
    return Graph(labs, list(combinations(labs, 2)))


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi edges plus a random spanning tree to force connectivity."""
    if n < 1:
        raise InvalidArgument("n must be positive")
    rng = random.Random(seed)
    labs = _labels(n)
    edge_set: set[tuple[int, int]] = set()
    order = list(range(n))
    rng.shuffle(order)
    for k in range(1, n):
        a = order[k]
        b = order[rng.randrange(k)]
        edge_set.add((min(a, b), max(a, b)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edge_set.add((i, j))
    edges = [(labs[i], labs[j]) for i, j in sorted(edge_set)]
    return Graph(labs, edges)


def _canonical_edges(n: int, edges: frozenset[tuple[int, int]]) -> tuple:
    best = None
    for perm in permutations(range(n)):
        img = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or img < best:
            best = img
    return best  # type: ignore[return-value]


def connected_graphs_up_to_iso(n: int) -> Iterator[Graph]:
    """All connected graphs on n <= 6 vertices, one per isomorphism class.

    Canonical form by minimizing the sorted edge list over all vertex
    permutations; fine at this scale.
    """
    if n > 6:
        raise InvalidArgument("isomorphism enumeration capped at n = 6")
    labs = _labels(n)
    pairs = list(combinations(range(n), 2))
    seen: set[tuple] = set()
    for bits in range(1 << len(pairs)):
        if bits.bit_count() < n - 1:
            continue
        edges = frozenset(p for k, p in enumerate(pairs) if bits >> k & 1)
        g = Graph(labs, [(labs[a], labs[b]) for a, b in sorted(edges)])
        if not g.is_connected():
            continue
        canon = _canonical_edges(n, edges)
        if canon not in seen:
            seen.add(canon)
            yield g
