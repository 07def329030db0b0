"""The 1-skeleton of the G-associahedron as an implicit search graph.

Vertices are elimination trees, edges are swaps. Searches deduplicate
by canonical key and expand frontiers in sorted key order, so witnesses
and counts are reproducible. All weighted totals are Python integers
(the reduction weights exceed 64 bits by design).
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .elimtree import ElimTree, SwapMove
from .errors import InvalidArgument, ResourceLimit
from .graph import Graph

__all__ = [
    "ReconfigSequence",
    "weighted_length",
    "validate_sequence",
    "enumerate_all",
    "distance",
    "shortest_path",
    "weighted_distance",
    "weighted_shortest_path",
    "diameter",
    "explicit_flip_graph",
    "flip_graph_dot",
]

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class ReconfigSequence:
    """A walk in the flip graph: a start tree plus an ordered list of moves."""

    start: ElimTree
    moves: tuple[SwapMove, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.moves)


def validate_sequence(g: Graph, seq: ReconfigSequence) -> tuple[bool, ElimTree]:
    """Replay the moves; returns (all moves legal, final tree reached).

    On an illegal move the tree last reached is returned with ``False``.
    """
    tree = seq.start
    for move in seq.moves:
        try:
            tree = tree.apply_swap(move)
        except InvalidArgument:
            return False, tree
    return True, tree


def weighted_length(seq: ReconfigSequence, w: Mapping[str, int]) -> int:
    """Total weight sum of w(u) * w(v) over the moves of a valid sequence."""
    ok, _ = validate_sequence(seq.start.graph, seq)
    if not ok:
        raise InvalidArgument("sequence does not replay to a valid tree")
    return sum(w[m.u] * w[m.v] for m in seq.moves)


def _neighbors(tree: ElimTree) -> list[tuple[SwapMove, ElimTree]]:
    return [(m, tree.apply_swap(m)) for m in tree.enumerate_swaps()]


def enumerate_all(g: Graph, cap: int = DEFAULT_NODE_BUDGET) -> list[ElimTree]:
    """All elimination trees of ``g`` by BFS over swaps, sorted by key.

    The flip graph is connected, so any start tree reaches everything.
    """
    start = ElimTree.from_ordering(g, g.labels)
    seen: dict[bytes, ElimTree] = {start.canonical_key(): start}
    frontier = [start]
    while frontier:
        nxt = []
        for tree in frontier:
            for _, nb in _neighbors(tree):
                key = nb.canonical_key()
                if key not in seen:
                    if len(seen) >= cap:
                        raise ResourceLimit(f"enumeration cap {cap} exceeded")
                    seen[key] = nb
                    nxt.append(nb)
        frontier = nxt
    return [seen[k] for k in sorted(seen)]


def _check_pair(g: Graph, t1: ElimTree, t2: ElimTree) -> None:
    if t1.graph.labels != g.labels or t2.graph.labels != g.labels:
        raise InvalidArgument("trees do not belong to the given graph")


def distance(
    g: Graph, t1: ElimTree, t2: ElimTree, node_budget: int = DEFAULT_NODE_BUDGET
) -> int:
    """Flip distance by bidirectional BFS over the implicit graph."""
    _check_pair(g, t1, t2)
    k1, k2 = t1.canonical_key(), t2.canonical_key()
    if k1 == k2:
        return 0
    dist_a: dict[bytes, int] = {k1: 0}
    dist_b: dict[bytes, int] = {k2: 0}
    frontier_a: list[ElimTree] = [t1]
    frontier_b: list[ElimTree] = [t2]
    depth_a = depth_b = 0
    expanded = 0
    while True:
        if not frontier_a or not frontier_b:
            raise AssertionError("flip graph is connected; search must meet")
        swap_sides = len(frontier_a) > len(frontier_b)
        if swap_sides:
            dist_a, dist_b = dist_b, dist_a
            frontier_a, frontier_b = frontier_b, frontier_a
            depth_a, depth_b = depth_b, depth_a
        nxt = []
        best = None
        for tree in frontier_a:
            expanded += 1
            if expanded > node_budget:
                raise ResourceLimit(f"node budget {node_budget} exceeded")
            for _, nb in _neighbors(tree):
                key = nb.canonical_key()
                if key in dist_b:
                    cand = depth_a + 1 + dist_b[key]
                    if best is None or cand < best:
                        best = cand
                if key not in dist_a:
                    dist_a[key] = depth_a + 1
                    nxt.append(nb)
        depth_a += 1
        if best is not None:
            # Any remaining meeting point at this depth cannot be shorter.
            return best
        frontier_a = nxt
        if swap_sides:
            dist_a, dist_b = dist_b, dist_a
            frontier_a, frontier_b = frontier_b, frontier_a
            depth_a, depth_b = depth_b, depth_a


def shortest_path(
    g: Graph, t1: ElimTree, t2: ElimTree, node_budget: int = DEFAULT_NODE_BUDGET
) -> ReconfigSequence:
    """A shortest reconfiguration sequence; ties broken by canonical key."""
    _check_pair(g, t1, t2)
    target = t2.canonical_key()
    start_key = t1.canonical_key()
    if start_key == target:
        return ReconfigSequence(t1, ())
    pred: dict[bytes, tuple[bytes, SwapMove]] = {}
    seen = {start_key}
    frontier: list[tuple[bytes, ElimTree]] = [(start_key, t1)]
    expanded = 0
    found = False
    while frontier and not found:
        nxt = []
        for key, tree in frontier:
            expanded += 1
            if expanded > node_budget:
                raise ResourceLimit(f"node budget {node_budget} exceeded")
            for move, nb in _neighbors(tree):
                nk = nb.canonical_key()
                if nk not in seen:
                    seen.add(nk)
                    pred[nk] = (key, move)
                    if nk == target:
                        found = True
                    nxt.append((nk, nb))
        # Sorted expansion order makes the predecessor choice canonical.
        nxt.sort(key=lambda item: item[0])
        frontier = nxt
    if not found:
        raise AssertionError("flip graph is connected; target must be found")
    moves = []
    key = target
    while key != start_key:
        key, move = pred[key]
        moves.append(move)
    return ReconfigSequence(t1, tuple(reversed(moves)))


def weighted_distance(
    g: Graph,
    w: Mapping[str, int],
    t1: ElimTree,
    t2: ElimTree,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> int:
    """Minimum total swap weight, by uniform-cost search with exact integers."""
    _check_pair(g, t1, t2)
    for lab in g.labels:
        if w[lab] <= 0:
            raise InvalidArgument(f"weights must be positive, w({lab!r}) = {w[lab]}")
    target = t2.canonical_key()
    start_key = t1.canonical_key()
    heap: list[tuple[int, bytes, ElimTree]] = [(0, start_key, t1)]
    settled: set[bytes] = set()
    best: dict[bytes, int] = {start_key: 0}
    expanded = 0
    while heap:
        d, key, tree = heapq.heappop(heap)
        if key in settled:
            continue
        if key == target:
            return d
        settled.add(key)
        expanded += 1
        if expanded > node_budget:
            raise ResourceLimit(f"node budget {node_budget} exceeded")
        for move, nb in _neighbors(tree):
            nk = nb.canonical_key()
            if nk in settled:
                continue
            nd = d + w[move.u] * w[move.v]
            if nk not in best or nd < best[nk]:
                best[nk] = nd
                heapq.heappush(heap, (nd, nk, nb))
    raise AssertionError("flip graph is connected; target must be reached")


def weighted_shortest_path(
    g: Graph,
    w: Mapping[str, int],
    t1: ElimTree,
    t2: ElimTree,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ReconfigSequence:
    """A minimum-weight reconfiguration sequence (uniform-cost search with
    predecessors; ties broken by canonical key through the heap order)."""
    _check_pair(g, t1, t2)
    for lab in g.labels:
        if w[lab] <= 0:
            raise InvalidArgument(f"weights must be positive, w({lab!r}) = {w[lab]}")
    target = t2.canonical_key()
    start_key = t1.canonical_key()
    heap: list[tuple[int, bytes, ElimTree]] = [(0, start_key, t1)]
    settled: set[bytes] = set()
    best: dict[bytes, int] = {start_key: 0}
    pred: dict[bytes, tuple[bytes, SwapMove]] = {}
    expanded = 0
    while heap:
        d, key, tree = heapq.heappop(heap)
        if key in settled:
            continue
        if key == target:
            moves = []
            while key != start_key:
                key, move = pred[key]
                moves.append(move)
            return ReconfigSequence(t1, tuple(reversed(moves)))
        settled.add(key)
        expanded += 1
        if expanded > node_budget:
            raise ResourceLimit(f"node budget {node_budget} exceeded")
        for move, nb in _neighbors(tree):
            nk = nb.canonical_key()
            if nk in settled:
                continue
            nd = d + w[move.u] * w[move.v]
            if nk not in best or nd < best[nk]:
                best[nk] = nd
                pred[nk] = (key, move)
                heapq.heappush(heap, (nd, nk, nb))
    raise AssertionError("flip graph is connected; target must be reached")


# -- explicit materialization and diameter ------------------------------


def explicit_flip_graph(
    g: Graph, cap: int = DEFAULT_NODE_BUDGET
) -> tuple[list[ElimTree], list[list[int]]]:
    """Materialize the flip graph: trees sorted by key plus adjacency lists."""
    trees = enumerate_all(g, cap)
    ids = {t.canonical_key(): i for i, t in enumerate(trees)}
    adj: list[list[int]] = []
    for tree in trees:
        adj.append(sorted(ids[nb.canonical_key()] for _, nb in _neighbors(tree)))
    return trees, adj


def _bfs_ecc(adj: list[list[int]], source: int) -> tuple[list[int], int]:
    n = len(adj)
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    ecc = 0
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dv + 1
                if dv + 1 > ecc:
                    ecc = dv + 1
                queue.append(u)
    return dist, ecc


def _chunked_eccentricities(adj: list[list[int]], sources: Sequence[int]) -> list[int]:
    """Eccentricities of many sources at once via scipy's compiled BFS."""
    import numpy as np
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import dijkstra

    n = len(adj)
    indptr = np.zeros(n + 1, dtype=np.int64)
    for i, nbrs in enumerate(adj):
        indptr[i + 1] = indptr[i] + len(nbrs)
    indices = np.fromiter(
        (u for nbrs in adj for u in nbrs), dtype=np.int64, count=int(indptr[-1])
    )
    data = np.ones(len(indices), dtype=np.int8)
    mat = csr_matrix((data, indices, indptr), shape=(n, n))
    eccs: list[int] = []
    chunk = max(1, min(256, len(sources)))
    for lo in range(0, len(sources), chunk):
        idx = np.asarray(sources[lo : lo + chunk], dtype=np.int64)
        dist = dijkstra(mat, unweighted=True, indices=idx)
        eccs.extend(int(x) for x in dist.max(axis=1))
    return eccs


def diameter(
    g: Graph,
    exact_allpairs: bool = False,
    cap: int = DEFAULT_NODE_BUDGET,
) -> int:
    """Exact flip-graph diameter.

    The default mode prunes with eccentricity bounds from a central
    vertex (double sweep + iFUB-style candidate processing); the
    ``exact_allpairs`` mode computes every eccentricity for verification.
    Both return the same value.
    """
    trees, adj = explicit_flip_graph(g, cap)
    n = len(adj)
    if n <= 2:
        return n - 1

    if exact_allpairs:
        return max(_chunked_eccentricities(adj, list(range(n))))

    d0, _ = _bfs_ecc(adj, 0)
    a = max(range(n), key=d0.__getitem__)
    da, ecc_a = _bfs_ecc(adj, a)
    b = max(range(n), key=da.__getitem__)
    db, ecc_b = _bfs_ecc(adj, b)
    lb = max(ecc_a, ecc_b)
    # Midpoint of an a-b geodesic serves as the pruning center.
    half = da[b] // 2
    center = min(
        (v for v in range(n) if da[v] + db[v] == da[b] and da[v] == half),
        default=a,
    )
    dc, ecc_c = _bfs_ecc(adj, center)
    lb = max(lb, ecc_c)
    # Any vertex v has ecc(v) <= dc[v] + ecc_c, and a pair realizing a
    # distance > 2i has an endpoint deeper than level i from the center.
    order = sorted(range(n), key=lambda v: -dc[v])
    pos = 0
    while pos < len(order):
        v = order[pos]
        if lb >= 2 * dc[v]:
            break
        batch = []
        level = dc[v]
        while pos < len(order) and dc[order[pos]] == level:
            u = order[pos]
            if dc[u] + ecc_c > lb:
                batch.append(u)
            pos += 1
        if batch:
            if len(batch) > 32 and n > 4096:
                lb = max(lb, max(_chunked_eccentricities(adj, batch)))
            else:
                for u in batch:
                    _, e = _bfs_ecc(adj, u)
                    if e > lb:
                        lb = e
    return lb


def flip_graph_dot(g: Graph, cap: int = DEFAULT_NODE_BUDGET) -> str:
    """DOT export of the full flip graph with ordering labels on nodes."""
    trees, adj = explicit_flip_graph(g, cap)
    lines = ["graph flipgraph {"]
    for i, tree in enumerate(trees):
        label = " ".join(tree.to_ordering())
        lines.append(f'  n{i} [label="{label}"];')
    for i, nbrs in enumerate(adj):
        for j in nbrs:
            if i < j:
                lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
