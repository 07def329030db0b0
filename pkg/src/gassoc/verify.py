"""Verification suites shared by the CLI and the acceptance tests.

Each suite exhaustively checks a lemma-level property at desk scale and
returns a report of what was checked and every failure found.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from heapq import heappop, heappush
from itertools import product

from .elimtree import ElimTree, SwapMove, project
from .flipgraph import (
    ReconfigSequence,
    enumerate_all,
    explicit_flip_graph,
    weighted_length,
)
from .graph import Graph, induced_subgraph, iter_bits
from .polymatroid import GraphAssocRank, check_axioms, verify_realization
from .reductions import (
    BlowupInstance,
    blowup_tree,
    build_unweighted_instance,
    canonicalize_sequence,
    project_sequence,
)
from .smallgraphs import connected_graphs_up_to_iso, random_connected_graph

__all__ = [
    "SuiteReport",
    "verify_axioms_suite",
    "verify_realization_suite",
    "verify_projection_suite",
    "verify_blowup_suite",
    "SUITES",
    "reversal_violations",
    "averaging_inequality_holds",
]


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_axioms_suite(
    max_n: int = 5, random_n: int = 8, random_count: int = 100, seed: int = 0
) -> SuiteReport:
    """Rank axioms on every small connected graph plus seeded larger ones."""
    report = SuiteReport("axioms")
    for n in range(2, max_n + 1):
        for g in connected_graphs_up_to_iso(n):
            rep = check_axioms(GraphAssocRank(g))
            report.checked += 1
            if not rep.ok:
                report.failures.append(f"n={n} edges={g.edges}: {rep.violations[:3]}")
    for k in range(random_count):
        g = random_connected_graph(random_n, 0.4, seed * 1000 + k)
        rep = check_axioms(GraphAssocRank(g))
        report.checked += 1
        if not rep.ok:
            report.failures.append(f"random seed={seed * 1000 + k}: {rep.violations[:3]}")
    return report


def verify_realization_suite(max_n: int = 5) -> SuiteReport:
    """Both vertex descriptions agree on every small connected graph."""
    report = SuiteReport("realization")
    for n in range(2, max_n + 1):
        for g in connected_graphs_up_to_iso(n):
            rep = verify_realization(g)
            report.checked += 1
            if not rep.ok:
                bad = [k for k, v in rep.checks.items() if not v]
                report.failures.append(f"n={n} edges={g.edges}: failed {bad}")
    return report


def _connected_subsets(g: Graph) -> list[list[str]]:
    out = []
    for mask in range(1, g.full_mask + 1):
        if g.component_of((mask & -mask).bit_length() - 1, mask) == mask:
            out.append([g.labels[i] for i in iter_bits(mask)])
    return out


def verify_projection_suite(max_n: int = 5) -> SuiteReport:
    """For every tree, swap, and connected vertex subset, the projection
    either stays fixed or changes by exactly the projected swap."""
    report = SuiteReport("projection")
    for n in range(2, max_n + 1):
        for g in connected_graphs_up_to_iso(n):
            subsets = _connected_subsets(g)
            for t in enumerate_all(g):
                projs = {
                    tuple(u): project(g, t, u).canonical_key() for u in subsets
                }
                for move in t.enumerate_swaps():
                    t2 = t.apply_swap(move)
                    for u in subsets:
                        report.checked += 1
                        p2 = project(g, t2, u)
                        if p2.canonical_key() == projs[tuple(u)]:
                            continue
                        if move.u in u and move.v in u:
                            p1 = project(g, t, u)
                            if (
                                p1.parent_of(move.v) == move.u
                                and p1.apply_swap(move).canonical_key()
                                == p2.canonical_key()
                            ):
                                continue
                        report.failures.append(
                            f"n={n} edges={g.edges} U={u} move={move}"
                        )
    return report


def _weighted_all_pairs(
    g: Graph, w: dict[str, int], trees: list[ElimTree]
) -> list[list[int]]:
    """All-pairs minimum swap weight on the explicit flip graph of g."""
    ids = {t.canonical_key(): i for i, t in enumerate(trees)}
    adj: list[list[tuple[int, int]]] = [[] for _ in trees]
    for i, t in enumerate(trees):
        for move in t.enumerate_swaps():
            j = ids[t.apply_swap(move).canonical_key()]
            adj[i].append((j, w[move.u] * w[move.v]))
    n = len(trees)
    out = []
    for s in range(n):
        dist = [None] * n
        heap = [(0, s)]
        while heap:
            d, v = heappop(heap)
            if dist[v] is not None:
                continue
            dist[v] = d
            for u, c in adj[v]:
                if dist[u] is None:
                    heappush(heap, (d + c, u))
        out.append(dist)
    return out


def _blowup_weight_sets(n: int, total: int, count: int, seed: int) -> list[tuple[int, ...]]:
    """Seeded weight vectors (entries >= 1, sum <= total, not all ones)."""
    rng = random.Random(seed)
    pool = [
        ws
        for ws in product(range(1, total), repeat=n)
        if sum(ws) <= total and max(ws) > 1
    ]
    rng.shuffle(pool)
    return [(1,) * n] + pool[:count]


def verify_blowup_suite(max_total: int = 7, seed: int = 0) -> SuiteReport:
    """Weighted flip distance equals unweighted distance in the blow-up,
    for every tree pair of every sampled instance."""
    report = SuiteReport("blowup-equiv")
    for n in range(2, min(5, max_total)):
        for gi, g in enumerate(connected_graphs_up_to_iso(n)):
            for ws in _blowup_weight_sets(n, max_total, 2, seed * 97 + gi):
                w = dict(zip(g.labels, ws))
                trees = enumerate_all(g)
                base = ElimTree.from_ordering(g, g.labels)
                inst = build_unweighted_instance(g, w, base, base)
                dist_w = _weighted_all_pairs(g, w, trees)
                trees_p, adj_p = explicit_flip_graph(inst.graph)
                ids_p = {t.canonical_key(): i for i, t in enumerate(trees_p)}
                lifted = [ids_p[blowup_tree(inst, t).canonical_key()] for t in trees]
                for i in range(len(trees)):
                    dist_p = _bfs_dist(adj_p, lifted[i])
                    for j in range(len(trees)):
                        report.checked += 1
                        if dist_w[i][j] != dist_p[lifted[j]]:
                            report.failures.append(
                                f"n={n} edges={g.edges} w={ws} pair=({i},{j}): "
                                f"{dist_w[i][j]} != {dist_p[lifted[j]]}"
                            )
    return report


def _bfs_dist(adj: list[list[int]], source: int) -> list[int]:
    from collections import deque

    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


SUITES = {
    "axioms": verify_axioms_suite,
    "realization": verify_realization_suite,
    "projection": verify_projection_suite,
    "blowup-equiv": verify_blowup_suite,
}


# -- helpers for the hardness-instance properties ------------------------


def reversal_violations(
    seq: ReconfigSequence, prefix: str = "u:"
) -> list[tuple[int, int, str, str]]:
    """Ancestor-order reversals of subdivision-vertex pairs that happen
    without any swap of two subdivision vertices in between.

    Returns (i, j, a, b) tuples: a is an ancestor of b after step i, the
    order is reversed after step j, and no two-subdivision swap occurs in
    moves i..j.
    """
    trees = [seq.start]
    for mv in seq.moves:
        trees.append(trees[-1].apply_swap(mv))
    g = trees[0].graph
    us = [lab for lab in g.labels if lab.startswith(prefix)]
    anc = [
        {(a, b) for a in us for b in us if a != b and a in t.ancestors(b)}
        for t in trees
    ]
    uu_step = [
        mv.u.startswith(prefix) and mv.v.startswith(prefix) for mv in seq.moves
    ]
    out = []
    for i in range(len(trees)):
        for j in range(i + 1, len(trees)):
            if any(uu_step[i:j]):
                continue
            for a, b in anc[i]:
                if (b, a) in anc[j]:
                    out.append((i, j, a, b))
    return out


def averaging_inequality_holds(
    inst: BlowupInstance, seq_prime: ReconfigSequence
) -> bool:
    """Some copy selection projects the blow-up sequence to a weighted
    sequence no longer than the blow-up sequence's unweighted length.

    Works directly on the raw sequence: swaps between two copies of the
    same vertex never change a projection, so no canonicalization is
    required here.
    """
    g = inst.source
    gp = inst.graph
    trees = [seq_prime.start]
    for mv in seq_prime.moves:
        trees.append(trees[-1].apply_swap(mv))

    def src(label: str) -> str:
        return label.split(":")[1]

    best = None
    for combo in product(*(range(1, inst.weights[v] + 1) for v in g.labels)):
        phi = dict(zip(g.labels, combo))
        u_phi = [inst.copy_map[v][phi[v] - 1] for v in g.labels]
        length = 0
        prev = project(gp, trees[0], u_phi).canonical_key()
        for mv, tree in zip(seq_prime.moves, trees[1:]):
            cur = project(gp, tree, u_phi).canonical_key()
            if cur != prev:
                length += inst.weights[src(mv.u)] * inst.weights[src(mv.v)]
                prev = cur
        if best is None or length < best:
            best = length
    return best is not None and best <= len(seq_prime.moves)
