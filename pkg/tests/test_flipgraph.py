"""Flip-graph searches: enumeration, distances, witnesses, diameter.

Counting oracles used here:
- path on n vertices has Catalan(n) elimination trees (binary tree bijection)
- star with k leaves: c(k) = 1 + k * c(k-1), c(0) = 1
- complete graph: n! chains, distance = inversion count
"""

from itertools import permutations

import pytest

from gassoc.elimtree import ElimTree, SwapMove
from gassoc.errors import InvalidArgument, ResourceLimit
from gassoc.flipgraph import (
    ReconfigSequence,
    diameter,
    distance,
    enumerate_all,
    explicit_flip_graph,
    flip_graph_dot,
    shortest_path,
    validate_sequence,
    weighted_distance,
    weighted_length,
    weighted_shortest_path,
)
from gassoc.smallgraphs import (
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_graph,
    star_graph,
)


def catalan(n):
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


def star_count(leaves):
    c = 1
    for k in range(1, leaves + 1):
        c = 1 + k * c
    return c


def inversions(sigma, tau):
    pos = {lab: i for i, lab in enumerate(tau)}
    order = [pos[lab] for lab in sigma]
    return sum(
        1
        for i in range(len(order))
        for j in range(i + 1, len(order))
        if order[i] > order[j]
    )


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_enumerate_path_catalan(n):
    assert len(enumerate_all(path_graph(n))) == catalan(n)


@pytest.mark.parametrize("leaves", [1, 2, 3, 4])
def test_enumerate_star(leaves):
    assert len(enumerate_all(star_graph(leaves + 1))) == star_count(leaves)


def test_enumerate_complete_factorial():
    assert len(enumerate_all(complete_graph(4))) == 24


def test_enumerate_cap():
    with pytest.raises(ResourceLimit):
        enumerate_all(complete_graph(5), cap=10)


def test_distance_zero_and_one():
    g = path_graph(4)
    t = ElimTree.from_ordering(g, g.labels)
    assert distance(g, t, t) == 0
    nb = t.apply_swap(t.enumerate_swaps()[0])
    assert distance(g, t, nb) == 1


def test_distance_matches_explicit_bfs():
    from collections import deque

    g = cycle_graph(5)
    trees, adj = explicit_flip_graph(g)
    dist = [-1] * len(trees)
    dist[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    for i in range(0, len(trees), 7):
        assert distance(g, trees[0], trees[i]) == dist[i]


def test_complete_graph_distance_is_inversions():
    g = complete_graph(4)
    base = ("1", "2", "3", "4")
    t_base = ElimTree.from_ordering(g, base)
    for sigma in permutations(base):
        t = ElimTree.from_ordering(g, sigma)
        assert distance(g, t_base, t) == inversions(base, sigma)


def test_shortest_path_witness_replays():
    g = cycle_graph(5)
    t1 = ElimTree.from_ordering(g, ["1", "2", "3", "4", "5"])
    t2 = ElimTree.from_ordering(g, ["5", "4", "3", "2", "1"])
    seq = shortest_path(g, t1, t2)
    ok, final = validate_sequence(g, seq)
    assert ok
    assert final.canonical_key() == t2.canonical_key()
    assert len(seq.moves) == distance(g, t1, t2)


def test_shortest_path_deterministic():
    g = cycle_graph(5)
    t1 = ElimTree.from_ordering(g, ["1", "2", "3", "4", "5"])
    t2 = ElimTree.from_ordering(g, ["3", "5", "1", "2", "4"])
    a = shortest_path(g, t1, t2)
    b = shortest_path(g, t1, t2)
    assert a.moves == b.moves


def test_weighted_distance_unit_weights():
    g = path_graph(4)
    w = {lab: 1 for lab in g.labels}
    t1 = ElimTree.from_ordering(g, g.labels)
    t2 = ElimTree.from_ordering(g, tuple(reversed(g.labels)))
    assert weighted_distance(g, w, t1, t2) == distance(g, t1, t2)


def test_weighted_distance_prefers_light_moves():
    # triangle with one heavy vertex: the optimum avoids heavy swaps
    g = complete_graph(3)
    w = {"1": 1, "2": 1, "3": 100}
    t1 = ElimTree.from_ordering(g, ["1", "2", "3"])
    t2 = ElimTree.from_ordering(g, ["2", "1", "3"])
    assert weighted_distance(g, w, t1, t2) == 1
    t3 = ElimTree.from_ordering(g, ["3", "2", "1"])
    # any route to t3 must move vertex 3 past the others
    d = weighted_distance(g, w, t1, t3)
    seq = weighted_shortest_path(g, w, t1, t3)
    assert weighted_length(seq, w) == d
    ok, final = validate_sequence(g, seq)
    assert ok and final.canonical_key() == t3.canonical_key()


def test_weighted_distance_big_integers():
    g = path_graph(3)
    w = {"1": 10**20, "2": 1, "3": 10**20}
    t1 = ElimTree.from_ordering(g, ["1", "2", "3"])
    t2 = ElimTree.from_ordering(g, ["3", "2", "1"])
    d = weighted_distance(g, w, t1, t2)
    assert d > 10**19  # exceeds 64-bit range without overflow
    assert d == 2 * 10**20  # swap 2 past each endpoint


def test_weighted_rejects_nonpositive():
    g = path_graph(3)
    t = ElimTree.from_ordering(g, g.labels)
    with pytest.raises(InvalidArgument):
        weighted_distance(g, {"1": 0, "2": 1, "3": 1}, t, t)


def test_validate_sequence_flags_illegal():
    g = path_graph(3)
    t = ElimTree.from_ordering(g, g.labels)
    seq = ReconfigSequence(t, (SwapMove("2", "1"),))
    ok, final = validate_sequence(g, seq)
    assert not ok
    assert final.canonical_key() == t.canonical_key()


@pytest.mark.parametrize(
    "builder,expected",
    [
        (lambda: complete_graph(3), 3),
        (lambda: path_graph(3), 2),
        (lambda: star_graph(4), 4),
        (lambda: complete_graph(4), 6),
    ],
)
def test_small_diameters(builder, expected):
    assert diameter(builder()) == expected


def test_diameter_pruned_equals_allpairs():
    for g in [cycle_graph(5), path_graph(6), star_graph(5),
              random_connected_graph(6, 0.4, 3)]:
        assert diameter(g) == diameter(g, exact_allpairs=True)


def test_dot_export_shape():
    g = path_graph(3)
    dot = flip_graph_dot(g)
    assert dot.startswith("graph flipgraph {")
    assert dot.count("--") == 5  # the pentagon
    assert dot.count("label=") == 5
