"""Rank oracle, axiom checking, greedy points, coordinates, membership."""

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gassoc.elimtree import ElimTree
from gassoc.errors import InvalidArgument, ResourceLimit
from gassoc.flipgraph import enumerate_all
from gassoc.graph import Graph
from gassoc.polymatroid import (
    GraphAssocRank,
    TableRank,
    check_axioms,
    devadoss_coordinates,
    greedy_extreme_point,
    membership,
    power_sum_inequality,
    verify_realization,
)
from gassoc.smallgraphs import (
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_graph,
    star_graph,
)


def test_rank_path3_examples():
    o = GraphAssocRank(path_graph(3))
    assert o.rank([]) == 0
    assert o.rank(["1"]) == 2  # 3 - 3^0 for the surviving component {2,3}
    assert o.rank(["2"]) == 3  # removal splits into singletons
    assert o.rank(["1", "2", "3"]) == 3


def test_rank_full_set_and_requirements():
    for g in [path_graph(5), cycle_graph(4), complete_graph(4)]:
        o = GraphAssocRank(g)
        assert o.rank(g.labels) == 3 ** (g.n - 2)
    with pytest.raises(InvalidArgument):
        GraphAssocRank(Graph(["a"], []))
    with pytest.raises(InvalidArgument):
        GraphAssocRank(Graph(["a", "b"], []))


def test_check_axioms_pass_small():
    for g in [path_graph(4), star_graph(5), cycle_graph(5), complete_graph(4)]:
        report = check_axioms(GraphAssocRank(g))
        assert report.ok
        assert report.checked > 0


def test_check_axioms_flags_violations():
    # P1 violation: nonzero at the empty set
    ground = ("a", "b")
    bad_p1 = TableRank(ground, {
        frozenset(): 1, frozenset("a"): 1, frozenset("b"): 1,
        frozenset(("a", "b")): 2,
    })
    rep = check_axioms(bad_p1)
    assert any(v.startswith("P1") for v in rep.violations)

    # P2 violation: rank drops when extending
    bad_p2 = TableRank(ground, {
        frozenset(): 0, frozenset("a"): 2, frozenset("b"): 1,
        frozenset(("a", "b")): 1,
    })
    rep = check_axioms(bad_p2)
    assert any(v.startswith("P2") for v in rep.violations)

    # P3 violation: supermodular toy
    bad_p3 = TableRank(ground, {
        frozenset(): 0, frozenset("a"): 1, frozenset("b"): 1,
        frozenset(("a", "b")): 3,
    })
    rep = check_axioms(bad_p3)
    assert any(v.startswith("P3") for v in rep.violations)


def test_check_axioms_cap():
    g = random_connected_graph(13, 0.3, 1)
    with pytest.raises(ResourceLimit):
        check_axioms(GraphAssocRank(g))


def test_power_sum_inequality_basics():
    assert power_sum_inequality([1])
    assert power_sum_inequality([1, 1])  # 9 >= 6
    with pytest.raises(InvalidArgument):
        power_sum_inequality([0, 1])
    with pytest.raises(InvalidArgument):
        power_sum_inequality([])


def compositions(total):
    if total == 0:
        yield ()
        return
    for head in range(1, total + 1):
        for rest in compositions(total - head):
            yield (head,) + rest


def test_power_sum_inequality_exhaustive():
    for total in range(1, 13):
        for comp in compositions(total):
            assert power_sum_inequality(comp)
            if len(comp) >= 2:
                # gap of at least 3 for two or more parts
                assert 3 ** sum(comp) - sum(3**x for x in comp) >= 3


def test_greedy_point_path3():
    o = GraphAssocRank(path_graph(3))
    assert greedy_extreme_point(o, ["1", "2", "3"]) == {"1": 2, "2": 1, "3": 0}
    assert greedy_extreme_point(o, ["2", "1", "3"]) == {"1": 0, "2": 3, "3": 0}
    with pytest.raises(InvalidArgument):
        greedy_extreme_point(o, ["1", "2"])


def test_greedy_point_sums_to_full_rank():
    g = cycle_graph(5)
    o = GraphAssocRank(g)
    for sigma in [g.labels, tuple(reversed(g.labels))]:
        point = greedy_extreme_point(o, sigma)
        assert sum(point.values()) == 3 ** (g.n - 2)


def test_devadoss_coordinates_path3():
    g = path_graph(3)
    balanced = ElimTree.from_ordering(g, ["2", "1", "3"])
    assert devadoss_coordinates(g, balanced) == {"1": 0, "2": 3, "3": 0}
    chain = ElimTree.from_ordering(g, ["1", "2", "3"])
    assert devadoss_coordinates(g, chain) == {"1": 2, "2": 1, "3": 0}


def test_devadoss_coordinates_claw():
    g = star_graph(4)  # center 1, leaves 2..4
    t = ElimTree.from_ordering(g, g.labels)
    coords = devadoss_coordinates(g, t)
    assert coords == {"1": 9, "2": 0, "3": 0, "4": 0}


def test_devadoss_nonnegative_and_total():
    g = cycle_graph(5)
    for t in enumerate_all(g):
        coords = devadoss_coordinates(g, t)
        assert all(v >= 0 for v in coords.values())
        assert sum(coords.values()) == 3 ** (g.n - 2)


def test_membership_examples():
    g = path_graph(3)
    o = GraphAssocRank(g)
    t = ElimTree.from_ordering(g, ["2", "1", "3"])
    assert membership(o, devadoss_coordinates(g, t))
    assert not membership(o, {"1": 3, "2": 0, "3": 0})  # x({1}) > 2
    assert not membership(o, {"1": 0, "2": 0, "3": 0})  # misses x(V) = 3


def test_lemma_5_5_greedy_equals_tree_coordinates():
    for g in [path_graph(4), cycle_graph(4), star_graph(4)]:
        o = GraphAssocRank(g)
        for sigma in permutations(g.labels):
            t = ElimTree.from_ordering(g, sigma)
            assert greedy_extreme_point(o, sigma) == devadoss_coordinates(g, t)


def test_verify_realization_p3_points():
    rep = verify_realization(path_graph(3))
    assert rep.ok
    assert rep.trees == 5 and rep.points == 5


def test_verify_realization_k3():
    rep = verify_realization(complete_graph(3))
    assert rep.ok
    assert rep.points == 6  # permutahedron vertices


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 5000))
def test_coordinates_in_base_polytope_random(seed):
    g = random_connected_graph(5, 0.5, seed)
    o = GraphAssocRank(g)
    t = ElimTree.from_ordering(g, g.labels)
    assert membership(o, devadoss_coordinates(g, t))
