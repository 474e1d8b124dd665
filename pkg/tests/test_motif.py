import random

import pytest

from powgraph import (
    ColoredDigraph,
    LimitExceeded,
    Motif,
    MotifInstance,
    NoDominatingVertex,
    abelian_p_group,
    build_power_graph,
    cyclic_group,
    occurs_bruteforce,
    occurs_pgroup_greedy,
    occurs_twinclass,
    power_graph_of_cyclic,
    solve,
    validate_witness,
)
from powgraph.graphs import complete_graph, cyclic_element_orders
from powgraph.motif import NoFeasibleEngine

from helpers import random_coloring


def inst_of(graph, colors, motif):
    return MotifInstance(graph.with_colors(colors), Motif.of(motif))


def pow_colored_by_order(n):
    g = power_graph_of_cyclic(n)
    return g.with_colors(cyclic_element_orders(n))


def test_oracle_examples():
    k3 = complete_graph(3, [1, 2, 3])
    ans = occurs_bruteforce(MotifInstance(k3, Motif.of([1, 2, 3])))
    assert ans.occurs and ans.witness == (0, 1, 2)
    p3 = ColoredDigraph.from_edges(3, False, [(0, 1), (1, 2)], [1, 2, 1])
    assert not occurs_bruteforce(MotifInstance(p3, Motif.of([1, 1]))).occurs
    z6 = pow_colored_by_order(6)
    assert occurs_bruteforce(MotifInstance(z6, Motif.of([1, 2, 3]))).occurs


def test_oracle_limits():
    big = complete_graph(70, [1] * 70)
    with pytest.raises(LimitExceeded):
        occurs_bruteforce(MotifInstance(big, Motif.of([1])))
    small = complete_graph(3, [1, 1, 1])
    with pytest.raises(LimitExceeded):
        occurs_bruteforce(MotifInstance(small, Motif.of([1] * 13)))


def test_pgroup_examples():
    star = build_power_graph(abelian_p_group(2, [1, 1]))
    yes = inst_of(star, [1, 2, 2, 3], [1, 2, 3])
    assert occurs_pgroup_greedy(yes).occurs
    assert occurs_bruteforce(yes).occurs
    no = inst_of(star, [1, 2, 2, 3], [2, 3])
    assert not occurs_pgroup_greedy(no).occurs
    assert not occurs_bruteforce(no).occurs
    # complete power graph of a cyclic p-group: any sub-multiset occurs
    k8 = build_power_graph(cyclic_group(8))
    colors = [1, 2, 2, 3, 3, 3, 4, 4]
    for motif in ([1], [2, 2], [3, 3, 3, 4], [1, 2, 3, 4]):
        assert occurs_pgroup_greedy(inst_of(k8, colors, motif)).occurs


def test_pgroup_promise_violation():
    # a path with 4 vertices has no dominating vertex
    p4 = ColoredDigraph.from_edges(4, False, [(0, 1), (1, 2), (2, 3)], [1, 1, 1, 1])
    with pytest.raises(NoDominatingVertex):
        occurs_pgroup_greedy(MotifInstance(p4, Motif.of([1, 1])))


def test_twinclass_examples():
    kn = complete_graph(6, [1, 1, 2, 2, 3, 4])
    assert occurs_twinclass(MotifInstance(kn, Motif.of([1, 2, 2, 4]))).occurs
    z6 = pow_colored_by_order(6)
    assert not occurs_twinclass(MotifInstance(z6, Motif.of([2, 3]))).occurs
    assert occurs_twinclass(MotifInstance(z6, Motif.of([2, 6]))).occurs


def test_twinclass_guard():
    # a long path: every vertex has a distinct neighbourhood, so ~n types
    g = ColoredDigraph.from_edges(
        30, False, [(i, i + 1) for i in range(29)], list(range(1, 31))
    )
    with pytest.raises(LimitExceeded):
        occurs_twinclass(MotifInstance(g, Motif.of(list(range(1, 31)))), type_guard=24)


def test_multiset_semantics():
    # two copies of a colour require two distinct vertices
    star = ColoredDigraph.from_edges(4, False, [(0, 1), (0, 2), (0, 3)], [1, 2, 2, 3])
    two = MotifInstance(star, Motif.of([1, 2, 2]))
    assert occurs_bruteforce(two).occurs
    assert occurs_twinclass(two).occurs
    assert occurs_pgroup_greedy(two).occurs
    three = MotifInstance(star, Motif.of([1, 2, 2, 2]))
    assert not occurs_bruteforce(three).occurs
    assert not occurs_twinclass(three).occurs
    assert not occurs_pgroup_greedy(three).occurs


def test_lone_independent_type_admits_single_vertex_only():
    # edgeless same-colour graph: M={c} occurs, M={c,c} does not
    g = ColoredDigraph.from_edges(3, False, [], [5, 5, 5])
    assert occurs_twinclass(MotifInstance(g, Motif.of([5]))).occurs
    assert not occurs_twinclass(MotifInstance(g, Motif.of([5, 5]))).occurs
    assert not occurs_bruteforce(MotifInstance(g, Motif.of([5, 5]))).occurs


def test_random_agreement_with_oracle():
    rng = random.Random(42)
    for trial in range(400):
        n = rng.randint(2, 10)
        edges = set()
        for _ in range(rng.randint(0, 2 * n)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                edges.add((min(u, v), max(u, v)))
        colors = random_coloring(rng, n, 4)
        g = ColoredDigraph.from_edges(n, False, edges, colors)
        motif = Motif.of([rng.randint(1, 4) for _ in range(rng.randint(1, 4))])
        inst = MotifInstance(g, motif)
        expected = occurs_bruteforce(inst).occurs
        assert occurs_twinclass(inst).occurs == expected, (edges, colors, motif)


def test_isomorphism_invariance():
    rng = random.Random(9)
    z12 = pow_colored_by_order(12)
    motif = Motif.of([1, 2, 12])
    base = occurs_twinclass(MotifInstance(z12, motif)).occurs
    for _ in range(5):
        perm = list(range(12))
        rng.shuffle(perm)
        edges = [(perm[u], perm[v]) for u, v in z12.edge_list()]
        colors = [0] * 12
        for v in range(12):
            colors[perm[v]] = int(z12.colors[v])
        relabeled = ColoredDigraph.from_edges(12, False, edges, colors)
        assert occurs_twinclass(MotifInstance(relabeled, motif)).occurs == base


def test_witnesses_validate():
    z30 = pow_colored_by_order(30)
    for motif in ([1, 2, 30], [30, 30, 15], [2, 6, 3], [5, 10, 30, 30]):
        inst = MotifInstance(z30, Motif.of(motif))
        for engine in (occurs_bruteforce, occurs_twinclass):
            ans = engine(inst)
            if ans.occurs:
                assert validate_witness(inst, ans.witness)


def test_solve_dispatch():
    k3 = complete_graph(3, [1, 2, 3])
    inst = MotifInstance(k3, Motif.of([1, 2]))
    assert solve(inst).engine == "twinclass"
    assert solve(inst, engine="oracle").engine == "oracle"
    z60 = pow_colored_by_order(60)
    ans = solve(MotifInstance(z60, Motif.of([1, 2, 3, 60])))
    assert ans.engine == "twinclass" and ans.occurs
    # no feasible engine: a long path exceeds the type guard and the motif
    # is too large for the oracle
    g = ColoredDigraph.from_edges(
        80, False, [(i, i + 1) for i in range(79)], list(range(1, 81))
    )
    with pytest.raises(NoFeasibleEngine):
        solve(MotifInstance(g, Motif.of(list(range(1, 26)))), type_guard=10)
