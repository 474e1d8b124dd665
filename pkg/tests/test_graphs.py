import itertools
import random

import numpy as np
import pytest

from powgraph import (
    ColoredDigraph,
    InputError,
    LimitExceeded,
    abelian_p_group,
    aut_pow_cyclic_formula,
    automorphism_count,
    build_directed_power_graph,
    build_power_graph,
    closed_twin_classes,
    color_isomorphic,
    connected_components,
    cyclic_group,
    direct_product,
    element_order,
    generator_classes,
    is_dominating,
    power_graph_of_cyclic,
    reduce_digraph,
    reduced_power_digraph,
    twin_types,
    undirected_isomorphic,
    verify_color_iso,
)
from powgraph.graphs import complete_graph
from powgraph.numtheory import divisors, euler_phi

from helpers import abelian_groups_upto, dihedral8, directed_iso_exists, quaternion8, symmetric_group_table


def test_dpow_examples():
    triv = build_directed_power_graph(cyclic_group(1))
    assert triv.n == 1 and triv.has_edge(0, 0) and triv.out_degree(0) == 1
    d4 = build_directed_power_graph(cyclic_group(4))
    assert [d4.out_degree(v) for v in range(4)] == [1, 4, 2, 4]
    d6 = build_directed_power_graph(cyclic_group(6))
    assert d6.has_edge(2, 4) and not d6.has_edge(2, 3)


def test_out_degree_equals_order():
    for name, g in abelian_groups_upto(36):
        d = build_directed_power_graph(g)
        for x in range(g.n):
            assert d.out_degree(x) == element_order(g, x), name


def test_pow_examples():
    p8 = build_power_graph(cyclic_group(8))
    assert p8.edge_count() == 28  # complete K8
    p6 = build_power_graph(cyclic_group(6))
    assert p6.edge_count() == 13
    for v in (0, 1, 5):
        assert p6.out_degree(v) == 5
    assert p6.has_edge(2, 4) and not p6.has_edge(2, 3)
    v4 = build_power_graph(abelian_p_group(2, [1, 1]))
    assert sorted(v4.edge_list()) == [(0, 1), (0, 2), (0, 3)]  # star at identity


def test_power_graph_of_cyclic_matches_table_route():
    for n in (1, 2, 6, 12, 30, 60):
        fast = power_graph_of_cyclic(n)
        slow = build_power_graph(cyclic_group(n))
        assert fast.n == slow.n
        assert fast.edge_list() == slow.edge_list()


def test_closed_twin_classes():
    d6 = build_directed_power_graph(cyclic_group(6))
    assert closed_twin_classes(d6) == [(0,), (1, 5), (2, 4), (3,)]
    one = build_directed_power_graph(cyclic_group(1))
    assert closed_twin_classes(one) == [(0,)]
    v4 = build_directed_power_graph(abelian_p_group(2, [1, 1]))
    assert closed_twin_classes(v4) == [(0,), (1,), (2,), (3,)]


def test_twin_classes_equal_generator_classes():
    for name, g in abelian_groups_upto(32):
        d = build_directed_power_graph(g)
        assert tuple(closed_twin_classes(d)) == generator_classes(g).classes, name


def test_reduce_examples():
    r5 = reduce_digraph(build_directed_power_graph(cyclic_group(5)))
    assert sorted(zip(r5.colors, r5.sizes)) == [(1, 1), (5, 4)]
    assert len(r5.edges) == 1
    r6 = reduce_digraph(build_directed_power_graph(cyclic_group(6)))
    assert sorted(r6.colors) == [1, 2, 3, 6]
    six = r6.colors.index(6)
    assert len(r6.out_neighbors(six)) == 3
    r1 = reduce_digraph(build_directed_power_graph(cyclic_group(1)))
    assert r1.k == 1 and r1.colors == (1,) and not r1.edges


def test_reduce_matches_direct_route():
    for name, g in abelian_groups_upto(48):
        via_graph = reduce_digraph(build_directed_power_graph(g))
        direct = reduced_power_digraph(g)
        assert via_graph.colors == direct.colors, name
        assert via_graph.sizes == direct.sizes
        assert via_graph.edges == direct.edges
        assert via_graph.members == direct.members


def test_reduced_graph_is_acyclic_with_divisor_colors():
    for name, g in list(abelian_groups_upto(48)) + [("D8", dihedral8()), ("Q8", quaternion8())]:
        rg = reduced_power_digraph(g)
        for c in range(rg.k):
            assert g.n % rg.colors[c] == 0
        for a, b in rg.edges:
            assert rg.colors[a] % rg.colors[b] == 0 and rg.colors[a] > rg.colors[b]
        # DAG check: repeatedly strip sinks
        remaining = set(range(rg.k))
        out = {c: set(rg.out_neighbors(c)) for c in range(rg.k)}
        while remaining:
            sinks = {c for c in remaining if not (out[c] & remaining)}
            assert sinks, f"cycle in reduced graph of {name}"
            remaining -= sinks


def test_color_isomorphic_examples():
    r4 = reduced_power_digraph(cyclic_group(4))
    assert color_isomorphic(r4, reduced_power_digraph(cyclic_group(4))) is not None
    assert color_isomorphic(r4, reduced_power_digraph(abelian_p_group(2, [1, 1]))) is None
    r6 = reduced_power_digraph(cyclic_group(6))
    rs3 = reduced_power_digraph(symmetric_group_table(3))
    assert sorted(rs3.colors) == [1, 2, 2, 2, 3]
    assert color_isomorphic(r6, rs3) is None


def test_color_iso_agrees_with_directed_brute_force():
    groups = [(n, cyclic_group(n)) for n in range(2, 17)]
    groups += [("2^2", abelian_p_group(2, [1, 1])), ("2^3", abelian_p_group(2, [1, 1, 1]))]
    groups += [("2,4", direct_product([cyclic_group(2), cyclic_group(4)]))]
    groups += [("D8", dihedral8()), ("Q8", quaternion8()), ("S3", symmetric_group_table(3))]
    small = [(name, g) for name, g in groups if g.n <= 16]
    for (n1, g1), (n2, g2) in itertools.combinations(small, 2):
        if g1.n != g2.n:
            continue
        via_reduced = color_isomorphic(reduced_power_digraph(g1), reduced_power_digraph(g2))
        brute = directed_iso_exists(
            build_directed_power_graph(g1), build_directed_power_graph(g2)
        )
        assert (via_reduced is not None) == brute, (n1, n2)


def test_verify_color_iso():
    r6 = reduced_power_digraph(cyclic_group(6))
    ident = {c: c for c in range(r6.k)}
    assert verify_color_iso(r6, r6, ident)
    swapped = dict(ident)
    a = r6.colors.index(2)
    b = r6.colors.index(3)
    swapped[a], swapped[b] = swapped[b], swapped[a]
    assert not verify_color_iso(r6, r6, swapped)


def test_undirected_isomorphic_examples():
    k4 = complete_graph(4)
    p5_minus, _ = build_power_graph(cyclic_group(5)).induced_subgraph([0, 1, 2, 3])
    assert undirected_isomorphic(k4, p5_minus, ignore_colors=True) is not None
    path3 = ColoredDigraph.from_edges(3, False, [(0, 1), (1, 2)])
    assert undirected_isomorphic(path3, complete_graph(3), ignore_colors=True) is None
    p6 = build_power_graph(cyclic_group(6))
    rng = random.Random(7)
    perm = list(range(6))
    rng.shuffle(perm)
    relabeled = ColoredDigraph.from_edges(
        6, False, [(perm[u], perm[v]) for u, v in p6.edge_list()]
    )
    mapping = undirected_isomorphic(p6, relabeled, ignore_colors=True)
    assert mapping is not None


def test_undirected_isomorphic_respects_colors():
    g1 = complete_graph(3, [1, 2, 2])
    g2 = complete_graph(3, [1, 1, 2])
    assert undirected_isomorphic(g1, g2) is None
    assert undirected_isomorphic(g1, g2, ignore_colors=True) is not None


def test_automorphism_count_examples():
    assert automorphism_count(complete_graph(4)) == 24
    assert automorphism_count(build_power_graph(cyclic_group(6))) == 12
    edgeless = ColoredDigraph.from_edges(3, False, [])
    assert automorphism_count(edgeless) == 6


def test_automorphism_count_scan_vs_backtracking():
    rng = random.Random(3)
    for trial in range(20):
        n = rng.randint(2, 7)
        edges = {
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.5
        }
        g = ColoredDigraph.from_edges(n, False, edges)
        assert automorphism_count(g, scan_limit=8) == automorphism_count(g, scan_limit=1)


def test_aut_formula_examples():
    assert aut_pow_cyclic_formula(6) == 12
    assert aut_pow_cyclic_formula(10) == 2880
    assert aut_pow_cyclic_formula(15) == 17418240
    with pytest.raises(InputError):
        aut_pow_cyclic_formula(8)
    with pytest.raises(InputError):
        aut_pow_cyclic_formula(4)


def aut_count_via_twins(graph):
    """Exact |Aut| through the twin decomposition: within-type permutations
    are free, and type classes may only map to classes with the same size,
    type flag, and quotient adjacency."""
    import math

    types, flags = twin_types(graph)
    k = len(types)
    qcolors = {}
    palette = {}
    for i, (members, flag) in enumerate(zip(types, flags)):
        key = (len(members), flag)
        palette.setdefault(key, len(palette))
        qcolors[i] = palette[key]
    qedges = [
        (a, b)
        for a in range(k)
        for b in range(a + 1, k)
        if graph.has_edge(types[a][0], types[b][0])
    ]
    quotient = ColoredDigraph.from_edges(k, False, qedges, [qcolors[i] for i in range(k)])
    total = automorphism_count(quotient, limit=max(16, k))
    for members in types:
        total *= math.factorial(len(members))
    return total


def test_aut_formula_against_twin_decomposition():
    for n in (6, 10, 14, 15, 21, 22):
        assert aut_count_via_twins(power_graph_of_cyclic(n)) == aut_pow_cyclic_formula(n)


def test_twin_decomposition_agrees_with_direct_count():
    for n in (6, 10, 12):
        g = power_graph_of_cyclic(n)
        assert aut_count_via_twins(g) == automorphism_count(g)


def test_twin_types_examples():
    types, flags = twin_types(complete_graph(5))
    assert types == [(0, 1, 2, 3, 4)] and flags == [True]
    p6 = build_power_graph(cyclic_group(6))
    types, flags = twin_types(p6)
    assert types == [(0, 1, 5), (2, 4), (3,)]
    assert flags == [True, True, True]
    star = ColoredDigraph.from_edges(4, False, [(0, 1), (0, 2), (0, 3)])
    types, flags = twin_types(star)
    assert types == [(0,), (1, 2, 3)]
    assert flags == [True, False]


def test_type_count_bounded_by_divisors():
    for n in (2, 6, 12, 30, 60, 90):
        types, _ = twin_types(power_graph_of_cyclic(n))
        assert len(types) <= len(divisors(n))


def test_components_and_domination():
    g = ColoredDigraph.from_edges(5, False, [(0, 1), (1, 2), (0, 2), (3, 4)])
    comps = connected_components(g)
    assert comps == [(0, 1, 2), (3, 4)]
    star = ColoredDigraph.from_edges(4, False, [(0, 1), (0, 2), (0, 3)])
    assert is_dominating(star, (0, 1, 2, 3), 0)
    assert not is_dominating(star, (0, 1, 2, 3), 1)
    p6 = build_power_graph(cyclic_group(6))
    rest, old = p6.induced_subgraph([2, 3, 4])
    comps = connected_components(rest)
    assert [tuple(old[v] for v in comp) for comp in comps] == [(2, 4), (3,)]
    comp24 = comps[0]
    assert is_dominating(rest, comp24, old.index(2))


def test_graph_container_invariants():
    with pytest.raises(InputError):
        ColoredDigraph.from_edges(2, False, [(0, 0)])  # undirected loop
    g = ColoredDigraph.from_edges(3, True, [(0, 0), (0, 1)])
    assert g.has_edge(0, 0)
    with pytest.raises(LimitExceeded):
        automorphism_count(complete_graph(70))
