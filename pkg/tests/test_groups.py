import numpy as np
import pytest

from powgraph import (
    GroupSpec,
    InputError,
    LimitExceeded,
    NotNilpotent,
    abelian_p_group,
    build_group,
    cyclic_group,
    cyclic_subgroup,
    direct_product,
    element_order,
    enumerate_abelian_p_groups,
    enumerate_partitions,
    generator_classes,
    heisenberg_group,
    raw_group,
    sylow_decomposition,
)
from powgraph.numtheory import euler_phi

from helpers import abelian_groups_upto, partitions_oracle, symmetric_group_table


def order_oracle(group, x):
    y, k = x, 1
    while y != group.identity:
        y = group.mul(y, x)
        k += 1
    return 1 if x == group.identity else k


def test_build_group_examples():
    assert cyclic_group(1).table.tolist() == [[0]]
    g6 = cyclic_group(6)
    assert g6.identity == 0 and g6.mul(2, 5) == 1
    h = heisenberg_group(3)
    assert h.n == 27
    orders = {element_order(h, x) for x in range(1, 27)}
    assert orders == {3}


def test_build_group_from_spec():
    spec = GroupSpec(
        kind="product",
        factors=(
            GroupSpec(kind="cyclic", n=8),
            GroupSpec(kind="abelianp", p=3, partition=(1, 1)),
        ),
    )
    g = build_group(spec)
    assert g.n == 72
    assert spec.describe() == "product:(cyclic:8,abelianp:3^[1,1])"


def test_order_limit():
    with pytest.raises(LimitExceeded):
        cyclic_group(100, order_limit=50)


def test_element_order_examples():
    g6, g12 = cyclic_group(6), cyclic_group(12)
    assert element_order(g6, 0) == 1
    assert element_order(g6, 2) == 3 == order_oracle(g6, 2)
    assert element_order(g12, 5) == 12 == order_oracle(g12, 5)
    for g in (g6, g12, heisenberg_group(3)):
        for x in range(g.n):
            assert element_order(g, x) == order_oracle(g, x)
            assert g.n % element_order(g, x) == 0


def test_cyclic_subgroup_examples():
    g6 = cyclic_group(6)
    assert cyclic_subgroup(g6, 0) == frozenset({0})
    assert cyclic_subgroup(g6, 2) == frozenset({0, 2, 4})
    assert cyclic_subgroup(g6, 1) == frozenset(range(6))
    for x in range(6):
        assert len(cyclic_subgroup(g6, x)) == element_order(g6, x)


def test_generator_classes_examples():
    part = generator_classes(cyclic_group(6))
    assert part.classes == ((0,), (1, 5), (2, 4), (3,))
    assert generator_classes(cyclic_group(1)).classes == ((0,),)
    assert generator_classes(cyclic_group(4)).classes == ((0,), (1, 3), (2,))


def test_class_sizes_are_totients():
    for name, g in abelian_groups_upto(40):
        part = generator_classes(g)
        for ci, members in enumerate(part.classes):
            assert len(members) == euler_phi(part.class_order[ci]), name


def test_sylow_decomposition():
    parts = sylow_decomposition(cyclic_group(12))
    assert [(p, len(s)) for p, s in parts] == [(2, 4), (3, 3)]
    assert sorted(parts[0][1]) == [0, 3, 6, 9]
    assert [(p, len(s)) for p, s in sylow_decomposition(cyclic_group(8))] == [(2, 8)]
    with pytest.raises(NotNilpotent):
        sylow_decomposition(symmetric_group_table(3))


def test_sylow_sizes_multiply():
    for name, g in abelian_groups_upto(60):
        parts = sylow_decomposition(g)
        total = 1
        for _, s in parts:
            total *= len(s)
        assert total == g.n, name


def test_enumerate_partitions():
    assert enumerate_partitions(1) == [[1]]
    assert enumerate_partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert len(enumerate_partitions(6)) == 11
    for m in range(1, 21):
        parts = enumerate_partitions(m)
        assert len(parts) == partitions_oracle(m)
        assert all(sum(p) == m and p == sorted(p, reverse=True) for p in parts)
        assert parts == sorted(parts, reverse=True)  # descending lexicographic
        assert len({tuple(p) for p in parts}) == len(parts)


def test_enumerate_abelian_p_groups():
    groups = enumerate_abelian_p_groups(2, 2)
    assert [g.n for g in groups] == [4, 4]
    orders0 = sorted(element_order(groups[0], x) for x in range(4))
    orders1 = sorted(element_order(groups[1], x) for x in range(4))
    assert orders0 == [1, 2, 4, 4] and orders1 == [1, 2, 2, 2]  # Z4 then Z2xZ2
    assert [g.n for g in enumerate_abelian_p_groups(5, 1)] == [5]
    assert len(enumerate_abelian_p_groups(2, 3)) == 3


def test_verification_catches_bad_tables():
    with pytest.raises(InputError):
        raw_group([[0, 1], [0, 1]], 0)  # not a Latin square
    with pytest.raises(InputError):
        raw_group([[1, 0], [0, 1]], 0)  # identity index wrong
    # five-element Latin square that is not associative
    latin = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(InputError):
        raw_group(latin, 0)


def test_direct_product_indexing():
    g = direct_product([cyclic_group(2), cyclic_group(3)])
    # lexicographic pairs: index = 3*a + b
    assert g.mul(3 * 1 + 0, 3 * 1 + 2) == 3 * 0 + 2
    assert g.identity == 0
    assert sorted(element_order(g, x) for x in range(6)) == [1, 2, 3, 3, 6, 6]


def test_tables_are_frozen():
    g = cyclic_group(4)
    with pytest.raises(ValueError):
        g.table[0, 0] = 1
