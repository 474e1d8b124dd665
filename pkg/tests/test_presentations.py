import numpy as np
import pytest

from powgraph import (
    InconsistentPresentation,
    InputError,
    PolycyclicPresentation,
    abelian_p_group,
    collect_presentation,
    cyclic_group,
    enumerate_polycyclic_p_groups,
)
from powgraph.graphs import color_isomorphic, reduced_power_digraph
from powgraph.presentations import (
    abelian_presentation,
    dihedral_presentation,
    quaternion_presentation,
)

from helpers import dihedral8, quaternion8


def order_profile(group):
    return tuple(sorted(group.element_orders().tolist()))


def test_single_cyclic_factor():
    pres = PolycyclicPresentation(2, (2,), ((0,),), {})
    assert np.array_equal(collect_presentation(pres).table, cyclic_group(4).table)


def test_klein_four():
    g = collect_presentation(abelian_presentation(2, (1, 1)))
    assert order_profile(g) == (1, 2, 2, 2)
    assert color_isomorphic(
        reduced_power_digraph(g), reduced_power_digraph(abelian_p_group(2, [1, 1]))
    )


def test_dihedral_and_quaternion():
    assert order_profile(dihedral8()) == (1, 2, 2, 2, 2, 2, 4, 4)
    assert order_profile(quaternion8()) == (1, 2, 4, 4, 4, 4, 4, 4)


def test_collection_reproduces_abelian_groups():
    # presentation derived from a generator chain of the known group
    for p, exps in [(2, (1, 2)), (2, (3,)), (3, (1, 1)), (2, (2, 2)), (5, (1,)), (2, (1, 1, 1))]:
        built = collect_presentation(abelian_presentation(p, exps))
        reference = abelian_p_group(p, sorted(exps, reverse=True))
        assert color_isomorphic(
            reduced_power_digraph(built), reduced_power_digraph(reference)
        ), (p, exps)


def test_inconsistent_presentation_rejected():
    # g1 g2 g1^-1 = g2^2 is not an automorphism of Z_4 (2 is not a unit)
    bad = PolycyclicPresentation(
        p=2, exponents=(1, 2), power_rhs=((0, 0), (0, 0)), conjugate_rhs={(0, 1): (0, 2)}
    )
    with pytest.raises(InconsistentPresentation):
        collect_presentation(bad)


def test_presentation_validation():
    with pytest.raises(InputError):
        PolycyclicPresentation(4, (1,), ((0,),), {})  # p not prime
    with pytest.raises(InputError):
        PolycyclicPresentation(2, (1, 1), ((0, 0), (0, 0)), {})  # missing conjugate pair
    with pytest.raises(InputError):
        # rhs may only use deeper generators
        PolycyclicPresentation(2, (1, 1), ((1, 0), (0, 0)), {(0, 1): (0, 1)})


def test_enumeration_small_cases():
    tables = enumerate_polycyclic_p_groups(2, 2, 2)
    profiles = {order_profile(g) for g in tables}
    assert (1, 2, 4, 4) in profiles  # Z4
    assert (1, 2, 2, 2) in profiles  # Z2 x Z2
    assert [g.n for g in enumerate_polycyclic_p_groups(3, 1, 1)] == [3]
    t8 = enumerate_polycyclic_p_groups(2, 3, 2)
    profiles8 = {order_profile(g) for g in t8}
    assert order_profile(dihedral8()) in profiles8
    assert order_profile(quaternion8()) in profiles8
    # metacyclic enumeration cannot reach the elementary abelian group
    assert (1, 2, 2, 2, 2, 2, 2, 2) not in profiles8
    t8_full = enumerate_polycyclic_p_groups(2, 3, 3)
    assert (1, 2, 2, 2, 2, 2, 2, 2) in {order_profile(g) for g in t8_full}


def test_enumeration_matches_collection_route():
    # the extension enumerator and explicit collection agree on known groups
    for make, pres in [
        (dihedral8, dihedral_presentation()),
        (quaternion8, quaternion_presentation()),
    ]:
        target = reduced_power_digraph(make())
        hits = [
            g
            for g in enumerate_polycyclic_p_groups(2, 3, 2)
            if color_isomorphic(reduced_power_digraph(g), target)
        ]
        assert hits, pres


def test_enumerated_tables_are_groups():
    for g in enumerate_polycyclic_p_groups(3, 2, 2):
        g.verify()
        assert g.n == 9
