"""Power graphs of finite groups: construction, motif solving, reductions,
and recognition of nilpotent power graphs."""

from .errors import (
    AmbiguousParent,
    EmbeddingMismatch,
    InconsistentPresentation,
    InputError,
    InsufficientUnits,
    InternalCheckFailed,
    LimitExceeded,
    NoDominatingVertex,
    NotCandidate,
    NotNilpotent,
    PowgraphError,
)
from .groups import (
    CayleyTable,
    ClassPartition,
    GroupSpec,
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
from .numtheory import divisors, euler_phi, factorize, primes_first, primorial
from .graphs import (
    ColoredDigraph,
    ReducedGraph,
    aut_pow_cyclic_formula,
    automorphism_count,
    build_directed_power_graph,
    build_power_graph,
    closed_twin_classes,
    color_isomorphic,
    connected_components,
    is_dominating,
    power_graph_of_cyclic,
    reduce_digraph,
    reduced_power_digraph,
    twin_types,
    undirected_isomorphic,
    verify_color_iso,
)
from .presentations import (
    PolycyclicPresentation,
    abelian_presentation,
    collect_presentation,
    dihedral_presentation,
    enumerate_polycyclic_p_groups,
    quaternion_presentation,
)
from .motif import (
    Motif,
    MotifAnswer,
    MotifInstance,
    occurs_bruteforce,
    occurs_pgroup_greedy,
    occurs_twinclass,
    solve,
    validate_witness,
)
from .reductions import (
    CnfFormula,
    EmbeddingPlan,
    GadgetInstance,
    WeightedGraph,
    build_embedding,
    build_gadget,
    choose_b,
    make_formula,
    materialize_embedded_subgraph,
    materialize_full_instance,
    maxcut_bruteforce,
    maxcut_embed,
    parse_dimacs,
    reduce_sat,
    sat_bruteforce,
)
from .recognition import (
    ABELIAN,
    SQUAREFREE,
    RecognitionResult,
    TargetClass,
    candidate_groups,
    glue,
    least_common_parent,
    polycyclic_target,
    recognize_abelian_p,
    recognize_exponent_p,
    recognize_nilpotent,
    recognize_polycyclic_p,
    recognize_undirected,
    split_by_prime,
    sweep_recognize,
)

__version__ = "0.1.0"
