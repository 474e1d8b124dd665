"""Recognition of reduced directed power graphs of nilpotent groups.

The pipeline: split the input reduced graph into per-prime pieces (classes
with prime-power colours plus the identity class), recognize each piece
against a candidate family (abelian / bounded-polycyclic / exponent-p
star), then glue the per-prime witnesses back through least common parents
and verify the resulting colour-isomorphism.  A desk-scale undirected
front-end sweeps whole candidate groups directly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import AmbiguousParent, InputError, LimitExceeded, NotCandidate
from .graphs import (
    ColoredDigraph,
    ReducedGraph,
    build_power_graph,
    color_isomorphic,
    reduce_digraph,
    reduced_power_digraph,
    undirected_isomorphic,
    verify_color_iso,
)
from .groups import (
    DEFAULT_ORDER_LIMIT,
    CayleyTable,
    abelian_p_group,
    cyclic_group,
    direct_product,
    enumerate_partitions,
    generator_classes,
)
from .numtheory import factorize, is_prime_power
from .presentations import iter_polycyclic_tables


@dataclass(frozen=True)
class TargetClass:
    """Which family of nilpotent groups to recognize against."""

    kind: str  # 'abelian' | 'polycyclic' | 'squarefree'
    length: int = 0  # polycyclic length bound, for kind == 'polycyclic'

    def __post_init__(self):
        if self.kind not in ("abelian", "polycyclic", "squarefree"):
            raise InputError(f"unknown target class {self.kind!r}")
        if self.kind == "polycyclic" and self.length < 1:
            raise InputError("polycyclic targets need a positive length bound")

    def describe(self) -> str:
        return f"polycyclic:{self.length}" if self.kind == "polycyclic" else self.kind


ABELIAN = TargetClass("abelian")
SQUAREFREE = TargetClass("squarefree")


def polycyclic_target(length: int) -> TargetClass:
    return TargetClass("polycyclic", length)


@dataclass(frozen=True)
class RecognitionResult:
    verdict: bool
    witness_spec: str = ""
    witness: CayleyTable | None = None
    mapping: dict | None = None  # witness RDP class -> input class
    reason: str = ""


# ---------------------------------------------------------------------------
# splitting by primes


def split_by_prime(rg: ReducedGraph) -> list[tuple[int, int, ReducedGraph, list[int]]]:
    """Per-prime pieces of a reduced graph.

    Piece for prime p = classes with p-power colour, plus the identity
    class; composite-colour classes belong to no piece and are accounted
    for by the glue step.  Raises NotCandidate when colours use primes not
    dividing the vertex total, the identity class is not unique, or a piece
    has the wrong element count.
    """
    n = rg.total_vertices()
    if n <= 1:
        raise NotCandidate("splitting needs at least two vertices")
    factors = factorize(n)
    prime_set = {p for p, _ in factors}
    identity_classes = [c for c in range(rg.k) if rg.colors[c] == 1]
    if len(identity_classes) != 1:
        raise NotCandidate(f"expected exactly one colour-1 class, found {len(identity_classes)}")
    ident = identity_classes[0]
    for c in range(rg.k):
        col = rg.colors[c]
        if col == 1:
            continue
        if any(p not in prime_set for p, _ in factorize(col)):
            raise NotCandidate(f"class colour {col} uses a prime not dividing {n}")
    pieces = []
    for p, a in factors:
        ids = [c for c in range(rg.k) if c == ident or _is_power_of(rg.colors[c], p)]
        ids.sort()
        piece = rg.induced(ids)
        inside = sum(rg.sizes[c] for c in ids if c != ident)
        if inside + 1 != p**a:
            raise NotCandidate(
                f"classes with {p}-power colours hold {inside + 1} elements, expected {p**a}"
            )
        pieces.append((p, a, piece, ids))
    return pieces


def _is_power_of(value: int, p: int) -> bool:
    if value < p:
        return False
    while value % p == 0:
        value //= p
    return value == 1


# ---------------------------------------------------------------------------
# per-prime candidate sweeps


@lru_cache(maxsize=None)
def _abelian_candidates(p: int, m: int, order_limit: int) -> tuple:
    """(spec string, table, reduced graph) per abelian group of order p^m."""
    out = []
    for part in enumerate_partitions(m):
        table = abelian_p_group(p, part, order_limit)
        spec = f"abelianp:{p}^[{','.join(map(str, part))}]"
        out.append((spec, table, reduced_power_digraph(table)))
    return tuple(out)


@lru_cache(maxsize=None)
def _polycyclic_candidates(p: int, m: int, c: int, order_limit: int) -> tuple:
    """Deduplicated-by-reduced-graph candidates of order p^m, length <= c."""
    buckets: dict[tuple, list] = {}
    out = []
    index = 0
    for table in iter_polycyclic_tables(p, m, c, order_limit):
        rdp = reduced_power_digraph(table)
        bucket = buckets.setdefault(rdp.invariant_key(), [])
        if any(color_isomorphic(rdp, seen) is not None for seen in bucket):
            continue
        bucket.append(rdp)
        out.append((f"polycyclic:{p}^{m}.c{c}#{index}", table, rdp))
        index += 1
    return tuple(out)


def _squarefree_candidates(p: int, m: int, order_limit: int) -> tuple:
    table = abelian_p_group(p, [1] * m, order_limit)
    spec = f"abelianp:{p}^[{','.join(['1'] * m)}]"
    return ((spec, table, reduced_power_digraph(table)),)


def _candidates_for(p: int, m: int, target: TargetClass, order_limit: int) -> tuple:
    if target.kind == "abelian":
        return _abelian_candidates(p, m, order_limit)
    if target.kind == "polycyclic":
        return _polycyclic_candidates(p, m, min(target.length, m), order_limit)
    return _squarefree_candidates(p, m, order_limit)


def recognize_abelian_p(piece: ReducedGraph, p: int, m: int, order_limit: int = DEFAULT_ORDER_LIMIT):
    """First abelian group of order p^m whose RDP matches the piece, or None."""
    return _sweep_piece(piece, _abelian_candidates(p, m, order_limit))


def recognize_polycyclic_p(
    piece: ReducedGraph, p: int, m: int, c: int, order_limit: int = DEFAULT_ORDER_LIMIT
):
    """First length-<=c polycyclic p-group matching the piece, or None."""
    return _sweep_piece(piece, _polycyclic_candidates(p, m, c, order_limit))


def recognize_exponent_p(piece: ReducedGraph, p: int, m: int, order_limit: int = DEFAULT_ORDER_LIMIT):
    """Star test: (p^m - 1)/(p - 1) leaf classes of colour p and size p-1,
    each pointing only at the single identity class.  Witness: (Z_p)^m."""
    leaves = (p**m - 1) // (p - 1)
    if piece.k != leaves + 1:
        return None
    idents = [c for c in range(piece.k) if piece.colors[c] == 1]
    if len(idents) != 1:
        return None
    ident = idents[0]
    if piece.sizes[ident] != 1 or piece.out_neighbors(ident):
        return None
    if len(piece.in_neighbors(ident)) != leaves:
        return None
    for c in range(piece.k):
        if c == ident:
            continue
        if piece.colors[c] != p or piece.sizes[c] != p - 1:
            return None
        if piece.out_neighbors(c) != (ident,) or piece.in_neighbors(c):
            return None
    return _sweep_piece(piece, _squarefree_candidates(p, m, order_limit))


def _sweep_piece(piece: ReducedGraph, candidates):
    key = piece.invariant_key()
    for spec, table, rdp in candidates:
        if rdp.invariant_key() != key:
            continue
        mapping = color_isomorphic(rdp, piece)
        if mapping is not None:
            return spec, table, mapping
    return None


# ---------------------------------------------------------------------------
# least common parents and gluing


def least_common_parent(rg: ReducedGraph, class_ids) -> int | None:
    """The common closed in-neighbour of minimum colour, if unique.

    A class counts as a parent of itself.  Returns None when no common
    parent exists; raises AmbiguousParent when two share the minimum colour.
    """
    class_ids = list(class_ids)
    if not class_ids:
        raise InputError("least_common_parent needs at least one class")
    common = set(rg.in_neighbors(class_ids[0])) | {class_ids[0]}
    for c in class_ids[1:]:
        common &= set(rg.in_neighbors(c)) | {c}
    if not common:
        return None
    best = min(rg.colors[c] for c in common)
    winners = [c for c in common if rg.colors[c] == best]
    if len(winners) > 1:
        raise AmbiguousParent(f"classes {sorted(winners)} share minimum colour {best}")
    return winners[0]


def glue(rg: ReducedGraph, per_prime: list[tuple[int, CayleyTable, dict]], order_limit: int = DEFAULT_ORDER_LIMIT):
    """Combine per-prime witnesses into one witness for the whole graph.

    per_prime holds (prime, witness group G_i, f_i) with f_i mapping classes
    of R(DPow(G_i)) to classes of rg.  Builds H as the direct product,
    sends every class [(x_1, ..., x_k)] of R(DPow(H)) to the least common
    parent of its mapped components, and accepts only if that map is a
    verified colour-isomorphism.  Returns (H, mapping) or None.
    """
    per_prime = sorted(per_prime, key=lambda t: t[0])
    tables = [t for _, t, _ in per_prime]
    product = direct_product(tables, order_limit)
    rdp_h = reduced_power_digraph(product)
    parts = [generator_classes(t) for t in tables]
    strides = [1] * len(tables)
    for i in range(len(tables) - 2, -1, -1):
        strides[i] = strides[i + 1] * tables[i + 1].n
    if rdp_h.k != rg.k:
        return None
    mapping = {}
    used = set()
    for hc, members in enumerate(rdp_h.members):
        rep = members[0]
        targets = []
        for i in range(len(tables)):
            component = (rep // strides[i]) % tables[i].n
            local_class = parts[i].class_of[component]
            targets.append(per_prime[i][2][local_class])
        try:
            parent = least_common_parent(rg, targets)
        except AmbiguousParent:
            return None
        if parent is None or parent in used:
            return None
        used.add(parent)
        mapping[hc] = parent
    if not verify_color_iso(rdp_h, rg, mapping):
        return None
    return product, mapping


# ---------------------------------------------------------------------------
# the full pipeline


def recognize_nilpotent(
    graph: ReducedGraph | ColoredDigraph,
    target: TargetClass,
    order_limit: int = DEFAULT_ORDER_LIMIT,
) -> RecognitionResult:
    """Decide whether the input is the reduced directed power graph of a
    group in the target class, returning a verified witness on yes.

    Accepts a raw directed graph (reduced internally) or a ReducedGraph.
    Structural failures yield a 'no' verdict with a reason, not an error.
    """
    if isinstance(graph, ColoredDigraph):
        if not graph.directed:
            raise InputError("recognize_nilpotent expects a directed graph; see recognize_undirected")
        rg = reduce_digraph(graph)
    else:
        rg = graph
    n = rg.total_vertices()
    if n > order_limit:
        raise LimitExceeded(f"group order {n} exceeds the limit {order_limit}")
    if n == 1:
        if rg.k == 1 and rg.colors[0] == 1 and rg.sizes[0] == 1:
            trivial = cyclic_group(1)
            return RecognitionResult(True, "cyclic:1", trivial, {0: 0})
        return RecognitionResult(False, reason="single vertex is not an identity class")
    try:
        pieces = split_by_prime(rg)
    except NotCandidate as exc:
        return RecognitionResult(False, reason=str(exc))
    recognized = []
    for p, a, piece, ids in pieces:
        if target.kind == "abelian":
            hit = recognize_abelian_p(piece, p, a, order_limit)
        elif target.kind == "polycyclic":
            hit = recognize_polycyclic_p(piece, p, a, min(target.length, a), order_limit)
        else:
            hit = recognize_exponent_p(piece, p, a, order_limit)
        if hit is None:
            return RecognitionResult(False, reason=f"no {target.describe()} witness for the {p}-part")
        spec, table, piece_mapping = hit
        global_mapping = {wc: ids[pc] for wc, pc in piece_mapping.items()}
        recognized.append((p, spec, table, global_mapping))
    if len(recognized) == 1:
        p, spec, table, mapping = recognized[0]
        if len(mapping) != rg.k:
            return RecognitionResult(False, reason="single-prime piece does not cover the graph")
        if not verify_color_iso(reduced_power_digraph(table), rg, mapping):
            return RecognitionResult(False, reason="single-prime witness failed verification")
        return RecognitionResult(True, spec, table, mapping)
    glued = glue(rg, [(p, table, mapping) for p, _, table, mapping in recognized], order_limit)
    if glued is None:
        return RecognitionResult(False, reason="per-prime witnesses exist but gluing failed")
    product, mapping = glued
    spec = "product:(" + ",".join(spec for _, spec, _, _ in recognized) + ")"
    return RecognitionResult(True, spec, product, mapping)


# ---------------------------------------------------------------------------
# exhaustive candidate-comparison oracle and the undirected front-end


def candidate_groups(n: int, target: TargetClass, order_limit: int = DEFAULT_ORDER_LIMIT):
    """All groups of order n in the target class, as (spec string, table).

    Products over per-prime candidate lists, primes ascending; polycyclic
    lists are deduplicated by reduced graph.
    """
    if n > order_limit:
        raise LimitExceeded(f"group order {n} exceeds the limit {order_limit}")
    if n == 1:
        yield "cyclic:1", cyclic_group(1)
        return
    per_prime = [
        _candidates_for(p, a, target, order_limit) for p, a in factorize(n)
    ]
    for combo in itertools.product(*per_prime):
        tables = [t for _, t, _ in combo]
        if len(tables) == 1:
            spec, table = combo[0][0], tables[0]
        else:
            spec = "product:(" + ",".join(s for s, _, _ in combo) + ")"
            table = direct_product(tables, order_limit)
        yield spec, table


@lru_cache(maxsize=None)
def _candidate_rdps(n: int, kind: str, length: int, order_limit: int) -> tuple:
    target = TargetClass(kind, length) if kind == "polycyclic" else TargetClass(kind)
    out = []
    for spec, table in candidate_groups(n, target, order_limit):
        out.append((spec, table, reduced_power_digraph(table)))
    return tuple(out)


def sweep_recognize(
    rg: ReducedGraph, target: TargetClass, order_limit: int = DEFAULT_ORDER_LIMIT
) -> RecognitionResult:
    """Reference oracle: compare the input against every candidate group of
    its order directly by colour isomorphism (no splitting, no gluing)."""
    n = rg.total_vertices()
    key = rg.invariant_key()
    for spec, table, rdp in _candidate_rdps(n, target.kind, target.length, order_limit):
        if rdp.invariant_key() != key:
            continue
        mapping = color_isomorphic(rdp, rg)
        if mapping is not None:
            return RecognitionResult(True, spec, table, mapping)
    return RecognitionResult(False, reason="no candidate of this order matches")


def recognize_undirected(
    graph: ColoredDigraph,
    target: TargetClass,
    vertex_limit: int = 128,
    order_limit: int = DEFAULT_ORDER_LIMIT,
) -> RecognitionResult:
    """Desk-scale undirected front-end: sweep candidate groups of order |V|
    and test plain graph isomorphism against each power graph."""
    if graph.directed:
        raise InputError("recognize_undirected expects an undirected graph")
    if graph.n > vertex_limit:
        raise LimitExceeded(f"{graph.n} vertices exceed the limit {vertex_limit}")
    if graph.n == 0:
        return RecognitionResult(False, reason="empty graph")
    for spec, table in candidate_groups(graph.n, target, order_limit):
        pow_graph = build_power_graph(table)
        mapping = undirected_isomorphic(graph, pow_graph, ignore_colors=True)
        if mapping is not None:
            return RecognitionResult(True, spec, table, dict(enumerate(mapping)))
    return RecognitionResult(False, reason="no candidate of this order matches")
