"""Compilers from 3-SAT and Weighted Max-Cut into power-graph instances.

The SAT pipeline: parse DIMACS, build the star-of-cliques gadget whose
colourful motif occurs iff the formula is satisfiable, then embed the
gadget as an induced subgraph of Pow(Z_N) for N a primorial, by assigning
literals distinct half-size prime subsets.  The Max-Cut pipeline plants a
weighted clique on the generators of Z_{n^2}.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    EmbeddingMismatch,
    InputError,
    InsufficientUnits,
    LimitExceeded,
)
from .graphs import ColoredDigraph, cyclic_element_orders, power_graph_of_cyclic, undirected_isomorphic
from .motif import Motif, MotifInstance
from .numtheory import euler_phi, primes_first, units


# ---------------------------------------------------------------------------
# CNF formulas


@dataclass(frozen=True)
class CnfFormula:
    """A <=3-CNF: clauses are tuples of nonzero signed variable indices."""

    n: int
    clauses: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.clauses)

    def literals(self) -> list[int]:
        """All 2n signed literals in order x1, -x1, x2, -x2, ..."""
        out = []
        for i in range(1, self.n + 1):
            out.extend((i, -i))
        return out

    def occurrences(self, literal: int) -> list[int]:
        """Indices of the clauses containing the literal."""
        return [j for j, cl in enumerate(self.clauses) if literal in cl]


def make_formula(n: int, clauses) -> CnfFormula:
    """Validate and normalize clause lists (in-clause duplicates removed)."""
    norm = []
    for cl in clauses:
        seen = []
        for lit in cl:
            lit = int(lit)
            if lit == 0 or abs(lit) > n:
                raise InputError(f"literal {lit} out of range for {n} variables")
            if lit not in seen:
                seen.append(lit)
        if not seen:
            raise InputError("empty clause")
        if len(seen) > 3:
            raise InputError(f"clause width {len(seen)} exceeds 3")
        norm.append(tuple(seen))
    return CnfFormula(n, tuple(norm))


def parse_dimacs(text: str) -> CnfFormula:
    """Parse standard DIMACS CNF; enforces width <= 3 after deduplication."""
    n = None
    m_declared = None
    clauses = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"malformed DIMACS header: {line!r}")
            try:
                n, m_declared = int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise InputError(f"malformed DIMACS header: {line!r}") from exc
            continue
        if n is None:
            raise InputError("clause data before the DIMACS header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError as exc:
                raise InputError(f"bad literal token {tok!r}") from exc
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if current:
        raise InputError("last clause is not 0-terminated")
    if n is None:
        raise InputError("missing DIMACS header")
    if m_declared is not None and m_declared != len(clauses):
        raise InputError(f"header declares {m_declared} clauses, found {len(clauses)}")
    return make_formula(n, clauses)


def to_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.n} {formula.m}"]
    lines += [" ".join(map(str, cl)) + " 0" for cl in formula.clauses]
    return "\n".join(lines) + "\n"


def sat_bruteforce(formula: CnfFormula, max_vars: int = 24) -> tuple[bool, ...] | None:
    """Exhaustive satisfying assignment search; None if unsatisfiable."""
    if formula.n > max_vars:
        raise LimitExceeded(f"{formula.n} variables exceed the oracle limit {max_vars}")
    for bits in range(1 << formula.n):
        if all(
            any((lit > 0) == bool(bits >> (abs(lit) - 1) & 1) for lit in cl)
            for cl in formula.clauses
        ):
            return tuple(bool(bits >> i & 1) for i in range(formula.n))
    return None


# ---------------------------------------------------------------------------
# the star-of-cliques gadget


@dataclass(frozen=True)
class GadgetInstance:
    """The motif instance for a formula, with vertex roles for reporting.

    Roles: ('root',), ('lit', literal), ('occ', literal, clause_index).
    Colors: root 0, literal vertices of variable i colored i, clause-occurrence
    vertices of clause j colored n + 1 + j (0-based j).
    """

    instance: MotifInstance
    roles: tuple[tuple, ...]
    formula: CnfFormula

    @property
    def graph(self) -> ColoredDigraph:
        return self.instance.graph

    def clause_color(self, j: int) -> int:
        return self.formula.n + 1 + j

    def literal_vertex(self, literal: int) -> int:
        return self.roles.index(("lit", literal))


def build_gadget(formula: CnfFormula) -> GadgetInstance:
    """Root + literal vertices + per-literal clause-occurrence cliques.

    The motif is the colourful set {0, 1..n, clause colours}; it occurs in
    the gadget iff the formula is satisfiable.
    """
    n = formula.n
    roles: list[tuple] = [("root",)]
    colors: list[int] = [0]
    edges: list[tuple[int, int]] = []
    for lit in formula.literals():
        v = len(roles)
        roles.append(("lit", lit))
        colors.append(abs(lit))
        edges.append((0, v))
    for lit in formula.literals():
        lv = roles.index(("lit", lit))
        occ = []
        for j in formula.occurrences(lit):
            w = len(roles)
            roles.append(("occ", lit, j))
            colors.append(n + 1 + j)
            edges.append((lv, w))
            for prev in occ:
                edges.append((prev, w))
            occ.append(w)
    graph = ColoredDigraph.from_edges(len(roles), False, edges, colors)
    motif = Motif.of(list(range(n + 1)) + [n + 1 + j for j in range(formula.m)])
    return GadgetInstance(MotifInstance(graph, motif), tuple(roles), formula)


# ---------------------------------------------------------------------------
# the embedding into Pow(Z_N)


def max_occurrence(formula: CnfFormula) -> int:
    """Largest number of clauses any single literal appears in."""
    counts = Counter()
    for cl in formula.clauses:
        for lit in cl:
            counts[lit] += 1
    return max(counts.values(), default=0)


def choose_b(formula: CnfFormula) -> int:
    """Smallest odd b >= 3 supporting a one-to-one embedding.

    Exact per-instance requirements: C(b-1, (b-1)/2) >= 2n distinct literal
    subsets, and phi(p_2 ... p_{(b+1)/2}) >= the largest per-literal clause
    count (so the smallest subgroup hosting occurrence vertices has enough
    generators).
    """
    return choose_b_for(formula.n, max_occurrence(formula))


def choose_b_for(n_vars: int, occurrence_bound: int) -> int:
    if n_vars < 1:
        raise InputError("need at least one variable")
    b = 3
    while True:
        half = (b - 1) // 2
        if math.comb(b - 1, half) >= 2 * n_vars:
            ps = primes_first((b + 1) // 2)
            phi = math.prod(p - 1 for p in ps[1:])
            if phi >= occurrence_bound:
                return b
        b += 2


def _half_subsets_colex(b: int) -> list[tuple[int, ...]]:
    """(b-1)/2-subsets of {2..b} in colexicographic order.

    Colex on subsets equals ordering by the numeric value of the
    characteristic vector, smallest value first.
    """
    import itertools

    half = (b - 1) // 2
    subsets = itertools.combinations(range(2, b + 1), half)
    return sorted(subsets, key=lambda s: sum(1 << e for e in s))


@dataclass(frozen=True)
class EmbeddingPlan:
    """Full record of a gadget -> Pow(Z_N) embedding.

    f_p maps each literal to its (b-1)/2-subset of prime positions {2..b};
    element_map sends gadget vertices to residues of Z_N, order_map to their
    additive orders (divisors of N).
    """

    b: int
    primes: tuple[int, ...]
    modulus: int
    f_p: dict
    element_map: tuple[int, ...]
    order_map: tuple[int, ...]
    gadget: GadgetInstance

    @property
    def n_vertices(self) -> int:
        return len(self.element_map)


def build_embedding(formula: CnfFormula, gadget: GadgetInstance, b: int | None = None) -> EmbeddingPlan:
    """Assign residues of Z_N to every gadget vertex.

    Root -> N/p_1; the literal with subset I -> N/d for d = p_1 * prod(p_t);
    the s occurrence vertices of that literal -> (N/d') u for the first s
    units u of Z_{d'}, d' = d / p_1.  Injectivity is verified.
    """
    if b is None:
        b = choose_b(formula)
    if b < 3 or b % 2 == 0:
        raise InputError("b must be an odd number >= 3")
    half = (b - 1) // 2
    if math.comb(b - 1, half) < 2 * formula.n:
        raise InputError(f"b={b} is too small for {formula.n} variables")
    primes = primes_first(b)
    modulus = math.prod(primes)
    subsets = _half_subsets_colex(b)
    f_p = {lit: subsets[t] for t, lit in enumerate(formula.literals())}
    element_map = [0] * len(gadget.roles)
    order_map = [0] * len(gadget.roles)
    lit_units: dict[int, list[int]] = {}
    for v, role in enumerate(gadget.roles):
        if role[0] == "root":
            element_map[v] = modulus // primes[0]
            order_map[v] = primes[0]
        elif role[0] == "lit":
            d = primes[0] * math.prod(primes[t - 1] for t in f_p[role[1]])
            element_map[v] = modulus // d
            order_map[v] = d
    for v, role in enumerate(gadget.roles):
        if role[0] != "occ":
            continue
        lit = role[1]
        d_sub = math.prod(primes[t - 1] for t in f_p[lit])
        pool = lit_units.setdefault(lit, units(d_sub))
        if not pool:
            raise InsufficientUnits(
                f"phi({d_sub}) cannot host all occurrence vertices of literal {lit}"
            )
        u = pool.pop(0)
        element_map[v] = (modulus // d_sub) * u % modulus
        order_map[v] = d_sub
    if len(set(element_map)) != len(element_map):
        raise EmbeddingMismatch("element map is not injective")
    for v in range(len(element_map)):
        actual = modulus // math.gcd(modulus, element_map[v])
        if actual != order_map[v]:
            raise EmbeddingMismatch("order bookkeeping disagrees with residue arithmetic")
    return EmbeddingPlan(
        b=b,
        primes=tuple(primes),
        modulus=modulus,
        f_p=f_p,
        element_map=tuple(element_map),
        order_map=tuple(order_map),
        gadget=gadget,
    )


def materialize_embedded_subgraph(plan: EmbeddingPlan) -> ColoredDigraph:
    """The subgraph of Pow(Z_N) induced on the mapped residues.

    Adjacency in a cyclic group is divisibility of element orders; the
    result is checked to be colour-isomorphic to the gadget graph.
    """
    k = plan.n_vertices
    edges = []
    for u in range(k):
        for v in range(u + 1, k):
            du, dv = plan.order_map[u], plan.order_map[v]
            if du % dv == 0 or dv % du == 0:
                edges.append((u, v))
    graph = ColoredDigraph.from_edges(k, False, edges, plan.gadget.graph.colors)
    if undirected_isomorphic(graph, plan.gadget.graph) is None:
        raise EmbeddingMismatch("embedded subgraph is not colour-isomorphic to the gadget")
    return graph


def materialize_full_instance(
    plan: EmbeddingPlan, filler_color: int | None = None, vertex_limit: int = 10**6
) -> MotifInstance:
    """The motif instance on all of Z_N: mapped vertices keep their gadget
    colours, every other residue gets a filler colour outside the motif."""
    n = plan.modulus
    if n > vertex_limit:
        raise LimitExceeded(f"{n} vertices exceed the budget {vertex_limit}")
    motif = plan.gadget.instance.motif
    if filler_color is None:
        filler_color = max(motif.colors()) + 1
    if filler_color in motif.colors():
        raise InputError("filler colour must lie outside the motif")
    graph = power_graph_of_cyclic(n, vertex_limit)
    colors = np.full(n, filler_color, dtype=np.int64)
    gadget_colors = plan.gadget.graph.colors
    for v, residue in enumerate(plan.element_map):
        colors[residue] = gadget_colors[v]
    return MotifInstance(graph.with_colors(colors), motif)


def reduce_sat(formula: CnfFormula, b: int | None = None) -> tuple[GadgetInstance, EmbeddingPlan]:
    """The whole pipeline: gadget + embedding plan."""
    gadget = build_gadget(formula)
    plan = build_embedding(formula, gadget, b)
    return gadget, plan


# ---------------------------------------------------------------------------
# weighted max-cut


@dataclass(frozen=True)
class WeightedGraph:
    """Symmetric integer edge weights; absent pairs weigh 0, no self-weights."""

    n: int
    weights: tuple[tuple[int, int, int], ...]  # (u, v, w) with u < v, unique pairs

    @staticmethod
    def of(n: int, weighted_edges) -> "WeightedGraph":
        seen = {}
        for u, v, w in weighted_edges:
            u, v, w = int(u), int(v), int(w)
            if u == v:
                raise InputError("self-weights are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen and seen[key] != w:
                raise InputError(f"conflicting weights for edge {key}")
            seen[key] = w
        return WeightedGraph(n, tuple(sorted((u, v, w) for (u, v), w in seen.items())))

    def weight(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        for a, b, w in self.weights:
            if (a, b) == key:
                return w
        return 0

    def cut_value(self, side) -> int:
        """Total weight across the bipartition given by a boolean/0-1 vector."""
        return sum(w for u, v, w in self.weights if bool(side[u]) != bool(side[v]))


def maxcut_embed(wg: WeightedGraph) -> tuple[WeightedGraph, list[int]]:
    """Plant a weighted K_n on the generators of Z_{n^2}.

    The n vertices map to the smallest residues coprime to n^2 (a clique in
    Pow(Z_{n^2}) of size phi(n^2) = n phi(n) > n); all other power-graph
    edges get weight 0.  Returns the embedded instance and the vertex map.
    """
    n = wg.n
    if n < 2:
        raise InputError("max-cut embedding needs n >= 2")
    nn = n * n
    gens = [u for u in range(1, nn) if math.gcd(u, nn) == 1][:n]
    orders = cyclic_element_orders(nn)
    weighted = {}
    for u, v, w in wg.weights:
        a, b = gens[u], gens[v]
        weighted[(min(a, b), max(a, b))] = w
    edges = []
    for x in range(nn):
        for y in range(x + 1, nn):
            if orders[x] % orders[y] == 0 or orders[y] % orders[x] == 0:
                edges.append((x, y, weighted.get((x, y), 0)))
    return WeightedGraph.of(nn, edges), gens


def maxcut_bruteforce(wg: WeightedGraph, max_vertices: int = 26) -> tuple[int, tuple[int, ...]]:
    """Exact maximum cut by exhaustive bipartition (vertex 0 pinned).

    Returns (value, membership vector).  Zero-weight edges cannot change
    the value, so only weighted pairs are accumulated.
    """
    n = wg.n
    if n > max_vertices:
        raise LimitExceeded(f"{n} vertices exceed the brute-force limit {max_vertices}")
    if n == 0:
        return 0, ()
    total = 1 << (n - 1)
    nonzero = [(u, v, w) for u, v, w in wg.weights if w != 0]
    best_val = None
    best_mask = 0
    chunk = 1 << 20
    for lo in range(0, total, chunk):
        masks = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        vals = np.zeros(masks.size, dtype=np.int64)
        for u, v, w in nonzero:
            bu = (masks >> u) & 1 if u < n - 1 else np.zeros_like(masks)
            bv = (masks >> v) & 1 if v < n - 1 else np.zeros_like(masks)
            # vertex n-1 is pinned to side 0 by dropping its bit
            vals += np.where(bu != bv, w, 0)
        i = int(np.argmax(vals))
        if best_val is None or int(vals[i]) > best_val:
            best_val = int(vals[i])
            best_mask = int(masks[i])
    side = tuple((best_mask >> v) & 1 if v < n - 1 else 0 for v in range(n))
    return best_val, side
