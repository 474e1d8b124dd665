"""Graph Motif solvers.

Three engines answer 'does the colour multiset M occur as a connected
induced subgraph':

* occurs_bruteforce  - exact enumeration of connected vertex sets (oracle);
* occurs_pgroup_greedy - the dominating-vertex greedy, valid on power graphs
  of p-groups (promise input);
* occurs_twinclass  - twin-type subset enumeration with a flow feasibility
  check per subset; exponential only in the number of types.

Every positive answer carries a witness and is re-validated before return.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, LimitExceeded, NoDominatingVertex
from .graphs import ColoredDigraph, connected_components, is_dominating, twin_types


class NoFeasibleEngine(LimitExceeded):
    """No motif engine can run within its configured limits."""


@dataclass(frozen=True)
class Motif:
    """A multiset of colours; colourful iff every multiplicity is 1."""

    items: tuple[tuple[int, int], ...]  # sorted (color, multiplicity) pairs

    @staticmethod
    def of(colors) -> "Motif":
        """Build from an iterable of colours or a {color: multiplicity} mapping."""
        counts = Counter(dict(colors)) if isinstance(colors, dict) else Counter(colors)
        if not counts:
            raise InputError("motifs must contain at least one colour")
        if any(m < 1 for m in counts.values()) or any(c < 0 for c in counts):
            raise InputError("motif colours are non-negative with positive multiplicity")
        return Motif(tuple(sorted(counts.items())))

    def counts(self) -> Counter:
        return Counter(dict(self.items))

    @property
    def size(self) -> int:
        return sum(m for _, m in self.items)

    @property
    def colorful(self) -> bool:
        return all(m == 1 for _, m in self.items)

    def colors(self) -> set[int]:
        return {c for c, _ in self.items}


@dataclass(frozen=True)
class MotifInstance:
    graph: ColoredDigraph
    motif: Motif

    def __post_init__(self):
        if self.graph.directed:
            raise InputError("motif instances are undirected")


@dataclass(frozen=True)
class MotifAnswer:
    occurs: bool
    witness: tuple[int, ...] | None = None
    engine: str = ""


def validate_witness(inst: MotifInstance, witness) -> bool:
    """Independent check: witness induces a connected subgraph with colours == M."""
    g, w = inst.graph, sorted(set(int(v) for v in witness))
    if len(w) != len(witness):
        return False
    if Counter(int(g.colors[v]) for v in w) != inst.motif.counts():
        return False
    sub, _ = g.induced_subgraph(w)
    return len(connected_components(sub)) == 1


def _checked(inst: MotifInstance, witness, engine: str) -> MotifAnswer:
    witness = tuple(sorted(int(v) for v in witness))
    if not validate_witness(inst, witness):
        raise AssertionError(f"engine {engine} produced an invalid witness")
    return MotifAnswer(True, witness, engine)


def _residual_vertices(inst: MotifInstance) -> list[int]:
    wanted = inst.motif.colors()
    return [v for v in range(inst.graph.n) if int(inst.graph.colors[v]) in wanted]


# ---------------------------------------------------------------------------
# brute-force oracle


def occurs_bruteforce(
    inst: MotifInstance, max_motif: int = 12, max_vertices: int = 64
) -> MotifAnswer:
    """Exact oracle: enumerate connected vertex sets of size |M|.

    Sets are grown by neighbour extension from each start vertex with
    canonical-minimum pruning (every connected set is visited exactly once,
    from its smallest vertex), and colour-pruned against M along the way.
    """
    g, motif = inst.graph, inst.motif
    k = motif.size
    if k > max_motif:
        raise LimitExceeded(f"motif size {k} exceeds the oracle limit {max_motif}")
    if g.n > max_vertices:
        raise LimitExceeded(f"{g.n} vertices exceed the oracle limit {max_vertices}")
    demand = motif.counts()
    if k > g.n:
        return MotifAnswer(False, None, "oracle")
    rows = [[int(u) for u in g.row(v)] for v in range(g.n)]
    colors = g.colors.tolist()

    def extend(chosen, ext, remaining, left):
        # ESU-style growth: ext holds unexplored neighbours of the chosen set,
        # all greater than the start vertex; each connected set is visited once.
        if left == 0:
            return list(chosen)
        while ext:
            w = ext.pop(0)
            if remaining[colors[w]] <= 0:
                continue
            closed = set(chosen)
            for v in chosen:
                closed.update(rows[v])
            new_ext = list(ext) + [
                u for u in rows[w] if u > chosen[0] and u not in closed
            ]
            remaining[colors[w]] -= 1
            chosen.append(w)
            hit = extend(chosen, new_ext, remaining, left - 1)
            if hit is not None:
                return hit
            chosen.pop()
            remaining[colors[w]] += 1
        return None

    for v in range(g.n):
        if demand.get(colors[v], 0) == 0:
            continue
        if k == 1:
            return _checked(inst, [v], "oracle")
        remaining = Counter(demand)
        remaining[colors[v]] -= 1
        hit = extend([v], [u for u in rows[v] if u > v], remaining, k - 1)
        if hit is not None:
            return _checked(inst, hit, "oracle")
    return MotifAnswer(False, None, "oracle")


# ---------------------------------------------------------------------------
# p-group greedy


def occurs_pgroup_greedy(inst: MotifInstance) -> MotifAnswer:
    """Dominating-vertex greedy for power graphs of p-groups.

    Deletes all vertices whose colour is outside M, then for each connected
    component picks a dominating vertex v (one exists in every component of
    a p-group power graph) and answers yes iff M minus one copy of col(v) is
    a sub-multiset of the neighbour colours of v -- multiset semantics.
    """
    demand = inst.motif.counts()
    residual = _residual_vertices(inst)
    if not residual:
        return MotifAnswer(False, None, "pgroup")
    sub, old = inst.graph.induced_subgraph(residual)
    colors = sub.colors.tolist()
    for comp in connected_components(sub):
        dom = next((v for v in comp if is_dominating(sub, comp, v)), None)
        if dom is None:
            raise NoDominatingVertex(
                "a component has no dominating vertex; input is not a p-group power graph"
            )
        need = Counter(demand)
        need[colors[dom]] -= 1
        if need[colors[dom]] < 0:
            continue
        supply = Counter(colors[int(w)] for w in sub.row(dom))
        if any(need[c] > supply.get(c, 0) for c in need):
            continue
        witness = [old[dom]]
        for w in sub.row(dom):
            w = int(w)
            if need.get(colors[w], 0) > 0:
                need[colors[w]] -= 1
                witness.append(old[w])
        return _checked(inst, witness, "pgroup")
    return MotifAnswer(False, None, "pgroup")


# ---------------------------------------------------------------------------
# twin-type engine


def occurs_twinclass(inst: MotifInstance, type_guard: int = 24) -> MotifAnswer:
    """Twin-type subset enumeration with a flow feasibility check.

    Vertices with colours outside M can never be selected, so types are
    computed on the residual graph.  For each non-empty type subset whose
    quotient is connected (a lone independent type only admits single-vertex
    selections), a lower-bounded flow decides whether per-type counts with
    colour multiset exactly M exist; the first feasible subset in
    lexicographic order provides the witness.
    """
    demand = inst.motif.counts()
    residual = _residual_vertices(inst)
    if not residual:
        return MotifAnswer(False, None, "twinclass")
    sub, old = inst.graph.induced_subgraph(residual)
    types, clique_flags = twin_types(sub)
    k = len(types)
    if k > type_guard:
        raise LimitExceeded(f"{k} twin types exceed the guard {type_guard}")
    colors = sub.colors.tolist()
    supplies = [Counter(colors[v] for v in t) for t in types]
    quotient_adj = [
        [sub.has_edge(types[a][0], types[b][0]) for b in range(k)] for a in range(k)
    ]
    msize = inst.motif.size

    def quotient_connected(chosen) -> bool:
        seen = {chosen[0]}
        stack = [chosen[0]]
        cset = set(chosen)
        while stack:
            a = stack.pop()
            for b in cset:
                if b not in seen and quotient_adj[a][b]:
                    seen.add(b)
                    stack.append(b)
        return len(seen) == len(cset)

    def try_subset(chosen):
        caps = [
            len(types[t]) if (len(chosen) > 1 or clique_flags[t]) else 1 for t in chosen
        ]
        if len(chosen) > msize or sum(caps) < msize:
            return None
        if len(chosen) > 1 and not quotient_connected(chosen):
            return None
        avail = Counter()
        for t in chosen:
            avail.update(supplies[t])
        if any(avail.get(c, 0) < m for c, m in demand.items()):
            return None
        counts = _type_color_flow(chosen, caps, supplies, demand)
        if counts is None:
            return None
        witness = []
        for t, per_color in counts.items():
            pool = list(types[t])
            for c, num in per_color.items():
                taken = [v for v in pool if colors[v] == c][:num]
                witness.extend(old[v] for v in taken)
        return witness

    def dfs(start, chosen):
        for t in range(start, k):
            chosen.append(t)
            hit = try_subset(chosen)
            if hit is not None:
                return hit
            if len(chosen) < msize:  # larger subsets need >= 1 vertex per type
                hit = dfs(t + 1, chosen)
                if hit is not None:
                    return hit
            chosen.pop()
        return None

    hit = dfs(0, [])
    if hit is None:
        return MotifAnswer(False, None, "twinclass")
    return _checked(inst, hit, "twinclass")


def _type_color_flow(chosen, caps, supplies, demand):
    """Feasible per-type colour counts (>=1 per type, exact demand), or None.

    Lower bounds are removed by the usual excess-node transformation, then a
    small Dinic search decides feasibility.
    """
    colors = sorted(demand)
    color_pos = {c: i for i, c in enumerate(colors)}
    nt, nc = len(chosen), len(colors)
    S, T = nt + nc, nt + nc + 1
    SS, TT = nt + nc + 2, nt + nc + 3
    dinic = _Dinic(nt + nc + 4)
    excess = [0] * (nt + nc + 2)
    type_edges = []
    tc_edges = {}
    for i, t in enumerate(chosen):
        # S -> type with bounds [1, cap]
        type_edges.append(dinic.add_edge(S, i, caps[i] - 1))
        excess[i] += 1
        excess[S] -= 1
        for c, have in supplies[t].items():
            if c in color_pos:
                tc_edges[(i, color_pos[c])] = dinic.add_edge(i, nt + color_pos[c], have)
    for c, need in demand.items():
        # color -> T with bounds [need, need]
        excess[T] += need
        excess[nt + color_pos[c]] -= need
    dinic.add_edge(T, S, 10**9)
    required = 0
    for v, e in enumerate(excess):
        if e > 0:
            dinic.add_edge(SS, v, e)
            required += e
        elif e < 0:
            dinic.add_edge(v, TT, -e)
    if dinic.max_flow(SS, TT) != required:
        return None
    out = {}
    for i, t in enumerate(chosen):
        per_color = {}
        for (ti, ci), eid in tc_edges.items():
            if ti == i and dinic.flow(eid) > 0:
                per_color[colors[ci]] = dinic.flow(eid)
        out[t] = per_color
    return out


class _Dinic:
    """Minimal deterministic max-flow for the tiny feasibility networks."""

    def __init__(self, n):
        self.n = n
        self.head = [[] for _ in range(n)]
        self.to = []
        self.cap = []

    def add_edge(self, u, v, cap) -> int:
        eid = len(self.to)
        self.head[u].append(eid)
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(eid + 1)
        self.to.append(u)
        self.cap.append(0)
        return eid

    def flow(self, eid) -> int:
        return self.cap[eid ^ 1]

    def max_flow(self, s, t) -> int:
        total = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            for u in queue:
                for eid in self.head[u]:
                    v = self.to[eid]
                    if self.cap[eid] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return total
            it = [0] * self.n

            def dfs(u, pushed):
                if u == t:
                    return pushed
                while it[u] < len(self.head[u]):
                    eid = self.head[u][it[u]]
                    v = self.to[eid]
                    if self.cap[eid] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[eid]))
                        if got:
                            self.cap[eid] -= got
                            self.cap[eid ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, 10**9)
                if not pushed:
                    break
                total += pushed


# ---------------------------------------------------------------------------
# engine dispatch


def solve(
    inst: MotifInstance,
    engine: str = "auto",
    type_guard: int = 24,
    oracle_max_motif: int = 12,
    oracle_max_vertices: int = 64,
) -> MotifAnswer:
    """Run the requested engine ('auto' picks twinclass, then the oracle).

    Positive answers are always witness-validated before being returned.
    """
    if engine == "oracle":
        return occurs_bruteforce(inst, oracle_max_motif, oracle_max_vertices)
    if engine == "pgroup":
        return occurs_pgroup_greedy(inst)
    if engine == "twinclass":
        return occurs_twinclass(inst, type_guard)
    if engine != "auto":
        raise InputError(f"unknown engine {engine!r}")
    try:
        return occurs_twinclass(inst, type_guard)
    except LimitExceeded:
        pass
    try:
        return occurs_bruteforce(inst, oracle_max_motif, oracle_max_vertices)
    except LimitExceeded as exc:
        raise NoFeasibleEngine(f"no engine fits this instance: {exc}") from exc
