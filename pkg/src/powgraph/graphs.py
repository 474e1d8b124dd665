"""Graph containers and the power-graph machinery.

ColoredDigraph is the universal container (directed or undirected, vertex
colours, CSR adjacency).  Directed power graphs keep a self-loop at every
vertex so that out-degree literally equals element order; reduced graphs
quotient by closed twin-classes and drop loops.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .errors import InputError, LimitExceeded
from .groups import CayleyTable, generator_classes
from .numtheory import divisors, euler_phi, is_prime_power

try:  # optional accelerator for the automorphism search
    from numba import njit

    HAVE_NUMBA = True
except Exception:  # pragma: no cover
    HAVE_NUMBA = False


class ColoredDigraph:
    """Vertex-coloured graph with sorted CSR adjacency.

    Undirected graphs store both copies of every edge and forbid loops;
    directed graphs may carry self-loops (directed power graphs always do).
    Colour 0 is the conventional 'uncoloured'.
    """

    __slots__ = ("n", "directed", "colors", "indptr", "indices")

    def __init__(self, n, directed, colors, indptr, indices, check=True):
        self.n = int(n)
        self.directed = bool(directed)
        self.colors = np.asarray(colors, dtype=np.int64)
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int32)
        for arr in (self.colors, self.indptr, self.indices):
            arr.setflags(write=False)
        if check:
            self._check()

    def _check(self):
        if self.colors.shape != (self.n,) or self.indptr.shape != (self.n + 1,):
            raise InputError("inconsistent graph arrays")
        if self.indices.size and (self.indices.min() < 0 or self.indices.max() >= self.n):
            raise InputError("neighbor index out of range")
        if (self.colors < 0).any():
            raise InputError("colors must be non-negative")
        for v in range(self.n):
            row = self.row(v)
            if row.size > 1 and (np.diff(row) <= 0).any():
                raise InputError("neighbor lists must be sorted and duplicate-free")
            if not self.directed and self.has_edge(v, v):
                raise InputError("undirected graphs are loop-free")
        if not self.directed:
            for v in range(self.n):
                for w in self.row(v):
                    if not self.has_edge(int(w), v):
                        raise InputError("undirected adjacency is not symmetric")

    @staticmethod
    def from_rows(rows, directed, colors=None, check=True) -> "ColoredDigraph":
        """Build from per-vertex neighbor iterables (deduplicated and sorted here)."""
        n = len(rows)
        sorted_rows = [np.array(sorted(set(map(int, r))), dtype=np.int32) for r in rows]
        indptr = np.zeros(n + 1, dtype=np.int64)
        for v, r in enumerate(sorted_rows):
            indptr[v + 1] = indptr[v] + r.size
        indices = np.concatenate(sorted_rows) if n else np.zeros(0, dtype=np.int32)
        if colors is None:
            colors = np.zeros(n, dtype=np.int64)
        return ColoredDigraph(n, directed, colors, indptr, indices.astype(np.int32), check=check)

    @staticmethod
    def from_edges(n, directed, edges, colors=None, check=True) -> "ColoredDigraph":
        rows = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range")
            if directed:
                rows[u].add(v)
            else:
                if u == v:
                    raise InputError("undirected graphs are loop-free")
                rows[u].add(v)
                rows[v].add(u)
        return ColoredDigraph.from_rows(rows, directed, colors, check=check)

    def row(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def out_degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.row(u)
        i = int(np.searchsorted(row, v))
        return i < row.size and int(row[i]) == v

    def edge_count(self) -> int:
        total = int(self.indices.size)
        return total if self.directed else total // 2

    def edge_list(self) -> list[tuple[int, int]]:
        """Directed: all arcs.  Undirected: each edge once, as (u, v) with u < v."""
        out = []
        for v in range(self.n):
            for w in self.row(v):
                w = int(w)
                if self.directed or v < w:
                    out.append((v, w))
        return out

    def with_colors(self, colors) -> "ColoredDigraph":
        return ColoredDigraph(self.n, self.directed, colors, self.indptr, self.indices, check=False)

    def induced_subgraph(self, vertices) -> tuple["ColoredDigraph", list[int]]:
        """Subgraph on the given vertices; returns (graph, old index of each new vertex)."""
        verts = sorted(int(v) for v in vertices)
        pos = {v: i for i, v in enumerate(verts)}
        vset = np.zeros(self.n, dtype=bool)
        vset[verts] = True
        rows = []
        for v in verts:
            row = self.row(v)
            rows.append([pos[int(w)] for w in row[vset[row]]])
        colors = self.colors[verts] if verts else np.zeros(0, dtype=np.int64)
        return ColoredDigraph.from_rows(rows, self.directed, colors, check=False), verts

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"ColoredDigraph({kind}, n={self.n}, m={self.edge_count()})"


def complete_graph(n: int, colors=None) -> ColoredDigraph:
    rows = [[w for w in range(n) if w != v] for v in range(n)]
    return ColoredDigraph.from_rows(rows, directed=False, colors=colors, check=False)


# ---------------------------------------------------------------------------
# power graphs


def build_directed_power_graph(group: CayleyTable) -> ColoredDigraph:
    """DPow(G): arc (x, y) for every y in <x>, self-loop included.

    Out-degree of x therefore equals the order of x.  All colours 0.
    """
    subs = group.cyclic_subgroups()
    rows = [sorted(subs[x]) for x in range(group.n)]
    return ColoredDigraph.from_rows(rows, directed=True, check=False)


def build_power_graph(group: CayleyTable) -> ColoredDigraph:
    """Pow(G): undirected, loop-free; {x,y} iff x in <y> or y in <x>."""
    n = group.n
    member = np.zeros((n, n), dtype=bool)
    subs = group.cyclic_subgroups()
    for x in range(n):
        member[x, sorted(subs[x])] = True
    adj = member | member.T
    np.fill_diagonal(adj, False)
    rows = [np.nonzero(adj[v])[0] for v in range(n)]
    return ColoredDigraph.from_rows(rows, directed=False, check=False)


@lru_cache(maxsize=4)
def _cyclic_power_graph_csr(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """CSR adjacency of Pow(Z_n) from divisor classes, plus element orders.

    In a cyclic group adjacency is exactly divisibility of element orders,
    so vertices group into divisor classes with all-or-nothing adjacency.
    """
    idx = np.arange(n, dtype=np.int64)
    orders = n // np.gcd(idx, n)
    divs = divisors(n)
    members = {d: np.nonzero(orders == d)[0].astype(np.int32) for d in divs}
    neighborhoods = {}
    for d in divs:
        comparable = [d2 for d2 in divs if d % d2 == 0 or d2 % d == 0]
        neighborhoods[d] = np.sort(np.concatenate([members[d2] for d2 in comparable]))
    indptr = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        indptr[v + 1] = indptr[v] + neighborhoods[int(orders[v])].size - 1
    indices = np.empty(int(indptr[-1]), dtype=np.int32)
    for v in range(n):
        nb = neighborhoods[int(orders[v])]
        pos = int(np.searchsorted(nb, v))
        indices[indptr[v] : indptr[v + 1]] = np.concatenate([nb[:pos], nb[pos + 1 :]])
    orders.setflags(write=False)
    return indptr, indices, orders


def power_graph_of_cyclic(n: int, vertex_limit: int = 10**6) -> ColoredDigraph:
    """Pow(Z_n) without constructing the Cayley table; scales to large n."""
    if n > vertex_limit:
        raise LimitExceeded(f"{n} vertices exceed the budget {vertex_limit}")
    indptr, indices, _ = _cyclic_power_graph_csr(n)
    return ColoredDigraph(n, False, np.zeros(n, dtype=np.int64), indptr, indices, check=False)


def cyclic_element_orders(n: int) -> np.ndarray:
    """Additive orders of 0..n-1 in Z_n."""
    return _cyclic_power_graph_csr(n)[2]


# ---------------------------------------------------------------------------
# closed twin classes and reduced graphs


def closed_twin_classes(graph: ColoredDigraph) -> list[tuple[int, ...]]:
    """Partition a directed graph by equal closed out-neighbourhood.

    The closed out-neighbourhood always includes the vertex itself, whether
    or not a self-loop is stored.  Classes are sorted by smallest member.
    """
    if not graph.directed:
        raise InputError("closed twin classes are defined for directed graphs")
    buckets: dict[bytes, list[int]] = {}
    for v in range(graph.n):
        row = graph.row(v)
        i = int(np.searchsorted(row, v))
        if i < row.size and int(row[i]) == v:
            key = row.tobytes()
        else:
            key = np.insert(row, i, np.int32(v)).tobytes()
        buckets.setdefault(key, []).append(v)
    return sorted((tuple(b) for b in buckets.values()), key=lambda c: c[0])


class ReducedGraph:
    """Coloured DAG of closed twin-classes: class colour = common out-degree.

    Holds class colours, class sizes, loop-free directed edges between
    distinct classes, and (when built from a concrete graph) the member
    vertex sets.  Immutable after construction.
    """

    __slots__ = ("colors", "sizes", "edges", "members", "_out", "_in")

    def __init__(self, colors, sizes, edges, members=None):
        self.colors = tuple(int(c) for c in colors)
        self.sizes = tuple(int(s) for s in sizes)
        self.edges = frozenset((int(a), int(b)) for a, b in edges)
        self.members = None if members is None else tuple(tuple(m) for m in members)
        k = len(self.colors)
        if len(self.sizes) != k:
            raise InputError("colors and sizes length mismatch")
        if any(s < 1 for s in self.sizes) or any(c < 1 for c in self.colors):
            raise InputError("class colors and sizes must be positive")
        out = [[] for _ in range(k)]
        inn = [[] for _ in range(k)]
        for a, b in sorted(self.edges):
            if a == b or not (0 <= a < k and 0 <= b < k):
                raise InputError("reduced-graph edges must join distinct classes in range")
            out[a].append(b)
            inn[b].append(a)
        self._out = tuple(map(tuple, out))
        self._in = tuple(map(tuple, inn))

    @property
    def k(self) -> int:
        return len(self.colors)

    def total_vertices(self) -> int:
        return sum(self.sizes)

    def out_neighbors(self, c: int) -> tuple[int, ...]:
        return self._out[c]

    def in_neighbors(self, c: int) -> tuple[int, ...]:
        return self._in[c]

    def has_edge(self, a: int, b: int) -> bool:
        return (a, b) in self.edges

    def invariant_key(self) -> tuple:
        """Cheap colour-isomorphism invariant for prefiltering candidate sweeps."""
        sig = sorted(
            (self.colors[c], self.sizes[c], len(self._out[c]), len(self._in[c]))
            for c in range(self.k)
        )
        return (self.k, len(self.edges), tuple(sig))

    def induced(self, class_ids) -> "ReducedGraph":
        """Sub-reduced-graph on the given classes, renumbered in the given order."""
        class_ids = list(class_ids)
        pos = {c: i for i, c in enumerate(class_ids)}
        edges = [(pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos]
        return ReducedGraph(
            colors=[self.colors[c] for c in class_ids],
            sizes=[self.sizes[c] for c in class_ids],
            edges=edges,
            members=None if self.members is None else [self.members[c] for c in class_ids],
        )

    def replace_edges(self, edges) -> "ReducedGraph":
        return ReducedGraph(self.colors, self.sizes, edges, self.members)

    def __repr__(self):
        return f"ReducedGraph(k={self.k}, m={len(self.edges)}, n={self.total_vertices()})"


def reduce_digraph(graph: ColoredDigraph) -> ReducedGraph:
    """Quotient a directed graph by closed twin-classes.

    Class colour is the out-degree (self-loop counted if stored) of any
    member; edges are loop-free and join distinct classes only.
    """
    classes = closed_twin_classes(graph)
    class_of = {}
    for ci, members in enumerate(classes):
        for v in members:
            class_of[v] = ci
    colors = [graph.out_degree(c[0]) for c in classes]
    edges = set()
    for ci, members in enumerate(classes):
        for w in graph.row(members[0]):
            cw = class_of[int(w)]
            if cw != ci:
                edges.add((ci, cw))
    return ReducedGraph(colors, [len(c) for c in classes], edges, members=classes)


def reduced_power_digraph(group: CayleyTable) -> ReducedGraph:
    """R(DPow(G)) built directly from generator classes.

    Same result as reduce_digraph(build_directed_power_graph(G)) without
    materializing the quadratic graph.
    """
    part = generator_classes(group)
    subs = group.cyclic_subgroups()
    edges = set()
    for ci, members in enumerate(part.classes):
        for y in subs[members[0]]:
            cy = part.class_of[y]
            if cy != ci:
                edges.add((ci, cy))
    return ReducedGraph(part.class_order, [len(c) for c in part.classes], edges, members=part.classes)


# ---------------------------------------------------------------------------
# colour isomorphism of reduced graphs


def _joint_reduced_keys(r1: ReducedGraph, r2: ReducedGraph):
    """Refine (colour, size) cells by in/out neighbour key multisets.

    The renaming table each round is built from the union of both graphs'
    signatures, so keys are comparable across the two graphs.
    """
    k1 = [(r1.colors[c], r1.sizes[c]) for c in range(r1.k)]
    k2 = [(r2.colors[c], r2.sizes[c]) for c in range(r2.k)]
    ncells = len(set(k1) | set(k2))
    for _ in range(r1.k + 1):
        s1 = [
            (k1[c], tuple(sorted(k1[w] for w in r1.out_neighbors(c))), tuple(sorted(k1[w] for w in r1.in_neighbors(c))))
            for c in range(r1.k)
        ]
        s2 = [
            (k2[c], tuple(sorted(k2[w] for w in r2.out_neighbors(c))), tuple(sorted(k2[w] for w in r2.in_neighbors(c))))
            for c in range(r2.k)
        ]
        table = {sig: i for i, sig in enumerate(sorted(set(s1) | set(s2)))}
        k1 = [table[s] for s in s1]
        k2 = [table[s] for s in s2]
        if len(table) == ncells:
            break
        ncells = len(table)
    return k1, k2


def color_isomorphic(r1: ReducedGraph, r2: ReducedGraph) -> dict[int, int] | None:
    """Colour-, size- and edge-preserving bijection of classes, or None.

    Deterministic: backtracking over refinement cells, lowest index first.
    """
    if r1.k != r2.k or len(r1.edges) != len(r2.edges):
        return None
    if sorted(zip(r1.colors, r1.sizes)) != sorted(zip(r2.colors, r2.sizes)):
        return None
    key1, key2 = _joint_reduced_keys(r1, r2)
    if sorted(key1) != sorted(key2):
        return None
    cands = {c: [d for d in range(r2.k) if key2[d] == key1[c]] for c in range(r1.k)}
    order = sorted(range(r1.k), key=lambda c: (len(cands[c]), c))
    mapping: dict[int, int] = {}
    used = [False] * r2.k

    def feasible(c: int, d: int) -> bool:
        for b in r1.out_neighbors(c):
            if b in mapping and not r2.has_edge(d, mapping[b]):
                return False
        for a in r1.in_neighbors(c):
            if a in mapping and not r2.has_edge(mapping[a], d):
                return False
        for b, mb in mapping.items():
            if r2.has_edge(d, mb) != r1.has_edge(c, b):
                return False
            if r2.has_edge(mb, d) != r1.has_edge(b, c):
                return False
        return True

    def dfs(i: int) -> bool:
        if i == r1.k:
            return True
        c = order[i]
        for d in cands[c]:
            if not used[d] and feasible(c, d):
                mapping[c] = d
                used[d] = True
                if dfs(i + 1):
                    return True
                del mapping[c]
                used[d] = False
        return False

    if not dfs(0):
        return None
    result = dict(mapping)
    assert verify_color_iso(r1, r2, result)
    return result


def verify_color_iso(r1: ReducedGraph, r2: ReducedGraph, mapping: dict[int, int]) -> bool:
    """Independent checker: bijective, colour-, size- and edge-preserving both ways."""
    if len(mapping) != r1.k or r1.k != r2.k:
        return False
    if sorted(mapping.values()) != list(range(r2.k)):
        return False
    for c, d in mapping.items():
        if r1.colors[c] != r2.colors[d] or r1.sizes[c] != r2.sizes[d]:
            return False
    return {(mapping[a], mapping[b]) for a, b in r1.edges} == set(r2.edges)


# ---------------------------------------------------------------------------
# undirected isomorphism (desk-scale, exact)


def _joint_undirected_keys(g1: ColoredDigraph, g2: ColoredDigraph, use_colors: bool):
    k1 = [(int(g1.colors[v]) if use_colors else 0, g1.out_degree(v)) for v in range(g1.n)]
    k2 = [(int(g2.colors[v]) if use_colors else 0, g2.out_degree(v)) for v in range(g2.n)]
    ncells = len(set(k1) | set(k2))
    for _ in range(g1.n + 1):
        s1 = [(k1[v], tuple(sorted(k1[int(w)] for w in g1.row(v)))) for v in range(g1.n)]
        s2 = [(k2[v], tuple(sorted(k2[int(w)] for w in g2.row(v)))) for v in range(g2.n)]
        table = {sig: i for i, sig in enumerate(sorted(set(s1) | set(s2)))}
        k1 = [table[s] for s in s1]
        k2 = [table[s] for s in s2]
        if len(table) == ncells:
            break
        ncells = len(table)
    return k1, k2


def undirected_isomorphic(
    g1: ColoredDigraph, g2: ColoredDigraph, ignore_colors: bool = False
) -> list[int] | None:
    """Vertex bijection preserving edges (and colours unless ignored), or None.

    Exact backtracking with signature refinement; deterministic first mapping.
    """
    if g1.directed or g2.directed:
        raise InputError("undirected_isomorphic expects undirected graphs")
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return None
    use_colors = not ignore_colors
    if use_colors and sorted(g1.colors.tolist()) != sorted(g2.colors.tolist()):
        return None
    key1, key2 = _joint_undirected_keys(g1, g2, use_colors)
    if sorted(key1) != sorted(key2):
        return None
    n = g1.n
    cand = {v: [w for w in range(n) if key2[w] == key1[v]] for v in range(n)}
    order = sorted(range(n), key=lambda v: (len(cand[v]), v))
    adj1 = [_bitmask(g1.row(v)) for v in range(n)]
    adj2 = [_bitmask(g2.row(v)) for v in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def dfs(i: int, mapped_img: int) -> bool:
        if i == n:
            return True
        v = order[i]
        req = 0
        for u in _bits(adj1[v]):
            if mapping[u] != -1:
                req |= 1 << mapping[u]
        for w in cand[v]:
            if used[w] or (adj2[w] & mapped_img) != req:
                continue
            mapping[v] = w
            used[w] = True
            if dfs(i + 1, mapped_img | (1 << w)):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    if not dfs(0, 0):
        return None
    assert _is_undirected_iso(g1, g2, mapping, use_colors)
    return list(mapping)


def _bitmask(row) -> int:
    m = 0
    for w in row:
        m |= 1 << int(w)
    return m


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _is_undirected_iso(g1, g2, mapping, use_colors) -> bool:
    if use_colors and any(int(g1.colors[v]) != int(g2.colors[mapping[v]]) for v in range(g1.n)):
        return False
    if g1.edge_count() != g2.edge_count():
        return False
    return all(g2.has_edge(mapping[u], mapping[v]) for u, v in g1.edge_list())


# ---------------------------------------------------------------------------
# automorphism counting


def automorphism_count(graph: ColoredDigraph, scan_limit: int = 8, limit: int = 64) -> int:
    """|Aut| of an undirected coloured graph, by exhaustive search.

    Full permutation scan up to scan_limit vertices; exhaustive depth-first
    backtracking beyond that; errors above `limit`.
    """
    if graph.directed:
        raise InputError("automorphism_count expects an undirected graph")
    n = graph.n
    if n > limit:
        raise LimitExceeded(f"{n} vertices exceed the automorphism bound {limit}")
    if n == 0:
        return 1
    if n <= scan_limit:
        return _aut_count_scan(graph)
    cells = [(int(graph.colors[v]), graph.out_degree(v)) for v in range(n)]
    table = {c: i for i, c in enumerate(sorted(set(cells)))}
    groups = np.array([table[c] for c in cells], dtype=np.int64)
    adj = np.zeros((n, n), dtype=np.uint8)
    for u, v in graph.edge_list():
        adj[u, v] = adj[v, u] = 1
    if HAVE_NUMBA:
        return int(_aut_count_numba(adj, groups))
    return _aut_count_python(adj, groups.tolist())


def _aut_count_scan(graph: ColoredDigraph) -> int:
    n = graph.n
    adj = [[graph.has_edge(u, v) for v in range(n)] for u in range(n)]
    colors = graph.colors.tolist()
    count = 0
    for perm in itertools.permutations(range(n)):
        ok = True
        for u in range(n):
            if colors[u] != colors[perm[u]]:
                ok = False
                break
            au, pu = adj[u], perm[u]
            for v in range(u + 1, n):
                if au[v] != adj[pu][perm[v]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def _aut_count_python(adj: np.ndarray, groups: list[int]) -> int:
    n = adj.shape[0]
    adjm = [_bitmask(np.nonzero(adj[v])[0]) for v in range(n)]
    mapping = [-1] * n
    count = 0

    def dfs(d: int, used_mask: int, img_mask: int):
        nonlocal count
        if d == n:
            count += 1
            return
        req = 0
        for u in _bits(adjm[d] & ((1 << d) - 1)):
            req |= 1 << mapping[u]
        for c in range(n):
            if used_mask >> c & 1 or groups[c] != groups[d]:
                continue
            if (adjm[c] & img_mask) != req:
                continue
            mapping[d] = c
            dfs(d + 1, used_mask | (1 << c), img_mask | (1 << c))
            mapping[d] = -1

    dfs(0, 0, 0)
    return count


if HAVE_NUMBA:

    @njit(cache=True)
    def _aut_count_numba(adj, groups):  # pragma: no cover - exercised via wrapper
        n = adj.shape[0]
        perm = np.full(n, -1, np.int64)
        cand = np.full(n, -1, np.int64)
        used = np.zeros(n, np.uint8)
        count = 0
        d = 0
        while d >= 0:
            c = cand[d] + 1
            if perm[d] != -1:
                used[perm[d]] = 0
                perm[d] = -1
            found = -1
            while c < n:
                if used[c] == 0 and groups[c] == groups[d]:
                    ok = True
                    for j in range(d):
                        if adj[d, j] != adj[c, perm[j]]:
                            ok = False
                            break
                    if ok:
                        found = c
                        break
                c += 1
            if found == -1:
                cand[d] = -1
                d -= 1
                continue
            cand[d] = found
            perm[d] = found
            used[found] = 1
            if d == n - 1:
                count += 1
                # stay at this depth; the next iteration advances cand[d]
            else:
                d += 1
        return count


def aut_pow_cyclic_formula(n: int) -> int:
    """(phi(n)+1)! * prod over divisors 1 < d < n of phi(d)!

    The closed form for |Aut(Pow(Z_n))|; requires n >= 6 with at least two
    distinct prime factors.
    """
    if n < 6 or is_prime_power(n):
        raise InputError("the closed form requires n >= 6 with two distinct prime factors")
    total = math.factorial(euler_phi(n) + 1)
    for d in divisors(n):
        if d not in (1, n):
            total *= math.factorial(euler_phi(d))
    return total


# ---------------------------------------------------------------------------
# twin types (neighbourhood diversity), components, domination


def twin_types(graph: ColoredDigraph) -> tuple[list[tuple[int, ...]], list[bool]]:
    """Partition into maximal same-type sets; flag each clique or independent.

    Two vertices have the same type iff their neighbourhoods agree outside
    the pair itself, i.e. they are true twins (equal closed neighbourhoods)
    or false twins (equal open neighbourhoods).  Singletons count as cliques.
    """
    if graph.directed:
        raise InputError("twin types are defined for undirected graphs")
    n = graph.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    open_seen: dict[bytes, int] = {}
    closed_seen: dict[bytes, int] = {}
    for v in range(n):
        row = graph.row(v)
        k_open = row.tobytes()
        k_closed = np.insert(row, int(np.searchsorted(row, v)), np.int32(v)).tobytes()
        if k_open in open_seen:
            union(open_seen[k_open], v)
        else:
            open_seen[k_open] = v
        if k_closed in closed_seen:
            union(closed_seen[k_closed], v)
        else:
            closed_seen[k_closed] = v
    buckets: dict[int, list[int]] = {}
    for v in range(n):
        buckets.setdefault(find(v), []).append(v)
    classes = sorted((tuple(b) for b in buckets.values()), key=lambda c: c[0])
    flags = [len(c) == 1 or graph.has_edge(c[0], c[1]) for c in classes]
    return classes, flags


def connected_components(graph: ColoredDigraph) -> list[tuple[int, ...]]:
    """Components of an undirected graph, each sorted, ordered by smallest vertex."""
    if graph.directed:
        raise InputError("connected_components expects an undirected graph")
    seen = [False] * graph.n
    comps = []
    for s in range(graph.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in graph.row(v):
                w = int(w)
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_dominating(graph: ColoredDigraph, component, v: int) -> bool:
    """True iff the closed neighbourhood of v inside the component covers it."""
    comp = set(int(x) for x in component)
    if v not in comp:
        raise InputError("vertex not in component")
    covered = {v} | {int(w) for w in graph.row(v) if int(w) in comp}
    return covered == comp
