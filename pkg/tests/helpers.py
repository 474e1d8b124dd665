"""Shared constructions and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from powgraph import (
    CayleyTable,
    abelian_p_group,
    cyclic_group,
    direct_product,
    heisenberg_group,
    raw_group,
)
from powgraph.numtheory import factorize
from powgraph.presentations import (
    collect_presentation,
    dihedral_presentation,
    quaternion_presentation,
)


def symmetric_group_table(k: int) -> CayleyTable:
    """S_k as a raw table (composition of permutation tuples)."""
    perms = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = [[0] * n for _ in range(n)]
    for i, a in enumerate(perms):
        for j, b in enumerate(perms):
            table[i][j] = index[tuple(a[b[t]] for t in range(k))]
    identity = index[tuple(range(k))]
    return raw_group(table, identity)


@lru_cache(maxsize=None)
def dihedral8() -> CayleyTable:
    return collect_presentation(dihedral_presentation())


@lru_cache(maxsize=None)
def quaternion8() -> CayleyTable:
    return collect_presentation(quaternion_presentation())


def partitions_oracle(m: int) -> int:
    """Independent partition counter (recursive, no shared code)."""

    @lru_cache(maxsize=None)
    def count(rest, cap):
        if rest == 0:
            return 1
        return sum(count(rest - first, first) for first in range(min(rest, cap), 0, -1))

    return count(m, m)


def abelian_groups_upto(limit: int):
    """Yield (name, table) for every abelian group of order 2..limit."""
    for n in range(2, limit + 1):
        for name, table in abelian_groups_of_order(n):
            yield name, table


def abelian_groups_of_order(n: int):
    from powgraph import enumerate_partitions

    per_prime = []
    for p, a in factorize(n):
        per_prime.append([(p, part) for part in enumerate_partitions(a)])
    for combo in itertools.product(*per_prime):
        tables = [abelian_p_group(p, part) for p, part in combo]
        name = "x".join(
            f"Z{p}^{part}" if len(part) > 1 else f"Z{p**part[0]}" for p, part in combo
        )
        yield name, tables[0] if len(tables) == 1 else direct_product(tables)


def directed_iso_exists(g1, g2) -> bool:
    """Brute-force directed-graph isomorphism oracle (small n only)."""
    if g1.n != g2.n or g1.indices.size != g2.indices.size:
        return False
    n = g1.n

    def sig(g):
        indeg = [0] * n
        for v in range(n):
            for w in g.row(v):
                indeg[int(w)] += 1
        return [(g.out_degree(v), indeg[v]) for v in range(n)]

    s1, s2 = sig(g1), sig(g2)
    if sorted(s1) != sorted(s2):
        return False
    cands = [[w for w in range(n) if s2[w] == s1[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: (len(cands[v]), v))
    mapping = [-1] * n
    used = [False] * n

    def ok(v, w):
        for u in range(n):
            mu = mapping[u]
            if mu < 0:
                continue
            if g1.has_edge(v, u) != g2.has_edge(w, mu):
                return False
            if g1.has_edge(u, v) != g2.has_edge(mu, w):
                return False
        return g1.has_edge(v, v) == g2.has_edge(w, w)

    def dfs(i):
        if i == n:
            return True
        v = order[i]
        for w in cands[v]:
            if not used[w] and ok(v, w):
                mapping[v] = w
                used[w] = True
                if dfs(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return dfs(0)


def random_coloring(rng, n, colors=6):
    return [rng.randint(1, colors) for _ in range(n)]


def edge_set(graph):
    return set(graph.edge_list())
