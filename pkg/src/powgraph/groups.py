"""Explicit finite groups as Cayley tables, plus the constructions the
reductions and recognizers need: cyclic groups, abelian p-groups, direct
products, the Heisenberg group mod p, and raw user tables.

Element indexing convention: the identity is index 0 in every constructed
group; raw tables may place it anywhere (recorded in ``identity``).
Tables are numpy int32 arrays and are frozen after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import InputError, LimitExceeded, NotNilpotent
from .numtheory import euler_phi, factorize, is_prime

DEFAULT_ORDER_LIMIT = 2048
ASSOC_VERIFY_LIMIT = 512


class CayleyTable:
    """A finite group given by its full multiplication table.

    table[i, j] is the index of the product of elements i and j.
    """

    __slots__ = ("n", "table", "identity", "_orders", "_subgroups")

    def __init__(self, table, identity: int = 0, verify: bool = True):
        arr = np.asarray(table, dtype=np.int32)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise InputError("Cayley table must be square")
        self.n = int(arr.shape[0])
        self.table = arr
        self.table.setflags(write=False)
        self.identity = int(identity)
        self._orders = None
        self._subgroups = None
        if verify:
            self.verify()

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"CayleyTable(n={self.n}, identity={self.identity})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, x: int, k: int) -> int:
        """x^k for k >= 0 (k = 0 gives the identity)."""
        acc = self.identity
        base = x
        while k > 0:
            if k & 1:
                acc = int(self.table[acc, base])
            base = int(self.table[base, base])
            k >>= 1
        return acc

    def inverse(self, x: int) -> int:
        row = self.table[x]
        return int(np.nonzero(row == self.identity)[0][0])

    def verify(self) -> None:
        """Check Latin-square, identity, and full associativity (O(n^3))."""
        t, n, e = self.table, self.n, self.identity
        if t.min() < 0 or t.max() >= n:
            raise InputError("table entries out of range")
        idx = np.arange(n)
        if not (np.sort(t, axis=1) == idx).all() or not (np.sort(t, axis=0) == idx[:, None]).all():
            raise InputError("table is not a Latin square")
        if not (t[e] == idx).all() or not (t[:, e] == idx).all():
            raise InputError(f"index {e} is not a two-sided identity")
        for a in range(n):
            if not (t[t[a]] == t[a][t]).all():
                raise InputError("table is not associative")

    def element_orders(self) -> np.ndarray:
        """Order of every element (cached)."""
        if self._orders is None:
            self._cyclic_data()
        return self._orders

    def cyclic_subgroups(self) -> list[frozenset]:
        """<x> for every element x (cached)."""
        if self._subgroups is None:
            self._cyclic_data()
        return self._subgroups

    def _cyclic_data(self) -> None:
        n, t, e = self.n, self.table, self.identity
        orders = np.zeros(n, dtype=np.int64)
        subs = []
        for x in range(n):
            seen = [x]
            y = x
            while y != e:
                y = int(t[y, x])
                seen.append(y)
            orders[x] = len(seen) if x != e else 1
            subs.append(frozenset(seen))
        orders.setflags(write=False)
        self._orders = orders
        self._subgroups = subs


def element_order(group: CayleyTable, x: int) -> int:
    """Least k >= 1 with x^k = identity."""
    if not 0 <= x < group.n:
        raise InputError(f"element index {x} out of range")
    return int(group.element_orders()[x])


def cyclic_subgroup(group: CayleyTable, x: int) -> frozenset:
    """The set {x^m : m >= 1}; always contains the identity."""
    if not 0 <= x < group.n:
        raise InputError(f"element index {x} out of range")
    return group.cyclic_subgroups()[x]


@dataclass(frozen=True)
class ClassPartition:
    """Partition of a group by 'generates the same cyclic subgroup'."""

    classes: tuple[tuple[int, ...], ...]
    class_order: tuple[int, ...]  # common element order per class
    class_of: tuple[int, ...]  # element index -> class index

    def __len__(self) -> int:
        return len(self.classes)


def generator_classes(group: CayleyTable) -> ClassPartition:
    """Group elements by equality of the cyclic subgroup they generate.

    Classes are indexed by their smallest member; each class has size
    phi(order of its elements).
    """
    subs = group.cyclic_subgroups()
    orders = group.element_orders()
    by_sub: dict[frozenset, list[int]] = {}
    for x in range(group.n):
        by_sub.setdefault(subs[x], []).append(x)
    classes = sorted((tuple(sorted(v)) for v in by_sub.values()), key=lambda c: c[0])
    class_of = [0] * group.n
    for ci, members in enumerate(classes):
        for x in members:
            class_of[x] = ci
    return ClassPartition(
        classes=tuple(classes),
        class_order=tuple(int(orders[c[0]]) for c in classes),
        class_of=tuple(class_of),
    )


def sylow_decomposition(group: CayleyTable) -> list[tuple[int, frozenset]]:
    """For each prime p | |G|, the set of elements of p-power order.

    Succeeds exactly when each such set is closed under multiplication,
    which for these sets is the nilpotence witness.
    """
    n = group.n
    orders = group.element_orders()
    out = []
    total = 1
    for p, _ in factorize(n):
        members = [x for x in range(n) if _is_ppower(int(orders[x]), p)]
        mset = frozenset(members)
        sub = group.table[np.ix_(members, members)]
        if not all(int(v) in mset for v in sub.flat):
            raise NotNilpotent(f"elements of {p}-power order are not closed under product")
        out.append((p, mset))
        total *= len(members)
    if total != n:
        raise NotNilpotent("Sylow set sizes do not multiply to |G|")
    return out


def _is_ppower(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


# ---------------------------------------------------------------------------
# constructors


def cyclic_group(n: int, order_limit: int = DEFAULT_ORDER_LIMIT) -> CayleyTable:
    """Z_n as addition mod n; identity 0."""
    if n < 1:
        raise InputError("cyclic group order must be >= 1")
    _check_limit(n, order_limit)
    idx = np.arange(n, dtype=np.int32)
    table = (idx[:, None] + idx[None, :]) % n
    return CayleyTable(table, 0, verify=n <= ASSOC_VERIFY_LIMIT)


def direct_product(groups: list[CayleyTable], order_limit: int = DEFAULT_ORDER_LIMIT) -> CayleyTable:
    """Componentwise product with lexicographic element indexing."""
    if not groups:
        raise InputError("direct product of zero groups is not supported; use cyclic_group(1)")
    acc = groups[0]
    for g in groups[1:]:
        _check_limit(acc.n * g.n, order_limit)
        t = (acc.table[:, None, :, None].astype(np.int64) * g.n + g.table[None, :, None, :]).reshape(
            acc.n * g.n, acc.n * g.n
        )
        ident = acc.identity * g.n + g.identity
        acc = CayleyTable(t.astype(np.int32), ident, verify=acc.n * g.n <= ASSOC_VERIFY_LIMIT)
    return acc


def abelian_p_group(p: int, partition: list[int], order_limit: int = DEFAULT_ORDER_LIMIT) -> CayleyTable:
    """Z_{p^r1} x ... x Z_{p^rk} for a partition r1 >= ... >= rk >= 1."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if not partition or any(r < 1 for r in partition):
        raise InputError("partition entries must be >= 1")
    if list(partition) != sorted(partition, reverse=True):
        raise InputError("partition must be non-increasing")
    _check_limit(p ** sum(partition), order_limit)
    return direct_product([cyclic_group(p**r, order_limit) for r in partition], order_limit)


def heisenberg_group(p: int, order_limit: int = DEFAULT_ORDER_LIMIT) -> CayleyTable:
    """Unitriangular 3x3 matrices over Z_p; order p^3, identity 0.

    Element (a, b, c) is indexed a*p^2 + b*p + c and multiplies as
    (a, b, c)(a', b', c') = (a+a', b+b', c+c'+a*b') mod p.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    n = p**3
    _check_limit(n, order_limit)
    idx = np.arange(n)
    a, b, c = idx // (p * p), (idx // p) % p, idx % p
    a2, b2, c2 = a[None, :], b[None, :], c[None, :]
    a1, b1, c1 = a[:, None], b[:, None], c[:, None]
    table = ((a1 + a2) % p) * p * p + ((b1 + b2) % p) * p + (c1 + c2 + a1 * b2) % p
    return CayleyTable(table.astype(np.int32), 0, verify=n <= ASSOC_VERIFY_LIMIT)


def raw_group(table, identity: int, order_limit: int = DEFAULT_ORDER_LIMIT) -> CayleyTable:
    """Wrap an untrusted user table; always fully verified."""
    arr = np.asarray(table)
    _check_limit(arr.shape[0], order_limit)
    return CayleyTable(arr, identity, verify=True)


def _check_limit(n: int, order_limit: int) -> None:
    if n > order_limit:
        raise LimitExceeded(f"group order {n} exceeds the limit {order_limit}")


# ---------------------------------------------------------------------------
# group specs (the CLI mini-language binds to these)


@dataclass(frozen=True)
class GroupSpec:
    """High-level description of a group to build.

    kind is one of 'cyclic', 'abelianp', 'product', 'heisenberg',
    'polycyclic', 'raw'; the payload fields used depend on the kind.
    """

    kind: str
    n: int = 0
    p: int = 0
    partition: tuple[int, ...] = ()
    factors: tuple["GroupSpec", ...] = ()
    presentation: object = None
    table: object = None
    identity: int = 0

    def describe(self) -> str:
        if self.kind == "cyclic":
            return f"cyclic:{self.n}"
        if self.kind == "abelianp":
            return f"abelianp:{self.p}^[{','.join(map(str, self.partition))}]"
        if self.kind == "product":
            return "product:(" + ",".join(f.describe() for f in self.factors) + ")"
        if self.kind == "heisenberg":
            return f"heisenberg:{self.p}"
        if self.kind == "polycyclic":
            return f"polycyclic:{self.presentation}"
        return "raw"


def build_group(spec: GroupSpec, order_limit: int = DEFAULT_ORDER_LIMIT) -> CayleyTable:
    """Realize a GroupSpec as an explicit Cayley table."""
    if spec.kind == "cyclic":
        return cyclic_group(spec.n, order_limit)
    if spec.kind == "abelianp":
        return abelian_p_group(spec.p, list(spec.partition), order_limit)
    if spec.kind == "product":
        return direct_product([build_group(f, order_limit) for f in spec.factors], order_limit)
    if spec.kind == "heisenberg":
        return heisenberg_group(spec.p, order_limit)
    if spec.kind == "polycyclic":
        from .presentations import collect_presentation

        return collect_presentation(spec.presentation, order_limit)
    if spec.kind == "raw":
        return raw_group(spec.table, spec.identity, order_limit)
    raise InputError(f"unknown group spec kind {spec.kind!r}")


# ---------------------------------------------------------------------------
# abelian enumeration


def enumerate_partitions(m: int) -> list[list[int]]:
    """All partitions of m, non-increasing, in descending lexicographic order."""
    if m < 1:
        raise InputError("enumerate_partitions expects m >= 1")

    def rec(rest: int, cap: int) -> list[list[int]]:
        if rest == 0:
            return [[]]
        out = []
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                out.append([first] + tail)
        return out

    return rec(m, m)


def enumerate_abelian_p_groups(
    p: int, m: int, order_limit: int = DEFAULT_ORDER_LIMIT
) -> list[CayleyTable]:
    """One group per partition of m: all abelian groups of order p^m."""
    _check_limit(p**m, order_limit)
    return [abelian_p_group(p, part, order_limit) for part in enumerate_partitions(m)]


def abelian_specs(p: int, m: int) -> list[GroupSpec]:
    """Specs matching enumerate_abelian_p_groups, in the same order."""
    return [GroupSpec(kind="abelianp", p=p, partition=tuple(part)) for part in enumerate_partitions(m)]
