"""Polycyclic presentations of p-groups: collection, table construction,
and exhaustive enumeration of bounded-length presentations.

Conventions.  Generators g_1 .. g_c, with g_1 outermost and g_c deepest:
<g_{i+1}, ..., g_c> is normal in <g_i, ..., g_c> with cyclic quotient of
order p^{e_i}.  Normal form is the word g_c^{l_c} ... g_2^{l_2} g_1^{l_1}
(deepest generator leftmost), 0 <= l_i < p^{e_i}; the element index is the
mixed-radix value of (l_1, ..., l_c) with l_1 most significant, so the
identity is always index 0.

Relations, for i < j (0-based indices in code, g_i outer):
    conjugate:  g_i * g_j = w_{i,j} * g_i      with w_{i,j} over gens > i
    power:      g_i ** p^{e_i} = w''_i         with w''_i  over gens > i
Right-hand sides are stored as full-length exponent tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InconsistentPresentation, InputError, LimitExceeded
from .groups import (
    DEFAULT_ORDER_LIMIT,
    CayleyTable,
    _check_limit,
    cyclic_group,
)
from .numtheory import is_prime


@dataclass(frozen=True)
class PolycyclicPresentation:
    """A consistent-candidate presentation of a p-group of order p^sum(exponents)."""

    p: int
    exponents: tuple[int, ...]  # e_1 .. e_c; generator i has relative order p^e_i
    power_rhs: tuple[tuple[int, ...], ...]  # rhs of g_i^(p^e_i), one per generator
    conjugate_rhs: dict  # (i, j) with i < j  ->  rhs exponent tuple of g_i g_j g_i^-1

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")
        c = len(self.exponents)
        if c == 0 or any(e < 1 for e in self.exponents):
            raise InputError("exponents must be positive")
        if len(self.power_rhs) != c:
            raise InputError("need one power relation per generator")
        for i, rhs in enumerate(self.power_rhs):
            self._check_word(rhs, i)
        for (i, j), rhs in self.conjugate_rhs.items():
            if not (0 <= i < j < c):
                raise InputError("conjugate relations need generator pairs i < j")
            self._check_word(rhs, i)
        for i in range(c):
            for j in range(i + 1, c):
                if (i, j) not in self.conjugate_rhs:
                    raise InputError(f"missing conjugate relation for pair ({i},{j})")

    def _check_word(self, rhs, level):
        c = len(self.exponents)
        if len(rhs) != c:
            raise InputError("relation words are full-length exponent tuples")
        radices = [self.p**e for e in self.exponents]
        for u, l in enumerate(rhs):
            if not 0 <= l < radices[u]:
                raise InputError("word exponent out of range")
            if u <= level and l != 0:
                raise InputError("relation words may only use deeper generators")

    @property
    def c(self) -> int:
        return len(self.exponents)

    @property
    def order(self) -> int:
        return self.p ** sum(self.exponents)

    def radices(self) -> tuple[int, ...]:
        return tuple(self.p**e for e in self.exponents)

    def describe(self) -> str:
        return f"p{self.p}e{'.'.join(map(str, self.exponents))}"


def abelian_presentation(p: int, exponents) -> PolycyclicPresentation:
    """The commuting presentation of Z_{p^e1} x ... x Z_{p^ec}."""
    exponents = tuple(exponents)
    c = len(exponents)
    zero = (0,) * c
    conj = {}
    for i in range(c):
        for j in range(i + 1, c):
            unit = list(zero)
            unit[j] = 1
            conj[(i, j)] = tuple(unit)
    return PolycyclicPresentation(p, exponents, (zero,) * c, conj)


def _tuple_to_word(exps) -> list[list[int]]:
    """Exponent tuple -> letters [(gen, exp)], deepest generator first."""
    return [[j, exps[j]] for j in range(len(exps) - 1, -1, -1) if exps[j] > 0]


def collect_word(pres: PolycyclicPresentation, letters, step_cap: int) -> tuple[int, ...]:
    """Rewrite a word to normal form; raises if the step cap is exhausted.

    Counted steps are conjugate-relation applications and power reductions;
    merging equal adjacent generators is free (it shortens the word).
    """
    radices = pres.radices()
    word = [list(l) for l in letters if l[1] > 0]
    steps = 0
    while True:
        changed = False
        i = 0
        while i < len(word):
            gen, exp = word[i]
            if i + 1 < len(word) and word[i + 1][0] == gen:
                word[i][1] += word[i + 1][1]
                word.pop(i + 1)
                changed = True
                break
            if exp >= radices[gen]:
                steps += 1
                if steps > step_cap:
                    raise InconsistentPresentation("collection exceeded its step cap")
                repl = _tuple_to_word(pres.power_rhs[gen])
                rest = [[gen, exp - radices[gen]]] if exp > radices[gen] else []
                word[i : i + 1] = repl + rest
                changed = True
                break
            if i + 1 < len(word) and word[i + 1][0] > gen:
                # outer generator sits left of a deeper one: g_i g_j = w_{i,j} g_i
                steps += 1
                if steps > step_cap:
                    raise InconsistentPresentation("collection exceeded its step cap")
                j, eb = word[i + 1]
                repl = _tuple_to_word(pres.conjugate_rhs[(gen, j)])
                head = [[gen, exp - 1]] if exp > 1 else []
                tail = [[gen, 1]] + ([[j, eb - 1]] if eb > 1 else [])
                word[i : i + 2] = head + repl + tail
                changed = True
                break
            i += 1
        if not changed:
            break
    out = [0] * pres.c
    last = pres.c
    for gen, exp in word:
        if gen >= last:
            raise InconsistentPresentation("collection failed to normalize the word")
        out[gen] = exp
        last = gen
    return tuple(out)


def collect_presentation(
    pres: PolycyclicPresentation, order_limit: int = DEFAULT_ORDER_LIMIT
) -> CayleyTable:
    """Multiply out all normal forms by collection and return the verified table.

    Inconsistent presentations either blow the per-product step cap of
    |G| * c rewrites or produce a table that fails the Latin-square or
    associativity check; both raise InconsistentPresentation.
    """
    n = pres.order
    _check_limit(n, order_limit)
    radices = pres.radices()
    step_cap = n * pres.c
    strides = [1] * pres.c
    for i in range(pres.c - 2, -1, -1):
        strides[i] = strides[i + 1] * radices[i + 1]

    def index_of(exps) -> int:
        return sum(e * s for e, s in zip(exps, strides))

    tuples = [()]
    for r in radices:
        tuples = [t + (v,) for t in tuples for v in range(r)]
    tuples.sort(key=index_of)
    words = [_tuple_to_word(t) for t in tuples]
    table = np.zeros((n, n), dtype=np.int32)
    for x in range(n):
        for y in range(n):
            prod = collect_word(pres, words[x] + words[y], step_cap)
            table[x, y] = index_of(prod)
    try:
        return CayleyTable(table, 0, verify=True)
    except InputError as exc:
        raise InconsistentPresentation(f"collected table is not a group: {exc}") from exc


# ---------------------------------------------------------------------------
# enumeration of all bounded-length p-group presentations
#
# A consistent presentation with generators g_1..g_j is exactly a tower of
# cyclic extensions: G = <g_1> extension of N = <g_2..g_j>, determined by the
# automorphism a = conjugation by g_1 and the power value z = g_1^(p^e1),
# subject to a^(p^e1) = conjugation-by-z and a(z) = z.  Enumerating subgroup
# presentations recursively and extension pairs (a, z) walks the same
# candidate set as enumerating all right-hand-side words and keeping the
# collectable ones, but prunes the inconsistent bulk at the automorphism
# level.  Every emitted table is still fully verified.


class _PcPackage:
    """A group built from a presentation tower: table + generator metadata."""

    __slots__ = ("table", "radices", "_auts", "_orders")

    def __init__(self, table: np.ndarray, radices: tuple[int, ...]):
        self.table = table
        self.radices = radices
        self._auts = None
        self._orders = None

    @property
    def n(self) -> int:
        return int(self.table.shape[0])

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            n, t = self.n, self.table
            orders = np.zeros(n, dtype=np.int64)
            for x in range(n):
                y, k = x, 1
                while y != 0:
                    y = int(t[y, x])
                    k += 1
                orders[x] = 1 if x == 0 else k
            self._orders = orders
        return self._orders

    def automorphisms(self) -> list[np.ndarray]:
        if self._auts is None:
            self._auts = _enumerate_automorphisms(self.table, self.radices, self.element_orders())
        return self._auts


def _power(table: np.ndarray, x: int, k: int) -> int:
    acc = 0
    base = x
    while k > 0:
        if k & 1:
            acc = int(table[acc, base])
        base = int(table[base, base])
        k >>= 1
    return acc


def _enumerate_automorphisms(table, radices, orders) -> list[np.ndarray]:
    """All automorphisms, as permutation arrays, by exhaustive generator images."""
    n = table.shape[0]
    c = len(radices)
    strides = [1] * c
    for i in range(c - 2, -1, -1):
        strides[i] = strides[i + 1] * radices[i + 1]
    gens = [strides[i] for i in range(c)]
    idx = np.arange(n)
    digits = [(idx // strides[i]) % radices[i] for i in range(c)]
    candidates = [np.nonzero(orders == orders[g])[0].tolist() for g in gens]
    auts = []
    for images in _cartesian(candidates):
        phi = np.zeros(n, dtype=np.int32)
        # phi(x) = v_c^{l_c} * ... * v_1^{l_1}, matching the normal form
        powers = []
        for i in range(c):
            pw = [0] * radices[i]
            for e in range(1, radices[i]):
                pw[e] = int(table[pw[e - 1], images[i]])
            powers.append(pw)
        ok = True
        for x in range(n):
            acc = 0
            for i in range(c - 1, -1, -1):
                acc = int(table[acc, powers[i][int(digits[i][x])]])
            phi[x] = acc
        if np.bincount(phi, minlength=n).max() != 1:
            continue
        if not np.array_equal(phi[table], table[np.ix_(phi, phi)]):
            continue
        auts.append(phi)
    return auts


def _cartesian(choices):
    if not choices:
        yield []
        return
    for head in choices[0]:
        for tail in _cartesian(choices[1:]):
            yield [head] + tail


def _conjugation_by(table: np.ndarray, z: int) -> np.ndarray:
    n = table.shape[0]
    zinv = int(np.nonzero(table[z] == 0)[0][0])
    return table[z][table[:, zinv]]


def _compose_power(perm: np.ndarray, k: int) -> np.ndarray:
    acc = np.arange(perm.size, dtype=perm.dtype)
    base = perm
    while k > 0:
        if k & 1:
            acc = base[acc]
        base = base[base]
        k >>= 1
    return acc


def _extend_package(sub: _PcPackage, p: int, e1: int):
    """All cyclic extensions of sub by Z_{p^e1}: one package per valid (a, z)."""
    q = p**e1
    n1 = sub.n
    t1 = sub.table
    n = q * n1
    arange1 = np.arange(n1)
    for alpha in sub.automorphisms():
        alpha_q = _compose_power(alpha, q)
        fixed = np.nonzero(alpha == arange1)[0]
        for z in fixed:
            z = int(z)
            if not np.array_equal(alpha_q, _conjugation_by(t1, z)):
                continue
            alpha_pows = [arange1.astype(np.int32)]
            for _ in range(q - 1):
                alpha_pows.append(alpha[alpha_pows[-1]].astype(np.int32))
            big = np.zeros((n, n), dtype=np.int32)
            for a in range(q):
                base = t1[:, alpha_pows[a]]  # [x, y] -> x * a^a(y)
                for b in range(q):
                    t = a + b
                    if t < q:
                        block = base
                    else:
                        t -= q
                        block = t1[base, z]
                    big[a * n1 : (a + 1) * n1, b * n1 : (b + 1) * n1] = t * n1 + block
            yield _PcPackage(big, (q,) + sub.radices)


@lru_cache(maxsize=None)
def _packages_memo(p: int, m: int, c: int) -> tuple[_PcPackage, ...]:
    return tuple(_iter_packages(p, m, c))


def _iter_packages(p: int, m: int, c: int):
    """All presentation towers for order p^m with at most c generators."""
    if m < 1 or c < 1:
        raise InputError("need m >= 1 and c >= 1")
    for e1 in range(m, 0, -1):
        if e1 == m:
            yield _PcPackage(cyclic_group(p**m).table.copy(), (p**m,))
        elif c >= 2:
            for sub in _packages_memo(p, m - e1, c - 1):
                yield from _extend_package(sub, p, e1)


def iter_polycyclic_tables(p: int, m: int, c: int, order_limit: int = DEFAULT_ORDER_LIMIT):
    """Lazily yield verified Cayley tables of every enumerated candidate.

    The list may contain isomorphic duplicates; callers deduplicate.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if c > m:
        c = m
    _check_limit(p**m, order_limit)
    for pkg in _iter_packages(p, m, c):
        try:
            yield CayleyTable(pkg.table, 0, verify=True)
        except InputError as exc:  # pragma: no cover - extensions are consistent
            raise InconsistentPresentation(f"enumerated table failed verification: {exc}") from exc


def enumerate_polycyclic_p_groups(
    p: int, m: int, c: int, order_limit: int = DEFAULT_ORDER_LIMIT
) -> list[CayleyTable]:
    """All groups of order p^m with polycyclic length <= c (with duplicates)."""
    return list(iter_polycyclic_tables(p, m, c, order_limit))


def dihedral_presentation() -> PolycyclicPresentation:
    """Order-8 dihedral group: g1 g2 = g2^3 g1, g1^2 = e, g2^4 = e."""
    return PolycyclicPresentation(
        p=2,
        exponents=(1, 2),
        power_rhs=((0, 0), (0, 0)),
        conjugate_rhs={(0, 1): (0, 3)},
    )


def quaternion_presentation() -> PolycyclicPresentation:
    """Order-8 quaternion group: g1 g2 = g2^3 g1, g1^2 = g2^2, g2^4 = e."""
    return PolycyclicPresentation(
        p=2,
        exponents=(1, 2),
        power_rhs=((0, 2), (0, 0)),
        conjugate_rhs={(0, 1): (0, 3)},
    )
