"""Finite group recognition, enumeration up to isomorphism (n <= 12), and the
counting functions q(n) and p(n)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import StructureError
from .perms import (
    Perm,
    automorphism_group,
    compose,
    conjugacy_classes,
    identity_perm,
)
from .tables import CayleyTable, canonical_form, find_isomorphism

MAX_GROUP_ORDER = 12

# classical number of groups of order n, used as a test fixture only
CLASSICAL_GROUP_COUNTS = (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5)


@dataclass(frozen=True)
class FiniteGroup:
    """A group presented by its Cayley table, identity normalized to 0."""

    table: CayleyTable

    def __post_init__(self):
        if self.table.rows[0] != tuple(range(self.n)):
            raise ValueError("group table must have identity 0")

    @property
    def n(self) -> int:
        return self.table.n

    def mul(self, x: int, y: int) -> int:
        return self.table.rows[x][y]

    def inv(self, x: int) -> int:
        return self.table.rows[x].index(0)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.mul(y, x)
            k += 1
        return k

    def is_abelian(self) -> bool:
        r = self.table.rows
        return all(r[x][y] == r[y][x] for x in range(self.n) for y in range(x))

    def to_text(self) -> str:
        return self.table.to_text(comments=["identity 0"])


def as_group(t: CayleyTable) -> FiniteGroup:
    """Validate the group axioms and return the group with identity
    relabeled to 0.  Raises StructureError naming the first failing axiom."""
    if not t.is_quasigroup:
        raise StructureError("not a quasigroup")
    n = t.n
    rows = t.rows
    ident = None
    for e in range(n):
        if rows[e] == tuple(range(n)) and all(rows[x][e] == x for x in range(n)):
            ident = e
            break
    if ident is None:
        raise StructureError("no two-sided identity element")
    for x in range(n):
        for y in range(n):
            xy = rows[x][y]
            for z in range(n):
                if rows[xy][z] != rows[x][rows[y][z]]:
                    raise StructureError(
                        f"associativity fails at ({x},{y},{z}): "
                        f"({x}*{y})*{z} = {rows[xy][z]} but {x}*({y}*{z}) = {rows[x][rows[y][z]]}"
                    )
    if ident != 0:
        pi = list(range(n))
        pi[0], pi[ident] = ident, 0
        t = t.relabel(pi)
    return FiniteGroup(t)


def is_group(t: CayleyTable) -> bool:
    try:
        as_group(t)
        return True
    except StructureError:
        return False


def _primes_dividing(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _inner_automorphism(g: FiniteGroup, h0: int) -> Perm:
    ih0 = g.inv(h0)
    return tuple(g.mul(g.mul(h0, h), ih0) for h in range(g.n))


def _cyclic_extension_table(h: FiniteGroup, p: int, alpha: Perm, h0: int) -> CayleyTable:
    """Group on H x C_p from the extension datum (alpha, h0) with
    alpha(h0) = h0 and alpha^p = conjugation by h0.

    Element (a, i) gets label i*|H| + a; (a,i)(b,j) = (a alpha^i(b) h0^k, i+j-kp).
    """
    m = h.n
    powers = [identity_perm(m)]
    for _ in range(p - 1):
        powers.append(compose(alpha, powers[-1]))
    n = m * p
    rows = [[0] * n for _ in range(n)]
    for i in range(p):
        for a in range(m):
            x = i * m + a
            for j in range(p):
                for b in range(m):
                    y = j * m + b
                    c = h.mul(a, powers[i][b])
                    if i + j >= p:
                        c = h.mul(c, h0)
                    rows[x][y] = ((i + j) % p) * m + c
    return CayleyTable.from_rows(rows)


@lru_cache(maxsize=None)
def enumerate_groups(n: int) -> tuple[FiniteGroup, ...]:
    """All groups of order n up to isomorphism, 1 <= n <= 12.

    Built recursively: every group of solvable order has a normal subgroup of
    prime index p, hence arises as a cyclic extension of a group of order n/p
    by an automorphism alpha and an element h0 with alpha(h0) = h0 and
    alpha^p equal to conjugation by h0.  All orders <= 12 are solvable.
    """
    if not (1 <= n <= MAX_GROUP_ORDER):
        raise ValueError(f"group enumeration supports 1 <= n <= {MAX_GROUP_ORDER}")
    if n == 1:
        return (FiniteGroup(CayleyTable.from_rows([[0]])),)
    found: list[FiniteGroup] = []
    for p in _primes_dividing(n):
        for h in enumerate_groups(n // p):
            aut = automorphism_group(h.table)
            for alpha in aut.sorted_elements():
                apow = alpha
                for _ in range(p - 1):
                    apow = compose(alpha, apow)
                for h0 in range(h.n):
                    if alpha[h0] != h0 or apow != _inner_automorphism(h, h0):
                        continue
                    g = as_group(_cyclic_extension_table(h, p, alpha, h0))
                    if not any(
                        find_isomorphism(g.table, other.table) for other in found
                    ):
                        found.append(g)
    if n <= 8:
        found.sort(key=lambda g: canonical_form(g.table).rows)
    else:
        found.sort(key=lambda g: g.table.rows)
    return tuple(found)


def q_count(n: int) -> int:
    """Number of twisted Ward quasigroups of order n up to isomorphism:
    the sum of conjugacy-class counts of Aut(G) over groups G of order n."""
    total = 0
    for g in enumerate_groups(n):
        total += len(conjugacy_classes(automorphism_group(g.table)))
    return total


def partition_number(n: int) -> int:
    """Partitions of n into nonincreasing positive parts, by dynamic
    programming over the largest part."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


@dataclass(frozen=True)
class CountsRow:
    n: int
    ell: Optional[int]
    q: int
    p: int


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def counts_row(n: int, with_ell: bool = True, budget_seconds: float = 600.0) -> CountsRow:
    """One row of the classification table.  ell is computed by exhaustive
    enumeration when requested and within range, else left unknown."""
    q = q_count(n)
    p = partition_number(n)
    ell: Optional[int] = None
    if with_ell:
        from .search import MAX_ENUM_ORDER, enumerate_tw_left_quasigroups

        if n <= MAX_ENUM_ORDER:
            ell = enumerate_tw_left_quasigroups(n, budget_seconds=budget_seconds).total
    if ell is not None and _is_prime(n) and ell != q + p:
        raise AssertionError(f"prime-order identity ell = q + p fails at n = {n}")
    return CountsRow(n=n, ell=ell, q=q, p=p)
