"""Permutations on {0..n-1} and small explicit permutation groups."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import ClosureOverflowError, IdentityViolationError, StructureError
from .tables import CayleyTable, check_identity, find_all_isomorphisms, squaring_map

Perm = tuple[int, ...]

DEFAULT_CAP = 10**6


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(f: Perm, g: Perm) -> Perm:
    """f after g: (f o g)(i) = f(g(i))."""
    return tuple(f[v] for v in g)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths in nonincreasing order."""
    n = len(p)
    seen = [False] * n
    lens = []
    for s in range(n):
        if not seen[s]:
            c, j = 0, s
            while not seen[j]:
                seen[j] = True
                j = p[j]
                c += 1
            lens.append(c)
    return tuple(sorted(lens, reverse=True))


@lru_cache(maxsize=4)
def min_conjugates(n: int) -> dict[tuple[int, ...], Perm]:
    """Lexicographically least permutation of each cycle type of degree n."""
    best: dict[tuple[int, ...], Perm] = {}
    for p in itertools.permutations(range(n)):
        ct = cycle_type(p)
        if ct not in best or p < best[ct]:
            best[ct] = p
    return best


def min_conjugate(p: Perm) -> Perm:
    """Least element of the conjugacy class of p in the symmetric group."""
    return min_conjugates(len(p))[cycle_type(p)]


def format_perm(p: Perm) -> str:
    return " ".join(str(v) for v in p)


def parse_perm(text: str) -> Perm:
    p = tuple(int(v) for v in text.split())
    if not is_perm(p):
        raise ValueError(f"{text!r} is not a permutation")
    return p


@dataclass(frozen=True)
class PermGroup:
    degree: int
    elements: frozenset[Perm]
    generators: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements

    def sorted_elements(self) -> list[Perm]:
        return sorted(self.elements)


def closure(generators: Iterable[Perm], degree: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """Group generated by the given permutations, as an explicit element set.

    Breadth-first orbit of the identity under right multiplication.
    """
    gens = tuple(dict.fromkeys(tuple(g) for g in generators))
    for g in gens:
        if len(g) != degree or not is_perm(g):
            raise ValueError("generators must be permutations of the stated degree")
    elems = {identity_perm(degree)}
    frontier = list(elems)
    while frontier:
        new = []
        for g in gens:
            for h in frontier:
                p = compose(h, g)
                if p not in elems:
                    elems.add(p)
                    if len(elems) > cap:
                        raise ClosureOverflowError(cap)
                    new.append(p)
        frontier = new
    return PermGroup(degree, frozenset(elems), gens)


@dataclass(frozen=True)
class MultiplicationGroups:
    lmlt: PermGroup
    dis_plus: PermGroup
    dis_minus: PermGroup
    dis: PermGroup


def multiplication_groups(t: CayleyTable, cap: int = DEFAULT_CAP) -> MultiplicationGroups:
    """Left multiplication group and the three displacement groups of a left
    quasigroup.  Dis+ and Dis- use the fixed-base generators L_e L_x^{-1} and
    L_x^{-1} L_e with e = 0."""
    if not t.is_left_quasigroup:
        raise StructureError("multiplication groups require a left quasigroup")
    n = t.n
    rows = [tuple(r) for r in t.rows]
    invs = [inverse(r) for r in rows]
    e = 0
    lmlt = closure(rows, n, cap)
    plus_gens = [compose(rows[e], invs[x]) for x in range(n)]
    minus_gens = [compose(invs[x], rows[e]) for x in range(n)]
    dis_plus = closure(plus_gens, n, cap)
    dis_minus = closure(minus_gens, n, cap)
    dis = closure(plus_gens + minus_gens, n, cap)
    return MultiplicationGroups(lmlt, dis_plus, dis_minus, dis)


def is_regular(g: PermGroup) -> bool:
    """True iff g acts regularly: |g| = degree and g is transitive on 0."""
    if g.order != g.degree:
        return False
    return {p[0] for p in g.elements} == set(range(g.degree))


def is_group_isotope(t: CayleyTable, cap: int = DEFAULT_CAP) -> bool:
    """A quasigroup is isotopic to a group iff Dis+ acts regularly."""
    if not t.is_quasigroup:
        raise StructureError("group isotopy test requires a quasigroup")
    return is_regular(multiplication_groups(t, cap).dis_plus)


@dataclass(frozen=True)
class DisElementForm:
    e: int
    verified: bool


def dis_element_form(t: CayleyTable, cap: int = DEFAULT_CAP) -> DisElementForm:
    """For a twisted Ward quasigroup: verify Dis = {L_x^{-1} L_e : x} with e
    the unique square, and that (x rdiv e)*(e ldiv y) is a group operation."""
    if not t.is_quasigroup or not check_identity(t, "twisted_ward"):
        raise IdentityViolationError("table is not a twisted Ward quasigroup")
    squares = set(squaring_map(t))
    e = next(iter(squares))
    if len(squares) != 1:
        return DisElementForm(e=min(squares), verified=False)
    rows = [tuple(r) for r in t.rows]
    invs = [inverse(r) for r in rows]
    dis = multiplication_groups(t, cap).dis
    wanted = {compose(invs[x], rows[e]) for x in range(t.n)}
    ok = dis.elements == frozenset(wanted)
    if ok:
        from .groups import is_group  # deferred: groups imports perms

        n = t.n
        re = [t.rdiv(x, e) for x in range(n)]
        le = t._ldiv_rows[e]
        isotope = CayleyTable.from_rows(
            [[rows[re[x]][le[y]] for y in range(n)] for x in range(n)]
        )
        ok = is_group(isotope)
    return DisElementForm(e=e, verified=ok)


def automorphism_group(t: CayleyTable) -> PermGroup:
    """All permutations pi with pi(x*y) = pi(x)*pi(y), as a PermGroup.

    Backtracking over images with propagation of forced products; a minimal
    generating subset of the result is kept as the generator list.
    """
    elems = frozenset(find_all_isomorphisms(t, t))
    gens: list[Perm] = []
    have = {identity_perm(t.n)}
    for p in sorted(elems):
        if p not in have:
            gens.append(p)
            have = closure(gens, t.n, cap=max(len(elems), 1)).elements
            if len(have) == len(elems):
                break
    return PermGroup(t.n, elems, tuple(gens))


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Perm
    size: int
    members: frozenset[Perm]


def conjugacy_classes(g: PermGroup) -> list[ConjugacyClass]:
    """Conjugacy classes of g, sorted by (size, least representative)."""
    remaining = set(g.elements)
    classes = []
    while remaining:
        x = min(remaining)
        orbit = {compose(compose(h, x), inverse(h)) for h in g.elements}
        remaining -= orbit
        classes.append(ConjugacyClass(min(orbit), len(orbit), frozenset(orbit)))
    classes.sort(key=lambda c: (c.size, c.representative))
    return classes
