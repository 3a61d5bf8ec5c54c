"""Cayley-table algebra for finite binary operations on {0..n-1}.

A table ``t`` stores ``t[x][y] = x*y``.  Left quasigroups are tables whose
rows are permutations; quasigroups additionally have permutation columns.
Everything here is immutable and safe to share.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import IdentityViolationError, StructureError

IDENTITY_KINDS = (
    "rack",
    "rump",
    "twisted_ward",
    "ward",
    "rack_div",
    "rump_div",
    "twisted_ward_div",
)


@dataclass(frozen=True)
class CayleyTable:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError("table is not square")
            for v in row:
                if not (0 <= v < n):
                    raise ValueError(f"entry {v} out of range 0..{n - 1}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "CayleyTable":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def op(self, x: int, y: int) -> int:
        self._check_range(x, y)
        return self.rows[x][y]

    def _check_range(self, *elems: int) -> None:
        for e in elems:
            if not (0 <= e < self.n):
                raise ValueError(f"element {e} out of range 0..{self.n - 1}")

    @cached_property
    def _ldiv_rows(self) -> tuple[Optional[tuple[int, ...]], ...]:
        out = []
        for row in self.rows:
            if len(set(row)) == self.n:
                inv = [0] * self.n
                for i, v in enumerate(row):
                    inv[v] = i
                out.append(tuple(inv))
            else:
                out.append(None)
        return tuple(out)

    @cached_property
    def is_left_quasigroup(self) -> bool:
        return all(r is not None for r in self._ldiv_rows)

    @cached_property
    def is_quasigroup(self) -> bool:
        return self.is_left_quasigroup and all(
            len(set(col)) == self.n for col in self.columns()
        )

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows))

    def ldiv(self, x: int, y: int) -> int:
        """The unique z with x*z = y."""
        self._check_range(x, y)
        inv = self._ldiv_rows[x]
        if inv is None:
            raise StructureError(f"row {x} is not a permutation, no left division")
        return inv[y]

    def rdiv(self, x: int, y: int) -> Optional[int]:
        """Some z with z*y = x, or None when column y does not contain x.

        When column y is a permutation the z is unique.
        """
        self._check_range(x, y)
        for z in range(self.n):
            if self.rows[z][y] == x:
                return z
        return None

    def relabel(self, pi: Sequence[int]) -> "CayleyTable":
        """Simultaneous relabeling: new[pi(x)][pi(y)] = pi(old[x][y])."""
        n = self.n
        if sorted(pi) != list(range(n)):
            raise ValueError("relabeling is not a permutation of the carrier")
        new = [[0] * n for _ in range(n)]
        for x in range(n):
            px = pi[x]
            row = self.rows[x]
            for y in range(n):
                new[px][pi[y]] = pi[row[y]]
        return CayleyTable.from_rows(new)

    def to_text(self, comments: Sequence[str] = ()) -> str:
        lines = [f"# {c}" for c in comments]
        lines.append(str(self.n))
        lines.extend(" ".join(str(v) for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "CayleyTable":
        data = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not data:
            raise ValueError("empty table file")
        try:
            n = int(data[0])
        except ValueError:
            raise ValueError(f"expected element count, got {data[0]!r}") from None
        if len(data) < n + 1:
            raise ValueError(f"expected {n} rows, got {len(data) - 1}")
        rows = []
        for ln in data[1 : n + 1]:
            row = [int(v) for v in ln.split()]
            if len(row) != n:
                raise ValueError(f"row {ln!r} does not have {n} entries")
            rows.append(row)
        return cls.from_rows(rows)


@dataclass(frozen=True)
class StructureFlags:
    is_left_quasigroup: bool
    is_quasigroup: bool
    is_permutational: bool
    is_faithful: bool


def classify_structure(t: CayleyTable) -> StructureFlags:
    rows = t.rows
    return StructureFlags(
        is_left_quasigroup=t.is_left_quasigroup,
        is_quasigroup=t.is_quasigroup,
        is_permutational=all(r == rows[0] for r in rows),
        is_faithful=len(set(rows)) == t.n,
    )


def _require_lq(t: CayleyTable) -> None:
    if not t.is_left_quasigroup:
        raise StructureError("table is not a left quasigroup")


def check_identity(t: CayleyTable, kind: str, witness: bool = False):
    """Brute-force check of one of the named identities over all n^3 triples.

    With ``witness=True`` returns (verdict, failing triple or None).
    """
    if kind not in IDENTITY_KINDS:
        raise ValueError(f"unknown identity kind {kind!r}")
    _require_lq(t)
    n = t.n
    rows = t.rows
    ld = t._ldiv_rows

    def sides(x: int, y: int, z: int) -> tuple[int, int]:
        if kind == "rack":
            return rows[rows[x][y]][rows[x][z]], rows[x][rows[y][z]]
        if kind == "rump":
            return rows[rows[x][y]][rows[x][z]], rows[rows[y][x]][rows[y][z]]
        if kind == "twisted_ward":
            return rows[rows[x][y]][rows[x][z]], rows[rows[y][y]][rows[y][z]]
        if kind == "ward":
            return rows[rows[x][y]][rows[x][z]], rows[y][z]
        xy = rows[x][y]
        if kind == "rack_div":
            return rows[x][rows[y][z]], rows[xy][rows[x][z]]
        if kind == "rump_div":
            return rows[x][rows[y][z]], rows[xy][rows[ld[xy][x]][z]]
        # twisted_ward_div
        return rows[x][rows[y][z]], rows[xy][rows[ld[xy][xy]][z]]

    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs, rhs = sides(x, y, z)
                if lhs != rhs:
                    return (False, (x, y, z)) if witness else False
    return (True, None) if witness else True


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            for v in block:
                if v in seen:
                    raise ValueError(f"element {v} in two blocks")
                seen.add(v)
        if seen != set(range(len(seen))):
            raise ValueError("blocks do not cover a range 0..n-1")

    @classmethod
    def from_assignment(cls, labels: Sequence) -> "Partition":
        by_label: dict = {}
        for x, lab in enumerate(labels):
            by_label.setdefault(lab, []).append(x)
        blocks = sorted((tuple(sorted(b)) for b in by_label.values()), key=lambda b: b[0])
        return cls(tuple(blocks))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(tuple((i,) for i in range(n)))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i, block in enumerate(self.blocks):
            for v in block:
                out[v] = i
        return tuple(out)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def cayley_kernel(t: CayleyTable) -> Partition:
    """x ~ y iff the rows (left translations) of x and y coincide."""
    _require_lq(t)
    return Partition.from_assignment(t.rows)


def squaring_map(t: CayleyTable) -> tuple[int, ...]:
    _require_lq(t)
    return tuple(t.rows[x][x] for x in range(t.n))


def squaring_kernel(t: CayleyTable) -> Partition:
    """x == y iff x*x = y*y."""
    return Partition.from_assignment(squaring_map(t))


def is_congruence(t: CayleyTable, p: Partition) -> bool:
    """True iff the blocks of p are compatible with * and with left division."""
    _require_lq(t)
    if p.n != t.n:
        raise ValueError("partition size does not match the table")
    bo = p.block_of
    n = t.n
    ld = t._ldiv_rows
    for table in (t.rows, ld):
        seen: dict[tuple[int, int], int] = {}
        for x in range(n):
            bx = bo[x]
            for y in range(n):
                key = (bx, bo[y])
                b = bo[table[x][y]]
                if seen.setdefault(key, b) != b:
                    return False
    return True


@dataclass(frozen=True)
class KernelReport:
    block_sizes_sim: tuple[int, ...]
    block_sizes_equiv: tuple[int, ...]
    product_law_holds: bool


def kernel_size_report(t: CayleyTable) -> KernelReport:
    """Block sizes of the Cayley and squaring kernels of a twisted Ward left
    quasigroup, and whether n equals (#sim blocks) * (#equiv blocks)."""
    if not check_identity(t, "twisted_ward"):
        raise IdentityViolationError("table is not a twisted Ward left quasigroup")
    sim = cayley_kernel(t)
    equiv = squaring_kernel(t)
    return KernelReport(
        block_sizes_sim=sim.block_sizes(),
        block_sizes_equiv=equiv.block_sizes(),
        product_law_holds=t.n == len(sim.blocks) * len(equiv.blocks),
    )


def quadrangle_criterion(t: CayleyTable) -> bool:
    """Quadrangle criterion for quasigroups (equivalent to group isotopy).

    For each pair (a1, a2) put alpha = L_{a2}^{-1} L_{a1}; the criterion holds
    iff for all b1, b2 the agreement set {c : b1*c = b2*alpha(c)} is empty or
    everything.  This replaces the naive scan over eight variables.
    """
    if not t.is_quasigroup:
        raise StructureError("quadrangle criterion requires a quasigroup")
    n = t.n
    rows = t.rows
    ld = t._ldiv_rows
    alphas = {tuple(ld[a2][rows[a1][c]] for c in range(n)) for a1 in range(n) for a2 in range(n)}
    for alpha in alphas:
        for b1 in range(n):
            r1 = rows[b1]
            for b2 in range(n):
                r2 = rows[b2]
                agree = sum(1 for c in range(n) if r1[c] == r2[alpha[c]])
                if agree not in (0, n):
                    return False
    return True


# ---------------------------------------------------------------------------
# Canonical forms and isomorphism
# ---------------------------------------------------------------------------

_CHUNK = 40320


@lru_cache(maxsize=4)
def _perm_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    invs = np.argsort(perms, axis=1)
    return perms, invs


def _relabeled_flat(t: CayleyTable, perms: np.ndarray, invs: np.ndarray) -> np.ndarray:
    """All simultaneous relabelings of t by the given permutations, flattened
    row-major, one per output row."""
    T = np.array(t.rows, dtype=np.int64)
    vals = T[invs[:, :, None], invs[:, None, :]]
    out = perms[np.arange(len(perms))[:, None, None], vals]
    return out.reshape(len(perms), -1)


def canonical_form(t: CayleyTable) -> CayleyTable:
    """Lexicographically least table among all n! simultaneous relabelings."""
    n = t.n
    if n == 1:
        return t
    perms, invs = _perm_arrays(n)
    best: Optional[bytes] = None
    for lo in range(0, len(perms), _CHUNK):
        flat = _relabeled_flat(t, perms[lo : lo + _CHUNK], invs[lo : lo + _CHUNK])
        u8 = flat.astype(np.uint8)
        buf = u8.tobytes()
        size = n * n
        chunk_best = min(buf[i * size : (i + 1) * size] for i in range(len(flat)))
        if best is None or chunk_best < best:
            best = chunk_best
    rows = [tuple(best[i * n : (i + 1) * n]) for i in range(n)]
    return CayleyTable(tuple(rows))


def is_self_canonical(t: CayleyTable) -> bool:
    """True iff t equals its own canonical form (vectorized early check)."""
    n = t.n
    if n == 1:
        return True
    perms, invs = _perm_arrays(n)
    target = np.array(t.rows, dtype=np.int64).reshape(-1)
    for lo in range(0, len(perms), _CHUNK):
        flat = _relabeled_flat(t, perms[lo : lo + _CHUNK], invs[lo : lo + _CHUNK])
        neq = flat != target[None, :]
        any_neq = neq.any(axis=1)
        if not any_neq.any():
            continue
        first = neq.argmax(axis=1)
        vals = flat[np.arange(len(flat)), first]
        if np.any(any_neq & (vals < target[first])):
            return False
    return True


def _iso_candidates(t1: CayleyTable, t2: CayleyTable) -> list[list[int]]:
    """Per-element candidate images, filtered by cheap invariants."""
    n = t1.n

    def profile(t: CayleyTable, x: int):
        row = t.rows[x]
        if len(set(row)) == n:
            # cycle type of the left translation is isomorphism-invariant
            seen = [False] * n
            lens = []
            for s in range(n):
                if not seen[s]:
                    c, j = 0, s
                    while not seen[j]:
                        seen[j] = True
                        j = row[j]
                        c += 1
                    lens.append(c)
            return (tuple(sorted(lens)), row[x] == x)
        return (sorted(row).count(row[0]), row[x] == x)

    p1 = [profile(t1, x) for x in range(n)]
    p2 = [profile(t2, x) for x in range(n)]
    return [[y for y in range(n) if p2[y] == p1[x]] for x in range(n)]


def _iso_search(t1: CayleyTable, t2: CayleyTable, yield_all: bool):
    """Backtracking search for bijections pi with pi(x*y) = pi(x)*'pi(y).

    Yields image tuples; assignment of a pair propagates all forced products.
    """
    n = t1.n
    if n != t2.n:
        return
    cands = _iso_candidates(t1, t2)
    if any(not c for c in cands):
        return
    images: list[Optional[int]] = [None] * n
    used = [False] * n
    r1, r2 = t1.rows, t2.rows

    def assign(x: int, y: int) -> Optional[list[int]]:
        """Assign pi(x)=y and propagate; returns undo list or None on fail."""
        trail: list[int] = []
        queue = [(x, y)]
        while queue:
            a, b = queue.pop()
            cur = images[a]
            if cur is not None:
                if cur != b:
                    _undo(trail)
                    return None
                continue
            if used[b] or b not in cands[a]:
                _undo(trail)
                return None
            images[a] = b
            used[b] = True
            trail.append(a)
            for c in range(n):
                ic = images[c]
                if ic is None:
                    continue
                queue.append((r1[a][c], r2[b][ic]))
                queue.append((r1[c][a], r2[ic][b]))
        return trail

    def _undo(trail: list[int]) -> None:
        for a in reversed(trail):
            used[images[a]] = False
            images[a] = None

    def rec(start: int):
        x = start
        while x < n and images[x] is not None:
            x += 1
        if x == n:
            yield tuple(images)  # type: ignore[arg-type]
            return
        for y in cands[x]:
            if used[y]:
                continue
            trail = assign(x, y)
            if trail is None:
                continue
            yield from rec(x + 1)
            _undo(trail)
            if not yield_all:
                # caller only wants existence; rec already yielded if found
                pass

    yield from rec(0)


def find_isomorphism(t1: CayleyTable, t2: CayleyTable) -> Optional[tuple[int, ...]]:
    for pi in _iso_search(t1, t2, yield_all=False):
        return pi
    return None


def find_all_isomorphisms(t1: CayleyTable, t2: CayleyTable):
    yield from _iso_search(t1, t2, yield_all=True)


def table_isomorphic(t1: CayleyTable, t2: CayleyTable) -> bool:
    if t1.n != t2.n:
        return False
    return find_isomorphism(t1, t2) is not None
