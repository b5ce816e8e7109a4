"""Finite racks and quandles as operation tables.

Rows index the left argument, columns the right: op[a][b] = a*b, so the
translation s_b is column b. The dual table is derived by inverting each
column.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import perm
from .errors import (
    AxiomQ1Violated,
    AxiomQ2Violated,
    AxiomQ3Violated,
    FormatError,
    IndexOutOfRange,
)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Quandle:
    order: int
    op: Table
    dual: Table
    rack_only: bool = False

    def column(self, b: int) -> perm.Perm:
        """The translation map a -> a*b."""
        return tuple(self.op[a][b] for a in range(self.order))

    def translations(self) -> tuple[perm.Perm, ...]:
        return tuple(self.column(b) for b in range(self.order))


@dataclass(frozen=True)
class Translation:
    base: int
    map: perm.Perm


@dataclass(frozen=True)
class Isomorphism:
    source: object
    target: object
    map: perm.Perm


def q2_violation(table: Sequence[Sequence[int]]) -> int | None:
    """First column that is not a bijection, or None."""
    n = len(table)
    for b in range(n):
        if sorted(table[a][b] for a in range(n)) != list(range(n)):
            return b
    return None


def q3_violation(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """First (a,b,c) with (a*b)*c != (a*c)*(b*c), or None."""
    n = len(table)
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[table[a][c]][table[b][c]]:
                    return (a, b, c)
    return None


def q1_violation(table: Sequence[Sequence[int]]) -> int | None:
    """First a with a*a != a, or None."""
    for a in range(len(table)):
        if table[a][a] != a:
            return a
    return None


def _dual_table(op: Table) -> Table:
    n = len(op)
    dual = [[0] * n for _ in range(n)]
    for b in range(n):
        col = [op[a][b] for a in range(n)]
        for a in range(n):
            dual[col[a]][b] = a
    return tuple(tuple(row) for row in dual)


def quandle_from_table(table: Sequence[Sequence[int]],
                       allow_rack: bool = False) -> Quandle:
    """Validate an operation table and return the quandle (or rack) it defines.

    Checks bijectivity of the translations, then self-distributivity, then
    idempotence. A table failing only idempotence is accepted with
    rack_only=True when allow_rack is set.
    """
    n = len(table)
    if n == 0:
        raise FormatError("empty operation table")
    rows = []
    for a, row in enumerate(table):
        row = tuple(row)
        if len(row) != n:
            raise FormatError(f"row {a} has {len(row)} entries, expected {n}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise FormatError(f"entry {v!r} in row {a} not in 0..{n - 1}")
        rows.append(row)
    op = tuple(rows)

    b = q2_violation(op)
    if b is not None:
        raise AxiomQ2Violated(b)
    abc = q3_violation(op)
    if abc is not None:
        raise AxiomQ3Violated(*abc)
    a = q1_violation(op)
    rack_only = False
    if a is not None:
        if not allow_rack:
            raise AxiomQ1Violated(a)
        rack_only = True
    return Quandle(order=n, op=op, dual=_dual_table(op), rack_only=rack_only)


def dual_op(Q: Quandle, a: int, b: int) -> int:
    """The unique x with x*b = a."""
    if not 0 <= a < Q.order:
        raise IndexOutOfRange(a, Q.order)
    if not 0 <= b < Q.order:
        raise IndexOutOfRange(b, Q.order)
    return Q.dual[a][b]


def translation(Q: Quandle, b: int) -> Translation:
    if not 0 <= b < Q.order:
        raise IndexOutOfRange(b, Q.order)
    return Translation(base=b, map=Q.column(b))


def is_kei(Q: Quandle) -> bool:
    """True iff every translation is an involution, i.e. dual == op."""
    return Q.dual == Q.op


def is_homomorphism_map(Q1: Quandle, Q2: Quandle, f: Sequence[int]) -> bool:
    n = Q1.order
    return all(f[Q1.op[a][b]] == Q2.op[f[a]][f[b]]
               for a in range(n) for b in range(n))


def _search_maps(op1: Table, op2: Table,
                 rho1: perm.Perm | None = None,
                 rho2: perm.Perm | None = None,
                 find_all: bool = False) -> list[perm.Perm]:
    """Backtracking search for operation-preserving bijections op1 -> op2.

    Images are assigned to elements 0,1,... in order, candidates tried in
    ascending order, so results come out lexicographically least first.
    Candidate sets are pruned by the cycle type of each translation (an
    isomorphism must match them) and, when rho constraints are present, by
    rho fixed-point status. Partial maps are checked against every product
    whose three participants are already assigned; complete maps are
    re-checked in full before being accepted.
    """
    n = len(op1)
    if len(op2) != n:
        return []
    cols1 = [tuple(op1[a][b] for a in range(n)) for b in range(n)]
    cols2 = [tuple(op2[a][b] for a in range(n)) for b in range(n)]
    key1 = [(perm.cycle_type(cols1[b]),
             rho1 is not None and rho1[b] == b) for b in range(n)]
    key2 = [(perm.cycle_type(cols2[b]),
             rho2 is not None and rho2[b] == b) for b in range(n)]
    if sorted(key1) != sorted(key2):
        return []
    candidates = [[v for v in range(n) if key2[v] == key1[a]] for a in range(n)]

    f = [-1] * n
    used = [False] * n
    results: list[perm.Perm] = []

    def consistent(a: int) -> bool:
        fa = f[a]
        for b in range(a + 1):
            c = op1[a][b]
            if c <= a and f[c] != op2[fa][f[b]]:
                return False
            c = op1[b][a]
            if c <= a and f[c] != op2[f[b]][fa]:
                return False
        if rho1 is not None:
            c = rho1[a]
            if c <= a and f[c] != rho2[fa]:
                return False
        return True

    def full_check() -> bool:
        for a in range(n):
            for b in range(n):
                if f[op1[a][b]] != op2[f[a]][f[b]]:
                    return False
        if rho1 is not None:
            for a in range(n):
                if f[rho1[a]] != rho2[f[a]]:
                    return False
        return True

    def extend(a: int) -> bool:
        if a == n:
            if full_check():
                results.append(tuple(f))
                return not find_all
            return False
        for v in candidates[a]:
            if used[v]:
                continue
            f[a] = v
            used[v] = True
            if consistent(a) and extend(a + 1):
                return True
            used[v] = False
            f[a] = -1
        return False

    extend(0)
    return results


def find_quandle_isomorphism(Q1: Quandle, Q2: Quandle) -> Isomorphism | None:
    """Lexicographically least operation-preserving bijection, or None."""
    maps = _search_maps(Q1.op, Q2.op)
    if not maps:
        return None
    return Isomorphism(source=Q1, target=Q2, map=maps[0])


def all_automorphism_maps(Q: Quandle) -> list[perm.Perm]:
    """Every permutation preserving the operation, lexicographically sorted."""
    return _search_maps(Q.op, Q.op, find_all=True)
