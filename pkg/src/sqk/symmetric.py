"""Good involutions and symmetric quandles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import perm
from .errors import (
    NotDualCompatible,
    NotEquivariant,
    NotInvolution,
    SizeBoundExceeded,
    SqkError,
)
from .quandle import Isomorphism, Quandle, Table, _search_maps

DEFAULT_MAX_N = 12


@dataclass(frozen=True)
class SymmetricQuandle:
    quandle: Quandle
    rho: perm.Perm

    @property
    def order(self) -> int:
        return self.quandle.order


def involution_violation(rho: Sequence[int]) -> int | None:
    for a in range(len(rho)):
        if rho[rho[a]] != a:
            return a
    return None


def equivariance_violation(op: Table, rho: Sequence[int]) -> tuple[int, int] | None:
    """First (a,b) with rho(a*b) != rho(a)*b, or None."""
    n = len(op)
    for a in range(n):
        for b in range(n):
            if rho[op[a][b]] != op[rho[a]][b]:
                return (a, b)
    return None


def dual_violation(op: Table, dual: Table, rho: Sequence[int]) -> tuple[int, int] | None:
    """First (a,b) with a*rho(b) != the dual product, or None."""
    n = len(op)
    for a in range(n):
        for b in range(n):
            if op[a][rho[b]] != dual[a][b]:
                return (a, b)
    return None


def attach_involution(Q: Quandle, rho: Sequence[int]) -> SymmetricQuandle:
    """Validate rho as a good involution on Q and pair them up.

    The three conditions are checked in order: involutivity, equivariance
    rho(a*b) = rho(a)*b, and dual compatibility a*rho(b) = dual(a,b).
    """
    if Q.rack_only:
        raise SqkError("good involutions require a quandle; this table is a rack")
    rho = tuple(rho)
    if len(rho) != Q.order:
        raise SqkError(f"rho has length {len(rho)}, expected {Q.order}")
    a = involution_violation(rho)
    if a is not None:
        raise NotInvolution(a)
    ab = equivariance_violation(Q.op, rho)
    if ab is not None:
        raise NotEquivariant(*ab)
    ab = dual_violation(Q.op, Q.dual, rho)
    if ab is not None:
        raise NotDualCompatible(*ab)
    return SymmetricQuandle(quandle=Q, rho=rho)


def is_good_involution(Q: Quandle, rho: Sequence[int]) -> bool:
    try:
        attach_involution(Q, rho)
    except SqkError:
        return False
    return True


def enumerate_good_involutions(Q: Quandle,
                               max_n: int = DEFAULT_MAX_N) -> list[perm.Perm]:
    """All good involutions of Q, in lexicographic order of the array.

    Dual compatibility pins rho(b) to C_b = {c : s_c = s_b^-1}, so the
    search backtracks over involutions respecting C_b and only equivariance
    is left to verify on completions.
    """
    n = Q.order
    if n > max_n:
        raise SizeBoundExceeded(n, max_n)
    cols = Q.translations()
    inv_cols = [perm.inverse(c) for c in cols]
    cand = [[c for c in range(n) if cols[c] == inv_cols[b]] for b in range(n)]

    rho = [-1] * n
    found: list[perm.Perm] = []

    def extend(b: int):
        if b == n:
            if equivariance_violation(Q.op, rho) is None:
                found.append(tuple(rho))
            return
        if rho[b] >= 0:
            extend(b + 1)
            return
        for c in cand[b]:
            if c < b or rho[c] >= 0:
                continue
            rho[b] = c
            rho[c] = b
            extend(b + 1)
            rho[b] = -1
            if c != b:
                rho[c] = -1
        return

    extend(0)
    return found


def find_symmetric_isomorphism(S1: SymmetricQuandle,
                               S2: SymmetricQuandle) -> Isomorphism | None:
    """Least quandle isomorphism f with f o rho1 = rho2 o f, or None."""
    maps = _search_maps(S1.quandle.op, S2.quandle.op, S1.rho, S2.rho)
    if not maps:
        return None
    return Isomorphism(source=S1, target=S2, map=maps[0])


def is_symmetric_isomorphism_map(S1: SymmetricQuandle, S2: SymmetricQuandle,
                                 f: Sequence[int]) -> bool:
    n = S1.order
    if S2.order != n or sorted(f) != list(range(n)):
        return False
    op1, op2 = S1.quandle.op, S2.quandle.op
    if any(f[op1[a][b]] != op2[f[a]][f[b]] for a in range(n) for b in range(n)):
        return False
    return all(f[S1.rho[a]] == S2.rho[f[a]] for a in range(n))
