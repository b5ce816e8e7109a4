"""Permutations of 0..n-1 as tuples.

The product convention throughout the package is "apply left, then right":
compose(p, q)[a] = q[p[a]].
"""

from __future__ import annotations

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """p then q."""
    return tuple(q[p[a]] for a in range(len(p)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for a, v in enumerate(p):
        inv[v] = a
    return tuple(inv)


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


def is_involution(p: Perm) -> bool:
    return all(p[p[a]] == a for a in range(len(p)))


def cycles(p: Perm) -> list[list[int]]:
    """Cycle decomposition; cycles ordered by least element, 1-cycles included."""
    seen = [False] * len(p)
    out = []
    for a in range(len(p)):
        if seen[a]:
            continue
        cyc = [a]
        seen[a] = True
        b = p[a]
        while b != a:
            cyc.append(b)
            seen[b] = True
            b = p[b]
        out.append(cyc)
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in cycles(p)))


def cycle_string(p: Perm) -> str:
    """Nontrivial cycles only; the identity prints as "()"."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) if parts else "()"


def cycle_token(p: Perm) -> str:
    """Whitespace-free variant of cycle_string, usable as a display name."""
    parts = ["(" + ",".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) if parts else "id"


def array_string(p: Perm) -> str:
    return "[" + " ".join(map(str, p)) + "]"


def perm_line(p: Perm) -> str:
    """Cycle notation followed by array notation, as used in reports."""
    return f"{cycle_string(p)}  {array_string(p)}"
