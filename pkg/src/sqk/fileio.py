"""The three line-oriented text formats.

.grp   line 1: "group <n>"; then n rows of n integers (row x, column y is
       x*y); optional "names: <n tokens>".
.qnd   line 1: "quandle <n>" or "rack <n>"; then n rows (row a, column b is
       a*b); optional "rho: <n integers>".
.prs   line 1: "presentation <k>"; then either "group <path.grp>" or an
       inline group block (the .grp content); then k lines
       "orbit i: H = <indices> ; z = <index> ; r = <index> ; kappa = <j>".

"#" starts a comment anywhere; blank lines are ignored.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .cosets import CosetPresentation, LabeledSymmetricQuandle
from .errors import FormatError
from .groups import FiniteGroup, GroupLike, subgroup_from_elements
from .quandle import Quandle
from .symmetric import SymmetricQuandle


def significant_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _ints(line: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise FormatError(f"{what}: expected integers, got {line!r}")


def _read_header(line: str, keywords: tuple[str, ...]) -> tuple[str, int]:
    parts = line.split()
    if len(parts) != 2 or parts[0] not in keywords:
        raise FormatError(
            f"expected '<{'|'.join(keywords)}> <n>' header, got {line!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise FormatError(f"header size {parts[1]!r} is not an integer")
    if n < 1:
        raise FormatError(f"header size must be positive, got {n}")
    return parts[0], n


# .grp

def _parse_group_block(lines: list[str], pos: int) -> tuple[FiniteGroup, int]:
    """Parse a group block starting at lines[pos]; return (group, next pos).
    Validation of the table happens in group_from_table."""
    from .groups import group_from_table

    _, n = _read_header(lines[pos], ("group",))
    pos += 1
    if pos + n > len(lines):
        raise FormatError(f"group table needs {n} rows, file ends early")
    table = []
    for x in range(n):
        row = _ints(lines[pos + x], f"group row {x}")
        if len(row) != n:
            raise FormatError(f"group row {x} has {len(row)} entries, expected {n}")
        table.append(row)
    pos += n
    names = None
    if pos < len(lines) and lines[pos].startswith("names:"):
        names = lines[pos][len("names:"):].split()
        if len(names) != n:
            raise FormatError(f"{len(names)} names for {n} elements")
        pos += 1
    return group_from_table(table, names), pos


def parse_grp(text: str) -> FiniteGroup:
    lines = significant_lines(text)
    if not lines:
        raise FormatError("empty group file")
    G, pos = _parse_group_block(lines, 0)
    if pos != len(lines):
        raise FormatError(f"trailing content after group block: {lines[pos]!r}")
    return G


def format_grp(G: FiniteGroup) -> str:
    out = [f"group {G.order}"]
    out += [" ".join(map(str, row)) for row in G.product]
    if G.names:
        out.append("names: " + " ".join(G.names))
    return "\n".join(out) + "\n"


# .qnd

@dataclass(frozen=True)
class QndFile:
    kind: str  # "quandle" | "rack"
    table: tuple[tuple[int, ...], ...]
    rho: tuple[int, ...] | None


def parse_qnd(text: str) -> QndFile:
    lines = significant_lines(text)
    if not lines:
        raise FormatError("empty quandle file")
    kind, n = _read_header(lines[0], ("quandle", "rack"))
    if len(lines) < 1 + n:
        raise FormatError(f"operation table needs {n} rows, file ends early")
    table = []
    for a in range(n):
        row = _ints(lines[1 + a], f"table row {a}")
        if len(row) != n:
            raise FormatError(f"table row {a} has {len(row)} entries, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise FormatError(f"table entry {v} in row {a} not in 0..{n - 1}")
        table.append(tuple(row))
    pos = 1 + n
    rho = None
    if pos < len(lines) and lines[pos].startswith("rho:"):
        rho = _ints(lines[pos][len("rho:"):], "rho line")
        if len(rho) != n:
            raise FormatError(f"rho has {len(rho)} entries, expected {n}")
        if sorted(rho) != list(range(n)):
            raise FormatError("rho line is not a permutation")
        pos += 1
    if pos != len(lines):
        raise FormatError(f"trailing content: {lines[pos]!r}")
    return QndFile(kind=kind, table=tuple(table), rho=tuple(rho) if rho else None)


def format_qnd(obj: Quandle | SymmetricQuandle | LabeledSymmetricQuandle,
               labels: list[str] | None = None) -> str:
    if isinstance(obj, LabeledSymmetricQuandle):
        if labels is None:
            labels = [obj.label_name(k) for k in range(obj.sq.order)]
        obj = obj.sq
    if isinstance(obj, SymmetricQuandle):
        Q, rho = obj.quandle, obj.rho
    else:
        Q, rho = obj, None
    kind = "rack" if Q.rack_only else "quandle"
    out = [f"{kind} {Q.order}"]
    out += [" ".join(map(str, row)) for row in Q.op]
    if rho is not None:
        out.append("rho: " + " ".join(map(str, rho)))
    if labels is not None:
        out += [f"# {k}: {name}" for k, name in enumerate(labels)]
    return "\n".join(out) + "\n"


# .prs

def parse_prs(text: str, base_dir: str = ".") -> CosetPresentation:
    lines = significant_lines(text)
    if not lines:
        raise FormatError("empty presentation file")
    _, k = _read_header(lines[0], ("presentation",))
    if len(lines) < 2:
        raise FormatError("presentation file ends before the group")
    parts = lines[1].split()
    if not parts or parts[0] != "group":
        raise FormatError(f"expected a group line, got {lines[1]!r}")
    if len(parts) == 2 and not parts[1].isdigit():
        path = os.path.join(base_dir, parts[1])
        try:
            with open(path, encoding="utf-8") as fh:
                G = parse_grp(fh.read())
        except OSError as exc:
            raise FormatError(f"cannot read group file {path!r}: {exc}")
        pos = 2
    else:
        G, pos = _parse_group_block(lines, 1)

    if len(lines) - pos != k:
        raise FormatError(f"expected {k} orbit lines, found {len(lines) - pos}")
    subgroups, zs, rs, kappas = [], [], [], []
    for i in range(k):
        line = lines[pos + i]
        head, _, rest = line.partition(":")
        if head.split() != ["orbit", str(i)]:
            raise FormatError(f"expected 'orbit {i}: ...', got {line!r}")
        fields = {}
        for chunk in rest.split(";"):
            key, eq, val = chunk.partition("=")
            if not eq:
                raise FormatError(f"orbit {i}: bad field {chunk.strip()!r}")
            fields[key.strip()] = val.strip()
        if set(fields) != {"H", "z", "r", "kappa"}:
            raise FormatError(
                f"orbit {i}: fields must be H, z, r, kappa; got {sorted(fields)}")
        subgroups.append(subgroup_from_elements(G, _ints(fields["H"], "H")))
        zs.append(_one_int(fields["z"], f"orbit {i} z"))
        rs.append(_one_int(fields["r"], f"orbit {i} r"))
        kappas.append(_one_int(fields["kappa"], f"orbit {i} kappa"))
    return CosetPresentation(group=G, subgroups=tuple(subgroups), z=tuple(zs),
                             r=tuple(rs), kappa=tuple(kappas))


def _one_int(text: str, what: str) -> int:
    vals = _ints(text, what)
    if len(vals) != 1:
        raise FormatError(f"{what}: expected one integer")
    return vals[0]


def group_to_table(G: GroupLike) -> FiniteGroup:
    """Re-express any group-like object as an explicit multiplication table.
    Element indices are preserved; permutation elements become name tokens."""
    if isinstance(G, FiniteGroup):
        return G
    n = G.order
    table = [[G.mul(x, y) for y in range(n)] for x in range(n)]
    names = [G.name_of(x) for x in range(n)]
    from .groups import group_from_table

    return group_from_table(table, names)


def format_prs(P: CosetPresentation) -> str:
    """Presentations are written self-contained, with the group inline."""
    G = group_to_table(P.group)
    out = [f"presentation {P.orbit_count}"]
    out.append(format_grp(G).rstrip("\n"))
    for i in range(P.orbit_count):
        H = " ".join(map(str, P.subgroups[i].elements))
        out.append(f"orbit {i}: H = {H} ; z = {P.z[i]} ; r = {P.r[i]} ; "
                   f"kappa = {P.kappa[i]}")
    return "\n".join(out) + "\n"
