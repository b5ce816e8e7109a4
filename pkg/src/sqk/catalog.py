"""Constructors for the stock objects: dihedral quandles, antipodal
involutions, conjugation symmetric quandles, small groups, and the
quaternion-group coset presentation of (R_4, antipodal).

Every constructor routes its output through the owning module's validation;
nothing here is trusted by fiat.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .cosets import CosetPresentation
from .errors import (
    GoodInvolutionCheckFailed,
    OddOrder,
    ParameterOutOfRange,
    SqkError,
)
from .groups import FiniteGroup, GroupLike, group_from_table, subgroup_closure
from .quandle import Quandle, quandle_from_table
from .symmetric import SymmetricQuandle, attach_involution


def dihedral_quandle(n: int) -> Quandle:
    """Z_n with a*b = 2b - a. A kei for every n."""
    if n < 1:
        raise ParameterOutOfRange(f"order must be positive, got {n}")
    table = [[(2 * b - a) % n for b in range(n)] for a in range(n)]
    return quandle_from_table(table)


def trivial_quandle(n: int) -> Quandle:
    """a*b = a for all a, b."""
    if n < 1:
        raise ParameterOutOfRange(f"order must be positive, got {n}")
    return quandle_from_table([[a] * n for a in range(n)])


def antipodal(n: int) -> SymmetricQuandle:
    """The dihedral quandle of even order n with rho(x) = x + n/2.

    The involution is validated, not assumed.
    """
    if n < 1:
        raise ParameterOutOfRange(f"order must be positive, got {n}")
    if n % 2:
        raise OddOrder(n)
    Q = dihedral_quandle(n)
    rho = [(x + n // 2) % n for x in range(n)]
    try:
        return attach_involution(Q, rho)
    except SqkError as exc:  # unreachable for the shift map; kept honest
        raise GoodInvolutionCheckFailed(str(exc)) from exc


def conj_symmetric_quandle(G: GroupLike) -> SymmetricQuandle:
    """G with a*b = b^-1 a b and rho = inversion."""
    n = G.order
    table = [[G.conj(a, b) for b in range(n)] for a in range(n)]
    rho = [G.inv(a) for a in range(n)]
    Q = quandle_from_table(table)
    return attach_involution(Q, rho)


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ParameterOutOfRange(f"order must be positive, got {n}")
    table = [[(x + y) % n for y in range(n)] for x in range(n)]
    names = ["e"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    return group_from_table(table, names)


def dihedral_group(n: int) -> FiniteGroup:
    """Order 2n, elements r^m s^t with index m + n*t."""
    if n < 1:
        raise ParameterOutOfRange(f"rotation order must be positive, got {n}")

    def mul(x, y):
        m, t = x % n, x // n
        p, q = y % n, y // n
        if t == 0:
            return (m + p) % n + n * q
        return (m - p) % n + n * ((1 + q) % 2)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    rot = ["e"] + [f"r{k}" if k > 1 else "r" for k in range(1, n)]
    names = rot + [("s" if k == 0 else rot[k] + "s") for k in range(n)]
    return group_from_table(table, names)


def quaternion_group() -> FiniteGroup:
    """Order 8, element order (e, a, a2, a3, b, ab, a2b, a3b) with
    a4 = e, b2 = a2, ba = a3 b. The relations ab=c, bc=a, ca=b for c := ab
    are asserted after table validation."""

    def mul(x, y):
        m, t = x % 4, x // 4
        p, q = y % 4, y // 4
        if t == 0:
            return (m + p) % 4 + 4 * q
        if q == 0:
            return (m - p) % 4 + 4
        return (m - p + 2) % 4

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    names = ("e", "a", "a2", "a3", "b", "ab", "a2b", "a3b")
    G = group_from_table(table, names)
    e, a, b = 0, 1, 4
    c = G.mul(a, b)
    a2 = G.mul(a, a)
    assert G.mul(b, b) == a2 and G.mul(c, c) == a2
    assert G.mul(G.mul(a, b), c) == a2
    assert G.mul(a2, a2) == e
    assert G.mul(b, c) == a and G.mul(c, a) == b
    return G


def symmetric_group(n: int) -> FiniteGroup:
    """S_n for n <= 4, elements sorted lexicographically as permutation
    tuples, product "apply left then right"."""
    if not 1 <= n <= 4:
        raise ParameterOutOfRange(f"symmetric_group supports 1 <= n <= 4, got {n}")
    els = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(els)}
    table = [[index[tuple(q[p[i]] for i in range(n))] for q in els] for p in els]

    def token(p):
        out = []
        seen = set()
        for s in range(n):
            if s in seen or p[s] == s:
                continue
            cyc, t = [s], p[s]
            seen.add(s)
            while t != s:
                cyc.append(t)
                seen.add(t)
                t = p[t]
            out.append("(" + "".join(map(str, cyc)) + ")")
        return "".join(out) if out else "id"

    return group_from_table(table, [token(p) for p in els])


def paper_example_presentation() -> CosetPresentation:
    """Coset presentation of the antipodal dihedral quandle of order 4 over
    the quaternion group.

    Two orbits: H_1 = <a>, H_2 = <b>, z = (a, b), r = (b, a), kappa the
    identity. Note a lies in H_1 and b in H_2, so the nontrivial cosets are
    H_1 b and H_2 a; the isomorphism onto (R_4, antipodal) sends
    H_1 e -> 0, H_1 b -> 2, H_2 e -> 1, H_2 a -> 3.
    """
    G = quaternion_group()
    a, b = 1, 4
    H1 = subgroup_closure(G, {a})
    H2 = subgroup_closure(G, {b})
    return CosetPresentation(group=G, subgroups=(H1, H2), z=(a, b), r=(b, a),
                             kappa=(0, 1))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    parameters: tuple[str, ...]  # parameter names, for usage messages
    produces: str                # "quandle" | "symmetric_quandle" | "group" | "presentation"


ENTRIES: tuple[CatalogEntry, ...] = (
    CatalogEntry("dihedral-quandle", ("n",), "quandle"),
    CatalogEntry("antipodal", ("n",), "symmetric_quandle"),
    CatalogEntry("conj", ("group-name", "params..."), "symmetric_quandle"),
    CatalogEntry("quaternion", (), "group"),
    CatalogEntry("cyclic", ("n",), "group"),
    CatalogEntry("dihedral-group", ("n",), "group"),
    CatalogEntry("sym", ("n",), "group"),
    CatalogEntry("paper-example", (), "presentation"),
)


def _int_params(name: str, params: list[str], count: int) -> list[int]:
    if len(params) != count:
        expected = " ".join(e.parameters[k] for e in ENTRIES if e.name == name
                            for k in range(len(e.parameters)))
        raise ParameterOutOfRange(
            f"catalog {name} takes {count} parameter(s): {expected or '(none)'}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise ParameterOutOfRange(f"catalog {name}: parameters must be integers")


def build_entry(name: str, params: list[str]):
    """Resolve a catalog spec to (produces, object)."""
    if name == "dihedral-quandle":
        (n,) = _int_params(name, params, 1)
        return "quandle", dihedral_quandle(n)
    if name == "antipodal":
        (n,) = _int_params(name, params, 1)
        return "symmetric_quandle", antipodal(n)
    if name == "conj":
        if not params:
            raise ParameterOutOfRange("catalog conj needs a group spec")
        _, G = build_entry(params[0], params[1:])
        if not isinstance(G, FiniteGroup):
            raise ParameterOutOfRange(f"{params[0]} is not a group entry")
        return "symmetric_quandle", conj_symmetric_quandle(G)
    if name == "quaternion":
        _int_params(name, params, 0)
        return "group", quaternion_group()
    if name == "cyclic":
        (n,) = _int_params(name, params, 1)
        return "group", cyclic_group(n)
    if name == "dihedral-group":
        (n,) = _int_params(name, params, 1)
        return "group", dihedral_group(n)
    if name == "sym":
        (n,) = _int_params(name, params, 1)
        return "group", symmetric_group(n)
    if name == "paper-example":
        _int_params(name, params, 0)
        return "presentation", paper_example_presentation()
    raise ParameterOutOfRange(f"unknown catalog entry {name!r}")
