"""Coset presentations of (symmetric) quandles over a finite group.

The data is a group G, subgroups H_i, elements z_i and r_i, and an
involution kappa on the orbit index set. The underlying set is the disjoint
union of the right coset spaces H_i\\G with

    H_i x * H_j y  =  H_i (x y^-1 z_j y)
    rho(H_i x)     =  H_kappa(i) (r_i x)

Six side conditions make this well defined and a good involution; they are
validated explicitly, and the finished tables are re-validated against the
axioms rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalVerificationFailed, PresentationInvalid
from .groups import CosetSpace, GroupLike, Subgroup, centralizes, right_cosets
from .quandle import Quandle, quandle_from_table
from .report import Check, Report
from .symmetric import SymmetricQuandle, attach_involution

LEVELS = ("rack", "quandle", "symmetric")


@dataclass(frozen=True)
class CosetPresentation:
    group: GroupLike
    subgroups: tuple[Subgroup, ...]
    z: tuple[int, ...]
    r: tuple[int, ...]
    kappa: tuple[int, ...]

    @property
    def orbit_count(self) -> int:
        return len(self.subgroups)


def single_orbit_presentation(G: GroupLike, H: Subgroup, z: int,
                              r: int | None = None) -> CosetPresentation:
    """The one-orbit case: kappa is forced to be the identity."""
    if r is None:
        r = G.identity
    return CosetPresentation(group=G, subgroups=(H,), z=(z,), r=(r,), kappa=(0,))


def _structural_problems(P: CosetPresentation) -> str | None:
    k = P.orbit_count
    if not (len(P.z) == len(P.r) == len(P.kappa) == k):
        return "z, r, kappa must all have one entry per orbit"
    for i in range(k):
        if P.subgroups[i].parent is not P.group:
            return f"subgroup {i} does not live in the presentation group"
        if not 0 <= P.z[i] < P.group.order:
            return f"z_{i} out of range"
        if not 0 <= P.r[i] < P.group.order:
            return f"r_{i} out of range"
        if not 0 <= P.kappa[i] < k:
            return f"kappa({i}) out of range"
    return None


def validate_presentation(P: CosetPresentation, level: str = "symmetric") -> Report:
    """Per-condition report for the requested level.

    rack: C1 (z_i centralizes H_i). quandle: adds C2 (z_i in H_i).
    symmetric: adds C3 (r_i H_i r_i^-1 in H_kappa(i)), C4 (r_kappa(i) r_i
    in H_i), C5 (z_i^-1 = r_i^-1 z_kappa(i) r_i), C6 (kappa involutive).
    """
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}")
    problem = _structural_problems(P)
    if problem is not None:
        raise PresentationInvalid("structure", problem)
    G = P.group
    k = P.orbit_count
    checks: list[Check] = []

    def c1() -> Check:
        for i in range(k):
            if not centralizes(G, P.z[i], P.subgroups[i]):
                h = next(h for h in P.subgroups[i].elements
                         if G.conj(h, P.z[i]) != h)
                return Check("C1", False, f"z_{i} does not centralize h={h}")
        return Check("C1", True)

    def c2() -> Check:
        for i in range(k):
            if P.z[i] not in P.subgroups[i]:
                return Check("C2", False, f"z_{i} not in H_{i}")
        return Check("C2", True)

    def c3() -> Check:
        for i in range(k):
            Hk = set(P.subgroups[P.kappa[i]].elements)
            ri = P.r[i]
            for h in P.subgroups[i].elements:
                if G.mul(G.mul(ri, h), G.inv(ri)) not in Hk:
                    return Check("C3", False,
                                 f"r_{i} h r_{i}^-1 escapes H_{P.kappa[i]} at h={h}")
        return Check("C3", True)

    def c4() -> Check:
        for i in range(k):
            if G.mul(P.r[P.kappa[i]], P.r[i]) not in P.subgroups[i]:
                return Check("C4", False, f"r_kappa({i}) r_{i} not in H_{i}")
        return Check("C4", True)

    def c5() -> Check:
        for i in range(k):
            lhs = G.inv(P.z[i])
            rhs = G.mul(G.mul(G.inv(P.r[i]), P.z[P.kappa[i]]), P.r[i])
            if lhs != rhs:
                return Check("C5", False, f"z_{i}^-1 != r_{i}^-1 z_kappa({i}) r_{i}")
        return Check("C5", True)

    def c6() -> Check:
        for i in range(k):
            if P.kappa[P.kappa[i]] != i:
                return Check("C6", False, f"kappa^2({i}) = {P.kappa[P.kappa[i]]}")
        return Check("C6", True)

    checks.append(c1())
    if level in ("quandle", "symmetric"):
        checks.append(c2())
    if level == "symmetric":
        checks.extend([c3(), c4(), c5(), c6()])
    return Report(tuple(checks))


@dataclass(frozen=True)
class LabeledQuandle:
    quandle: Quandle
    presentation: CosetPresentation
    labels: tuple[tuple[int, int], ...]   # element -> (orbit index, coset rep)
    cosets: tuple[CosetSpace, ...]        # one coset space per orbit

    def label_name(self, k: int) -> str:
        i, x = self.labels[k]
        return f"H{i}[{self.presentation.group.name_of(x)}]"

    def index_of(self, i: int, x: int) -> int:
        """Element index of the coset H_i x (any member x)."""
        rep = self.cosets[i].representatives[self.cosets[i].coset_index[x]]
        return self.labels.index((i, rep))


@dataclass(frozen=True)
class LabeledSymmetricQuandle:
    sq: SymmetricQuandle
    presentation: CosetPresentation
    labels: tuple[tuple[int, int], ...]
    cosets: tuple[CosetSpace, ...]

    def label_name(self, k: int) -> str:
        i, x = self.labels[k]
        return f"H{i}[{self.presentation.group.name_of(x)}]"

    def index_of(self, i: int, x: int) -> int:
        rep = self.cosets[i].representatives[self.cosets[i].coset_index[x]]
        return self.labels.index((i, rep))


def _require(P: CosetPresentation, level: str) -> None:
    report = validate_presentation(P, level)
    if not report.ok:
        bad = report.failures[0]
        raise PresentationInvalid(bad.name, bad.detail)


def _assemble(P: CosetPresentation):
    """Coset spaces, element labels, operation and rho tables, together with
    exhaustive well-definedness checks over all alternative representatives."""
    G = P.group
    k = P.orbit_count
    spaces = tuple(right_cosets(G, P.subgroups[i]) for i in range(k))
    labels: list[tuple[int, int]] = []
    offset = []
    for i in range(k):
        offset.append(len(labels))
        labels.extend((i, rep) for rep in spaces[i].representatives)
    n = len(labels)

    def global_index(i: int, g: int) -> int:
        return offset[i] + spaces[i].coset_index[g]

    op = [[0] * n for _ in range(n)]
    for p, (i, x) in enumerate(labels):
        for q, (j, y) in enumerate(labels):
            w = G.mul(G.mul(G.inv(y), P.z[j]), y)
            op[p][q] = global_index(i, G.mul(x, w))

    # independence from the choice of representatives, on every cell
    for p, (i, _) in enumerate(labels):
        for q, (j, _) in enumerate(labels):
            expected = op[p][q]
            for x1 in spaces[i].cosets[spaces[i].coset_index[labels[p][1]]]:
                for y1 in spaces[j].cosets[spaces[j].coset_index[labels[q][1]]]:
                    w = G.mul(G.mul(G.inv(y1), P.z[j]), y1)
                    if global_index(i, G.mul(x1, w)) != expected:
                        raise InternalVerificationFailed(
                            f"product at cell ({p},{q}) depends on the "
                            "coset representative")

    # the dual must match the table built from z_j^-1 directly
    dual_direct = [[0] * n for _ in range(n)]
    for p, (i, x) in enumerate(labels):
        for q, (j, y) in enumerate(labels):
            w = G.mul(G.mul(G.inv(y), G.inv(P.z[j])), y)
            dual_direct[p][q] = global_index(i, G.mul(x, w))

    return spaces, tuple(labels), op, dual_direct, global_index


def build_rack(P: CosetPresentation) -> LabeledQuandle:
    """Rack on the union of coset spaces; requires only C1."""
    _require(P, "rack")
    spaces, labels, op, dual_direct, _ = _assemble(P)
    Q = quandle_from_table(op, allow_rack=True)
    if Q.dual != tuple(tuple(row) for row in dual_direct):
        raise InternalVerificationFailed("dual table disagrees with z^-1 formula")
    return LabeledQuandle(quandle=Q, presentation=P, labels=labels, cosets=spaces)


def build_quandle(P: CosetPresentation) -> LabeledQuandle:
    """Quandle on the union of coset spaces; requires C1 and C2."""
    _require(P, "quandle")
    spaces, labels, op, dual_direct, _ = _assemble(P)
    Q = quandle_from_table(op, allow_rack=False)
    if Q.dual != tuple(tuple(row) for row in dual_direct):
        raise InternalVerificationFailed("dual table disagrees with z^-1 formula")
    return LabeledQuandle(quandle=Q, presentation=P, labels=labels, cosets=spaces)


def build_symmetric_quandle(P: CosetPresentation) -> LabeledSymmetricQuandle:
    """Symmetric quandle from the full data; requires all six conditions.

    rho(H_i x) = H_kappa(i) (r_i x) is computed, checked independent of the
    representative, and then re-validated as a good involution on the built
    table rather than assumed.
    """
    _require(P, "symmetric")
    G = P.group
    spaces, labels, op, dual_direct, global_index = _assemble(P)
    n = len(labels)

    rho = [0] * n
    for p, (i, x) in enumerate(labels):
        rho[p] = global_index(P.kappa[i], G.mul(P.r[i], x))
    for p, (i, _) in enumerate(labels):
        for x1 in spaces[i].cosets[spaces[i].coset_index[labels[p][1]]]:
            if global_index(P.kappa[i], G.mul(P.r[i], x1)) != rho[p]:
                raise InternalVerificationFailed(
                    f"rho at element {p} depends on the coset representative")

    Q = quandle_from_table(op, allow_rack=False)
    if Q.dual != tuple(tuple(row) for row in dual_direct):
        raise InternalVerificationFailed("dual table disagrees with z^-1 formula")
    sq = attach_involution(Q, rho)
    return LabeledSymmetricQuandle(sq=sq, presentation=P, labels=labels,
                                   cosets=spaces)
