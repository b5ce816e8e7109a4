"""Decompose a finite symmetric quandle into a coset presentation over its
inner (default) or full symmetric automorphism group, with an explicit,
re-verified isomorphism.

The recipe: take the orbit decomposition of the group action, fix the
minimal representative q_i of each orbit, and put H_i = stabilizer(q_i),
z_i = the translation by q_i, kappa(i) = the orbit of rho(q_i), and r_i =
the least group element carrying q_kappa(i) to rho(q_i). The map
psi(H_i x) = q_i . x is then checked to be a symmetric quandle isomorphism
from the built coset object back to the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .autgroup import PermGroup, inner_group, orbits, stabilizer, symmetric_aut_group, transporter
from .catalog import conj_symmetric_quandle
from .cosets import (
    CosetPresentation,
    LabeledSymmetricQuandle,
    build_symmetric_quandle,
    validate_presentation,
)
from .errors import InternalVerificationFailed, NoInversionClosedTransversal
from .groups import FiniteGroup, centralizer, conjugacy_classes
from .quandle import Isomorphism
from .report import Check, Report
from .symmetric import DEFAULT_MAX_N, SymmetricQuandle

GROUP_CHOICES = ("inn", "aut")


@dataclass(frozen=True)
class DecompositionResult:
    presentation: CosetPresentation
    built: LabeledSymmetricQuandle
    psi: Isomorphism            # built -> input
    group_choice: str
    verification: Report


def decompose(S: SymmetricQuandle, group_choice: str = "inn",
              max_n: int = DEFAULT_MAX_N) -> DecompositionResult:
    """Produce a coset presentation of S together with the isomorphism psi.

    group_choice "inn" uses the closure of the translations and needs no
    search bound; "aut" uses the full symmetric automorphism group and is
    subject to max_n.
    """
    if group_choice not in GROUP_CHOICES:
        raise ValueError(f"group_choice must be one of {GROUP_CHOICES}")
    G: PermGroup = (inner_group(S) if group_choice == "inn"
                    else symmetric_aut_group(S, max_n))
    dec = orbits(G)
    q = dec.representatives
    subgroups = tuple(stabilizer(G, qi) for qi in q)
    kappa = tuple(dec.orbit_index[S.rho[qi]] for qi in q)
    z = []
    for qi in q:
        zi = G.index_of(S.quandle.column(qi))
        if zi is None:
            raise InternalVerificationFailed(
                f"translation by {qi} is missing from the chosen group")
        z.append(zi)
    r = []
    for i, qi in enumerate(q):
        ri = transporter(G, q[kappa[i]], S.rho[qi])
        if ri is None:
            raise InternalVerificationFailed(
                f"rho({qi}) not reachable from the orbit representative")
        r.append(ri)

    P = CosetPresentation(group=G, subgroups=subgroups, z=tuple(z), r=tuple(r),
                          kappa=kappa)
    built = build_symmetric_quandle(P)
    psi_map = tuple(G.elements[x][q[i]] for (i, x) in built.labels)
    psi = Isomorphism(source=built.sq, target=S, map=psi_map)
    result = DecompositionResult(presentation=P, built=built, psi=psi,
                                 group_choice=group_choice,
                                 verification=Report(()))
    report = verify_decomposition(S, result)
    result = DecompositionResult(presentation=P, built=built, psi=psi,
                                 group_choice=group_choice, verification=report)
    if not report.ok:
        raise InternalVerificationFailed(
            "; ".join(c.line() for c in report.failures))
    return result


def verify_decomposition(S: SymmetricQuandle, D: DecompositionResult) -> Report:
    """Re-check everything: the six presentation conditions, and that psi is
    a bijective quandle homomorphism intertwining the involutions."""
    checks = list(validate_presentation(D.presentation, "symmetric").checks)
    n = S.order
    f = D.psi.map
    built = D.built.sq

    if len(f) == built.order == n and sorted(f) == list(range(n)):
        checks.append(Check("psi bijective", True))
    else:
        checks.append(Check("psi bijective", False, "not a bijection onto the input"))
        return Report(tuple(checks))

    hom = next(((a, b) for a in range(n) for b in range(n)
                if f[built.quandle.op[a][b]] != S.quandle.op[f[a]][f[b]]), None)
    checks.append(Check("psi homomorphism", hom is None,
                        "" if hom is None else f"fails at {hom}"))
    eq = next((a for a in range(n) if f[built.rho[a]] != S.rho[f[a]]), None)
    checks.append(Check("psi intertwines rho", eq is None,
                        "" if eq is None else f"fails at {eq}"))
    total = sum(sp.count for sp in D.built.cosets)
    checks.append(Check("coset count", total == n,
                        "" if total == n else f"{total} cosets for {n} elements"))
    return Report(tuple(checks))


def conj_presentation(G: FiniteGroup) -> CosetPresentation:
    """Presentation of the conjugation symmetric quandle of G from a system
    of conjugacy class representatives closed under inversion.

    Classes are processed by ascending minimal element. A class equal to its
    own inverse class forces a representative with g*g = e; paired classes
    get a representative g and hand g^-1 to the partner. If an ambivalent
    class has no involution the search fails, and no system at all exists.
    """
    classes = conjugacy_classes(G)
    class_of = {}
    for idx, cls in enumerate(classes):
        for m in cls:
            class_of[m] = idx
    k = len(classes)
    reps: list[int | None] = [None] * k
    kappa = [0] * k
    for i, cls in enumerate(classes):
        if reps[i] is not None:
            continue
        j = class_of[G.inv(cls[0])]
        kappa[i], kappa[j] = j, i
        if i == j:
            g = next((g for g in cls if G.mul(g, g) == G.identity), None)
            if g is None:
                raise NoInversionClosedTransversal(cls)
            reps[i] = g
        else:
            reps[i] = cls[0]
            reps[j] = G.inv(cls[0])

    subgroups = tuple(centralizer(G, g) for g in reps)
    z = tuple(reps)
    r = tuple(G.identity for _ in range(k))
    P = CosetPresentation(group=G, subgroups=subgroups, z=z, r=r,
                          kappa=tuple(kappa))

    # the built object must agree with Conj(G) under psi(H_i x) = x^-1 g_i x
    built = build_symmetric_quandle(P)
    target = conj_symmetric_quandle(G)
    psi = tuple(G.conj(z[i], x) for (i, x) in built.labels)
    n = G.order
    if sorted(psi) != list(range(n)):
        raise InternalVerificationFailed("conjugation psi is not a bijection")
    for a in range(n):
        for b in range(n):
            if psi[built.sq.quandle.op[a][b]] != target.quandle.op[psi[a]][psi[b]]:
                raise InternalVerificationFailed(
                    f"conjugation psi breaks the product at ({a},{b})")
        if psi[built.sq.rho[a]] != target.rho[psi[a]]:
            raise InternalVerificationFailed(
                f"conjugation psi breaks rho at {a}")
    return P
