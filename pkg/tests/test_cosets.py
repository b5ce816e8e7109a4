import pytest

from sqk import (
    antipodal,
    build_quandle,
    build_rack,
    build_symmetric_quandle,
    cyclic_group,
    find_symmetric_isomorphism,
    inner_group,
    paper_example_presentation,
    single_orbit_presentation,
    stabilizer,
    subgroup_closure,
    subgroup_from_elements,
    validate_presentation,
)
from sqk.cosets import CosetPresentation
from sqk.errors import PresentationInvalid


def test_paper_example_all_conditions(quat):
    P = paper_example_presentation()
    report = validate_presentation(P, "symmetric")
    assert report.ok
    assert [c.name for c in report.checks] == ["C1", "C2", "C3", "C4", "C5", "C6"]


def test_paper_example_with_trivial_r_fails_c5(quat):
    P = paper_example_presentation()
    e = quat.identity
    bad = CosetPresentation(group=P.group, subgroups=P.subgroups, z=P.z,
                            r=(e, e), kappa=P.kappa)
    report = validate_presentation(bad, "symmetric")
    assert not report.ok
    assert not report["C5"].passed
    # a has order 4, so a^-1 != a
    with pytest.raises(PresentationInvalid) as exc:
        build_symmetric_quandle(bad)
    assert exc.value.condition == "C5"


def test_degenerate_full_subgroup(quat):
    H = subgroup_from_elements(quat, range(8))
    P = single_orbit_presentation(quat, H, quat.identity)
    assert validate_presentation(P, "symmetric").ok
    built = build_symmetric_quandle(P)
    assert built.sq.order == 1
    assert built.sq.quandle.op == ((0,),)


def test_paper_example_products():
    built = build_symmetric_quandle(paper_example_presentation())
    # element order: H0[e], H0[b], H1[e], H1[a]
    assert built.labels == ((0, 0), (0, 4), (1, 0), (1, 1))
    op = built.sq.quandle.op
    h1e, h1b, h2e, h2a = 0, 1, 2, 3
    assert op[h1e][h1b] == h1e
    assert op[h1e][h2e] == h1b
    assert op[h2e][h2a] == h2e
    assert op[h2e][h1e] == h2a
    assert built.sq.rho[h1e] == h1b
    assert built.sq.rho[h2e] == h2a


def test_paper_example_is_antipodal_4():
    built = build_symmetric_quandle(paper_example_presentation())
    iso = find_symmetric_isomorphism(built.sq, antipodal(4))
    assert iso is not None
    assert iso.map == (0, 2, 1, 3)


def test_rack_but_not_quandle():
    # G = Z4, H = {0, 2}, z = 1: C1 holds (abelian) but z is not in H
    G = cyclic_group(4)
    H = subgroup_from_elements(G, [0, 2])
    P = single_orbit_presentation(G, H, 1)
    rack_report = validate_presentation(P, "rack")
    assert rack_report.ok
    quandle_report = validate_presentation(P, "quandle")
    assert not quandle_report["C2"].passed
    labeled = build_rack(P)
    assert labeled.quandle.rack_only
    assert labeled.quandle.op == ((1, 1), (0, 0))
    with pytest.raises(PresentationInvalid) as exc:
        build_quandle(P)
    assert exc.value.condition == "C2"


def test_trivial_subgroup_gives_trivial_quandle():
    # H = {e}, z = e: a*b = a b^-1 e b = a
    G = cyclic_group(5)
    H = subgroup_from_elements(G, [0])
    P = single_orbit_presentation(G, H, 0)
    labeled = build_quandle(P)
    assert labeled.quandle.order == 5
    assert labeled.quandle.op == tuple(tuple(a for _ in range(5)) for a in range(5))


def test_single_orbit_from_inner_group(anti4):
    # H = stab(0) in Inn(R4, antipodal), z = s_0, r = (0 2): the two cosets
    # form a quandle isomorphic to the sub-kei {0, 2} of R4
    G = inner_group(anti4)
    H = stabilizer(G, 0)
    z = G.index_of((0, 3, 2, 1))
    r = G.index_of((2, 1, 0, 3))
    P = single_orbit_presentation(G, H, z, r)
    assert validate_presentation(P, "symmetric").ok
    built = build_symmetric_quandle(P)
    assert built.sq.quandle.op == ((0, 0), (1, 1))
    assert built.sq.rho == (1, 0)


def test_element_count_is_coset_count(quat):
    P = paper_example_presentation()
    built = build_symmetric_quandle(P)
    expected = sum(P.group.order // H.order for H in P.subgroups)
    assert built.sq.order == expected == 4


def test_well_definedness_is_checked_exhaustively():
    # recompute every cell of the quaternion example with every pair of
    # alternative representatives
    P = paper_example_presentation()
    built = build_symmetric_quandle(P)
    G = P.group
    labels = built.labels
    for p, (i, _) in enumerate(labels):
        space_i = built.cosets[i]
        members_p = space_i.cosets[space_i.coset_index[labels[p][1]]]
        for q, (j, _) in enumerate(labels):
            space_j = built.cosets[j]
            members_q = space_j.cosets[space_j.coset_index[labels[q][1]]]
            for x in members_p:
                for y in members_q:
                    g = G.mul(x, G.mul(G.mul(G.inv(y), P.z[j]), y))
                    assert built.index_of(i, g) == built.sq.quandle.op[p][q]
        for x in members_p:
            g = G.mul(P.r[i], x)
            assert built.index_of(P.kappa[i], g) == built.sq.rho[p]


def test_dual_matches_inverse_z_formula():
    P = paper_example_presentation()
    built = build_symmetric_quandle(P)
    G = P.group
    labels = built.labels
    for p, (i, x) in enumerate(labels):
        for q, (j, y) in enumerate(labels):
            g = G.mul(x, G.mul(G.mul(G.inv(y), G.inv(P.z[j])), y))
            assert built.index_of(i, g) == built.sq.quandle.dual[p][q]


def test_structurally_bad_presentation(quat):
    H = subgroup_closure(quat, {1})
    P = CosetPresentation(group=quat, subgroups=(H,), z=(1,), r=(4, 1),
                          kappa=(0,))
    with pytest.raises(PresentationInvalid) as exc:
        validate_presentation(P, "symmetric")
    assert exc.value.condition == "structure"
