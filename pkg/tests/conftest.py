import pytest

from sqk import (
    antipodal,
    attach_involution,
    conj_symmetric_quandle,
    cyclic_group,
    dihedral_group,
    dihedral_quandle,
    quaternion_group,
    symmetric_group,
    trivial_quandle,
)

R4_TABLE = ((0, 2, 0, 2), (3, 1, 3, 1), (2, 0, 2, 0), (1, 3, 1, 3))


@pytest.fixture(scope="session")
def quat():
    return quaternion_group()


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def r4():
    return dihedral_quandle(4)


@pytest.fixture(scope="session")
def anti4():
    return antipodal(4)


@pytest.fixture(scope="session")
def conj_s3(s3):
    return conj_symmetric_quandle(s3)


def catalog_symmetric_quandles(max_order=12):
    """The symmetric quandles the property suites run over: antipodal maps,
    keis with the identity, and conjugation symmetric quandles of small
    groups."""
    out = []
    for n in range(2, max_order + 1, 2):
        out.append((f"antipodal({n})", antipodal(n)))
    for n in range(1, max_order + 1):
        out.append((f"(R_{n}, id)", attach_involution(dihedral_quandle(n),
                                                      list(range(n)))))
    for name, G in [("Z2", cyclic_group(2)), ("Z3", cyclic_group(3)),
                    ("Z4", cyclic_group(4)), ("Z5", cyclic_group(5)),
                    ("Z6", cyclic_group(6)), ("S3", symmetric_group(3)),
                    ("D4", dihedral_group(4)), ("Q8", quaternion_group())]:
        out.append((f"Conj({name})", conj_symmetric_quandle(G)))
    out.append(("(T3, id)", attach_involution(trivial_quandle(3),
                                              [0, 1, 2])))
    return [(name, s) for name, s in out if s.order <= max_order]
