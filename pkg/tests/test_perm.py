from hypothesis import given
from hypothesis import strategies as st

from sqk import perm


def perms(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(n))).map(tuple))


def test_identity():
    assert perm.identity(3) == (0, 1, 2)
    assert perm.cycle_string(perm.identity(4)) == "()"
    assert perm.cycle_token(perm.identity(4)) == "id"


def test_compose_convention():
    # apply left, then right
    p = (1, 0, 2)
    q = (0, 2, 1)
    assert perm.compose(p, q) == (2, 0, 1)
    assert all(perm.compose(p, q)[a] == q[p[a]] for a in range(3))


@given(perms())
def test_inverse(p):
    n = len(p)
    assert perm.compose(p, perm.inverse(p)) == perm.identity(n)
    assert perm.compose(perm.inverse(p), p) == perm.identity(n)


@given(perms())
def test_cycles_partition(p):
    cyc = perm.cycles(p)
    flat = sorted(x for c in cyc for x in c)
    assert flat == list(range(len(p)))
    assert sum(perm.cycle_type(p)) == len(p)


def test_cycle_string():
    assert perm.cycle_string((2, 3, 0, 1)) == "(0 2)(1 3)"
    assert perm.cycle_string((0, 3, 2, 1)) == "(1 3)"
    assert perm.cycle_token((2, 3, 0, 1)) == "(0,2)(1,3)"
    assert perm.array_string((0, 3, 2, 1)) == "[0 3 2 1]"


def test_is_involution():
    assert perm.is_involution((1, 0, 2))
    assert not perm.is_involution((1, 2, 0))
