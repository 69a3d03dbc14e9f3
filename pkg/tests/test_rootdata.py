from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hecke_phigamma.rootdata import (RootSystemError, build_root_system, coroot_of,
                                     coroot_relation, dot, expected_positive_count,
                                     explicit_positive_roots, minuscule_coweights, pairing,
                                     roots_by_closure, vec)

CLASSICAL = [("A", d) for d in range(1, 6)] + [("B", d) for d in range(3, 6)] + \
    [("C", d) for d in range(2, 6)] + [("D", d) for d in range(4, 7)]
ALL = CLASSICAL + [("E6", 6), ("E7", 7)]


def test_c2_positive_roots():
    rs = build_root_system("C", 2)
    assert set(rs.positive_roots) == {vec(1, -1), vec(1, 1), vec(2, 0), vec(0, 2)}


def test_a1_ambient_plane():
    rs = build_root_system("A", 1)
    assert rs.positive_roots == (vec(1, -1),)
    assert len(rs.simple_roots) == 1


def test_e6_counts_and_half_roots():
    rs = build_root_system("E6")
    assert len(rs.positive_roots) == 36
    half = [a for a in rs.positive_roots if all(abs(x) == Fraction(1, 2) for x in a[:5])]
    assert len(half) == 16
    assert len([a for a in rs.positive_roots if pairing(a, rs.coweight(1)) != 0]) == 16


def test_e6_alpha0_omega1():
    rs = build_root_system("E6")
    assert pairing(rs.alpha0, rs.coweight(1)) == -1


@pytest.mark.parametrize("t,d", ALL)
def test_positive_count(t, d):
    rs = build_root_system(t, d)
    assert len(rs.positive_roots) == expected_positive_count(t, d)


@pytest.mark.parametrize("t,d", CLASSICAL)
def test_explicit_list_matches_closure(t, d):
    rs = build_root_system(t, d)
    assert set(explicit_positive_roots(t, d)) == set(rs.positive_roots)
    closure = roots_by_closure(rs.simple_roots)
    assert closure == set(rs.positive_roots) | {tuple(-x for x in a) for a in rs.positive_roots}


@pytest.mark.parametrize("t,d", ALL)
def test_fundamental_coweights_dual_basis(t, d):
    rs = build_root_system(t, d)
    for i, a in enumerate(rs.simple_roots):
        for j, w in enumerate(rs.fundamental_coweights):
            assert dot(a, w) == (1 if i == j else 0)


# coroot marks (Bourbaki tables for the dual affine diagram)
MARKS = {
    "A": lambda d: [1] * (d + 1),
    "C": lambda d: [1] * (d + 1),
    "B": lambda d: [1, 1] + [2] * (d - 2) + [1],
    "D": lambda d: [1, 1] + [2] * (d - 3) + [1, 1],
    "E6": lambda d: [1, 1, 2, 2, 3, 2, 1],
    "E7": lambda d: [1, 2, 2, 3, 4, 3, 2, 1],
}


@pytest.mark.parametrize("t,d", ALL)
def test_null_coroot_relation(t, d):
    rs = build_root_system(t, d)
    assert coroot_relation(rs, MARKS[t](d)) == rs.zero()


def test_minuscule():
    assert [c.name for c in minuscule_coweights(build_root_system("E6"))] == ["omega1", "omega6"]
    assert [c.name for c in minuscule_coweights(build_root_system("E7"))] == ["omega7"]
    names = [c.name for c in minuscule_coweights(build_root_system("C", 3))]
    assert "omega3" in names


def test_c_tau_pairing():
    rs = build_root_system("C", 3)
    tau = rs.coweight(3)
    assert pairing(vec(2, 0, 0), tau) == 1
    assert all(pairing(a, tau) in (0, 1) for a in rs.positive_roots)


@pytest.mark.parametrize("t,d", [("C", 1), ("B", 2), ("D", 3), ("E6", 7), ("F", 4), ("A", 0)])
def test_invalid_rank(t, d):
    with pytest.raises(RootSystemError):
        build_root_system(t, d)


@given(st.sampled_from(ALL), st.data())
def test_reflections_permute_roots(case, data):
    rs = build_root_system(*case)
    roots = set(rs.positive_roots) | {tuple(-x for x in a) for a in rs.positive_roots}
    i = data.draw(st.integers(0, rs.rank))
    a = rs.root(i)
    av = rs.coroot(i)
    b = data.draw(st.sampled_from(sorted(roots)))
    img = tuple(x - dot(b, av) * y for x, y in zip(b, a))
    assert img in roots
    assert dot(b, av).denominator == 1
