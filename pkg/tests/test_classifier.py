from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, strategies as st

from hecke_phigamma.classifier import (ClassifierError, ClassPoint, SupersingularDatum,
                                       enumerate_classes, functor_output, group_elements,
                                       iota0, iota1, is_symmetric, iter_data, iter_points,
                                       make_point, orbit, rotate, supersingular_to_classpoint,
                                       validate_datum, verify_bijection,
                                       verify_functor_outputs)
from hecke_phigamma.phigamma import RankOneClass


def _brute_force_orbit_count(points, gens) -> int:
    # union-find over the explicit point set
    parent = {x: x for x in points}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in points:
        for g in gens:
            parent[find(x)] = find(g(x))
    return len({find(x) for x in points})


# -- involutions ------------------------------------------------------------------

def test_iota0_example_c():
    pt = make_point("C", 2, 3, 2, 1, 1)
    img = iota0(pt)
    assert img.digits == (0, 2) and img.n == 6 and img.s == 1 and img.xi == 1


@pytest.mark.parametrize("family,r,p", [("C", 2, 3), ("C", 3, 3), ("C", 3, 5), ("B", 3, 3),
                                        ("B", 5, 3), ("B", 3, 5)])
def test_iota0_involution(family, r, p):
    for x in iter_points(family, r, p):
        assert iota0(iota0(x)) == x


@pytest.mark.parametrize("r", [4, 6])
def test_d_involution_algebra(r):
    for x in iter_points("D", r, 3):
        assert iota0(iota0(x)) == x
        assert iota0(iota1(x)) == iota1(iota0(x))
        expected = x if (r // 2) % 2 else iota0(x)
        assert iota1(iota1(x)) == expected


def test_d_involution_algebra_r8():
    for x in iter_points("D", 8, 3):
        assert iota1(iota1(x)) == iota0(x)


@pytest.mark.parametrize("r,p", [(2, 3), (3, 3), (4, 3), (2, 5)])
def test_rotation_group(r, p):
    for x in iter_points("A", r, p):
        assert rotate(x, r) == x
        assert rotate(rotate(x, 1), 1) == rotate(x, 2)


@pytest.mark.parametrize("family,r,p", [("C", 2, 3), ("C", 3, 3), ("B", 3, 3), ("B", 5, 3),
                                        ("D", 4, 3), ("D", 6, 3), ("A", 2, 3), ("A", 3, 3),
                                        ("C", 2, 5)])
def test_counts_match_brute_force(family, r, p):
    pts = list(iter_points(family, r, p))
    gens = {"C": [iota0], "B": [iota0], "D": [iota0, iota1], "A": [rotate]}[family]
    reps = enumerate_classes(family, r, p)
    assert len(reps) == _brute_force_orbit_count(pts, gens)
    assert sum(len(orbit(x)) for x in reps) == len(pts)


def test_enumerate_d_rows_satisfy_constraints():
    for x in enumerate_classes("D", 4, 3):
        h = 2
        assert all(x.digits[i] == x.digits[i + h] for i in range(1, h - 1))
        assert x.n % 2 == 0 and x.xi in (1, 2)


def test_family_b_needs_odd_r():
    with pytest.raises(ClassifierError):
        enumerate_classes("B", 2, 3)


def test_enumeration_guard():
    with pytest.raises(ClassifierError):
        enumerate_classes("C", 13, 3)


def test_group_elements_sizes():
    assert len(group_elements("D", 6)) == 4
    assert len(group_elements("A", 5)) == 5


# -- symmetry predicates -------------------------------------------------------------

def test_c_symmetric_pair():
    p, r = 5, 3
    k = (1, 3, 0)
    n1 = 1 + 3 * 5
    n2 = 0 + 3 * 5 + 1 * 25
    off = sum(i * c for i, c in enumerate(k))
    d1 = RankOneClass(n1, 1, 2, r, p, p)
    d2 = RankOneClass(n2, (1 + off) % 4, 2, r, p, p)
    assert is_symmetric("C", [d1, d2])
    assert not is_symmetric("C", [d1, RankOneClass(n2, (2 + off) % 4, 2, r, p, p)])


def test_c_symmetric_rejects_zero_digits():
    d = RankOneClass(0, 0, 1, 2, 3, 3)
    assert not is_symmetric("C", [d, d])


def test_is_symmetric_arity():
    with pytest.raises(ClassifierError):
        is_symmetric("D", [RankOneClass(2, 0, 1, 4, 3, 3)] * 2)


# -- supersingular data ----------------------------------------------------------------

def test_zero_digits_rejected():
    with pytest.raises(ClassifierError):
        validate_datum(SupersingularDatum("C", 2, 3, (0, 0, 0), 0, 1))


def test_type_b_has_no_b():
    with pytest.raises(ClassifierError):
        validate_datum(SupersingularDatum("B", 3, 3, (1, 1, 0, 0), 0, 1))


@pytest.mark.parametrize("case", [("C", 2, 3), ("C", 3, 3), ("A", 1, 3), ("A", 2, 3),
                                  ("A", 2, 5), ("A", 3, 3)])
def test_bijection(case):
    rep = verify_bijection(*case)
    assert rep.well_defined and rep.injective and rep.surjective
    assert rep.n_data_orbits == rep.n_classes


def test_realized_involutions():
    assert verify_bijection("C", 2, 3).realized == {"u": "iota0"}
    assert verify_bijection("D", 5, 3).realized == {"u": "iota0", "rho": "iota1"}
    assert verify_bijection("A", 2, 3).realized["u"].startswith("rot")


@pytest.mark.parametrize("case", [("C", 2, 3), ("C", 3, 3), ("B", 3, 3), ("A", 1, 3),
                                  ("A", 2, 3)])
def test_functor_outputs_classify(case):
    rep = verify_functor_outputs(*case)
    assert rep.ok, rep.to_json()
    assert rep.checked > 0


@pytest.mark.slow
def test_functor_outputs_d4():
    rep = verify_functor_outputs("D", 4, 3)
    assert rep.ok, rep.to_json()


@pytest.mark.parametrize("case", [("D", 5, 3), ("B", 3, 5), ("A", 3, 3)])
def test_functor_outputs_symmetric(case):
    rep = verify_functor_outputs(*case, classify=False)
    assert rep.ok, rep.to_json()


def test_a1_two_summands():
    dat = next(iter(iter_data("A", 1, 3)))
    out = functor_output(dat)
    assert out.r == 2 and len(out.triples) == 2
    mods = out.modules()
    assert [m.r for m in mods] == [2, 2]
    assert is_symmetric("A", mods)


def test_b_image_is_even_middle_digit():
    for p in (3, 5):
        rep = verify_bijection("B", 3, p)
        assert rep.well_defined and rep.injective
        image = {supersingular_to_classpoint(x) for x in iter_data("B", 3, p)}
        for pt in enumerate_classes("B", 5, p):
            hit = any(y in image for y in orbit(pt))
            k = pt.digits
            expected = k[2] % 2 == 0 and (2 * pt.s - (k[0] - k[4])) % (p - 1) == 0
            assert hit == expected


@pytest.mark.xfail(strict=True, reason="class set lacks the middle-digit parity; "
                                       "see decisions ledger")
def test_b_surjective():
    assert verify_bijection("B", 3, 3).surjective


@pytest.mark.xfail(strict=True, reason="a packet spans two class points; see decisions ledger")
def test_b_packets():
    assert verify_bijection("B", 3, 3).packet_well_defined


@pytest.mark.xfail(strict=True, reason="omega conjugation rotates the word by r/2; "
                                       "see decisions ledger")
def test_d4_well_defined():
    assert verify_bijection("D", 4, 3).well_defined


@pytest.mark.xfail(strict=True, reason="tau and the coroots generate an index-2 sublattice of "
                                       "the GSO torus; see decisions ledger")
def test_d5_injective():
    assert verify_bijection("D", 5, 3).injective


@pytest.mark.xfail(strict=True, reason="sign of the s-offset in iota0 for family C; "
                                       "see decisions ledger")
def test_c_p5_well_defined():
    assert verify_bijection("C", 2, 5).well_defined


@given(st.sampled_from([("C", 2, 3), ("C", 3, 3), ("A", 2, 3), ("D", 5, 3)]), st.data())
def test_classpoint_lands_in_family(case, data):
    dats = list(iter_data(*case))
    dat = data.draw(st.sampled_from(dats))
    pt = supersingular_to_classpoint(dat)
    assert isinstance(pt, ClassPoint)
    fam_r = {"C": case[1] + 1, "A": case[1] + 1, "D": 2 * case[1] - 2}[case[0]]
    assert pt.r == fam_r
    assert pt in set(iter_points(pt.family, pt.r, pt.p))
