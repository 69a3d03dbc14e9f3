"""Periodic galleries C^(0), C^(1), ... attached to a straight element phi.

C^(a r + b) = phi^a s_{beta(1)} ... s_{beta(b)} C, where phi = s_{beta(1)} ... s_{beta(r)} v
with v of length zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .affine_weyl import (AffineWeylElement, base_alcove, from_word, identity,
                          length, omega_by_relation, omega_elements,
                          simple_affine_reflection, translation, translation_power)
from .rootdata import (Coweight, RootSystem, Vector, build_root_system, dot,
                       scale)


class GalleryError(ValueError):
    pass


@dataclass(frozen=True)
class GalleryDatum:
    root_system: RootSystem
    phi: AffineWeylElement
    beta: tuple[int, ...]
    omega: AffineWeylElement
    tau: Coweight
    epsilon_note: str = ""

    @property
    def period(self) -> int:
        return len(self.beta)

    @property
    def r(self) -> int:
        return len(self.beta)


def standard_beta(type_label: str, d: int) -> tuple[int, ...]:
    if type_label in ("C", "A"):
        return tuple(range(d, -1, -1))
    if type_label == "B":
        return tuple(range(1, d + 1)) + tuple(range(d - 1, 1, -1)) + (0,)
    if type_label == "D":
        return tuple(range(d - 1, 0, -1)) + (d,) + tuple(range(d - 2, 1, -1)) + (0,)
    if type_label == "E6":
        return (2, 4, 3, 1)
    if type_label == "E6dual":
        return (2, 4, 5, 6)
    if type_label == "E7":
        return (1, 3, 4, 2, 5, 4, 3, 1, 0)
    raise GalleryError(f"no standard datum for {type_label}")


_EPSILON = {
    "C": "p*id", "B": "none", "A": "p*id",
    "D": "p*id (d even) / p^2*id (d odd)",
    "E6": "none", "E6dual": "none", "E7": "none",
}


def e6_u(rs: RootSystem) -> AffineWeylElement:
    """The length-zero element with u s_3 u^-1 = s_5 (and hence the full 3-cycle)."""
    return omega_by_relation(rs, {3: 5})


def standard_gallery_datum(type_label: str, d: Optional[int] = None) -> GalleryDatum:
    """phi, beta, tau as displayed for each type ("E6dual" selects the dual E6 choice)."""
    base_type = "E6" if type_label == "E6dual" else type_label
    rs = build_root_system(base_type, d)
    d = rs.rank
    beta = standard_beta(type_label, d)
    if type_label == "E6":
        om = e6_u(rs).inverse()
        tau = rs.coweight(1)
    elif type_label == "E6dual":
        om = e6_u(rs)
        tau = rs.coweight(6)
    elif type_label == "E7":
        om = omega_elements(rs)[1]
        tau = rs.coweight(7)
    else:
        om = identity(rs)
        j = {"C": d, "A": d, "B": 1, "D": d - 1}[type_label]
        tau = rs.coweight(j)
    phi = from_word(rs, beta, om)
    datum = GalleryDatum(rs, phi, beta, om, tau, _EPSILON[type_label])
    _validate(datum)
    return datum


def _validate(datum: GalleryDatum) -> None:
    if length(datum.phi) != datum.r:
        raise GalleryError("word is not reduced")
    if length(datum.omega) != 0:
        raise GalleryError("omega part has positive length")
    m, lam = translation_power(datum.phi)
    if length(translation(datum.root_system, lam)) != m * datum.r:
        raise GalleryError("phi is not straight")


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Crossing:
    step: int
    root_index: int          # index into positive_roots of the hyperplane's root
    sign: int                # +1 if <alpha, .> increases along the step
    level: int               # k with the wall H_{alpha,k}

    @property
    def positive(self) -> bool:
        return self.sign > 0


@dataclass(frozen=True)
class CrossingProfile:
    root_system: RootSystem
    crossings: tuple[Crossing, ...]
    e_table: tuple[tuple[int, ...], ...]   # e_table[i][k] = #{j < i : alpha^(j) = root k}
    m_table: dict[int, int]                # crossings per translation period
    period_steps: int

    @property
    def alpha_seq(self) -> list[int]:
        return [c.root_index for c in self.crossings]

    def alpha(self, j: int) -> Vector:
        c = self.crossings[j]
        return scale(c.sign, self.root_system.positive_roots[c.root_index])

    def e(self, i: int, root_index: int) -> int:
        return self.e_table[i][root_index]

    def to_json(self) -> dict:
        return {"alpha_seq": self.alpha_seq,
                "signs": [c.sign for c in self.crossings],
                "m_table": {str(k): v for k, v in sorted(self.m_table.items())}}


def gallery_element(datum: GalleryDatum, j: int) -> AffineWeylElement:
    """g_j with C^(j) = g_j C."""
    a, b = divmod(j, datum.r)
    return (datum.phi ** a) * from_word(datum.root_system, datum.beta[:b])


def _facet_midpoint(rs: RootSystem, i: int) -> Vector:
    verts = base_alcove(rs).vertices
    rest = [v for k, v in enumerate(verts) if k != i]
    out = rest[0]
    for v in rest[1:]:
        out = tuple(x + y for x, y in zip(out, v))
    return scale(Fraction(1, len(rest)), out)


def _crossing(rs: RootSystem, g: AffineWeylElement, node: int, step: int) -> Crossing:
    c = base_alcove(rs).base_point
    g2 = g * simple_affine_reflection(rs, node)
    c1, c2 = g.act(c), g2.act(c)
    hits = []
    for k, a in enumerate(rs.positive_roots):
        f1, f2 = math.floor(dot(a, c1)), math.floor(dot(a, c2))
        if f1 != f2:
            hits.append((k, f1, f2))
    if len(hits) != 1 or abs(hits[0][1] - hits[0][2]) != 1:
        raise GalleryError(f"step {step} is not a single wall crossing")
    k, f1, f2 = hits[0]
    level = max(f1, f2)
    mid = g.act(_facet_midpoint(rs, node))
    if dot(rs.positive_roots[k], mid) != level:
        raise GalleryError(f"shared face at step {step} is not on the crossed wall")
    return Crossing(step, k, 1 if f2 > f1 else -1, level)


def crossing_profile(datum: GalleryDatum, steps: int) -> CrossingProfile:
    if steps < 1:
        raise GalleryError("need at least one step")
    rs = datum.root_system
    crossings = []
    phi_pow = identity(rs)
    for j in range(steps):
        a, b = divmod(j, datum.r)
        if b == 0:
            phi_pow = datum.phi ** a
        g = phi_pow * from_word(rs, datum.beta[:b])
        crossings.append(_crossing(rs, g, datum.beta[b], j))
    n = len(rs.positive_roots)
    rows = [tuple([0] * n)]
    for cr in crossings:
        row = list(rows[-1])
        row[cr.root_index] += 1
        rows.append(tuple(row))
    m, _ = translation_power(datum.phi)
    period = m * datum.r
    m_table: dict[int, int] = {}
    if steps >= period:
        for cr in crossings[:period]:
            m_table[cr.root_index] = m_table.get(cr.root_index, 0) + 1
    return CrossingProfile(rs, tuple(crossings), tuple(rows), m_table, period)


@dataclass
class ConceptReport:
    positivity: bool
    tau_pairing: bool
    tau_commutes: bool
    minimal: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.positivity and self.tau_pairing and self.tau_commutes and self.minimal


def check_concept(datum: GalleryDatum, periods: int = 1) -> ConceptReport:
    """(i) crossed roots positive, (ii) <alpha^(j), tau> = 1, (iii) t_tau phi = phi t_tau,
    plus minimality l(g_j) = j, over ``periods`` translation periods."""
    rs = datum.root_system
    m, _ = translation_power(datum.phi)
    steps = periods * m * datum.r
    prof = crossing_profile(datum, steps)
    fails = []
    pos = all(c.positive for c in prof.crossings)
    if not pos:
        fails.append("negative crossed root at steps "
                     f"{[c.step for c in prof.crossings if not c.positive][:5]}")
    pair_ok = all(dot(prof.alpha(j), datum.tau.vector) == 1 for j in range(steps))
    if not pair_ok:
        fails.append("some <alpha^(j), tau> != 1")
    t = translation(rs, datum.tau)
    comm = t * datum.phi == datum.phi * t
    if not comm:
        fails.append("t_tau does not commute with phi")
    minimal = all(length(gallery_element(datum, j)) == j for j in range(steps + 1))
    if not minimal:
        fails.append("gallery is not minimal")
    return ConceptReport(pos, pair_ok, comm, minimal, fails)


def reflection_factorization(datum: GalleryDatum) -> list[AffineWeylElement]:
    """y_i = s_{beta(1)} ... s_{beta(i)} s_{beta(i+1)} s_{beta(i)} ... s_{beta(1)}."""
    rs = datum.root_system
    out = []
    for i in range(datum.r):
        g = from_word(rs, datum.beta[:i])
        out.append(g * simple_affine_reflection(rs, datum.beta[i]) * g.inverse())
    return out


def wall_set(rs: RootSystem, lam) -> list[int]:
    """Indices of alpha in Phi+ with <alpha, lam> != 0."""
    v = lam.vector if isinstance(lam, Coweight) else lam
    return [k for k, a in enumerate(rs.positive_roots) if dot(a, v) != 0]
