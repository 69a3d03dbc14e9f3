"""The extended affine Weyl group as exact affine maps v -> M v + lam.

The base alcove is C = {v : <alpha_i, v> < 0 for i >= 1, <alpha_0, v> < 1},
i.e. the negative of the Bourbaki fundamental alcove.  Lengths are counted as
affine root hyperplanes separating a generic base point c of C from w(c).
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .rootdata import (Coweight, RootSystem, Vector, add, dot, frac_str,
                       minuscule_coweights, scale, sub)

Matrix = tuple[tuple[Fraction, ...], ...]


class AffineWeylError(ValueError):
    pass


def _identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col) if x and y), Fraction(0))
                       for col in bt) for row in a)


def _matvec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a)


def _reflection_matrix(alpha: Vector, coroot: Vector) -> Matrix:
    n = len(alpha)
    return tuple(tuple(Fraction(int(i == j)) - coroot[i] * alpha[j] for j in range(n))
                 for i in range(n))


def _inverse(m: Matrix) -> Matrix:
    # linear parts are orthogonal (they preserve the standard form)
    return tuple(zip(*m))


@dataclass(frozen=True)
class AffineWeylElement:
    rs: RootSystem
    linear_part: Matrix
    translation_part: Vector

    def __post_init__(self):
        object.__setattr__(self, "linear_part",
                           tuple(tuple(Fraction(x) for x in row) for row in self.linear_part))
        object.__setattr__(self, "translation_part",
                           tuple(Fraction(x) for x in self.translation_part))

    # equality ignores the cached attributes
    def __eq__(self, other):
        if not isinstance(other, AffineWeylElement):
            return NotImplemented
        return (self.rs.type_label, self.rs.rank) == (other.rs.type_label, other.rs.rank) and \
            self.linear_part == other.linear_part and self.translation_part == other.translation_part

    def __hash__(self):
        return hash((self.linear_part, self.translation_part))

    def _check(self, other: "AffineWeylElement"):
        if (self.rs.type_label, self.rs.rank) != (other.rs.type_label, other.rs.rank):
            raise AffineWeylError("elements of different root systems")

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        self._check(other)
        m = _matmul(self.linear_part, other.linear_part)
        lam = add(_matvec(self.linear_part, other.translation_part), self.translation_part)
        return AffineWeylElement(self.rs, m, lam)

    def inverse(self) -> "AffineWeylElement":
        mi = _inverse(self.linear_part)
        return AffineWeylElement(self.rs, mi, scale(-1, _matvec(mi, self.translation_part)))

    def __pow__(self, k: int) -> "AffineWeylElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = identity(self.rs)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def act(self, v: Sequence[Fraction]) -> Vector:
        return add(_matvec(self.linear_part, v), self.translation_part)

    @property
    def is_translation(self) -> bool:
        return self.linear_part == _identity(self.rs.ambient_dim)

    @cached_property
    def length(self) -> int:
        return length(self)

    def to_json(self) -> dict:
        return {"matrix": [[frac_str(x) for x in row] for row in self.linear_part],
                "translation": [frac_str(x) for x in self.translation_part]}


def act_on_point(w: AffineWeylElement, v: Sequence[Fraction]) -> Vector:
    return w.act(v)


def multiply(x: AffineWeylElement, y: AffineWeylElement) -> AffineWeylElement:
    return x * y


def invert(x: AffineWeylElement) -> AffineWeylElement:
    return x.inverse()


def identity(rs: RootSystem) -> AffineWeylElement:
    return AffineWeylElement(rs, _identity(rs.ambient_dim), rs.zero())


def translation(rs: RootSystem, lam) -> AffineWeylElement:
    if isinstance(lam, Coweight):
        lam = lam.vector
    return AffineWeylElement(rs, _identity(rs.ambient_dim), tuple(Fraction(x) for x in lam))


def simple_affine_reflection(rs: RootSystem, i: int) -> AffineWeylElement:
    """s_i for i >= 1; s_0 = t_{alpha0^vee} s_{alpha0}: v -> v + (1 - <alpha0, v>) alpha0^vee."""
    if not 0 <= i <= rs.rank:
        raise AffineWeylError(f"node {i} out of range 0..{rs.rank}")
    m = _reflection_matrix(rs.root(i), rs.coroot(i))
    lam = rs.coroot(0) if i == 0 else rs.zero()
    return AffineWeylElement(rs, m, lam)


def from_word(rs: RootSystem, word: Iterable[int],
              omega: Optional[AffineWeylElement] = None) -> AffineWeylElement:
    """s_{w_1} ... s_{w_k} (times omega on the right)."""
    out = identity(rs)
    for i in word:
        out = out * simple_affine_reflection(rs, i)
    if omega is not None:
        out = out * omega
    return out


# ---------------------------------------------------------------------------
# base alcove

@dataclass(frozen=True)
class BaseAlcove:
    rs: RootSystem
    vertices: tuple[Vector, ...]
    base_point: Vector

    def contains(self, v: Sequence[Fraction]) -> bool:
        rs = self.rs
        return all(dot(rs.root(i), v) < 0 for i in range(1, rs.rank + 1)) and \
            dot(rs.alpha0, v) < 1

    def inequalities(self) -> list[tuple[Vector, Fraction]]:
        """Pairs (a, b) meaning <a, v> < b."""
        rs = self.rs
        return [(rs.root(i), Fraction(0)) for i in range(1, rs.rank + 1)] + \
            [(rs.alpha0, Fraction(1))]


def _is_generic(rs: RootSystem, c: Vector) -> bool:
    return all(dot(a, c).denominator != 1 for a in rs.positive_roots)


_ALCOVES: dict[tuple[str, int], BaseAlcove] = {}


def base_alcove(rs: RootSystem) -> BaseAlcove:
    key = (rs.type_label, rs.rank)
    if key in _ALCOVES:
        return _ALCOVES[key]
    verts = [rs.zero()] + [scale(Fraction(-1, c), w)
                           for c, w in zip(rs.highest_root_coeffs, rs.fundamental_coweights)]
    c = scale(Fraction(1, len(verts)), _vsum(verts))
    while not _is_generic(rs, c):  # not expected for the supported types
        c = scale(Fraction(1, 2), add(c, verts[0]))
    alc = BaseAlcove(rs, tuple(verts), c)
    assert alc.contains(c)
    _ALCOVES[key] = alc
    return alc


def _vsum(vs: Sequence[Vector]) -> Vector:
    out = vs[0]
    for v in vs[1:]:
        out = add(out, v)
    return out


# ---------------------------------------------------------------------------
# length and words

def _floor_profile(rs: RootSystem, v: Vector) -> list[int]:
    return [math.floor(dot(a, v)) for a in rs.positive_roots]


def length_between(rs: RootSystem, c1: Vector, c2: Vector) -> int:
    """Number of hyperplanes H_{alpha,k} separating two generic points."""
    return sum(abs(x - y) for x, y in zip(_floor_profile(rs, c1), _floor_profile(rs, c2)))


def length(w: AffineWeylElement) -> int:
    c = base_alcove(w.rs).base_point
    return length_between(w.rs, c, w.act(c))


def left_descents(w: AffineWeylElement) -> list[int]:
    rs = w.rs
    wc = w.act(base_alcove(rs).base_point)
    out = [i for i in range(1, rs.rank + 1) if dot(rs.root(i), wc) > 0]
    if dot(rs.alpha0, wc) > 1:
        out.insert(0, 0)
    return sorted(out)


def reduced_word(w: AffineWeylElement) -> tuple[list[int], AffineWeylElement]:
    """Greedy lowest-index left descents; returns (word, omega) with w = s_word * omega."""
    rs = w.rs
    word: list[int] = []
    x = w
    gens = [simple_affine_reflection(rs, i) for i in rs.nodes]
    while True:
        ds = left_descents(x)
        if not ds:
            break
        i = ds[0]
        word.append(i)
        x = gens[i] * x
    return word, x


_OMEGA: dict[tuple[str, int], list[AffineWeylElement]] = {}


def omega_elements(rs: RootSystem) -> list[AffineWeylElement]:
    """Length-zero elements, one per class of P^vee / Q^vee."""
    key = (rs.type_label, rs.rank)
    if key not in _OMEGA:
        out = [identity(rs)]
        for tau in minuscule_coweights(rs):
            _, om = reduced_word(translation(rs, tau))
            if om not in out:
                out.append(om)
        _OMEGA[key] = out
    return list(_OMEGA[key])


def node_permutation(u: AffineWeylElement) -> dict[int, int]:
    """For an Omega element u: the map i -> j with u s_i u^{-1} = s_j."""
    rs = u.rs
    gens = {i: simple_affine_reflection(rs, i) for i in rs.nodes}
    ui = u.inverse()
    perm = {}
    for i, s in gens.items():
        conj = u * s * ui
        match = [j for j, t in gens.items() if t == conj]
        if len(match) != 1:
            raise AffineWeylError("element does not normalize the simple reflections")
        perm[i] = match[0]
    return perm


def omega_by_relation(rs: RootSystem, relation: dict[int, int]) -> AffineWeylElement:
    """The Omega element whose node permutation extends ``relation``."""
    hits = [u for u in omega_elements(rs)
            if all(node_permutation(u)[i] == j for i, j in relation.items())]
    if len(hits) != 1:
        raise AffineWeylError(f"relation {relation} does not pin down one element")
    return hits[0]


def translation_power(w: AffineWeylElement, bound: int = 100000) -> tuple[int, Vector]:
    """Minimal m >= 1 with w^m a translation t_lam."""
    x = w
    for m in range(1, bound + 1):
        if x.is_translation:
            return m, x.translation_part
        x = x * w
    raise AffineWeylError("no translation power found")


def is_straight(w: AffineWeylElement) -> bool:
    """l(w^n) = n l(w) for all n; decided on the translation power w^m = t_lam.

    l(w^n) <= n l(w) always; if l(w^m) = m l(w) then for every n the
    subadditivity l(w^{km}) <= l(w^n) + l(w^{km-n}) forces equality.
    """
    m, lam = translation_power(w)
    return length(translation(w.rs, lam)) == m * length(w)


def coxeter_order(rs: RootSystem, i: int, j: int) -> int:
    """Order of s_i s_j computed directly (at most 12)."""
    x = simple_affine_reflection(rs, i) * simple_affine_reflection(rs, j)
    e = identity(rs)
    y = x
    for k in range(1, 13):
        if y == e:
            return k
        y = y * x
    raise AffineWeylError("unexpected infinite order")


def random_element(rs: RootSystem, n_letters: int, rng: random.Random,
                   with_omega: bool = True) -> AffineWeylElement:
    word = [rng.randrange(rs.rank + 1) for _ in range(n_letters)]
    om = rng.choice(omega_elements(rs)) if with_omega else None
    return from_word(rs, word, om)
