"""Exact root data for the types A_d, B_d, C_d, D_d, E6 and E7.

Classical types live in R^d with the standard basis e_1..e_d, except type A_d
which lives in the hyperplane sum(v) = 0 of R^{d+1}.  E6 and E7 use the
Bourbaki coordinates in R^8.  Everything is a tuple of ``Fraction``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

import sympy

Vector = tuple[Fraction, ...]

VALID_RANGES = {"A": 1, "B": 3, "C": 2, "D": 4}
EXCEPTIONAL_RANKS = {"E6": 6, "E7": 7}


class RootSystemError(ValueError):
    """Unsupported type/rank combination or malformed input."""


def vec(*xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def unit(n: int, i: int, scale=1) -> Vector:
    """scale * e_i in R^n (1-based index)."""
    return tuple(Fraction(scale) if k == i - 1 else Fraction(0) for k in range(n))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence[Fraction]) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise RootSystemError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def coroot_of(alpha: Sequence[Fraction]) -> Vector:
    return scale(Fraction(2) / dot(alpha, alpha), alpha)


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: Union[str, int]) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class Coweight:
    """A vector in the coweight lattice of the adjoint torus."""

    vector: Vector
    lattice_tag: str = "adjoint"
    name: str = ""

    def __iter__(self):
        return iter(self.vector)

    def __len__(self):
        return len(self.vector)


def _as_vector(v) -> Vector:
    if isinstance(v, Coweight):
        return v.vector
    return tuple(Fraction(a) for a in v)


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Vector, ...]          # alpha_1 .. alpha_d
    alpha0: Vector                            # minus the highest root
    positive_roots: tuple[Vector, ...]
    coroots: tuple[Vector, ...]               # index 0 .. d
    fundamental_coweights: tuple[Vector, ...]  # omega_1 .. omega_d
    highest_root_coeffs: tuple[int, ...] = field(default=())  # theta = sum c_i alpha_i

    # -- indexing helpers --------------------------------------------------
    def root(self, i: int) -> Vector:
        """Affine simple root index: 0 -> alpha0, i >= 1 -> alpha_i."""
        return self.alpha0 if i == 0 else self.simple_roots[i - 1]

    def coroot(self, i: int) -> Vector:
        return self.coroots[i]

    def coweight(self, j: int) -> Coweight:
        return Coweight(self.fundamental_coweights[j - 1], name=f"omega{j}")

    @property
    def nodes(self) -> range:
        return range(self.rank + 1)

    def cartan_matrix(self) -> list[list[Fraction]]:
        """Entries <alpha_i, alpha_j^vee> for 1 <= i, j <= d."""
        d = self.rank
        return [[dot(self.root(i), self.coroot(j)) for j in range(1, d + 1)]
                for i in range(1, d + 1)]

    def simple_coefficients(self, alpha: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Coordinates of alpha in the basis of simple roots."""
        return tuple(dot(alpha, w) for w in self.fundamental_coweights)

    def index_of_root(self, alpha: Sequence[Fraction]) -> int:
        return self.positive_roots.index(tuple(alpha))

    def zero(self) -> Vector:
        return tuple(Fraction(0) for _ in range(self.ambient_dim))

    def to_json(self) -> dict:
        enc = lambda v: [frac_str(a) for a in v]
        return {
            "type": self.type_label,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "simple_roots": [enc(a) for a in self.simple_roots],
            "alpha0": enc(self.alpha0),
            "positive_roots": [enc(a) for a in self.positive_roots],
            "coroots": [enc(a) for a in self.coroots],
            "fundamental_coweights": [enc(a) for a in self.fundamental_coweights],
        }


def pairing(root, coweight) -> Fraction:
    """Exact inner product <root, coweight>."""
    return dot(_as_vector(root), _as_vector(coweight))


# ---------------------------------------------------------------------------
# explicit data per type

def _simple_roots(type_label: str, d: int) -> tuple[int, list[Vector], Vector]:
    e = lambda n, i, s=1: unit(n, i, s)
    if type_label == "A":
        n = d + 1
        simple = [sub(e(n, i), e(n, i + 1)) for i in range(1, d + 1)]
        a0 = sub(e(n, n), e(n, 1))
        return n, simple, a0
    n = 8 if type_label in EXCEPTIONAL_RANKS else d
    if type_label in ("B", "C", "D"):
        simple = [sub(e(n, i), e(n, i + 1)) for i in range(1, d)]
        if type_label == "B":
            simple.append(e(n, d))
            a0 = scale(-1, add(e(n, 1), e(n, 2)))
        elif type_label == "C":
            simple.append(e(n, d, 2))
            a0 = e(n, 1, -2)
        else:
            simple.append(add(e(n, d - 1), e(n, d)))
            a0 = scale(-1, add(e(n, 1), e(n, 2)))
        return n, simple, a0
    half = Fraction(1, 2)
    a1 = scale(half, vec(1, -1, -1, -1, -1, -1, -1, 1))
    simple = [a1, add(e(8, 2), e(8, 1)), sub(e(8, 2), e(8, 1)), sub(e(8, 3), e(8, 2)),
              sub(e(8, 4), e(8, 3)), sub(e(8, 5), e(8, 4))]
    if type_label == "E6":
        a0 = scale(half, vec(-1, -1, -1, -1, -1, 1, 1, -1))
    else:
        simple.append(sub(e(8, 6), e(8, 5)))
        a0 = sub(e(8, 7), e(8, 8))
    return 8, simple, a0


def explicit_positive_roots(type_label: str, d: int) -> list[Vector]:
    """Positive roots written out in closed form (independent of closure)."""
    n = d + 1 if type_label == "A" else (8 if type_label in EXCEPTIONAL_RANKS else d)
    e = lambda i, s=1: unit(n, i, s)
    out: list[Vector] = []
    if type_label == "A":
        out = [sub(e(i), e(j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    elif type_label in ("B", "C", "D"):
        for i in range(1, d + 1):
            for j in range(i + 1, d + 1):
                out += [sub(e(i), e(j)), add(e(i), e(j))]
        if type_label == "B":
            out += [e(i) for i in range(1, d + 1)]
        elif type_label == "C":
            out += [e(i, 2) for i in range(1, d + 1)]
    elif type_label == "E6":
        for j in range(1, 6):
            for i in range(1, j):
                out += [sub(e(j), e(i)), add(e(j), e(i))]
        for signs in itertools.product((1, -1), repeat=5):
            if signs.count(-1) % 2 == 0:
                out.append(scale(Fraction(1, 2), vec(*signs, -1, -1, 1)))
    elif type_label == "E7":
        for j in range(1, 7):
            for i in range(1, j):
                out += [sub(e(j), e(i)), add(e(j), e(i))]
        out.append(sub(e(8), e(7)))
        for signs in itertools.product((1, -1), repeat=6):
            if signs.count(-1) % 2 == 1:
                out.append(scale(Fraction(1, 2), vec(*signs, -1, 1)))
    return out


def _reflect(v: Vector, alpha: Vector) -> Vector:
    return sub(v, scale(dot(v, coroot_of(alpha)), alpha))


def roots_by_closure(simple: Sequence[Vector]) -> set[Vector]:
    """All roots generated from the simple roots by simple reflections."""
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple:
                w = _reflect(v, a)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def _fundamental_coweights(simple: Sequence[Vector]) -> list[Vector]:
    """omega_j in span(coroots) with <alpha_i, omega_j> = delta_ij."""
    cor = [coroot_of(a) for a in simple]
    m = sympy.Matrix([[sympy.Rational(dot(a, c).numerator, dot(a, c).denominator)
                       for c in cor] for a in simple])
    inv = m.T.inv()  # row j: coefficients of omega_j on the coroots
    out = []
    for j in range(len(simple)):
        w = tuple(Fraction(0) for _ in cor[0])
        for k, c in enumerate(cor):
            q = inv[j, k]
            w = add(w, scale(Fraction(int(q.p), int(q.q)), c))
        out.append(w)
    return out


def _check_range(type_label: str, d: int) -> None:
    if type_label in EXCEPTIONAL_RANKS:
        if d != EXCEPTIONAL_RANKS[type_label]:
            raise RootSystemError(f"{type_label} has fixed rank {EXCEPTIONAL_RANKS[type_label]}")
        return
    if type_label not in VALID_RANGES:
        raise RootSystemError(f"unsupported type {type_label!r}")
    if not isinstance(d, int) or d < VALID_RANGES[type_label]:
        raise RootSystemError(f"type {type_label} needs d >= {VALID_RANGES[type_label]}, got {d}")


_CACHE: dict[tuple[str, int], RootSystem] = {}


def build_root_system(type_label: str, d: int | None = None) -> RootSystem:
    if d is None:
        d = EXCEPTIONAL_RANKS.get(type_label, -1)
    _check_range(type_label, d)
    key = (type_label, d)
    if key in _CACHE:
        return _CACHE[key]
    n, simple, a0 = _simple_roots(type_label, d)
    omegas = _fundamental_coweights(simple)
    closure = roots_by_closure(simple)
    positive = sorted(
        (r for r in closure if all(dot(r, w) >= 0 for w in omegas)),
        key=lambda r: (sum(dot(r, w) for w in omegas), tuple(-x for x in r)),
    )
    theta = scale(-1, a0)
    coeffs = tuple(int(dot(theta, w)) for w in omegas)
    rs = RootSystem(
        type_label=type_label,
        rank=d,
        ambient_dim=n,
        simple_roots=tuple(simple),
        alpha0=a0,
        positive_roots=tuple(positive),
        coroots=tuple(coroot_of(a) for a in [a0] + list(simple)),
        fundamental_coweights=tuple(omegas),
        highest_root_coeffs=coeffs,
    )
    _CACHE[key] = rs
    return rs


def minuscule_coweights(rs: RootSystem) -> list[Coweight]:
    """Fundamental coweights tau with <alpha, tau> in {0, 1} for all alpha > 0."""
    out = []
    for j in range(1, rs.rank + 1):
        w = rs.fundamental_coweights[j - 1]
        if all(dot(a, w) in (0, 1) for a in rs.positive_roots):
            out.append(Coweight(w, name=f"omega{j}"))
    return out


def expected_positive_count(type_label: str, d: int) -> int:
    return {"A": d * (d + 1) // 2, "B": d * d, "C": d * d, "D": d * (d - 1),
            "E6": 36, "E7": 63}[type_label]


def coroot_relation(rs: RootSystem, coeffs: Iterable[int]) -> Vector:
    """sum_i c_i alpha_i^vee over the affine nodes 0..d."""
    total = rs.zero()
    for c, v in zip(coeffs, rs.coroots):
        total = add(total, scale(c, v))
    return total
