"""The combinatorial quotient sets S_C(r), S_B(r), S_D(r) (and the rotation quotient
S_A(r)), the symmetry predicates for decompositions into rank-one modules, standard
supersingular data and the maps between them.

Digits of n are k_0..k_{r-1} with n = sum k_i p^i.  Exponents s live in [0, p-2].
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence, Union

from .finite_field import FiniteField
from .gallery import standard_beta
from .matrix_models import (beta_tilde, build_group_model, central_cocharacter,
                            conjugation_action, coroot_permutation, gamma_delta,
                            torus_params, torus_rank)
from .phigamma import (RankOneClass, RankOneModule, classify_rank_one,
                       construct_rank_one)

FAMILIES = ("C", "B", "D", "A")
ENUMERATION_GUARD = 10 ** 6


class ClassifierError(ValueError):
    pass


# ---------------------------------------------------------------------------
# class points

def digits_of(n: int, p: int, r: int) -> tuple[int, ...]:
    return tuple((n // p ** i) % p for i in range(r))


def from_digits(k: Sequence[int], p: int) -> int:
    return sum(c * p ** i for i, c in enumerate(k))


@dataclass(frozen=True, order=True)
class ClassPoint:
    family: str
    r: int
    p: int
    digits: tuple[int, ...]
    s: int
    xi: Optional[int] = None   # absent for family B
    q: Optional[int] = None

    @property
    def n(self) -> int:
        return from_digits(self.digits, self.p)

    def key(self) -> tuple:
        return (self.n, self.s, -1 if self.xi is None else self.xi)

    def replace(self, digits: Sequence[int], s: int) -> "ClassPoint":
        return ClassPoint(self.family, self.r, self.p, tuple(digits), s % (self.p - 1), self.xi, self.q)

    def to_row(self, orbit_size: int) -> dict:
        return {"family": self.family, "r": self.r, "p": self.p, "n": self.n,
                "digits": "".join(map(str, self.digits)), "s": self.s,
                "xi": "" if self.xi is None else self.xi, "orbit_size": orbit_size}


def make_point(family: str, r: int, p: int, n: int, s: int, xi: Optional[int] = None,
               q: Optional[int] = None) -> ClassPoint:
    pt = ClassPoint(family, r, p, digits_of(n, p, r), s % (p - 1),
                    None if family == "B" else xi, None if family == "B" else (q or p))
    validate_point(pt)
    return pt


def validate_point(pt: ClassPoint) -> None:
    f, r, p, k = pt.family, pt.r, pt.p, pt.digits
    if f not in FAMILIES:
        raise ClassifierError(f"unknown family {f}")
    if len(k) != r or any(not 0 <= c <= p - 1 for c in k):
        raise ClassifierError("digit vector has the wrong shape")
    n = pt.n
    if not 1 <= n <= p ** r - 2:
        raise ClassifierError(f"n = {n} outside [1, p^r - 2]")
    if n % (p - 1):
        raise ClassifierError(f"n = {n} not divisible by p - 1")
    if not 0 <= pt.s <= p - 2:
        raise ClassifierError("s outside [0, p - 2]")
    if f == "B":
        if r % 2 == 0:
            raise ClassifierError("family B needs r odd")
        if any(k[i] != k[r - 1 - i] for i in range(1, (r - 1) // 2 + 1)):
            raise ClassifierError("family B needs k_i = k_{r-1-i} for 1 <= i <= (r-1)/2")
        if pt.xi is not None:
            raise ClassifierError("family B carries no xi")
    else:
        if pt.xi is None or not 0 < pt.xi < (pt.q or p):
            raise ClassifierError("xi must be a unit of F_q")
    if f == "D":
        if r % 2:
            raise ClassifierError("family D needs r even")
        h = r // 2
        if any(k[i] != k[i + h] for i in range(1, h - 1)):
            raise ClassifierError("family D needs k_i = k_{i+r/2} for 1 <= i <= r/2 - 2")


# ---------------------------------------------------------------------------
# involutions

def _family_check(pt: ClassPoint, allowed: Sequence[str], name: str) -> None:
    if pt.family not in allowed:
        raise ClassifierError(f"{name} is not defined for family {pt.family}")


def iota0(pt: ClassPoint) -> ClassPoint:
    """The digit reversal for C and B; the first D-permutation."""
    _family_check(pt, ("C", "B", "D"), "iota0")
    k, r = pt.digits, pt.r
    if pt.family == "C":
        return pt.replace(k[::-1], pt.s + sum(i * c for i, c in enumerate(k)))
    if pt.family == "B":
        return pt.replace(k[::-1], pt.s + k[0] - k[r - 1])
    h = r // 2
    new = list(k)
    new[0], new[h] = k[h], k[0]
    new[h - 1], new[r - 1] = k[r - 1], k[h - 1]
    return pt.replace(new, pt.s + sum(k[:h]))


def iota1(pt: ClassPoint) -> ClassPoint:
    """The second D-permutation; s-component reduced mod p - 1."""
    _family_check(pt, ("D",), "iota1")
    k, r = pt.digits, pt.r
    h = r // 2
    tail = sum((i - 1) * k[h - i] for i in range(2, h))
    if h % 2:
        return pt.replace(k[::-1], pt.s + (r - 2) // 4 * (k[h] + k[0]) + tail)
    new = [k[r - i - 1] for i in range(r)]
    new[0] = k[h - 1]
    new[h - 1] = k[h]
    new[h] = k[r - 1]
    new[r - 1] = k[0]
    return pt.replace(new, pt.s + (r // 4 - 1) * k[h] + (r // 4) * k[0] + tail)


def rotate(pt: ClassPoint, j: int = 1) -> ClassPoint:
    """A-family rotation: k_i -> k_{i-j}, s -> s - sum_{i=1}^{j} k_{-i}."""
    _family_check(pt, ("A",), "rotate")
    k, r = pt.digits, pt.r
    return pt.replace([k[(i - j) % r] for i in range(r)],
                      pt.s - sum(k[(-i) % r] for i in range(1, j + 1)))


def group_elements(family: str, r: int) -> dict[str, Callable[[ClassPoint], ClassPoint]]:
    ident = lambda x: x
    if family in ("C", "B"):
        return {"id": ident, "iota0": iota0}
    if family == "D":
        return {"id": ident, "iota0": iota0, "iota1": iota1,
                "iota0*iota1": lambda x: iota0(iota1(x))}
    return {("id" if j == 0 else f"rot^{j}"): (lambda x, j=j: rotate(x, j)) for j in range(r)}


def _generators(family: str) -> list[Callable[[ClassPoint], ClassPoint]]:
    return {"C": [iota0], "B": [iota0], "D": [iota0, iota1], "A": [rotate]}[family]


def orbit(pt: ClassPoint) -> set[ClassPoint]:
    seen = {pt}
    todo = [pt]
    while todo:
        x = todo.pop()
        for g in _generators(pt.family):
            y = g(x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def canonical_rep(pt: ClassPoint) -> ClassPoint:
    return min(orbit(pt), key=ClassPoint.key)


def family_r_ok(family: str, r: int) -> None:
    if family not in FAMILIES:
        raise ClassifierError(f"unknown family {family}")
    if r < 1:
        raise ClassifierError("r must be positive")
    if family == "B" and r % 2 == 0:
        raise ClassifierError("family B needs r odd")
    if family == "D" and (r % 2 or r < 4):
        raise ClassifierError("family D needs r even and >= 4")


def iter_points(family: str, r: int, p: int, q: Optional[int] = None) -> Iterable[ClassPoint]:
    """All points of the unreduced set (tilde-S)."""
    family_r_ok(family, r)
    if p ** r > ENUMERATION_GUARD:
        raise ClassifierError(f"p^r = {p ** r} exceeds the enumeration guard")
    q = q or p
    xis = [None] if family == "B" else list(range(1, q))
    for n in range(p - 1, p ** r - 1, p - 1):
        k = digits_of(n, p, r)
        if family == "B" and any(k[i] != k[r - 1 - i] for i in range(1, (r - 1) // 2 + 1)):
            continue
        if family == "D" and any(k[i] != k[i + r // 2] for i in range(1, r // 2 - 1)):
            continue
        for s in range(p - 1):
            for xi in xis:
                yield ClassPoint(family, r, p, k, s, xi, None if family == "B" else q)


def enumerate_classes(family: str, r: int, p: int, q: Optional[int] = None) -> list[ClassPoint]:
    """One canonical representative per orbit, sorted by (n, s, xi)."""
    reps = {canonical_rep(pt) for pt in iter_points(family, r, p, q)}
    return sorted(reps, key=ClassPoint.key)


def orbit_sizes(family: str, r: int, p: int, q: Optional[int] = None) -> Counter:
    return Counter(len(orbit(pt)) for pt in enumerate_classes(family, r, p, q))


# ---------------------------------------------------------------------------
# symmetry predicates

Summand = Union[RankOneClass, RankOneModule, tuple]


def _as_class(x: Summand, p: Optional[int] = None, r: Optional[int] = None) -> RankOneClass:
    if isinstance(x, RankOneClass):
        return x
    if isinstance(x, RankOneModule):
        return classify_rank_one(x)
    n, s, xi = x
    if p is None or r is None:
        raise ClassifierError("plain triples need p and r")
    return RankOneClass(n, s, xi, r, p, p)


def _excluded(k: Sequence[int], p: int) -> bool:
    return all(c == 0 for c in k) or all(c == p - 1 for c in k)


def _inv_factorial_product(k: Sequence[int], F: FiniteField) -> int:
    return F.inv(math.prod(math.factorial(c) for c in k) % F.p)


def _c_sym(d1: RankOneClass, d2: RankOneClass) -> bool:
    p, r = d1.p, d1.r
    k1, k2 = d1.digits(), d2.digits()
    return (all(k1[i] == k2[r - 1 - i] for i in range(r))
            and d1.xi == d2.xi
            and (d2.s - d1.s - sum(i * c for i, c in enumerate(k1))) % (p - 1) == 0
            and not _excluded(k1, p))


def _b_sym(d1: RankOneClass, d2: RankOneClass) -> bool:
    p, r = d1.p, d1.r
    if r % 2 == 0:
        return False
    k1, k2 = d1.digits(), d2.digits()
    mid = (r - 1) // 2
    F = FiniteField(p, 1) if d1.q == p else None
    cond1 = all(k1[i] == k2[r - 1 - i] for i in range(r)) and k1[mid] == k2[mid] and k1[mid] % 2 == 0
    cond2 = True
    for dd, k in ((d1, k1), (d2, k2)):
        if F is None or dd.xi != _inv_factorial_product(k, F):
            cond2 = False
        if any(k[i] != k[r - 1 - i] for i in range(1, mid + 1)):
            cond2 = False
    cond3 = (d2.s - d1.s - (k1[0] - k1[r - 1])) % (p - 1) == 0
    return cond1 and cond2 and cond3 and not _excluded(k1, p)


def _d_sym(d11: RankOneClass, d12: RankOneClass, d21: RankOneClass, d22: RankOneClass) -> bool:
    p, r = d11.p, d11.r
    if r % 2:
        return False
    h = r // 2
    K = {(1, 1): d11.digits(), (1, 2): d12.digits(), (2, 1): d21.digits(), (2, 2): d22.digits()}
    for k in K.values():
        if any(k[i] != k[h + i] for i in range(1, h - 1)):
            return False
    if any(K[1, 1][i] != K[1, 2][i] or K[2, 1][i] != K[2, 2][i] for i in range(1, h - 1)):
        return False
    for j in (1, 2):
        a, b = K[j, 1], K[j, 2]
        if not (a[0] == b[h] and a[h] == b[0] and a[h - 1] == b[r - 1] and a[r - 1] == b[h - 1]):
            return False
    idx = range(r) if h % 2 else list(range(1, h - 1)) + list(range(h + 1, r - 1))
    for i in idx:
        if K[1, 1][i] != K[2, 1][r - i - 1] or K[1, 2][i] != K[2, 2][r - i - 1]:
            return False
    if h % 2 == 0:
        a, b = K[1, 1], K[2, 1]
        if not (a[0] == b[r - 1] and a[h - 1] == b[0] and a[h] == b[h - 1] and a[r - 1] == b[h]):
            return False
    if not d11.xi == d12.xi == d21.xi == d22.xi:
        return False
    m = p - 1
    S = {(1, 1): d11.s, (1, 2): d12.s, (2, 1): d21.s, (2, 2): d22.s}
    for j in (1, 2):
        if (S[j, 2] - S[j, 1] - sum(K[j, 1][:h])) % m:
            return False
    k = K[1, 1]
    tail = sum((i - 1) * k[h - i] for i in range(2, h))
    if h % 2:
        off = (r - 2) // 4 * (k[h] + k[0]) + tail
    else:
        off = (r // 4 - 1) * k[h] + (r // 4) * k[0] + tail
    if (S[2, 1] - S[1, 1] - off) % m:
        return False
    return not _excluded(k, p)


def _a_sym(ds: Sequence[RankOneClass]) -> bool:
    d0 = ds[0]
    p, r = d0.p, d0.r
    k0 = d0.digits()
    for j, dj in enumerate(ds):
        kj = dj.digits()
        if any(kj[i] != k0[(i - j) % r] for i in range(r)):
            return False
        if dj.xi != d0.xi:
            return False
        if (d0.s - dj.s - sum(k0[(-i) % r] for i in range(1, j + 1))) % (p - 1):
            return False
    return not _excluded(k0, p)


_SUMMANDS = {"C": 2, "B": 2, "D": 4}


def is_symmetric(family: str, summands: Sequence[Summand], p: Optional[int] = None,
                 r: Optional[int] = None) -> bool:
    """Whether some ordering of the rank-one summands satisfies the family's conditions."""
    cls = [_as_class(x, p, r) for x in summands]
    if family in _SUMMANDS and len(cls) != _SUMMANDS[family]:
        raise ClassifierError(f"family {family} needs {_SUMMANDS[family]} summands")
    if family == "A" and len(cls) != cls[0].r:
        raise ClassifierError("family A needs r summands")
    if family not in FAMILIES:
        raise ClassifierError(f"unknown family {family}")
    if len({(c.r, c.p) for c in cls}) != 1:
        return False
    test = {"C": lambda o: _c_sym(*o), "B": lambda o: _b_sym(*o),
            "D": lambda o: _d_sym(*o), "A": _a_sym}[family]
    if family == "A":
        # D_0 may be any summand; the others are then forced up to order
        return any(test(list(o)) for o in itertools.permutations(cls))
    return any(test(o) for o in itertools.permutations(cls))


# ---------------------------------------------------------------------------
# standard supersingular data

TYPE_TO_FAMILY = {"C": "C", "B": "B", "D": "D", "A": "A"}


def period(type_label: str, d: int) -> int:
    return {"C": d + 1, "A": d + 1, "B": 2 * d - 1, "D": 2 * d - 2}[type_label]


@dataclass(frozen=True)
class SupersingularDatum:
    """Digits k_0..k_d (k_i = p-1 marks s_i in J), s_e, b (absent for B) and, optionally,
    the character as an exponent vector on the torus coordinates of the matrix model."""

    type_label: str
    d: int
    p: int
    digits: tuple[int, ...]
    s: int
    b: Optional[int] = None
    q: Optional[int] = None
    character: Optional[tuple[int, ...]] = None

    @property
    def r(self) -> int:
        return period(self.type_label, self.d)


def parity_relation(type_label: str, d: int) -> tuple[int, ...]:
    """Coefficients c_i with prod alpha_i^vee(x)^{c_i} = 1."""
    if type_label in ("C", "A"):
        return (1,) * (d + 1)
    if type_label == "B":
        return (1, 1) + (2,) * (d - 2) + (1,)
    if type_label == "D":
        return (1, 1) + (2,) * (d - 3) + (1, 1)
    raise ClassifierError(f"no relation for type {type_label}")


def validate_datum(dat: SupersingularDatum) -> None:
    t, d, p, k = dat.type_label, dat.d, dat.p, dat.digits
    if t not in TYPE_TO_FAMILY:
        raise ClassifierError(f"unsupported type {t}")
    mins = {"C": 2, "B": 3, "D": 4, "A": 1}
    if d < mins[t]:
        raise ClassifierError(f"type {t} needs d >= {mins[t]}")
    if len(k) != d + 1 or any(not 0 <= c <= p - 1 for c in k):
        raise ClassifierError("need digits k_0..k_d in [0, p-1]")
    if _excluded(k, p):
        raise ClassifierError("constant digit vector: not standard supersingular")
    if not 0 <= dat.s <= p - 2:
        raise ClassifierError("s outside [0, p-2]")
    if t == "B":
        if k[d] % 2:
            raise ClassifierError("type B needs k_d even")
        if dat.b is not None:
            raise ClassifierError("type B carries no b")
    else:
        if dat.b is None or not 0 < dat.b < (dat.q or p):
            raise ClassifierError("b must be a unit of F_q")
    if sum(c * e for c, e in zip(parity_relation(t, d), k)) % (p - 1):
        raise ClassifierError("digits violate the coroot relation")
    if dat.character is not None:
        ks, s = character_invariants(t, d, p, dat.character)
        if s != dat.s or any((a - b) % (p - 1) for a, b in zip(ks, k)):
            raise ClassifierError("character does not match digits and s")


def character_invariants(type_label: str, d: int, p: int, a: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """(k_i mod p-1, s_e) of the character with exponent vector a: lambda(alpha_i^vee(x)) = x^{k_i},
    lambda(tau(x)) = x^{-s_e}."""
    m = build_group_model(type_label, d)
    ks = tuple(sum(x * y for x, y in zip(a, torus_params(m, c))) % (p - 1) for c in m.coroots)
    s = (-sum(x * y for x, y in zip(a, torus_params(m, m.tau)))) % (p - 1)
    return ks, s


def sign_value(type_label: str, d: int, p: int, character: Sequence[int]) -> int:
    """lambda(-id) in {1, -1}."""
    m = build_group_model(type_label, d)
    e = sum(x * y for x, y in zip(character, central_cocharacter(m)))
    return 1 if e % 2 == 0 else -1


def derived_character_A(d: int, p: int, digits: Sequence[int], s: int) -> tuple[int, ...]:
    """For GL_{d+1} the pair (k mod p-1, s_e) pins down the character: a_{d+1} = s_e and
    a_i - a_{i+1} = k_i."""
    a = [0] * (d + 1)
    a[d] = s % (p - 1)
    for i in range(d - 1, -1, -1):
        a[i] = (a[i + 1] + digits[i + 1]) % (p - 1)
    return tuple(a)


def _rho(dat: SupersingularDatum, F: FiniteField) -> int:
    k = dat.digits
    t = dat.type_label
    if t in ("C", "A"):
        val = math.prod(math.factorial(c) for c in k)
    else:
        beta = standard_beta(t, dat.d)
        val = math.prod(math.factorial(k[b]) for b in beta)
    val %= F.p
    if t == "A":
        chi = dat.character or derived_character_A(dat.d, dat.p, k, dat.s)
        val = val * sign_value("A", dat.d, dat.p, chi) % F.p
    return val


def _field(dat: SupersingularDatum) -> FiniteField:
    q = dat.q or dat.p
    f = round(math.log(q, dat.p))
    return FiniteField(dat.p, f)


def supersingular_to_classpoint(dat: SupersingularDatum) -> ClassPoint:
    validate_datum(dat)
    t, d, p = dat.type_label, dat.d, dat.p
    beta = standard_beta(t, d)
    k = dat.digits
    digits = tuple(k[b] for b in beta)
    fam = TYPE_TO_FAMILY[t]
    if t == "B":
        return ClassPoint(fam, len(beta), p, digits, dat.s)
    F = _field(dat)
    xi = F.mul(dat.b, F.inv(_rho(dat, F)))
    return ClassPoint(fam, len(beta), p, digits, dat.s, xi, F.q)


# ---------------------------------------------------------------------------
# functor outputs

@dataclass(frozen=True)
class FunctorOutput:
    family: str
    labels: tuple[str, ...]
    triples: tuple[RankOneClass, ...]
    r: int
    p: int
    q: int

    def modules(self, N: Optional[int] = None) -> list[RankOneModule]:
        F = FiniteField(self.p, round(math.log(self.q, self.p)))
        return [construct_rank_one(self.r, F, c.n, c.s, c.xi, N=N) for c in self.triples]


def _type_d_summand_digits(dat: SupersingularDatum) -> dict[str, tuple[int, ...]]:
    d, k = dat.d, dat.digits
    m = build_group_model("D", d)
    beta = m.beta
    bt = beta_tilde(m)
    r = 2 * d - 2
    out = {"e0": tuple(k[beta[i]] for i in range(r)),
           "f0": tuple(k[bt[i]] for i in range(r))}
    if d % 2 == 0:
        # beta(2d-2-i) for i = 0..2d-3
        out["e1"] = tuple(k[beta[r - 1 - i]] for i in range(r))
        out["f1"] = tuple(k[bt[r - 1 - i]] for i in range(r))
    else:
        gam, dele = gamma_delta(m)
        out["e1"] = tuple(k[gam[i]] for i in range(r))
        out["f1"] = tuple(k[dele[i]] for i in range(r))
    return out


def functor_output(dat: SupersingularDatum) -> FunctorOutput:
    """The rank-one summands (n, s, xi) of the module attached to a standard supersingular datum."""
    validate_datum(dat)
    t, d, p = dat.type_label, dat.d, dat.p
    k, s = dat.digits, dat.s
    F = _field(dat)
    m = p - 1
    r = period(t, d)
    mk = lambda digs, ss, xi: RankOneClass(from_digits(digs, p), ss % m, xi, r, p, F.q)
    if t == "B":
        beta = standard_beta(t, d)
        bt = beta_tilde(build_group_model(t, d))
        de = tuple(k[b] for b in beta)
        df = tuple(k[b] for b in bt)
        xi = F.inv(_rho(dat, F))
        return FunctorOutput("B", ("e", "f"), (mk(de, s, xi), mk(df, s + k[1] - k[0], xi)), r, p, F.q)
    xi = F.mul(dat.b, F.inv(_rho(dat, F)))
    if t == "C":
        de = tuple(k[d - i] for i in range(r))
        df = tuple(k[i] for i in range(r))
        sf = s + sum(i * c for i, c in enumerate(k))
        return FunctorOutput("C", ("e", "f"), (mk(de, s, xi), mk(df, sf, xi)), r, p, F.q)
    if t == "D":
        digs = _type_d_summand_digits(dat)
        sf0 = s + sum(k[1:d])
        if d % 2 == 0:
            se1 = s + (d - 2) // 2 * (k[d - 1] + k[d]) + sum((i - 1) * k[i] for i in range(2, d - 1))
            sf1 = se1 + sum(k[1:d])
        else:
            se1 = s + (d - 1) // 2 * k[d - 1] + (d - 3) // 2 * k[d] \
                + sum((i - 1) * k[i] for i in range(2, d - 1))
            sf1 = se1 + k[d] + sum(k[1:d - 1])
        trip = (mk(digs["e0"], s, xi), mk(digs["f0"], sf0, xi),
                mk(digs["e1"], se1, xi), mk(digs["f1"], sf1, xi))
        return FunctorOutput("D", ("e0", "f0", "e1", "f1"), trip, r, p, F.q)
    # type A: D_j has digits kappa_{i-j} and s(D_j) = s - sum_{i=1}^j kappa_{-i}
    kappa = tuple(k[b] for b in standard_beta("A", d))
    trip = []
    for j in range(r):
        dj = tuple(kappa[(i - j) % r] for i in range(r))
        sj = s - sum(kappa[(-i) % r] for i in range(1, j + 1))
        trip.append(mk(dj, sj, xi))
    return FunctorOutput("A", tuple(f"e{j}" for j in range(r)), tuple(trip), r, p, F.q)


# ---------------------------------------------------------------------------
# exhaustive bijection check

def conjugation_generators(type_label: str, d: int) -> dict[str, object]:
    m = build_group_model(type_label, d)
    gens = {"u": m.u}
    if type_label == "D":
        gens["omega" if d % 2 == 0 else "rho"] = m.generators["omega" if d % 2 == 0 else "rho"]
    return gens


@lru_cache(maxsize=None)
def _actions(type_label: str, d: int) -> tuple[tuple[str, tuple[tuple[int, ...], ...], tuple[int, ...]], ...]:
    m = build_group_model(type_label, d)
    out = []
    for name, g in conjugation_generators(type_label, d).items():
        G = conjugation_action(m, g)
        pi = coroot_permutation(m, g)
        out.append((name, tuple(tuple(row) for row in G), tuple(pi[i] for i in range(d + 1))))
    return tuple(out)


def iter_data(type_label: str, d: int, p: int, q: Optional[int] = None) -> Iterable[SupersingularDatum]:
    """All standard supersingular data (character, J, b), with the character enumerated
    exhaustively on the torus of the matrix model."""
    m = build_group_model(type_label, d)
    R = torus_rank(m)
    q = q or p
    bs = [None] if type_label == "B" else list(range(1, q))
    for a in itertools.product(range(p - 1), repeat=R):
        ks, s = character_invariants(type_label, d, p, a)
        opts = [(0, p - 1) if c == 0 else (c,) for c in ks]
        for digs in itertools.product(*opts):
            if _excluded(digs, p):
                continue
            for b in bs:
                yield SupersingularDatum(type_label, d, p, tuple(digs), s, b, None if b is None else q, a)


def conjugate(dat: SupersingularDatum, action) -> SupersingularDatum:
    """(lambda, J) -> (lambda o Ad(g), J o pi)."""
    _, G, pi = action
    p = dat.p
    R = len(G)
    a = dat.character
    a2 = tuple(sum(G[row][col] * a[row] for row in range(R)) % (p - 1) for col in range(R))
    digs = tuple(dat.digits[pi[i]] for i in range(len(dat.digits)))
    _, s = character_invariants(dat.type_label, dat.d, p, a2)
    return SupersingularDatum(dat.type_label, dat.d, p, digs, s, dat.b, dat.q, a2)


@dataclass
class BijectionReport:
    type_label: str
    d: int
    p: int
    q: int
    family: str
    r: int
    n_data: int = 0
    n_data_orbits: int = 0
    n_classes: int = 0
    well_defined: bool = False
    injective: bool = False
    surjective: bool = False
    realized: dict[str, Optional[str]] = field(default_factory=dict)
    collisions: list = field(default_factory=list)
    misses: list = field(default_factory=list)
    ill_defined: list = field(default_factory=list)
    packet_fiber_sizes: dict[int, int] = field(default_factory=dict)
    packet_well_defined: Optional[bool] = None

    @property
    def bijective(self) -> bool:
        return self.well_defined and self.injective and self.surjective

    def to_json(self) -> dict:
        return {"type": self.type_label, "d": self.d, "p": self.p, "q": self.q,
                "family": self.family, "r": self.r, "data": self.n_data,
                "data_orbits": self.n_data_orbits, "classes": self.n_classes,
                "well_defined": self.well_defined, "injective": self.injective,
                "surjective": self.surjective, "bijective": self.bijective,
                "realized": self.realized,
                "packet_fiber_sizes": {str(k): v for k, v in self.packet_fiber_sizes.items()},
                "packet_well_defined": self.packet_well_defined,
                "collisions": [str(c) for c in self.collisions[:5]],
                "misses": [str(c) for c in self.misses[:5]],
                "ill_defined": [str(c) for c in self.ill_defined[:5]]}


def _data_key(dat: SupersingularDatum) -> tuple:
    return (dat.character, dat.digits, dat.b)


def verify_bijection(type_label: str, d: int, p: int, q: Optional[int] = None) -> BijectionReport:
    """Exhaustive check that datum -> class point is well defined on conjugation orbits and
    induces a bijection onto the quotient set; also records which element of the involution
    group each conjugating generator realizes."""
    q = q or p
    fam = TYPE_TO_FAMILY[type_label]
    r = period(type_label, d)
    rep = BijectionReport(type_label, d, p, q, fam, r)
    data = {_data_key(x): x for x in iter_data(type_label, d, p, q)}
    rep.n_data = len(data)
    acts = _actions(type_label, d)
    cls = {key: supersingular_to_classpoint(x) for key, x in data.items()}
    elems = group_elements(fam, r)

    # which group element each generator realizes
    for act in acts:
        found = None
        for name, g in elems.items():
            if all(cls[_data_key(conjugate(x, act))] == g(cls[key]) for key, x in data.items()):
                found = name
                break
        rep.realized[act[0]] = found

    # data orbits
    seen: set = set()
    image_of_orbit: dict[ClassPoint, tuple] = {}
    for key in sorted(data, key=repr):
        if key in seen:
            continue
        orb = {key}
        todo = [key]
        while todo:
            y = todo.pop()
            for act in acts:
                z = _data_key(conjugate(data[y], act))
                if z not in orb:
                    orb.add(z)
                    todo.append(z)
        seen |= orb
        rep.n_data_orbits += 1
        images = {canonical_rep(cls[z]) for z in orb}
        if len(images) != 1:
            rep.ill_defined.append(sorted(images, key=ClassPoint.key))
        for im in images:
            if im in image_of_orbit and image_of_orbit[im] != min(orb, key=repr):
                rep.collisions.append(im)
            image_of_orbit.setdefault(im, min(orb, key=repr))
    classes = set(enumerate_classes(fam, r, p, q))
    rep.n_classes = len(classes)
    rep.well_defined = not rep.ill_defined
    rep.injective = not rep.collisions
    rep.misses = sorted(classes - set(image_of_orbit), key=ClassPoint.key)
    extra = set(image_of_orbit) - classes
    rep.surjective = not rep.misses and not extra
    if extra:
        rep.collisions.extend(sorted(extra, key=ClassPoint.key))
        rep.injective = False

    if type_label == "B":
        # packets: same J and same restriction of lambda to the coroot subtorus, i.e. same k
        packets: dict[tuple, set] = {}
        for key, x in data.items():
            packets.setdefault(x.digits, set()).add(key)
        rep.packet_fiber_sizes = dict(Counter(len(v) for v in packets.values()))
        rep.packet_well_defined = all(len({canonical_rep(cls[z]) for z in v}) == 1
                                      for v in packets.values())
    return rep


@dataclass
class FunctorReport:
    type_label: str
    d: int
    p: int
    checked: int = 0
    failures: list = field(default_factory=list)
    asymmetric: list = field(default_factory=list)
    offset_mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.failures or self.asymmetric or self.offset_mismatches)

    def to_json(self) -> dict:
        return {"type": self.type_label, "d": self.d, "p": self.p, "checked": self.checked,
                "round_trip_failures": [str(x) for x in self.failures[:5]],
                "asymmetric": [str(x) for x in self.asymmetric[:5]],
                "offset_mismatches": [str(x) for x in self.offset_mismatches[:5]], "ok": self.ok}


def derived_summand_exponents(dat: SupersingularDatum) -> dict[str, int]:
    """s of every summand computed from the character: -lambda(g tau g^-1) for the
    conjugating element g of each summand."""
    if dat.character is None:
        raise ClassifierError("derived exponents need the character")
    t, d, p = dat.type_label, dat.d, dat.p
    m = build_group_model(t, d)
    a = dat.character

    def s_of(g) -> int:
        conj = g * m.tau * g.inverse()
        return (-sum(x * y for x, y in zip(a, torus_params(m, conj)))) % (p - 1)

    u = m.u
    if t in ("C", "B"):
        return {"e": s_of(m.tau.identity(m.n)), "f": s_of(u)}
    if t == "D":
        w = m.generators["omega" if d % 2 == 0 else "rho"]
        return {"e0": s_of(m.tau.identity(m.n)), "f0": s_of(u), "e1": s_of(w), "f1": s_of(w * u)}
    ui = u.inverse()
    out = {}
    g = m.tau.identity(m.n)
    for j in range(d + 1):
        out[f"e{j}"] = s_of(g)
        g = g * ui
    return out


def verify_functor_outputs(type_label: str, d: int, p: int, q: Optional[int] = None,
                           classify: bool = True, N: Optional[int] = None) -> FunctorReport:
    """For every datum: the closed-form summands are symmetric for the family, their
    exponents agree with the ones computed from the character, and (optionally) the
    constructed rank-one modules classify back to the predicted triples."""
    rep = FunctorReport(type_label, d, p)
    fam = TYPE_TO_FAMILY[type_label]
    for dat in iter_data(type_label, d, p, q):
        out = functor_output(dat)
        rep.checked += 1
        if not is_symmetric(fam, out.triples):
            rep.asymmetric.append(dat)
        derived = derived_summand_exponents(dat)
        for lab, tr in zip(out.labels, out.triples):
            if derived[lab] != tr.s:
                rep.offset_mismatches.append((dat, lab, tr.s, derived[lab]))
        if classify:
            for tr, mod in zip(out.triples, out.modules(N)):
                if classify_rank_one(mod) != tr:
                    rep.failures.append((dat, tr))
    return rep
