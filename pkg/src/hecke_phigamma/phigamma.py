"""Truncated Laurent series over F_q with the phi- and Gamma-actions, rank-one
etale (phi^r, Gamma)-modules in normal form, the dual-basis oracle and the
induction functor from (phi^r, Gamma)- to (phi, Gamma)-modules.

Conventions: t = [nu] - 1, phi(t) = (1+t)^p - 1 = t^p (phi is k-linear),
gamma(x)(t) = (1+t)^x - 1.  A rank-one module on a basis g is given by
phi^r g = F g and gamma(x) g = F_x g.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .finite_field import FiniteField, primitive_root


class PrecisionError(ArithmeticError):
    pass


class ModuleError(ValueError):
    pass


def default_precision(p: int, r: int) -> int:
    """N = 4 p^r, overridable through HECKE_PHIGAMMA_PRECISION_FACTOR."""
    factor = int(os.environ.get("HECKE_PHIGAMMA_PRECISION_FACTOR", "4"))
    return factor * p ** r


# ---------------------------------------------------------------------------
# coefficient convolution

def _conv(a: Sequence[int], b: Sequence[int], F: FiniteField, length: int) -> list[int]:
    """First ``length`` coefficients of the product of two coefficient lists."""
    if length <= 0 or not a or not b:
        return [0] * max(length, 0)
    a = a[:length]
    b = b[:length]
    if F.f == 1:
        out = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))[:length] % F.p
        res = out.tolist()
    else:
        res = [0] * min(length, len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j in range(min(len(b), length - i)):
                    if b[j]:
                        res[i + j] = F.add(res[i + j], F.mul(x, b[j]))
    return res + [0] * (length - len(res))


def _inv_unit_coeffs(w: Sequence[int], F: FiniteField, length: int) -> list[int]:
    """Coefficients of 1/w mod t^length, w[0] != 0 (Newton iteration)."""
    if not w or w[0] == 0:
        raise ZeroDivisionError("not a unit power series")
    inv0 = F.inv(w[0])
    g = [inv0]
    prec = 1
    while prec < length:
        prec = min(2 * prec, length)
        wg = _conv(w, g, F, prec)
        # g <- g (2 - w g)
        corr = [F.neg(c) for c in wg]
        corr[0] = F.add(corr[0], 2 % F.p)
        g = _conv(g, corr, F, prec)
    return g[:length]


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TruncatedSeries:
    """sum_{k >= v} c_k t^k known modulo t^N; ``coeffs[i]`` is the coefficient of t^(v+i)."""

    field: FiniteField
    v: int
    coeffs: tuple[int, ...]
    N: int

    def __post_init__(self):
        if len(self.coeffs) != max(self.N - self.v, 0):
            raise PrecisionError("coefficient list does not match precision")

    # -- constructors -------------------------------------------------------
    @classmethod
    def make(cls, F: FiniteField, v: int, coeffs: Iterable[int], N: int) -> "TruncatedSeries":
        cs = list(coeffs)[: max(N - v, 0)]
        cs = cs + [0] * (max(N - v, 0) - len(cs))
        k = 0
        while k < len(cs) and cs[k] == 0:
            k += 1
        return cls(F, v + k, tuple(cs[k:]), N)

    @classmethod
    def monomial(cls, F: FiniteField, c: int, e: int, N: int) -> "TruncatedSeries":
        return cls.make(F, e, [c], N)

    @classmethod
    def constant(cls, F: FiniteField, c: int, N: int) -> "TruncatedSeries":
        return cls.make(F, 0, [c], N)

    @classmethod
    def zero(cls, F: FiniteField, N: int) -> "TruncatedSeries":
        return cls(F, N, (), N)

    @classmethod
    def from_dict(cls, F: FiniteField, terms: Mapping[int, int], N: int) -> "TruncatedSeries":
        if not terms:
            return cls.zero(F, N)
        lo = min(terms)
        cs = [0] * max(N - lo, 0)
        for e, c in terms.items():
            if lo <= e < N:
                cs[e - lo] = c % F.q
        return cls.make(F, lo, cs, N)

    # -- inspection -----------------------------------------------------------
    @property
    def p(self) -> int:
        return self.field.p

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        return self.v

    def leading(self) -> int:
        if self.is_zero():
            raise PrecisionError("zero to the working precision")
        return self.coeffs[0]

    def coefficient(self, e: int) -> int:
        if e >= self.N:
            raise PrecisionError(f"t^{e} beyond precision {self.N}")
        if e < self.v:
            return 0
        return self.coeffs[e - self.v]

    def is_unit(self) -> bool:
        return not self.is_zero()

    def terms(self) -> dict[int, int]:
        return {self.v + i: c for i, c in enumerate(self.coeffs) if c}

    def truncate(self, N: int) -> "TruncatedSeries":
        if N > self.N:
            raise PrecisionError("cannot raise precision")
        return TruncatedSeries.make(self.field, self.v, self.coeffs, N) if N > self.v \
            else TruncatedSeries.zero(self.field, N)

    def agrees(self, other: "TruncatedSeries", N: Optional[int] = None) -> bool:
        """Equality modulo t^N (default: the common precision)."""
        n = min(self.N, other.N) if N is None else N
        if n > min(self.N, other.N):
            raise PrecisionError("comparison beyond known precision")
        lo = min(self.v, other.v)
        return all(self.coefficient(e) == other.coefficient(e) for e in range(lo, n))

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        F = self.field
        N = min(self.N, other.N)
        lo = min(self.v, other.v)
        if lo >= N:
            return TruncatedSeries.zero(F, N)
        cs = [F.add(self.coefficient(e) if e >= self.v else 0,
                    other.coefficient(e) if e >= other.v else 0) for e in range(lo, N)]
        return TruncatedSeries.make(F, lo, cs, N)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.field, self.v, tuple(self.field.neg(c) for c in self.coeffs), self.N)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c: int) -> "TruncatedSeries":
        F = self.field
        return TruncatedSeries.make(F, self.v, [F.mul(c, x) for x in self.coeffs], self.N)

    def shift(self, a: int) -> "TruncatedSeries":
        """Multiplication by t^a."""
        return TruncatedSeries(self.field, self.v + a, self.coeffs, self.N + a)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        F = self.field
        N = min(self.N + other.v, other.N + self.v)
        v = self.v + other.v
        if self.is_zero() or other.is_zero() or v >= N:
            return TruncatedSeries.zero(F, N)
        return TruncatedSeries.make(F, v, _conv(self.coeffs, other.coeffs, F, N - v), N)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        if self.is_zero():
            raise ZeroDivisionError("division by a series that vanishes to the working precision")
        L = self.N - self.v
        return TruncatedSeries.make(self.field, -self.v,
                                    _inv_unit_coeffs(self.coeffs, self.field, L), L - self.v)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.inverse()

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return TruncatedSeries.constant(self.field, 1, max(self.N - self.v, 1))
        out = None
        base = self
        while e:
            if e & 1:
                out = base if out is None else out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def frobenius(self, r: int = 1) -> "TruncatedSeries":
        """t -> t^(p^r); exponents and precision are multiplied exactly."""
        q = self.p ** r
        terms = {e * q: c for e, c in self.terms().items()}
        return TruncatedSeries.from_dict(self.field, terms, self.N * q) if terms else \
            TruncatedSeries.zero(self.field, self.N * q)

    def to_json(self) -> dict:
        return {"v": self.v, "coeffs": list(self.coeffs), "N": self.N}

    @classmethod
    def from_json(cls, F: FiniteField, obj: Mapping) -> "TruncatedSeries":
        return cls.make(F, int(obj["v"]), [int(c) for c in obj["coeffs"]], int(obj["N"]))

    def __repr__(self):
        shown = ", ".join(f"{c}t^{e}" for e, c in list(self.terms().items())[:6])
        return f"TruncatedSeries({shown} + O(t^{self.N}))"


# ---------------------------------------------------------------------------
# Gamma

@dataclass(frozen=True)
class GammaScalar:
    """x in Z_p^x, known modulo p^M."""

    x: int
    M: int
    p: int

    def __post_init__(self):
        if self.x % self.p == 0:
            raise ModuleError("x must be a unit mod p")

    @property
    def residue(self) -> int:
        return self.x % self.p

    def __mul__(self, other: "GammaScalar") -> "GammaScalar":
        M = min(self.M, other.M)
        return GammaScalar((self.x * other.x) % self.p ** M, M, self.p)


def teichmuller(a: int, p: int, M: int) -> GammaScalar:
    mod = p ** M
    return GammaScalar(pow(a % p, p ** (M - 1), mod), M, p)


def _binom_mod_p(x: int, j: int, p: int) -> int:
    """binom(x, j) mod p by Lucas' theorem (x a non-negative integer)."""
    out = 1
    while j:
        xi, ji = x % p, j % p
        if ji > xi:
            return 0
        c = 1
        for k in range(ji):
            c = c * (xi - k) // (k + 1)
        out = out * c % p
        x //= p
        j //= p
    return out


@lru_cache(maxsize=None)
def _gamma_t_coeffs(p: int, x: int, M: int, length: int) -> tuple[int, ...]:
    """Coefficients of (1+t)^x - 1 in t^0..t^(length-1) (needs length <= p^M)."""
    if length > p ** M:
        raise PrecisionError(f"(1+t)^x is only known mod t^{p ** M}")
    xr = x % p ** M
    return tuple([0] + [_binom_mod_p(xr, j, p) for j in range(1, length)])


def gamma_t(F: FiniteField, x: GammaScalar, N: int) -> TruncatedSeries:
    """gamma(x)(t) = (1+t)^x - 1 mod t^N."""
    return TruncatedSeries.make(F, 0, _gamma_t_coeffs(F.p, x.x, x.M, N), N)


def _gamma_u(F: FiniteField, x: GammaScalar, L: int) -> TruncatedSeries:
    """u = ((1+t)^x - 1) / (x t) mod t^L; u is in 1 + t k[[t]]."""
    T = gamma_t(F, x, L + 1)
    return T.shift(-1).scale(F.inv(x.residue))


def gamma_substitute(x: GammaScalar, f: TruncatedSeries) -> TruncatedSeries:
    """f(t) -> f((1+t)^x - 1), exactly modulo t^N."""
    F = f.field
    if f.is_zero():
        return f
    N, v = f.N, f.v
    need = N if v >= 0 else N - v + 1
    if need > x.p ** x.M:
        raise PrecisionError(f"precision {N} exceeds the p^M = {x.p ** x.M} guarantee")
    L = N - v  # relative precision needed for the powers of u
    u = _gamma_u(F, x, L)
    xr = x.residue
    out = TruncatedSeries.zero(F, N)
    # f = t^v sum_i c_i t^i  ->  (x t u)^v sum_i c_i (x t u)^i
    base = TruncatedSeries.make(F, v, (u ** v).coeffs if v else [1], N) \
        .scale(F.pow(xr, v))
    T = u.shift(1).scale(xr)
    acc = base
    last = max(i for i, c in enumerate(f.coeffs) if c)
    for i, c in enumerate(f.coeffs[: last + 1]):
        if i:
            acc = acc * T
            acc = acc.truncate(min(acc.N, N))
        if c:
            out = out + acc.scale(c)
    return out


# ---------------------------------------------------------------------------
# rank one

@dataclass(frozen=True)
class RankOneClass:
    n: int
    s: int
    xi: int
    r: int
    p: int
    q: int

    def digits(self) -> tuple[int, ...]:
        return tuple((self.n // self.p ** i) % self.p for i in range(self.r))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n, self.s, self.xi)


@dataclass(frozen=True)
class RankOneModule:
    r: int
    field: FiniteField
    F: TruncatedSeries
    gamma: Mapping[int, TruncatedSeries]   # x residue mod p^M -> F_x
    M: int

    @property
    def p(self) -> int:
        return self.field.p

    def gamma_scalar(self, x: int) -> GammaScalar:
        return GammaScalar(x, self.M, self.p)

    def change_basis(self, h: TruncatedSeries) -> "RankOneModule":
        """The same module on the basis h g (h a unit)."""
        F = self.F * h.frobenius(self.r) / h
        gam = {x: gamma_substitute(self.gamma_scalar(x), h) * fx / h for x, fx in self.gamma.items()}
        return RankOneModule(self.r, self.field, F, gam, self.M)

    def to_phigamma(self) -> "PhiGammaModule":
        return PhiGammaModule(1, self.r, self.field, ((self.F,),),
                              {x: ((fx,),) for x, fx in self.gamma.items()}, self.M)


def _check_triple(r: int, F: FiniteField, n: int, s: int, xi: int) -> None:
    p = F.p
    if not 1 <= n <= p ** r - 1:
        raise ModuleError(f"n = {n} outside [1, p^r - 1]")
    if n % (p - 1):
        raise ModuleError(f"n = {n} is not divisible by p - 1")
    if not 0 <= s <= p - 2:
        raise ModuleError(f"s = {s} outside [0, p - 2]")
    if not 0 < xi < F.q:
        raise ModuleError("xi must be a unit")


def gamma_generators(p: int, M: int) -> list[GammaScalar]:
    """Teichmueller lift of the smallest primitive root, and 1 + p."""
    return [teichmuller(primitive_root(p), p, M), GammaScalar(1 + p, M, p)]


def _precision_exponent(p: int, N: int) -> int:
    M = 1
    while p ** M < 2 * N + 2:
        M += 1
    return M


@lru_cache(maxsize=4096)
def _cocycle_unit(p: int, f: int, r: int, m: int, x: int, M: int, N: int) -> TruncatedSeries:
    """prod_{k>=0} phi^{rk}(u^{-m}) mod t^N: the unit h in 1+tk[[t]] with h/phi^r(h) = u^{-m}."""
    F = FiniteField(p, f)
    w = _gamma_u(F, GammaScalar(x, M, p), N) ** (-m)
    out = w
    k = 1
    while p ** (r * k) < N:
        out = out * w.frobenius(r * k).truncate(N)
        k += 1
    return out.truncate(N)


def construct_rank_one(r: int, field: FiniteField, n: int, s: int, xi: int,
                       N: Optional[int] = None, xs: Optional[Sequence[int]] = None) -> RankOneModule:
    """phi^r g = xi t^(n+1-p^r) g; gamma(x) g = x^s h_x g with h_x the unique unit in
    1 + t k[[t]] making gamma and phi^r commute."""
    _check_triple(r, field, n, s, xi)
    p = field.p
    N = N or default_precision(p, r)
    M = _precision_exponent(p, N)
    m = n + 1 - p ** r
    Fser = TruncatedSeries.monomial(field, xi, m, N)
    gens = [g.x for g in gamma_generators(p, M)] if xs is None else list(xs)
    gam = {}
    for x in gens:
        xr = x % p
        gam[x] = _cocycle_unit(p, field.f, r, m, x, M, N).scale(pow(xr, s, p))
    return RankOneModule(r, field, Fser, gam, M)


def _dlog(g: int, y: int, p: int) -> int:
    acc = 1
    for e in range(p - 1):
        if acc == y % p:
            return e
        acc = acc * g % p
    raise ModuleError(f"{y} is not in F_p^x")


@dataclass(frozen=True)
class NormalForm:
    triple: RankOneClass
    shift: int                      # a with g -> t^a g
    corrections: tuple[tuple[int, int], ...]   # (j, c): g -> (1 + c t^j) g
    F: TruncatedSeries              # the normalized structure series


def normal_form(raw: RankOneModule) -> NormalForm:
    """Successive approximation: shift the valuation into [2 - p^r, 0], then kill the
    higher coefficients one by one with g -> (1 + c t^j) g."""
    F, p, r = raw.field, raw.p, raw.r
    pr = p ** r
    if raw.F.N <= pr:
        raise PrecisionError(f"need precision > p^r = {pr}")
    if raw.F.is_zero():
        raise ModuleError("F is not a unit")
    v = raw.F.v
    # unique a with v + a (p^r - 1) in [2 - p^r, 0]
    a = -((v + pr - 2) // (pr - 1)) + 0
    while v + a * (pr - 1) > 0:
        a -= 1
    while v + a * (pr - 1) < 2 - pr:
        a += 1
    mval = v + a * (pr - 1)
    xi = raw.F.leading()
    L = raw.F.N - v
    inv_xi = F.inv(xi)
    w = [F.mul(inv_xi, c) for c in raw.F.coeffs]
    corrections = []
    for j in range(1, L):
        c = w[j]
        if not c:
            continue
        corrections.append((j, c))
        # w <- w (1 + c t^{j p^r}) / (1 + c t^j)
        for k in range(j, L):          # divide by 1 + c t^j
            if w[k - j]:
                w[k] = F.sub(w[k], F.mul(c, w[k - j]))
        jp = j * pr
        for k in range(L - 1, jp - 1, -1):
            if w[k - jp]:
                w[k] = F.add(w[k], F.mul(c, w[k - jp]))
    if any(w[1:]):
        raise PrecisionError("normal form did not stabilize")
    n = pr - 1 + mval
    # s from the constant term of F_x after g -> t^a g
    g0 = primitive_root(p)
    x0 = next((x for x in raw.gamma if x % p == g0), None)
    if x0 is None:
        raise ModuleError("gamma data must contain a lift of a generator of F_p^x")
    c0 = raw.gamma[x0].coefficient(0)
    if c0 == 0 or c0 >= p:
        raise ModuleError("F_x(0) must lie in F_p^x")
    s = _dlog(g0, c0 * pow(g0, a, p) % p, p) % (p - 1)
    Fn = TruncatedSeries.monomial(F, xi, mval, raw.F.N + a * (pr - 1))
    return NormalForm(RankOneClass(n, s, xi, r, p, F.q), a, tuple(corrections), Fn)


def classify_rank_one(raw: RankOneModule) -> RankOneClass:
    return normal_form(raw).triple


def verify_rank_one_relations(mod: RankOneModule) -> bool:
    """gamma(x)(F) F_x = phi^r(F_x) F for every stored x."""
    for x, fx in mod.gamma.items():
        lhs = gamma_substitute(mod.gamma_scalar(x), mod.F) * fx
        rhs = fx.frobenius(mod.r) * mod.F
        if not lhs.agrees(rhs):
            return False
    return True


# ---------------------------------------------------------------------------
# dual oracle

@dataclass
class DualReport:
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def dual_oracle_check(r: int, field: FiniteField, n: int, s: int, xi: int,
                      J: Optional[int] = None, xs: Optional[Sequence[int]] = None) -> DualReport:
    """The dual model on l_0..l_J: t l_{j+1} = l_j, t l_0 = 0, phi^r l_j = xi^{-1} l_{p^r j + n},
    gamma(x) t^b (phi^r)^m l_0 = x^{-s} (gamma(x) t^b gamma(x^{-1})) (phi^r)^m l_0."""
    _check_triple(r, field, n, s, xi)
    F = field
    p = F.p
    pr = p ** r
    J = J if J is not None else 3 * pr
    M = _precision_exponent(p, J + 1)
    xs = [g.x for g in gamma_generators(p, M)] if xs is None else list(xs)
    rep = DualReport()
    xi_inv = F.inv(xi)

    def phi(vec: dict[int, int]) -> dict[int, int]:
        out = {}
        for j, c in vec.items():
            k = pr * j + n
            if k <= J:
                out[k] = F.add(out.get(k, 0), F.mul(xi_inv, c))
        return out

    def tmul(vec: dict[int, int], a: int) -> dict[int, int]:
        return {j - a: c for j, c in vec.items() if j - a >= 0}

    # t^{p^r} phi^r = phi^r t on basis vectors whose images stay inside the window
    for j in range(J + 1):
        if pr * j + n > J:
            continue
        rep.checks += 1
        if tmul(phi({j: 1}), pr) != phi(tmul({j: 1}, 1)):
            rep.failures.append(f"t^(p^r) phi^r != phi^r t at l_{j}")

    # indices N_m = n (1 + p^r + ... + p^{r(m-1)})
    tops = []
    m = 0
    while True:
        Nm = n * sum(pr ** i for i in range(m))
        if Nm > J:
            break
        tops.append(Nm)
        m += 1

    for x in xs:
        gx = GammaScalar(x, M, p)
        T = gamma_t(F, gx, J + 1)
        xs_inv = F.inv(F.pow(x % p, s))
        powers = [TruncatedSeries.constant(F, 1, J + 1)]
        for _ in range(J + 1):
            powers.append(powers[-1] * T)

        def act(b: int, mm: int) -> dict[int, int]:
            """gamma(x) applied to l_{N_mm - b}, through the (b, mm) presentation."""
            Nm = tops[mm]
            out = {}
            ser = powers[b]
            for k, c in ser.terms().items():
                idx = Nm - k
                if 0 <= idx <= J:
                    out[idx] = F.add(out.get(idx, 0), F.mul(xs_inv, c))
            return out

        # gamma(x) l_0 = x^{-s} l_0
        rep.checks += 1
        if act(0, 0) != {0: xs_inv}:
            rep.failures.append(f"gamma({x}) l_0 != x^-s l_0")
        # well-definedness: l_{N_m - b} = l_{N_{m+1} - (b + n p^{rm})}
        action: dict[int, dict[int, int]] = {}
        for mm in range(len(tops)):
            for b in range(tops[mm] + 1):
                idx = tops[mm] - b
                val = act(b, mm)
                if idx in action:
                    rep.checks += 1
                    if action[idx] != val:
                        rep.failures.append(f"gamma({x}) ill defined at l_{idx}")
                else:
                    action[idx] = val
        # gamma phi^r = phi^r gamma on the window
        for j in range(J + 1):
            if pr * j + n > J or j not in action or (pr * j + n) not in action:
                continue
            rep.checks += 1
            lhs = {k: F.mul(xi_inv, c) for k, c in action[pr * j + n].items()}
            lhs = {k: c for k, c in lhs.items() if c}
            rhs = {k: c for k, c in phi(action[j]).items() if c}
            if lhs != rhs:
                rep.failures.append(f"gamma phi^r != phi^r gamma at l_{j}")
    return rep


# ---------------------------------------------------------------------------
# congruence

def congruence_holds(p: int, x: int, n: int, m: int, r: int, lift: str = "teichmuller") -> bool:
    """gamma(x) t^{n p^{rm}} gamma(x^{-1}) - (x t)^{n p^{rm}} lies in t^{(n+1) p^{rm}} k[[t]],
    checked at precision 2 (n+1) p^{rm}."""
    F = FiniteField(p)
    e = n * p ** (r * m)
    N = 2 * (n + 1) * p ** (r * m)
    M = _precision_exponent(p, N)
    gx = teichmuller(x, p, M) if lift == "teichmuller" else GammaScalar(x % p, M, p)
    lhs = gamma_substitute(gx, TruncatedSeries.monomial(F, 1, e, N))
    rhs = TruncatedSeries.monomial(F, pow(x, e, p), e, N)
    diff = lhs - rhs
    return diff.v >= (n + 1) * p ** (r * m)


# ---------------------------------------------------------------------------
# general modules

Matrix = tuple[tuple[TruncatedSeries, ...], ...]


def _mat_mul(A: Matrix, B: Matrix, F: FiniteField, N: int) -> Matrix:
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = TruncatedSeries.zero(F, N)
            for k in range(n):
                if not A[i][k].is_zero() and not B[k][j].is_zero():
                    acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _det(A: Matrix, F: FiniteField, N: int) -> TruncatedSeries:
    """Determinant by expansion over the permutations supported on non-zero entries."""
    n = len(A)
    total = TruncatedSeries.zero(F, N)

    def rec(i: int, used: list[int], acc: Optional[TruncatedSeries], sign: int):
        nonlocal total
        if i == n:
            total = total + (acc if sign > 0 else -acc)
            return
        for j in range(n):
            if j in used or A[i][j].is_zero():
                continue
            inv = sum(1 for u in used if u > j)
            nxt = A[i][j] if acc is None else acc * A[i][j]
            rec(i + 1, used + [j], nxt, sign * (-1) ** inv)

    rec(0, [], None, 1)
    return total


@dataclass(frozen=True)
class PhiGammaModule:
    """phi^r g_j = sum_i phi[i][j] g_i and gamma(x) g_j = sum_i gamma[x][i][j] g_i."""

    rank: int
    r: int
    field: FiniteField
    phi: Matrix
    gamma: Mapping[int, Matrix]
    M: int

    @property
    def p(self) -> int:
        return self.field.p

    def precision(self) -> int:
        return min(e.N for row in self.phi for e in row)

    def is_etale(self) -> bool:
        return not _det(self.phi, self.field, self.precision()).is_zero()

    def gamma_equivariant(self) -> bool:
        """G_x * gamma_x(A) = A * phi^r(G_x) for every stored x."""
        F = self.field
        for x, G in self.gamma.items():
            gx = GammaScalar(x, self.M, self.p)
            gA = tuple(tuple(gamma_substitute(gx, e) for e in row) for row in self.phi)
            fG = tuple(tuple(e.frobenius(self.r) for e in row) for row in G)
            N = 10 ** 9
            lhs = _mat_mul(G, gA, F, N)
            rhs = _mat_mul(self.phi, fG, F, N)
            for i in range(self.rank):
                for j in range(self.rank):
                    if not lhs[i][j].agrees(rhs[i][j]):
                        return False
        return True

    def diagonal_summands(self) -> list[RankOneModule]:
        for i in range(self.rank):
            for j in range(self.rank):
                if i != j and (not self.phi[i][j].is_zero()
                               or any(not G[i][j].is_zero() for G in self.gamma.values())):
                    raise ModuleError("module is not given in diagonal form")
        return [RankOneModule(self.r, self.field, self.phi[i][i],
                              {x: G[i][i] for x, G in self.gamma.items()}, self.M)
                for i in range(self.rank)]

    def to_json(self) -> dict:
        return {"q": self.field.q, "p": self.p, "f": self.field.f, "r": self.r, "rank": self.rank,
                "M": self.M,
                "phi_matrix": [[e.to_json() for e in row] for row in self.phi],
                "gamma": {str(x): [[e.to_json() for e in row] for row in G]
                          for x, G in self.gamma.items()}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "PhiGammaModule":
        F = FiniteField(int(obj["p"]), int(obj.get("f", 1)))
        if F.q != int(obj["q"]):
            raise ModuleError("q does not match p^f")
        phi = tuple(tuple(TruncatedSeries.from_json(F, e) for e in row) for row in obj["phi_matrix"])
        gam = {int(x): tuple(tuple(TruncatedSeries.from_json(F, e) for e in row) for row in G)
               for x, G in obj["gamma"].items()}
        rank = int(obj["rank"])
        if len(phi) != rank or any(len(row) != rank for row in phi):
            raise ModuleError("phi matrix does not match rank")
        return cls(rank, int(obj["r"]), F, phi, gam, int(obj["M"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def direct_sum(mods: Sequence[PhiGammaModule]) -> PhiGammaModule:
    if not mods:
        raise ModuleError("empty direct sum")
    F, r, M = mods[0].field, mods[0].r, mods[0].M
    if any(m.field != F or m.r != r or m.M != M for m in mods):
        raise ModuleError("summands must share field, r and M")
    rank = sum(m.rank for m in mods)
    N = min(m.precision() for m in mods)
    keys = set(mods[0].gamma)
    for m in mods[1:]:
        keys &= set(m.gamma)

    def block(mats: Sequence[Matrix]) -> Matrix:
        out = [[TruncatedSeries.zero(F, N) for _ in range(rank)] for _ in range(rank)]
        off = 0
        for A in mats:
            for i in range(len(A)):
                for j in range(len(A)):
                    out[off + i][off + j] = A[i][j]
            off += len(A)
        return tuple(tuple(row) for row in out)

    return PhiGammaModule(rank, r, F, block([m.phi for m in mods]),
                          {x: block([m.gamma[x] for m in mods]) for x in keys}, M)


def induce_to_phi(D: PhiGammaModule) -> PhiGammaModule:
    """D~ = (+)_{i<r} D^(i) on the basis g_{i,j} = phi^i g_j: phi maps the i-th copy
    identically to the (i+1)-st and the last one to the 0-th through phi^r_D; gamma acts
    on the i-th copy through phi^i of its matrix."""
    if not D.is_etale():
        raise ModuleError("input is not etale")
    r, n, F = D.r, D.rank, D.field
    N = D.precision()
    R = r * n
    zero = TruncatedSeries.zero(F, N)

    def idx(i: int, j: int) -> int:
        return i * n + j

    phi = [[zero] * R for _ in range(R)]
    for i in range(r - 1):
        for j in range(n):
            phi[idx(i + 1, j)][idx(i, j)] = TruncatedSeries.constant(F, 1, N)
    for a in range(n):
        for b in range(n):
            phi[idx(0, a)][idx(r - 1, b)] = D.phi[a][b]
    gam = {}
    for x, G in D.gamma.items():
        Gt = [[zero] * R for _ in range(R)]
        for i in range(r):
            for a in range(n):
                for b in range(n):
                    Gt[idx(i, a)][idx(i, b)] = G[a][b].frobenius(i)
        gam[x] = tuple(tuple(row) for row in Gt)
    return PhiGammaModule(R, 1, F, tuple(tuple(row) for row in phi), gam, D.M)


def restrict_rank_one_triple(mod: PhiGammaModule) -> list[RankOneClass]:
    return [classify_rank_one(s) for s in mod.diagonal_summands()]


def legal_triples(r: int, field: FiniteField) -> Iterable[tuple[int, int, int]]:
    p = field.p
    for n in range(p - 1, p ** r, p - 1):
        for s in range(p - 1):
            for xi in field.units():
                yield n, s, xi


__all__ = [
    "PrecisionError", "ModuleError", "TruncatedSeries", "GammaScalar", "teichmuller",
    "gamma_t", "gamma_substitute", "RankOneClass", "RankOneModule", "construct_rank_one",
    "classify_rank_one", "normal_form", "verify_rank_one_relations", "dual_oracle_check",
    "DualReport", "congruence_holds", "PhiGammaModule", "direct_sum", "induce_to_phi",
    "gamma_generators", "default_precision", "legal_triples",
]
