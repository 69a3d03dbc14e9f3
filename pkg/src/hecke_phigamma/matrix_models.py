"""Explicit matrix models GSp_2d (C), SO_2d+1 (B), GSO_2d (D) and GL_d+1 (A).

All matrices have entries in Z[p^+-1, x^+-1]; p and x are formal units.
Conventional 1-based indices are used in the builders (``_e(i, j)`` etc.) and
converted to 0-based storage.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from .affine_weyl import AffineWeylElement, AffineWeylError, translation_power
from .gallery import standard_beta, standard_gallery_datum
from .laurent import ONE, P, X, ZERO, Laurent, SymMatrix
from .rootdata import RootSystem, Vector, build_root_system, unit, add, sub, scale

SUPPORTED = {"C": 2, "B": 3, "D": 4, "A": 1}


class MatrixModelError(ValueError):
    pass


# ---------------------------------------------------------------------------
# block helpers (1-based)

def _put_identity(ent: dict, start: int, size: int, scalar=ONE) -> None:
    for k in range(size):
        ent[(start - 1 + k, start - 1 + k)] = scalar


def _put_antidiag(ent: dict, row: int, col: int, size: int, scalar=ONE) -> None:
    for k in range(size):
        ent[(row - 1 + k, col - 1 + size - 1 - k)] = scalar


def _diag(vals) -> SymMatrix:
    return SymMatrix.diag(vals)


def _xp(e: int) -> Laurent:
    return Laurent.mono(1, 0, e)


def _pp(e: int) -> Laurent:
    return Laurent.mono(1, e, 0)


def eps(n: int, i: int, j: int, c=1) -> SymMatrix:
    """epsilon_{i,j} = identity + c at (i, j), 1-based."""
    return SymMatrix.elementary(n, i - 1, j - 1, c)


def sym_J(d: int) -> SymMatrix:
    """S_d = [[0, E_d], [E_d, 0]]."""
    ent: dict = {}
    for i in range(d):
        ent[(i, d + i)] = ONE
        ent[(d + i, i)] = ONE
    return SymMatrix(2 * d, ent)


def alt_J(d: int) -> SymMatrix:
    """S^_d = [[0, E_d], [-E_d, 0]]."""
    ent: dict = {}
    for i in range(d):
        ent[(i, d + i)] = ONE
        ent[(d + i, i)] = -ONE
    return SymMatrix(2 * d, ent)


def odd_J(d: int) -> SymMatrix:
    """S~_d = diag(S_d, 1)."""
    m = sym_J(d)
    ent = dict(m.entries)
    ent[(2 * d, 2 * d)] = ONE
    return SymMatrix(2 * d + 1, ent)


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupModel:
    type_label: str
    d: int
    form: SymMatrix
    similitude: bool
    generators: dict[str, SymMatrix]      # "s0".."sd", "u", optionally "omega", "rho"
    epsilon: Laurent                      # central scalar in front of phi
    beta: tuple[int, ...]
    tau: SymMatrix                        # tau(x)
    coroots: tuple[SymMatrix, ...]        # alpha_i^vee(x), i = 0..d
    phi_power: int                        # the power whose diagonal shape is displayed

    @property
    def n(self) -> int:
        return self.form.n

    def s(self, i: int) -> SymMatrix:
        return self.generators[f"s{i}"]

    @property
    def u(self) -> SymMatrix:
        return self.generators["u"]

    @property
    def phi(self) -> SymMatrix:
        return phi_of_word(self, self.beta)

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.type_label, self.d)


def phi_of_word(model: GroupModel, word) -> SymMatrix:
    out = SymMatrix.scalar(model.n, model.epsilon)
    for i in word:
        out = out * model.s(i)
    return out


# -- type C: GSp_2d ---------------------------------------------------------

def _build_C(d: int) -> GroupModel:
    n = 2 * d
    gens: dict[str, SymMatrix] = {}
    for i in range(1, d):
        ent: dict = {}
        _put_identity(ent, 1, n)
        for off in (0, d):
            a = off + i
            ent[(a - 1, a - 1)] = ZERO
            ent[(a, a)] = ZERO
            ent[(a - 1, a)] = ONE
            ent[(a, a - 1)] = -ONE
        gens[f"s{i}"] = SymMatrix(n, ent)
    ent = {}
    _put_identity(ent, 1, n)
    ent[(d - 1, d - 1)] = ZERO
    ent[(n - 1, n - 1)] = ZERO
    ent[(d - 1, n - 1)] = ONE
    ent[(n - 1, d - 1)] = -ONE
    gens[f"s{d}"] = SymMatrix(n, ent)
    ent = {}
    _put_identity(ent, 1, n)
    ent[(0, 0)] = ZERO
    ent[(d, d)] = ZERO
    ent[(0, d)] = -_pp(-1)
    ent[(d, 0)] = P
    gens["s0"] = SymMatrix(n, ent)
    ent = {}
    _put_antidiag(ent, 1, d + 1, d)
    _put_antidiag(ent, d + 1, 1, d, P)
    gens["u"] = SymMatrix(n, ent)
    tau = _diag([X] * d + [ONE] * d)
    cor = [_diag([_xp(-1)] + [ONE] * (d - 1) + [X] + [ONE] * (d - 1))]
    for i in range(1, d):
        v = [0] * n
        v[i - 1], v[i], v[d + i - 1], v[d + i] = 1, -1, -1, 1
        cor.append(_diag([_xp(e) for e in v]))
    cor.append(_diag([ONE] * (d - 1) + [X] + [ONE] * (d - 1) + [_xp(-1)]))
    return GroupModel("C", d, alt_J(d), True, gens, P, standard_beta("C", d),
                      tau, tuple(cor), d)


# -- type B: SO_2d+1 --------------------------------------------------------

def _build_B(d: int) -> GroupModel:
    n = 2 * d + 1
    gens: dict[str, SymMatrix] = {}
    for i in range(1, d):
        ent: dict = {}
        _put_identity(ent, 1, n)
        for off in (0, d):
            a = off + i
            ent[(a - 1, a - 1)] = ZERO
            ent[(a, a)] = ZERO
            ent[(a - 1, a)] = ONE
            ent[(a, a - 1)] = ONE
        gens[f"s{i}"] = SymMatrix(n, ent)
    ent = {}
    _put_identity(ent, 1, n)
    ent[(d - 1, d - 1)] = ZERO
    ent[(2 * d - 1, 2 * d - 1)] = ZERO
    ent[(d - 1, 2 * d - 1)] = ONE
    ent[(2 * d - 1, d - 1)] = ONE
    ent[(n - 1, n - 1)] = -ONE
    gens[f"s{d}"] = SymMatrix(n, ent)
    ent = {}
    _put_identity(ent, 2, d - 1)
    _put_identity(ent, d + 2, d - 1)
    ent[(0, d)] = _pp(-1)
    ent[(d, 0)] = P
    ent[(n - 1, n - 1)] = -ONE
    u = SymMatrix(n, ent)
    gens["u"] = u
    gens["s0"] = u * gens["s1"] * u
    tau = _diag([X] + [ONE] * (d - 1) + [_xp(-1)] + [ONE] * (d - 1) + [ONE])
    cor = [_diag([_xp(-1), _xp(-1)] + [ONE] * (d - 2) + [X, X] + [ONE] * (d - 2) + [ONE])]
    for i in range(1, d):
        v = [0] * n
        v[i - 1], v[i], v[d + i - 1], v[d + i] = 1, -1, -1, 1
        cor.append(_diag([_xp(e) for e in v]))
    cor.append(_diag([ONE] * (d - 1) + [_xp(2)] + [ONE] * (d - 1) + [_xp(-2), ONE]))
    return GroupModel("B", d, odd_J(d), False, gens, ONE, standard_beta("B", d),
                      tau, tuple(cor), 2)


# -- type D: GSO_2d ---------------------------------------------------------

def _build_D(d: int) -> GroupModel:
    n = 2 * d
    gens: dict[str, SymMatrix] = {}
    for i in range(1, d):
        ent: dict = {}
        _put_identity(ent, 1, n)
        for off in (0, d):
            a = off + i
            ent[(a - 1, a - 1)] = ZERO
            ent[(a, a)] = ZERO
            ent[(a - 1, a)] = ONE
            ent[(a, a - 1)] = ONE
        gens[f"s{i}"] = SymMatrix(n, ent)
    ent = {}
    _put_identity(ent, 2, d - 2)
    _put_identity(ent, d + 2, d - 2)
    ent[(0, d)] = _pp(-1)
    ent[(d, 0)] = P
    ent[(d - 1, n - 1)] = ONE
    ent[(n - 1, d - 1)] = ONE
    u = SymMatrix(n, ent)
    gens["u"] = u
    gens["s0"] = u * gens["s1"] * u
    gens[f"s{d}"] = u * gens[f"s{d - 1}"] * u
    ent = {}
    _put_antidiag(ent, 1, d + 1, d)
    _put_antidiag(ent, d + 1, 1, d, P)
    gens["omega"] = SymMatrix(n, ent)
    # rho: rows 1..d-1 -> E*_{d-1} in the last d-1 columns; row d -> p at column 1;
    # rows d+1..2d-1 -> p E*_{d-1} in columns 2..d; row 2d -> 1 at column d+1
    ent = {}
    _put_antidiag(ent, 1, d + 2, d - 1)
    ent[(d - 1, 0)] = P
    _put_antidiag(ent, d + 1, 2, d - 1, P)
    ent[(n - 1, d)] = ONE
    gens["rho"] = SymMatrix(n, ent)
    eps_ = P if d % 2 == 0 else _pp(2)
    tau = _diag([X] * (d - 1) + [ONE] * d + [X])
    cor = [_diag([_xp(-1), _xp(-1)] + [ONE] * (d - 2) + [X, X] + [ONE] * (d - 2))]
    for i in range(1, d):
        v = [0] * n
        v[i - 1], v[i], v[d + i - 1], v[d + i] = 1, -1, -1, 1
        cor.append(_diag([_xp(e) for e in v]))
    cor.append(_diag([ONE] * (d - 2) + [X, X] + [ONE] * (d - 2) + [_xp(-1), _xp(-1)]))
    return GroupModel("D", d, sym_J(d), True, gens, eps_, standard_beta("D", d),
                      tau, tuple(cor), d)


# -- type A: GL_d+1 ---------------------------------------------------------

def _build_A(d: int) -> GroupModel:
    n = d + 1
    gens: dict[str, SymMatrix] = {}
    for i in range(1, d + 1):
        ent: dict = {}
        _put_identity(ent, 1, n)
        ent[(i - 1, i - 1)] = ZERO
        ent[(i, i)] = ZERO
        ent[(i - 1, i)] = ONE
        ent[(i, i - 1)] = ONE
        gens[f"s{i}"] = SymMatrix(n, ent)
    ent = {}
    for i in range(d):
        ent[(i, i + 1)] = ONE
    ent[(d, 0)] = P
    u = SymMatrix(n, ent)
    gens["u"] = u
    gens["s0"] = u * gens["s1"] * u.inverse()
    tau = _diag([ONE] * d + [_xp(-1)])
    cor = [_diag([_xp(-1)] + [ONE] * (d - 1) + [X])]
    for i in range(1, d + 1):
        v = [0] * n
        v[i - 1], v[i] = 1, -1
        cor.append(_diag([_xp(e) for e in v]))
    m, _ = translation_power(standard_gallery_datum("A", d).phi)
    return GroupModel("A", d, SymMatrix.identity(n), False, gens, P, standard_beta("A", d),
                      tau, tuple(cor), m)


@lru_cache(maxsize=None)
def build_group_model(type_label: str, d: int) -> GroupModel:
    if type_label not in SUPPORTED or not isinstance(d, int) or d < SUPPORTED[type_label]:
        raise MatrixModelError(f"no matrix model for ({type_label!r}, {d!r})")
    return {"C": _build_C, "B": _build_B, "D": _build_D, "A": _build_A}[type_label](d)


# ---------------------------------------------------------------------------
# form, similitude, determinant

def similitude_factor(model: GroupModel, a: SymMatrix) -> Optional[Laurent]:
    """kappa with tA J A = kappa J, or None.  For GL every invertible matrix qualifies."""
    if model.type_label == "A":
        return ONE
    j = model.form
    lhs = a.T * j * a
    i0, j0 = next(iter(j.entries))
    kappa = lhs[i0, j0] * j[i0, j0].unit_inverse()
    return kappa if lhs == j.scale(kappa) else None


def in_group(model: GroupModel, a: SymMatrix) -> bool:
    kappa = similitude_factor(model, a)
    if kappa is None:
        return False
    if not model.similitude:
        if kappa != ONE:
            return False
        if model.type_label == "B" and a.is_monomial():
            return monomial_det(a) == ONE
        return True
    if model.type_label == "D" and a.is_monomial():
        return monomial_det(a) == kappa ** model.d
    return kappa.is_unit()


def monomial_det(a: SymMatrix) -> Laurent:
    if not a.is_monomial():
        raise MatrixModelError("determinant only implemented for monomial matrices")
    perm = [0] * a.n
    prod = ONE
    for (i, j), v in a.entries.items():
        perm[i] = j
        prod = prod * v
    sign = 1
    seen = [False] * a.n
    for i in range(a.n):
        if not seen[i]:
            k, length = i, 0
            while not seen[k]:
                seen[k] = True
                k = perm[k]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return prod * sign


# ---------------------------------------------------------------------------
# root subgroup generators

def _roots_with_generators(model: GroupModel, literal: bool) -> list[tuple[Vector, SymMatrix, tuple[int, int]]]:
    """(alpha, generator, leading 0-based position) for every positive root."""
    t, d, n = model.type_label, model.d, model.n
    out = []
    if t == "A":
        rs = model.root_system
        for i in range(1, d + 2):
            for j in range(i + 1, d + 2):
                out.append((sub(unit(n, i), unit(n, j)), eps(n, i, j), (i - 1, j - 1)))
        return out
    e = lambda i: unit(d, i)
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            # e_i - e_j
            if t == "C" and literal:
                g = eps(n, i, j) * eps(n, i + d, j + d, -1)
            else:
                g = eps(n, i, j) * eps(n, j + d, i + d, -1)
            out.append((sub(e(i), e(j)), g, (i - 1, j - 1)))
            # e_i + e_j
            if t == "C":
                g = eps(n, i, j + d) * eps(n, j, i + d)
            else:
                g = eps(n, i, j + d) * eps(n, j, i + d, -1)
            out.append((add(e(i), e(j)), g, (i - 1, j + d - 1)))
    for i in range(1, d + 1):
        if t == "C":
            out.append((scale(2, e(i)), eps(n, i, i + d), (i - 1, i + d - 1)))
        elif t == "B":
            if literal:
                g = eps(n, i, 2 * d + 1) * eps(n, 2 * d + 1, i + d, -1)
            else:
                # exp of 2X with X = E_{i,2d+1} - E_{2d+1,i+d}
                g = SymMatrix.identity(n) + SymMatrix(n, {
                    (i - 1, 2 * d): 2, (2 * d, i + d - 1): -2, (i - 1, i + d - 1): -2})
            out.append((e(i), g, (i - 1, 2 * d)))
    return out


def root_generators(model: GroupModel, literal: bool = False) -> dict[Vector, SymMatrix]:
    """Root-subgroup generators; ``literal`` selects the displayed product forms."""
    return {a: g for a, g, _ in _roots_with_generators(model, literal)}


def _torus_weight(diag: SymMatrix, pos: tuple[int, int]) -> Laurent:
    a, b = pos
    return diag[a, a] * diag[b, b].unit_inverse()


def conjugation_multiplicities(model: GroupModel, power: Optional[int] = None) -> dict[Vector, int]:
    """m_alpha with phi^k g phi^-k - 1 = p^{m_alpha}(g - 1) on the alpha-weight entries."""
    k = model.phi_power if power is None else power
    phik = model.phi ** k
    if not phik.is_diagonal():
        raise MatrixModelError(f"phi^{k} is not diagonal")
    phik_inv = phik.inverse()
    out: dict[Vector, int] = {}
    for alpha, g, pos in _roots_with_generators(model, literal=False):
        conj = phik * g * phik_inv
        w = _torus_weight(phik, pos)
        c, pe, xe = w.monomial()
        if xe != 0:
            raise MatrixModelError("unexpected x in phi power")
        diff, base = conj - SymMatrix.identity(model.n), g - SymMatrix.identity(model.n)
        for key, v in base.entries.items():
            ratio = _torus_weight(phik, key)
            if diff[key] != v * ratio:
                raise MatrixModelError(f"structural failure for root {alpha}")
            rc, rpe, _ = ratio.monomial()
            if rpe not in (pe, 2 * pe) or rc != (c if rpe == pe else 1):
                raise MatrixModelError(f"conjugate of root {alpha} is not of p-power shape")
        if c != 1:
            raise MatrixModelError(f"sign flip on root {alpha}")
        out[alpha] = pe
    return out


# ---------------------------------------------------------------------------
# image in the extended affine Weyl group

def _full_to_ambient(model: GroupModel, f: list[Fraction]) -> Vector:
    t, d = model.type_label, model.d
    if t in ("C", "D"):
        c = f[0] + f[d]
        return tuple(Fraction(f[i]) - c / 2 for i in range(d))
    if t == "B":
        return tuple(Fraction(f[i]) for i in range(d))
    mean = sum(f, Fraction(0)) / len(f)
    return tuple(Fraction(v) - mean for v in f)


def _ambient_to_full(model: GroupModel, v: Vector) -> list[Fraction]:
    t, d = model.type_label, model.d
    if t in ("C", "D"):
        return list(v) + [-a for a in v]
    if t == "B":
        return list(v) + [-a for a in v] + [Fraction(0)]
    return list(v)


def image_in_extended_weyl(model: GroupModel, a: SymMatrix) -> AffineWeylElement:
    """The class of a monomial matrix (evaluated at x = 1) in the adjoint extended Weyl group."""
    a1 = SymMatrix(a.n, {k: v.at_x1() for k, v in a.entries.items()})
    if not a1.is_monomial():
        raise MatrixModelError("matrix is not monomial")
    sigma = [0] * a1.n
    vals = [Fraction(0)] * a1.n
    for (i, j), v in a1.entries.items():
        sigma[i] = j
        _, pe, _ = v.monomial()
        vals[i] = Fraction(pe)
    lam = _full_to_ambient(model, vals)
    rs = model.root_system
    dim = rs.ambient_dim
    if model.type_label == "A":
        lin = tuple(tuple(Fraction(int(sigma[r] == c)) for c in range(dim)) for r in range(dim))
        return AffineWeylElement(rs, lin, lam)
    cols = []
    for k in range(dim):
        basis = tuple(Fraction(int(k == m)) for m in range(dim))
        f = _ambient_to_full(model, basis)
        cols.append(_full_to_ambient(model, [f[sigma[r]] for r in range(a1.n)]))
    lin = tuple(tuple(cols[c][r] for c in range(dim)) for r in range(dim))
    return AffineWeylElement(rs, lin, lam)


# ---------------------------------------------------------------------------
# torus characters

def torus_params(model: GroupModel, a: SymMatrix) -> tuple[int, ...]:
    """x-exponents of a diagonal x-cocharacter in the torus coordinates.

    C, D: (x_1..x_d, c) for diag(x_1..x_d, c/x_1..c/x_d); B: (x_1..x_d);
    A: (x_1..x_{d+1}).
    """
    if not a.is_diagonal():
        raise MatrixModelError("not diagonal")
    ex = []
    for i in range(a.n):
        c, pe, xe = a[i, i].monomial()
        if pe != 0 or c != 1:
            raise MatrixModelError("not an x-cocharacter")
        ex.append(xe)
    t, d = model.type_label, model.d
    if t in ("C", "D"):
        return tuple(ex[:d]) + (ex[0] + ex[d],)
    if t == "B":
        return tuple(ex[:d])
    return tuple(ex)


def torus_rank(model: GroupModel) -> int:
    return {"C": model.d + 1, "D": model.d + 1, "B": model.d, "A": model.d + 1}[model.type_label]


def _param_cocharacter(model: GroupModel, j: int) -> SymMatrix:
    """The cocharacter x -> (j-th torus coordinate = x, others 1)."""
    t, d, n = model.type_label, model.d, model.n
    ex = [0] * n
    if t in ("C", "D"):
        if j < d:
            ex[j] = 1
            ex[d + j] = -1
        else:
            ex[d:] = [1] * d
    elif t == "B":
        ex[j] = 1
        ex[d + j] = -1
    else:
        ex[j] = 1
    return _diag([_xp(e) for e in ex])


def conjugation_action(model: GroupModel, g: SymMatrix) -> list[list[int]]:
    """Integer matrix of t -> g t g^-1 on torus coordinates (columns = images of basis)."""
    gi = g.inverse()
    cols = [torus_params(model, g * _param_cocharacter(model, j) * gi)
            for j in range(torus_rank(model))]
    return [[cols[c][r] for c in range(len(cols))] for r in range(len(cols))]


def central_cocharacter(model: GroupModel) -> tuple[int, ...]:
    """x -> x * id in torus coordinates."""
    return torus_params(model, _diag([X] * model.n))


# ---------------------------------------------------------------------------
# node permutations and s-offsets of conjugations

def coroot_permutation(model: GroupModel, g: SymMatrix) -> dict[int, int]:
    """pi with g alpha_i^vee g^-1 = alpha_{pi(i)}^vee."""
    gi = g.inverse()
    out = {}
    for i, c in enumerate(model.coroots):
        conj = g * c * gi
        hits = [j for j, c2 in enumerate(model.coroots) if c2 == conj]
        if len(hits) != 1:
            raise MatrixModelError(f"conjugate of alpha_{i}^vee is not a simple coroot")
        out[i] = hits[0]
    return out


def solve_coroot_combination(model: GroupModel, target: SymMatrix) -> tuple[int, ...]:
    """Integers c_0..c_d with prod alpha_i^vee(x)^{c_i} = target(x), minimal in |c|_1."""
    import itertools
    import sympy

    tp = torus_params(model, target)
    cols = [torus_params(model, c) for c in model.coroots]
    m = sympy.Matrix([[cols[j][r] for j in range(len(cols))] for r in range(len(tp))])
    sol, params = m.gauss_jordan_solve(sympy.Matrix(tp))
    free = list(params)
    best = None
    rng = range(-4, 5)
    for vals in itertools.product(rng, repeat=len(free)):
        cand = sol.subs(dict(zip(free, vals)))
        if all(v.is_integer for v in cand):
            c = tuple(int(v) for v in cand)
            key = (sum(abs(v) for v in c), c)
            if best is None or key < best[0]:
                best = (key, c)
    if best is None:
        raise MatrixModelError("no integral coroot combination found")
    return best[1]


def coroot_product(model: GroupModel, coeffs) -> SymMatrix:
    out = SymMatrix.identity(model.n)
    for c, a in zip(coeffs, model.coroots):
        out = out * (a ** c)
    return out


def commutator_with_tau(model: GroupModel, g: SymMatrix) -> SymMatrix:
    """tau(x) * g tau(x)^-1 g^-1."""
    return model.tau * g * model.tau.inverse() * g.inverse()


# ---------------------------------------------------------------------------
# reports

@dataclass
class CheckResult:
    identity_id: str
    status: bool
    witness: str = ""

    def to_json(self, model: str) -> dict:
        return {"model": model, "identity_id": self.identity_id,
                "status": "pass" if self.status else "fail", "witness": self.witness}


@dataclass
class ModelReport:
    model: str
    items: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status for c in self.items)

    def add(self, identity_id: str, lhs, rhs=None) -> None:
        if rhs is None:
            ok, wit = bool(lhs), ""
        else:
            ok = lhs == rhs
            wit = "" if ok else f"lhs={lhs!r} rhs={rhs!r}"
        self.items.append(CheckResult(identity_id, ok, wit))

    def failures(self) -> list[CheckResult]:
        return [c for c in self.items if not c.status]

    def to_json(self) -> list[dict]:
        return [c.to_json(self.model) for c in self.items]


def _label(model: GroupModel) -> str:
    return {"C": "GSp", "B": "SO", "D": "GSO", "A": "GL"}[model.type_label] + f"_{model.d}"


def expected_phi_power(model: GroupModel) -> Optional[SymMatrix]:
    t, d = model.type_label, model.d
    if t == "C":
        sign = (-1) ** (d - 1)
        return _diag([_pp(d + 1) * sign] * d + [_pp(d - 1) * sign] * d)
    if t == "B":
        return _diag([_pp(2)] + [ONE] * (d - 1) + [_pp(-2)] + [ONE] * (d - 1) + [ONE])
    if t == "D":
        a, b = (d + 2, d - 2) if d % 2 == 0 else (2 * d + 2, 2 * d - 2)
        return _diag([_pp(a)] * (d - 1) + [_pp(b)] * d + [_pp(a)])
    return None


def verify_phi_power(model: GroupModel) -> ModelReport:
    rep = ModelReport(_label(model))
    phik = model.phi ** model.phi_power
    exp = expected_phi_power(model)
    if exp is not None:
        rep.add(f"phi^{model.phi_power} diagonal display", phik, exp)
    else:
        rep.add(f"phi^{model.phi_power} is diagonal", phik.is_diagonal())
    # the Weyl image of phi is the gallery's phi
    gal = standard_gallery_datum(model.type_label, model.d)
    rep.add("image of phi equals the gallery element", image_in_extended_weyl(model, model.phi), gal.phi)
    return rep


def beta_tilde(model: GroupModel) -> tuple[int, ...]:
    """beta composed with the node permutation of u."""
    pi = coroot_permutation(model, model.u)
    return tuple(pi[b] for b in model.beta)


def gamma_delta(model: GroupModel, literal: bool = False) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Index maps gamma, delta on [1, 2d-2] for type D (values listed for i = 1..2d-2)."""
    d = model.d
    beta = model.beta
    b = lambda i: beta[i - 1]
    gam, dele = {}, {}
    gam[1], gam[d - 1], gam[d], gam[2 * d - 2] = 1, d, 0, d - 1
    dele[1], dele[d - 1], dele[d], dele[2 * d - 2] = 0, d - 1, 1, d
    shift = 2 if literal else 1
    for i in list(range(2, d - 1)) + list(range(d + 1, 2 * d - 2)):
        gam[i] = dele[i] = b(2 * d - shift - i)
    return tuple(gam[i] for i in range(1, 2 * d - 1)), tuple(dele[i] for i in range(1, 2 * d - 1))


def verify_commutations_and_coroot_identities(model: GroupModel) -> ModelReport:
    rep = ModelReport(_label(model))
    t, d, n = model.type_label, model.d, model.n
    ident = SymMatrix.identity(n)
    u = model.u
    # membership of generators
    for name, g in model.generators.items():
        if name in ("omega", "rho"):
            continue
        rep.add(f"{name} lies in the group", in_group(model, g))
        rep.add(f"{name} is monomial", g.is_monomial())
    rep.add("tau(x) lies in the group", in_group(model, model.tau))
    for i, c in enumerate(model.coroots):
        rep.add(f"alpha_{i}^vee(x) lies in the group", in_group(model, c))
    rep.add("tau(x) phi = phi tau(x)", model.tau * model.phi, model.phi * model.tau)
    # Weyl images of generators
    rs = model.root_system
    from .affine_weyl import simple_affine_reflection, omega_elements, node_permutation
    for i in range(d + 1):
        rep.add(f"image of s{i} is the simple affine reflection",
                image_in_extended_weyl(model, model.s(i)), simple_affine_reflection(rs, i))
    img_u = image_in_extended_weyl(model, u)
    rep.add("image of u has length zero", img_u in omega_elements(rs))
    # braid relations at Weyl level
    from .affine_weyl import coxeter_order
    imgs = [image_in_extended_weyl(model, model.s(i)) for i in range(d + 1)]
    for i in range(d + 1):
        for j in range(i + 1, d + 1):
            x = imgs[i] * imgs[j]
            try:
                m = coxeter_order(rs, i, j)
            except AffineWeylError:  # affine A_1: s0 s1 has infinite order
                rep.add(f"s{i}s{j} has infinite order for the images",
                        all(x ** k != imgs[0] ** 0 for k in range(1, 13)))
                continue
            rep.add(f"(s{i}s{j})^{m} = 1 for the images", x ** m == (imgs[0] ** 0))
    # root generators
    for alpha, g in root_generators(model).items():
        rep.add(f"root generator for {tuple(str(a) for a in alpha)} lies in the group", in_group(model, g))
    m_tab = conjugation_multiplicities(model)
    rep.add("m_alpha table computed", bool(m_tab))

    if t == "C":
        rep.add("u^2 = p id", u * u, SymMatrix.scalar(n, P))
        rep.add("prod alpha_i^vee = 1", coroot_product(model, [1] * (d + 1)), ident)
        com = commutator_with_tau(model, u)
        rep.add("tau u tau^-1 u^-1 = diag(xE, x^-1E)", com, _diag([X] * d + [_xp(-1)] * d))
        rep.add("tau u tau^-1 u^-1 = sum (i+1) alpha_i^vee",
                com, coroot_product(model, [i + 1 for i in range(d + 1)]))
        perm = node_permutation(img_u)
        rep.add("u s_i u^-1 = s_{d-i} in the Weyl group", all(perm[i] == d - i for i in range(d + 1)))
    elif t == "B":
        rep.add("u^2 = 1", u * u, ident)
        rep.add("alpha0 alpha1 alphad prod alpha_i^2 = 1",
                coroot_product(model, [1, 1] + [2] * (d - 2) + [1]), ident)
        com = commutator_with_tau(model, u)
        rep.add("tau u tau^-1 u^-1 = diag(x^2, E, x^-2, E, 1)",
                com, _diag([_xp(2)] + [ONE] * (d - 1) + [_xp(-2)] + [ONE] * (d - 1) + [ONE]))
        rep.add("tau u tau^-1 u^-1 = alpha_1^vee - alpha_0^vee",
                com, coroot_product(model, [-1, 1] + [0] * (d - 1)))
        bt = beta_tilde(model)
        rep.add("u phi u^-1 = s_{beta~(1)} ... s_{beta~(2d-1)}", u * model.phi * u.inverse(),
                phi_of_word(model, bt))
    elif t == "D":
        w, rho = model.generators["omega"], model.generators["rho"]
        rep.add("u^2 = 1", u * u, ident)
        rep.add("omega u = u omega", w * u, u * w)
        rep.add("omega^2 = p id", w * w, SymMatrix.scalar(n, P))
        for i in range(d + 1):
            rep.add(f"omega s{i} omega^-1 = s{d - i}", w * model.s(i) * w.inverse(), model.s(d - i))
        rep.add("rho^2 = p u", rho * rho, u.scale(P))
        rho_i = rho.inverse()
        for i in range(2, d - 1):
            rep.add(f"rho s{i} rho^-1 = s{d - i}", rho * model.s(i) * rho_i, model.s(d - i))
        for i, j in ((d - 1, 1), (d, 0), (0, d - 1), (1, d)):
            rep.add(f"rho s{i} rho^-1 = s{j}", rho * model.s(i) * rho_i, model.s(j))
        rep.add("omega lies in GSO iff d even", in_group(model, w) == (d % 2 == 0))
        rep.add("rho lies in GSO iff d odd", in_group(model, rho) == (d % 2 == 1))
        rep.add("alpha0 alpha1 alpha_{d-1} alpha_d prod alpha_i^2 = 1",
                coroot_product(model, [1, 1] + [2] * (d - 3) + [1, 1]), ident)
        com = commutator_with_tau(model, u)
        rep.add("tau u tau^-1 u^-1 = diag(x, E, x^-1, x^-1, E, x)", com,
                _diag([X] + [ONE] * (d - 2) + [_xp(-1), _xp(-1)] + [ONE] * (d - 2) + [X]))
        rep.add("tau u tau^-1 u^-1 = sum_{1}^{d-1} alpha_i^vee", com,
                coroot_product(model, [0] + [1] * (d - 1) + [0]))
        if d % 2 == 0:
            com = commutator_with_tau(model, w)
            rep.add("tau omega tau^-1 omega^-1 = diag(1, xE, 1, 1, x^-1E, 1)", com,
                    _diag([ONE] + [X] * (d - 2) + [ONE, ONE] + [_xp(-1)] * (d - 2) + [ONE]))
            coeffs = [0, 0] + [i - 1 for i in range(2, d - 1)] + [(d - 2) // 2, (d - 2) // 2]
            rep.add("tau omega tau^-1 omega^-1 = coroot combination", com, coroot_product(model, coeffs))
            lhs = w * model.tau * w.inverse() * w * u * model.tau.inverse() * u.inverse() * w.inverse()
            rep.add("omega-conjugate of tau u tau^-1 u^-1 is unchanged", lhs, commutator_with_tau(model, u))
        else:
            com = commutator_with_tau(model, rho)
            rep.add("tau rho tau^-1 rho^-1 = diag(1, xE, x^-1, 1, x^-1E, x)", com,
                    _diag([ONE] + [X] * (d - 2) + [_xp(-1), ONE] + [_xp(-1)] * (d - 2) + [X]))
            coeffs = [0, 0] + [i - 1 for i in range(2, d - 1)] + [(d - 1) // 2, (d - 3) // 2]
            rep.add("tau rho tau^-1 rho^-1 = coroot combination", com, coroot_product(model, coeffs))
            lhs = rho * model.tau * rho_i * rho * u * model.tau.inverse() * u.inverse() * rho_i
            rep.add("rho tau rho^-1 rho u tau^-1 u^-1 rho^-1 = diag(x, E, x, x^-1, E, x^-1)", lhs,
                    _diag([X] + [ONE] * (d - 2) + [X, _xp(-1)] + [ONE] * (d - 2) + [_xp(-1)]))
            rep.add("... = alpha_d^vee + sum_{1}^{d-2} alpha_i^vee", lhs,
                    coroot_product(model, [0] + [1] * (d - 2) + [0, 1]))
            gam, dele = gamma_delta(model)
            eps2 = _pp(2)
            rep.add("rho phi rho^-1 = p^2 s_gamma(1) ... s_gamma(2d-2)", rho * model.phi * rho_i,
                    _word_with_scalar(model, gam, eps2))
            rep.add("rho^-1 phi rho = p^2 s_delta(1) ... s_delta(2d-2)", rho_i * model.phi * rho,
                    _word_with_scalar(model, dele, eps2))
        nexp = P if d % 2 == 0 else _pp(2)
        rep.add("u phi u^-1 = p^n s_beta~(1) ... s_beta~(2d-2)", u * model.phi * u.inverse(),
                _word_with_scalar(model, beta_tilde(model), nexp))
    else:  # A
        rep.add("u^{d+1} = p id", u ** (d + 1), SymMatrix.scalar(n, P))
        explicit = {(k, k): ONE for k in range(1, d)}
        explicit[(0, d)] = _pp(-1)
        explicit[(d, 0)] = P
        rep.add("s0 = u s1 u^-1 equals the explicit matrix", model.s(0), SymMatrix(n, explicit))
        rep.add("prod alpha_i^vee = 1", coroot_product(model, [1] * (d + 1)), ident)
        for j in range(1, d + 1):
            uj = u ** j
            conj = uj.inverse() * model.tau * uj
            target = model.tau * conj.inverse()
            rep.add(f"tau (u^-{j} tau u^{j})^-1 = sum_{{i={j}}}^{{d}} alpha_i^vee", target,
                    coroot_product(model, [0] + [1 if i >= j else 0 for i in range(1, d + 1)]))
        rep.add("u phi u^-1 = p s_{pi(beta)}", u * model.phi * u.inverse(),
                _word_with_scalar(model, beta_tilde(model), P))
    return rep


def _word_with_scalar(model: GroupModel, word, scalar: Laurent) -> SymMatrix:
    out = SymMatrix.scalar(model.n, scalar)
    for i in word:
        out = out * model.s(i)
    return out


def full_report(model: GroupModel) -> ModelReport:
    rep = verify_phi_power(model)
    rep.items += verify_commutations_and_coroot_identities(model).items
    return rep
