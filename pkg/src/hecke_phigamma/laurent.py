"""Sparse Laurent polynomials in two commuting units p, x over Z, and sparse
matrices with such entries."""
from __future__ import annotations

from typing import Iterable, Mapping, Optional, Union

Exp = tuple[int, int]


class LaurentError(ArithmeticError):
    pass


class Laurent:
    """An element of Z[p, p^-1, x, x^-1], stored as {(a, b): coeff} for coeff p^a x^b."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Exp, int]] = None):
        self.terms: dict[Exp, int] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, c: int) -> "Laurent":
        return cls({(0, 0): c})

    @classmethod
    def mono(cls, c: int = 1, p: int = 0, x: int = 0) -> "Laurent":
        return cls({(p, x): c})

    @classmethod
    def coerce(cls, v: Union["Laurent", int]) -> "Laurent":
        return v if isinstance(v, Laurent) else cls.const(int(v))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = Laurent.coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-Laurent.coerce(other))

    def __rsub__(self, other):
        return Laurent.coerce(other) - self

    def __mul__(self, other):
        other = Laurent.coerce(other)
        out: dict[Exp, int] = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                k = (a + c, b + d)
                out[k] = out.get(k, 0) + u * v
        return Laurent(out)

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    def unit_inverse(self) -> "Laurent":
        if not self.is_unit():
            raise LaurentError(f"{self} is not a unit")
        (a, b), c = next(iter(self.terms.items()))
        return Laurent({(-a, -b): c})

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            return self.unit_inverse() ** (-n)
        out = Laurent.const(1)
        for _ in range(n):
            out = out * self
        return out

    def monomial(self) -> tuple[int, int, int]:
        """(coeff, p-exponent, x-exponent) of a single-term element."""
        if len(self.terms) != 1:
            raise LaurentError(f"{self} is not a monomial")
        (a, b), c = next(iter(self.terms.items()))
        return c, a, b

    def at_x1(self) -> "Laurent":
        out: dict[Exp, int] = {}
        for (a, _), c in self.terms.items():
            out[(a, 0)] = out.get((a, 0), 0) + c
        return Laurent(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            m = "*".join(s for s in (f"p^{a}" if a else "", f"x^{b}" if b else "") if s)
            parts.append(f"{c}*{m}" if m else str(c))
        return " + ".join(parts)


ZERO = Laurent()
ONE = Laurent.const(1)
P = Laurent.mono(1, 1, 0)
X = Laurent.mono(1, 0, 1)


class SymMatrix:
    """Sparse n x n matrix over Laurent; entries keyed by 0-based (row, col)."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Optional[Mapping[tuple[int, int], Union[Laurent, int]]] = None):
        self.n = n
        self.entries: dict[tuple[int, int], Laurent] = {}
        for k, v in (entries or {}).items():
            v = Laurent.coerce(v)
            if v:
                self.entries[k] = v

    # -- constructors -------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "SymMatrix":
        return cls(n, {(i, i): ONE for i in range(n)})

    @classmethod
    def diag(cls, values: Iterable[Union[Laurent, int]]) -> "SymMatrix":
        vals = list(values)
        return cls(len(vals), {(i, i): v for i, v in enumerate(vals)})

    @classmethod
    def scalar(cls, n: int, v: Union[Laurent, int]) -> "SymMatrix":
        return cls.diag([v] * n)

    @classmethod
    def elementary(cls, n: int, i: int, j: int, c: Union[Laurent, int] = 1) -> "SymMatrix":
        """eps_{i,j}: identity plus c at (i, j)  (0-based, i != j)."""
        m = cls.identity(n)
        m.entries[(i, j)] = Laurent.coerce(c)
        return m

    # -- arithmetic -----------------------------------------------------------
    def __getitem__(self, key: tuple[int, int]) -> Laurent:
        return self.entries.get(key, ZERO)

    def __eq__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, ZERO) + v
        return SymMatrix(self.n, out)

    def __neg__(self):
        return SymMatrix(self.n, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        return self + (-other)

    def scale(self, c: Union[Laurent, int]) -> "SymMatrix":
        c = Laurent.coerce(c)
        return SymMatrix(self.n, {k: v * c for k, v in self.entries.items()})

    def __mul__(self, other):
        if not isinstance(other, SymMatrix):
            return self.scale(other)
        if self.n != other.n:
            raise LaurentError("size mismatch")
        rows: dict[int, list[tuple[int, Laurent]]] = {}
        for (k, j), v in other.entries.items():
            rows.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], Laurent] = {}
        for (i, k), u in self.entries.items():
            for j, v in rows.get(k, ()):
                key = (i, j)
                out[key] = out.get(key, ZERO) + u * v
        return SymMatrix(self.n, out)

    def __rmul__(self, c):
        return self.scale(c)

    def transpose(self) -> "SymMatrix":
        return SymMatrix(self.n, {(j, i): v for (i, j), v in self.entries.items()})

    @property
    def T(self) -> "SymMatrix":
        return self.transpose()

    def is_monomial(self) -> bool:
        rows = [0] * self.n
        cols = [0] * self.n
        for (i, j), v in self.entries.items():
            if not v.is_unit():
                return False
            rows[i] += 1
            cols[j] += 1
        return all(r == 1 for r in rows) and all(c == 1 for c in cols)

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self.entries)

    def diagonal(self) -> list[Laurent]:
        return [self[i, i] for i in range(self.n)]

    def inverse(self) -> "SymMatrix":
        """Inverse of a monomial matrix, or of a unipotent matrix (I + N, N nilpotent)."""
        if self.is_monomial():
            return SymMatrix(self.n, {(j, i): v.unit_inverse() for (i, j), v in self.entries.items()})
        ident = SymMatrix.identity(self.n)
        nil = self - ident
        out = ident
        term = ident
        for _ in range(self.n):
            term = term * (-nil)
            if not term.entries:
                return out
            out = out + term
        raise LaurentError("matrix is neither monomial nor unipotent")

    def __pow__(self, k: int) -> "SymMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        out = SymMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self, g: "SymMatrix") -> "SymMatrix":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def to_rows(self) -> list[list[str]]:
        return [[repr(self[i, j]) for j in range(self.n)] for i in range(self.n)]

    def __repr__(self):
        return "SymMatrix(" + "; ".join(
            ", ".join(repr(self[i, j]) for j in range(self.n)) for i in range(self.n)) + ")"
