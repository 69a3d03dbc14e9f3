"""The finite field F_q, q = p^f, with elements encoded as integers 0..q-1.

An element a_0 + a_1 X + ... + a_{f-1} X^{f-1} (mod a fixed monic irreducible
polynomial) is encoded as sum a_i p^i.  For f = 1 this is plain arithmetic mod p.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, int(n ** 0.5) + 1))


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    f = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, f - 1, -1):
        c = prod[k]
        if c:
            for j in range(f + 1):
                prod[k - f + j] = (prod[k - f + j] - c * mod[j]) % p
    return (prod + [0] * f)[:f]


def _has_root_free_factorization(mod: list[int], p: int) -> bool:
    """Irreducibility by brute force: no monic factor of degree <= f/2."""
    f = len(mod) - 1
    for deg in range(1, f // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            fac = list(tail) + [1]
            # polynomial long division
            rem = list(mod)
            for k in range(f, deg - 1, -1):
                c = rem[k]
                if c:
                    for j in range(deg + 1):
                        rem[k - deg + j] = (rem[k - deg + j] - c * fac[j]) % p
            if not any(rem[:deg]):
                return False
    return True


@lru_cache(maxsize=None)
def _modulus(p: int, f: int) -> tuple[int, ...]:
    """The lexicographically first monic irreducible polynomial of degree f (low-to-high)."""
    for tail in itertools.product(range(p), repeat=f):
        cand = list(tail) + [1]
        if f == 1 or (cand[0] != 0 and _has_root_free_factorization(cand, p)):
            return tuple(cand)
    raise FieldError("no irreducible polynomial found")


@dataclass(frozen=True)
class FiniteField:
    p: int
    f: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.f < 1:
            raise FieldError("degree must be positive")

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def modulus(self) -> tuple[int, ...]:
        return _modulus(self.p, self.f)

    # -- encoding -------------------------------------------------------------
    def _vec(self, a: int) -> list[int]:
        out = []
        for _ in range(self.f):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _enc(self, v: list[int]) -> int:
        return sum(c * self.p ** i for i, c in enumerate(v))

    def __call__(self, a: int) -> int:
        """Image of an integer (prime-field element)."""
        return a % self.p

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    # -- arithmetic -------------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        return self._enc([(x + y) % self.p for x, y in zip(self._vec(a), self._vec(b))])

    def neg(self, a: int) -> int:
        if self.f == 1:
            return (-a) % self.p
        return self._enc([(-x) % self.p for x in self._vec(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a * b) % self.p
        return self._mul_cached(a, b)

    @lru_cache(maxsize=None)
    def _mul_cached(self, a: int, b: int) -> int:
        return self._enc(_poly_mulmod(self._vec(a), self._vec(b), list(self.modulus), self.p))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.f == 1:
            return pow(a, e, self.p)
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        if self.f == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def scalar(self, n: int) -> int:
        """n * 1."""
        return n % self.p

    def iter_units(self) -> Iterator[int]:
        return iter(range(1, self.q))

    def to_json(self) -> dict:
        return {"p": self.p, "f": self.f, "modulus": list(self.modulus)}


def primitive_root(p: int) -> int:
    """Smallest generator of F_p^x."""
    if p == 2:
        return 1
    phi = p - 1
    primes = [r for r in range(2, phi + 1) if phi % r == 0 and is_prime(r)]
    for g in range(2, p):
        if all(pow(g, phi // r, p) != 1 for r in primes):
            return g
    raise FieldError("no primitive root")
