"""Arithmetic in GF(2^h), polynomial basis.

Elements are plain ints in ``[0, q)``; bit ``i`` is the coefficient of
``x**i``.  Addition is XOR.
"""
from __future__ import annotations

MAX_DEGREE = 16
TABLE_MAX_DEGREE = 12


class FieldError(ValueError):
    pass


def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _poly_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(2, 1 << (deg // 2 + 1)):
        if _poly_mod(poly, d) == 0:
            return False
    return True


def smallest_irreducible(h: int) -> int:
    for cand in range(1 << h, 1 << (h + 1)):
        if is_irreducible(cand):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {h}")  # pragma: no cover


class Field:
    """GF(2^h) with the lexicographically smallest irreducible modulus.

    Multiplication goes through exp/log tables for ``h <= 12`` and falls back
    to carry-less multiply-and-reduce above that.  Instances are immutable.
    """

    def __init__(self, h: int):
        if not isinstance(h, int) or not 1 <= h <= MAX_DEGREE:
            raise FieldError(f"extension degree must be in 1..{MAX_DEGREE}, got {h!r}")
        self.h = h
        self.q = 1 << h
        self.modulus = smallest_irreducible(h)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self.generator = self._find_generator()
        if h <= TABLE_MAX_DEGREE:
            self._build_tables()

    def __repr__(self):
        return f"Field(h={self.h}, modulus={self.modulus:#x})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.h == self.h

    def __hash__(self):
        return hash(("GF2h", self.h))

    @property
    def elements(self) -> range:
        return range(self.q)

    def _slow_mul(self, a: int, b: int) -> int:
        return _poly_mod(_clmul(a, b), self.modulus)

    def _find_generator(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % d for d in range(2, int(p**0.5) + 1))]
        for g in range(2, self.q):
            if all(self._slow_pow(g, n // p) != 1 for p in primes):
                return g
        raise AssertionError("multiplicative group has no generator")  # pragma: no cover

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [0] * self.q
        x = 1
        for i in range(n):
            exp[i] = exp[i + n] = x
            log[x] = i
            x = self._slow_mul(x, self.generator)
        if x != 1 or len(set(exp[:n])) != n:
            raise AssertionError("generator does not cover the multiplicative group")
        self._exp, self._log = exp, log

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldError(f"{a!r} is not an element of GF({self.q})")
        return a

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^h)")
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._slow_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._slow_pow(a, e)

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(h-1)); always 0 or 1."""
        t, x = 0, a
        for _ in range(self.h):
            t ^= x
            x = self.mul(x, x)
        return t


def find_irreducible_lambda(F: Field) -> int:
    """Least lambda such that y^2 + lambda*y + 1 has no root in F."""
    if F.h < 2:
        raise FieldError("an irreducible y^2 + lambda*y + 1 needs h >= 2")
    for lam in range(1, F.q):
        if all(F.mul(y, y) ^ F.mul(lam, y) ^ 1 for y in F.elements):
            return lam
    raise AssertionError(f"no irreducible quadratic found in GF({F.q})")  # pragma: no cover
