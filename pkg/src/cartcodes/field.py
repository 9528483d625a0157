"""Exact arithmetic in small finite fields F_{p^e}.

Elements are plain integers in [0, q): the base-p digits of a code are its
coefficients over the polynomial basis, so 0 is the additive and 1 the
multiplicative identity, and for e = 1 arithmetic is just integers mod p.
Integer codes keep matrices and CLI output bit-reproducible and let hot
loops run on dense lookup tables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import (
    FieldMismatchError,
    NotADivisorError,
    NotPrimeError,
    TooLargeError,
)

DEFAULT_MAX_FIELD = 1 << 20
TABLE_LIMIT = 2048
ENV_MAX_FIELD = "CARTESIAN_MAX_FIELD"


def max_field_size() -> int:
    """Field-size cap; override with the CARTESIAN_MAX_FIELD environment variable."""
    raw = os.environ.get(ENV_MAX_FIELD)
    return int(raw) if raw else DEFAULT_MAX_FIELD


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fields here are small."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _digits(m: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(m % p)
        m //= p
    return out


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    # remainder of num by a monic den over F_p, coefficients little-endian
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return num[:dd]


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e over F_p with the smallest integer encoding.

    Candidates are scanned in encoding order and rejected by trial division
    against every monic polynomial of degree <= e/2.
    """
    if e == 1:
        return (0, 1)
    for m in range(p**e, 2 * p**e):
        cand = _digits(m, p, e + 1)
        reducible = False
        for deg in range(1, e // 2 + 1):
            for nn in range(p**deg, 2 * p**deg):
                div = _digits(nn, p, deg + 1)
                if not any(_poly_rem(cand, div, p)):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return tuple(cand)
    raise AssertionError("no irreducible polynomial of degree %d over F_%d" % (e, p))


@dataclass(frozen=True)
class Subgroup:
    """Cyclic subgroup of the unit group; elements sorted by code."""

    order: int
    generator: int
    elements: tuple[int, ...]


class FieldTables:
    """Dense int64 lookup tables for vectorized arithmetic on codes."""

    __slots__ = ("q", "add", "sub", "neg", "mul", "inv")

    def __init__(self, q, add, sub, neg, mul, inv):
        self.q = q
        self.add = add
        self.sub = sub
        self.neg = neg
        self.mul = mul
        self.inv = inv  # inv[0] is unused and left at 0


class Field:
    """The finite field F_{p^e} with integer-coded elements."""

    __slots__ = ("p", "e", "q", "modulus", "_tables", "_primitive", "_unit_factors")

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = tuple(modulus)
        self._tables = None
        self._primitive = None
        self._unit_factors = None

    def __repr__(self):
        return f"Field({self.p})" if self.e == 1 else f"Field({self.p}^{self.e})"

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    # -- element helpers ----------------------------------------------------

    def validate(self, a) -> int:
        if isinstance(a, (int, np.integer)) and 0 <= a < self.q:
            return int(a)
        raise FieldMismatchError(f"{a!r} is not an element code of {self!r}")

    def elements(self) -> range:
        return range(self.q)

    def coeffs(self, a: int) -> list[int]:
        """Polynomial-basis coefficients of a code, constant term first."""
        return _digits(a, self.p, self.e)

    def from_coeffs(self, cs) -> int:
        code = 0
        for c in reversed(list(cs)):
            code = code * self.p + c % self.p
        return code

    # -- arithmetic -----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        a = self.validate(a)
        b = self.validate(b)
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        m = 1
        while a or b:
            out += (a % p + b % p) % p * m
            a //= p
            b //= p
            m *= p
        return out

    def neg(self, a: int) -> int:
        a = self.validate(a)
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        m = 1
        while a:
            out += (-(a % p)) % p * m
            a //= p
            m *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        a = self.validate(a)
        b = self.validate(b)
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        p, e = self.p, self.e
        ca = self.coeffs(a)
        cb = self.coeffs(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for i in range(2 * e - 2, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * mod[j]) % p
        return self.from_coeffs(prod[:e])

    def pow(self, a: int, k: int) -> int:
        """Square-and-multiply exponentiation; negative k inverts first."""
        a = self.validate(a)
        if k < 0:
            return self.pow(self.inv(a), -k)
        if self.e == 1:
            return pow(a, k, self.p)
        out = 1
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return out

    def inv(self, a: int) -> int:
        a = self.validate(a)
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self!r}")
        if self.e == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # -- multiplicative structure ----------------------------------------------

    def _unit_factorization(self) -> dict[int, int]:
        if self._unit_factors is None:
            self._unit_factors = factorize(self.q - 1) if self.q > 2 else {}
        return self._unit_factors

    def element_order(self, a: int) -> int:
        a = self.validate(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        order = self.q - 1
        for r in self._unit_factorization():
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    def primitive_element(self) -> int:
        """Smallest code whose multiplicative order is q - 1."""
        if self._primitive is None:
            target = self.q - 1
            for a in range(1, self.q):
                if self.element_order(a) == target:
                    self._primitive = a
                    break
        return self._primitive

    def subgroup_of_order(self, k: int) -> Subgroup:
        """The unique cyclic subgroup of order k; k must divide q - 1."""
        if k < 1 or (self.q - 1) % k != 0:
            raise NotADivisorError(f"{k} does not divide q - 1 = {self.q - 1}")
        g = self.pow(self.primitive_element(), (self.q - 1) // k)
        elems = []
        x = 1
        for _ in range(k):
            elems.append(x)
            x = self.mul(x, g)
        return Subgroup(order=k, generator=g, elements=tuple(sorted(elems)))

    # -- lookup tables -----------------------------------------------------------

    def tables(self) -> FieldTables:
        """Dense q x q operation tables; only available for q <= TABLE_LIMIT."""
        if self._tables is None:
            if self.q > TABLE_LIMIT:
                raise TooLargeError(
                    f"q = {self.q} exceeds the table limit {TABLE_LIMIT}"
                )
            self._tables = self._build_tables()
        return self._tables

    def _build_tables(self) -> FieldTables:
        q = self.q
        if self.e == 1:
            idx = np.arange(q, dtype=np.int64)
            add = (idx[:, None] + idx[None, :]) % q
            sub = (idx[:, None] - idx[None, :]) % q
            neg = (-idx) % q
            mul = (idx[:, None] * idx[None, :]) % q
            inv = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                inv[a] = pow(a, -1, q)
            return FieldTables(q, add, sub, neg, mul, inv)

        p, e = self.p, self.e
        codes = np.arange(q, dtype=np.int64)
        coeffs = np.zeros((q, e), dtype=np.int16)
        for j in range(e):
            coeffs[:, j] = (codes // p**j) % p
        weights = np.array([p**j for j in range(e)], dtype=np.int64)
        sums = (coeffs[:, None, :] + coeffs[None, :, :]) % p
        add = (sums.astype(np.int64) * weights).sum(axis=2)
        neg = (((p - coeffs) % p).astype(np.int64) * weights).sum(axis=1)
        sub = add[:, neg]
        # multiplication through discrete logs over a primitive element
        g = self.primitive_element()
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self.mul(x, g)
        mul = np.zeros((q, q), dtype=np.int64)
        lu = log[1:]
        mul[1:, 1:] = exp[(lu[:, None] + lu[None, :]) % (q - 1)]
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-lu) % (q - 1)]
        return FieldTables(q, add, sub, neg, mul, inv)


_FIELD_CACHE: dict[tuple[int, int], Field] = {}


def make_field(p: int, e: int = 1) -> Field:
    """Construct F_{p^e} with the canonical smallest-encoding modulus.

    Deterministic: repeated calls yield identical moduli (and the same
    cached instance).
    """
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    q = p**e
    cap = max_field_size()
    if q > cap:
        raise TooLargeError(f"q = {q} exceeds the field-size cap {cap}")
    key = (p, e)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, e, _smallest_irreducible(p, e))
    return _FIELD_CACHE[key]


def field_for_order(q: int) -> Field:
    """F_q for a prime-power q, factored automatically."""
    if q < 2:
        raise NotPrimeError(f"{q} is not a prime power")
    fs = factorize(q)
    if len(fs) != 1:
        raise NotPrimeError(f"{q} is not a prime power")
    [(p, e)] = fs.items()
    return make_field(p, e)
