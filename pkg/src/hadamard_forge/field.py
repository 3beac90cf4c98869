"""Arithmetic in GF(p^r) for odd p, and the quadratic character.

Elements are identified with their index in a canonical enumeration: the
element ``c_0 + c_1 x + ... + c_{r-1} x^{r-1}`` has index
``c_0 + c_1 p + ... + c_{r-1} p^{r-1}``.  Index 0 is zero, index 1 is one, and
for prime fields the index is the residue itself.

The defining polynomial is the lexicographically smallest monic irreducible
of degree r, comparing coefficient tuples ``(c_0, ..., c_{r-1})`` from the
constant term upward.  Two calls to :func:`make_field` with the same
arguments therefore give identical fields.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    EvenCharacteristicError,
    FieldMismatchError,
    NotPrimeError,
    NotPrimePowerError,
    SizeCapError,
)

SIZE_CAP = 10_000

ELEMENT_ORDER = "base-p digits of polynomial coefficients, constant term least significant"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, r)`` with ``n == p**r`` and p prime, or None."""
    if n < 2:
        return None
    p = next(d for d in itertools.count(2) if n % d == 0 or d * d > n)
    if n % p != 0:
        p = n
    r = 0
    while n % p == 0:
        n //= p
        r += 1
    return (p, r) if n == 1 else None


def is_odd_prime_power(n: int) -> bool:
    pp = prime_power(n)
    return pp is not None and pp[0] != 2


# -- polynomials over GF(p), coefficient tuples low degree first -------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    a = _trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for k, mk in enumerate(m):
            a[shift + k] = (a[shift + k] - lead * mk) % p
        a = _trim(a)
    return a


def _monic_polys(degree, p):
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(poly, p) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim(poly)
    r = len(poly) - 1
    if r < 1:
        return False
    for d in range(1, r // 2 + 1):
        for g in _monic_polys(d, p):
            if not _poly_rem(poly, g, p):
                return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    # product() varies the last position fastest, so c_0 is the most significant key
    for low in itertools.product(range(p), repeat=r):
        poly = low + (1,)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {r} over GF({p})")


class PrimePowerField:
    """GF(p^r) with canonical element order and precomputed tables.

    Use :func:`make_field` rather than constructing this directly.
    """

    def __init__(self, p: int, r: int, modulus: tuple[int, ...]):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = tuple(modulus)

        idx = np.arange(self.q, dtype=np.int64)
        self._weights = p ** np.arange(r, dtype=np.int64)
        self._digits = (idx[:, None] // self._weights[None, :]) % p
        self._digits.setflags(write=False)

        self._exp, self._log = self._build_log_tables()
        self._chi = self._build_character()

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.r}, modulus={self.modulus})"

    def __eq__(self, other):
        if not isinstance(other, PrimePowerField):
            return NotImplemented
        return (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    # -- construction helpers ------------------------------------------------

    def _polymul_index(self, a: int, b: int) -> int:
        p, r = self.p, self.r
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * r - 1)
        for i in range(r):
            if da[i]:
                for j in range(r):
                    prod[i + j] = (prod[i + j] + int(da[i]) * int(db[j])) % p
        rem = _poly_rem(prod, self.modulus, p) if r > 1 else [prod[0] % p]
        return sum(int(c) * p**k for k, c in enumerate(rem))

    def _build_log_tables(self):
        q = self.q
        for g in range(2, q) if q > 2 else [1]:
            exp = np.empty(q - 1, dtype=np.int64)
            x = 1
            for k in range(q - 1):
                exp[k] = x
                x = self._polymul_index(x, g)
                if x == 1 and k < q - 2:
                    break
            else:
                log = np.full(q, -1, dtype=np.int64)
                log[exp] = np.arange(q - 1)
                exp.setflags(write=False)
                log.setflags(write=False)
                return exp, log
        raise AssertionError(f"no generator found for {self!r}")

    def _build_character(self):
        nonzero = np.arange(1, self.q)
        squares = self.mul(nonzero, nonzero)
        chi = np.full(self.q, -1, dtype=np.int8)
        chi[0] = 0
        chi[squares] = 1
        chi.setflags(write=False)
        return chi

    # -- elements -------------------------------------------------------------

    @property
    def elements(self) -> list[tuple[int, ...]]:
        """Coefficient tuples (constant term first) in canonical order."""
        return [tuple(int(c) for c in row) for row in self._digits]

    def __len__(self):
        return self.q

    def __iter__(self):
        return (FieldElement(self, i) for i in range(self.q))

    def __call__(self, value) -> FieldElement:
        """Element from an index, or from a coefficient sequence."""
        if isinstance(value, FieldElement):
            self._check(value)
            return value
        if isinstance(value, (int, np.integer)):
            if not 0 <= value < self.q:
                raise ValueError(f"index {value} outside [0, {self.q})")
            return FieldElement(self, int(value))
        coeffs = list(value)
        if len(coeffs) > self.r or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"bad coefficient vector {coeffs} for {self!r}")
        return FieldElement(self, sum(int(c) * self.p**k for k, c in enumerate(coeffs)))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def _check(self, x):
        if isinstance(x, FieldElement) and x.field != self:
            raise FieldMismatchError(f"element of {x.field!r} used with {self!r}")

    def _idx(self, x):
        if isinstance(x, FieldElement):
            self._check(x)
            return x.index
        return x

    # -- arithmetic on indices (scalars or integer arrays) ----------------------

    @staticmethod
    def _scalar(out):
        return out if np.ndim(out) else int(out)

    def _from_digits(self, d):
        return self._scalar(d @ self._weights)

    def add(self, a, b):
        a, b = self._idx(a), self._idx(b)
        if self.r == 1:
            return self._scalar((a + b) % self.p)
        return self._from_digits((self._digits[a] + self._digits[b]) % self.p)

    def neg(self, a):
        a = self._idx(a)
        if self.r == 1:
            return self._scalar((-a) % self.p)
        return self._from_digits((-self._digits[a]) % self.p)

    def sub(self, a, b):
        a, b = self._idx(a), self._idx(b)
        if self.r == 1:
            return self._scalar((a - b) % self.p)
        return self._from_digits((self._digits[a] - self._digits[b]) % self.p)

    def mul(self, a, b):
        a, b = self._idx(a), self._idx(b)
        if self.r == 1:
            return self._scalar((a * b) % self.p)
        a, b = np.asarray(a), np.asarray(b)
        logs = (self._log[a] + self._log[b]) % (self.q - 1)
        return self._scalar(np.where((a == 0) | (b == 0), 0, self._exp[logs]))

    def inv(self, a):
        a = self._idx(a)
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    def character(self, x):
        """Quadratic character of an index (or index array)."""
        return self._scalar(self._chi[self._idx(x)])

    @property
    def character_table(self) -> np.ndarray:
        return self._chi


@dataclass(frozen=True)
class FieldElement:
    field: PrimePowerField
    index: int

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field!r} and {other.field!r}")
            return other.index
        if isinstance(other, int):
            return self.field(other % self.field.p).index
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else FieldElement(self.field, self.field.add(self.index, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else FieldElement(self.field, self.field.sub(self.index, b))

    def __rsub__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else FieldElement(self.field, self.field.sub(b, self.index))

    def __mul__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else FieldElement(self.field, self.field.mul(self.index, b))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.index))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.index, self.field.inv(b)))

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.field._digits[self.index])

    def __repr__(self):
        return f"{self.field!r}[{self.index}]"


@functools.lru_cache(maxsize=None)
def make_field(p: int, r: int = 1) -> PrimePowerField:
    if r < 1:
        raise ValueError(f"exponent r must be >= 1, got {r}")
    if not is_prime(p):
        raise NotPrimeError(p)
    if p == 2:
        raise EvenCharacteristicError()
    if p**r > SIZE_CAP:
        raise SizeCapError(f"q = {p}^{r} exceeds the supported cap {SIZE_CAP}")
    modulus = smallest_irreducible(p, r) if r > 1 else (0, 1)
    return PrimePowerField(p, r, modulus)


def field_of_order(q: int) -> PrimePowerField:
    pp = prime_power(q)
    if pp is None or pp[0] == 2:
        raise NotPrimePowerError(q)
    return make_field(*pp)


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_neg(a: FieldElement) -> FieldElement:
    return -a


def quadratic_character(f: PrimePowerField, x) -> int:
    """0 at zero, +1 on nonzero squares, -1 elsewhere."""
    return f.character(x)
