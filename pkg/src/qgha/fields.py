"""Exact scalar arithmetic over Q, GF(p) and GF(p^k).

Rationals are backed by :class:`fractions.Fraction`, prime fields by least
nonnegative residues, and extension fields by coefficient tuples modulo a
monic irreducible polynomial in the generator ``u``.  All arithmetic is
exact; there is no floating point anywhere in this package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .errors import (
    DivisionByZero,
    FieldMismatch,
    UnsupportedField,
    ZeroArgument,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# GF(p)[u] helpers on plain int lists (index i holds the u^i coefficient).
# These back both extension-field element arithmetic and the search for
# irreducible moduli, so they stay free of FieldElement overhead.
# ---------------------------------------------------------------------------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _padd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return _trim(out)


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _trim(out)


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                out[i + j] = (out[i + j] + av * bv) % p
    return _trim(out)


def _pdivmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(rem) - db, 0)
    while len(_trim(rem)) - 1 >= db:
        dr = len(rem) - 1
        c = (rem[-1] * inv_lead) % p
        quot[dr - db] = c
        for i, bv in enumerate(b):
            rem[dr - db + i] = (rem[dr - db + i] - c * bv) % p
        _trim(rem)
    return _trim(quot), rem


def _pinv(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Inverse of a modulo mod via extended Euclid; a must be nonzero mod mod."""
    r0, r1 = list(mod), _trim(list(a))
    s0, s1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
    if len(r0) != 1:
        raise DivisionByZero("element is not invertible")
    c = pow(r0[0], -1, p)
    return _trim([(v * c) % p for v in s0])


def _monic_polys(p: int, degree: int) -> Iterator[tuple[int, ...]]:
    """All monic degree-d polynomials over GF(p), lowest coefficients varying fastest."""
    for lower in itertools.product(range(p), repeat=degree):
        yield lower + (1,)


def poly_is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility over GF(p) by trial division up to half the degree."""
    c = _trim([v % p for v in coeffs])
    deg = len(c) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(p, d):
            _, rem = _pdivmod(c, list(cand), p)
            if not rem:
                return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """First monic irreducible of the given degree in the fixed enumeration order."""
    for cand in _monic_polys(p, degree):
        if poly_is_irreducible(cand, p):
            return cand
    raise UnsupportedField(f"no irreducible of degree {degree} over GF({p})")


# ---------------------------------------------------------------------------
# Field specifications and elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """Description of a coefficient field: Q, GF(p) or GF(p^k).

    char 0 means the rationals; degree > 1 means an extension field whose
    elements are reduced polynomials in ``u`` modulo ``modulus`` (a monic
    irreducible stored low-to-high, including the leading 1).
    """

    char: int
    degree: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.char == 0:
            if self.degree != 1 or self.modulus is not None:
                raise UnsupportedField("rationals take no extension data")
            return
        if not is_prime(self.char):
            raise UnsupportedField(f"characteristic {self.char} is not prime")
        if self.degree < 1:
            raise UnsupportedField("extension degree must be positive")
        if self.degree == 1:
            if self.modulus is not None:
                raise UnsupportedField("prime fields take no modulus")
            return
        if self.modulus is None:
            object.__setattr__(self, "modulus", find_irreducible(self.char, self.degree))
            return
        mod = tuple(v % self.char for v in self.modulus)
        if len(_trim(list(mod))) - 1 != self.degree or mod[-1] != 1:
            raise UnsupportedField("modulus must be monic of the extension degree")
        if not poly_is_irreducible(mod, self.char):
            raise UnsupportedField("modulus is not irreducible")
        object.__setattr__(self, "modulus", mod)

    # -- classification ----------------------------------------------------

    @property
    def is_rationals(self) -> bool:
        return self.char == 0

    @property
    def is_prime_field(self) -> bool:
        return self.char != 0 and self.degree == 1

    @property
    def is_extension(self) -> bool:
        return self.degree > 1

    @property
    def order(self) -> int | None:
        """Number of elements, or None for an infinite field."""
        if self.char == 0:
            return None
        return self.char ** self.degree

    # -- construction ------------------------------------------------------

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(0)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec(p)

    @staticmethod
    def extension(p: int, k: int, modulus: Sequence[int] | None = None) -> "FieldSpec":
        return FieldSpec(p, k, tuple(modulus) if modulus is not None else None)

    def element(self, value) -> "FieldElement":
        """Coerce an int, Fraction, coefficient sequence or element into this field."""
        if isinstance(value, FieldElement):
            if value.spec == self:
                return value
            raise FieldMismatch("element belongs to a different field")
        if self.char == 0:
            return FieldElement(self, Fraction(value))
        if self.degree == 1:
            if isinstance(value, Fraction):
                if value.denominator % self.char == 0:
                    raise DivisionByZero("denominator vanishes in this characteristic")
                return FieldElement(self, value.numerator * pow(value.denominator, -1, self.char) % self.char)
            return FieldElement(self, int(value) % self.char)
        if isinstance(value, (list, tuple)):
            coeffs = [int(v) % self.char for v in value]
            _, rem = _pdivmod(coeffs, list(self.modulus), self.char)
            return FieldElement(self, tuple(rem))
        if isinstance(value, Fraction):
            if value.denominator % self.char == 0:
                raise DivisionByZero("denominator vanishes in this characteristic")
            value = value.numerator * pow(value.denominator, -1, self.char)
        n = int(value) % self.char
        return FieldElement(self, (n,) if n else ())

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    @property
    def generator(self) -> "FieldElement":
        """The extension generator u; undefined for prime fields and Q."""
        if not self.is_extension:
            raise UnsupportedField("only extension fields have a generator u")
        return FieldElement(self, (0, 1))

    def elements(self) -> Iterator["FieldElement"]:
        """All elements in a fixed order; infinite fields are refused."""
        if self.order is None:
            raise UnsupportedField("cannot enumerate an infinite field")
        p = self.char
        if self.degree == 1:
            for n in range(p):
                yield FieldElement(self, n)
            return
        for n in range(self.order):
            digits = []
            m = n
            while m:
                digits.append(m % p)
                m //= p
            yield FieldElement(self, tuple(digits))

    def units(self) -> Iterator["FieldElement"]:
        for a in self.elements():
            if not a.is_zero:
                yield a

    def random_element(self, rng) -> "FieldElement":
        if self.char == 0:
            return self.element(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        if self.degree == 1:
            return self.element(rng.randrange(self.char))
        return self.element([rng.randrange(self.char) for _ in range(self.degree)])

    def embed(self, a: "FieldElement") -> "FieldElement":
        """Embed a prime-field element into this extension of the same characteristic."""
        if a.spec == self:
            return a
        if a.spec.is_prime_field and self.char == a.spec.char:
            return self.element(a.value)
        raise UnsupportedField("only prime-field scalars embed into an extension")

    def __str__(self) -> str:
        if self.char == 0:
            return "Q"
        if self.degree == 1:
            return f"GF({self.char})"
        mod = _render_u_poly(self.modulus)
        return f"GF({self.char}^{self.degree}),mod={mod}"


def _render_u_poly(coeffs: Sequence[int]) -> str:
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
        elif e == 1:
            parts.append("u" if c == 1 else f"{c}*u")
        else:
            parts.append(f"u^{e}" if c == 1 else f"{c}*u^{e}")
    return "+".join(parts) if parts else "0"


Scalar = Union[int, Fraction, "FieldElement"]


class FieldElement:
    """A single field element; immutable and hashable.

    value is a Fraction over Q, an int residue over GF(p), and a trimmed
    coefficient tuple over GF(p^k).
    """

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *_):
        raise AttributeError("FieldElement is immutable")

    # -- predicates ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        v = self.value
        return v == 0 if not isinstance(v, tuple) else not v

    @property
    def is_one(self) -> bool:
        v = self.value
        return v == 1 if not isinstance(v, tuple) else v == (1,)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        s = self.spec
        if s.char == 0:
            return FieldElement(s, self.value + o.value)
        if s.degree == 1:
            return FieldElement(s, (self.value + o.value) % s.char)
        return FieldElement(s, tuple(_padd(self.value, o.value, s.char)))

    __radd__ = __add__

    def __neg__(self):
        s = self.spec
        if s.char == 0:
            return FieldElement(s, -self.value)
        if s.degree == 1:
            return FieldElement(s, (-self.value) % s.char)
        return FieldElement(s, tuple((-v) % s.char for v in self.value))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        s = self.spec
        if s.char == 0:
            return FieldElement(s, self.value * o.value)
        if s.degree == 1:
            return FieldElement(s, (self.value * o.value) % s.char)
        prod = _pmul(self.value, o.value, s.char)
        _, rem = _pdivmod(prod, list(s.modulus), s.char)
        return FieldElement(s, tuple(rem))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise DivisionByZero("zero has no inverse")
        s = self.spec
        if s.char == 0:
            return FieldElement(s, 1 / self.value)
        if s.degree == 1:
            return FieldElement(s, pow(self.value, -1, s.char))
        return FieldElement(s, tuple(_pinv(self.value, s.modulus, s.char)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        out = self.spec.one
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == self.spec.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def sort_key(self):
        """Total order within one field, used for canonical output ordering."""
        v = self.value
        if isinstance(v, tuple):
            return sum(c * self.spec.char ** i for i, c in enumerate(v))
        return v

    def __str__(self):
        v = self.value
        if isinstance(v, tuple):
            return _render_u_poly(v)
        return str(v)

    def __repr__(self):
        return f"<{self} in {self.spec}>"


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Dispatch one of the four field operations by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _factorize(n: int) -> dict[int, int]:
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


def multiplicative_order(a: FieldElement) -> int:
    """Order of a in the multiplicative group; 0 encodes infinite order.

    Finite-field orders divide p^k - 1 and are found by stripping prime
    factors; over Q only 1 and -1 have finite order.
    """
    if a.is_zero:
        raise ZeroArgument("zero has no multiplicative order")
    if a.spec.is_rationals:
        if a.value == 1:
            return 1
        if a.value == -1:
            return 2
        return 0
    n = a.spec.order - 1
    order = n
    for prime in _factorize(n):
        while order % prime == 0 and (a ** (order // prime)).is_one:
            order //= prime
    return order


def frobenius_degree(a: FieldElement) -> int:
    """Degree of a over the prime subfield (size of the Frobenius orbit)."""
    if a.spec.char == 0:
        raise UnsupportedField("Frobenius degree needs positive characteristic")
    p = a.spec.char
    b = a ** p
    d = 1
    while b != a:
        b = b ** p
        d += 1
    return d
