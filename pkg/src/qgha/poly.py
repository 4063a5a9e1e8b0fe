"""Dense univariate polynomials over an exact field.

These are the coefficient polynomials p(h) sitting between the x and y
powers of a normal-form word, and also double as polynomials in any other
single variable (the extension generator u, a spectral parameter t).
Coefficients are stored low to high with trailing zeros trimmed; the zero
polynomial has the empty tuple and reports degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DegreeOverflow, DivisionByZero, FieldMismatch, UnsupportedField, ZeroArgument
from .fields import FieldElement, FieldSpec, _padd, _pdivmod, frobenius_degree


class Poly:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[FieldElement]):
        cs = list(coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(spec: FieldSpec) -> "Poly":
        return Poly(spec, ())

    @staticmethod
    def one(spec: FieldSpec) -> "Poly":
        return Poly(spec, (spec.one,))

    @staticmethod
    def constant(spec: FieldSpec, c) -> "Poly":
        return Poly(spec, (spec.element(c),))

    @staticmethod
    def gen(spec: FieldSpec) -> "Poly":
        """The variable itself."""
        return Poly(spec, (spec.zero, spec.one))

    @staticmethod
    def monomial(spec: FieldSpec, degree: int, c=1) -> "Poly":
        return Poly(spec, tuple([spec.zero] * degree) + (spec.element(c),))

    @staticmethod
    def from_ints(spec: FieldSpec, ints: Sequence) -> "Poly":
        """Low-to-high coefficient list of ints or Fractions."""
        return Poly(spec, tuple(spec.element(v) for v in ints))

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 as the sentinel for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroArgument("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.spec.zero

    def constant_value(self) -> FieldElement:
        if not self.is_constant:
            raise ZeroArgument("polynomial is not constant")
        return self.coefficient(0)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.spec != other.spec:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        # raw-value loops: wrapper overhead dominates on long polynomials
        spec = self.spec
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        vals = [c.value for c in a]
        if spec.char == 0:
            for i, c in enumerate(b):
                vals[i] = vals[i] + c.value
        elif spec.degree == 1:
            p = spec.char
            for i, c in enumerate(b):
                vals[i] = (vals[i] + c.value) % p
        else:
            p = spec.char
            for i, c in enumerate(b):
                vals[i] = tuple(_padd(vals[i], c.value, p))
        return Poly(spec, [FieldElement(spec, v) for v in vals])

    def __neg__(self) -> "Poly":
        return Poly(self.spec, (-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            if self.is_zero or other.is_zero:
                return Poly.zero(self.spec)
            spec = self.spec
            a = [c.value for c in self.coeffs]
            b = [c.value for c in other.coeffs]
            n = len(a) + len(b) - 1
            if spec.char == 0:
                out = [Fraction(0)] * n
                for i, av in enumerate(a):
                    if av:
                        for j, bv in enumerate(b):
                            out[i + j] += av * bv
                return Poly(spec, [FieldElement(spec, v) for v in out])
            if spec.degree == 1:
                # reduce once per output coefficient, not per product
                p = spec.char
                out = [0] * n
                for i, av in enumerate(a):
                    if av:
                        for j, bv in enumerate(b):
                            out[i + j] += av * bv
                return Poly(spec, [FieldElement(spec, v % p) for v in out])
            p = spec.char
            width = 2 * spec.degree - 1
            mod = list(spec.modulus)
            acc = [[0] * width for _ in range(n)]
            for i, av in enumerate(a):
                if av:
                    for j, bv in enumerate(b):
                        if bv:
                            slot = acc[i + j]
                            for s, x in enumerate(av):
                                if x:
                                    for t, yv in enumerate(bv):
                                        slot[s + t] += x * yv
            coeffs = []
            for slot in acc:
                _, rem = _pdivmod([v % p for v in slot], mod, p)
                coeffs.append(FieldElement(spec, tuple(rem)))
            return Poly(spec, coeffs)
        if isinstance(other, (int, Fraction, FieldElement)):
            c = self.spec.element(other)
            return Poly(self.spec, (a * c for a in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = Poly.one(self.spec)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv = other.lead.inverse()
        quot = [self.spec.zero] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            c = rem[-1] * inv
            quot[len(rem) - 1 - db] = c
            for i, b in enumerate(other.coeffs):
                rem[len(rem) - 1 - db + i] = rem[len(rem) - 1 - db + i] - c * b
            while rem and rem[-1].is_zero:
                rem.pop()
        return Poly(self.spec, quot), Poly(self.spec, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x: FieldElement) -> FieldElement:
        """Horner evaluation."""
        acc = self.spec.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly", max_degree: int | None = None) -> "Poly":
        """self(inner), guarded by an optional cap on the result degree."""
        self._check(inner)
        if max_degree is not None and self.degree >= 1 and inner.degree >= 1:
            if self.degree * inner.degree > max_degree:
                raise DegreeOverflow(
                    f"composition degree {self.degree * inner.degree} exceeds cap {max_degree}"
                )
        acc = Poly.zero(self.spec)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(self.spec, c)
        return acc

    def map_coefficients(self, fn: Callable[[FieldElement], FieldElement], spec: FieldSpec) -> "Poly":
        return Poly(spec, (fn(c) for c in self.coeffs))

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.render()})"

    def render(self, var: str = "h") -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c.is_zero:
                continue
            text, negative = _scalar_factor(c)
            if e == 0:
                body = text if text else "1"
            else:
                head = var if e == 1 else f"{var}^{e}"
                body = f"{text}*{head}" if text else head
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)


def _scalar_factor(c: FieldElement) -> tuple[str, bool]:
    """Render a coefficient as (factor text, sign); empty text means factor 1."""
    if c.spec.is_rationals:
        negative = c.value < 0
        mag = -c.value if negative else c.value
        return ("" if mag == 1 else str(mag)), negative
    if c.spec.is_extension and len(c.value) > 1:
        return f"({c})", False
    return ("" if c.is_one else str(c)), False


def sigma_power(p: Poly, k: int, f: Poly, max_degree: int | None = None) -> Poly:
    """Apply the substitution h -> f(h) to p, k times."""
    if k < 0:
        raise ValueError("sigma powers need k >= 0")
    out = p
    for _ in range(k):
        out = out.compose(f, max_degree)
    return out


# ---------------------------------------------------------------------------
# Root finding
# ---------------------------------------------------------------------------


def rational_roots(p: Poly) -> set[FieldElement]:
    """All rational roots, via the rational root theorem on a cleared form."""
    if p.is_zero:
        raise ZeroArgument("zero polynomial has every root")
    spec = p.spec
    coeffs = list(p.coeffs)
    roots: set[FieldElement] = set()
    # strip powers of the variable: 0 is a root iff the constant term vanishes
    shift = 0
    while coeffs and coeffs[0].is_zero:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.add(spec.zero)
    if len(coeffs) <= 1:
        return roots
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.value.denominator // _gcd(denom_lcm, c.value.denominator)
    ints = [int(c.value * denom_lcm) for c in coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])
    for num in _divisors(a0):
        for den in _divisors(an):
            for sign in (1, -1):
                cand = Fraction(sign * num, den)
                elem = spec.element(cand)
                if p(elem).is_zero:
                    roots.add(elem)
    return roots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def roots_in_field(p: Poly) -> set[FieldElement]:
    """Roots of a nonzero polynomial inside its own coefficient field."""
    if p.is_zero:
        raise ZeroArgument("zero polynomial has every root")
    if p.spec.is_rationals:
        return rational_roots(p)
    return {a for a in p.spec.elements() if p(a).is_zero}


def roots_in_extensions(p: Poly, bound: int = 6) -> list[tuple[FieldElement, FieldSpec]]:
    """Roots of p over GF(p^m) for 1 <= m <= bound, base field prime.

    Each root is reported once, in the smallest field containing it (its
    Frobenius orbit has size exactly m), so distinct entries are distinct
    elements of the algebraic closure.
    """
    if not p.spec.is_prime_field:
        raise UnsupportedField("extension search starts from a prime field")
    if p.is_zero:
        raise ZeroArgument("zero polynomial has every root")
    found: list[tuple[FieldElement, FieldSpec]] = []
    for m in range(1, bound + 1):
        ext = p.spec if m == 1 else FieldSpec.extension(p.spec.char, m)
        lifted = p.map_coefficients(ext.embed, ext)
        for a in sorted(roots_in_field(lifted), key=FieldElement.sort_key):
            if m == 1 or frobenius_degree(a) == m:
                found.append((a, ext))
    return found
