"""Eigenvalue combinatorics feeding the module constructions.

A lambda-orbit is a finite cycle of the substitution map alpha -> f(alpha)
on the field; a mu-sequence solves the twisted recursion
mu(i+1) = q mu(i) + g(lambda(i)) over such a cycle and is itself periodic
with period a multiple of the cycle length whenever it is periodic at all.
The nu-values are the mu-sequence started at 0 over the (not necessarily
periodic) forward orbit of a point; they control the third family of
modules and the simplicity test.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import AlgebraSpec
from .errors import InvalidSpec, QZero, UnsupportedField
from .fields import FieldElement, FieldSpec, multiplicative_order
from .poly import Poly, roots_in_field


@dataclass(frozen=True)
class LambdaOrbit:
    """A cycle (lambda(0), ..., lambda(l-1)) of the map alpha -> f(alpha).

    values must be pairwise distinct with f(values[i]) = values[i+1]
    cyclically; the period l = len(values) is then automatically minimal.
    """

    f: Poly
    values: tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.values:
            raise InvalidSpec("an orbit needs at least one point")
        if len(set(self.values)) != len(self.values):
            raise InvalidSpec("orbit points must be pairwise distinct")
        for i, v in enumerate(self.values):
            if self.f(v) != self.values[(i + 1) % len(self.values)]:
                raise InvalidSpec("values are not an f-cycle")

    @property
    def period(self) -> int:
        return len(self.values)

    @property
    def field(self) -> FieldSpec:
        return self.f.spec

    def value(self, i: int) -> FieldElement:
        return self.values[i % len(self.values)]

    def rotated(self, s: int) -> "LambdaOrbit":
        l = len(self.values)
        s %= l
        return LambdaOrbit(self.f, self.values[s:] + self.values[:s])

    def canonical(self) -> "LambdaOrbit":
        """The rotation starting at the smallest point, for stable output."""
        best = min(range(len(self.values)), key=lambda s: self.rotated(s)._key())
        return self.rotated(best)

    def _key(self):
        return tuple(v.sort_key() for v in self.values)

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def orbit_from_seed(f: Poly, alpha: FieldElement, max_steps: int = 64) -> LambdaOrbit:
    """The cycle through alpha, which must be a periodic point of f.

    Over a finite field every point is eventually periodic but only
    periodic seeds lie on their own cycle; others are rejected.  Over Q the
    search gives up after max_steps iterations.
    """
    spec = f.spec
    if alpha.spec != spec:
        raise InvalidSpec("seed must lie in the coefficient field")
    limit = spec.order if spec.order is not None else max_steps
    values = [alpha]
    current = alpha
    for _ in range(limit):
        current = f(current)
        if current == alpha:
            return LambdaOrbit(f, tuple(values))
        if current in values:
            raise InvalidSpec(f"{alpha} is not a periodic point of f")
        values.append(current)
    raise InvalidSpec(f"no cycle through {alpha} found within {limit} steps")


def enumerate_lambda_orbits(field: FieldSpec, f: Poly, max_period: int) -> list[LambdaOrbit]:
    """All cycles of alpha -> f(alpha) with period at most max_period.

    Over a finite field this walks the whole functional graph once.  Over Q
    only fixed points are enumerable (roots of f(h) - h); longer periods
    would need algebraic number arithmetic, so they are refused.
    """
    if max_period < 1:
        return []
    if field.is_rationals:
        if max_period > 1:
            raise UnsupportedField("over Q only period-1 orbits can be enumerated")
        diff = f - Poly.gen(field)
        if diff.is_zero:
            raise UnsupportedField("f = h fixes every rational; the orbit set is infinite")
        fixed = sorted(roots_in_field(diff), key=FieldElement.sort_key)
        return [LambdaOrbit(f, (a,)) for a in fixed]

    orbits = []
    visited: set[FieldElement] = set()
    for start in field.elements():
        if start in visited:
            continue
        # walk forward until we rejoin this path (a fresh cycle) or reach a
        # previously explored point (whose cycle is already recorded)
        path = [start]
        index = {start: 0}
        current = start
        while True:
            current = f(current)
            if current in index:
                cycle = path[index[current]:]
                if len(cycle) <= max_period:
                    orbits.append(LambdaOrbit(f, tuple(cycle)).canonical())
                break
            if current in visited:
                break
            index[current] = len(path)
            path.append(current)
        visited.update(path)
    orbits.sort(key=lambda o: (o.period, o._key()))
    return orbits


# ---------------------------------------------------------------------------
# mu-sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MuSequence:
    """Solution of mu(i+1) = q mu(i) + g(lambda(i)) with mu(0) = anchor.

    For q != 0 the recursion runs both ways and the closed form

        mu(i) = q^i anchor + sum_{j=0}^{i-1} q^j g(lambda(i-j-1))      (i >= 0)
        mu(i) = q^i anchor - sum_{j=i}^{-1} q^j g(lambda(i-j-1))       (i < 0)

    is used directly.  period is the least m >= 1 with the joint sequence
    (lambda, mu) invariant under shifting by m |lambda|, encoded as 0 when
    no such m exists (infinite period, only possible in characteristic 0).
    """

    orbit: LambdaOrbit
    q: FieldElement
    g: Poly
    anchor: FieldElement

    def __post_init__(self):
        spec = self.orbit.field
        if self.q.spec != spec or self.g.spec != spec or self.anchor.spec != spec:
            raise InvalidSpec("mu data must live over the orbit's field")

    @property
    def field(self) -> FieldSpec:
        return self.orbit.field

    def value(self, i: int) -> FieldElement:
        """mu(i); negative indices need q invertible."""
        spec = self.field
        if i >= 0:
            acc = spec.zero
            for m in range(i):
                # anchor-free recurrence; ends as sum_j q^j g(lambda(i-j-1))
                acc = acc * self.q + self.g(self.orbit.value(m))
            return (self.q ** i) * self.anchor + acc
        if self.q.is_zero:
            raise QZero("mu at negative indices needs q != 0")
        acc = spec.zero
        for j in range(i, 0):
            acc = acc + (self.q ** j) * self.g(self.orbit.value(i - j - 1))
        return (self.q ** i) * self.anchor - acc

    def values(self, count: int) -> tuple[FieldElement, ...]:
        """(mu(0), ..., mu(count-1)) by running the recurrence once."""
        if count <= 0:
            return ()
        out = [self.anchor]
        for i in range(count - 1):
            out.append(self.q * out[-1] + self.g(self.orbit.value(i)))
        return tuple(out)

    @cached_property
    def period(self) -> int:
        return mu_period(self.orbit, self.q, self.g, self.anchor)

    def shifted(self, s: int) -> "MuSequence":
        """The same bilateral sequence re-anchored at position s."""
        return MuSequence(self.orbit.rotated(s), self.q, self.g, self.value(s))


def nu_increment(orbit: LambdaOrbit, q: FieldElement, g: Poly) -> FieldElement:
    """Xi = sum_{i=0}^{l-1} q^i g(lambda(l-1-i)), the drift over one lambda-period.

    Satisfies mu(k l) = q^{k l} mu(0) + Xi (1 + q^l + ... + q^{(k-1) l}).
    """
    spec = orbit.field
    acc = spec.zero
    for i in range(orbit.period):
        acc = acc * q + g(orbit.value(i))
    return acc


def mu_period(orbit: LambdaOrbit, q: FieldElement, g: Poly, anchor: FieldElement) -> int:
    """Least m >= 1 with mu(i + m |lambda|) = mu(i) for all i, 0 if none exists.

    Writing Q = q^l and Xi for the one-period drift, mu(k l) follows the
    affine iteration beta -> Q beta + Xi, so periodicity reduces to:

      Q = 1:  Xi = 0 gives period 1; otherwise the period is the additive
              order of Xi (the characteristic, or infinite over Q).
      Q != 1: the fixed point is Xi / (1 - Q); anchors there have period 1
              and every other anchor has period ord(Q).
    """
    if q.is_zero:
        raise QZero("mu-periodicity needs q != 0")
    spec = orbit.field
    big_q = q ** orbit.period
    xi = nu_increment(orbit, q, g)
    if big_q.is_one:
        if xi.is_zero:
            return 1
        return spec.char  # 0 in characteristic zero: no finite period
    if anchor == xi / (spec.one - big_q):
        return 1
    return multiplicative_order(big_q)


# ---------------------------------------------------------------------------
# nu-tables and weight propagation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NuTable:
    """nu(0..count) along the forward f-orbit of alpha, nu(0) = 0.

    nu(i+1) = q nu(i) + g(f^[i](alpha)); these are the y-coefficients of
    the third module family and its simplicity obstructions.
    """

    alpha: FieldElement
    values: tuple[FieldElement, ...]

    def value(self, i: int) -> FieldElement:
        return self.values[i]


def nu_table(alg: AlgebraSpec, alpha: FieldElement, count: int) -> NuTable:
    if alpha.spec != alg.field:
        raise InvalidSpec("alpha must lie in the coefficient field")
    values = [alg.field.zero]
    point = alpha
    for _ in range(count):
        values.append(alg.q * values[-1] + alg.g(point))
        point = alg.f(point)
    return NuTable(alpha, tuple(values))


def weight_propagation(
    alg: AlgebraSpec, alpha: FieldElement, beta: FieldElement, k: int
) -> tuple[FieldElement, FieldElement]:
    """Push the weight (h, yx eigenvalue) pair (alpha, beta) up k rungs.

    Acting by x sends a (alpha, beta) weight vector to one of weight
    (f(alpha), q beta + g(alpha)); this iterates that k >= 0 times.
    """
    if k < 0:
        raise ValueError("weight propagation is forward only")
    for _ in range(k):
        alpha, beta = alg.f(alpha), alg.q * beta + alg.g(alpha)
    return alpha, beta
