"""Finite-dimensional simple modules: construction, tests, classification.

Three families of n-dimensional modules cover every simple module when
q != 0 and the field is big enough to hold the eigenvalue data:

  A: both x and y act bijectively.  Data: a lambda-orbit of period l, a
     periodic mu-sequence of period m with n = l m, and a unit gamma;
     x cycles the basis with a single gamma twist, so x^n = gamma.
  B: y bijective, x nilpotent.  Same data with mu vanishing somewhere;
     y^n = gamma^{-1} and x^n = 0.
  C: both nilpotent.  Data: a point alpha with nu_alpha(n) = 0; simple
     exactly when no earlier nu_alpha(i) vanishes.

Modules from different families are never isomorphic except across A/B,
where an explicit gamma relation decides; within a family the data is
unique up to a simultaneous shift of (lambda, mu).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .algebra import AlgebraSpec
from .errors import (
    FieldMismatch,
    InvalidSpec,
    QZeroUnsupported,
    SearchInconclusive,
    SearchSpaceTooLarge,
    UnsupportedField,
)
from .fields import FieldElement, FieldSpec, frobenius_degree
from .linalg import Matrix, is_invertible, nullspace, poly_on_matrix
from .spectra import LambdaOrbit, MuSequence, enumerate_lambda_orbits, nu_table


@dataclass(frozen=True)
class ModuleSpec:
    """Classification data for one module.

    Families A and B are described by (mu, gamma) with the orbit inside
    mu; family C by (alpha, n).  Unused fields stay None.
    """

    family: str
    mu: MuSequence | None = None
    gamma: FieldElement | None = None
    alpha: FieldElement | None = None
    n: int | None = None

    @staticmethod
    def family_a(mu: MuSequence, gamma: FieldElement) -> "ModuleSpec":
        return ModuleSpec("A", mu=mu, gamma=gamma)

    @staticmethod
    def family_b(mu: MuSequence, gamma: FieldElement) -> "ModuleSpec":
        return ModuleSpec("B", mu=mu, gamma=gamma)

    @staticmethod
    def family_c(alpha: FieldElement, n: int) -> "ModuleSpec":
        return ModuleSpec("C", alpha=alpha, n=n)

    @property
    def orbit(self) -> LambdaOrbit | None:
        return self.mu.orbit if self.mu is not None else None

    @property
    def dim(self) -> int:
        if self.family == "C":
            return self.n
        return self.mu.orbit.period * self.mu.period

    def validate(self, alg: AlgebraSpec) -> None:
        """Check the data is coherent and matches the algebra, or raise InvalidSpec."""
        if self.family in ("A", "B"):
            if self.mu is None or self.gamma is None or self.alpha is not None or self.n is not None:
                raise InvalidSpec(f"family {self.family} takes exactly (mu, gamma)")
            if self.mu.field != alg.field or self.mu.q != alg.q or self.mu.g != alg.g:
                raise InvalidSpec("mu-sequence belongs to a different algebra")
            if self.mu.orbit.f != alg.f:
                raise InvalidSpec("orbit belongs to a different f")
            if self.gamma.spec != alg.field:
                raise InvalidSpec("gamma must lie in the coefficient field")
            if self.gamma.is_zero:
                raise InvalidSpec("gamma must be a unit")
            if self.mu.period == 0:
                raise InvalidSpec("mu-sequence is not periodic")
            if self.family == "B" and not any(v.is_zero for v in self.mu.values(self.dim)):
                raise InvalidSpec("family B needs mu to vanish somewhere")
            return
        if self.family == "C":
            if self.alpha is None or self.n is None or self.mu is not None or self.gamma is not None:
                raise InvalidSpec("family C takes exactly (alpha, n)")
            if self.alpha.spec != alg.field:
                raise InvalidSpec("alpha must lie in the coefficient field")
            if self.n < 1:
                raise InvalidSpec("dimension must be at least 1")
            if not nu_table(alg, self.alpha, self.n).value(self.n).is_zero:
                raise InvalidSpec("family C needs nu_alpha(n) = 0")
            return
        raise InvalidSpec(f"unknown family {self.family!r}")

    def describe(self) -> str:
        if self.family == "C":
            return f"C(alpha={self.alpha}, n={self.n})"
        lam = ", ".join(str(v) for v in self.mu.orbit.values)
        return f"{self.family}(lambda=({lam}), mu(0)={self.mu.anchor}, gamma={self.gamma})"


@dataclass(frozen=True)
class MatrixRep:
    """Concrete matrices for the action of x, y and h on column vectors."""

    field: FieldSpec
    dim: int
    x: Matrix
    y: Matrix
    h: Matrix


def build_matrix_rep(alg: AlgebraSpec, spec: ModuleSpec) -> MatrixRep:
    """Matrices of the module described by spec; basis vector j is column j."""
    spec.validate(alg)
    field = alg.field
    n = spec.dim
    if spec.family == "A":
        mu = spec.mu.values(n + 1)
        lam = [spec.orbit.value(j) for j in range(n)]
        x = {(j + 1, j): field.one for j in range(n - 1)}
        x[(0, n - 1)] = spec.gamma
        y = {(j - 1, j): mu[j] for j in range(1, n)}
        y[(n - 1, 0)] = mu[0] / spec.gamma
    elif spec.family == "B":
        mu = spec.mu.values(n + 1)
        lam = [spec.orbit.value(j) for j in range(n)]
        x = {(j + 1, j): mu[j + 1] for j in range(n - 1)}
        x[(0, n - 1)] = spec.gamma * mu[n]
        y = {(j - 1, j): field.one for j in range(1, n)}
        y[(n - 1, 0)] = spec.gamma.inverse()
    else:
        nu = nu_table(alg, spec.alpha, n)
        lam = []
        point = spec.alpha
        for _ in range(n):
            lam.append(point)
            point = alg.f(point)
        x = {(j + 1, j): field.one for j in range(n - 1)}
        y = {(j - 1, j): nu.value(j) for j in range(1, n)}
    return MatrixRep(
        field,
        n,
        Matrix.from_entries(field, n, n, x),
        Matrix.from_entries(field, n, n, y),
        Matrix.diagonal(field, lam),
    )


@dataclass(frozen=True)
class ModuleRelationReport:
    """Residuals of the three defining relations evaluated on matrices."""

    hx_residual: Matrix       # H X - X f(H)
    yh_residual: Matrix       # Y H - f(H) Y
    yx_residual: Matrix       # Y X - q X Y - g(H)
    ok: bool


def verify_relations(alg: AlgebraSpec, rep: MatrixRep) -> ModuleRelationReport:
    if rep.field != alg.field:
        raise FieldMismatch("module lives over a different field")
    fh = poly_on_matrix(alg.f, rep.h)
    gh = poly_on_matrix(alg.g, rep.h)
    r1 = rep.h * rep.x - rep.x * fh
    r2 = rep.y * rep.h - fh * rep.y
    r3 = rep.y * rep.x - rep.x * rep.y * alg.q - gh
    return ModuleRelationReport(r1, r2, r3, r1.is_zero and r2.is_zero and r3.is_zero)


# ---------------------------------------------------------------------------
# Simplicity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimplicityReport:
    simple: bool
    certificate: str


def is_simple_structural(alg: AlgebraSpec, spec: ModuleSpec) -> SimplicityReport:
    """Decide simplicity from the classification data alone.

    Valid A and B modules are always simple.  A C module is simple exactly
    when nu_alpha(i) != 0 for 0 < i < n; a vanishing nu at i leaves the
    span of the basis tail from i onward invariant.
    """
    spec.validate(alg)
    if spec.family in ("A", "B"):
        return SimplicityReport(True, f"family {spec.family} modules with periodic data are simple")
    nu = nu_table(alg, spec.alpha, spec.n)
    for i in range(1, spec.n):
        if nu.value(i).is_zero:
            return SimplicityReport(
                False, f"nu({i}) = 0: basis vectors {i}..{spec.n - 1} span a proper submodule"
            )
    return SimplicityReport(True, "nu(i) != 0 for 0 < i < n")


def is_simple_bruteforce(rep: MatrixRep, bound: int = 10 ** 6) -> bool:
    """Check simplicity by closing every 1-dimensional subspace under the action.

    Only finite fields with |F|^dim within the bound are accepted.  The
    module is simple exactly when every cyclic submodule is everything.
    """
    field = rep.field
    if field.order is None:
        raise UnsupportedField("brute-force simplicity needs a finite field")
    if field.order ** rep.dim > bound:
        raise SearchSpaceTooLarge(f"|F|^dim = {field.order ** rep.dim} exceeds bound {bound}")
    n = rep.dim
    if n == 1:
        return True
    mats = (rep.x, rep.y, rep.h)
    for seed in _projective_points(field, n):
        basis: dict[int, tuple[FieldElement, ...]] = {}
        queue = [seed]
        _echelon_insert(basis, seed, field)
        while queue and len(basis) < n:
            v = queue.pop()
            for m in mats:
                w = m.apply(v)
                reduced = _echelon_insert(basis, w, field)
                if reduced is not None:
                    queue.append(reduced)
        if len(basis) < n:
            return False
    return True


def _projective_points(field: FieldSpec, n: int):
    """One representative per 1-dimensional subspace of F^n."""
    elems = list(field.elements())
    for lead in range(n):
        prefix = (field.zero,) * lead + (field.one,)
        for tail in itertools.product(elems, repeat=n - lead - 1):
            yield prefix + tail


def _echelon_insert(basis: dict[int, tuple[FieldElement, ...]], v, field: FieldSpec):
    """Reduce v against the echelon basis; insert and return it if independent."""
    v = list(v)
    n = len(v)
    for c in range(n):
        if v[c].is_zero:
            continue
        row = basis.get(c)
        if row is None:
            inv = v[c].inverse()
            vec = tuple(a * inv for a in v)
            basis[c] = vec
            return vec
        coef = v[c]
        v = [a - coef * b for a, b in zip(v, row)]
    return None


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------


def _joint_shift_exists(s1: ModuleSpec, s2: ModuleSpec) -> bool:
    """Is (lambda2, mu2) a cyclic shift of (lambda1, mu1) over a full period?"""
    n = s1.dim
    lam1 = [s1.orbit.value(t) for t in range(n)]
    mu1 = list(s1.mu.values(n))
    lam2 = [s2.orbit.value(t) for t in range(n)]
    mu2 = list(s2.mu.values(n))
    for s in range(n):
        if all(lam2[t] == lam1[(t + s) % n] and mu2[t] == mu1[(t + s) % n] for t in range(n)):
            return True
    return False


def iso_structural(alg: AlgebraSpec, s1: ModuleSpec, s2: ModuleSpec) -> bool:
    """Isomorphism test straight from the classification data.

    Within families A or B: same gamma and jointly shifted (lambda, mu).
    Family C: equal alpha (and dimension).  Across A and B: gamma_A must
    equal gamma_B times the product of mu over a full period, with the
    same joint shift; C never meets A or B.
    """
    s1.validate(alg)
    s2.validate(alg)
    if s1.dim != s2.dim:
        return False
    pair = (s1.family, s2.family)
    if pair in (("A", "A"), ("B", "B")):
        return s1.gamma == s2.gamma and _joint_shift_exists(s1, s2)
    if pair == ("C", "C"):
        return s1.alpha == s2.alpha
    if pair == ("B", "A"):
        return iso_structural(alg, s2, s1)
    if pair == ("A", "B"):
        prod = alg.field.one
        for v in s1.mu.values(s1.dim):
            prod = prod * v
        if prod.is_zero:
            return False
        return s1.gamma == s2.gamma * prod and _joint_shift_exists(s1, s2)
    return False


def iso_bruteforce(
    r1: MatrixRep, r2: MatrixRep, scan_bound: int = 10 ** 4, seed: int = 0
) -> bool:
    """Search for an invertible intertwiner T with T a1 = a2 T for a = x, y, h.

    The intertwiner space is computed exactly; over a finite field it is
    scanned exhaustively when it has at most scan_bound elements and
    sampled randomly otherwise (giving up raises SearchInconclusive).
    Over an infinite field only intertwiner spaces of dimension <= 1 are
    decidable here and larger ones raise SearchSpaceTooLarge.
    """
    if r1.field != r2.field:
        raise FieldMismatch("modules over different fields")
    if r1.dim != r2.dim:
        return False
    field = r1.field
    n = r1.dim
    rows = []
    for m1, m2 in ((r1.x, r2.x), (r1.y, r2.y), (r1.h, r2.h)):
        for i in range(n):
            for j in range(n):
                # entry (i, j) of T m1 - m2 T as a row over the unknowns T[a][b]
                row = [field.zero] * (n * n)
                for b in range(n):
                    row[i * n + b] = row[i * n + b] + m1[b, j]
                for a in range(n):
                    row[a * n + j] = row[a * n + j] - m2[i, a]
                rows.append(row)
    basis = nullspace(rows, field, n * n)
    if not basis:
        return False
    mats = [Matrix(field, [vec[i * n : (i + 1) * n] for i in range(n)]) for vec in basis]
    d = len(mats)
    if field.order is None:
        if d > 1:
            raise SearchSpaceTooLarge("intertwiner space has dimension > 1 over an infinite field")
        return is_invertible(mats[0])
    if field.order ** d <= scan_bound:
        for coeffs in itertools.product(field.elements(), repeat=d):
            if all(c.is_zero for c in coeffs):
                continue
            if is_invertible(_combine(mats, coeffs, field)):
                return True
        return False
    rng = random.Random(seed)
    for _ in range(scan_bound):
        coeffs = [field.random_element(rng) for _ in range(d)]
        if all(c.is_zero for c in coeffs):
            continue
        if is_invertible(_combine(mats, coeffs, field)):
            return True
    raise SearchInconclusive(
        f"no invertible intertwiner found in {scan_bound} random samples of a "
        f"{d}-dimensional space"
    )


def _combine(mats: list[Matrix], coeffs, field: FieldSpec) -> Matrix:
    acc = Matrix.zero(field, mats[0].nrows, mats[0].ncols)
    for m, c in zip(mats, coeffs):
        if not c.is_zero:
            acc = acc + m * c
    return acc


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def enumerate_simples(alg: AlgebraSpec, n: int) -> list[ModuleSpec]:
    """Every simple n-dimensional module exactly once, as classification data.

    Families A and B run over divisors l of n: each period-l orbit and
    each anchor whose mu-sequence has period n/l contributes one (lambda,
    mu) class after collapsing the m possible re-anchorings mu(0) ->
    mu(jl), and then one module per unit gamma.  Family C contributes one
    module per alpha with nu_alpha(n) = 0 and nu_alpha(i) != 0 before.
    The three families and distinct data never collide, so the list is
    irredundant without any matrix computation.
    """
    if n < 1:
        raise InvalidSpec("dimension must be at least 1")
    if alg.q.is_zero:
        raise QZeroUnsupported("classification of simple modules needs q != 0")
    field = alg.field
    if field.order is None:
        raise UnsupportedField("enumeration needs a finite coefficient field")

    specs_a: list[ModuleSpec] = []
    specs_b: list[ModuleSpec] = []
    units = sorted(field.units(), key=FieldElement.sort_key)
    for l in _divisors(n):
        m = n // l
        for orbit in enumerate_lambda_orbits(field, alg.f, l):
            if orbit.period != l:
                continue
            seen: set[tuple] = set()
            for beta in field.elements():
                mu = MuSequence(orbit, alg.q, alg.g, beta)
                if mu.period != m:
                    continue
                window = mu.values(n)
                # collapse the m re-anchorings beta -> mu(j l) to one
                # canonical representative per isomorphism class
                shifts = [tuple(window[(t + j * l) % n].sort_key() for t in range(n)) for j in range(m)]
                best = min(range(m), key=lambda j: shifts[j])
                if shifts[best] in seen:
                    continue
                seen.add(shifts[best])
                canon = mu.shifted(best * l) if best else mu
                has_zero = any(v.is_zero for v in window)
                for gamma in units:
                    specs_a.append(ModuleSpec.family_a(canon, gamma))
                    if has_zero:
                        specs_b.append(ModuleSpec.family_b(canon, gamma))

    specs_c: list[ModuleSpec] = []
    for alpha in field.elements():
        nu = nu_table(alg, alpha, n)
        if not nu.value(n).is_zero:
            continue
        if any(nu.value(i).is_zero for i in range(1, n)):
            continue
        specs_c.append(ModuleSpec.family_c(alpha, n))

    return specs_a + specs_b + specs_c


def extend_algebra(alg: AlgebraSpec, ext: FieldSpec) -> AlgebraSpec:
    """The same algebra with scalars extended from a prime field to ext."""
    return AlgebraSpec(
        ext,
        ext.embed(alg.q),
        alg.f.map_coefficients(ext.embed, ext),
        alg.g.map_coefficients(ext.embed, ext),
        alg.degree_cap,
    )


def enumerate_c_extensions(
    alg: AlgebraSpec, n: int, bound: int
) -> list[tuple[AlgebraSpec, ModuleSpec]]:
    """Simple family-C modules whose alpha lives in a proper extension.

    Searches GF(p^m) for 2 <= m <= bound and keeps the alphas of degree
    exactly m, so together with the base-field enumeration every C module
    over fields up to the bound appears exactly once.
    """
    if not alg.field.is_prime_field:
        raise UnsupportedField("extension search starts from a prime base field")
    if alg.q.is_zero:
        raise QZeroUnsupported("classification of simple modules needs q != 0")
    found = []
    for m in range(2, bound + 1):
        ext_alg = extend_algebra(alg, FieldSpec.extension(alg.field.char, m))
        for alpha in ext_alg.field.elements():
            nu = nu_table(ext_alg, alpha, n)
            if not nu.value(n).is_zero:
                continue
            if any(nu.value(i).is_zero for i in range(1, n)):
                continue
            if frobenius_degree(alpha) == m:
                found.append((ext_alg, ModuleSpec.family_c(alpha, n)))
    return found
