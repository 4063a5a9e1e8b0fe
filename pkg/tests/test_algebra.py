"""Normal-form engine: straightening, theta, iota, weights, commutators."""

import random

import pytest

from qgha.algebra import (
    AlgebraSpec,
    PBWElement,
    commutator,
    generators,
    multiply,
    q_commutator,
    theta,
)
from qgha.errors import DegreeOverflow, FieldMismatch
from qgha.fields import FieldSpec
from qgha.poly import Poly

QQ = FieldSpec.rationals()
F5 = FieldSpec.prime(5)


def alg_f5(q=2, f=(0, 0, 1), g=(0, 1), cap=512):
    return AlgebraSpec(F5, F5.element(q), Poly.from_ints(F5, f), Poly.from_ints(F5, g), cap)


def random_element(alg, rng, max_exp=2, max_deg=2, max_terms=2):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        p = Poly(alg.field, [alg.field.random_element(rng) for _ in range(rng.randint(1, max_deg + 1))])
        terms[key] = terms.get(key, Poly.zero(alg.field)) + p
    return PBWElement(alg, terms)


def test_defining_relations():
    alg = alg_f5()
    x, y, h = generators(alg)
    assert h * x == PBWElement.monomial(alg, 1, alg.f, 0)
    assert y * h == PBWElement(alg, {(0, 1): alg.f})
    assert y * x == x * y * alg.q + PBWElement.h_poly(alg, alg.g)


def test_straightening_example():
    # frozen: over GF(5) with q=2, f=h^2, g=h: (y x) x = x (h^2 + 2h) + 4 x^2 y
    alg = alg_f5()
    x, y, _ = generators(alg)
    result = (y * x) * x
    expected = PBWElement(
        alg,
        {(1, 0): Poly.from_ints(F5, [0, 2, 1]), (2, 1): Poly.from_ints(F5, [4])},
    )
    assert result == expected
    assert result == y * (x * x)


def test_theta_values():
    # theta_0 = 0, theta_1 = g, theta_2 = sigma(g) + q g = h^2 + 2h (frozen)
    alg = alg_f5()
    assert theta(alg, 0).is_zero
    assert theta(alg, 1) == alg.g
    assert theta(alg, 2) == Poly.from_ints(F5, [0, 2, 1])


def test_theta_straightening_identities():
    # y x^k = q^k x^k y + x^{k-1} theta_k and y^k x = q^k x y^k + theta_k y^{k-1}
    for (q, f, g) in [(2, (0, 0, 1), (0, 1)), (1, (1, 1), (3, 1)), (4, (0, 0, 0, 1), (0, 0, 1))]:
        alg = alg_f5(q, f, g, cap=4096)
        x, y, _ = generators(alg)
        for k in range(1, 5):
            th = theta(alg, k)
            qk = alg.q_power(k)
            lhs = y * x ** k
            rhs = (x ** k * y) * qk + PBWElement(alg, {(k - 1, 0): th})
            assert lhs == rhs
            lhs2 = y ** k * x
            rhs2 = (x * y ** k) * qk + PBWElement(alg, {(0, k - 1): th})
            assert lhs2 == rhs2


def test_theta_conformal_closed_form():
    # when g = sigma(a) - q a, theta_k collapses to sigma^k(a) - q^k a
    a = Poly.from_ints(F5, [1, 2])
    for q in (1, 2, 3):
        f = Poly.from_ints(F5, [0, 1, 1])
        qe = F5.element(q)
        g = a.compose(f) - qe * a
        alg = AlgebraSpec(F5, qe, f, g, degree_cap=4096)
        for k in range(7):
            assert theta(alg, k) == alg.sigma_power(a, k) - alg.q_power(k) * a


def test_associativity_random():
    rng = random.Random(5)
    for alg in (alg_f5(), alg_f5(0, (0, 1), (2, 1)), alg_f5(1, (1, 1), (0, 0, 1))):
        for _ in range(60):
            u, v, w = (random_element(alg, rng) for _ in range(3))
            assert (u * v) * w == u * (v * w)


def test_one_and_zero():
    alg = alg_f5()
    one, zero = PBWElement.one(alg), PBWElement.zero(alg)
    e = random_element(alg, random.Random(7))
    assert one * e == e and e * one == e
    assert zero * e == zero and (e - e).is_zero


def test_iota_antiautomorphism():
    alg = alg_f5()
    e = PBWElement.monomial(alg, 1, Poly.gen(F5), 2)
    assert e.iota() == PBWElement.monomial(alg, 2, Poly.gen(F5), 1)
    rng = random.Random(9)
    for _ in range(40):
        u, v = random_element(alg, rng), random_element(alg, rng)
        assert (u * v).iota() == v.iota() * u.iota()
        assert u.iota().iota() == u
    assert PBWElement.h(alg).iota() == PBWElement.h(alg)
    assert PBWElement.x(alg).iota() == PBWElement.y(alg)


def test_weight_decompose():
    alg = alg_f5()
    x, y, h = generators(alg)
    e = x * x + x * y + PBWElement.h_poly(alg, Poly.from_ints(F5, [0, 1])) + y
    parts = e.weight_decompose()
    assert set(parts) == {-1, 0, 2}
    assert sum(parts.values(), PBWElement.zero(alg)) == e
    # weights multiply additively
    rng = random.Random(13)
    for _ in range(25):
        u, v = random_element(alg, rng), random_element(alg, rng)
        wu, wv = u.weight_decompose(), v.weight_decompose()
        if len(wu) == 1 and len(wv) == 1:
            (a,), (b,) = wu.keys(), wv.keys()
            prod = u * v
            if not prod.is_zero:
                assert set(prod.weight_decompose()) == {a + b}


def test_commutators():
    # with f = h, h is central among x and h
    alg = alg_f5(2, (0, 1), (0, 1))
    x, y, h = generators(alg)
    assert commutator(h, x).is_zero
    assert commutator(h, y).is_zero
    # q-commutator picks out g: y x - q x y = g(h)
    alg2 = alg_f5()
    x2, y2, _ = generators(alg2)
    assert q_commutator(y2, x2, alg2.q) == PBWElement.h_poly(alg2, alg2.g)


def test_degree_cap():
    alg = alg_f5(2, (0, 0, 0, 1), (0, 1), cap=20)
    x, y, h = generators(alg)
    with pytest.raises(DegreeOverflow):
        y * (x * PBWElement.h_poly(alg, Poly.monomial(F5, 10)))


def test_cross_algebra_mixing_rejected():
    with pytest.raises(FieldMismatch):
        multiply(PBWElement.x(alg_f5()), PBWElement.y(alg_f5(q=3)))


def test_scalar_multiplication():
    alg = alg_f5()
    x = PBWElement.x(alg)
    assert x * 3 == 3 * x
    assert (x * F5.element(2)) + (x * 3) == PBWElement.zero(alg)


def test_power_matches_repeated_product():
    alg = alg_f5()
    e = PBWElement.x(alg) + PBWElement.y(alg)
    acc = PBWElement.one(alg)
    for n in range(5):
        assert e ** n == acc
        acc = acc * e
