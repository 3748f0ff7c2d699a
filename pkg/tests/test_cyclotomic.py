"""
Cyclotomic Field Arithmetic Tests

This suite covers Q(zeta_N) realized as Q[x]/Phi_N: the cyclotomic polynomials
themselves, arithmetic across different conductors, inversion, hashing consistency
between embeddings, and the exact square roots that the invariance engine relies on
when it solves quadratic line conditions.

sympy acts as an independent oracle for the cyclotomic polynomials.

Test Coverage:
- Phi_N against sympy for N up to 30
- Mixed-conductor arithmetic and automatic embedding
- Equality and hashing across embeddings
- Inverses, division by zero and conductor mismatches
- Square roots and quadratic roots inside a given field
- Field axioms on seeded random elements for several conductors
"""

import random
from fractions import Fraction

import pytest
import sympy

from qpascal.errors import ConductorMismatch, DivisionByZero
from qpascal.fields import (
    Cyc,
    Poly,
    common_conductor,
    cyclotomic_polynomial,
    embed,
    field,
    field_roots,
    sqrt_in_field,
)


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_polynomial_matches_sympy(n):
    x = sympy.symbols("x")
    expected = [int(c) for c in sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()]
    ours = [int(c) for c in reversed(cyclotomic_polynomial(n).coeffs)]
    assert ours == expected
    assert field(n).degree == sympy.totient(n)


def test_zeta_relations_in_conductor_12():
    """
    Exercise the defining relations of zeta_12 and its subfields.

    zeta_12 has order 12, its sixth power is -1 and its fourth power generates
    Q(zeta_3), where 1 + zeta_3 + zeta_3^2 = 0.
    """
    z = Cyc.zeta(12)
    assert z**12 == 1
    assert z**6 == -1
    assert z**4 == Cyc.zeta(3)
    q = Cyc.zeta(3)
    assert 1 + q + q * q == 0
    assert Cyc.zeta(12, -1) == z**11


def test_mixed_conductors_embed_into_lcm():
    prod = Cyc.zeta(3) * Cyc.zeta(4)
    assert prod.conductor == 12
    assert prod == Cyc.zeta(12, 7)
    assert common_conductor([Cyc.zeta(9), Fraction(1, 2), Cyc.zeta(4)]) == 36


def test_equal_values_hash_alike_in_every_embedding():
    """
    The hash is the normalized trace, so an element and its image in a larger
    field land in the same dictionary slot.
    """
    a = Cyc.zeta(3) + Fraction(1, 2)
    b = embed(a, 12)
    assert a == b
    assert hash(a) == hash(b)
    assert hash(Cyc.rational(2)) == hash(Fraction(2))
    assert len({a, b, embed(a, 36)}) == 1


def test_inverse_and_division():
    u = 1 + Cyc.zeta(5)
    assert u * u.inverse() == 1
    assert (Cyc.zeta(7) / u) * u == Cyc.zeta(7)
    with pytest.raises(DivisionByZero):
        Cyc.rational(0).inverse()
    with pytest.raises(ZeroDivisionError):
        Cyc.zeta(3) / (Cyc.zeta(3) - Cyc.zeta(3))


def test_embed_rejects_non_multiple():
    with pytest.raises(ConductorMismatch) as exc_info:
        Cyc.zeta(4).embed(6)
    assert exc_info.value.conductor == 4
    assert exc_info.value.target == 6


def test_sqrt_in_field_rational_cases():
    assert sqrt_in_field(Cyc.rational(Fraction(9, 4))) == Fraction(3, 2)
    assert sqrt_in_field(Cyc.rational(2)) is None
    assert sqrt_in_field(Cyc.rational(-1)) is None


def test_sqrt_in_field_cyclotomic_cases():
    """
    -1 is a square in Q(zeta_12) (zeta_12^3 = i) and 2 is a square in Q(zeta_8), but 2
    is not a square in Q(zeta_3).
    """
    minus_one = Cyc.rational(-1).embed(12)
    s = sqrt_in_field(minus_one)
    assert s is not None and s * s == -1

    two = Cyc.rational(2).embed(8)
    r = sqrt_in_field(two)
    assert r is not None and r * r == 2

    assert sqrt_in_field(Cyc.rational(2).embed(3)) is None


def test_field_roots_inside_and_outside_the_field():
    assert field_roots(Poly([-2, 0, 1])) is None
    assert field_roots(Poly([1, 0, 1])) is None
    assert field_roots(Poly([Fraction(-3), 2])) == [Fraction(3, 2)]

    roots = field_roots(Poly([Cyc.rational(1).embed(4), 0, 1]))
    assert roots is not None and len(roots) == 2
    i = Cyc.zeta(4)
    assert any(r == i for r in roots) and any(r == -i for r in roots)


def random_element(rng, conductor):
    fld = field(conductor)
    return Cyc(
        fld, [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(fld.degree)]
    )


@pytest.mark.parametrize("conductor", [3, 8, 9, 12])
def test_field_axioms_on_random_elements(conductor):
    rng = random.Random(conductor)
    one = Cyc.rational(1).embed(conductor)
    for _ in range(1000):
        a, b, c = (random_element(rng, conductor) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if a:
            assert a * a.inverse() == one
            assert (b / a) * a == b
