"""
q-Combinatorics Tests

Gaussian binomials are built from the q-Pascal recurrence, so they must also satisfy
the mirrored recurrence, the symmetry in r, the classical binomials at q = 1 and the
product formula. At q = zeta_3 the q-factorial (3)!_q vanishes, which makes the
q-exponential undefined for nilpotents of index four or more.
"""

import math
from fractions import Fraction

import pytest
import sympy

from qpascal.errors import IndexOutOfRange, QFactorialVanishes, ShapeMismatch, ZeroParameter
from qpascal.fields import Cyc, Poly
from qpascal.linalg import ExactMatrix
from qpascal.qcomb import (
    QContext,
    q_binomial,
    q_binomial_poly,
    q_exp_nilpotent,
    q_factorial,
    q_int,
    q_triangular,
)


@pytest.mark.parametrize("n", range(1, 13))
def test_mirrored_recurrence_and_symmetry(n):
    for r in range(1, n):
        shift = Poly.monomial(Fraction(1), n - r, "q")
        assert q_binomial_poly(n, r) == q_binomial_poly(n - 1, r) + shift * q_binomial_poly(
            n - 1, r - 1
        )
        assert q_binomial_poly(n, r) == q_binomial_poly(n, n - r)


@pytest.mark.parametrize("n", range(0, 13))
def test_classical_binomials_at_q_one(n):
    ctx = QContext(1)
    assert [q_binomial(n, r, ctx) for r in range(n + 1)] == [math.comb(n, r) for r in range(n + 1)]


def test_product_formula_matches_sympy():
    q = sympy.symbols("q")
    for n, r in [(4, 2), (6, 3), (7, 2)]:
        expr = sympy.Integer(1)
        for i in range(1, r + 1):
            expr *= (1 - q ** (n - r + i)) / (1 - q**i)
        expected = [int(c) for c in reversed(sympy.Poly(sympy.cancel(expr), q).all_coeffs())]
        assert [int(c) for c in q_binomial_poly(n, r).coeffs] == expected


def test_values_at_zeta3():
    ctx = QContext(Cyc.zeta(3))
    assert q_int(0, ctx) == 0
    assert q_int(2, ctx) == -(Cyc.zeta(3) ** 2)
    assert q_int(3, ctx) == 0
    assert q_factorial(2, ctx) == 1 + Cyc.zeta(3)
    assert q_factorial(3, ctx) == 0
    assert q_binomial(3, 1, ctx) == 0
    assert q_triangular(3, ctx) == 1
    assert q_triangular(2, ctx) == Cyc.zeta(3)


def test_q_exp_at_q_one_is_classical():
    m = ExactMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    expected = ExactMatrix([[1, 1, Fraction(1, 2)], [0, 1, 1], [0, 0, 1]])
    assert q_exp_nilpotent(m, QContext(1)) == expected


def test_q_exp_reports_vanishing_factorial():
    """
    The all-ones strictly upper triangular 4x4 matrix has a nonzero cube, and the
    cube needs 1/(3)!_q, which does not exist at q = zeta_3.
    """
    m = ExactMatrix([[1 if j > i else 0 for j in range(4)] for i in range(4)])
    with pytest.raises(QFactorialVanishes) as exc_info:
        q_exp_nilpotent(m, QContext(Cyc.zeta(3)))
    assert exc_info.value.k == 3
    assert exc_info.value.exit_code == 3


def test_invalid_arguments():
    with pytest.raises(ZeroParameter):
        QContext(0)
    with pytest.raises(IndexOutOfRange):
        q_binomial_poly(2, 3)
    with pytest.raises(IndexOutOfRange):
        q_int(-1, QContext(2))
    with pytest.raises(ShapeMismatch):
        q_exp_nilpotent(ExactMatrix([[1, 1], [0, 0]]), QContext(2))
    with pytest.raises(ShapeMismatch):
        q_exp_nilpotent(ExactMatrix([[0, 0], [1, 0]]), QContext(2))
