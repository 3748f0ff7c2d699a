"""
q-deformed combinatorics: q-integers, q-factorials, Gaussian binomials, the triangular
powers q_r and the q-exponential of a nilpotent matrix.

Gaussian binomials come from the q-Pascal recurrence over Q[q] and are evaluated
afterwards, so they stay defined at roots of unity where q-factorials vanish.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .errors import IndexOutOfRange, QFactorialVanishes, ShapeMismatch, ZeroParameter
from .fields import Poly
from .linalg import ExactMatrix

logger = logging.getLogger(__name__)

QVAR = "q"


@dataclass(frozen=True)
class QContext:
    """The deformation parameter q (nonzero)."""

    q: Any

    def __post_init__(self) -> None:
        if isinstance(self.q, bool):
            raise TypeError("q must be a field element")
        if isinstance(self.q, int):
            object.__setattr__(self, "q", Fraction(self.q))
        if not self.q:
            raise ZeroParameter("q must be nonzero")

    @property
    def q_inv(self) -> Any:
        return 1 / self.q

    def inverted(self) -> "QContext":
        """The context at q^-1."""
        return QContext(self.q_inv)


def q_int(j: int, ctx: QContext) -> Any:
    """(j)_q = 1 + q + ... + q^(j-1); (0)_q = 0."""
    if j < 0:
        raise IndexOutOfRange(f"q-integer needs j >= 0, got {j}")
    acc: Any = Fraction(0)
    power: Any = Fraction(1)
    for _ in range(j):
        acc = acc + power
        power = power * ctx.q
    return acc


def q_factorial(j: int, ctx: QContext) -> Any:
    """(j)!_q = (1)_q (2)_q ... (j)_q; (0)!_q = 1."""
    if j < 0:
        raise IndexOutOfRange(f"q-factorial needs j >= 0, got {j}")
    acc: Any = Fraction(1)
    for k in range(1, j + 1):
        acc = acc * q_int(k, ctx)
    return acc


@lru_cache(maxsize=None)
def q_binomial_poly(n: int, r: int) -> Poly:
    """Gaussian binomial [n choose r] as a polynomial in q over Q."""
    if not 0 <= r <= n:
        raise IndexOutOfRange(f"q-binomial needs 0 <= r <= n, got n={n}, r={r}")
    if r == 0 or r == n:
        return Poly([1], QVAR)
    shift = Poly.monomial(Fraction(1), r, QVAR)
    return q_binomial_poly(n - 1, r - 1) + shift * q_binomial_poly(n - 1, r)


def q_binomial(n: int, r: int, ctx: QContext) -> Any:
    return q_binomial_poly(n, r).evaluate(ctx.q)


def q_triangular(r: int, ctx: QContext) -> Any:
    """q_r = q^(r(r-1)/2)."""
    if r < 0:
        raise IndexOutOfRange(f"q_r needs r >= 0, got {r}")
    return ctx.q ** (r * (r - 1) // 2)


def q_exp_nilpotent(m: ExactMatrix, ctx: QContext) -> ExactMatrix:
    """exp_q(m) = sum_k m^k / (k)!_q for strictly upper triangular m."""
    if not m.is_square():
        raise ShapeMismatch("q-exponential of a non-square matrix")
    if any(m.diagonal_entries()) or not m.is_upper_triangular():
        raise ShapeMismatch("q-exponential needs a strictly upper triangular matrix")
    result = ExactMatrix.identity(m.rows)
    power = result
    for k in range(1, m.rows):
        power = power @ m
        if all(not x for row in power.entries for x in row):
            break
        f = q_factorial(k, ctx)
        if not f:
            logger.debug(f"(k)!_q vanishes at k={k}, q={ctx.q}")
            raise QFactorialVanishes(k)
        result = result + power.scale(1 / f)
    return result
