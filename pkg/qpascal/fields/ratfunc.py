"""
Rational functions in one indeterminate over a cyclotomic field.

Canonical form: gcd(numerator, denominator) = 1 and the denominator is monic, so two
rational functions are equal exactly when their parts compare equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional, Tuple

from ..errors import DivisionByZero
from .cyclotomic import Cyc, as_cyc
from .poly import Poly

VAR = "L"


class RatFunc:
    """Immutable element of Q(zeta_N)(L)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Optional[Poly] = None, *, normalized: bool = False):
        var = num.var
        if den is None:
            den = Poly([1], var)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not normalized:
            num, den = _normalize(num, den)
        self.num = num.with_var(var)
        self.den = den.with_var(var)

    # ---- constructors ----

    @classmethod
    def variable(cls, var: str = VAR) -> "RatFunc":
        return cls(Poly([0, 1], var), normalized=True)

    @classmethod
    def constant(cls, c: Any, var: str = VAR) -> "RatFunc":
        return cls(Poly([as_cyc(c)], var), normalized=True)

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p, Poly([1], p.var), normalized=True)

    @property
    def var(self) -> str:
        return self.num.var

    # ---- predicates ----

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def constant_value(self) -> Cyc:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return as_cyc(self.num[0] if self.num else 0)

    def _coerce(self, other: Any) -> Optional["RatFunc"]:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, Fraction, Cyc)):
            return RatFunc.constant(other, self.var)
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den))

    # ---- arithmetic ----

    def __add__(self, other: Any) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        g = self.den.gcd(o.den)
        da = self.den.exact_div(g)
        db = o.den.exact_div(g)
        return RatFunc(self.num * db + o.num * da, da * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, normalized=True)

    def __sub__(self, other: Any) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self or not o:
            return RatFunc(Poly((), self.var), normalized=True)
        if self.den.degree == 0 and o.den.degree == 0:
            return RatFunc(self.num * o.num, normalized=True)
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        num = self.num.exact_div(g1) * o.num.exact_div(g2)
        den = self.den.exact_div(g2) * o.den.exact_div(g1)
        return RatFunc(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        """Reciprocal: swap the parts and renormalize."""
        if not self:
            raise DivisionByZero("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: Any) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num**k, self.den**k, normalized=True)

    # ---- evaluation ----

    def evaluate(self, value: Any) -> Cyc:
        """Specialize L to a cyclotomic value."""
        d = as_cyc(self.den.evaluate(value))
        if not d:
            raise DivisionByZero(f"denominator {self.den} vanishes at {value}")
        return as_cyc(self.num.evaluate(value)) / d

    __call__ = evaluate

    def parts(self) -> Tuple[Poly, Poly]:
        return self.num, self.den

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _normalize(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    var = num.var
    if not num:
        return Poly((), var), Poly([1], var)
    g = num.gcd(den)
    if g.degree > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    inv = 1 / den.lc
    return num.scale(inv), den.scale(inv)


def normalize(f: RatFunc) -> RatFunc:
    """Canonical form of f (idempotent)."""
    return RatFunc(f.num, f.den)
