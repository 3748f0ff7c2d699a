"""
Residue rings K[L]/(m) for a squarefree modulus m over a cyclotomic field K.

When m is irreducible the ring is a field. Otherwise it is a product of fields, and
a zero test or an inversion can meet an element that is neither zero nor a unit. That
element then shares a proper factor with m, and the operation raises BranchSplit with
that factor. The caller splits m and reruns the computation on each factor, so no
factorization is ever needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, List, Optional

from ..errors import BranchSplit, DivisionByZero
from .cyclotomic import Cyc
from .poly import Poly
from .ratfunc import RatFunc


class ResidueRing:
    """K[L]/(modulus); the modulus is kept monic."""

    def __init__(self, modulus: Poly):
        if modulus.degree < 1:
            raise ValueError(f"residue modulus must have positive degree, got {modulus}")
        self.modulus = modulus.monic()
        self.var = modulus.var

    def __repr__(self) -> str:
        return f"ResidueRing({self.modulus})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ResidueRing) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def element(self, value: Any) -> "ResidueElem":
        if isinstance(value, ResidueElem):
            return value
        if isinstance(value, Poly):
            return ResidueElem(self, value % self.modulus)
        if isinstance(value, RatFunc):
            return self.element(value.num) / self.element(value.den)
        return ResidueElem(self, Poly([value], self.var))

    def generator(self) -> "ResidueElem":
        """The class of L."""
        return self.element(Poly([0, 1], self.var))

    def split(self, factor: Poly) -> List["ResidueRing"]:
        """The two rings for factor and modulus/factor."""
        f = factor.monic()
        return [ResidueRing(f), ResidueRing(self.modulus.exact_div(f))]


class ResidueElem:
    """Immutable residue class; ``value`` is the reduced representative."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: ResidueRing, value: Poly):
        self.ring = ring
        self.value = value

    def _coerce(self, other: Any) -> Optional["ResidueElem"]:
        if isinstance(other, ResidueElem):
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, Fraction, Cyc)):
            return ResidueElem(self.ring, Poly([other], self.ring.var))
        return None

    def __bool__(self) -> bool:
        if not self.value:
            return False
        g = self.value.gcd(self.ring.modulus)
        if g.degree > 0:
            raise BranchSplit(g)
        return True

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return not (self - o)

    def __hash__(self) -> int:
        return hash(self.value)

    def __add__(self, other: Any) -> "ResidueElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ResidueElem(self.ring, self.value + o.value)

    __radd__ = __add__

    def __neg__(self) -> "ResidueElem":
        return ResidueElem(self.ring, -self.value)

    def __sub__(self, other: Any) -> "ResidueElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ResidueElem(self.ring, self.value - o.value)

    def __rsub__(self, other: Any) -> "ResidueElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ResidueElem(self.ring, o.value - self.value)

    def __mul__(self, other: Any) -> "ResidueElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ResidueElem(self.ring, (self.value * o.value) % self.ring.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "ResidueElem":
        if not self.value:
            raise DivisionByZero(f"inverse of zero modulo {self.ring.modulus}")
        g, s, _ = self.value.xgcd(self.ring.modulus)
        if g.degree > 0:
            raise BranchSplit(g)
        return ResidueElem(self.ring, s % self.ring.modulus)

    def __truediv__(self, other: Any) -> "ResidueElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "ResidueElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "ResidueElem":
        if k < 0:
            return self.inverse() ** (-k)
        result = ResidueElem(self.ring, Poly([1], self.ring.var))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self) -> str:
        return f"[{self.value}] mod ({self.ring.modulus})"

    def __repr__(self) -> str:
        return f"ResidueElem({self})"
