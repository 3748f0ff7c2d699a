"""
Dense univariate polynomials over any exact field of the tower.

Coefficients are stored low degree first. A coefficient only has to support ring
arithmetic, division and truthiness, so the same class serves Q, Q(zeta_N), Q(zeta_3)(L)
and the residue rings used for dynamic evaluation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

from ..errors import DivisionByZero


def _lift(c: Any) -> Any:
    if isinstance(c, bool):
        raise TypeError("booleans are not field elements")
    if isinstance(c, int):
        return Fraction(c)
    return c


def _fmt_coeff(c: Any) -> str:
    return str(c)


def _is_compound(s: str) -> bool:
    """True when s has a top-level + or - after its first character."""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            return True
        elif ch == "/" and depth == 0:
            return True
    return False


class Poly:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of ``var**k``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Any] = (), var: str = "x"):
        cs = [_lift(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: Tuple[Any, ...] = tuple(cs)
        self.var = var

    # ---- constructors ----

    @classmethod
    def constant(cls, c: Any, var: str = "x") -> "Poly":
        return cls([c], var)

    @classmethod
    def monomial(cls, c: Any, k: int, var: str = "x") -> "Poly":
        return cls([c * 0] * k + [c], var)

    @classmethod
    def x(cls, var: str = "x", one: Any = 1) -> "Poly":
        one = _lift(one)
        return cls([one * 0, one], var)

    # ---- basic properties ----

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Any:
        if not self.coeffs:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            if self.degree <= 0:
                return (self.coeffs[0] if self.coeffs else 0) == other
            return False
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0]) if self.coeffs else hash(0)
        return hash(tuple(self.coeffs))

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    def map_coeffs(self, fn: Callable[[Any], Any]) -> "Poly":
        return Poly([fn(c) for c in self.coeffs], self.var)

    # ---- arithmetic ----

    def _coerce(self, other: Any) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if not isinstance(other, (str, bytes, list, tuple)):
            return Poly([other], self.var)
        return None

    def __add__(self, other: Any) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other: Any) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "Poly":
        return (-self) + other

    def __mul__(self, other: Any) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly((), self.var)
        out: List[Any] = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                t = x * y
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly([self.lc * 0 + 1] if self.coeffs else [1], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Any) -> "Poly":
        return Poly([x * c for x in self.coeffs], self.var)

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) <= db:
            return Poly((), self.var), self
        inv = 1 / other.lc
        quot: List[Any] = [None] * (len(rem) - db)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db] * inv
            quot[k] = c
            for j in range(db):
                rem[k + j] = rem[k + j] - c * other.coeffs[j]
        return Poly(quot, self.var), Poly(rem[:db], self.var)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "Poly") -> bool:
        return not (other % self)

    # ---- gcd family ----

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        inv = 1 / self.lc
        return Poly([c * inv for c in self.coeffs], self.var)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0."""
        a, b = self, other
        while b:
            a, b = b, (a % b).monic()
        return a.monic()

    def xgcd(self, other: "Poly") -> Tuple["Poly", "Poly", "Poly"]:
        """Return (g, s, t) with s*self + t*other = g and g monic."""
        one = Poly([1], self.var)
        zero = Poly((), self.var)
        r0, r1 = self, other
        s0, s1 = one, zero
        t0, t1 = zero, one
        while r1:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0:
            return r0, s0, t0
        inv = 1 / r0.lc
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def derivative(self) -> "Poly":
        return Poly([c * k for k, c in enumerate(self.coeffs)][1:], self.var)

    def squarefree_part(self) -> "Poly":
        """Monic product of the distinct irreducible factors (characteristic zero)."""
        if self.degree <= 0:
            return self.monic()
        return self.exact_div(self.gcd(self.derivative())).monic()

    def resultant(self, other: "Poly") -> Any:
        """Resultant over a field via the Euclidean remainder sequence."""
        a, b = self, other
        if not a or not b:
            return Fraction(0)
        da, db = a.degree, b.degree
        if db == 0:
            return b.lc**da
        if da == 0:
            return a.lc**db
        r = a % b
        if not r:
            return Fraction(0)
        sign = -1 if (da * db) % 2 else 1
        return b.lc ** (da - r.degree) * b.resultant(r) * sign

    # ---- evaluation and printing ----

    def evaluate(self, x: Any) -> Any:
        acc: Any = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms: List[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = _fmt_coeff(c)
            if k == 0:
                terms.append(cs)
                continue
            mono = self.var if k == 1 else f"{self.var}^{k}"
            if cs == "1":
                terms.append(mono)
            elif cs == "-1":
                terms.append("-" + mono)
            elif _is_compound(cs):
                terms.append(f"({cs})*{mono}")
            else:
                terms.append(f"{cs}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd of two polynomials over the same field."""
    return a.gcd(b)


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return Poly((), a.var)
    return (a * b).exact_div(a.gcd(b)).monic()


def gcd_all(polys: Sequence[Poly], var: str = "x") -> Poly:
    g = Poly((), var)
    for p in polys:
        g = g.gcd(p)
    return g
