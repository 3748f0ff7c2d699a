"""
Cyclotomic fields Q(zeta_N) realized as Q[x]/Phi_N(x).

Elements of different conductors combine by embedding both into Q(zeta_lcm) along
zeta_N -> zeta_M^(M/N). The rationals are the conductor-1 field.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, List, Optional, Sequence, Tuple, Union

from sympy import divisors, isprime, mobius, primefactors, totient
from sympy.ntheory.residue_ntheory import sqrt_mod

from ..errors import ConductorMismatch, DivisionByZero
from .poly import Poly

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Poly:
    """Phi_n over Q: x^n - 1 divided by Phi_d for every proper divisor d of n."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    p = Poly([-1] + [0] * (n - 1) + [1], "x")
    for d in divisors(n):
        if d < n:
            p = p.exact_div(cyclotomic_polynomial(d))
    return p


class CyclotomicField:
    """Q(zeta_N) with its modulus Phi_N and precomputed reduction data."""

    def __init__(self, conductor: int):
        self.conductor = conductor
        self.modulus = cyclotomic_polynomial(conductor)
        self.degree = self.modulus.degree
        d = self.degree
        # x^k mod Phi_N for d <= k <= 2d - 2, as coefficient lists
        table: List[List[Fraction]] = []
        cur = [-c for c in self.modulus.coeffs[:-1]]
        for _ in range(max(d - 1, 0)):
            table.append(cur)
            top = cur[-1]
            nxt = [Fraction(0)] + cur[:-1]
            cur = [nxt[i] + top * table[0][i] for i in range(d)]
        self._fold = table
        # normalized trace of x^k, independent of the field the element lives in
        self._trace_weights = tuple(
            Fraction(int(mobius(conductor // math.gcd(k, conductor))),
                     int(totient(conductor // math.gcd(k, conductor))))
            for k in range(d)
        )

    def __repr__(self) -> str:
        return f"CyclotomicField({self.conductor})"

    def reduce(self, coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        d = self.degree
        cs = list(coeffs)
        if len(cs) <= d:
            return tuple(cs) + (Fraction(0),) * (d - len(cs))
        if len(cs) <= 2 * d - 1:
            low = cs[:d]
            for k in range(d, len(cs)):
                c = cs[k]
                if c:
                    row = self._fold[k - d]
                    for i in range(d):
                        low[i] += c * row[i]
            return tuple(low)
        rem = Poly(cs, "x") % self.modulus
        return tuple(rem.coeffs) + (Fraction(0),) * (d - len(rem.coeffs))


@lru_cache(maxsize=None)
def field(conductor: int) -> CyclotomicField:
    if conductor < 1:
        raise ValueError(f"conductor must be positive, got {conductor}")
    return CyclotomicField(conductor)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


class Cyc:
    """Immutable element of Q(zeta_N); ``coeffs[k]`` multiplies zeta_N^k."""

    __slots__ = ("field", "coeffs")

    def __init__(self, fld: CyclotomicField, coeffs: Sequence[Rational]):
        self.field = fld
        self.coeffs: Tuple[Fraction, ...] = fld.reduce([Fraction(c) for c in coeffs])

    # ---- constructors ----

    @classmethod
    def rational(cls, value: Rational) -> "Cyc":
        return cls(field(1), [value])

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyc":
        """zeta_n^k, with negative k allowed."""
        k %= n
        return cls(field(n), [0] * k + [1])

    @property
    def conductor(self) -> int:
        return self.field.conductor

    # ---- embedding ----

    def embed(self, m: int) -> "Cyc":
        """Image in Q(zeta_m); requires conductor | m."""
        n = self.conductor
        if m % n:
            raise ConductorMismatch(n, m)
        if m == n:
            return self
        step = m // n
        spread = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            spread[k * step] = c
        return Cyc(field(m), spread)

    def _pair(self, other: Any) -> Optional[Tuple["Cyc", "Cyc"]]:
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(other)
        if not isinstance(other, Cyc):
            return None
        if other.conductor == self.conductor:
            return self, other
        m = _lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    # ---- predicates ----

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other: object) -> bool:
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        return hash(sum(c * w for c, w in zip(self.coeffs, self.field._trace_weights)))

    # ---- arithmetic ----

    def __add__(self, other: Any) -> "Cyc":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyc(a.field, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "Cyc":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyc(a.field, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other: Any) -> "Cyc":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyc(a.field, [y - x for x, y in zip(a.coeffs, b.coeffs)])

    def __mul__(self, other: Any) -> "Cyc":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.field.degree == 1:
            return Cyc(a.field, [a.coeffs[0] * b.coeffs[0]])
        out = [Fraction(0)] * (2 * a.field.degree - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    out[i + j] += x * y
        return Cyc(a.field, out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        """Inverse via the extended gcd with Phi_N."""
        if not self:
            raise DivisionByZero(f"inverse of zero in Q(zeta_{self.conductor})")
        if self.field.degree == 1:
            return Cyc(self.field, [1 / self.coeffs[0]])
        g, s, _ = Poly(self.coeffs, "x").xgcd(self.field.modulus)
        if g.degree != 0:
            raise DivisionByZero(f"{self} is not invertible")
        return Cyc(self.field, s.coeffs)

    def __truediv__(self, other: Any) -> "Cyc":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other: Any) -> "Cyc":
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, k: int) -> "Cyc":
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc(self.field, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ---- printing ----

    def __str__(self) -> str:
        n = self.conductor
        if self.field.degree == 1:
            return str(self.coeffs[0])
        terms: List[str] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = f"z({n})" if k == 1 else f"z({n})^{k}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self) -> str:
        return f"Cyc({self})"


def as_cyc(value: Any) -> Cyc:
    if isinstance(value, Cyc):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Cyc.rational(value)
    raise TypeError(f"not a cyclotomic element: {value!r}")


def common_conductor(values: Sequence[Any]) -> int:
    m = 1
    for v in values:
        if isinstance(v, Cyc):
            m = _lcm(m, v.conductor)
    return m


def field_inverse(e: Any) -> Any:
    """Multiplicative inverse of any element of the tower."""
    if isinstance(e, (int, Fraction)) and not isinstance(e, bool):
        if not e:
            raise DivisionByZero("inverse of zero")
        return Cyc.rational(1 / Fraction(e))
    return e.inverse()


# ---- square roots by p-adic lifting ----


def _primitive_root_of_unity(n: int, p: int) -> int:
    factors = primefactors(n)
    for g in range(2, p):
        w = pow(g, (p - 1) // n, p)
        if all(pow(w, n // ell, p) != 1 for ell in factors):
            return w
    raise ArithmeticError(f"no primitive {n}-th root of unity mod {p}")


def _split_primes(n: int, count: int) -> List[int]:
    """The first primes p = 1 (mod n), p odd."""
    out: List[int] = []
    k = 1
    while len(out) < count:
        p = k * n + 1
        if p > 2 and isprime(p):
            out.append(p)
        k += 1
    return out


def _int_eval(coeffs: Sequence[int], x: int, mod: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % mod
    return acc


def _inverse_matrix_mod(rows: List[List[int]], mod: int, p: int) -> List[List[int]]:
    """Gauss-Jordan over Z/mod where mod is a power of the prime p."""
    n = len(rows)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] % p)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, mod)
        aug[col] = [(v * inv) % mod for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(a - f * b) % mod for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _int_square_mod_phi(b: Sequence[int], fld: CyclotomicField) -> Tuple[Fraction, ...]:
    sq = Cyc(fld, b)
    return (sq * sq).coeffs


def sqrt_in_field(a: Cyc, max_bits: int = 4096) -> Optional[Cyc]:
    """An exact square root of ``a`` inside its own field, or None.

    The element is scaled to an algebraic integer, its images under all embeddings
    into Z/p^e (p = 1 mod N) are square-rooted and lifted, and each sign pattern is
    interpolated back and checked exactly.
    """
    a = as_cyc(a)
    if not a:
        return a
    fld = a.field
    d = fld.degree
    if d == 1:
        r = a.coeffs[0]
        if r < 0:
            return None
        num, den = math.isqrt(r.numerator), math.isqrt(r.denominator)
        if num * num == r.numerator and den * den == r.denominator:
            return Cyc(fld, [Fraction(num, den)])
        return None

    n = fld.conductor
    scale = 1
    for c in a.coeffs:
        scale = _lcm(scale, c.denominator)
    c_int = [int(c * scale * scale) for c in a.coeffs]

    exps = [j for j in range(1, n) if math.gcd(j, n) == 1]
    chosen: Optional[Tuple[int, int, List[int]]] = None
    for p in _split_primes(n, 24):
        w = _primitive_root_of_unity(n, p)
        values = [_int_eval(c_int, pow(w, j, p), p) for j in exps]
        if any(v == 0 for v in values):
            continue
        roots = []
        for v in values:
            r = sqrt_mod(v, p)
            if r is None:
                logger.debug(f"{a} is not a square modulo {p}")
                return None
            roots.append(int(r))
        if chosen is None:
            chosen = (p, w, roots)
    if chosen is None:
        raise ArithmeticError(f"no usable prime for square root in Q(zeta_{n})")
    p, w, roots = chosen

    bits = 64
    while bits <= max_bits:
        e = max(1, bits // p.bit_length() + 1)
        mod = p**e
        # lift the root of unity, then the square roots, to Z/p^e
        wl = w
        for _ in range(e.bit_length() + 1):
            wl = (wl - (pow(wl, n, mod) - 1) * pow(n * pow(wl, n - 1, mod), -1, mod)) % mod
        points = [pow(wl, j, mod) for j in exps]
        targets = [_int_eval(c_int, x, mod) for x in points]
        lifted = []
        for r, t in zip(roots, targets):
            for _ in range(e.bit_length() + 1):
                r = (r - (r * r - t) * pow(2 * r, -1, mod)) % mod
            lifted.append(r)
        vinv = _inverse_matrix_mod([[pow(x, i, mod) for i in range(d)] for x in points], mod, p)
        half = mod // 2
        limit = math.isqrt(mod)
        for signs in product((1, -1), repeat=d - 1):
            vals = [lifted[0]] + [s * r for s, r in zip(signs, lifted[1:])]
            coords = []
            for row in vinv:
                v = sum(x * y for x, y in zip(row, vals)) % mod
                coords.append(v - mod if v > half else v)
            if any(abs(v) > limit for v in coords):
                continue
            if _int_square_mod_phi(coords, fld) == tuple(Fraction(c) for c in c_int):
                return Cyc(fld, [Fraction(v, scale) for v in coords])
        bits *= 2
    return None


def field_roots(p: Poly) -> Optional[List[Cyc]]:
    """Roots of a degree 1 or 2 polynomial that lie in the coefficients' field.

    Returns None when the roots are not expressible there (or the degree exceeds 2).
    """
    if p.degree < 1:
        return []
    cs = [as_cyc(c) for c in p.coeffs]
    m = common_conductor(cs)
    cs = [c.embed(m) for c in cs]
    if p.degree == 1:
        return [-cs[0] / cs[1]]
    if p.degree > 2:
        return None
    c0, c1, c2 = cs
    disc = c1 * c1 - c0 * c2 * 4
    s = sqrt_in_field(disc)
    if s is None:
        return None
    if not s:
        return [-c1 / (c2 * 2)]
    return [(-c1 + s) / (c2 * 2), (-c1 - s) / (c2 * 2)]
