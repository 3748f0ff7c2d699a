"""
The q-Pascal-triangle representations of B3 in dimension n+1.

sigma1 = A_n(q) D_n(q)# Lambda and sigma2 = Lambda# D_n(q) ((A_n(q^-1))^-1)#, valid whenever
lambda_i * lambda_(n-i) is one constant c. The braid relation is checked at construction.
Also holds the F_(r,n) operator with its minors criterion at q = 1 and the (n)_q test
for Lambda = I.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .errors import (
    BraidRelationFailed,
    IndexOutOfRange,
    InternalCheckFailed,
    LambdaConditionViolated,
    ShapeMismatch,
    ZeroParameter,
)
from .linalg import ExactMatrix, minor
from .qcomb import QContext, q_binomial, q_exp_nilpotent, q_int, q_triangular

logger = logging.getLogger(__name__)


def _lift(x: Any) -> Any:
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


@dataclass(frozen=True)
class RepParams:
    """Parameters (n, q, lambda_0..lambda_n, c) of one representation."""

    n: int
    q: Any
    lambdas: Tuple[Any, ...]
    c: Any

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", _lift(self.q))
        object.__setattr__(self, "c", _lift(self.c))
        object.__setattr__(self, "lambdas", tuple(_lift(x) for x in self.lambdas))
        if self.n < 0:
            raise IndexOutOfRange(f"n must be >= 0, got {self.n}")
        if len(self.lambdas) != self.n + 1:
            raise ShapeMismatch(f"expected {self.n + 1} lambdas, got {len(self.lambdas)}")
        if not self.q:
            raise ZeroParameter("q must be nonzero")
        if not self.c:
            raise ZeroParameter("c must be nonzero")
        for i, lam in enumerate(self.lambdas):
            if not lam:
                raise ZeroParameter(f"lambda_{i} must be nonzero")
        check_lambda_condition(self.lambdas, self.c)

    @property
    def ctx(self) -> QContext:
        return QContext(self.q)


def check_lambda_condition(lambdas: Sequence[Any], c: Any) -> None:
    """Raise LambdaConditionViolated unless lambda_i * lambda_(n-i) = c for all i."""
    n = len(lambdas) - 1
    for i in range(n // 2 + 1):
        prod = lambdas[i] * lambdas[n - i]
        if prod != c:
            raise LambdaConditionViolated(
                i, f"lambda_{i} * lambda_{n - i} = {prod}, expected c = {c}"
            )


def complete_lambdas(first_half: Sequence[Any], c: Any, n: int) -> Tuple[Any, ...]:
    """Extend lambda_0..lambda_[n/2] to the full tuple via lambda_(n-i) = c / lambda_i."""
    half = n // 2 + 1
    if len(first_half) != half:
        raise ShapeMismatch(f"expected {half} leading lambdas for n={n}, got {len(first_half)}")
    lams: List[Any] = [_lift(x) for x in first_half] + [None] * (n + 1 - half)
    for i, lam in enumerate(first_half):
        if not lam:
            raise ZeroParameter(f"lambda_{i} must be nonzero")
        if n - i >= half:
            lams[n - i] = _lift(c) / lam
    if n % 2 == 0 and lams[n // 2] * lams[n // 2] != c:
        raise LambdaConditionViolated(n // 2, f"middle lambda squared must equal c = {c}")
    return tuple(lams)


def identity_lambdas(n: int) -> Tuple[Any, ...]:
    return tuple(Fraction(1) for _ in range(n + 1))


@dataclass(frozen=True)
class BraidRep:
    """Images of sigma1 and sigma2; params is None for derived pairs such as restrictions."""

    sigma1: ExactMatrix
    sigma2: ExactMatrix
    params: Optional[RepParams] = field(default=None, compare=False)

    @property
    def dim(self) -> int:
        return self.sigma1.rows

    def satisfies_braid_relation(self) -> bool:
        return braid_relation_holds(self.sigma1, self.sigma2)

    def specialize(self, fn: Callable[[Any], Any]) -> "BraidRep":
        """Apply fn to every entry, e.g. evaluate a symbolic parameter."""
        return BraidRep(self.sigma1.map(fn), self.sigma2.map(fn), None)


def braid_relation_holds(a: ExactMatrix, b: ExactMatrix) -> bool:
    return a @ b @ a == b @ a @ b


# ---- transforms ----


def sharp(m: ExactMatrix) -> ExactMatrix:
    """m#_ij = m_(n-i, n-j)."""
    if not m.is_square():
        raise ShapeMismatch("sharp needs a square matrix")
    n = m.rows - 1
    return ExactMatrix([[m.entries[n - i][n - j] for j in range(n + 1)] for i in range(n + 1)])


def s_transform(m: ExactMatrix) -> ExactMatrix:
    """m^s_ij = m_(n-j, n-i), the transpose across the anti-diagonal."""
    if not m.is_square():
        raise ShapeMismatch("s-transform needs a square matrix")
    n = m.rows - 1
    return ExactMatrix([[m.entries[n - j][n - i] for j in range(n + 1)] for i in range(n + 1)])


# ---- building blocks ----


def build_A(n: int, ctx: QContext) -> ExactMatrix:
    """a_km = [n-k choose n-m]_q for k <= m, zero below the diagonal."""
    if n < 0:
        raise IndexOutOfRange(f"n must be >= 0, got {n}")
    return ExactMatrix(
        [
            [q_binomial(n - k, n - m, ctx) if k <= m else Fraction(0) for m in range(n + 1)]
            for k in range(n + 1)
        ]
    )


def build_D(n: int, ctx: QContext) -> ExactMatrix:
    """diag(q_0, ..., q_n)."""
    if n < 0:
        raise IndexOutOfRange(f"n must be >= 0, got {n}")
    return ExactMatrix.diagonal([q_triangular(r, ctx) for r in range(n + 1)])


def build_rep(params: RepParams) -> BraidRep:
    n, ctx = params.n, params.ctx
    lam = ExactMatrix.diagonal(list(params.lambdas))
    d = build_D(n, ctx)
    sigma1 = build_A(n, ctx) @ sharp(d) @ lam
    a_inv = build_A(n, ctx.inverted()).inverse()
    sigma2 = sharp(lam) @ d @ sharp(a_inv)

    if not sigma1.is_upper_triangular():
        raise InternalCheckFailed("sigma1 image is not upper triangular")
    if not sigma2.is_lower_triangular():
        raise InternalCheckFailed("sigma2 image is not lower triangular")
    if not braid_relation_holds(sigma1, sigma2):
        raise BraidRelationFailed(f"braid relation fails for n={n}, q={params.q}")
    logger.info(f"Built representation of dimension {n + 1} at q={params.q}")
    return BraidRep(sigma1, sigma2, params)


def sigma1_eigenvalues(params: RepParams) -> List[Any]:
    """Diagonal of the sigma1 image: q_(n-r) * lambda_r."""
    ctx = params.ctx
    return [q_triangular(params.n - r, ctx) * lam for r, lam in enumerate(params.lambdas)]


# ---- irreducibility predicates ----


def f_operator(r: int, n: int, ctx: QContext, lambdas: Sequence[Any]) -> ExactMatrix:
    """F_(r,n) = exp_q(sum (k+1)_q E_(k,k+1)) - q_(n-r) lambda_r (D_n Lambda#)^-1."""
    if not 0 <= r <= n:
        raise IndexOutOfRange(f"F_(r,n) needs 0 <= r <= n, got r={r}, n={n}")
    if len(lambdas) != n + 1:
        raise ShapeMismatch(f"expected {n + 1} lambdas, got {len(lambdas)}")
    shift = ExactMatrix(
        [
            [q_int(k + 1, ctx) if m == k + 1 else Fraction(0) for m in range(n + 1)]
            for k in range(n + 1)
        ]
    )
    expo = q_exp_nilpotent(shift, ctx)
    lam_sharp = sharp(ExactMatrix.diagonal([_lift(x) for x in lambdas]))
    eigen = q_triangular(n - r, ctx) * _lift(lambdas[r])
    scaled = (build_D(n, ctx) @ lam_sharp).inverse().scale(eigen)
    return expo - scaled


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of the minors criterion; witnesses[r] is the row set found, or None."""

    holds: bool
    witnesses: Dict[int, Optional[Tuple[int, ...]]]


def operator_irred_criterion_q1(n: int, lambdas: Sequence[Any]) -> CriterionResult:
    """For each r <= [n/2], search row sets of size n-r with a nonzero minor on columns r+1..n.

    Row sets are tried in lexicographic order and the first hit is kept.
    """
    lams = [_lift(x) for x in lambdas]
    if len(lams) != n + 1:
        raise ShapeMismatch(f"expected {n + 1} lambdas, got {len(lams)}")
    check_lambda_condition(lams, lams[0] * lams[n])
    ctx = QContext(Fraction(1))
    witnesses: Dict[int, Optional[Tuple[int, ...]]] = {}
    for r in range(n // 2 + 1):
        size = n - r
        if size == 0:
            witnesses[r] = ()
            continue
        fs = s_transform(f_operator(r, n, ctx, lams))
        cols = list(range(r + 1, n + 1))
        witnesses[r] = next(
            (rows for rows in combinations(range(n + 1), size) if minor(fs, rows, cols)),
            None,
        )
        logger.debug(f"criterion r={r}: witness rows {witnesses[r]}")
    return CriterionResult(all(w is not None for w in witnesses.values()), witnesses)


def identity_lambda_irreducible(n: int, ctx: QContext) -> bool:
    """With Lambda = I of size n+1: irreducible iff (n)_q != 0."""
    if n < 1:
        raise IndexOutOfRange(f"the (n)_q test needs n >= 1, got {n}")
    return bool(q_int(n, ctx))
