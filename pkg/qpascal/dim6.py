"""
The six-dimensional member of the family at q = zeta_3.

Parameters: c = 1, lambda = (1, L, q^2, q, 1/L, 1) with L = lambda_1 either a cyclotomic
value or the indeterminate of Q(zeta_3)(L). The eigenvectors u_1..u_6 of rho(sigma1) give
the transition matrix P; conjugation yields X = diag(q, L, q^2, q^2, 1/L, 1) and
Y = P^-1 rho(sigma2) P with columns K_1..K_6.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Tuple

from .braidrep import BraidRep, RepParams, braid_relation_holds, build_rep
from .errors import (
    IndexOutOfRange,
    InadmissibleLambda,
    InternalCheckFailed,
    SingularMatrix,
    ZeroParameter,
)
from .fields import Cyc, RatFunc, parse_element
from .linalg import ExactMatrix, ExactVector

logger = logging.getLogger(__name__)

Q = Cyc.zeta(3)
Q2 = Q * Q


def symbolic_lambda1() -> RatFunc:
    """The indeterminate lambda_1 as an element of Q(zeta_3)(L)."""
    return RatFunc.variable()


def is_symbolic(lambda1: Any) -> bool:
    return isinstance(lambda1, RatFunc) and not lambda1.is_constant()


def is_admissible(lambda1: Any) -> bool:
    """lambda_1 not in {0, -1, 1, q, q^2}; the indeterminate is admissible."""
    if is_symbolic(lambda1):
        return True
    return all(lambda1 != v for v in (0, 1, -1, Q, Q2))


def dim6_params(lambda1: Any) -> RepParams:
    return RepParams(5, Q, (1, lambda1, Q2, Q, 1 / lambda1, 1), 1)


def eigenvalues_mu(lambda1: Any) -> List[Any]:
    """Diagonal of X: (q, L, q^2, q^2, 1/L, 1)."""
    return [Q, lambda1, Q2, Q2, 1 / lambda1, Cyc.rational(1)]


@dataclass(frozen=True)
class Dim6Rep:
    lambda1: Any
    rho1: ExactMatrix
    rho2: ExactMatrix
    admissible: bool

    @property
    def q(self) -> Cyc:
        return Q

    def as_braid_rep(self) -> BraidRep:
        return BraidRep(self.rho1, self.rho2, dim6_params(self.lambda1))


def build_dim6(lambda1: Any, cross_check: bool = True) -> Dim6Rep:
    """The two generator images written out entry by entry."""
    if not lambda1:
        raise ZeroParameter("lambda_1 must be nonzero")
    L = lambda1
    Li = 1 / L
    q, q2 = Q, Q2
    rho1 = ExactMatrix(
        [
            [q, -q2 * L, q2, q2, -q2 * Li, 1],
            [0, L, q2, 0, Li, 1],
            [0, 0, q2, 0, 0, 1],
            [0, 0, 0, q2, -q2 * Li, 1],
            [0, 0, 0, 0, Li, 1],
            [0, 0, 0, 0, 0, 1],
        ]
    )
    rho2 = ExactMatrix(
        [
            [1, 0, 0, 0, 0, 0],
            [-Li, Li, 0, 0, 0, 0],
            [q, 1, q2, 0, 0, 0],
            [-q2, 0, 0, q2, 0, 0],
            [L, -L, 0, -L, L, 0],
            [-1, -q2, -q, 1, q2, q],
        ]
    )
    if cross_check and not matches_general_construction(rho1, rho2, L):
        raise InternalCheckFailed("dimension-6 matrices disagree with the general construction")
    rep = Dim6Rep(L, rho1, rho2, is_admissible(L))
    logger.info(f"Built dimension-6 representation at lambda_1={L} (admissible={rep.admissible})")
    return rep


def matches_general_construction(rho1: ExactMatrix, rho2: ExactMatrix, lambda1: Any) -> bool:
    general = build_rep(dim6_params(lambda1))
    return general.sigma1 == rho1 and general.sigma2 == rho2


def _require_admissible(lambda1: Any) -> None:
    if not is_admissible(lambda1):
        raise InadmissibleLambda(f"lambda_1={lambda1} lies in {{0, -1, 1, q, q^2}}")


def eigenvectors_u(lambda1: Any) -> List[ExactVector]:
    """u_1..u_6, checked against rho(sigma1).

    The third component of u_3 is (q^2 - L)(q^2 - q); that is the value for which
    rho(sigma1) u_3 = q^2 u_3.
    """
    _require_admissible(lambda1)
    L = lambda1
    q, q2 = Q, Q2
    us = [
        ExactVector([1, 0, 0, 0, 0, 0]),
        ExactVector([-L * (1 + q), -L + q, 0, 0, 0, 0]),
        ExactVector([L + q, q - 1, (q2 - L) * (q2 - q), 0, 0, 0]),
        ExactVector([-1, 0, 0, q2 - 1, 0, 0]),
        ExactVector(
            [
                q - L**3,
                (1 - L * q) * (L * q - q2),
                0,
                -q * (1 - L**2) * (-1 + L * q),
                (-1 + L**2) * (-1 + L * q) * (L * q - q2),
                0,
            ]
        ),
        ExactVector(
            [
                L * q2 - 2 * L + 3 + 3 * L**2 + L * q,
                3 * q * (L * q - 1),
                -3 * q2 * (1 - L) ** 2,
                -3 * (-1 + L) * (1 + L * q2),
                3 * q * (1 - q) * L * (-1 + L),
                3 * q * (1 - q) * (-1 + L) ** 2,
            ]
        ),
    ]
    rho1 = build_dim6(L, cross_check=False).rho1
    for k, (u, mu) in enumerate(zip(us, eigenvalues_mu(L)), start=1):
        if rho1 @ u != u.scale(mu):
            raise InternalCheckFailed(f"u_{k} is not an eigenvector for {mu}")
    return us


@dataclass(frozen=True)
class DiagonalizedPair:
    lambda1: Any
    P: ExactMatrix
    X: ExactMatrix
    Y: ExactMatrix

    def specialize(self, value: Any) -> "DiagonalizedPair":
        """Evaluate a symbolic pair at lambda_1 = value."""

        def ev(x: Any) -> Any:
            return x.evaluate(value) if isinstance(x, RatFunc) else x

        return DiagonalizedPair(value, self.P.map(ev), self.X.map(ev), self.Y.map(ev))


def diagonalize(rep: Dim6Rep) -> DiagonalizedPair:
    _require_admissible(rep.lambda1)
    P = ExactMatrix.from_columns(eigenvectors_u(rep.lambda1))
    try:
        P_inv = P.inverse()
    except SingularMatrix as e:
        raise InternalCheckFailed(f"eigenvectors are dependent at lambda_1={rep.lambda1}") from e
    X = P_inv @ rep.rho1 @ P
    if X != ExactMatrix.diagonal(eigenvalues_mu(rep.lambda1)):
        raise InternalCheckFailed("P^-1 rho(sigma1) P is not the expected diagonal")
    Y = P_inv @ rep.rho2 @ P
    if not braid_relation_holds(X, Y):
        raise InternalCheckFailed("conjugated pair violates the braid relation")
    logger.info(f"Diagonalized dimension-6 pair at lambda_1={rep.lambda1}")
    return DiagonalizedPair(rep.lambda1, P, X, Y)


def diagonalization_holds(rep: Dim6Rep, pair: DiagonalizedPair) -> bool:
    """P X = rho(sigma1) P and P Y = rho(sigma2) P, with X the diagonal of the mu_i."""
    return (
        pair.X == ExactMatrix.diagonal(eigenvalues_mu(rep.lambda1))
        and pair.P @ pair.X == rep.rho1 @ pair.P
        and pair.P @ pair.Y == rep.rho2 @ pair.P
    )


def k_column(pair: DiagonalizedPair, i: int) -> ExactVector:
    """K_i, the i-th column of Y (1-based, as printed)."""
    if not 1 <= i <= 6:
        raise IndexOutOfRange(f"K-column index must be in 1..6, got {i}")
    return pair.Y.column(i - 1)


# Printed K entries, keyed (column, component), both 1-based; q stands for zeta_3.
# Two entries had an extra closing parenthesis, removed here.
_PRINTED_K: Dict[Tuple[int, int], str] = {
    (1, 1): "(L*q)/((q^2-1)*(-L+q)*(-1+L*q))",
    (1, 2): "(L^3-q^2)/(L*(L-1)^2*(L+1)*(L-q)*(L-q^2))",
    (1, 3): "-1/(3*(-L+q^2))",
    (1, 4): "-(q^2*(L+q^2))/(3*(-L+q))",
    (1, 5): "L^2/((L-1)^2*(L+1)*(L-q)*q*(L*q-1))",
    (1, 6): "1/(3*(L-1)^2*(q^2-q))",
    (2, 1): "(q*(2+q-(1+2*q)*L^2))/(3*(L-q)*(-1+L*q))",
    (2, 2): "(1-L^3*q^2)/(L*(L-1)^2*(L+1)*(L-q)*(L-q^2))",
    (2, 3): "-1/(3*(-L+q^2))",
    (2, 4): "(1+L)/(3*(L-q))",
    (2, 5): "-(L*(L^2+q))/((L-1)^2*(L+1)*(L-q)*(L*q-1))",
    (2, 6): "1/(3*(L-1)^2*(q^2-q))",
    (3, 1): "((1+L)*(-3*q^2+(1-q^2)*L+3*L^2))/(-3*(L-q)*(-1+L*q))",
    (3, 2): "(q^2*(-1-L+(q-q^2)*L^2+L^3+L^4))/(L*(L-1)^2*(L+1)*(L-q)*(L-q^2))",
    (3, 3): "-(L+q)/(3*q*(-L+q^2))",
    (3, 4): "-(q*(2+L+2*L^2))/(3*(L-q))",
    (3, 5): "(q*L^2*(1+q*L))/((L-1)^2*(L+1)*(L-q)*(L*q-1))",
    (3, 6): "(q*(q+L))/(3*(L-1)^2*(q-1))",
    (4, 1): "(-3+2*(q-1)*L+3*q*L^2)/(-3*(L-q)*(-1+L*q))",
    (4, 2): "(q^2+(q-q^2)*L+(q-q^2)*L^2-q*L^3)/(L*(L-1)^2*(L+1)*(L-q)*(L-q^2))",
    (4, 3): "-2/(3*q*(-L+q^2))",
    (4, 4): "(q*(L+q^2))/(3*(-L+q))",
    (4, 5): "(-q*L^2)/((L-1)^2*(L+1)*(L-q)*(L*q-1))",
    (4, 6): "-q/(3*(L-1)^2*(q-1))",
    (5, 1): "(L*(-2*q-1+(2+q)*L^2+(2+q^2)*L^3+(2*q+1)*L^5))/(3*(L-q)*(-1+L*q))",
    (5, 2): "(q^2+L^2+q^2*L^3+L^5+q^2*L^6+L^8)/(L*(L-1)^2*(L+1)*(L-q)*(L-q^2))",
    (5, 3): "(L*(1+q+(2+q)*L-(1+2*q)*L^2+q^2*L^3))/(3*q^2*(-L+q^2))",
    (5, 4): "-(q^2*L*(1+q^2-L-(2+q)*L^2+q^2*L^3+q*L^4))/(3*(L-q))",
    (5, 5): "(L^3*(-1+q*L^3))/((L-1)^2*(L+1)*(L-q)*(L*q-1))",
    (5, 6): "-(L*(-q+L^3))/(3*(L-1)^2*(q-1))",
    (6, 1): "((q^2-1)*(1-L^2+L^4))/((L-q)*(-1+L*q))",
    (6, 2): "(3*q+3*q^2*L^2-3*q^2*L^3-3*L^5)/(L*(L-1)^2*(L+1)*(L-q)*(L-q^2))",
    (6, 3): "(2+q+2*(q^2-q)*L+(-1+q)*L^2)/((1-q)*(-L+q^2))",
    (6, 4): "(q-q^2-3*L+3*L^2+(1+2*q)*L^3)/((1-q)*(L-q))",
    (6, 5): "(-3*q^2*L^2-3*q*L^4)/((L-1)^2*(L+1)*(L-q)*(L*q-1))",
    (6, 6): "(-2-q+(1-q^2)*L+(-1+q^2)*L^2)/(3*(L-1)^2)",
}


def printed_k_source(column: int, component: int) -> str:
    return _PRINTED_K[(column, component)]


@lru_cache(maxsize=None)
def printed_k_entries() -> Dict[Tuple[int, int], Any]:
    """The printed K entries as elements of Q(zeta_3)(L)."""
    return {key: parse_element(text.replace("q", "z(3)")) for key, text in _PRINTED_K.items()}


def k_column_mismatches(pair: DiagonalizedPair) -> List[Tuple[int, int]]:
    """(column, component) pairs where the printed entry differs from the computed Y."""
    symbolic = is_symbolic(pair.lambda1)
    out: List[Tuple[int, int]] = []
    for (col, comp), printed in printed_k_entries().items():
        computed = pair.Y[comp - 1, col - 1]
        if not symbolic and isinstance(printed, RatFunc):
            printed = printed.evaluate(pair.lambda1)
        if printed != computed:
            out.append((col, comp))
    if out:
        logger.debug(f"Printed K entries differing from computed Y: {out}")
    return out


# ---- printed intermediate values ----


@dataclass(frozen=True)
class PrintedValueCheck:
    """A printed intermediate value set against the printed K entries and the computed Y.

    ``claimed`` is the printed result and ``restated`` is the printed expression it was
    derived from, evaluated here. ``from_printed_k`` and ``computed`` are the same
    quantity rebuilt from the printed K entries and from Y.
    """

    name: str
    lambda1: Any
    claimed: Any
    restated: Any
    from_printed_k: Any
    computed: Any

    @property
    def restatement_consistent(self) -> bool:
        return self.claimed == self.restated

    @property
    def agrees(self) -> bool:
        return self.claimed == self.computed

    @property
    def nonzero(self) -> bool:
        return bool(self.computed)


def _k_denominator(L: Any) -> Any:
    return L * (L - 1) ** 2 * (L + 1) * (L - Q) * (L - Q2)


def _printed_k_at(column: int, component: int, value: Any) -> Any:
    printed = printed_k_entries()[(column, component)]
    return printed.evaluate(value) if isinstance(printed, RatFunc) else printed


def _line_component_check() -> PrintedValueCheck:
    """Second component of alpha K_3 + K_4 at alpha = -q, lambda_1 = q - q^2, times the
    common K denominator."""
    w = Q - Q2
    alpha = -Q
    den = _k_denominator(w)
    y = diagonalize(build_dim6(w)).Y
    return PrintedValueCheck(
        name="line_second_component",
        lambda1=w,
        claimed=2 * (Q - 8),
        restated=-(w**3) - w**4 + Q2 + w**2 - Q * w**3,
        from_printed_k=(alpha * _printed_k_at(3, 2, w) + _printed_k_at(4, 2, w)) * den,
        computed=(alpha * y[1, 2] + y[1, 3]) * den,
    )


def _first_component_check() -> PrintedValueCheck:
    """First component of K_3 at lambda_1 = -q."""
    lam = -Q
    claimed = (Q - 1) * (1 - Q2) / (6 * Q)
    return PrintedValueCheck(
        name="k3_first_component",
        lambda1=lam,
        claimed=claimed,
        restated=claimed,
        from_printed_k=_printed_k_at(3, 1, lam),
        computed=diagonalize(build_dim6(lam)).Y[0, 2],
    )


def printed_value_checks() -> List[PrintedValueCheck]:
    """Both printed non-vanishing values, each re-derived from Y."""
    checks = [_line_component_check(), _first_component_check()]
    for c in checks:
        if not c.agrees:
            logger.info(
                f"Printed value {c.name} at lambda_1={c.lambda1}: claimed {c.claimed}, "
                f"computed {c.computed}"
            )
    return checks
