"""
Exception hierarchy shared by every qpascal module.

Each error carries a machine-readable ``kind`` and the process ``exit_code`` the CLI
maps it to (2 input, 3 constraint violation, 1 internal check failure).
"""

from __future__ import annotations

from typing import Any, Optional


class QPascalError(Exception):
    """Base class for all library errors."""

    kind = "error"
    exit_code = 1


class InputError(QPascalError):
    kind = "input_error"
    exit_code = 2


class ConstraintError(QPascalError):
    kind = "constraint_violation"
    exit_code = 3


# ---- exact-field ----


class ExprSyntaxError(InputError, ValueError):
    """Raised when a field-element expression cannot be parsed."""

    kind = "parse_error"

    def __init__(self, text: str, position: int, msg: str):
        super().__init__(f"{msg} at position {position} in {text!r}")
        self.text = text
        self.position = position
        self.msg = msg


class DivisionByZero(InputError, ZeroDivisionError):
    kind = "division_by_zero"


class ConductorMismatch(QPascalError, ValueError):
    """Raised when an element of Q(zeta_N) is asked to live in Q(zeta_M) with N not dividing M."""

    kind = "conductor_mismatch"
    exit_code = 2

    def __init__(self, conductor: int, target: int):
        super().__init__(f"conductor {conductor} does not divide {target}")
        self.conductor = conductor
        self.target = target


class BranchSplit(QPascalError):
    """Zero test in a residue ring hit a proper factor of the modulus."""

    kind = "branch_split"

    def __init__(self, factor: Any):
        super().__init__(f"modulus splits off factor {factor}")
        self.factor = factor


# ---- linalg ----


class ShapeMismatch(InputError, ValueError):
    kind = "shape_mismatch"


class SingularMatrix(QPascalError, ArithmeticError):
    kind = "singular_matrix"


class IndexOutOfRange(InputError, IndexError):
    kind = "index_out_of_range"


# ---- qcomb / braidrep ----


class QFactorialVanishes(ConstraintError):
    """The q-exponential needs 1/(k)!_q but (k)!_q = 0 at this q."""

    kind = "q_factorial_vanishes"

    def __init__(self, k: int):
        super().__init__(f"(k)!_q vanishes for k={k}; q-exponential undefined")
        self.k = k


class LambdaConditionViolated(ConstraintError):
    kind = "lambda_condition_violated"

    def __init__(self, index: int, msg: str):
        super().__init__(f"lambda_{index}: {msg}")
        self.index = index


class BraidRelationFailed(QPascalError):
    kind = "braid_relation_failed"


class ZeroParameter(ConstraintError):
    kind = "zero_parameter"


class InadmissibleLambda(ConstraintError):
    kind = "inadmissible_lambda"


# ---- invariance ----


class UnsupportedMultiplicity(ConstraintError):
    kind = "unsupported_multiplicity"


class UnsupportedPattern(QPascalError, ValueError):
    kind = "unsupported_pattern"


class UnresolvedOutsideField(QPascalError):
    """Solutions exist over C but are not expressible in the working cyclotomic field."""

    kind = "unresolved_outside_field"

    def __init__(self, minimal_polynomial: Any, conductor: Optional[int] = None):
        where = f" in Q(zeta_{conductor})" if conductor else ""
        super().__init__(
            f"roots of {minimal_polynomial} are not expressible{where}; enlarge the conductor"
        )
        self.minimal_polynomial = minimal_polynomial
        self.conductor = conductor


class ConstraintViolated(ConstraintError):
    kind = "constraint_violated"


class EigenvalueCollision(ConstraintError):
    kind = "eigenvalue_collision"


class InternalCheckFailed(QPascalError, AssertionError):
    kind = "internal_check_failed"
