"""
Braid Group Representation Tests

Covers the q-Pascal construction in every dimension: parameter validation, the braid
relation and triangularity of the two images, the sharp and s transforms, the (n)_q test
for Lambda = I and the minors criterion at q = 1.

Test Coverage:
- Braid relation for n up to 8 over Q(zeta_12) with lambdas completed from c
- Braid relation on 25 seeded random parameter sets per n
- Closed forms for small n
- Validation errors with the offending index
- Criterion witnesses on a hand-computed example
"""

import random
from fractions import Fraction

import pytest

from qpascal.braidrep import (
    RepParams,
    braid_relation_holds,
    build_A,
    build_D,
    build_rep,
    check_lambda_condition,
    complete_lambdas,
    f_operator,
    identity_lambda_irreducible,
    identity_lambdas,
    operator_irred_criterion_q1,
    s_transform,
    sharp,
    sigma1_eigenvalues,
)
from qpascal.errors import (
    IndexOutOfRange,
    LambdaConditionViolated,
    ShapeMismatch,
    ZeroParameter,
)
from qpascal.fields import Cyc
from qpascal.linalg import ExactMatrix
from qpascal.qcomb import QContext


def generic_params(n: int) -> RepParams:
    z = Cyc.zeta(12)
    first = [z ** (k + 1) + k for k in range(n // 2 + 1)]
    c = first[-1] ** 2 if n % 2 == 0 else Cyc.rational(3)
    return RepParams(n, z, complete_lambdas(first, c, n), c)


@pytest.mark.parametrize("n", range(0, 9))
def test_braid_relation_and_triangularity(n):
    rep = build_rep(generic_params(n))
    assert rep.dim == n + 1
    assert rep.satisfies_braid_relation()
    assert rep.sigma1.is_upper_triangular()
    assert rep.sigma2.is_lower_triangular()
    assert rep.sigma1.diagonal_entries() == sigma1_eigenvalues(rep.params)


def random_cyc(rng: random.Random) -> Cyc:
    z = Cyc.zeta(12)
    while True:
        value = sum(
            (Fraction(rng.randint(-3, 3), rng.randint(1, 3)) * z**k for k in range(4)),
            Cyc.rational(0).embed(12),
        )
        if value:
            return value


@pytest.mark.parametrize("n", range(1, 9))
def test_braid_relation_on_random_parameters(n):
    rng = random.Random(n)
    for _ in range(25):
        q = random_cyc(rng)
        first = [random_cyc(rng) for _ in range(n // 2 + 1)]
        c = first[-1] ** 2 if n % 2 == 0 else random_cyc(rng)
        rep = build_rep(RepParams(n, q, complete_lambdas(first, c, n), c))
        assert rep.satisfies_braid_relation()
        assert rep.sigma1.diagonal_entries() == sigma1_eigenvalues(rep.params)


def test_dimension_two_closed_form():
    """At n = 1, q = 1 and Lambda = I the images are the unipotent pair of SL2(Z)."""
    rep = build_rep(RepParams(1, 1, identity_lambdas(1), 1))
    assert rep.sigma1 == ExactMatrix([[1, 1], [0, 1]])
    assert rep.sigma2 == ExactMatrix([[1, 0], [-1, 1]])


def test_building_blocks():
    ctx = QContext(2)
    a = build_A(2, ctx)
    assert a == ExactMatrix([[1, 3, 1], [0, 1, 1], [0, 0, 1]])
    assert build_D(3, ctx) == ExactMatrix.diagonal([1, 1, 2, 8])
    with pytest.raises(IndexOutOfRange):
        build_A(-1, ctx)


def test_transforms():
    m = ExactMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert sharp(m) == ExactMatrix([[9, 8, 7], [6, 5, 4], [3, 2, 1]])
    assert sharp(sharp(m)) == m
    assert s_transform(m) == sharp(m).transpose()
    assert s_transform(s_transform(m)) == m
    with pytest.raises(ShapeMismatch):
        sharp(ExactMatrix([[1, 2]]))


def test_lambda_condition_reports_index():
    with pytest.raises(LambdaConditionViolated) as exc_info:
        RepParams(2, 2, (1, 2, 3), 3)
    assert exc_info.value.index == 1
    with pytest.raises(LambdaConditionViolated):
        check_lambda_condition([1, 2], 3)
    check_lambda_condition([Fraction(1, 2), 2, 8], 4)


def test_parameter_validation():
    with pytest.raises(ZeroParameter):
        RepParams(1, 0, (1, 1), 1)
    with pytest.raises(ZeroParameter):
        RepParams(1, 2, (0, 1), 0)
    with pytest.raises(ShapeMismatch):
        RepParams(2, 2, (1, 1), 1)
    with pytest.raises(IndexOutOfRange):
        RepParams(-1, 2, (), 1)
    with pytest.raises(ShapeMismatch):
        complete_lambdas([1], 1, 4)
    with pytest.raises(LambdaConditionViolated):
        complete_lambdas([1, 2], 3, 2)


def test_complete_lambdas():
    assert complete_lambdas([2, 3], 6, 3) == (2, 3, 2, 3)
    assert complete_lambdas([2, 3], 9, 2) == (2, 3, Fraction(9, 2))


def test_identity_lambda_test():
    assert identity_lambda_irreducible(2, QContext(2))
    assert not identity_lambda_irreducible(2, QContext(-1))
    assert not identity_lambda_irreducible(3, QContext(Cyc.zeta(3)))
    with pytest.raises(IndexOutOfRange):
        identity_lambda_irreducible(0, QContext(2))


def test_criterion_hand_example():
    """
    n = 2, Lambda = I at q = 1: both s-transformed operators equal
    [[0, 2, 1], [0, 0, 1], [0, 0, 0]], so r = 0 finds rows (0, 1) and r = 1 finds row 0.
    """
    ctx = QContext(1)
    expected = ExactMatrix([[0, 2, 1], [0, 0, 1], [0, 0, 0]])
    for r in (0, 1):
        assert s_transform(f_operator(r, 2, ctx, identity_lambdas(2))) == expected

    result = operator_irred_criterion_q1(2, identity_lambdas(2))
    assert result.holds
    assert result.witnesses == {0: (0, 1), 1: (0,)}


def test_criterion_validation():
    with pytest.raises(LambdaConditionViolated):
        operator_irred_criterion_q1(2, [1, 2, 3])
    with pytest.raises(ShapeMismatch):
        operator_irred_criterion_q1(2, [1, 1])
    with pytest.raises(IndexOutOfRange):
        f_operator(3, 2, QContext(1), identity_lambdas(2))


def test_braid_relation_helper_detects_failure():
    a = ExactMatrix([[1, 1], [0, 1]])
    assert braid_relation_holds(a, ExactMatrix([[1, 0], [-1, 1]]))
    assert not braid_relation_holds(a, ExactMatrix([[1, 0], [1, 1]]))
