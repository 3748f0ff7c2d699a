"""
Invariant-subspace engine for a pair (X, Y) with X diagonal.

Every X-invariant subspace is a sum of pieces of X's eigenspaces. With multiplicities at
most 2 this leaves finitely many shapes: a set of simple coordinates, and for each
2-dimensional eigenspace nothing, the whole plane, or one line (alpha:beta) in it. Each
shape is tested for Y-invariance:

* exactly, for concrete entries (lines are solved for by a gcd over the field);
* symbolically over Q(zeta_3)(L), where the line parameter is eliminated with resultants
  and each candidate factor is confirmed by computing modulo it (dynamic evaluation).

Pattern checks are independent and may run on a thread pool; results are merged in
enumeration order.
"""

from __future__ import annotations

import concurrent.futures as cf
import logging
import os
import random
import sys
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

from tqdm import tqdm

from .braidrep import BraidRep, braid_relation_holds
from .dim6 import Q, Q2, build_dim6, diagonalize, is_admissible, symbolic_lambda1
from .errors import (
    BranchSplit,
    ConstraintViolated,
    EigenvalueCollision,
    InadmissibleLambda,
    IndexOutOfRange,
    InternalCheckFailed,
    QPascalError,
    ShapeMismatch,
    UnresolvedOutsideField,
    UnsupportedMultiplicity,
    UnsupportedPattern,
)
from .fields import VAR, Cyc, Poly, RatFunc, ResidueRing, common_conductor, field_roots, gcd_all
from .linalg import ExactMatrix, ExactVector, in_span

logger = logging.getLogger(__name__)

ALPHA = "a"
T = TypeVar("T")
R = TypeVar("R")


# ---- patterns ----


class PlaneKind(str, Enum):
    NONE = "none"
    LINE = "line"
    FULL = "full"


@dataclass(frozen=True)
class PlanePart:
    """What a pattern takes from one 2-dimensional eigenspace spanned by e_a, e_b.

    A line is alpha*e_a + beta*e_b; ``direction`` is None while (alpha:beta) is unknown.
    """

    coords: Tuple[int, int]
    kind: PlaneKind = PlaneKind.NONE
    direction: Optional[Tuple[Any, Any]] = None

    @property
    def dimension(self) -> int:
        return {PlaneKind.NONE: 0, PlaneKind.LINE: 1, PlaneKind.FULL: 2}[self.kind]

    @property
    def is_unknown(self) -> bool:
        return self.kind is PlaneKind.LINE and self.direction is None

    def label(self) -> str:
        a, b = self.coords
        if self.kind is PlaneKind.FULL:
            return f"e{a}, e{b}"
        if self.kind is PlaneKind.LINE:
            if self.direction is None:
                return f"a*e{a} + b*e{b}"
            alpha, beta = self.direction
            if not beta:
                return f"e{a}"
            if not alpha:
                return f"e{b}"
            return f"({alpha})*e{a} + e{b}"
        return ""


@dataclass(frozen=True)
class SubspacePattern:
    fixed: Tuple[int, ...]
    planes: Tuple[PlanePart, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.fixed) + sum(p.dimension for p in self.planes)

    @property
    def unknowns(self) -> int:
        return sum(1 for p in self.planes if p.is_unknown)

    def coordinate_set(self) -> Tuple[int, ...]:
        """Fixed coordinates plus the coordinates of whole planes, sorted."""
        coords = list(self.fixed)
        for p in self.planes:
            if p.kind is PlaneKind.FULL:
                coords.extend(p.coords)
        return tuple(sorted(coords))

    def unknown_plane(self) -> PlanePart:
        for p in self.planes:
            if p.is_unknown:
                return p
        raise UnsupportedPattern("pattern has no unknown line")

    def resolve(self, alpha: Any, beta: Any) -> "SubspacePattern":
        """Replace the unknown line by the concrete direction (alpha:beta)."""
        if self.unknowns != 1:
            raise UnsupportedPattern(f"cannot resolve a pattern with {self.unknowns} unknowns")
        planes = tuple(
            PlanePart(p.coords, p.kind, (alpha, beta)) if p.is_unknown else p for p in self.planes
        )
        return SubspacePattern(self.fixed, planes)

    def basis(self, n: int) -> List[ExactVector]:
        if self.unknowns:
            raise UnsupportedPattern("basis of a pattern with an unknown line")
        vecs = [ExactVector.unit(n, i) for i in self.fixed]
        for p in self.planes:
            a, b = p.coords
            if p.kind is PlaneKind.FULL:
                vecs.extend([ExactVector.unit(n, a), ExactVector.unit(n, b)])
            elif p.kind is PlaneKind.LINE and p.direction is not None:
                alpha, beta = p.direction
                line = ExactVector.unit(n, a).scale(alpha) + ExactVector.unit(n, b).scale(beta)
                vecs.append(line)
        return vecs

    def label(self) -> str:
        parts = [p.label() for p in self.planes if p.kind is not PlaneKind.NONE]
        parts += [f"e{i}" for i in self.fixed]
        return "<" + ", ".join(parts) + ">"


@dataclass(frozen=True)
class EigenStructure:
    """Eigenvalues of a diagonal matrix with the coordinates carrying each one."""

    dim: int
    groups: Tuple[Tuple[Any, Tuple[int, ...]], ...]

    @classmethod
    def from_diagonal(cls, x: ExactMatrix) -> "EigenStructure":
        if not x.is_square() or not x.is_diagonal():
            raise ShapeMismatch("the engine needs a diagonal first generator")
        groups: List[Tuple[Any, List[int]]] = []
        for i, value in enumerate(x.diagonal_entries()):
            for ev, coords in groups:
                if ev == value:
                    coords.append(i)
                    break
            else:
                groups.append((value, [i]))
        return cls(x.rows, tuple((ev, tuple(c)) for ev, c in groups))

    @property
    def multiplicities(self) -> List[int]:
        return [len(c) for _, c in self.groups]

    @property
    def simple(self) -> List[int]:
        return [c[0] for _, c in self.groups if len(c) == 1]

    @property
    def planes(self) -> List[Tuple[int, int]]:
        return [(c[0], c[1]) for _, c in self.groups if len(c) == 2]

    def require_supported(self) -> None:
        worst = max(self.multiplicities)
        if worst > 2:
            raise UnsupportedMultiplicity(f"eigenvalue multiplicity {worst} exceeds 2")


def enumerate_patterns(es: EigenStructure, d: int) -> List[SubspacePattern]:
    """All X-invariant shapes of dimension d, planes varying slowest."""
    es.require_supported()
    if not 1 <= d < es.dim:
        raise IndexOutOfRange(f"pattern dimension must be in 1..{es.dim - 1}, got {d}")
    simple = es.simple
    out: List[SubspacePattern] = []
    for kinds in product((PlaneKind.NONE, PlaneKind.LINE, PlaneKind.FULL), repeat=len(es.planes)):
        planes = tuple(PlanePart(c, k) for c, k in zip(es.planes, kinds))
        k = d - sum(p.dimension for p in planes)
        if 0 <= k <= len(simple):
            out.extend(SubspacePattern(fixed, planes) for fixed in combinations(simple, k))
    return out


# ---- fixed decision ----


@dataclass(frozen=True)
class InvarianceResult:
    pattern: SubspacePattern
    invariant: bool
    witnesses: Tuple[SubspacePattern, ...] = ()
    all_lines: bool = False
    unresolved: Optional[Poly] = None

    @property
    def outcome(self) -> str:
        if self.invariant:
            return "invariant"
        return "unresolved" if self.unresolved is not None else "not_invariant"


def is_invariant(m: ExactMatrix, basis: Sequence[ExactVector]) -> bool:
    return all(in_span(m @ v, basis) for v in basis)


def _line_conditions(y: ExactMatrix, pattern: SubspacePattern) -> Tuple[List[Any], List[Poly]]:
    """Conditions for coords + <alpha*e_a + e_b> to be Y-invariant.

    Returns the alpha-free entries that must vanish and the polynomials in alpha that
    must vanish together.
    """
    if pattern.unknowns != 1:
        raise UnsupportedPattern(f"expected one unknown line, got {pattern.unknowns}")
    if any(p.kind is PlaneKind.LINE and not p.is_unknown for p in pattern.planes):
        raise UnsupportedPattern("an unknown line next to a concrete line is not supported")
    a, b = pattern.unknown_plane().coords
    coords = pattern.coordinate_set()
    outside = [i for i in range(y.rows) if i not in coords and i not in (a, b)]
    h = [y[i, s] for s in coords for i in outside]
    g = [Poly([y[a, s], -y[b, s]], ALPHA) for s in coords]
    g += [Poly([y[i, b], y[i, a]], ALPHA) for i in outside]
    g.append(Poly([y[a, b], y[a, a] - y[b, b], -y[b, a]], ALPHA))
    return h, [p for p in g if p]


def _decide_fixed(y: ExactMatrix, pattern: SubspacePattern) -> InvarianceResult:
    n = y.rows
    if pattern.unknowns > 1:
        raise UnsupportedPattern(f"{pattern.label()} has {pattern.unknowns} unknown lines")
    if pattern.unknowns == 0:
        ok = is_invariant(y, pattern.basis(n))
        return InvarianceResult(pattern, ok, (pattern,) if ok else ())

    witnesses: List[SubspacePattern] = []
    coordinate_line = pattern.resolve(Fraction(1), Fraction(0))
    if is_invariant(y, coordinate_line.basis(n)):
        witnesses.append(coordinate_line)

    h, g = _line_conditions(y, pattern)
    all_lines = False
    unresolved: Optional[Poly] = None
    if not any(h):
        gcd = gcd_all(g, ALPHA)
        alphas: List[Any] = []
        if not gcd:
            all_lines = True
            alphas = [Fraction(0)]
        elif gcd.degree >= 1:
            roots = field_roots(gcd)
            if roots is None:
                unresolved = gcd
                logger.debug(f"{pattern.label()}: line parameter has minimal polynomial {gcd}")
            else:
                alphas = roots
        for alpha in alphas:
            line = pattern.resolve(alpha, Fraction(1))
            if not is_invariant(y, line.basis(n)):
                raise InternalCheckFailed(f"solved line {line.label()} is not invariant")
            witnesses.append(line)
    return InvarianceResult(pattern, bool(witnesses), tuple(witnesses), all_lines, unresolved)


def decide_pattern_fixed(y: ExactMatrix, pattern: SubspacePattern) -> InvarianceResult:
    """Y-invariance of one pattern with concrete entries.

    Raises UnresolvedOutsideField when a line solution exists over C but not in the field.
    """
    res = _decide_fixed(y, pattern)
    if res.unresolved is not None and not res.invariant:
        conductor = common_conductor([x for row in y.entries for x in row]) or None
        raise UnresolvedOutsideField(res.unresolved, conductor)
    return res


# ---- symbolic decision ----


def _numerator(x: Any) -> Poly:
    if isinstance(x, RatFunc):
        return x.num
    return Poly([x], VAR)


def _denominator(x: Any) -> Poly:
    if isinstance(x, RatFunc):
        return x.den
    return Poly([1], VAR)


def excluded_polynomial(y: ExactMatrix) -> Poly:
    """L(L-1)(L+1)(L-q)(L-q^2) times the squarefree denominators of Y."""
    base = Poly([0, 1], VAR)
    for r in (Fraction(1), Fraction(-1), Q, Q2):
        base = base * Poly([-r, 1], VAR)
    acc = base
    for row in y.entries:
        for x in row:
            den = _denominator(x)
            if den.degree >= 1:
                acc = acc * den.squarefree_part().exact_div(acc.gcd(den.squarefree_part()))
    return acc.monic()


def _strip(c: Poly, excluded: Poly) -> Poly:
    g = c.gcd(excluded)
    while g.degree > 0:
        c = c.exact_div(g)
        g = c.gcd(excluded)
    return c.monic()


def _always() -> List[Poly]:
    return [Poly((), VAR)]


def _coordinate_constraints(y: ExactMatrix, coords: Sequence[int], excluded: Poly) -> List[Poly]:
    nums = [_numerator(y[i, s]) for s in coords for i in range(y.rows) if i not in coords]
    g = gcd_all(nums, VAR)
    if not g:
        return _always()
    g = _strip(g.squarefree_part(), excluded)
    return [g] if g.degree >= 1 else []


def _clear_denominators(p: Poly) -> Poly:
    """Multiply a polynomial in alpha over Q(zeta)(L) by the lcm of its denominators."""
    den = Poly([1], VAR)
    for c in p.coeffs:
        d = _denominator(c)
        den = (den * d).exact_div(den.gcd(d))
    return Poly([(_numerator(c) * den).exact_div(_denominator(c)) for c in p.coeffs], ALPHA)


def _alpha_candidates(g: List[Poly]) -> Optional[Poly]:
    """A polynomial in L vanishing wherever the alpha-system is solvable; None if generic."""
    positive = [p for p in g if p.degree >= 1]
    consts = [_numerator(p.coeffs[0]) for p in g if p.degree == 0]
    if not positive:
        return gcd_all(consts, VAR) if consts else None
    if gcd_all(g, ALPHA).degree >= 1:
        return None
    g1 = min(positive, key=lambda p: p.degree)
    others = [p for p in positive if p is not g1]
    resultants = [_numerator(g1.resultant(p)) for p in others]
    k = gcd_all(consts + [r for r in resultants if r], VAR)
    if not k and others:
        for t in range(2, 8):
            combo = Poly((), ALPHA)
            for j, p in enumerate(others, start=1):
                combo = combo + p.scale(Fraction(t) ** j)
            r = _numerator(g1.resultant(combo))
            if r:
                k = r
                break
    return _numerator(g1.lc) * k


def _branch_solvable(ring: ResidueRing, h_nums: List[Poly], g_cleared: List[Poly]) -> bool:
    """Whether the line system has a solution over the residue field (raises BranchSplit)."""
    for hn in h_nums:
        if hn % ring.modulus:
            f = hn.gcd(ring.modulus)
            if f.degree == 0:
                return False
            raise BranchSplit(f)
    reduced = [Poly([ring.element(c) for c in p.coeffs], ALPHA) for p in g_cleared]
    reduced = [p for p in reduced if p]
    if not reduced:
        return True
    return gcd_all(reduced, ALPHA).degree >= 1


def _line_constraints(y: ExactMatrix, pattern: SubspacePattern, excluded: Poly) -> List[Poly]:
    h, g = _line_conditions(y, pattern)
    h_nums = [_numerator(x) for x in h if x]
    big_h = gcd_all(h_nums, VAR)
    k = _alpha_candidates(g)
    if k is None:
        k = Poly((), VAR)
    c = big_h.gcd(k)
    if not c:
        return _always()
    c = _strip(c.squarefree_part(), excluded)
    if c.degree < 1:
        return []

    g_cleared = [_clear_denominators(p) for p in g]
    accepted: List[Poly] = []
    work = [c]
    while work:
        m = work.pop(0)
        ring = ResidueRing(m)
        try:
            ok = _branch_solvable(ring, h_nums, g_cleared)
        except BranchSplit as e:
            logger.debug(f"{pattern.label()}: splitting {m} along {e.factor}")
            work[:0] = [r.modulus for r in ring.split(e.factor)]
            continue
        if ok:
            accepted.append(ring.modulus)
    return accepted


def _merge(constraints: List[Poly]) -> List[Poly]:
    if any(not p for p in constraints):
        return _always()
    out: List[Poly] = []
    for p in constraints:
        if all(p != o for o in out):
            out.append(p)
    return out


def decide_pattern_symbolic(y_sym: ExactMatrix, pattern: SubspacePattern) -> List[Poly]:
    """Monic squarefree polynomials in L whose admissible roots make the pattern invariant.

    [] means never invariant; [0] means invariant for every admissible L.
    """
    if pattern.unknowns > 1:
        raise UnsupportedPattern(f"{pattern.label()} has {pattern.unknowns} unknown lines")
    excluded = excluded_polynomial(y_sym)
    if pattern.unknowns == 0:
        return _coordinate_constraints(y_sym, pattern.coordinate_set(), excluded)
    a, _ = pattern.unknown_plane().coords
    coordinate_line = tuple(sorted(pattern.coordinate_set() + (a,)))
    found = _coordinate_constraints(y_sym, coordinate_line, excluded)
    found += _line_constraints(y_sym, pattern, excluded)
    return _merge(found)


# ---- verdicts ----


class Status(str, Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    UNDECIDABLE = "pattern_undecidable"


@dataclass(frozen=True)
class Witness:
    """A verified invariant subspace; pattern is None when found outside the pattern search."""

    pattern: Optional[SubspacePattern]
    basis: Tuple[ExactVector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def label(self) -> str:
        if self.pattern is not None:
            return self.pattern.label()
        return "span(" + "; ".join(str(v) for v in self.basis) + ")"


@dataclass
class Verdict:
    status: Status
    witnesses: List[Witness] = field(default_factory=list)
    constraints: List[Poly] = field(default_factory=list)
    trace: Dict[int, List[InvarianceResult]] = field(default_factory=dict)
    unresolved: List[Tuple[SubspacePattern, Poly]] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def is_reducible(self) -> bool:
        return self.status is Status.REDUCIBLE


def resolve_workers(workers: Optional[int] = None) -> int:
    if workers is not None:
        return workers
    try:
        return int(os.getenv("QPASCAL_WORKERS", "4"))
    except ValueError:
        return 1


def run_ordered(
    fn: Callable[[T], R],
    tasks: Sequence[T],
    workers: Optional[int] = None,
    progress: bool = False,
    desc: str = "patterns",
) -> List[R]:
    """fn over tasks; results come back in task order whatever the completion order.

    A task that fails with anything other than a QPascalError in a worker thread is
    rerun once on the calling thread; tasks that already finished are kept.
    """
    workers = resolve_workers(workers)
    bar = tqdm(total=len(tasks), desc=desc, disable=not progress, file=sys.stderr)
    try:
        if workers <= 1 or len(tasks) <= 1:
            return _run_sequential(fn, tasks, bar)
        try:
            slots, failed = _run_threaded(fn, tasks, workers, bar)
        except QPascalError:
            raise
        except Exception as e:
            logger.warning(f"parallel pattern checks unavailable: {e}; running sequentially")
            bar.reset()
            return _run_sequential(fn, tasks, bar)
        if failed:
            logger.warning(
                f"{len(failed)} pattern check(s) failed in worker threads "
                f"({failed[0][1]}); rerunning them sequentially"
            )
        for i, _ in failed:
            slots[i] = fn(tasks[i])
            bar.update(1)
        return slots
    finally:
        bar.close()


def _run_sequential(fn: Callable[[T], R], tasks: Sequence[T], bar: Any) -> List[R]:
    out = []
    for t in tasks:
        out.append(fn(t))
        bar.update(1)
    return out


def _run_threaded(
    fn: Callable[[T], R], tasks: Sequence[T], workers: int, bar: Any
) -> Tuple[List[Any], List[Tuple[int, Exception]]]:
    """Slots in task order plus the (index, error) of every task that raised."""
    slots: List[Any] = [None] * len(tasks)
    failed: List[Tuple[int, Exception]] = []
    with cf.ThreadPoolExecutor(max_workers=workers) as ex:
        future_by_index = {ex.submit(fn, t): i for i, t in enumerate(tasks)}
        for fut in cf.as_completed(future_by_index):
            i = future_by_index[fut]
            try:
                slots[i] = fut.result()
            except QPascalError:
                raise
            except Exception as e:
                failed.append((i, e))
                continue
            bar.update(1)
    failed.sort(key=lambda item: item[0])
    return slots, failed


def analyse_pair(
    x: ExactMatrix,
    y: ExactMatrix,
    dims: Optional[Sequence[int]] = None,
    workers: Optional[int] = None,
    progress: bool = False,
) -> Verdict:
    """Run every pattern of every proper dimension against (X, Y) with concrete entries."""
    es = EigenStructure.from_diagonal(x)
    es.require_supported()
    n = x.rows
    dims = list(dims) if dims is not None else list(range(1, n))
    tasks = [p for d in dims for p in enumerate_patterns(es, d)]
    results = run_ordered(lambda p: _decide_fixed(y, p), tasks, workers, progress)

    verdict = Verdict(Status.IRREDUCIBLE, trace={d: [] for d in dims})
    for res in results:
        verdict.trace[res.pattern.dimension].append(res)
        for w in res.witnesses:
            basis = tuple(w.basis(n))
            if not (is_invariant(x, basis) and is_invariant(y, basis)):
                raise InternalCheckFailed(f"witness {w.label()} fails direct verification")
            verdict.witnesses.append(Witness(w, basis))
        if res.unresolved is not None:
            verdict.unresolved.append((res.pattern, res.unresolved))
    if verdict.witnesses:
        verdict.status = Status.REDUCIBLE
    elif verdict.unresolved:
        verdict.status = Status.UNDECIDABLE
        verdict.details["guidance"] = "line solutions lie outside the field; enlarge the conductor"
    logger.info(
        f"Checked {len(results)} patterns: {verdict.status.value}, "
        f"{len(verdict.witnesses)} witness(es)"
    )
    return verdict


def decide_irreducible(
    lambda1: Any, workers: Optional[int] = None, progress: bool = False
) -> Verdict:
    """Irreducibility of the dimension-6 representation at a concrete lambda_1."""
    if not lambda1 or not is_admissible(lambda1):
        raise InadmissibleLambda(f"lambda_1={lambda1} lies in {{0, -1, 1, q, q^2}}")
    pair = diagonalize(build_dim6(lambda1))
    verdict = analyse_pair(pair.X, pair.Y, workers=workers, progress=progress)
    verdict.details["lambda1"] = lambda1
    return verdict


# ---- symbolic sweep ----


def symbolic_pair() -> Tuple[ExactMatrix, ExactMatrix]:
    pair = diagonalize(build_dim6(symbolic_lambda1()))
    return pair.X, pair.Y


def symbolic_sweep(
    dims: Optional[Sequence[int]] = None,
    workers: Optional[int] = None,
    progress: bool = False,
) -> Dict[int, List[Tuple[SubspacePattern, List[Poly]]]]:
    """Constraints on L for every pattern, grouped by dimension."""
    x, y = symbolic_pair()
    es = EigenStructure.from_diagonal(x)
    dims = list(dims) if dims is not None else list(range(1, x.rows))
    tasks = [p for d in dims for p in enumerate_patterns(es, d)]
    found = run_ordered(lambda p: decide_pattern_symbolic(y, p), tasks, workers, progress)
    out: Dict[int, List[Tuple[SubspacePattern, List[Poly]]]] = {d: [] for d in dims}
    for pattern, constraints in zip(tasks, found):
        out[pattern.dimension].append((pattern, constraints))
    return out


def irreducibility_conditions(
    sweep: Optional[Dict[int, List[Tuple[SubspacePattern, List[Poly]]]]] = None,
) -> List[Poly]:
    """Deduplicated constraints over all patterns; reducible exactly at their roots."""
    if sweep is None:
        sweep = symbolic_sweep()
    seen: List[Poly] = []
    for d in sorted(sweep):
        for _, constraints in sweep[d]:
            for p in constraints:
                if all(p != s for s in seen):
                    seen.append(p)
    return seen


def expected_conditions() -> List[Poly]:
    """(L^2 + q), (L^2 + q^2), (L^3 - q), (L^3 - q^2)."""
    return [
        Poly([Q, 0, 1], VAR),
        Poly([Q2, 0, 1], VAR),
        Poly([-Q, 0, 0, 1], VAR),
        Poly([-Q2, 0, 0, 1], VAR),
    ]


def conditions_product(polys: Sequence[Poly]) -> Poly:
    """Monic lcm of the constraints: the polynomial whose roots are the union."""
    acc = Poly([1], VAR)
    for p in polys:
        if not p:
            return Poly((), VAR)
        acc = (acc * p).exact_div(acc.gcd(p))
    return acc.monic()


def symbolic_verdict(
    workers: Optional[int] = None, progress: bool = False
) -> Tuple[Verdict, Dict[int, List[Tuple[SubspacePattern, List[Poly]]]]]:
    """Generic verdict (irreducible away from the constraint roots) with the constraints."""
    sweep = symbolic_sweep(workers=workers, progress=progress)
    conditions = irreducibility_conditions(sweep)
    status = Status.REDUCIBLE if any(not p for p in conditions) else Status.IRREDUCIBLE
    verdict = Verdict(status, constraints=conditions)
    verdict.details["matches_expected"] = conditions_product(conditions) == conditions_product(
        expected_conditions()
    )
    return verdict, sweep


# ---- restriction ----


def restriction_basis(lambda1: Any = None) -> ExactMatrix:
    """A = (-L e2 + e3, e0, e4, e5, e3, e1); L is the indeterminate when lambda1 is None."""
    if lambda1 is None:
        lambda1 = symbolic_lambda1()
    n = 6
    e = [ExactVector.unit(n, i) for i in range(n)]
    first = e[2].scale(-lambda1) + e[3]
    return ExactMatrix.from_columns([first, e[0], e[4], e[5], e[3], e[1]])


@dataclass(frozen=True)
class Restriction:
    lambda1: Any
    A: ExactMatrix
    X_conj: ExactMatrix
    Y_conj: ExactMatrix
    rep: BraidRep

    @property
    def x_prime(self) -> ExactMatrix:
        return self.rep.sigma1

    @property
    def y_prime(self) -> ExactMatrix:
        return self.rep.sigma2


def restrict_to_V(lambda1: Any) -> Restriction:
    """The representation on V = <-L e2 + e3, e0, e4, e5>, defined when L^3 = q^2."""
    if not lambda1 or lambda1**3 != Q2:
        raise ConstraintViolated(f"restriction needs lambda_1^3 = q^2, got lambda_1={lambda1}")
    if not is_admissible(lambda1):
        raise InadmissibleLambda(f"lambda_1={lambda1} lies in {{0, -1, 1, q, q^2}}")
    pair = diagonalize(build_dim6(lambda1))
    a = restriction_basis(lambda1)
    a_inv = a.inverse()
    xc = a_inv @ pair.X @ a
    yc = a_inv @ pair.Y @ a
    for m, name in ((xc, "X"), (yc, "Y")):
        if any(m[i, j] for i in range(4, 6) for j in range(4)):
            raise InternalCheckFailed(f"V is not invariant under {name}")
    head = list(range(4))
    rep = BraidRep(xc.submatrix(head, head), yc.submatrix(head, head))
    if not rep.satisfies_braid_relation():
        raise InternalCheckFailed("restricted pair violates the braid relation")
    logger.info(f"Restricted to the 4-dimensional subspace at lambda_1={lambda1}")
    return Restriction(lambda1, a, xc, yc, rep)


def e_profile(y_prime: ExactMatrix) -> List[List[bool]]:
    """profile[j][i] is True when component i of column E_(j+1) is nonzero."""
    return [[bool(y_prime[i, j]) for i in range(y_prime.rows)] for j in range(y_prime.cols)]


EXPECTED_E_PROFILE = [[True] * 4, [True] * 4, [True, True, False, True], [True] * 4]


def verify_restriction(
    lambda1: Any,
    workers: Optional[int] = None,
    progress: bool = False,
    restriction: Optional[Restriction] = None,
) -> Verdict:
    """Irreducibility of the 4-dimensional restriction plus its column profile.

    Raises InternalCheckFailed when the restricted pair breaks the braid relation or its
    column profile differs from EXPECTED_E_PROFILE.
    """
    rest = restriction if restriction is not None else restrict_to_V(lambda1)
    if not rest.rep.satisfies_braid_relation():
        raise InternalCheckFailed(f"restricted pair violates the braid relation at {lambda1}")
    profile = e_profile(rest.y_prime)
    if profile != EXPECTED_E_PROFILE:
        raise InternalCheckFailed(f"restricted column profile {profile} at lambda_1={lambda1}")
    diag = rest.x_prime.diagonal_entries()
    if any(diag[i] == diag[j] for i, j in combinations(range(len(diag)), 2)):
        raise EigenvalueCollision(f"restricted eigenvalues collide at lambda_1={lambda1}")
    verdict = analyse_pair(rest.x_prime, rest.y_prime, workers=workers, progress=progress)
    verdict.details.update(
        {
            "lambda1": lambda1,
            "braid_relation": True,
            "e_profile": profile,
            "e_profile_matches": True,
        }
    )
    return verdict


# ---- cross-checks ----


def dual_pair(x: ExactMatrix, y: ExactMatrix) -> Tuple[ExactMatrix, ExactMatrix]:
    """Inverse transposes; invariant subspaces of dimension d match dimension n - d."""
    return x.inverse().transpose(), y.inverse().transpose()


def algebra_dimension(m1: ExactMatrix, m2: ExactMatrix) -> int:
    """Dimension of the unital algebra generated by m1 and m2."""
    n = m1.rows
    echelon: List[Tuple[int, List[Any]]] = []

    def reduce(flat: List[Any]) -> Optional[List[Any]]:
        v = list(flat)
        for piv, row in echelon:
            f = v[piv]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        lead = next((i for i, a in enumerate(v) if a), None)
        if lead is None:
            return None
        inv = 1 / v[lead]
        v = [a * inv for a in v]
        for k, (piv, row) in enumerate(echelon):
            f = row[lead]
            if f:
                echelon[k] = (piv, [a - f * b for a, b in zip(row, v)])
        echelon.append((lead, v))
        return v

    def flatten(m: ExactMatrix) -> List[Any]:
        return [a for row in m.entries for a in row]

    start = ExactMatrix.identity(n)
    reduce(flatten(start))
    queue = [start]
    while queue and len(echelon) < n * n:
        m = queue.pop(0)
        for g in (m1, m2):
            nxt = m @ g
            if reduce(flatten(nxt)) is not None:
                queue.append(nxt)
    return len(echelon)


def generates_full_algebra(m1: ExactMatrix, m2: ExactMatrix) -> bool:
    """True iff m1, m2 span all n x n matrices as an algebra (irreducible over C)."""
    return algebra_dimension(m1, m2) == m1.rows * m1.rows


def _common_eigenvectors(m1: ExactMatrix, m2: ExactMatrix) -> List[ExactVector]:
    n = m1.rows
    one = ExactMatrix.identity(n)
    out: List[ExactVector] = []
    for mu in _distinct(m1.diagonal_entries()):
        for nu in _distinct(m2.diagonal_entries()):
            stacked = ExactMatrix(
                list((m1 - one.scale(mu)).entries) + list((m2 - one.scale(nu)).entries)
            )
            out.extend(stacked.kernel_basis())
    return out


def _distinct(values: Sequence[Any]) -> List[Any]:
    out: List[Any] = []
    for v in values:
        if all(v != o for o in out):
            out.append(v)
    return out


def _diagonalize_triangular(m: ExactMatrix) -> Optional[ExactMatrix]:
    """Eigenvector matrix of a triangular matrix, or None if it is not diagonalizable."""
    n = m.rows
    one = ExactMatrix.identity(n)
    columns: List[ExactVector] = []
    for mu in _distinct(m.diagonal_entries()):
        columns.extend((m - one.scale(mu)).kernel_basis())
    if len(columns) < n:
        return None
    return ExactMatrix.from_columns(columns)


def analyse_rep(
    rep: BraidRep, workers: Optional[int] = None, progress: bool = False
) -> Verdict:
    """Verdict for any pair with triangular sigma1.

    A diagonalizable sigma1 with multiplicities <= 2 goes through the pattern engine;
    otherwise irreducibility is read off the algebra the two images generate, and a
    reducible pair gets a common eigenvector as witness when one exists.
    """
    s1, s2 = rep.sigma1, rep.sigma2
    if not (s1.is_upper_triangular() or s1.is_lower_triangular()):
        raise ShapeMismatch("sigma1 image must be triangular")
    p = _diagonalize_triangular(s1)
    if p is not None:
        es = EigenStructure.from_diagonal(ExactMatrix.diagonal(s1.diagonal_entries()))
        if max(es.multiplicities) <= 2:
            p_inv = p.inverse()
            x, y = p_inv @ s1 @ p, p_inv @ s2 @ p
            verdict = analyse_pair(x, y, workers=workers, progress=progress)
            verdict.witnesses = [
                Witness(w.pattern, tuple(p @ v for v in w.basis)) for w in verdict.witnesses
            ]
            verdict.details["method"] = "patterns"
            return verdict

    dim = algebra_dimension(s1, s2)
    verdict = Verdict(Status.IRREDUCIBLE)
    verdict.details.update({"method": "algebra", "algebra_dimension": dim})
    if dim < s1.rows * s1.rows:
        lines = _common_eigenvectors(s1, s2)
        if lines:
            verdict.witnesses.append(Witness(None, (lines[0],)))
        else:
            # a common eigenvector of the transposes cuts out an invariant hyperplane
            covectors = _common_eigenvectors(s1.transpose(), s2.transpose())
            if covectors:
                plane = ExactMatrix([list(covectors[0])]).kernel_basis()
                verdict.witnesses.append(Witness(None, tuple(plane)))
        if verdict.witnesses:
            verdict.status = Status.REDUCIBLE
        else:
            verdict.status = Status.UNDECIDABLE
            verdict.details["guidance"] = "algebra is proper but no invariant line or hyperplane"
    logger.info(f"Algebra test: dimension {dim} of {s1.rows ** 2} ({verdict.status.value})")
    return verdict


@dataclass
class SampleReport:
    samples: int
    agreements: int = 0
    invariant_hits: int = 0
    disagreements: List[str] = field(default_factory=list)


def _random_alpha(rng: random.Random, scalars: Sequence[Any]) -> Any:
    base = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    if scalars and rng.random() < 0.5:
        return base + rng.choice(scalars) * rng.randint(1, 3)
    return base


def oracle_sample(
    x: ExactMatrix,
    y: ExactMatrix,
    rng: random.Random,
    samples: int,
    verdict: Optional[Verdict] = None,
) -> SampleReport:
    """Brute-force membership checks on random X-invariant subspaces against the engine.

    Lines are drawn either at random from the field or among the engine's own solutions.
    """
    if verdict is None:
        verdict = analyse_pair(x, y, workers=1)
    es = EigenStructure.from_diagonal(x)
    n = x.rows
    by_pattern: Dict[SubspacePattern, InvarianceResult] = {
        res.pattern: res for results in verdict.trace.values() for res in results
    }
    scalars = _distinct([a for row in y.entries for a in row if isinstance(a, Cyc)])
    report = SampleReport(samples)
    dims = sorted(verdict.trace)
    for _ in range(samples):
        d = rng.choice(dims)
        pattern = rng.choice(enumerate_patterns(es, d))
        res = by_pattern[pattern]
        candidate = pattern
        if pattern.unknowns:
            lines = [w for w in res.witnesses if w is not pattern]
            if lines and rng.random() < 0.5:
                candidate = rng.choice(lines)
            elif rng.random() < 0.1:
                candidate = pattern.resolve(Fraction(1), Fraction(0))
            else:
                candidate = pattern.resolve(_random_alpha(rng, scalars), Fraction(1))
        brute = is_invariant(y, candidate.basis(n))
        claimed = candidate in res.witnesses or (
            res.all_lines and candidate.planes != pattern.resolve(Fraction(1), Fraction(0)).planes
        )
        if brute:
            report.invariant_hits += 1
        if brute == claimed:
            report.agreements += 1
        else:
            report.disagreements.append(candidate.label())
    logger.info(
        f"Oracle sampling: {report.agreements}/{samples} agreements, "
        f"{report.invariant_hits} invariant samples"
    )
    return report


def check_conjugation_invariance(x: ExactMatrix, y: ExactMatrix, scales: Sequence[Any]) -> bool:
    """Same verdict after rescaling the eigenbasis by nonzero scalars."""
    d = ExactMatrix.diagonal(list(scales))
    d_inv = d.inverse()
    before = analyse_pair(x, y, workers=1)
    after = analyse_pair(x, d_inv @ y @ d, workers=1)
    return before.status == after.status and len(before.witnesses) == len(after.witnesses)


def braid_pair_ok(x: ExactMatrix, y: ExactMatrix) -> bool:
    return braid_relation_holds(x, y)
