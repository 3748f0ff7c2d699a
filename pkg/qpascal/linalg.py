"""
Dense exact linear algebra over any field of the tower.

Entries are plain field elements (Fraction, Cyc, RatFunc, ResidueElem); ints are lifted
to Fraction. Indices are 0-based. Pivoting takes the first nonzero entry of a column,
so every result is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import IndexOutOfRange, ShapeMismatch, SingularMatrix

ZERO = Fraction(0)
ONE = Fraction(1)


def _lift(x: Any) -> Any:
    if isinstance(x, bool):
        raise TypeError("booleans are not field elements")
    if isinstance(x, int):
        return Fraction(x)
    return x


class ExactVector:
    """Immutable column vector."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Any]):
        self.entries: Tuple[Any, ...] = tuple(_lift(x) for x in entries)
        if not self.entries:
            raise ShapeMismatch("vector must have length >= 1")

    @classmethod
    def unit(cls, n: int, i: int) -> "ExactVector":
        """Standard basis vector e_i of length n."""
        if not 0 <= i < n:
            raise IndexOutOfRange(f"unit vector index {i} outside 0..{n - 1}")
        return cls(ONE if k == i else ZERO for k in range(n))

    @classmethod
    def zeros(cls, n: int) -> "ExactVector":
        return cls([ZERO] * n)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> Any:
        if not 0 <= i < len(self.entries):
            raise IndexOutOfRange(f"component {i} outside 0..{len(self.entries) - 1}")
        return self.entries[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactVector):
            return NotImplemented
        return len(self) == len(other) and all(a == b for a, b in zip(self, other))

    def __hash__(self) -> int:
        return hash(self.entries)

    def _check(self, other: "ExactVector") -> None:
        if len(self) != len(other):
            raise ShapeMismatch(f"vector lengths differ: {len(self)} vs {len(other)}")

    def __add__(self, other: "ExactVector") -> "ExactVector":
        self._check(other)
        return ExactVector(a + b for a, b in zip(self, other))

    def __sub__(self, other: "ExactVector") -> "ExactVector":
        self._check(other)
        return ExactVector(a - b for a, b in zip(self, other))

    def __neg__(self) -> "ExactVector":
        return ExactVector(-a for a in self)

    def scale(self, c: Any) -> "ExactVector":
        return ExactVector(a * c for a in self)

    def dot(self, other: "ExactVector") -> Any:
        self._check(other)
        acc: Any = ZERO
        for a, b in zip(self, other):
            acc = acc + a * b
        return acc

    def map(self, fn: Callable[[Any], Any]) -> "ExactVector":
        return ExactVector(fn(a) for a in self)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def support(self) -> List[int]:
        """Indices of the nonzero components."""
        return [i for i, a in enumerate(self.entries) if a]

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.entries) + ")"

    def __repr__(self) -> str:
        return f"ExactVector{self}"


class ExactMatrix:
    """Immutable dense matrix stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: Sequence[Sequence[Any]]):
        data = tuple(tuple(_lift(x) for x in r) for r in rows)
        if not data or not data[0]:
            raise ShapeMismatch("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ShapeMismatch("ragged rows")
        self.rows = len(data)
        self.cols = width
        self.entries: Tuple[Tuple[Any, ...], ...] = data

    # ---- constructors ----

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "ExactMatrix":
        return cls([[ZERO] * (rows if cols is None else cols) for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[ExactVector]) -> "ExactMatrix":
        if not columns:
            raise ShapeMismatch("no columns")
        n = len(columns[0])
        if any(len(c) != n for c in columns):
            raise ShapeMismatch("columns of different lengths")
        return cls([[c[i] for c in columns] for i in range(n)])

    # ---- access ----

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: Tuple[int, int]) -> Any:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRange(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return self.entries[i][j]

    def row(self, i: int) -> ExactVector:
        if not 0 <= i < self.rows:
            raise IndexOutOfRange(f"row {i} outside 0..{self.rows - 1}")
        return ExactVector(self.entries[i])

    def column(self, j: int) -> ExactVector:
        if not 0 <= j < self.cols:
            raise IndexOutOfRange(f"column {j} outside 0..{self.cols - 1}")
        return ExactVector(r[j] for r in self.entries)

    def columns(self) -> List[ExactVector]:
        return [self.column(j) for j in range(self.cols)]

    def diagonal_entries(self) -> List[Any]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    def __hash__(self) -> int:
        return hash(self.entries)

    # ---- shape predicates ----

    def is_diagonal(self) -> bool:
        return all(
            not self.entries[i][j] for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def is_upper_triangular(self) -> bool:
        return all(
            not self.entries[i][j] for i in range(self.rows) for j in range(min(i, self.cols))
        )

    def is_lower_triangular(self) -> bool:
        return self.transpose().is_upper_triangular()

    # ---- arithmetic ----

    def _same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes differ: {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in r] for r in self.entries])

    def scale(self, c: Any) -> "ExactMatrix":
        return ExactMatrix([[a * c for a in r] for r in self.entries])

    def __matmul__(self, other: Any) -> Any:
        if isinstance(other, ExactVector):
            if self.cols != len(other):
                raise ShapeMismatch(f"cannot apply {self.rows}x{self.cols} to length {len(other)}")
            return ExactVector(_dot(r, other.entries) for r in self.entries)
        if isinstance(other, ExactMatrix):
            return matmul(self, other)
        return NotImplemented

    def __pow__(self, k: int) -> "ExactMatrix":
        if not self.is_square():
            raise ShapeMismatch("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def map(self, fn: Callable[[Any], Any]) -> "ExactMatrix":
        return ExactMatrix([[fn(a) for a in r] for r in self.entries])

    # ---- elimination ----

    def rref(self) -> Tuple["ExactMatrix", List[int]]:
        """Reduced row echelon form and the pivot columns."""
        m = [list(r) for r in self.entries]
        pivots: List[int] = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            piv = next((i for i in range(r, self.rows) if m[i][c]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                f = m[i][c]
                if i != r and f:
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return ExactMatrix(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Any:
        if not self.is_square():
            raise ShapeMismatch("determinant of a non-square matrix")
        m = [list(r) for r in self.entries]
        n = self.rows
        acc: Any = ONE
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c]), None)
            if piv is None:
                return ZERO
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                acc = -acc
            p = m[c][c]
            acc = acc * p
            inv = 1 / p
            for i in range(c + 1, n):
                f = m[i][c]
                if f:
                    f = f * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return acc

    def inverse(self) -> "ExactMatrix":
        """Gauss-Jordan inverse."""
        if not self.is_square():
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = ExactMatrix(
            [
                list(r) + [ONE if i == j else ZERO for j in range(n)]
                for i, r in enumerate(self.entries)
            ]
        )
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise SingularMatrix(f"{n}x{n} matrix is singular")
        return ExactMatrix([r[n:] for r in red.entries])

    def kernel_basis(self) -> List[ExactVector]:
        """Right null space; one vector per free column, with a 1 in that column."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis: List[ExactVector] = []
        for f in free:
            v: List[Any] = [ZERO] * self.cols
            v[f] = ONE
            for i, pc in enumerate(pivots):
                v[pc] = -red.entries[i][f]
            basis.append(ExactVector(v))
        return basis

    def solve(self, b: ExactVector) -> Optional[ExactVector]:
        """One solution of self @ x = b (free variables zero), or None."""
        if len(b) != self.rows:
            raise ShapeMismatch(f"right-hand side has length {len(b)}, expected {self.rows}")
        aug = ExactMatrix([list(r) + [b[i]] for i, r in enumerate(self.entries)])
        red, pivots = aug.rref()
        if pivots and pivots[-1] == self.cols:
            return None
        x: List[Any] = [ZERO] * self.cols
        for i, pc in enumerate(pivots):
            x[pc] = red.entries[i][self.cols]
        return ExactVector(x)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.entries) + "]"

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"


def _dot(row: Sequence[Any], col: Sequence[Any]) -> Any:
    acc: Any = ZERO
    for a, b in zip(row, col):
        if a and b:
            acc = acc + a * b
    return acc


def matmul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = b.transpose().entries
    return ExactMatrix([[_dot(r, c) for c in bt] for r in a.entries])


def inverse(m: ExactMatrix) -> ExactMatrix:
    return m.inverse()


def kernel_basis(m: ExactMatrix) -> List[ExactVector]:
    return m.kernel_basis()


def rank(m: ExactMatrix) -> int:
    return m.rank()


def det(m: ExactMatrix) -> Any:
    return m.det()


def rank_of_vectors(vectors: Sequence[ExactVector]) -> int:
    if not vectors:
        return 0
    return ExactMatrix([v.entries for v in vectors]).rank()


def in_span(v: ExactVector, basis: Sequence[ExactVector]) -> bool:
    """True iff v is a linear combination of basis (rank comparison)."""
    if any(len(b) != len(v) for b in basis):
        raise ShapeMismatch("basis vectors and v differ in length")
    if not basis:
        return v.is_zero()
    return rank_of_vectors(list(basis) + [v]) == rank_of_vectors(basis)


def minor(m: ExactMatrix, rows: Sequence[int], cols: Sequence[int]) -> Any:
    """Determinant of the submatrix on the given strictly increasing index sets."""
    if len(rows) != len(cols) or not rows:
        raise ShapeMismatch(f"minor needs equal non-empty index sets, got {rows} and {cols}")
    for idx, bound, what in ((rows, m.rows, "row"), (cols, m.cols, "column")):
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ShapeMismatch(f"{what} indices must be strictly increasing: {list(idx)}")
        if idx[0] < 0 or idx[-1] >= bound:
            raise ShapeMismatch(f"{what} index outside 0..{bound - 1}: {list(idx)}")
    return m.submatrix(rows, cols).det()
