"""Exact dense matrices over the integers (and rationals where needed).

Everything here is immutable and uses Python's arbitrary precision ints, so
characteristic polynomials of 40-vertex graphs come out exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .poly import QPoly


class NonSquareError(ValueError):
    pass


class SingularDegreeError(ValueError):
    pass


class MatrixParseError(ValueError):
    pass


@dataclass(frozen=True)
class ZMatrix:
    """Dense row-major matrix; ``entries[i * cols + j]`` is entry ``(i, j)``."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "ZMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ZMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def ones(cls, rows: int, cols: int) -> "ZMatrix":
        """The all-ones matrix ``J_{rows,cols}``."""
        return cls(rows, cols, (1,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "ZMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> "ZMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "ZMatrix":
        """Matrix ``P`` with ``P[i, perm[i]] = 1`` so ``(P @ A)`` has row ``i`` equal to ``A``'s row ``perm[i]``."""
        n = len(perm)
        return cls(n, n, tuple(1 if perm[i] == j else 0 for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "ZMatrix":
        return ZMatrix(self.cols, self.rows, tuple(x for j in range(self.cols) for x in self.col(j)))

    def __matmul__(self, other: "ZMatrix") -> "ZMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in cols)
        return ZMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: "ZMatrix") -> "ZMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return ZMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ZMatrix":
        return ZMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __sub__(self, other: "ZMatrix") -> "ZMatrix":
        return self + (-other)

    def scale(self, c) -> "ZMatrix":
        return ZMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def map(self, fn) -> "ZMatrix":
        return ZMatrix(self.rows, self.cols, tuple(fn(a) for a in self.entries))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_binary(self) -> bool:
        return all(a == 0 or a == 1 for a in self.entries)

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_diagonal(self) -> bool:
        return self.is_square() and all(
            self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def is_permutation(self) -> bool:
        if not (self.is_square() and self.is_binary()):
            return False
        return all(sum(self.row(i)) == 1 for i in range(self.rows)) and all(
            sum(self.col(j)) == 1 for j in range(self.cols)
        )

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def diagonal(self) -> tuple:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def total(self):
        return sum(self.entries)

    def row_sums(self) -> tuple:
        return tuple(sum(self.row(i)) for i in range(self.rows))

    def col_sums(self) -> tuple:
        return tuple(sum(self.col(j)) for j in range(self.cols))

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "ZMatrix":
        """Matrix whose ``(i, j)`` entry is ``self[row_perm[i], col_perm[j]]``."""
        return ZMatrix(
            len(row_perm),
            len(col_perm),
            tuple(self[r, c] for r in row_perm for c in col_perm),
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ZMatrix":
        return self.permute(rows, cols)

    def __str__(self) -> str:
        return format_matrix(self)


def hstack(*ms: ZMatrix) -> ZMatrix:
    rows = ms[0].rows
    if any(m.rows != rows for m in ms):
        raise ValueError("hstack needs equal row counts")
    return ZMatrix.from_rows(
        [[x for m in ms for x in m.row(i)] for i in range(rows)],
        cols=sum(m.cols for m in ms),
    )


def vstack(*ms: ZMatrix) -> ZMatrix:
    cols = ms[0].cols
    if any(m.cols != cols for m in ms):
        raise ValueError("vstack needs equal column counts")
    return ZMatrix(sum(m.rows for m in ms), cols, tuple(x for m in ms for x in m.entries))


def kron(a: ZMatrix, b: ZMatrix) -> ZMatrix:
    """Kronecker product: the ``(a.rows*b.rows) x (a.cols*b.cols)`` block matrix ``[a_ij * b]``."""
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for k in range(b.rows):
            brow = b.row(k)
            out.extend(x * y for x in arow for y in brow)
    return ZMatrix(a.rows * b.rows, a.cols * b.cols, tuple(out))


@dataclass(frozen=True)
class BlockMatrix2x2:
    """``[[u, v], [w, x]]`` with conforming block shapes."""

    u: ZMatrix
    v: ZMatrix
    w: ZMatrix
    x: ZMatrix

    def __post_init__(self):
        if self.u.rows != self.v.rows or self.w.rows != self.x.rows:
            raise ValueError("block rows do not conform")
        if self.u.cols != self.w.cols or self.v.cols != self.x.cols:
            raise ValueError("block columns do not conform")

    @classmethod
    def diagonal(cls, u: ZMatrix, x: ZMatrix) -> "BlockMatrix2x2":
        return cls(u, ZMatrix.zeros(u.rows, x.cols), ZMatrix.zeros(x.rows, u.cols), x)

    @classmethod
    def anti_diagonal(cls, v: ZMatrix, w: ZMatrix) -> "BlockMatrix2x2":
        return cls(ZMatrix.zeros(v.rows, w.cols), v, w, ZMatrix.zeros(w.rows, v.cols))

    @classmethod
    def split(cls, m: ZMatrix, r: int, c: int) -> "BlockMatrix2x2":
        """Partition ``m`` after row ``r`` and column ``c``."""
        top, bot = range(r), range(r, m.rows)
        left, right = range(c), range(c, m.cols)
        return cls(
            m.submatrix(top, left), m.submatrix(top, right),
            m.submatrix(bot, left), m.submatrix(bot, right),
        )

    @property
    def row_split(self) -> tuple[int, int]:
        return (self.u.rows, self.w.rows)

    @property
    def col_split(self) -> tuple[int, int]:
        return (self.u.cols, self.v.cols)

    def is_diagonal(self) -> bool:
        return self.v.is_zero() and self.w.is_zero()

    def is_anti_diagonal(self) -> bool:
        return self.u.is_zero() and self.x.is_zero()

    def assemble(self) -> ZMatrix:
        return vstack(hstack(self.u, self.v), hstack(self.w, self.x))

    @property
    def T(self) -> "BlockMatrix2x2":
        return BlockMatrix2x2(self.u.T, self.w.T, self.v.T, self.x.T)

    def __matmul__(self, other: "BlockMatrix2x2") -> "BlockMatrix2x2":
        return BlockMatrix2x2(
            self.u @ other.u + self.v @ other.w,
            self.u @ other.v + self.v @ other.x,
            self.w @ other.u + self.x @ other.w,
            self.w @ other.v + self.x @ other.x,
        )


def partitioned_tensor(m: BlockMatrix2x2, h: BlockMatrix2x2) -> BlockMatrix2x2:
    """Blockwise Kronecker product: blocks are paired by position."""
    return BlockMatrix2x2(kron(m.u, h.u), kron(m.v, h.v), kron(m.w, h.w), kron(m.x, h.x))


def _berkowitz(rows: list[list[int]]) -> list[int]:
    # Division-free, so exact over any commutative ring. Descending coefficients of det(xI - A).
    n = len(rows)
    vect = [1]
    for r in range(n):
        row = rows[r][:r]
        col = [rows[i][r] for i in range(r)]
        t = [1, -rows[r][r]]
        v = col
        for _ in range(r):
            t.append(-sum(a * b for a, b in zip(row, v)))
            v = [sum(rows[i][k] * v[k] for k in range(r)) for i in range(r)]
        vect = [
            sum(t[i - j] * vect[j] for j in range(max(0, i - r - 1), min(i, r) + 1))
            for i in range(r + 2)
        ]
    return vect


def _rational_charpoly(a: ZMatrix) -> QPoly:
    # clear denominators, run integer Berkowitz, then undo the scaling of x
    den = lcm(*(Fraction(e).denominator for e in a.entries)) if a.entries else 1
    scaled = [[int(Fraction(e) * den) for e in a.row(i)] for i in range(a.rows)]
    desc = _berkowitz(scaled)
    # det(xI - A) = den^-n * det((den x) I - den A)
    return QPoly.from_descending(
        [Fraction(c, den ** k) for k, c in enumerate(desc)]
    ) if den != 1 else QPoly.from_descending(desc)


def charpoly(a: ZMatrix) -> QPoly:
    """``det(xI - a)`` with exact coefficients."""
    if not a.is_square():
        raise NonSquareError(f"charpoly needs a square matrix, got {a.rows}x{a.cols}")
    return _rational_charpoly(a)


def gen_charpoly(a: ZMatrix, d: ZMatrix) -> QPoly:
    """Monic ``det(x*d - a) / det(d)``, i.e. the characteristic polynomial of ``d^-1 a``.

    ``d`` must be diagonal with positive entries; a zero entry means an
    isolated vertex and raises ``SingularDegreeError``.
    """
    if not a.is_square():
        raise NonSquareError(f"gen_charpoly needs a square matrix, got {a.rows}x{a.cols}")
    if d.shape != a.shape or not d.is_diagonal():
        raise ValueError("d must be diagonal with the same size as a")
    degs = d.diagonal()
    for i, x in enumerate(degs):
        if x == 0:
            raise SingularDegreeError(f"zero diagonal entry at index {i}")
        if x < 0:
            raise ValueError(f"negative diagonal entry at index {i}")
    scaled = ZMatrix(
        a.rows, a.cols,
        tuple(Fraction(a[i, j]) / degs[i] for i in range(a.rows) for j in range(a.cols)),
    )
    return _rational_charpoly(scaled)


def row_col_sum_multisets(a: ZMatrix) -> tuple[tuple, tuple]:
    """Row sums and column sums, each as an ascending tuple."""
    return tuple(sorted(a.row_sums())), tuple(sorted(a.col_sums()))


def parse_matrix(text: str) -> ZMatrix:
    """Read the line-per-row text format.

    A row is either whitespace-separated integers or a run of ``0``/``1``
    characters.  Leading blank lines and ``#`` comments are skipped; the first
    blank line after data ends the matrix.
    """
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if rows:
                break
            continue
        try:
            if len(line.split()) > 1:
                row = [int(tok) for tok in line.split()]
            elif set(line) <= {"0", "1"}:
                row = [int(ch) for ch in line]
            else:
                row = [int(line)]
        except ValueError:
            raise MatrixParseError(f"line {lineno}: cannot parse {raw!r}") from None
        if rows and len(row) != len(rows[0]):
            raise MatrixParseError(
                f"line {lineno}: expected {len(rows[0])} entries, got {len(row)}"
            )
        rows.append(row)
    if not rows:
        raise MatrixParseError("no matrix rows found")
    return ZMatrix.from_rows(rows)


def read_matrix(path) -> ZMatrix:
    with open(path) as fh:
        return parse_matrix(fh.read())


def format_matrix(a: ZMatrix) -> str:
    if a.is_binary() and a.cols > 0:
        return "\n".join("".join(str(x) for x in a.row(i)) for i in range(a.rows))
    return "\n".join(" ".join(str(x) for x in a.row(i)) for i in range(a.rows))


def as_matrix(data: ZMatrix | Iterable[Sequence]) -> ZMatrix:
    return data if isinstance(data, ZMatrix) else ZMatrix.from_rows(list(data))
