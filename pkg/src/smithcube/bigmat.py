"""Exact integer matrices, Smith normal form, and elementary divisors.

Everything works over plain Python ints, so there is no precision limit and
no rounding anywhere.  Matrices are immutable; all operations return new
values, which makes them safe to share between threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


class IntMatrix:
    """Dense matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence[int]], cols: int | None = None):
        data = tuple(tuple(row) for row in data)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row length")
            cols = width
        else:
            cols = 0 if cols is None else cols
        for row in data:
            for x in row:
                if not isinstance(x, int):
                    raise TypeError(f"non-integer entry {x!r}")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)]
                    for i in range(n)], n)

    # -- access -----------------------------------------------------------

    def __getitem__(self, key) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) out of bounds")
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def row_lists(self) -> list:
        """Mutable copy of the entries, row-major."""
        return [list(row) for row in self._data]

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntMatrix) and self.cols == other.cols
                and self._data == other._data)

    def __hash__(self):
        return hash((self.cols, self._data))

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"

    # -- arithmetic -------------------------------------------------------

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch {self.cols} != {other.rows}")
        bdata = other._data
        width = other.cols
        zero = [0] * width
        out = []
        for row in self._data:
            acc = list(zero)
            for j, v in enumerate(row):
                if v:
                    brow = bdata[j]
                    if v == 1:
                        acc = [a + b for a, b in zip(acc, brow)]
                    else:
                        acc = [a + v * b for a, b in zip(acc, brow)]
            out.append(acc)
        return IntMatrix(out, width)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return IntMatrix([[a + b for a, b in zip(r, s)]
                          for r, s in zip(self._data, other._data)], self.cols)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + other.scale(-1)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * x for x in row] for row in self._data], self.cols)

    def transpose(self) -> "IntMatrix":
        if self.rows == 0:
            return IntMatrix([[] for _ in range(self.cols)], 0)
        return IntMatrix(list(zip(*self._data)), self.rows)

    def submatrix(self, row_indices: Iterable[int],
                  col_indices: Iterable[int]) -> "IntMatrix":
        ri = list(row_indices)
        ci = list(col_indices)
        for i in ri:
            if not 0 <= i < self.rows:
                raise IndexError(f"row {i} out of bounds")
        for j in ci:
            if not 0 <= j < self.cols:
                raise IndexError(f"column {j} out of bounds")
        return IntMatrix([[self._data[i][j] for j in ci] for i in ri], len(ci))

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.row_lists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            akk = a[k][k]
            for i in range(k + 1, n):
                aik = a[i][k]
                ai = a[i]
                ak = a[k]
                for j in range(k + 1, n):
                    ai[j] = (akk * ai[j] - aik * ak[j]) // prev
                ai[k] = 0
            prev = akk
        return sign * a[n - 1][n - 1]


def block_diag(*blocks: IntMatrix) -> IntMatrix:
    """Block-diagonal sum of the given matrices."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[0] * cols for _ in range(rows)]
    r = c = 0
    for b in blocks:
        for i, row in enumerate(b._data):
            out[r + i][c:c + b.cols] = row
        r += b.rows
        c += b.cols
    return IntMatrix(out, cols)


# -- diagonal forms and invariant factors ---------------------------------


@dataclass(frozen=True)
class DiagonalForm:
    """Multiset of nonzero diagonal entries plus the count of zero positions."""
    nonzero_entries: tuple
    zero_count: int
    ambient: tuple  # (rows, cols) of the diagonalized matrix

    def __post_init__(self):
        if any(e == 0 for e in self.nonzero_entries):
            raise ValueError("zero listed among nonzero entries")
        rows, cols = self.ambient
        if len(self.nonzero_entries) + self.zero_count != min(rows, cols):
            raise ValueError("entry count does not fill the diagonal")


@dataclass(frozen=True)
class InvariantFactors:
    """Invariant factor chain d_1 | d_2 | ... | d_r, all positive."""
    factors: tuple
    zero_count: int

    def __post_init__(self):
        f = self.factors
        if any(d < 1 for d in f):
            raise ValueError("invariant factors must be positive")
        for a, b in zip(f, f[1:]):
            if b % a:
                raise ValueError(f"divisibility chain broken: {a} does not divide {b}")

    @property
    def rank(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class ElemDivTable:
    """Multiplicities of p^e among the elementary divisors, for one prime p."""
    prime: int
    mult: dict
    free_rank: int

    def __eq__(self, other):
        return (isinstance(other, ElemDivTable) and self.prime == other.prime
                and self.free_rank == other.free_rank
                and {e: c for e, c in self.mult.items() if c}
                == {e: c for e, c in other.mult.items() if c})


def _divisibility_chain(entries: Iterable[int]) -> list:
    """Invariant factors of a diagonal matrix with the given nonzero entries.

    Pairwise gcd/lcm exchanges: each step preserves the matrix class up to
    integral equivalence, and the sweep leaves a divisibility chain.  Avoids
    any integer factorization.
    """
    d = sorted(abs(e) for e in entries)
    for i in range(len(d)):
        di = d[i]
        for j in range(i + 1, len(d)):
            if d[j] % di:
                g = gcd(di, d[j])
                d[j] = di * d[j] // g
                di = g
        d[i] = di
    return d


def diagonal_form_to_invariant_factors(d: DiagonalForm) -> InvariantFactors:
    """Invariant factors of any diagonal form; sign and order independent."""
    return InvariantFactors(tuple(_divisibility_chain(d.nonzero_entries)),
                            d.zero_count)


def _eliminate(a: list) -> list:
    """Diagonalize an integer matrix in place by unimodular row/column
    operations; returns the list of nonzero diagonal entries produced.

    Pivoting picks the minimal-absolute-value entry of the pivot column and
    alternates row and column reduction until the pivot's row and column are
    clean.  The pivot magnitude strictly decreases on every retry, so the
    loop terminates.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    r = 0
    while r < rows and r < cols:
        # first column with a nonzero entry in the active submatrix
        pc = -1
        for j in range(r, cols):
            for i in range(r, rows):
                if a[i][j]:
                    pc = j
                    break
            if pc >= 0:
                break
        if pc < 0:
            break
        if pc != r:
            for row in a:
                row[r], row[pc] = row[pc], row[r]
        while True:
            pi = min((i for i in range(r, rows) if a[i][r]),
                     key=lambda i: abs(a[i][r]))
            if pi != r:
                a[pi], a[r] = a[r], a[pi]
            p = a[r][r]
            ar = a[r]
            dirty = False
            for i in range(r + 1, rows):
                v = a[i][r]
                if v:
                    q = v // p
                    if q:
                        ai = a[i]
                        ai[r:] = [x - q * y for x, y in zip(ai[r:], ar[r:])]
                    if a[i][r]:
                        dirty = True
            if dirty:
                continue
            # column r is clean below the pivot, so reducing the pivot row
            # by column operations only touches row r
            bad = -1
            for j in range(r + 1, cols):
                v = ar[j]
                if v:
                    ar[j] = v - (v // p) * p
                    if ar[j]:
                        bad = j
            if bad < 0:
                diag.append(p)
                r += 1
                break
            for row in a:
                row[r], row[bad] = row[bad], row[r]
    return diag


def snf(m: IntMatrix) -> InvariantFactors:
    """Smith normal form diagonal of an arbitrary integer matrix."""
    diag = _eliminate(m.row_lists())
    factors = _divisibility_chain(diag)
    return InvariantFactors(tuple(factors), min(m.rows, m.cols) - len(factors))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def valuation(x: int, p: int) -> int:
    """Exponent of p in x; x must be nonzero."""
    if x == 0:
        raise ValueError("valuation of zero")
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def p_elementary_divisors(m: IntMatrix, p: int) -> ElemDivTable:
    """Table e -> multiplicity of p^e among the elementary divisors of m."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    inv = snf(m)
    mult: dict = {}
    for d in inv.factors:
        e = valuation(d, p)
        mult[e] = mult.get(e, 0) + 1
    return ElemDivTable(p, mult, inv.zero_count)


def invariant_factors_to_table(inv: InvariantFactors, p: int) -> ElemDivTable:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    mult: dict = {}
    for d in inv.factors:
        e = valuation(d, p)
        mult[e] = mult.get(e, 0) + 1
    return ElemDivTable(p, mult, inv.zero_count)


def is_unimodular(m: IntMatrix) -> bool:
    """True iff m is square with determinant +-1."""
    if m.rows != m.cols:
        raise ValueError("unimodularity requires a square matrix")
    return abs(m.determinant()) == 1


# -- sparse-triple text format --------------------------------------------


def to_text(m: IntMatrix) -> str:
    """Serialize in the sparse-triple format: header "rows cols", one line
    "i j value" per nonzero entry (1-based), terminator "0 0 0"."""
    lines = [f"{m.rows} {m.cols}"]
    for i in range(m.rows):
        row = m.row(i)
        for j, v in enumerate(row):
            if v:
                lines.append(f"{i + 1} {j + 1} {v}")
    lines.append("0 0 0")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> IntMatrix:
    """Parse the sparse-triple format; exact inverse of :func:`to_text`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    rows, cols = map(int, lines[0].split())
    if rows < 0 or cols < 0:
        raise ValueError("negative dimensions in header")
    data = [[0] * cols for _ in range(rows)]
    terminated = False
    for ln in lines[1:]:
        i, j, v = ln.split()
        i, j, v = int(i), int(j), int(v)
        if (i, j, v) == (0, 0, 0):
            terminated = True
            break
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise ValueError(f"entry ({i}, {j}) out of bounds")
        data[i - 1][j - 1] = v
    if not terminated:
        raise ValueError("missing 0 0 0 terminator")
    return IntMatrix(data, cols)
