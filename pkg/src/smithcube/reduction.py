"""The structural 2-local reduction and the closed-form Smith group.

For even n = 2m the lower half block M of the graded monomial matrix is
conjugated by the canonical bases into a matrix B whose off-diagonal blocks
are the Wilson diagonal forms.  Zeroing B's diagonal costs nothing over the
2-local integers: each odd entry of the condensed block shadow kills the two
even diagonal entries it meets, and the leftover even entries form two half-
size copies of the same shadow, scaled by 2.  Recursing yields the complete
2-elementary divisor table of M, and with it the Smith group of the cube.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bigmat import (ElemDivTable, IntMatrix, InvariantFactors, block_diag,
                     is_prime, snf, valuation)
from .canonical import build_E, wilson_form
from .cube import DEFAULT_SIZE_CAP, blocks


def _require_even(n: int) -> int:
    if n < 2 or n % 2:
        raise ValueError(f"even n >= 2 required, got {n}")
    return n // 2


def column_multiplicity(n: int, j: int) -> int:
    """C(n,j) - C(n,j-1): number of full-rank j-subsets."""
    return comb(n, j) - (comb(n, j - 1) if j >= 1 else 0)


def telescoped_multiplicity(n: int, k: int) -> int:
    """Sum over i = k..m of [C(n,i-k) - C(n,i-1-k)]; telescopes to C(n,m-k)."""
    m = _require_even(n)
    if not 1 <= k <= m:
        raise ValueError(f"k={k} out of range 1..{m}")
    total = 0
    for i in range(k, m + 1):
        total += comb(n, i - k) - (comb(n, i - 1 - k) if i - 1 - k >= 0 else 0)
    return total


# -- the conjugated half block B ------------------------------------------


def stacked_basis(n: int, k: int) -> IntMatrix:
    """Block-diagonal sum of the canonical basis matrices for sizes 0..k."""
    return block_diag(*(build_E(n, j).matrix for j in range(k + 1)))


def _solve_right(c: IntMatrix, e: IntMatrix) -> IntMatrix:
    """Solve X * e = c exactly for unimodular e; the solution is integral."""
    if e.rows != e.cols or c.cols != e.rows:
        raise ValueError("dimension mismatch in solve")
    size = e.rows
    # Gaussian elimination over the rationals on e^T augmented with c^T
    aug = [[Fraction(x) for x in row] for row in e.transpose().row_lists()]
    rhs = [[Fraction(x) for x in row] for row in c.transpose().row_lists()]
    for col in range(size):
        piv = next(i for i in range(col, size) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        rhs[col] = [x * inv for x in rhs[col]]
        for i in range(size):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
                rhs[i] = [x - f * y for x, y in zip(rhs[i], rhs[col])]
    data = []
    for j in range(c.rows):
        row = [rhs[i][j] for i in range(size)]
        if any(x.denominator != 1 for x in row):
            raise ArithmeticError("non-integral solution against a unimodular matrix")
        data.append([int(x) for x in row])
    return IntMatrix(data, size)


def build_B(n: int, size_cap: int = DEFAULT_SIZE_CAP) -> IntMatrix:
    """E(m-1) * M * E(m)^{-1}, computed blockwise without inversion."""
    m = _require_even(n)
    big_m = blocks(n, size_cap).M
    lhs = stacked_basis(n, m - 1) @ big_m
    out_blocks = []
    off = 0
    for k in range(m + 1):
        width = comb(n, k)
        c_block = lhs.submatrix(range(lhs.rows), range(off, off + width))
        out_blocks.append(_solve_right(c_block, build_E(n, k).matrix))
        off += width
    data = []
    for i in range(lhs.rows):
        row = []
        for b in out_blocks:
            row.extend(b.row(i))
        data.append(row)
    return IntMatrix(data, off)


def zero_diagonal(mat: IntMatrix) -> IntMatrix:
    data = mat.row_lists()
    for i in range(min(mat.rows, mat.cols)):
        data[i][i] = 0
    return IntMatrix(data, mat.cols)


def closed_form_multiplicities_of_M(n: int) -> dict:
    """Nonzero diagonal entries of a diagonal form of M: k -> C(n, m-k)."""
    m = _require_even(n)
    return {k: comb(n, m - k) for k in range(1, m + 1)}


def surplus_columns_of_M(n: int) -> int:
    """Columns of M beyond its rank: C(n, m)."""
    m = _require_even(n)
    return comb(n, m)


# -- the condensed block shadow -------------------------------------------


def _v2(x: Fraction) -> int:
    num, den = x.numerator, x.denominator
    if num == 0:
        raise ValueError("2-adic valuation of zero")
    return valuation(num, 2) - valuation(den, 2)


@dataclass(frozen=True)
class CondensedMatrix:
    """Blockwise shadow of B: one weighted entry per scalar block.

    Rows are labeled (i, k) with 1 <= k <= i <= m; columns (j, l) with
    0 <= j <= m, 1 <= l <= j + 1.  Row (i, k) holds an even entry at column
    (i-1, k) and the exact value i+1-k at column (i, k).  The weight of row
    (i, k) is the number of matrix rows the block row stands for.
    """
    m: int
    entries: dict  # (row_label, col_label) -> Fraction, odd denominators
    row_weights: dict  # row_label -> positive int

    def row_labels(self) -> tuple:
        return tuple((i, k) for i in range(1, self.m + 1) for k in range(1, i + 1))

    def col_labels(self) -> tuple:
        return tuple((j, l) for j in range(self.m + 1) for l in range(1, j + 2))

    def shape(self) -> tuple:
        return (self.m * (self.m + 1) // 2, (self.m + 1) * (self.m + 2) // 2)

    def diagonal_value(self, i: int, k: int) -> int:
        return i + 1 - k

    def validate(self) -> None:
        rows = set(self.row_labels())
        cols = set(self.col_labels())
        if set(self.row_weights) != rows:
            raise ValueError("row weights do not cover the row labels")
        if any(w <= 0 for w in self.row_weights.values()):
            raise ValueError("non-positive row weight")
        seen = set()
        for (r, c), v in self.entries.items():
            if r not in rows or c not in cols:
                raise ValueError(f"entry at unknown position {(r, c)}")
            i, k = r
            if v == 0:
                raise ValueError(f"explicit zero stored at {(r, c)}")
            if v.denominator % 2 == 0:
                raise ValueError(f"entry at {(r, c)} is not 2-local")
            if c == (i, k):
                if v != i + 1 - k:
                    raise ValueError(f"bad diagonal value {v} at {(r, c)}")
            elif c == (i - 1, k):
                if _v2(v) < 1:
                    raise ValueError(f"odd entry {v} on the even diagonal at {(r, c)}")
            else:
                raise ValueError(f"entry outside the two diagonals at {(r, c)}")
            seen.add((r, c))
        for (i, k) in rows:
            if ((i, k), (i, k)) not in seen:
                raise ValueError(f"missing diagonal value at {(i, k)}")
            if ((i, k), (i - 1, k)) not in seen:
                raise ValueError(f"missing even entry in row {(i, k)}")


def build_condensed(m: int, n: int | None = None) -> CondensedMatrix:
    """Condensed shadow of B for half-size m, with the concrete even values
    n - 2(i-1) on the main diagonal and weights taken from the block sizes."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if n is None:
        n = 2 * m
    entries = {}
    weights = {}
    for i in range(1, m + 1):
        for k in range(1, i + 1):
            entries[((i, k), (i - 1, k))] = Fraction(n - 2 * (i - 1))
            entries[((i, k), (i, k))] = Fraction(i + 1 - k)
            weights[(i, k)] = column_multiplicity(n, k - 1)
    c = CondensedMatrix(m, entries, weights)
    c.validate()
    return c


@dataclass(frozen=True)
class ReductionStep:
    """Result of one diagonal-killing pass over a condensed matrix."""
    odd_pivots: tuple  # (value, weight) pairs
    even_residual: CondensedMatrix  # rows/cols with even block index
    odd_residual: CondensedMatrix  # rows/cols with odd block index


def reduce_condensed(c: CondensedMatrix) -> ReductionStep:
    """Kill the even diagonal with the odd condensed entries.

    For each odd value q at (i, k): a column operation scales column (i, k)
    by the 2-multiple c/q and subtracts it from column (i-1, k), killing the
    even entry in the same row and writing a 4-multiple at (i+1, k), (i-1, k);
    a row operation then kills the even entry below the pivot.  The surviving
    rows and columns split by parity of the block index into two copies of
    the half-size shadow, scaled by 2.
    """
    c.validate()
    m = c.m
    rows: dict = {r: {} for r in c.row_labels()}
    cols: dict = {cl: set() for cl in c.col_labels()}
    for (r, cl), v in c.entries.items():
        rows[r][cl] = v
        cols[cl].add(r)

    def add_to(r, cl, delta):
        cur = rows[r].get(cl, Fraction(0)) + delta
        if cur:
            rows[r][cl] = cur
            cols[cl].add(r)
        else:
            rows[r].pop(cl, None)
            cols[cl].discard(r)

    pivots = [(i, k) for i in range(1, m + 1) for k in range(1, i + 1)
              if (i + 1 - k) % 2 == 1]
    odd_out = []
    for (i, k) in pivots:
        src = (i, k)
        dst = (i - 1, k)
        q = rows[src][src]
        assert q == i + 1 - k and int(q) % 2 == 1
        t = rows[src][dst] / q
        assert _v2(t) >= 1
        for r in list(cols[src]):
            add_to(r, dst, -t * rows[r][src])
        if i < m:
            below = (i + 1, k)
            tv = rows[below].get(src)
            if tv is not None:
                f = tv / q
                assert _v2(f) >= 1
                for cl in list(rows[src]):
                    add_to(below, cl, -f * rows[src][cl])
        odd_out.append((int(q), c.row_weights[src]))

    # the pivot rows and columns must now be clean
    for (i, k) in pivots:
        assert set(rows[(i, k)]) == {(i, k)}
        assert cols[(i, k)] == {(i, k)}

    def residual(parity: int, new_m: int) -> CondensedMatrix:
        def map_row(lab):
            i, k = lab
            return (i // 2, (k + 1) // 2) if parity == 0 else ((i - 1) // 2, k // 2)

        def map_col(lab):
            j, l = lab
            return (j // 2, (l + 1) // 2) if parity == 0 else ((j - 1) // 2, l // 2)

        entries = {}
        weights = {}
        for r in rows:
            i, k = r
            if r in pivots or i % 2 != parity:
                continue
            nr = map_row(r)
            weights[nr] = c.row_weights[r]
            for cl, v in rows[r].items():
                j, _ = cl
                assert j % 2 == parity, "entry crossing the parity split"
                half = v / 2
                entries[(nr, map_col(cl))] = half
        res = CondensedMatrix(new_m, entries, weights)
        res.validate()
        return res

    step = ReductionStep(tuple(odd_out), residual(0, m // 2),
                         residual(1, (m - 1) // 2))
    return step


def two_local_divisors_of_M(n: int) -> ElemDivTable:
    """2-elementary divisors of M by full recursive condensed reduction.

    An odd pivot of weight w found after d halvings contributes w to the
    multiplicity of 2^d.
    """
    m = _require_even(n)
    mult: dict = {}
    stack = [(build_condensed(m, n), 0)]
    while stack:
        c, depth = stack.pop()
        if c.m == 0:
            continue
        step = reduce_condensed(c)
        for _value, weight in step.odd_pivots:
            mult[depth] = mult.get(depth, 0) + weight
        stack.append((step.even_residual, depth + 1))
        stack.append((step.odd_residual, depth + 1))
    return ElemDivTable(2, mult, 0)


# -- closed-form Smith group ----------------------------------------------


def _factor_small(x: int) -> dict:
    x = abs(x)
    out = {}
    f = 2
    while f * f <= x:
        while x % f == 0:
            out[f] = out.get(f, 0) + 1
            x //= f
        f += 1 if f == 2 else 2
    if x > 1:
        out[x] = out.get(x, 0) + 1
    return out


def invariant_factor_rle(counts: dict) -> tuple:
    """Invariant factors of a diagonal matrix given as value -> multiplicity,
    returned run-length encoded as (factor, count) pairs in chain order.

    Works positionally: for every prime the sorted valuations are aligned to
    the diagonal positions, so multiplicities may be astronomically large.
    """
    counts = {abs(v): c for v, c in counts.items() if c}
    if any(v == 0 for v in counts):
        raise ValueError("zero entry in a nonzero-diagonal multiset")
    total = sum(counts.values())
    if total == 0:
        return ()
    primes = sorted({p for v in counts for p in _factor_small(v)})
    per_prime = {}
    boundaries = {total}
    for p in primes:
        by_exp: dict = {}
        for v, cnt in counts.items():
            e = 0
            while v % p == 0:
                v //= p
                e += 1
            by_exp[e] = by_exp.get(e, 0) + cnt
        cum = []
        run = 0
        for e in sorted(by_exp):
            run += by_exp[e]
            cum.append((run, e))
            boundaries.add(run)
        per_prime[p] = cum
    out = []
    prev = 0
    for b in sorted(boundaries):
        if b == prev:
            continue
        factor = 1
        for p in primes:
            for run, e in per_prime[p]:
                if prev < run:
                    factor *= p ** e
                    break
        if out and out[-1][0] == factor:
            out[-1] = (factor, out[-1][1] + (b - prev))
        else:
            out.append((factor, b - prev))
        prev = b
    return tuple(out)


@dataclass(frozen=True)
class SmithGroupSummary:
    """Diagonal form of the cube's adjacency matrix plus the free rank."""
    n: int
    free_rank: int
    nonzero: dict  # diagonal entry -> multiplicity

    def total(self) -> int:
        return self.free_rank + sum(self.nonzero.values())

    def invariant_factor_rle(self) -> tuple:
        return invariant_factor_rle(self.nonzero)

    def invariant_factors(self) -> InvariantFactors:
        factors = []
        for value, count in self.invariant_factor_rle():
            factors.extend([value] * count)
        return InvariantFactors(tuple(factors), self.free_rank)

    def to_text(self) -> str:
        lines = [f"free_rank {self.free_rank}"]
        for k in sorted(self.nonzero):
            lines.append(f"{k} {self.nonzero[k]}")
        return "\n".join(lines) + "\n"


def eigenvalue_diagonal(n: int) -> dict:
    """Multiset of cube eigenvalues n - 2*l with multiplicity C(n, l)."""
    out: dict = {}
    for level in range(n + 1):
        out[n - 2 * level] = out.get(n - 2 * level, 0) + comb(n, level)
    return out


def smith_group(n: int) -> SmithGroupSummary:
    """Closed-form Smith group of the n-cube.

    Even n = 2m: C(n, m) zeros and entries k = 1..m with multiplicity
    2*C(n, m-k).  Odd n: the eigenvalue diagonal itself is a diagonal form.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 2 == 0:
        m = n // 2
        return SmithGroupSummary(n, comb(n, m),
                                 {k: 2 * comb(n, m - k) for k in range(1, m + 1)})
    nonzero: dict = {}
    for v, cnt in eigenvalue_diagonal(n).items():
        nonzero[abs(v)] = nonzero.get(abs(v), 0) + cnt
    return SmithGroupSummary(n, 0, nonzero)


def smith_group_oracle(n: int, size_cap: int = DEFAULT_SIZE_CAP) -> SmithGroupSummary:
    """Smith group by generic elimination on the full adjacency matrix."""
    from .cube import adjacency
    inv = snf(adjacency(n, size_cap).matrix)
    nonzero: dict = {}
    for d in inv.factors:
        nonzero[d] = nonzero.get(d, 0) + 1
    return SmithGroupSummary(n, inv.zero_count, nonzero)


def smith_group_reduction(n: int) -> SmithGroupSummary:
    """Smith group assembled from the structural routes: the recursive
    condensed reduction for the 2-part (doubled across the two half blocks)
    and the eigenvalue diagonal for every odd prime."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 2:
        return smith_group(n)
    m = n // 2
    rank = (1 << n) - comb(n, m)
    two_part = two_local_divisors_of_M(n)
    counts_by_prime = {2: {e: 2 * c for e, c in two_part.mult.items()}}
    for p in range(3, n + 1, 2):
        if not is_prime(p):
            continue
        by_exp: dict = {}
        for v, cnt in eigenvalue_diagonal(n).items():
            if v:
                e = valuation(v, p)
                by_exp[e] = by_exp.get(e, 0) + cnt
        counts_by_prime[p] = by_exp
    # reassemble a diagonal multiset positionally from the per-prime tables
    boundaries = {rank}
    per_prime = {}
    for p, by_exp in counts_by_prime.items():
        assert sum(by_exp.values()) == rank
        cum = []
        run = 0
        for e in sorted(by_exp):
            run += by_exp[e]
            cum.append((run, e))
            boundaries.add(run)
        per_prime[p] = cum
    nonzero: dict = {}
    prev = 0
    for b in sorted(boundaries):
        if b == prev:
            continue
        value = 1
        for p, cum in per_prime.items():
            for run, e in cum:
                if prev < run:
                    value *= p ** e
                    break
        nonzero[value] = nonzero.get(value, 0) + (b - prev)
        prev = b
    return SmithGroupSummary(n, comb(n, m), nonzero)


def same_group(a: SmithGroupSummary, b: SmithGroupSummary) -> bool:
    """Equality as abelian groups: same free rank and invariant factors."""
    return (a.free_rank == b.free_rank
            and a.invariant_factor_rle() == b.invariant_factor_rle())


# -- conjecture and Laplacian reports -------------------------------------


def verify_conjecture(n: int, oracle_cap: int = 10,
                      size_cap: int = DEFAULT_SIZE_CAP) -> bool:
    """Multiplicity of 2^i among the 2-elementary divisors equals the count
    of eigenvalues exactly divisible by 2^(i+1); n even.

    The divisor side comes from the elimination oracle up to oracle_cap and
    from the proven diagonal form beyond it.
    """
    m = _require_even(n)
    if n <= oracle_cap:
        from .bigmat import p_elementary_divisors
        from .cube import adjacency
        table = p_elementary_divisors(adjacency(n, size_cap).matrix, 2)
        divisor_side = {e: c for e, c in table.mult.items() if c}
        free = table.free_rank
    else:
        divisor_side = {}
        for k in range(1, m + 1):
            e = valuation(k, 2)
            divisor_side[e] = divisor_side.get(e, 0) + 2 * comb(n, m - k)
        free = comb(n, m)
    eigen_side: dict = {}
    zero_eigen = 0
    for v, cnt in eigenvalue_diagonal(n).items():
        if v == 0:
            zero_eigen += cnt
        else:
            i = valuation(v, 2) - 1
            eigen_side[i] = eigen_side.get(i, 0) + cnt
    return divisor_side == eigen_side and free == zero_eigen


@dataclass(frozen=True)
class LaplacianReport:
    """Shared low 2-elementary divisor multiplicities of A and n*I - A."""
    n: int
    s: int
    comparisons: tuple  # (exponent, mult in A, mult in Laplacian)

    @property
    def ok(self) -> bool:
        return all(a == b for _, a, b in self.comparisons)


def laplacian_partial_check(n: int, size_cap: int = DEFAULT_SIZE_CAP) -> LaplacianReport:
    """For n = 2^s the adjacency and Laplacian matrices agree mod 2^s, so the
    multiplicities of 2^i agree for i < s.  Verified with the oracle."""
    s = 0
    x = n
    while x > 1 and x % 2 == 0:
        x //= 2
        s += 1
    if x != 1 or s < 1:
        raise ValueError(f"n must be a power of two >= 2, got {n}")
    from .bigmat import p_elementary_divisors
    from .cube import adjacency, laplacian
    table_a = p_elementary_divisors(adjacency(n, size_cap).matrix, 2)
    table_l = p_elementary_divisors(laplacian(n, size_cap), 2)
    comparisons = tuple((i, table_a.mult.get(i, 0), table_l.mult.get(i, 0))
                        for i in range(s))
    return LaplacianReport(n, s, comparisons)
