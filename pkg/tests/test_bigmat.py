import random

import pytest

from smithcube.bigmat import (DiagonalForm, ElemDivTable, IntMatrix,
                              InvariantFactors, block_diag,
                              diagonal_form_to_invariant_factors, from_text,
                              is_unimodular, p_elementary_divisors, snf,
                              to_text, valuation)


def test_snf_coprime_diagonal():
    assert snf(IntMatrix.diagonal([2, 3])) == InvariantFactors((1, 6), 0)


def test_snf_four_cycle():
    # adjacency matrix of the 4-cycle: rows repeat pairwise
    c4 = IntMatrix([[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]])
    assert snf(c4) == InvariantFactors((1, 1), 2)


def test_snf_zero_and_empty():
    assert snf(IntMatrix.zeros(3, 5)) == InvariantFactors((), 3)
    assert snf(IntMatrix.zeros(0, 4)) == InvariantFactors((), 0)


def test_snf_rectangular():
    m = IntMatrix([[2, 4, 4], [-6, 6, 12]])
    inv = snf(m)
    assert inv.zero_count == 0
    assert len(inv.factors) == 2
    assert inv.factors[1] % inv.factors[0] == 0


def test_diagonal_form_valuation_sort():
    d = DiagonalForm((3, 3, 1, 1, 1, 1, 1, 1), 0, (8, 8))
    assert diagonal_form_to_invariant_factors(d).factors == (1, 1, 1, 1, 1, 1, 3, 3)


def test_diagonal_form_with_zeros():
    d = DiagonalForm((1,) * 8 + (2, 2), 6, (16, 16))
    inv = diagonal_form_to_invariant_factors(d)
    assert inv.factors == (1,) * 8 + (2, 2)
    assert inv.zero_count == 6


def test_diagonal_form_sign_invariance():
    d = DiagonalForm((-5,), 0, (1, 1))
    assert diagonal_form_to_invariant_factors(d).factors == (5,)


def test_diagonal_form_rejects_zero_entry():
    with pytest.raises(ValueError):
        DiagonalForm((1, 0), 0, (2, 2))


def test_invariant_factors_validation():
    with pytest.raises(ValueError):
        InvariantFactors((2, 3), 0)
    with pytest.raises(ValueError):
        InvariantFactors((0, 2), 0)


def test_p_elementary_divisors_diag():
    t = p_elementary_divisors(IntMatrix.diagonal([4, 6, 0]), 2)
    assert t == ElemDivTable(2, {1: 1, 2: 1}, 1)


def test_p_elementary_divisors_identity():
    t = p_elementary_divisors(IntMatrix.identity(3), 7)
    assert t == ElemDivTable(7, {0: 3}, 0)


def test_p_elementary_divisors_rejects_composites():
    for p in (1, 0, -3, 4, 9, 15):
        with pytest.raises(ValueError):
            p_elementary_divisors(IntMatrix.identity(2), p)


def test_is_unimodular():
    assert is_unimodular(IntMatrix.identity(5))
    assert not is_unimodular(IntMatrix.diagonal([1, 2]))
    with pytest.raises(ValueError):
        is_unimodular(IntMatrix.zeros(2, 3))


def test_determinant_values():
    assert IntMatrix([[1, 2], [3, 4]]).determinant() == -2
    assert IntMatrix([[2, 0, 1], [0, 3, 0], [1, 0, 1]]).determinant() == 3
    assert IntMatrix.zeros(3, 3).determinant() == 0


def test_constructors_and_errors():
    m = IntMatrix([[1, 2], [3, 4]])
    assert m.transpose().transpose() == m
    assert IntMatrix.identity(2) @ m == m
    with pytest.raises(ValueError):
        m @ IntMatrix.identity(3)
    with pytest.raises(IndexError):
        m[2, 0]
    with pytest.raises(IndexError):
        m[0, -1]
    with pytest.raises(TypeError):
        IntMatrix([[1.5]])
    with pytest.raises(ValueError):
        IntMatrix([[1], [2, 3]])


def test_block_diag_and_submatrix():
    a = IntMatrix([[1, 2]])
    b = IntMatrix([[3], [4]])
    bd = block_diag(a, b)
    assert bd == IntMatrix([[1, 2, 0], [0, 0, 3], [0, 0, 4]])
    assert bd.submatrix([1, 2], [2]) == b
    with pytest.raises(IndexError):
        bd.submatrix([3], [0])


def test_immutability():
    m = IntMatrix.identity(2)
    with pytest.raises(AttributeError):
        m.rows = 3


def test_text_round_trip():
    m = IntMatrix([[0, -7, 3], [0, 0, 0], [12345678901234567890, 0, -1]])
    assert from_text(to_text(m)) == m
    z = IntMatrix.zeros(2, 2)
    assert from_text(to_text(z)) == z


def test_text_format_shape():
    m = IntMatrix([[0, 5], [0, 0]])
    assert to_text(m) == "2 2\n1 2 5\n0 0 0\n"


def test_text_parse_errors():
    with pytest.raises(ValueError):
        from_text("2 2\n1 1 1\n")  # missing terminator
    with pytest.raises(ValueError):
        from_text("2 2\n3 1 1\n0 0 0\n")  # out of bounds
    with pytest.raises(ValueError):
        from_text("")


def _random_matrix(rng, rows, cols, lo=-6, hi=6):
    return IntMatrix([[rng.randint(lo, hi) for _ in range(cols)]
                      for _ in range(rows)])


def _random_unimodular(rng, n, steps=12):
    data = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n < 2:
        return IntMatrix(data)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-3, 3)
        op = rng.randrange(3)
        if op == 0:
            data[i] = [x + c * y for x, y in zip(data[i], data[j])]
        elif op == 1:
            data[i], data[j] = data[j], data[i]
        else:
            data[i] = [-x for x in data[i]]
    return IntMatrix(data)


def test_snf_unimodular_invariance():
    rng = random.Random(20240817)
    for _ in range(15):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = _random_matrix(rng, rows, cols)
        u = _random_unimodular(rng, rows)
        v = _random_unimodular(rng, cols)
        assert is_unimodular(u) and is_unimodular(v)
        assert snf(u @ m @ v) == snf(m)


def test_snf_transpose_invariance():
    rng = random.Random(7)
    for _ in range(20):
        m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        a, b = snf(m), snf(m.transpose())
        assert a.factors == b.factors


def test_elem_div_table_reconstructs_p_parts():
    rng = random.Random(99)
    for _ in range(15):
        m = _random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), -9, 9)
        inv = snf(m)
        for p in (2, 3, 5):
            t = p_elementary_divisors(m, p)
            assert t.free_rank == inv.zero_count
            assert sum(t.mult.values()) == len(inv.factors)
            for e, c in t.mult.items():
                assert sum(1 for d in inv.factors if valuation(d, p) == e) == c


def test_diagonal_conversion_preserves_valuations():
    rng = random.Random(5)
    for _ in range(20):
        entries = tuple(rng.choice([-1, 1]) * rng.randint(1, 60)
                        for _ in range(rng.randint(1, 8)))
        d = DiagonalForm(entries, 0, (len(entries), len(entries)))
        inv = diagonal_form_to_invariant_factors(d)
        for p in (2, 3, 5, 7):
            assert sorted(valuation(abs(e), p) for e in entries) == \
                sorted(valuation(f, p) for f in inv.factors)
