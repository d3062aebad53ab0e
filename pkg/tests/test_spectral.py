"""Table matrices for the two recombinations, Gram products, exact spectra."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from natalg.nat import divisors
from natalg.spectral import (
    charpoly,
    gram_A,
    gram_B,
    matrix_to_csv,
    nonzero_spectra_match,
    operator_identity_add,
    operator_identity_mul,
    strip_zero_roots,
    table_matrix_add,
    table_matrix_mul,
)


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def brute_charpoly(m):
    """Leibniz determinant of xI - M, kept as an independent oracle."""
    n = len(m)
    total = [Fraction(0)] * (n + 1)
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        prod = [Fraction(1) if inversions % 2 == 0 else Fraction(-1)]
        for i in range(n):
            entry = [-Fraction(m[i][perm[i]])]
            if perm[i] == i:
                entry.append(Fraction(1))  # the x on the diagonal
            prod = poly_mul(prod, entry)
        for k, c in enumerate(prod):
            total[k] += c
    return total


square_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-5, 5), min_size=n, max_size=n),
        min_size=n, max_size=n,
    )
)


@settings(max_examples=80)
@given(square_matrices)
def test_charpoly_matches_leibniz_expansion(m):
    assert charpoly(m) == brute_charpoly(m)


def test_charpoly_known_factors():
    assert charpoly([[2, 0], [0, 3]]) == [6, -5, 1]
    eye3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert charpoly(eye3) == [-1, 3, -3, 1]
    with pytest.raises(ValueError):
        charpoly([[1, 2, 3], [4, 5, 6]])


def test_strip_zero_roots():
    assert strip_zero_roots([0, 0, 3, 1]) == [3, 1]
    assert strip_zero_roots([5, 1]) == [5, 1]
    assert strip_zero_roots([0]) == [0]


def test_additive_table_layout():
    t = table_matrix_add(3)
    assert t.row_labels == (0, 1, 2, 3)
    assert t.col_labels == (
        (0, 0),
        (1, 0), (0, 1),
        (2, 0), (1, 1), (0, 2),
        (3, 0), (2, 1), (1, 2), (0, 3),
    )
    row2 = t.rows[2]
    hits = [t.col_labels[k] for k, x in enumerate(row2) if x]
    assert hits == [(2, 0), (1, 1), (0, 2)]
    with pytest.raises(ValueError):
        table_matrix_add(0)


def test_multiplicative_table_layout():
    t = table_matrix_mul(4)
    assert t.row_labels == (1, 2, 3, 4)
    assert t.col_labels == (
        (1, 1),
        (2, 1), (1, 2),
        (3, 1), (1, 3),
        (4, 1), (2, 2), (1, 4),
    )
    row4 = t.rows[3]
    hits = [t.col_labels[k] for k, x in enumerate(row4) if x]
    assert hits == [(4, 1), (2, 2), (1, 4)]


def test_first_gram_product_is_diagonal():
    ta = table_matrix_add(5)
    A = gram_A(ta)
    for i in range(6):
        for j in range(6):
            assert A[i][j] == ((i + 1) if i == j else 0)
    tm = table_matrix_mul(6)
    M = gram_A(tm)
    for i, n in enumerate(tm.row_labels):
        assert M[i][i] == len(divisors(n))
        assert all(M[i][j] == 0 for j in range(len(M)) if j != i)


def test_second_gram_product_has_all_ones_blocks():
    ta = table_matrix_add(3)
    B = gram_B(ta)
    for a, la in enumerate(ta.col_labels):
        for b, lb in enumerate(ta.col_labels):
            assert B[a][b] == (1 if sum(la) == sum(lb) else 0)
    tm = table_matrix_mul(5)
    B = gram_B(tm)
    for a, la in enumerate(tm.col_labels):
        for b, lb in enumerate(tm.col_labels):
            assert B[a][b] == (1 if la[0] * la[1] == lb[0] * lb[1] else 0)


def test_operator_identities():
    for n in range(21):
        assert operator_identity_add(n) == n * (n + 1)
    for n in range(1, 31):
        assert operator_identity_mul(n) == n * len(divisors(n))


def test_gram_pairs_share_their_nonzero_spectrum():
    for t in (table_matrix_add(4), table_matrix_mul(6)):
        assert nonzero_spectra_match(gram_A(t), gram_B(t))


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
                min_size=2, max_size=2))
def test_products_in_both_orders_share_nonzero_spectra(m):
    # m m^T and m^T m differ in size but not in nonzero eigenvalues
    rows, cols = len(m), len(m[0])
    A = [[sum(m[i][k] * m[j][k] for k in range(cols)) for j in range(rows)]
         for i in range(rows)]
    B = [[sum(m[i][a] * m[i][b] for i in range(rows)) for b in range(cols)]
         for a in range(cols)]
    assert nonzero_spectra_match(A, B)


def test_csv_rendering():
    got = matrix_to_csv([[1, 0], [0, 1]], row_labels=(1, 2),
                        col_labels=((1, 1), (2, 1)))
    assert got == "row,1|1,2|1\n1,1,0\n2,0,1\n"
    assert matrix_to_csv([[1, 0], [0, 1]]) == "1,0\n0,1\n"
