"""Truncated multiplication-table matrices for addition and for
multiplication on the nonnegative integers, their two Gram products, the
summed operator identities, and exact characteristic polynomials used to
compare nonzero spectra.

No floats anywhere: eigen-data is handled through charpolys over Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .additive import coproduct_add
from .dirichlet import coproduct_mul
from .nat import divisors

__all__ = [
    "TableMatrix",
    "table_matrix_add",
    "table_matrix_mul",
    "gram_A",
    "gram_B",
    "operator_identity_add",
    "operator_identity_mul",
    "charpoly",
    "strip_zero_roots",
    "nonzero_spectra_match",
    "matrix_to_csv",
]


@dataclass(frozen=True)
class TableMatrix:
    rows: tuple[tuple[int, ...], ...]
    row_labels: tuple[int, ...]
    col_labels: tuple[tuple[int, int], ...]


def table_matrix_add(N: int) -> TableMatrix:
    """Rows 0..N; one column per pair (i, j) with i+j <= N, grouped by the
    sum and ordered by descending first coordinate inside a group."""
    if N < 1:
        raise ValueError("need N >= 1")
    cols = [(i, s - i) for s in range(N + 1) for i in range(s, -1, -1)]
    rows = tuple(
        tuple(1 if i + j == n else 0 for (i, j) in cols) for n in range(N + 1)
    )
    return TableMatrix(rows, tuple(range(N + 1)), tuple(cols))


def table_matrix_mul(N: int) -> TableMatrix:
    """Rows 1..N; one column per divisor pair (d, n/d) with n <= N, grouped
    by the product and ordered by descending first coordinate."""
    if N < 1:
        raise ValueError("need N >= 1")
    cols = [(d, n // d) for n in range(1, N + 1) for d in reversed(divisors(n))]
    rows = tuple(
        tuple(1 if a * b == n else 0 for (a, b) in cols) for n in range(1, N + 1)
    )
    return TableMatrix(rows, tuple(range(1, N + 1)), tuple(cols))


def gram_A(table: TableMatrix) -> list[list[int]]:
    """m times its transpose; diagonal counts the splittings of each row
    label (n+1 additively, d(n) multiplicatively)."""
    m = table.rows
    return [[sum(ra[k] * rb[k] for k in range(len(ra))) for rb in m] for ra in m]


def gram_B(table: TableMatrix) -> list[list[int]]:
    """Transpose times m; all-ones blocks indexed by recombination value."""
    m = table.rows
    ncols = len(table.col_labels)
    return [
        [sum(row[a] * row[b] for row in m) for b in range(ncols)]
        for a in range(ncols)
    ]


def operator_identity_add(n: int) -> int:
    """Recombine each splitting of n by + and total up: equals n(n+1)."""
    total = sum(c * (i + j) for (i, j), c in coproduct_add(n))
    assert total == n * (n + 1)
    return int(total)


def operator_identity_mul(n: int) -> int:
    """Recombine each divisor splitting of n by * and total up: n*d(n)."""
    total = sum(c * (d * e) for (d, e), c in coproduct_mul(n))
    assert total == n * len(divisors(n))
    return int(total)


# ---------------------------------------------------------------------------
# exact characteristic polynomials

Poly = list[Fraction]  # ascending coefficients


def _poly_sub_scaled(p: Poly, q: Poly, c: Fraction) -> Poly:
    out = list(p) + [Fraction(0)] * (len(q) - len(p))
    for i, qc in enumerate(q):
        out[i] -= c * qc
    return out


def charpoly(matrix) -> Poly:
    """Coefficients (ascending) of det(xI - M), computed exactly by
    reducing to Hessenberg form with similarity row/column operations and
    then running the leading-submatrix recurrence."""
    n = len(matrix)
    H = [[Fraction(x) for x in row] for row in matrix]
    if any(len(row) != n for row in H):
        raise ValueError("matrix must be square")

    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if H[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            H[piv], H[j + 1] = H[j + 1], H[piv]
            for row in H:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        for i in range(j + 2, n):
            if not H[i][j]:
                continue
            f = H[i][j] / H[j + 1][j]
            for k in range(j, n):
                H[i][k] -= f * H[j + 1][k]
            for k in range(n):
                H[k][j + 1] += f * H[k][i]

    # p[m] = charpoly of the leading m x m block
    p: list[Poly] = [[Fraction(1)]]
    for m in range(1, n + 1):
        prev = p[m - 1]
        cur: Poly = [Fraction(0)] + list(prev)  # x * prev
        cur = _poly_sub_scaled(cur, prev, H[m - 1][m - 1])
        subdiag = Fraction(1)
        for k in range(m - 1, 0, -1):
            subdiag *= H[k][k - 1]
            if H[k - 1][m - 1]:
                cur = _poly_sub_scaled(cur, p[k - 1], H[k - 1][m - 1] * subdiag)
        p.append(cur)
    return p[n]


def strip_zero_roots(p: Poly) -> Poly:
    """Remove every factor of x (trailing kernel dimensions)."""
    k = 0
    while k < len(p) - 1 and p[k] == 0:
        k += 1
    return list(p[k:])


def nonzero_spectra_match(mat_a, mat_b) -> bool:
    """The two charpolys agree after discarding zero eigenvalues."""
    return strip_zero_roots(charpoly(mat_a)) == strip_zero_roots(charpoly(mat_b))


def _label_str(label) -> str:
    # pair labels print i|j to stay comma-free inside CSV
    if isinstance(label, tuple):
        return "|".join(str(x) for x in label)
    return str(label)


def matrix_to_csv(matrix, row_labels=None, col_labels=None) -> str:
    """Rows of comma-separated integer entries with optional leading label
    column and header row."""
    lines = []
    if col_labels is not None:
        head = ["row"] if row_labels is not None else []
        head += [_label_str(c) for c in col_labels]
        lines.append(",".join(head))
    for idx, row in enumerate(matrix):
        cells = [_label_str(row_labels[idx])] if row_labels is not None else []
        cells += [str(x) for x in row]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
