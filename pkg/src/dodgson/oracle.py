"""Independent exact determinants used to cross-check the condensation engine.

Two algorithms, neither sharing a line of code with the engine:

* ``det_cofactor`` -- first-row Laplace expansion over polynomial entries,
  with the recursion memoized on the surviving column set so that the
  repeated sub-expansions of minor grids stay affordable.
* ``det_bareiss`` -- one-step fraction-free elimination for constant
  matrices, pivoting by row swap only when the pivot is exactly zero.
"""

from __future__ import annotations

from fractions import Fraction

from .matrix import SymMatrix, Window
from .poly import Poly

COFACTOR_DIMENSION_CAP = 8


def det_cofactor(m: SymMatrix, max_n: int = COFACTOR_DIMENSION_CAP) -> Poly:
    """Exact determinant polynomial by first-row Laplace expansion.

    Factorial-cost by nature; refuses dimensions above max_n.
    """
    if m.n > max_n:
        raise ValueError(f"cofactor expansion capped at {max_n}, got n={m.n}")
    rows = m.rows()
    memo: dict[tuple[int, ...], Poly] = {}

    def expand(cols: tuple[int, ...]) -> Poly:
        # The row being expanded is determined by how many columns survive.
        if len(cols) == 1:
            return rows[m.n - 1][cols[0]]
        cached = memo.get(cols)
        if cached is not None:
            return cached
        r = m.n - len(cols)
        total = Poly.zero()
        for k, c in enumerate(cols):
            entry = rows[r][c]
            if entry.is_zero():
                continue
            minor = expand(cols[:k] + cols[k + 1 :])
            term = entry * minor
            total = total + (term if k % 2 == 0 else -term)
        memo[cols] = total
        return total

    return expand(tuple(range(m.n)))


def det_bareiss(m: SymMatrix) -> Fraction:
    """Exact determinant of a constant matrix by fraction-free elimination.

    Every interior division is exact by the Bareiss identity; a zero pivot
    is repaired by a row swap (sign flip) and the determinant is zero when
    no swap can supply one.
    """
    n = m.n
    try:
        a = [[p.constant_value() for p in row] for row in m.rows()]
    except ValueError:
        raise ValueError("Bareiss oracle requires constant entries") from None
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def all_minors_level(a: SymMatrix, k: int) -> SymMatrix:
    """The (n-k)x(n-k) matrix of all (k+1)x(k+1) contiguous minors of a.

    Entry (i, j) is the determinant of rows i..i+k, columns j..j+k; for a
    sound condensation run this is exactly the level of size n-k.
    """
    n = a.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"minor level k must be in 1..{n - 1}, got {k}")
    size = n - k
    return SymMatrix(
        [
            [
                det_cofactor(a.submatrix(Window(i, j, k + 1)), max_n=n)
                for j in range(1, size + 1)
            ]
            for i in range(1, size + 1)
        ]
    )
