"""Tiny exact linear algebra over Fraction: reduced row echelon form,
kernel bases, and an incrementally maintained row span.  Matrices here
are lists of equal-length Fraction lists; everything stays rational.
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (copy) plus the pivot column list."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def kernel_basis(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column, each with a
    1 in its free column (deterministic, ascending free columns)."""
    if not rows:
        return [
            [Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)
        ]
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[fc]
        basis.append(vec)
    return basis


class RowSpan:
    """A growing subspace kept in reduced row echelon form."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, list[Fraction]] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def insert(self, vec: list[Fraction]) -> bool:
        """Reduce vec against the span; add it if independent."""
        v = list(vec)
        for piv in sorted(self.rows):
            if v[piv] != 0:
                f = v[piv]
                row = self.rows[piv]
                v = [a - f * b for a, b in zip(v, row)]
        for c in range(self.ncols):
            if v[c] != 0:
                inv = Fraction(1) / v[c]
                newrow = [x * inv for x in v]
                for piv, row in self.rows.items():
                    if row[c] != 0:
                        f = row[c]
                        self.rows[piv] = [a - f * b for a, b in zip(row, newrow)]
                self.rows[c] = newrow
                return True
        return False
