"""Exact linear algebra over the rationals.

Two flavours live here.  Small dense systems (frames, coefficient solves,
point-configuration determinants) use plain Gaussian elimination over
Fraction with first-nonzero pivoting, which is exact and deterministic.
Large graded coefficient matrices use a sparse fraction-free echelon: rows
are kept as primitive integer vectors indexed by monomial, so rank and
minimal-generator computations avoid rational blowup.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class SingularMatrixError(ValueError):
    """Square system has no unique solution."""


def _copy(matrix):
    return [[Fraction(v) for v in row] for row in matrix]


def det(matrix) -> Fraction:
    """Exact determinant of a square Fraction matrix."""
    m = _copy(matrix)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        pv = m[col][col]
        result *= pv
        for r in range(col + 1, n):
            f = m[r][col] / pv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return result * sign


def rank(rows) -> int:
    """Rank of a list of Fraction rows."""
    m = _copy(rows)
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][col]
        for i in range(r + 1, len(m)):
            f = m[i][col] / pv
            if f:
                for c in range(col, ncols):
                    m[i][c] -= f * m[r][c]
        r += 1
        if r == len(m):
            break
    return r


def solve(matrix, rhs) -> list[Fraction]:
    """Solve the square system matrix * x = rhs exactly."""
    n = len(matrix)
    m = _copy(matrix)
    b = [Fraction(v) for v in rhs]
    if any(len(r) != n for r in m) or len(b) != n:
        raise ValueError("solve needs a square system")
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise SingularMatrixError("system matrix is singular")
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            b[col], b[pivot] = b[pivot], b[col]
        pv = m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / pv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
                b[r] -= f * b[col]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        s = b[r]
        for c in range(r + 1, n):
            s -= m[r][c] * x[c]
        x[r] = s / m[r][r]
    return x


def invert(matrix) -> list[list[Fraction]]:
    """Exact inverse of a square Fraction matrix."""
    n = len(matrix)
    cols = [solve(matrix, [Fraction(1) if r == j else Fraction(0) for r in range(n)])
            for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


class SparseEchelon:
    """Incremental row echelon over sparse primitive-integer rows.

    Keys are monomials (or any hashable); the pivot of a row is its maximal
    key under the supplied sort key, reduction always cancels pivots, and
    every stored row is content-free with positive pivot entry.
    """

    def __init__(self, sortkey):
        self.sortkey = sortkey
        self.pivots: dict = {}

    def __len__(self):
        return len(self.pivots)

    def rows(self):
        return list(self.pivots.values())

    def _to_int_row(self, row: dict) -> dict:
        if not row:
            return {}
        denom = 1
        for v in row.values():
            if isinstance(v, Fraction):
                denom = denom * v.denominator // gcd(denom, v.denominator)
        out = {}
        for k, v in row.items():
            iv = int(v * denom) if isinstance(v, Fraction) else v * denom
            if iv:
                out[k] = iv
        return _primitive(out)

    def reduce(self, row: dict) -> dict:
        """Reduce a row against the stored pivots; returns the residue."""
        r = self._to_int_row(row)
        while r:
            lead = max(r, key=self.sortkey)
            piv = self.pivots.get(lead)
            if piv is None:
                if r[lead] < 0:
                    r = {k: -v for k, v in r.items()}
                return _primitive(r)
            a, b = r[lead], piv[lead]
            new = {k: v * b for k, v in r.items()}
            for k, v in piv.items():
                w = new.get(k, 0) - v * a
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            r = _primitive(new)
        return {}

    def insert(self, row: dict) -> bool:
        """Insert a row; returns True when it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[max(r, key=self.sortkey)] = r
        return True
