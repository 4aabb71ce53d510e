"""Exact integer matrix algebra.

Smith normal forms with unimodular witnesses, minor gcds, cokernel
structure and kernel counts over Z/m. Everything runs on plain Python
ints, so entries may grow without bound and no tolerance ever enters.

The diagonal convention puts divisibility in descending order:
``phi[j]`` divides ``phi[j-1]``, with every integer dividing 0. For a
``rows x cols`` matrix the invariant factor sequence has exactly
``cols`` entries; when the matrix is wider than tall the excess columns
surface as leading zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "GroupDescriptor",
    "IntMatrix",
    "SNFResult",
    "WorkBoundError",
    "cokernel_descriptor",
    "determinant",
    "elementary_gcds",
    "invariant_factors",
    "kernel_count_mod",
    "smith_normal_form",
    "snf_matrix",
]


class WorkBoundError(RuntimeError):
    """An enumeration would exceed its configured budget."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable row-major integer matrix.

    ``cols`` is stored explicitly so zero-row shapes keep their width;
    0x0, 0xn and nx0 are all legal.
    """

    entries: tuple[tuple[int, ...], ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise ValueError("negative width")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(data, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(tuple((0,) * cols for _ in range(rows)), cols)

    @classmethod
    def diagonal(cls, values) -> "IntMatrix":
        vals = tuple(int(v) for v in values)
        n = len(vals)
        return cls(tuple(tuple(vals[i] if i == j else 0 for j in range(n)) for i in range(n)), n)

    def transpose(self) -> "IntMatrix":
        flipped = tuple(tuple(row[j] for row in self.entries) for j in range(self.cols))
        return IntMatrix(flipped, self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        out = []
        for i in range(self.rows):
            srow = self.entries[i]
            out.append(tuple(
                sum(srow[k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)))
        return IntMatrix(tuple(out), other.cols)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class GroupDescriptor:
    """Shape of an abelian group A^free x A(t_1) x A(t_2) x ...

    ``free_rank`` counts every torsion-free summand, including the
    standalone leading factor when ``leading_free_factor`` is set (the
    flag only records where one of them came from). ``torsion`` holds
    the annihilator orders other than 0 and 1, in descending
    divisibility order.
    """

    free_rank: int
    torsion: tuple[int, ...]
    leading_free_factor: bool = False

    def order_mod(self, modulus: int) -> int:
        """Element count once A is specialized to Z/modulus."""
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        out = modulus ** self.free_rank
        for t in self.torsion:
            out *= math.gcd(t, modulus)
        return out

    def describe(self, symbol: str = "A") -> str:
        parts = [symbol] * self.free_rank + [f"{symbol}({t})" for t in self.torsion]
        return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors plus the unimodular change-of-basis witnesses.

    Invariant: ``u1 @ m @ u2 == snf_matrix(phi, m.rows, m.cols)`` and
    both witnesses have determinant +-1.
    """

    phi: tuple[int, ...]
    u1: IntMatrix
    u2: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for f in self.phi if f)

    def normal_form(self) -> IntMatrix:
        return snf_matrix(self.phi, self.u1.rows, self.u2.rows)


def snf_matrix(phi, rows: int, cols: int) -> IntMatrix:
    """Lay out a factor sequence as the rows x cols normal form.

    The kappa x kappa diagonal of phi gains zero rows at the bottom when
    the matrix is taller than wide, and sheds its leading zero rows when
    wider than tall, so the nonzero band sits at (i, cols - t + i).
    """
    phi = tuple(int(f) for f in phi)
    if len(phi) != cols:
        raise ValueError("phi length must equal the column count")
    t = min(rows, cols)
    if any(phi[j] for j in range(cols - t)):
        raise ValueError("leading factors beyond the row count must vanish")
    grid = [[0] * cols for _ in range(rows)]
    for i in range(t):
        j = cols - t + i
        grid[i][j] = phi[j]
    return IntMatrix.from_rows(grid, cols)


# Reduction pivots are chosen deterministically: smallest |value|,
# positive before negative, then lowest row, then lowest column.
def _select_pivot(a, rows, cols, p):
    best = None
    where = None
    for i in range(p, rows):
        for j in range(p, cols):
            v = a[i][j]
            if v:
                key = (-v if v < 0 else v, 0 if v > 0 else 1, i, j)
                if best is None or key < best:
                    best = key
                    where = (i, j)
    return where


def _place_pivot(a, u1, u2, rows, cols, p):
    """Clear row/column p and make a[p][p] divide the rest of the block.

    Returns False when the trailing block is already all zero. Every
    step keeps a == u1_ops(M)u2_ops exact; |pivot| strictly drops each
    time a nonzero remainder appears, so the loop terminates.
    """
    while True:
        found = _select_pivot(a, rows, cols, p)
        if found is None:
            return False
        bi, bj = found
        if bi != p:
            a[p], a[bi] = a[bi], a[p]
            u1[p], u1[bi] = u1[bi], u1[p]
        if bj != p:
            for row in a:
                row[p], row[bj] = row[bj], row[p]
            for row in u2:
                row[p], row[bj] = row[bj], row[p]
        pivot = a[p][p]
        clean = True
        for i in range(p + 1, rows):
            if a[i][p]:
                q = a[i][p] // pivot
                if q:
                    for j in range(cols):
                        a[i][j] -= q * a[p][j]
                    for j in range(rows):
                        u1[i][j] -= q * u1[p][j]
                if a[i][p]:
                    clean = False
        for j in range(p + 1, cols):
            if a[p][j]:
                q = a[p][j] // pivot
                if q:
                    for i in range(rows):
                        a[i][j] -= q * a[i][p]
                    for i in range(cols):
                        u2[i][j] -= q * u2[i][p]
                if a[p][j]:
                    clean = False
        if not clean:
            continue
        offender = None
        for i in range(p + 1, rows):
            for j in range(p + 1, cols):
                if a[i][j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is None:
            return True
        # Fold the non-divisible row into the pivot row and go again.
        for j in range(cols):
            a[p][j] += a[offender][j]
        for j in range(rows):
            u1[p][j] += u1[offender][j]


def smith_normal_form(m: IntMatrix) -> SNFResult:
    """Diagonalize over Z with witnesses, descending divisibility layout.

    The classical ascending reduction runs first; a fixed permutation
    then reverses the diagonal into the descending convention, which
    costs nothing but a relabeling of the witnesses.
    """
    rows, cols = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u1 = [[int(i == j) for j in range(rows)] for i in range(rows)]
    u2 = [[int(i == j) for j in range(cols)] for i in range(cols)]
    t = min(rows, cols)
    for p in range(t):
        if not _place_pivot(a, u1, u2, rows, cols, p):
            break
        if a[p][p] < 0:
            for j in range(cols):
                a[p][j] = -a[p][j]
            for j in range(rows):
                u1[p][j] = -u1[p][j]
    diag = [a[i][i] for i in range(t)]
    phi = tuple(reversed(diag + [0] * (cols - t)))
    u1[:t] = u1[:t][::-1]
    u2 = [row[::-1] for row in u2]
    return SNFResult(phi=phi, u1=IntMatrix.from_rows(u1, rows), u2=IntMatrix.from_rows(u2, cols))


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    return smith_normal_form(m).phi


def determinant(m: IntMatrix) -> int:
    """Exact determinant (fraction-free Bareiss elimination)."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    return _bareiss_det(m.to_lists())


def _bareiss_det(a) -> int:
    n = len(a)
    if n == 0:
        return 1
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
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def elementary_gcds(m: IntMatrix, max_minors: int = 1_000_000) -> tuple[int, ...]:
    """Minor-gcd sequence delta_0..delta_kappa, independent of any reduction.

    delta_j is the gcd of all (kappa-j)-sized minors; it is 0 below
    max(0, kappa-rho) where no such minor exists, and 1 from kappa up.
    This is the cross-check route for the invariant factors, so it must
    stay free of row operations; the cost guard refuses instances whose
    total minor count exceeds ``max_minors``.
    """
    rows, cols = m.rows, m.cols
    lo = max(0, cols - rows)
    total = 0
    for j in range(lo, cols):
        k = cols - j
        total += math.comb(rows, k) * math.comb(cols, k)
        if total > max_minors:
            raise WorkBoundError(
                f"minor enumeration needs {total}+ determinants (cap {max_minors})")
    delta = [0] * (cols + 1)
    delta[cols] = 1
    for j in range(lo, cols):
        k = cols - j
        g = 0
        for rsel in combinations(range(rows), k):
            picked = [m.entries[r] for r in rsel]
            for csel in combinations(range(cols), k):
                g = math.gcd(g, _bareiss_det([[row[c] for c in csel] for row in picked]))
                if g == 1:
                    break
            if g == 1:
                break
        delta[j] = g
    return tuple(delta)


def cokernel_descriptor(m: IntMatrix) -> GroupDescriptor:
    """Structure of Z^cols modulo the row span of m."""
    phi = invariant_factors(m)
    return GroupDescriptor(
        free_rank=sum(1 for f in phi if f == 0),
        torsion=tuple(f for f in phi if f > 1),
        leading_free_factor=False,
    )


def kernel_count_mod(m: IntMatrix, modulus: int) -> int:
    """Count row vectors x in (Z/modulus)^rows with x @ m == 0.

    Equals the product of gcd(f, modulus) over the invariant factors of
    the transpose (one per row), with gcd(0, m) = m picking up the free
    directions, excess rows included.
    """
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    out = 1
    for f in invariant_factors(m.transpose()):
        out *= math.gcd(f, modulus)
    return out
