"""Exact arithmetic on integral symmetric bilinear forms.

Everything runs over arbitrary-precision integers and `Fraction`; no code
path here (or anywhere downstream) touches floating point.  Gram matrices
are immutable values and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    BadShapeError,
    DegenerateFormError,
    NotPositiveDefiniteError,
    NotSymmetricError,
    NotUnimodularTransformError,
)

__all__ = [
    "IntVector",
    "IntMatrix",
    "Definiteness",
    "Parity",
    "GramMatrix",
    "RationalCholesky",
    "validate",
    "determinant",
    "is_unimodular",
    "inertia",
    "definiteness",
    "signature",
    "parity",
    "direct_sum",
    "negate",
    "basis_change",
    "cholesky",
    "evaluate",
    "pairing",
]

IntVector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


class Definiteness(Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    NEGATIVE_DEFINITE = "NegativeDefinite"
    INDEFINITE = "Indefinite"
    DEGENERATE = "Degenerate"


class Parity(Enum):
    EVEN = "Even"
    ODD = "Odd"


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric integer matrix of inner products of a lattice basis.

    Construct through `from_rows`, which validates; the raw constructor is
    for internal call sites that already hold validated tuples.
    """

    entries: IntMatrix

    @staticmethod
    def from_rows(rows: Iterable[Sequence[int]]) -> "GramMatrix":
        g = GramMatrix(tuple(tuple(row) for row in rows))
        validate(g)
        return g

    @property
    def rank(self) -> int:
        return len(self.entries)

    def diagonal(self) -> IntVector:
        return tuple(self.entries[i][i] for i in range(self.rank))

    def to_rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class RationalCholesky:
    """Completed-squares data for a positive definite form.

    Q(y) = sum_i diag[i] * (y_i + sum_{j>i} upper[i][j] * y_j)^2, with every
    diag[i] > 0.  `upper` is a full square of Fractions, zero on and below
    the diagonal.
    """

    diag: tuple[Fraction, ...]
    upper: tuple[tuple[Fraction, ...], ...]

    def form_value(self, y: Sequence[Fraction]) -> Fraction:
        """Evaluate Q at a rational point, straight from the decomposition."""
        n = len(self.diag)
        total = Fraction(0)
        for i in range(n):
            inner = Fraction(y[i])
            for j in range(i + 1, n):
                inner += self.upper[i][j] * Fraction(y[j])
            total += self.diag[i] * inner * inner
        return total


def validate(g: GramMatrix) -> None:
    """Raise unless g is a square symmetric matrix of Python ints, rank >= 1."""
    rows = g.entries
    n = len(rows)
    if n < 1:
        raise BadShapeError("rank must be at least 1")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise BadShapeError(f"row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int):
                raise BadShapeError(f"entry ({i},{j}) is not an integer: {x!r}")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetricError(
                    f"entries ({i},{j})={rows[i][j]} and ({j},{i})={rows[j][i]} differ"
                )


def _det_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant; every division below is exact."""
    n = len(rows)
    m = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def determinant(g: GramMatrix) -> int:
    return _det_bareiss(g.entries)


def is_unimodular(g: GramMatrix) -> bool:
    return determinant(g) in (1, -1)


def _principal_minors(g: GramMatrix) -> list[int] | None:
    """Leading principal minors d_1..d_n, or None if an interior one vanishes.

    No row swaps: swapping would break the principal-minor correspondence,
    so a zero pivot before the last step makes the chain inconclusive.
    """
    n = g.rank
    m = [list(row) for row in g.entries]
    minors: list[int] = []
    prev = 1
    for k in range(n):
        d = m[k][k]
        minors.append(d)
        if k == n - 1:
            break
        if d == 0:
            return None
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * d - m[i][k] * m[k][j]) // prev
        prev = d
    return minors


def _inertia_by_diagonalization(g: GramMatrix) -> tuple[int, int, int]:
    """Exact congruence diagonalization over Q; handles zero pivots."""
    n = g.rank
    a = [[Fraction(x) for x in row] for row in g.entries]
    pos = neg = zero = 0
    for i in range(n):
        if a[i][i] == 0:
            swap = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                a[i], a[swap] = a[swap], a[i]
                for row in a:
                    row[i], row[swap] = row[swap], row[i]
            else:
                mate = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if mate is None:
                    zero += 1
                    continue
                # fold row/col `mate` into i: the new pivot is 2*a[i][mate] != 0
                for k in range(n):
                    a[i][k] += a[mate][k]
                for k in range(n):
                    a[k][i] += a[k][mate]
        d = a[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            f = a[j][i] / d
            if f:
                for k in range(n):
                    a[j][k] -= f * a[i][k]
                for k in range(n):
                    a[k][j] -= f * a[k][i]
    return pos, neg, zero


def inertia(g: GramMatrix) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts, computed exactly.

    Uses the leading-principal-minor sign rule when the whole chain is
    nonzero, otherwise falls back to congruence diagonalization.
    """
    minors = _principal_minors(g)
    if minors is not None and all(d != 0 for d in minors):
        neg = 0
        prev = 1
        for d in minors:
            if (prev > 0) != (d > 0):
                neg += 1
            prev = d
        return g.rank - neg, neg, 0
    return _inertia_by_diagonalization(g)


def definiteness(g: GramMatrix) -> Definiteness:
    pos, neg, zero = inertia(g)
    if zero > 0:
        return Definiteness.DEGENERATE
    if neg == 0:
        return Definiteness.POSITIVE_DEFINITE
    if pos == 0:
        return Definiteness.NEGATIVE_DEFINITE
    return Definiteness.INDEFINITE


def signature(g: GramMatrix) -> int:
    pos, neg, zero = inertia(g)
    if zero > 0:
        raise DegenerateFormError("signature undefined: the form has a radical")
    return pos - neg


def parity(g: GramMatrix) -> Parity:
    """Even when every vector has even self-pairing, i.e. the diagonal is even."""
    if all(d % 2 == 0 for d in g.diagonal()):
        return Parity.EVEN
    return Parity.ODD


def direct_sum(a: GramMatrix, b: GramMatrix) -> GramMatrix:
    na, nb = a.rank, b.rank
    rows = []
    for i in range(na):
        rows.append(tuple(a.entries[i]) + (0,) * nb)
    for i in range(nb):
        rows.append((0,) * na + tuple(b.entries[i]))
    return GramMatrix(tuple(rows))


def negate(g: GramMatrix) -> GramMatrix:
    return GramMatrix(tuple(tuple(-x for x in row) for row in g.entries))


def basis_change(g: GramMatrix, u: Sequence[Sequence[int]]) -> GramMatrix:
    """Return u^T g u for a determinant +-1 integer matrix u."""
    n = g.rank
    urows = [list(row) for row in u]
    if len(urows) != n or any(len(row) != n for row in urows):
        raise BadShapeError(f"transform must be {n}x{n}")
    for row in urows:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise BadShapeError(f"transform entry is not an integer: {x!r}")
    d = _det_bareiss(urows)
    if d not in (1, -1):
        raise NotUnimodularTransformError(f"transform determinant is {d}, need +-1")
    # t = g @ u, then result = u^T @ t
    t = [[sum(g.entries[i][k] * urows[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    out = tuple(
        tuple(sum(urows[k][i] * t[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return GramMatrix(out)


def cholesky(g: GramMatrix) -> RationalCholesky:
    """Exact completed-squares decomposition of a positive definite form."""
    n = g.rank
    q = [[Fraction(x) for x in row] for row in g.entries]
    diag: list[Fraction] = []
    upper = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d = q[i][i]
        if d <= 0:
            raise NotPositiveDefiniteError(f"pivot {i} is {d}, form is not positive definite")
        diag.append(d)
        for j in range(i + 1, n):
            upper[i][j] = q[i][j] / d
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[i][k] * q[i][l] / d
    return RationalCholesky(tuple(diag), tuple(tuple(row) for row in upper))


def evaluate(g: GramMatrix, x: Sequence[int]) -> int:
    """x^T g x over the integers."""
    n = g.rank
    if len(x) != n:
        raise BadShapeError(f"vector has length {len(x)}, expected {n}")
    total = 0
    for i in range(n):
        row = g.entries[i]
        total += x[i] * sum(row[j] * x[j] for j in range(n))
    return total


def pairing(g: GramMatrix, x: Sequence[int], y: Sequence[int]) -> int:
    """x^T g y over the integers."""
    n = g.rank
    if len(x) != n or len(y) != n:
        raise BadShapeError("vector length does not match the form's rank")
    total = 0
    for i in range(n):
        row = g.entries[i]
        total += x[i] * sum(row[j] * y[j] for j in range(n))
    return total
