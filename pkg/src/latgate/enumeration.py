"""Bounded-norm enumeration of shifted lattice points.

Finds every integer vector u with Q(u + t) <= R for a positive definite
form Q, exact rational shift t and radius R.  The recursion is the classic
completed-squares interval search, but run on a rescaled all-integer
problem so that both kernels (compiled and pure) decide membership with
integer square roots only.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Sequence

from .core import Definiteness, GramMatrix, RationalCholesky, cholesky, definiteness
from .errors import BadShapeError, NotPositiveDefiniteError, RankCapExceededError

if os.environ.get("LATGATE_PURE"):
    from . import _pykernel as _kernel

    _KERNEL_NAME = "python"
else:
    try:
        from . import _speedups as _kernel  # type: ignore[no-redef]

        _KERNEL_NAME = "cython"
    except ImportError:
        from . import _pykernel as _kernel  # type: ignore[no-redef]

        _KERNEL_NAME = "python"

__all__ = [
    "DEFAULT_RANK_CAP",
    "EnumQuery",
    "EnumStats",
    "EnumResult",
    "kernel_name",
    "enumerate_coset",
    "brute_force_coset",
    "sufficient_box",
]

DEFAULT_RANK_CAP = 24

# the machine-word fast path must prove all intermediates fit well under 2^63
_SMALL_LIMIT = 1 << 61


def kernel_name() -> str:
    """Which kernel import won: 'cython' or 'python'."""
    return _KERNEL_NAME


@dataclass(frozen=True)
class EnumQuery:
    """A coset ball: all u in Z^n with (u+shift)^T form (u+shift) <= radius."""

    form: GramMatrix
    shift: tuple[Fraction, ...]
    radius: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "shift", tuple(Fraction(s) for s in self.shift))
        object.__setattr__(self, "radius", Fraction(self.radius))
        if len(self.shift) != self.form.rank:
            raise BadShapeError(
                f"shift has length {len(self.shift)}, expected {self.form.rank}"
            )
        if self.radius < 0:
            raise BadShapeError("radius must be nonnegative")


@dataclass(frozen=True)
class EnumStats:
    nodes: int
    prunes: int


@dataclass(frozen=True)
class EnumResult:
    """Lexicographically sorted vectors with exact norms Q(u + shift)."""

    vectors: tuple[tuple[int, ...], ...]
    norms: tuple[Fraction, ...]
    exhaustive: bool = True
    stats: EnumStats | None = None


def _scaled_problem(chol: RationalCholesky, shift: Sequence[Fraction], radius: Fraction):
    """Clear denominators: returns (W, M, T, D, C, scale) with scale = L*D^4.

    Exact norms are recovered as Fraction(scaled_norm, scale).
    """
    n = len(chol.diag)
    dens = [f.denominator for f in shift]
    for i in range(n):
        for j in range(i + 1, n):
            dens.append(chol.upper[i][j].denominator)
    D = lcm(*dens) if dens else 1
    L = lcm(*[d.denominator for d in chol.diag])
    W = [d.numerator * (L // d.denominator) for d in chol.diag]
    T = [s.numerator * (D // s.denominator) for s in shift]
    M = [
        [
            chol.upper[i][j].numerator * (D // chol.upper[i][j].denominator)
            if j > i
            else 0
            for j in range(n)
        ]
        for i in range(n)
    ]
    scale = L * D**4
    scaled = radius * scale
    C = scaled.numerator // scaled.denominator
    return W, M, T, D, C, scale


def _ceil_sqrt_bound(r: Fraction) -> Fraction:
    """A rational s with s >= sqrt(r), tight to within 1/denominator."""
    a, b = r.numerator, r.denominator
    s = isqrt(a * b)
    if s * s < a * b:
        s += 1
    return Fraction(s, b)


def _coordinate_bound(chol: RationalCholesky, shift: Sequence[Fraction], radius: Fraction) -> int:
    """Integer B with |u_i| <= B for every coordinate the search can visit.

    Every visited candidate satisfies the per-level constraint
    d_i * (y_i + sum_{j>i} mu_ij y_j)^2 <= R with y = u + shift, so writing
    the unit triangular change of variables back gives
    |y_i| <= sum_j |inv[i][j]| * sqrt(R/d_j).
    """
    n = len(chol.diag)
    mu = chol.upper
    inv = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        inv[i][i] = Fraction(1)
        for j in range(i + 1, n):
            s = Fraction(0)
            for k in range(i + 1, j + 1):
                if mu[i][k]:
                    s += mu[i][k] * inv[k][j]
            inv[i][j] = -s
    sq = [_ceil_sqrt_bound(radius / d) for d in chol.diag]
    worst = Fraction(0)
    for i in range(n):
        b = abs(Fraction(shift[i]))
        for j in range(i, n):
            if inv[i][j]:
                b += abs(inv[i][j]) * sq[j]
        if b > worst:
            worst = b
    bound = -((-worst.numerator) // worst.denominator)
    return max(int(bound), 1)


def _dfs_is_small(n, W, M, T, D, C, box: int) -> bool:
    """Prove every intermediate of the DFS fits in a machine word."""
    if C < 0:
        return True
    t_abs = max((abs(t) for t in T), default=0)
    w_abs = D * box + t_abs
    m_sum = max((sum(abs(x) for x in row) for row in M), default=0)
    e_abs = D * t_abs + m_sum * w_abs
    w_min = min(W)
    w_max = max(W)
    s_abs = isqrt(C // w_min)
    checks = (
        C,
        D * D,
        D * D * (box + 1) + e_abs,
        s_abs + e_abs,
        C + w_max * s_abs * s_abs,
        w_abs,
    )
    return all(x < _SMALL_LIMIT for x in checks)


def _search(query: EnumQuery, *, shrink: bool = False, workers: int = 1,
            rank_cap: int = DEFAULT_RANK_CAP):
    """Run the kernel; returns (sorted (coords, scaled_norm) pairs, scale, stats)."""
    n = query.form.rank
    if n > rank_cap:
        raise RankCapExceededError(f"rank {n} exceeds the cap of {rank_cap}")
    chol = cholesky(query.form)
    W, M, T, D, C, scale = _scaled_problem(chol, query.shift, query.radius)
    box = _coordinate_bound(chol, query.shift, query.radius)
    small = _dfs_is_small(n, W, M, T, D, C, box)

    if workers <= 1 or C < 0:
        pairs, nodes, prunes = _kernel.dfs_enumerate(
            n, W, M, T, D, C, shrink, None, None, small
        )
    else:
        # split the top-level interval into contiguous chunks; the union of
        # chunk results equals the single-worker result set
        top = n - 1
        e_top = D * T[top]
        s = isqrt(C // W[top])
        d2 = D * D
        lo = -((s + e_top) // d2)
        hi = (s - e_top) // d2
        if lo > hi:
            pairs, nodes, prunes = [], 0, 1
        else:
            total = hi - lo + 1
            count = min(workers, total)
            base, rem = divmod(total, count)
            chunks = []
            start = lo
            for c in range(count):
                size = base + (1 if c < rem else 0)
                chunks.append((start, start + size - 1))
                start += size
            with ThreadPoolExecutor(max_workers=count) as pool:
                outs = list(
                    pool.map(
                        lambda span: _kernel.dfs_enumerate(
                            n, W, M, T, D, C, shrink, span[0], span[1], small
                        ),
                        chunks,
                    )
                )
            pairs = [p for out in outs for p in out[0]]
            nodes = sum(out[1] for out in outs)
            prunes = sum(out[2] for out in outs)
    pairs.sort()
    return pairs, scale, EnumStats(nodes=nodes, prunes=prunes)


def enumerate_coset(query: EnumQuery, *, workers: int = 1, with_stats: bool = False,
                    rank_cap: int = DEFAULT_RANK_CAP) -> EnumResult:
    """All u with Q(u + shift) <= radius, sorted lexicographically.

    Deterministic for any worker count.  Raises on non-positive-definite
    forms and on rank above `rank_cap`.
    """
    pairs, scale, stats = _search(query, shrink=False, workers=workers, rank_cap=rank_cap)
    return EnumResult(
        vectors=tuple(p[0] for p in pairs),
        norms=tuple(Fraction(p[1], scale) for p in pairs),
        exhaustive=True,
        stats=stats if with_stats else None,
    )


def brute_force_coset(query: EnumQuery, box: int) -> EnumResult:
    """Oracle twin of `enumerate_coset`: scan the cube |u_i| <= box.

    Evaluates the Gram form directly (no Cholesky anywhere on this path) so
    the two routes stay independent.  Complete whenever box >=
    `sufficient_box(query)`.
    """
    if box < 0:
        raise BadShapeError("box must be nonnegative")
    if definiteness(query.form) is not Definiteness.POSITIVE_DEFINITE:
        raise NotPositiveDefiniteError("brute-force scan requires a positive definite form")
    n = query.form.rank
    D = lcm(*[s.denominator for s in query.shift])
    T = [s.numerator * (D // s.denominator) for s in query.shift]
    scaled = query.radius * D * D
    C2 = scaled.numerator // scaled.denominator
    g_max = max(max(abs(x) for x in row) for row in query.form.entries)
    t_abs = max((abs(t) for t in T), default=0)
    v_abs = D * box + t_abs
    small = n * n * g_max * v_abs * v_abs < _SMALL_LIMIT and C2 < _SMALL_LIMIT
    pairs = _kernel.brute_scan(n, [list(r) for r in query.form.entries], T, D, C2, box, small)
    pairs.sort()
    return EnumResult(
        vectors=tuple(p[0] for p in pairs),
        norms=tuple(Fraction(p[1], D * D) for p in pairs),
        exhaustive=True,
        stats=None,
    )


def sufficient_box(query: EnumQuery) -> int:
    """A box size that provably contains every vector of the coset ball."""
    chol = cholesky(query.form)
    return _coordinate_bound(chol, query.shift, query.radius)
