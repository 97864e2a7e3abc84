"""Pure-Python search kernels.

Interchangeable with the compiled module `latgate._speedups`; both must
return identical output for identical input, and the parity tests hold them
to that.  The enumeration runs on a rescaled integer problem prepared by
`latgate.enumeration`:

    w_j = D*u_j + T_j                 (scaled coordinate, integer)
    S_i = D*w_i + sum_{j>i} M[i][j]*w_j
    accept u  iff  sum_i W[i]*S_i**2 <= C

All interval endpoints come from `math.isqrt` and integer floor division,
so every accept/reject decision is exact.  No floats anywhere.
"""

from __future__ import annotations

from itertools import product
from math import isqrt

__all__ = ["dfs_enumerate", "brute_scan"]


def dfs_enumerate(n, W, M, T, D, C, shrink=False, top_lo=None, top_hi=None, small=False):
    """Depth-first search over levels n-1 .. 0, ascending coordinate order.

    Returns (results, nodes, prunes) where results is a list of
    (coordinates, scaled_norm) pairs in visit order.  With shrink=True the
    acceptance bound drops to each new best norm (callers filter to the
    final minimum).  top_lo/top_hi clamp the level n-1 interval so the range
    can be split across workers.  `small` is a no-op here; the compiled
    kernel uses it to pick a machine-word fast path.
    """
    results: list[tuple[tuple[int, ...], int]] = []
    nodes = 0
    prunes = 0
    if C < 0:
        return results, nodes, prunes
    D2 = D * D
    bound = C
    e = [0] * n
    hi_arr = [0] * n
    cur = [0] * n
    acc = [0] * n
    w = [0] * n
    u = [0] * n

    i = n - 1
    # enter level n-1
    ei = D * T[i]
    e[i] = ei
    acc[i] = 0
    s = isqrt(bound // W[i])
    lo = -((s + ei) // D2)
    hi = (s - ei) // D2
    if top_lo is not None and lo < top_lo:
        lo = top_lo
    if top_hi is not None and hi > top_hi:
        hi = top_hi
    if lo > hi:
        prunes += 1
    cur[i] = lo
    hi_arr[i] = hi

    while True:
        if cur[i] > hi_arr[i]:
            i += 1
            if i == n:
                break
            cur[i] += 1
            continue
        ui = cur[i]
        S = D2 * ui + e[i]
        tot = acc[i] + W[i] * S * S
        if tot > bound:  # stale interval after a shrink
            cur[i] += 1
            continue
        nodes += 1
        u[i] = ui
        w[i] = D * ui + T[i]
        if i == 0:
            results.append((tuple(u), tot))
            if shrink and tot < bound:
                bound = tot
            cur[i] += 1
        else:
            i -= 1
            ei = D * T[i]
            Mi = M[i]
            for j in range(i + 1, n):
                ei += Mi[j] * w[j]
            e[i] = ei
            acc[i] = tot
            b = bound - tot
            q = b // W[i]
            if q < 0:
                cur[i] = 0
                hi_arr[i] = -1
                prunes += 1
                continue
            s = isqrt(q)
            lo = -((s + ei) // D2)
            hi = (s - ei) // D2
            if lo > hi:
                prunes += 1
            cur[i] = lo
            hi_arr[i] = hi
    return results, nodes, prunes


def brute_scan(n, gram, T, D, C2, box, small=False):
    """Exhaustive box scan evaluating the Gram form directly.

    Independent of the Cholesky route on purpose: accepts u with
    v^T gram v <= C2 where v = D*u + T.  Returns (coordinates, scaled_norm)
    pairs; the scan order is the lexicographic product order.
    """
    out: list[tuple[tuple[int, ...], int]] = []
    rng = range(-box, box + 1)
    for u in product(rng, repeat=n):
        v = [D * u[i] + T[i] for i in range(n)]
        tot = 0
        for i in range(n):
            gi = gram[i]
            row = 0
            for j in range(n):
                row += gi[j] * v[j]
            tot += v[i] * row
        if tot <= C2:
            out.append((u, tot))
    return out
