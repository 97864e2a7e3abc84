import random
from fractions import Fraction

import pytest

from latgate import EnumQuery, basis_change, catalog_get, cholesky, random_unimodular
from latgate import _pykernel
from latgate.enumeration import _coordinate_bound, _dfs_is_small, _scaled_problem

_speedups = pytest.importorskip("latgate._speedups")


def problems():
    rng = random.Random(97)
    out = [
        ("E8", catalog_get("E8").gram, None, Fraction(2)),
        ("Zn:3 char", catalog_get("Zn:3").gram, (Fraction(1, 2),) * 3, Fraction(3, 4)),
        ("D5 shifted", catalog_get("D5").gram, (Fraction(1, 2),) * 5, Fraction(7, 2)),
        ("Zn:4 twisted", basis_change(catalog_get("Zn:4").gram, random_unimodular(4, rng)),
         (Fraction(1, 3),) * 4, Fraction(2)),
    ]
    prepared = []
    for name, gram, shift, radius in out:
        if shift is None:
            shift = (Fraction(0),) * gram.rank
        chol = cholesky(gram)
        W, M, T, D, C, _ = _scaled_problem(chol, shift, radius)
        box = _coordinate_bound(chol, shift, radius)
        prepared.append((name, gram, W, M, T, D, C, box))
    return prepared


PROBLEMS = problems()
IDS = [p[0] for p in PROBLEMS]


@pytest.mark.parametrize("name,gram,W,M,T,D,C,box", PROBLEMS, ids=IDS)
@pytest.mark.parametrize("shrink", [False, True])
def test_dfs_object_path(name, gram, W, M, T, D, C, box, shrink):
    n = gram.rank
    py = _pykernel.dfs_enumerate(n, W, M, T, D, C, shrink=shrink, small=False)
    cy = _speedups.dfs_enumerate(n, W, M, T, D, C, shrink=shrink, small=False)
    assert py == cy


@pytest.mark.parametrize("name,gram,W,M,T,D,C,box", PROBLEMS, ids=IDS)
def test_dfs_small_path(name, gram, W, M, T, D, C, box):
    n = gram.rank
    if not _dfs_is_small(n, W, M, T, D, C, box):
        pytest.skip("int64 bound not proven for this problem")
    plain = _speedups.dfs_enumerate(n, W, M, T, D, C, small=False)
    fast = _speedups.dfs_enumerate(n, W, M, T, D, C, small=True)
    assert fast == plain
    assert _pykernel.dfs_enumerate(n, W, M, T, D, C, small=True) == plain


@pytest.mark.parametrize("name,gram,W,M,T,D,C,box", PROBLEMS, ids=IDS)
def test_dfs_split_intervals(name, gram, W, M, T, D, C, box):
    # worker split: clamped top-level runs must union to the full run
    n = gram.rank
    full = _pykernel.dfs_enumerate(n, W, M, T, D, C)
    for kernel in (_pykernel, _speedups):
        left = kernel.dfs_enumerate(n, W, M, T, D, C, top_lo=None, top_hi=-1)
        right = kernel.dfs_enumerate(n, W, M, T, D, C, top_lo=0, top_hi=None)
        assert sorted(left[0] + right[0]) == sorted(full[0])
        assert left[1] + right[1] == full[1]


@pytest.mark.parametrize("name,gram,W,M,T,D,C,box", PROBLEMS, ids=IDS)
def test_brute_scan_parity(name, gram, W, M, T, D, C, box):
    n = gram.rank
    if (2 * box + 1) ** n > 300000:
        pytest.skip("box too large for the scan half of the parity check")
    # parity only needs identical inputs on both sides
    py = _pykernel.brute_scan(n, [list(r) for r in gram.entries], T, D, C, box)
    cy = _speedups.brute_scan(n, [list(r) for r in gram.entries], T, D, C, box)
    assert py == cy
