import random
from fractions import Fraction

import pytest

from latgate import (
    BadShapeError,
    EnumQuery,
    NotPositiveDefiniteError,
    RankCapExceededError,
    basis_change,
    brute_force_coset,
    catalog_get,
    cholesky,
    enumerate_coset,
    kernel_name,
    negate,
    random_unimodular,
    sufficient_box,
)
from oracle_helpers import e8_ambient_count_norm_le2


def query(fid, shift=None, radius=1):
    gram = catalog_get(fid).gram
    if shift is None:
        shift = (Fraction(0),) * gram.rank
    return EnumQuery(form=gram, shift=shift, radius=Fraction(radius))


def exact_norm(q, u):
    chol = cholesky(q.form)
    return chol.form_value([Fraction(x) + s for x, s in zip(u, q.shift)])


class TestFrozenResults:
    def test_unit_ball_z2(self):
        res = enumerate_coset(query("Zn:2"))
        assert res.vectors == ((-1, 0), (0, -1), (0, 0), (0, 1), (1, 0))
        assert res.norms == (Fraction(1), Fraction(1), Fraction(0), Fraction(1), Fraction(1))
        assert res.exhaustive

    def test_half_shifted_z2(self):
        res = enumerate_coset(
            query("Zn:2", shift=(Fraction(1, 2), Fraction(1, 2)), radius=Fraction(1, 2))
        )
        assert res.vectors == ((-1, -1), (-1, 0), (0, -1), (0, 0))
        assert set(res.norms) == {Fraction(1, 2)}

    def test_e8_root_ball_matches_ambient_count(self):
        res = enumerate_coset(query("E8", radius=2))
        assert len(res.vectors) == 241
        assert len(res.vectors) == e8_ambient_count_norm_le2()
        assert set(res.norms) == {Fraction(0), Fraction(2)}

    def test_radius_zero(self):
        res = enumerate_coset(query("E8", radius=0))
        assert res.vectors == ((0,) * 8,)

    def test_brute_zero_radius_box_one(self):
        res = brute_force_coset(query("E8", radius=0), 1)
        assert res.vectors == ((0,) * 8,)


class TestProperties:
    def test_monotone_in_radius(self):
        small = set(enumerate_coset(query("D4", radius=2)).vectors)
        large = set(enumerate_coset(query("D4", radius=4)).vectors)
        assert small <= large

    def test_symmetry_at_zero_shift(self):
        res = enumerate_coset(query("D5", radius=4))
        have = set(res.vectors)
        assert all(tuple(-x for x in u) in have for u in have)

    def test_every_norm_exact_and_within_radius(self):
        q = query("D4", shift=(Fraction(1, 3),) * 4, radius=Fraction(5, 2))
        res = enumerate_coset(q)
        assert res.vectors
        for u, norm in zip(res.vectors, res.norms):
            assert norm == exact_norm(q, u)
            assert norm <= q.radius

    def test_sorted_and_duplicate_free(self):
        res = enumerate_coset(query("D4", radius=4))
        assert list(res.vectors) == sorted(set(res.vectors))


class TestOracleEquivalence:
    def test_unit_ball_brute_match(self):
        q = query("Zn:2")
        fast = enumerate_coset(q)
        slow = brute_force_coset(q, 2)
        assert fast.vectors == slow.vectors
        assert fast.norms == slow.norms

    def test_randomized_queries_match(self):
        rng = random.Random(97)
        for fid in ("Zn:1", "Zn:3", "D4", "D5"):
            gram = catalog_get(fid).gram
            for _ in range(5):
                conj = basis_change(gram, random_unimodular(gram.rank, rng))
                shift = tuple(
                    Fraction(rng.randint(-3, 3), rng.choice((1, 2, 3)))
                    for _ in range(gram.rank)
                )
                q = EnumQuery(form=conj, shift=shift, radius=Fraction(rng.randint(0, 4)))
                fast = enumerate_coset(q)
                slow = brute_force_coset(q, sufficient_box(q))
                assert fast.vectors == slow.vectors
                assert fast.norms == slow.norms


class TestSufficientBox:
    def test_unit_ball_bound(self):
        assert sufficient_box(query("Zn:2")) >= 1

    def test_shifted_hand_bound(self):
        q = query("Zn:3", shift=(Fraction(1, 2),) * 3, radius=Fraction(3, 4))
        assert sufficient_box(q) >= 1

    @pytest.mark.parametrize(
        "fid,shift,radius",
        [
            ("Zn:3", None, 1),
            ("Zn:3", (Fraction(1, 3),) * 3, 2),
            ("D4", None, 2),
            ("D4", (Fraction(1, 2),) * 4, 3),
            ("D5", (Fraction(1, 2),) * 5, Fraction(7, 2)),
        ],
    )
    def test_containment_exact(self, fid, shift, radius):
        q = query(fid, shift=shift, radius=radius)
        box = sufficient_box(q)
        assert set(brute_force_coset(q, box).vectors) == set(enumerate_coset(q).vectors)

    def test_containment_bound_e8(self):
        # Box scan at sufficient_box(q) is exhaustive over the box, so it
        # contains the enumerate result iff every enumerated vector fits
        # coordinate-wise.  The literal scan is infeasible at rank 8.
        q = query("E8", radius=2)
        box = sufficient_box(q)
        res = enumerate_coset(q)
        assert len(res.vectors) == e8_ambient_count_norm_le2()
        for u in res.vectors:
            assert max(abs(x) for x in u) <= box


class TestWorkersAndStats:
    def test_worker_counts_agree(self):
        q = query("D5", shift=(Fraction(1, 2),) * 5, radius=Fraction(7, 2))
        base = enumerate_coset(q, workers=1, with_stats=True)
        for workers in (2, 3, 4):
            other = enumerate_coset(q, workers=workers, with_stats=True)
            assert other.vectors == base.vectors
            assert other.norms == base.norms
            assert other.stats == base.stats

    def test_stats_toggle(self):
        q = query("Zn:2")
        assert enumerate_coset(q).stats is None
        stats = enumerate_coset(q, with_stats=True).stats
        assert stats is not None and stats.nodes > 0

    def test_kernel_name_reports(self):
        assert kernel_name() in ("cython", "python")


class TestValidationAndCaps:
    def test_shift_length_mismatch(self):
        gram = catalog_get("Zn:2").gram
        with pytest.raises(BadShapeError):
            EnumQuery(form=gram, shift=(Fraction(0),), radius=Fraction(1))

    def test_negative_radius(self):
        gram = catalog_get("Zn:2").gram
        with pytest.raises(BadShapeError):
            EnumQuery(form=gram, shift=(Fraction(0), Fraction(0)), radius=Fraction(-1))

    def test_rank_cap(self):
        with pytest.raises(RankCapExceededError):
            enumerate_coset(query("Zn:5"), rank_cap=4)
        with pytest.raises(RankCapExceededError):
            enumerate_coset(query("Zn:25"))

    def test_non_positive_definite_rejected(self):
        gram = negate(catalog_get("Zn:3").gram)
        q = EnumQuery(form=gram, shift=(Fraction(0),) * 3, radius=Fraction(1))
        with pytest.raises(NotPositiveDefiniteError):
            enumerate_coset(q)
        with pytest.raises(NotPositiveDefiniteError):
            brute_force_coset(q, 1)

    def test_negative_box_rejected(self):
        with pytest.raises(BadShapeError):
            brute_force_coset(query("Zn:2"), -1)
