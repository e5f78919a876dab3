import numpy as np
import pytest

from rocktex.similarity import (Metric, SimilarityScore, chi_square, distance,
                                hist_intersection, score)


def _normalized(rng, n=16):
    h = rng.random(n)
    return h / h.sum()


class TestHistIntersection:
    def test_identical_is_zero(self, rng):
        h = _normalized(rng)
        assert hist_intersection(h, h) == 0.0

    def test_disjoint_is_one(self):
        assert hist_intersection([1.0, 0.0], [0.0, 1.0]) == 1.0

    def test_worked_two_bin_example(self):
        value = hist_intersection([0.5, 0.5], [0.25, 0.75])
        assert value == 0.25

    def test_symmetric(self, rng):
        h1, h2 = _normalized(rng), _normalized(rng)
        assert hist_intersection(h1, h2) == hist_intersection(h2, h1)

    def test_bounds(self, rng):
        for _ in range(50):
            value = hist_intersection(_normalized(rng), _normalized(rng))
            assert 0.0 <= value <= 1.0

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError, match="not normalized"):
            hist_intersection([0.5, 0.75], [0.5, 0.5])

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError, match="lengths differ"):
            hist_intersection([1.0], [0.5, 0.5])


class TestChiSquare:
    def test_identical_is_zero(self, rng):
        h = _normalized(rng)
        assert chi_square(h, h) == 0.0

    def test_worked_two_bin_example(self):
        value = chi_square([0.5, 0.5], [0.25, 0.75])
        # 0.0625/0.75 + 0.0625/1.25 = 1/12 + 1/20 = 2/15
        assert value == pytest.approx(2.0 / 15.0, abs=1e-15)

    def test_symmetric(self, rng):
        h1, h2 = _normalized(rng), _normalized(rng)
        assert chi_square(h1, h2) == chi_square(h2, h1)

    def test_zero_bins_contribute_nothing(self):
        value = chi_square([0.5, 0.5, 0.0], [0.25, 0.75, 0.0])
        assert np.isfinite(value)
        assert value == pytest.approx(2.0 / 15.0, abs=1e-15)

    def test_nonnegative_and_zero_iff_equal(self, rng):
        h1, h2 = _normalized(rng), _normalized(rng)
        assert chi_square(h1, h2) > 0.0
        assert chi_square(h1, h1) == 0.0

    def test_rejects_negative_entries(self):
        with pytest.raises(ValueError, match="nonnegative"):
            chi_square([0.5, -0.5], [0.25, 0.75])

    def test_accepts_unnormalized_counts(self):
        # chi-square is defined on raw nonnegative histograms too
        assert chi_square([4.0, 0.0], [0.0, 4.0]) == 8.0


class TestDispatch:
    def test_distance_by_tag(self):
        h1, h2 = [0.5, 0.5], [0.25, 0.75]
        assert distance(Metric.HI, h1, h2) == 0.25
        assert distance(Metric.CHI2, h1, h2) == pytest.approx(2.0 / 15.0)

    def test_score_wraps_value(self):
        result = score(Metric.HI, [0.5, 0.5], [0.25, 0.75])
        assert result == SimilarityScore(Metric.HI, 0.25)
