import numpy as np
import pytest

import oracles
from rocktex.lbp import (LbpConfig, LbpVariant, histogram, lbp_code, lbp_map,
                         neighbor_offsets, ri_code, riu2_code)


class TestLbpCode:
    def test_all_ties_set_every_bit(self):
        assert lbp_code(5, [5] * 8) == 255

    def test_all_below_center(self):
        assert lbp_code(9, [1, 2, 3, 4, 5, 6, 7, 8]) == 0

    def test_mixed_against_bitwise_oracle(self, rng):
        for _ in range(100):
            center = rng.uniform(0, 10)
            neighbors = rng.uniform(0, 10, size=8)
            expected = sum(2 ** i for i, n in enumerate(neighbors) if n - center >= 0)
            assert lbp_code(center, neighbors) == expected


class TestNeighborOffsets:
    def test_unit_ring_is_the_3x3_square(self):
        dy, dx = neighbor_offsets(8, 1.0)
        ring = list(zip(dy.tolist(), dx.tolist()))
        assert ring == [(-1, -1), (-1, 0), (-1, 1), (0, 1),
                        (1, 1), (1, 0), (1, -1), (0, -1)]

    def test_circular_ring_radius(self):
        dy, dx = neighbor_offsets(12, 2.5)
        assert np.allclose(np.hypot(dy, dx), 2.5)

    def test_axis_offsets_snap_to_integers(self):
        dy, dx = neighbor_offsets(8, 2.0)
        # the up/down/left/right samples of an R=2 ring are exact lattice points
        assert dx[1] == 0.0 and dy[1] == -2.0
        assert dx[3] == 2.0 and dy[3] == 0.0


class TestLbpMap:
    def test_constant_plane_all_255(self):
        assert np.all(lbp_map(np.full((6, 7), 3.0)) == 255)

    def test_single_interior_pixel(self):
        plane = np.arange(9, dtype=np.float64).reshape(3, 3)
        codes = lbp_map(plane)
        assert codes.shape == (1, 1)
        assert codes[0, 0] == lbp_code(4, [0, 1, 2, 5, 8, 7, 6, 3])

    def test_too_small_plane(self):
        with pytest.raises(ValueError, match="too small"):
            lbp_map(np.zeros((3, 3)), LbpConfig(r=2.0))

    def test_matches_oracle_on_random_planes(self, rng):
        for _ in range(20):
            plane = rng.integers(0, 256, size=(16, 16)).astype(np.float64)
            assert np.array_equal(lbp_map(plane), oracles.oracle_lbp(plane))

    def test_matches_oracle_fractional_ring(self, rng):
        for p, r in [(8, 2.0), (12, 1.5), (16, 2.0)]:
            plane = rng.normal(size=(14, 15)) * 50
            got = lbp_map(plane, LbpConfig(p=p, r=r))
            assert np.array_equal(got, oracles.oracle_lbp(plane, p, r))

    def test_gray_scale_invariance(self, rng):
        """Positive-slope affine intensity changes leave codes untouched
        (dyadic factors keep the arithmetic exact)."""
        plane = rng.integers(0, 256, size=(12, 12)).astype(np.float64)
        base = lbp_map(plane)
        for a, b in [(2.0, 0.0), (1.5, 0.25), (4.0, -100.0), (0.5, 7.0)]:
            assert np.array_equal(lbp_map(a * plane + b), base)

    def test_output_shape_and_margin(self, rng):
        plane = rng.normal(size=(20, 30))
        assert lbp_map(plane, LbpConfig(r=2.0)).shape == (16, 26)
        assert lbp_map(plane, LbpConfig(r=1.5)).shape == (16, 26)


class TestConfigValidation:
    def test_bad_p(self):
        with pytest.raises(ValueError, match="neighbor count"):
            LbpConfig(p=3)

    def test_bad_r(self):
        with pytest.raises(ValueError, match="radius"):
            LbpConfig(r=0.5)

    def test_n_bins_by_variant(self):
        assert LbpConfig().n_bins == 256
        assert LbpConfig(variant=LbpVariant.ROTATION_INVARIANT).n_bins == 256
        assert LbpConfig(variant=LbpVariant.UNIFORM_ROTATION_INVARIANT).n_bins == 10
        assert LbpConfig(p=12, variant=LbpVariant.UNIFORM_ROTATION_INVARIANT).n_bins == 14


class TestRiCode:
    def test_single_bit_rotates_to_lsb(self):
        assert ri_code(0b00000001, 8) == 1
        assert ri_code(0b10000000, 8) == 1

    def test_orbit_count_for_p8(self):
        labels = {ri_code(c, 8) for c in range(256)}
        assert len(labels) == 36

    def test_invariant_under_rotation(self, rng):
        for _ in range(100):
            c = int(rng.integers(0, 256))
            k = int(rng.integers(0, 8))
            rotated = ((c >> k) | (c << (8 - k))) & 0xFF
            assert ri_code(rotated, 8) == ri_code(c, 8)


class TestRiu2Code:
    def test_uniform_extremes(self):
        assert riu2_code(0b00000000, 8) == 0
        assert riu2_code(0b11111111, 8) == 8

    def test_alternating_is_nonuniform(self):
        assert riu2_code(0b01010101, 8) == 9

    def test_label_set_is_dense(self):
        labels = {riu2_code(c, 8) for c in range(256)}
        assert labels == set(range(10))

    def test_against_transition_count_oracle(self, rng):
        for _ in range(100):
            c = int(rng.integers(0, 256))
            bits = [(c >> i) & 1 for i in range(8)]
            transitions = sum(bits[i] != bits[(i + 1) % 8] for i in range(8))
            if transitions <= 2:
                assert riu2_code(c, 8) == sum(bits)
            else:
                assert riu2_code(c, 8) == 9


class TestVariantMaps:
    def test_ri_map_values_are_canonical(self, rng):
        plane = rng.normal(size=(10, 10))
        basic = lbp_map(plane)
        ri = lbp_map(plane, LbpConfig(variant=LbpVariant.ROTATION_INVARIANT))
        assert np.array_equal(ri, np.vectorize(lambda c: ri_code(int(c), 8))(basic))

    def test_riu2_map_range(self, rng):
        plane = rng.normal(size=(10, 10))
        labels = lbp_map(plane, LbpConfig(variant=LbpVariant.UNIFORM_ROTATION_INVARIANT))
        assert labels.min() >= 0 and labels.max() <= 9


class TestHistogram:
    def test_one_hot_at_255(self):
        codes = np.full((5, 5), 255)
        h = histogram(codes, 256)
        assert h[255] == 1.0 and h.sum() == 1.0

    def test_normalized_sums_to_one(self, rng):
        codes = rng.integers(0, 256, size=(9, 9))
        assert abs(histogram(codes, 256).sum() - 1.0) < 1e-12

    def test_unnormalized_sums_to_count(self, rng):
        codes = rng.integers(0, 10, size=(7, 6))
        assert histogram(codes, 10, normalize=False).sum() == 42

    def test_matches_tally_oracle(self, rng):
        codes = rng.integers(0, 16, size=(8, 8))
        h = histogram(codes, 16, normalize=False)
        for value in range(16):
            assert h[value] == int((codes == value).sum())

    def test_code_out_of_range(self):
        with pytest.raises(ValueError, match="outside"):
            histogram(np.array([[3, 10]]), 10)

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            histogram(np.zeros((0, 4), dtype=int), 10)
