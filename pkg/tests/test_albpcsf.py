import numpy as np
import pytest

import oracles
from conftest import random_rgb_image
from rocktex.albpcsf import (CHANNEL_PAIRS, FusedDescriptor, albpcsf,
                             cross_channel_lbp, fuse_planes)
from rocktex.image import Channel, ColorImage, ColorSpace
from rocktex.lbp import LbpConfig, LbpVariant, lbp_map


class TestCrossChannelLbp:
    def test_degenerates_to_lbp_map(self, rng):
        plane = rng.integers(0, 256, size=(12, 12)).astype(np.float64)
        assert np.array_equal(cross_channel_lbp(plane, plane), lbp_map(plane))

    def test_constant_planes_all_below_center(self):
        neighbor = np.full((6, 6), 10.0)
        center = np.full((6, 6), 20.0)
        assert np.all(cross_channel_lbp(neighbor, center) == 0)

    def test_matches_cross_oracle(self, rng):
        for _ in range(10):
            neighbor = rng.integers(0, 256, size=(14, 14)).astype(np.float64)
            center = rng.integers(0, 256, size=(14, 14)).astype(np.float64)
            got = cross_channel_lbp(neighbor, center)
            assert np.array_equal(got, oracles.oracle_cross_lbp(neighbor, center))

    def test_matches_cross_oracle_fractional(self, rng):
        neighbor = rng.normal(size=(13, 14)) * 30
        center = rng.normal(size=(13, 14)) * 30
        cfg = LbpConfig(p=10, r=1.7)
        got = cross_channel_lbp(neighbor, center, cfg)
        assert np.array_equal(got, oracles.oracle_cross_lbp(neighbor, center, 10, 1.7))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="differ"):
            cross_channel_lbp(np.zeros((5, 5)), np.zeros((5, 6)))


class TestFusedDescriptor:
    def test_requires_normalized_sub_histograms(self):
        bad = np.ones(4)  # sums to 4
        with pytest.raises(ValueError, match="sum to 1"):
            FusedDescriptor(CHANNEL_PAIRS, (bad, bad, bad))

    def test_vector_is_globally_normalized(self, rng):
        img = random_rgb_image(rng, 16, 16)
        fused = albpcsf(img)
        assert abs(fused.concatenated.sum() - 3.0) < 1e-9
        assert abs(fused.vector.sum() - 1.0) < 1e-9


class TestAlbpcsf:
    def test_basic_vector_length(self, rng):
        assert albpcsf(random_rgb_image(rng, 16, 16)).concatenated.shape == (768,)

    def test_riu2_vector_length(self, rng):
        cfg = LbpConfig(variant=LbpVariant.UNIFORM_ROTATION_INVARIANT)
        assert albpcsf(random_rgb_image(rng, 16, 16), cfg).concatenated.shape == (30,)

    def test_pair_order_is_rgb_against_value(self):
        assert [(n.value, c.value) for n, c in CHANNEL_PAIRS] == \
            [("R", "V"), ("G", "V"), ("B", "V")]

    def test_gray_content_makes_pairs_identical(self, rng):
        level = rng.integers(0, 256, size=(16, 16, 1), dtype=np.uint8)
        img = ColorImage(np.repeat(level, 3, axis=2), ColorSpace.RGB)
        fused = albpcsf(img)
        assert np.array_equal(fused.histograms[0], fused.histograms[1])
        assert np.array_equal(fused.histograms[0], fused.histograms[2])

    def test_sub_histograms_normalized(self, rng):
        fused = albpcsf(random_rgb_image(rng, 20, 20))
        for h in fused.histograms:
            assert abs(h.sum() - 1.0) < 1e-12

    def test_rejects_hsv_input(self, rng):
        px = rng.integers(0, 256, (8, 8, 3), dtype=np.uint8)
        with pytest.raises(ValueError, match="RGB"):
            albpcsf(ColorImage(px, ColorSpace.HSV))

    def test_histograms_ignore_position(self, rng):
        """Shuffling where codes sit changes nothing: histograms only
        count labels."""
        img = random_rgb_image(rng, 16, 16)
        fused = albpcsf(img)
        from rocktex.lbp import histogram
        codes = cross_channel_lbp(
            img.pixels[..., 0].astype(np.float64),
            img.pixels[..., 0].astype(np.float64))
        shuffled = rng.permutation(codes.ravel()).reshape(codes.shape)
        assert np.array_equal(histogram(codes, 256), histogram(shuffled, 256))
        assert abs(fused.vector.sum() - 1.0) < 1e-9

    def test_affine_plane_invariance(self, rng):
        """One positive-slope affine map applied to all fused planes leaves
        the descriptor unchanged (exact for dyadic coefficients)."""
        planes = {ch: rng.integers(0, 256, size=(14, 14)).astype(np.float64)
                  for ch in (Channel.R, Channel.G, Channel.B, Channel.V)}
        base = fuse_planes(planes)
        for a, b in [(2.0, 5.0), (0.5, -3.0), (1.5, 0.25)]:
            moved = {ch: a * p + b for ch, p in planes.items()}
            assert np.array_equal(fuse_planes(moved).vector, base.vector)

    def test_missing_plane_error(self):
        with pytest.raises(ValueError, match="missing plane"):
            fuse_planes({Channel.R: np.zeros((8, 8))})
