import numpy as np
import pytest

import oracles
from rocktex.dct import dct2, idct2, lowpass


class TestDct2:
    def test_two_by_two_ones(self):
        coeffs = dct2(np.ones((2, 2)))
        assert coeffs[0, 0] == pytest.approx(2.0, abs=1e-12)
        assert np.max(np.abs(coeffs.ravel()[1:])) < 1e-12

    def test_constant_plane_dc_value(self):
        for m, n, c in [(5, 3, 3.7), (8, 8, -1.25), (7, 9, 100.0)]:
            coeffs = dct2(np.full((m, n), c))
            assert coeffs[0, 0] == pytest.approx(c * np.sqrt(m * n), rel=1e-12)
            rest = coeffs.copy()
            rest[0, 0] = 0.0
            assert np.max(np.abs(rest)) < 1e-9 * abs(c * np.sqrt(m * n))

    def test_parseval(self, rng):
        plane = rng.normal(size=(8, 8))
        energy_in = np.sum(plane ** 2)
        energy_out = np.sum(dct2(plane) ** 2)
        assert abs(energy_in - energy_out) <= 1e-9 * energy_in

    def test_linearity(self, rng):
        p = rng.normal(size=(12, 10))
        q = rng.normal(size=(12, 10))
        lhs = dct2(2.5 * p - 1.5 * q)
        rhs = 2.5 * dct2(p) - 1.5 * dct2(q)
        assert np.allclose(lhs, rhs, rtol=1e-9, atol=1e-12)

    def test_matches_quadruple_loop_oracle(self, rng):
        for shape in [(8, 8), (7, 9), (16, 5)]:
            plane = rng.normal(size=shape) * 10
            got = dct2(plane)
            want = oracles.oracle_dct(plane)
            assert np.max(np.abs(got - want)) <= 1e-9 * max(1.0, np.max(np.abs(want)))

    def test_delta_at_origin(self):
        """A delta at pixel (0,0) spreads to a(i)a(j)cos(i*pi/8)cos(j*pi/8)."""
        plane = np.zeros((4, 4))
        plane[0, 0] = 1.0
        coeffs = dct2(plane)
        for i in range(4):
            ai = np.sqrt(1 / 4) if i == 0 else np.sqrt(2 / 4)
            for j in range(4):
                aj = np.sqrt(1 / 4) if j == 0 else np.sqrt(2 / 4)
                want = ai * aj * np.cos(i * np.pi / 8) * np.cos(j * np.pi / 8)
                assert coeffs[i, j] == pytest.approx(want, abs=1e-12)

    def test_rejects_non_2d(self):
        with pytest.raises(ValueError, match="2-D"):
            dct2(np.zeros(8))


class TestIdct2:
    def test_round_trip(self, rng):
        plane = rng.normal(size=(16, 13)) * 50
        back = idct2(dct2(plane))
        assert np.max(np.abs(back - plane)) <= 1e-9 * np.max(np.abs(plane))

    def test_one_hot_dc_gives_constant_one(self):
        coeffs = np.zeros((6, 5))
        coeffs[0, 0] = np.sqrt(30)
        assert np.allclose(idct2(coeffs), 1.0, atol=1e-12)

    def test_zero_to_zero(self):
        assert np.all(idct2(np.zeros((4, 4))) == 0.0)


class TestLowpass:
    def test_full_block_is_identity(self, rng):
        coeffs = rng.normal(size=(9, 9))
        assert np.array_equal(lowpass(coeffs, 9), coeffs)

    def test_dc_only_reconstructs_mean(self, rng):
        plane = rng.normal(size=(10, 12)) * 7
        recon = idct2(lowpass(dct2(plane), 1))
        assert np.allclose(recon, plane.mean(), atol=1e-9)

    def test_retained_count(self, rng):
        coeffs = dct2(rng.normal(size=(256, 256)))
        kept = lowpass(coeffs, 32)
        assert np.array_equal(kept[:32, :32], coeffs[:32, :32])
        assert np.all(kept[32:, :] == 0.0) and np.all(kept[:, 32:] == 0.0)
        assert int(np.count_nonzero(kept)) == 1024

    def test_cutoff_validation(self):
        with pytest.raises(ValueError, match="cutoff"):
            lowpass(np.zeros((8, 8)), 0)
        with pytest.raises(ValueError, match="cutoff"):
            lowpass(np.zeros((8, 8)), 9)

    def test_reconstruction_error_monotone_in_k(self, rng):
        plane = rng.normal(size=(16, 16)) * 20
        coeffs = dct2(plane)
        errors = []
        for k in range(1, 17):
            recon = idct2(lowpass(coeffs, k))
            errors.append(float(np.linalg.norm(plane - recon)))
        for a, b in zip(errors, errors[1:]):
            assert b <= a + 1e-9
        assert errors[-1] <= 1e-9

    def test_oracle_cap_enforced(self):
        with pytest.raises(ValueError, match="capped"):
            oracles.oracle_dct(np.zeros((17, 4)))
