"""Orthonormal 2-D DCT-II, its inverse, and low-frequency selection.

The transform is the separable type-II discrete cosine transform with
orthonormal scaling, so it is unitary: ``idct2(dct2(p)) == p`` and energy
is preserved.  Coefficient (0, 0) is the DC term: for an M x N plane of
constant value c it equals ``c * sqrt(M * N)``.
"""

from __future__ import annotations

import numpy as np
import scipy.fft


def dct2(plane: np.ndarray) -> np.ndarray:
    """Forward orthonormal 2-D DCT-II of a plane."""
    plane = np.asarray(plane, dtype=np.float64)
    if plane.ndim != 2:
        raise ValueError(f"expected a 2-D plane, got shape {plane.shape}")
    return scipy.fft.dctn(plane, type=2, norm="ortho")


def idct2(coeffs: np.ndarray) -> np.ndarray:
    """Inverse of :func:`dct2`."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    if coeffs.ndim != 2:
        raise ValueError(f"expected a 2-D coefficient array, got shape {coeffs.shape}")
    return scipy.fft.idctn(coeffs, type=2, norm="ortho")


def lowpass(coeffs: np.ndarray, k: int) -> np.ndarray:
    """Keep the k x k lowest-frequency corner of a coefficient array.

    Coefficients with either index >= k are zeroed.  ``k`` must satisfy
    ``1 <= k <= min(coeffs.shape)``.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    if coeffs.ndim != 2:
        raise ValueError(f"expected a 2-D coefficient array, got shape {coeffs.shape}")
    if not 1 <= k <= min(coeffs.shape):
        raise ValueError(
            f"cutoff {k} outside [1, {min(coeffs.shape)}] for shape {coeffs.shape}"
        )
    out = np.zeros_like(coeffs)
    out[:k, :k] = coeffs[:k, :k]
    return out
