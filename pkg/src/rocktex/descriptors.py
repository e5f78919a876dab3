"""Composite descriptor pipelines and per-pair coefficient statistics.

Five descriptor methods share one record type:

* ``rgbhist``   — concatenated per-channel 256-bin intensity histograms;
* ``lbp``       — plain LBP histogram of the luma plane;
* ``albpcsf``   — cross-color-space LBP fusion on raw intensities;
* ``g-albpcsf`` — the fusion on Gabor amplitude planes, one record per
  (orientation, scale) filter;
* ``d-albpcsf`` — the fusion on low-frequency DCT reconstructions.

Every record's vector is nonnegative and globally normalized (sums to 1),
so the similarity metrics apply uniformly.

Filtered and reconstructed planes are rescaled to [0, 255] and rounded to
the integer grid before pattern coding.  The rounding keeps threshold
ties — which are meaningful in LBP's greater-or-equal comparison — stable
across algebraically equivalent plane pipelines, e.g. a full-band DCT
round trip versus the untouched plane.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .albpcsf import albpcsf, fuse_planes
from .dct import dct2, idct2, lowpass
from .gabor import (DEFAULT_F, DEFAULT_SIGMA, SCALES, GaborParams, build_kernel,
                    filter_plane)
from .image import (Channel, ColorImage, ColorSpace, extract_plane, normalize_plane,
                    rgb_to_hsv)
from .lbp import LbpConfig, histogram, lbp_map

DEFAULT_DCT_K = 32

#: Rec. 601 luma weights for the grayscale plane of the plain-LBP method.
_LUMA_WEIGHTS = (0.299, 0.587, 0.114)


class Method(enum.Enum):
    RGB_HIST = "rgbhist"
    LBP = "lbp"
    ALBPCSF = "albpcsf"
    G_ALBPCSF = "g-albpcsf"
    D_ALBPCSF = "d-albpcsf"


@dataclass(frozen=True)
class DescriptorRecord:
    """A method tag, its parameters, and the normalized feature vector."""

    method: Method
    params: dict
    vector: np.ndarray

    def __post_init__(self):
        vec = np.asarray(self.vector, dtype=np.float64)
        if vec.ndim != 1:
            raise ValueError(f"vector must be 1-D, got shape {vec.shape}")
        if vec.min() < 0:
            raise ValueError("descriptor vector must be nonnegative")
        total = float(vec.sum())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"descriptor vector must sum to 1, got {total!r}")
        object.__setattr__(self, "vector", vec)


@dataclass(frozen=True)
class PairStats:
    """Mean and population standard deviation of one pair's value map."""

    pair: tuple
    mean: float
    std: float

    def __post_init__(self):
        if self.std < 0:
            raise ValueError("standard deviation cannot be negative")


def _quantized(plane: np.ndarray) -> np.ndarray:
    """Rescale to [0, 255] and snap to the integer grid (see module docs)."""
    return np.rint(normalize_plane(plane))


def _fusion_planes(image: ColorImage) -> dict:
    """The R, G, B and V planes needed by the fusion pipelines."""
    hsv = rgb_to_hsv(image)
    return {
        Channel.R: extract_plane(image, Channel.R),
        Channel.G: extract_plane(image, Channel.G),
        Channel.B: extract_plane(image, Channel.B),
        Channel.V: extract_plane(hsv, Channel.V),
    }


def _lbp_params(config: LbpConfig) -> dict:
    return {"p": config.p, "r": config.r, "variant": config.variant.value}


def rgb_hist(image: ColorImage) -> DescriptorRecord:
    """Concatenated per-channel intensity histograms, globally normalized."""
    if image.space is not ColorSpace.RGB:
        raise ValueError("rgb_hist expects an RGB image")
    parts = []
    n = image.height * image.width
    for ch in (Channel.R, Channel.G, Channel.B):
        counts = np.bincount(image.pixels[..., ch.index].ravel(), minlength=256)
        parts.append(counts.astype(np.float64) / n)
    vector = np.concatenate(parts) / 3.0
    return DescriptorRecord(Method.RGB_HIST, {}, vector)


def lbp_descriptor(image: ColorImage, config: LbpConfig = LbpConfig()) -> DescriptorRecord:
    """Plain LBP histogram of the Rec. 601 luma plane."""
    if image.space is not ColorSpace.RGB:
        raise ValueError("lbp_descriptor expects an RGB image")
    wr, wg, wb = _LUMA_WEIGHTS
    px = image.pixels.astype(np.float64)
    luma = wr * px[..., 0] + wg * px[..., 1] + wb * px[..., 2]
    codes = lbp_map(luma, config)
    vector = histogram(codes, config.n_bins, normalize=True)
    return DescriptorRecord(Method.LBP, _lbp_params(config), vector)


def albpcsf_descriptor(image: ColorImage, config: LbpConfig = LbpConfig()) -> DescriptorRecord:
    """Cross-color-space fusion on raw channel intensities."""
    fused = albpcsf(image, config)
    return DescriptorRecord(Method.ALBPCSF, _lbp_params(config), fused.vector)


def g_albpcsf(image: ColorImage, gabor: GaborParams,
              config: LbpConfig = LbpConfig(),
              kernel_size: int | None = None,
              theta_deg: float | None = None) -> DescriptorRecord:
    """Fusion descriptor over Gabor amplitude planes of one bank cell.

    Each of the R, G, B, V planes is convolved with the (mu, nu) kernel;
    the amplitude maps are rescaled and fused exactly like raw channels.
    ``theta_deg`` only annotates the record (a 180-degree request maps to
    the mu=0 kernel but should be reported as 180).
    """
    kernel = build_kernel(gabor, kernel_size)
    planes = _fusion_planes(image)
    amp = {ch: _quantized(filter_plane(plane, kernel).amplitude)
           for ch, plane in planes.items()}
    fused = fuse_planes(amp, config)
    params = {
        "mu": gabor.mu,
        "nu": gabor.nu,
        "sigma": gabor.sigma,
        "f": gabor.f,
        "wavelength": gabor.wavelength,
        "theta_deg": gabor.mu * 22.5 if theta_deg is None else float(theta_deg),
        "kernel_size": kernel.size,
        **_lbp_params(config),
    }
    return DescriptorRecord(Method.G_ALBPCSF, params, fused.vector)


def d_albpcsf(image: ColorImage, k: int = DEFAULT_DCT_K,
              config: LbpConfig = LbpConfig()) -> DescriptorRecord:
    """Fusion descriptor over low-frequency DCT reconstructions.

    Each of the R, G, B, V planes goes through dct2 -> keep the k x k
    low-frequency block -> idct2 -> rescale, then the fusion runs on the
    reconstructions.  With ``k`` equal to the side of a square image the
    reconstruction is exact and the result equals
    :func:`albpcsf_descriptor` on the rescaled original channels.
    """
    planes = _fusion_planes(image)
    recon = {ch: _quantized(idct2(lowpass(dct2(plane), k)))
             for ch, plane in planes.items()}
    fused = fuse_planes(recon, config)
    params = {"k": k, **_lbp_params(config)}
    return DescriptorRecord(Method.D_ALBPCSF, params, fused.vector)


def pair_stats(value_map: np.ndarray, pair: tuple) -> PairStats:
    """Mean and population standard deviation of a code or amplitude map."""
    value_map = np.asarray(value_map, dtype=np.float64)
    if value_map.size == 0:
        raise ValueError("cannot summarize an empty map")
    return PairStats(pair, float(value_map.mean()), float(value_map.std()))


def gabor_grid(lambdas=(4.0, 8.0), thetas=(0.0, 45.0, 90.0, 135.0, 180.0),
               sigma: float = None, f: float = None) -> list:
    """(GaborParams, theta_deg) cells for a (wavelength, angle) request grid.

    Wavelengths must hit exact bank scales (lambda = 4 * f**nu) and angles
    exact bank orientations (multiples of 22.5 degrees); 180 degrees reuses
    the 0-degree kernel but keeps its own annotation.
    """
    sigma = DEFAULT_SIGMA if sigma is None else sigma
    f = DEFAULT_F if f is None else f
    cells = []
    for lam in lambdas:
        nu_real = np.log(lam / 4.0) / np.log(f)
        nu = int(round(nu_real))
        if abs(nu_real - nu) > 1e-6 or not 0 <= nu < SCALES:
            raise ValueError(
                f"wavelength {lam} is not a bank scale (need 4*f**nu, nu in 0..{SCALES - 1})"
            )
        for theta in thetas:
            steps = theta / 22.5
            if abs(steps - round(steps)) > 1e-6:
                raise ValueError(f"angle {theta} is not a multiple of 22.5 degrees")
            mu = int(round(steps)) % 8
            cells.append((GaborParams(mu=mu, nu=nu, sigma=sigma, f=f), float(theta)))
    return cells
