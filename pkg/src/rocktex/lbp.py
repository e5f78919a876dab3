"""Local binary patterns: coding, rotation-invariant label maps, histograms.

Neighbor geometry
-----------------
Neighbors are enumerated clockwise starting at the top-left, giving the
bit order used when packing codes (bit i is neighbor i, least significant
first).  For the classic 8-neighbor, radius-1 configuration the ring is
the 3x3 pixel square:

    (dy, dx) = (-1,-1) (-1,0) (-1,1) (0,1) (1,1) (1,0) (1,-1) (0,-1)

For any other (P, R) the ring is circular: neighbor i sits at angle
``3*pi/4 - 2*pi*i/P`` (measured counter-clockwise from +x with +y pointing
up, which is clockwise in image coordinates), i.e.::

    dx_i = R * cos(3*pi/4 - 2*pi*i/P)
    dy_i = -R * sin(3*pi/4 - 2*pi*i/P)

Offsets within 1e-9 of an integer are snapped to that integer; only truly
fractional offsets are sampled with bilinear interpolation.  Thresholding
is greater-or-equal: a neighbor exactly equal to the center contributes 1.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels

# Offsets this close to an integer lattice point are treated as exact.
_SNAP_TOL = 1e-9


class LbpVariant(enum.Enum):
    BASIC = "basic"
    ROTATION_INVARIANT = "ri"
    UNIFORM_ROTATION_INVARIANT = "riu2"


@dataclass(frozen=True)
class LbpConfig:
    """Sampling configuration: P neighbors on a ring of radius R."""

    p: int = 8
    r: float = 1.0
    variant: LbpVariant = LbpVariant.BASIC

    def __post_init__(self):
        if not isinstance(self.p, int) or not 4 <= self.p <= 24:
            raise ValueError(f"neighbor count must be an integer in [4, 24], got {self.p!r}")
        if not self.r >= 1.0:
            raise ValueError(f"radius must be >= 1, got {self.r!r}")
        if not isinstance(self.variant, LbpVariant):
            raise TypeError(f"variant must be an LbpVariant, got {self.variant!r}")

    @property
    def margin(self) -> int:
        """Border width (pixels) that has no code."""
        return int(math.ceil(self.r))

    @property
    def n_bins(self) -> int:
        """Number of distinct labels the variant mapping can emit."""
        if self.variant is LbpVariant.UNIFORM_ROTATION_INVARIANT:
            return self.p + 2
        return 2 ** self.p


def neighbor_offsets(p: int, r: float):
    """(dy, dx) sampling offsets for a (P, R) ring, as two float64 arrays."""
    if p == 8 and r == 1.0:
        dy = np.array([-1.0, -1.0, -1.0, 0.0, 1.0, 1.0, 1.0, 0.0])
        dx = np.array([-1.0, 0.0, 1.0, 1.0, 1.0, 0.0, -1.0, -1.0])
        return dy, dx
    i = np.arange(p, dtype=np.float64)
    phi = 3.0 * np.pi / 4.0 - 2.0 * np.pi * i / p
    dx = r * np.cos(phi)
    dy = -r * np.sin(phi)
    dx = _snap(dx)
    dy = _snap(dy)
    return dy, dx


def _snap(off):
    nearest = np.rint(off)
    return np.where(np.abs(off - nearest) <= _SNAP_TOL, nearest, off)


def lbp_code(center: float, neighbors) -> int:
    """Single-pixel pattern code: sum of 2^i over neighbors >= center."""
    code = 0
    for i, n in enumerate(neighbors):
        if n >= center:
            code += 1 << i
    return code


def lbp_map(plane: np.ndarray, config: LbpConfig = LbpConfig()) -> np.ndarray:
    """Per-pixel pattern codes of a plane, mapped through the variant.

    Output shape is the input shape minus ``config.margin`` on every side;
    the plane must be strictly larger than twice the margin in both
    dimensions.
    """
    return cross_plane_map(plane, plane, config)


def cross_plane_map(neighbor_plane, center_plane, config: LbpConfig = LbpConfig()):
    """Pattern codes sampling neighbors from one plane, centers from another.

    Both planes must have the same shape.  With ``neighbor_plane is
    center_plane`` this is exactly :func:`lbp_map`.
    """
    neighbor_plane = np.asarray(neighbor_plane, dtype=np.float64)
    center_plane = np.asarray(center_plane, dtype=np.float64)
    if neighbor_plane.ndim != 2:
        raise ValueError(f"expected a 2-D plane, got shape {neighbor_plane.shape}")
    if neighbor_plane.shape != center_plane.shape:
        raise ValueError(
            f"plane shapes differ: {neighbor_plane.shape} vs {center_plane.shape}"
        )
    m = config.margin
    h, w = neighbor_plane.shape
    if h <= 2 * m or w <= 2 * m:
        raise ValueError(
            f"plane {h}x{w} too small for radius {config.r} (needs > {2 * m} per side)"
        )
    dy, dx = neighbor_offsets(config.p, config.r)
    codes = _kernels.code_map(neighbor_plane, center_plane, dy, dx, m)
    return apply_variant(codes, config)


def apply_variant(codes: np.ndarray, config: LbpConfig) -> np.ndarray:
    """Map raw pattern codes through the configured label mapping."""
    if config.variant is LbpVariant.BASIC:
        return codes
    if config.variant is LbpVariant.ROTATION_INVARIANT:
        lut = _ri_lut(config.p)
    else:
        lut = _riu2_lut(config.p)
    return lut[codes]


def ri_code(code: int, p: int) -> int:
    """Smallest value among all circular bit rotations of ``code``."""
    mask = (1 << p) - 1
    best = code
    for k in range(1, p):
        rot = ((code >> k) | (code << (p - k))) & mask
        if rot < best:
            best = rot
    return best


def riu2_code(code: int, p: int) -> int:
    """Uniform rotation-invariant label.

    Codes with at most two 0/1 transitions around the ring map to their
    popcount (0..p); every other code maps to the shared label p + 1.
    """
    rot1 = ((code >> 1) | (code << (p - 1))) & ((1 << p) - 1)
    transitions = bin(code ^ rot1).count("1")
    if transitions <= 2:
        return bin(code).count("1")
    return p + 1


@functools.lru_cache(maxsize=None)
def _ri_lut(p: int) -> np.ndarray:
    return np.array([ri_code(c, p) for c in range(2 ** p)], dtype=np.int32)


@functools.lru_cache(maxsize=None)
def _riu2_lut(p: int) -> np.ndarray:
    return np.array([riu2_code(c, p) for c in range(2 ** p)], dtype=np.int32)


def histogram(codes: np.ndarray, n_bins: int, normalize: bool = True) -> np.ndarray:
    """Occurrence counts of code values 0..n_bins-1, optionally L1-normalized."""
    codes = np.asarray(codes)
    if codes.size == 0:
        raise ValueError("cannot histogram an empty code map")
    if codes.min() < 0 or codes.max() >= n_bins:
        raise ValueError(
            f"code values span [{codes.min()}, {codes.max()}], "
            f"outside the {n_bins} histogram bins"
        )
    counts = np.bincount(codes.ravel(), minlength=n_bins).astype(np.float64)
    if normalize:
        counts /= codes.size
    return counts
