"""Cross-color-space LBP fusion (ALBPCSF).

The fusion couples each RGB channel with the HSV value channel: pattern
codes are computed with neighbors sampled from the R (then G, then B)
plane and the threshold center taken from the V plane at the same pixel.
The three resulting code histograms are normalized per pair, concatenated
in (R,V), (G,V), (B,V) order, then globally renormalized so the full
vector sums to 1.

The neighbor-from-RGB / center-from-V pairing is the one interpretive
choice in this module; it is isolated in :data:`CHANNEL_PAIRS` and
:func:`fuse_planes` so it can be swapped without touching callers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import Channel, ColorImage, ColorSpace, extract_plane, rgb_to_hsv
from .lbp import LbpConfig, cross_plane_map, histogram

#: (neighbor channel, center channel) pairs, in concatenation order.
CHANNEL_PAIRS = (
    (Channel.R, Channel.V),
    (Channel.G, Channel.V),
    (Channel.B, Channel.V),
)


@dataclass(frozen=True)
class FusedDescriptor:
    """Per-pair normalized histograms plus their globally normalized fusion."""

    pairs: tuple
    histograms: tuple

    def __post_init__(self):
        if len(self.pairs) != len(self.histograms):
            raise ValueError("one histogram per channel pair required")
        for h in self.histograms:
            if abs(float(np.sum(h)) - 1.0) > 1e-9:
                raise ValueError("per-pair histograms must each sum to 1")

    @property
    def concatenated(self) -> np.ndarray:
        return np.concatenate(self.histograms)

    @property
    def vector(self) -> np.ndarray:
        """Concatenation rescaled to unit sum (global normalization)."""
        return self.concatenated / len(self.histograms)


def cross_channel_lbp(neighbor_plane, center_plane, config: LbpConfig = LbpConfig()):
    """Code map with neighbors from one plane, centers from another."""
    return cross_plane_map(neighbor_plane, center_plane, config)


def fuse_planes(planes: dict, config: LbpConfig = LbpConfig()) -> FusedDescriptor:
    """Fuse channel planes (a ``{Channel: plane}`` mapping) per :data:`CHANNEL_PAIRS`.

    The mapping must provide every channel named in the pairs; all planes
    must share one shape.
    """
    hists = []
    for neighbor_ch, center_ch in CHANNEL_PAIRS:
        try:
            neighbor = planes[neighbor_ch]
            center = planes[center_ch]
        except KeyError as exc:
            raise ValueError(f"missing plane for channel {exc.args[0]}") from None
        codes = cross_channel_lbp(neighbor, center, config)
        hists.append(histogram(codes, config.n_bins, normalize=True))
    return FusedDescriptor(CHANNEL_PAIRS, tuple(hists))


def albpcsf(image: ColorImage, config: LbpConfig = LbpConfig()) -> FusedDescriptor:
    """Fused descriptor of an RGB image (value plane derived internally)."""
    if image.space is not ColorSpace.RGB:
        raise ValueError("albpcsf expects an RGB image")
    hsv = rgb_to_hsv(image)
    planes = {
        Channel.R: extract_plane(image, Channel.R),
        Channel.G: extract_plane(image, Channel.G),
        Channel.B: extract_plane(image, Channel.B),
        Channel.V: extract_plane(hsv, Channel.V),
    }
    return fuse_planes(planes, config)
