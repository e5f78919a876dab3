"""Color image container, color-space conversion and channel-plane helpers.

Conventions used throughout the package:

* images are 8-bit, 3-channel, shape ``(height, width, 3)``, dtype uint8;
* channel planes are 2-D float64 arrays indexed ``plane[y, x]`` with the
  origin at the top-left corner;
* HSV is stored on the same byte scale as RGB: hue is the angular hue in
  degrees quantized to ``round(h_deg * 255 / 360)``, saturation and value
  are bytes in [0, 255].  Achromatic pixels (zero chroma) get H = 0, and
  zero value additionally gets S = 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

# A plane whose value range is at or below this is treated as constant when
# rescaling.  An absolute epsilon (rather than exact max == min) keeps the
# degenerate branch stable when a constant input picks up floating-point
# noise upstream, e.g. after a filter or transform round trip.
DEGENERATE_RANGE = 1e-6


class ColorSpace(enum.Enum):
    RGB = "rgb"
    HSV = "hsv"


class Channel(enum.Enum):
    """A named channel, tied to the color space it lives in."""

    R = "R"
    G = "G"
    B = "B"
    H = "H"
    S = "S"
    V = "V"

    @property
    def space(self) -> ColorSpace:
        if self in (Channel.R, Channel.G, Channel.B):
            return ColorSpace.RGB
        return ColorSpace.HSV

    @property
    def index(self) -> int:
        return {"R": 0, "G": 1, "B": 2, "H": 0, "S": 1, "V": 2}[self.value]


@dataclass(frozen=True)
class ColorImage:
    """An 8-bit three-channel raster with a declared color space."""

    pixels: np.ndarray
    space: ColorSpace

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 3 or px.shape[2] != 3:
            raise ValueError(f"expected a (height, width, 3) array, got shape {px.shape}")
        if px.dtype != np.uint8:
            raise ValueError(f"expected uint8 samples, got dtype {px.dtype}")
        if px.shape[0] < 3 or px.shape[1] < 3:
            raise ValueError(f"image must be at least 3x3, got {px.shape[0]}x{px.shape[1]}")
        if not isinstance(self.space, ColorSpace):
            raise TypeError(f"space must be a ColorSpace, got {self.space!r}")
        object.__setattr__(self, "pixels", px)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]


def rgb_to_hsv(image: ColorImage) -> ColorImage:
    """Convert an RGB image to byte-quantized HSV (hexcone model)."""
    if image.space is not ColorSpace.RGB:
        raise ValueError(f"expected an RGB image, got {image.space.value}")
    rgb = image.pixels.astype(np.float64)
    r, g, b = rgb[..., 0], rgb[..., 1], rgb[..., 2]

    mx = np.max(rgb, axis=-1)
    mn = np.min(rgb, axis=-1)
    chroma = mx - mn

    safe_chroma = np.where(chroma == 0.0, 1.0, chroma)
    hue_deg = np.zeros_like(mx)
    sel = (mx == r) & (chroma > 0)
    hue_deg = np.where(sel, 60.0 * ((g - b) / safe_chroma % 6.0), hue_deg)
    sel = (mx == g) & (mx != r) & (chroma > 0)
    hue_deg = np.where(sel, 60.0 * ((b - r) / safe_chroma + 2.0), hue_deg)
    sel = (mx == b) & (mx != r) & (mx != g) & (chroma > 0)
    hue_deg = np.where(sel, 60.0 * ((r - g) / safe_chroma + 4.0), hue_deg)

    h = np.rint(hue_deg * 255.0 / 360.0)
    h = np.where(h == 255.0, 0.0, h)  # 360 degrees wraps to 0
    s = np.where(mx > 0, np.rint(255.0 * chroma / np.where(mx == 0, 1.0, mx)), 0.0)
    v = mx

    hsv = np.stack([h, s, v], axis=-1).astype(np.uint8)
    return ColorImage(hsv, ColorSpace.HSV)


def hsv_to_rgb(image: ColorImage) -> ColorImage:
    """Invert :func:`rgb_to_hsv` up to quantization error."""
    if image.space is not ColorSpace.HSV:
        raise ValueError(f"expected an HSV image, got {image.space.value}")
    hsv = image.pixels.astype(np.float64)
    h_deg = hsv[..., 0] * 360.0 / 255.0
    s = hsv[..., 1] / 255.0
    v = hsv[..., 2]

    chroma = v * s
    hp = h_deg / 60.0
    x = chroma * (1.0 - np.abs(hp % 2.0 - 1.0))

    sector = np.floor(hp).astype(np.int64) % 6
    zeros = np.zeros_like(chroma)
    r1 = np.choose(sector, [chroma, x, zeros, zeros, x, chroma])
    g1 = np.choose(sector, [x, chroma, chroma, x, zeros, zeros])
    b1 = np.choose(sector, [zeros, zeros, x, chroma, chroma, x])

    m = v - chroma
    rgb = np.stack([r1 + m, g1 + m, b1 + m], axis=-1)
    rgb = np.clip(np.rint(rgb), 0.0, 255.0).astype(np.uint8)
    return ColorImage(rgb, ColorSpace.RGB)


def extract_plane(image: ColorImage, channel: Channel) -> np.ndarray:
    """Return one channel of ``image`` as a float64 plane."""
    if channel.space is not image.space:
        raise ValueError(
            f"channel {channel.value} belongs to {channel.space.value}, "
            f"image is {image.space.value}"
        )
    return image.pixels[..., channel.index].astype(np.float64)


def normalize_plane(plane: np.ndarray) -> np.ndarray:
    """Affinely rescale a plane to span [0, 255].

    A (near-)constant plane — value range at most ``DEGENERATE_RANGE`` —
    maps to all zeros.
    """
    plane = np.asarray(plane, dtype=np.float64)
    if plane.ndim != 2:
        raise ValueError(f"expected a 2-D plane, got shape {plane.shape}")
    lo = plane.min()
    hi = plane.max()
    span = hi - lo
    if span <= DEGENERATE_RANGE:
        return np.zeros_like(plane)
    # multiply before dividing: for integer-valued spans the endpoints land
    # exactly on 0 and 255
    return (plane - lo) * 255.0 / span
