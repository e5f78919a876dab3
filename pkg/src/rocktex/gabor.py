"""Complex Gabor filter bank: kernels, image filtering, amplitude/phase.

Kernel definition
-----------------
A kernel is a Gaussian envelope times a complex carrier with the DC
response removed::

    psi(r) = exp(-|k|^2 |r|^2 / (2 sigma^2)) * (exp(i k.r) - beta)

with wave vector ``k = (pi / (2 f^nu)) * (cos(mu pi / 8), sin(mu pi / 8))``
for orientation index mu in 0..7 and scale index nu in 0..4.  The carrier
wavelength is ``2 pi / |k| = 4 f^nu``.

``beta`` is the mean of the carrier under the envelope, computed over the
actual truncated tap grid rather than the continuous-domain constant
``exp(-sigma^2/2)``: that makes every kernel's taps sum to zero exactly
(machine precision), so constant inputs produce zero amplitude.  On the
default grid the two constants agree to about 1e-4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import fftconvolve

ORIENTATIONS = 8
SCALES = 5
DEFAULT_SIGMA = math.pi
DEFAULT_F = math.sqrt(2.0)
#: Largest kernel side the automatic size rule will pick.
MAX_KERNEL_SIZE = 61


@dataclass(frozen=True)
class GaborParams:
    """One (orientation, scale) cell of the filter bank."""

    mu: int
    nu: int
    sigma: float = DEFAULT_SIGMA
    f: float = DEFAULT_F

    def __post_init__(self):
        if not isinstance(self.mu, int) or not 0 <= self.mu < ORIENTATIONS:
            raise ValueError(f"orientation index must be in [0, {ORIENTATIONS}), got {self.mu!r}")
        if not isinstance(self.nu, int) or not 0 <= self.nu < SCALES:
            raise ValueError(f"scale index must be in [0, {SCALES}), got {self.nu!r}")
        if not self.sigma > 0:
            raise ValueError(f"sigma must be positive, got {self.sigma!r}")
        if not self.f > 1:
            raise ValueError(f"spacing factor must exceed 1, got {self.f!r}")

    @property
    def k_magnitude(self) -> float:
        return math.pi / (2.0 * self.f ** self.nu)

    @property
    def orientation(self) -> float:
        """Wave-vector angle in radians."""
        return self.mu * math.pi / ORIENTATIONS

    @property
    def wavelength(self) -> float:
        """Carrier wavelength in pixels: 2*pi/|k| = 4*f^nu."""
        return 2.0 * math.pi / self.k_magnitude

    @property
    def k_vector(self):
        return (self.k_magnitude * math.cos(self.orientation),
                self.k_magnitude * math.sin(self.orientation))


@dataclass(frozen=True)
class GaborKernel:
    params: GaborParams
    taps: np.ndarray  # complex128, square, odd side

    @property
    def size(self) -> int:
        return self.taps.shape[0]


@dataclass(frozen=True)
class GaborResponse:
    """Pointwise amplitude and phase of a complex filter response."""

    amplitude: np.ndarray
    phase: np.ndarray  # radians in (-pi, pi]


def default_kernel_size(params: GaborParams, cap: int = MAX_KERNEL_SIZE) -> int:
    """Odd kernel side covering three envelope standard deviations.

    The envelope's spatial standard deviation is ``sigma / |k|``; the side
    is ``2*ceil(3*sigma/|k|) + 1``, clipped to the largest odd value not
    above ``cap`` and never below 7.
    """
    half = math.ceil(3.0 * params.sigma / params.k_magnitude)
    size = 2 * half + 1
    cap_odd = cap if cap % 2 == 1 else cap - 1
    return max(7, min(size, cap_odd))


def build_kernel(params: GaborParams, size: int | None = None) -> GaborKernel:
    """Construct the complex tap grid for one bank cell.

    ``size`` must be odd and at least 7; by default it follows
    :func:`default_kernel_size`.
    """
    if size is None:
        size = default_kernel_size(params)
    if size % 2 == 0 or size < 7:
        raise ValueError(f"kernel size must be odd and >= 7, got {size}")
    half = size // 2
    y, x = np.mgrid[-half:half + 1, -half:half + 1].astype(np.float64)
    kx, ky = params.k_vector
    kmag2 = params.k_magnitude ** 2
    envelope = np.exp(-kmag2 * (x * x + y * y) / (2.0 * params.sigma ** 2))
    carrier = np.exp(1j * (kx * x + ky * y))
    # Discrete DC compensation: subtracting the envelope-weighted carrier
    # mean zeroes the tap sum exactly on this grid, where the continuous
    # constant exp(-sigma^2/2) would leave a ~1e-4 residual.
    beta = (envelope * carrier).sum() / envelope.sum()
    taps = envelope * (carrier - beta)
    return GaborKernel(params, taps)


def bank(sigma: float = DEFAULT_SIGMA, f: float = DEFAULT_F,
         max_size: int = MAX_KERNEL_SIZE) -> list[GaborKernel]:
    """The full 40-kernel bank, scale-major: (nu=0, mu=0..7), (nu=1, ...)."""
    kernels = []
    for nu in range(SCALES):
        for mu in range(ORIENTATIONS):
            params = GaborParams(mu=mu, nu=nu, sigma=sigma, f=f)
            kernels.append(build_kernel(params, default_kernel_size(params, max_size)))
    return kernels


def filter_plane(plane: np.ndarray, kernel: GaborKernel) -> GaborResponse:
    """Convolve a plane with a kernel; return amplitude and phase planes.

    True convolution (kernel flipped), symmetric edge padding, output the
    same shape as the input.  The plane must be at least as large as the
    kernel in both dimensions.
    """
    plane = np.asarray(plane, dtype=np.float64)
    if plane.ndim != 2:
        raise ValueError(f"expected a 2-D plane, got shape {plane.shape}")
    size = kernel.size
    if plane.shape[0] < size or plane.shape[1] < size:
        raise ValueError(
            f"plane {plane.shape[0]}x{plane.shape[1]} smaller than kernel size {size}"
        )
    half = size // 2
    padded = np.pad(plane, half, mode="symmetric")
    response = fftconvolve(padded, kernel.taps, mode="same")
    response = response[half:padded.shape[0] - half, half:padded.shape[1] - half]
    return GaborResponse(np.abs(response), np.angle(response))
