"""Sampled complex fields, spectra, band energies and brick-wall filtering.

Conventions
-----------
A field q(t) is sampled on a uniform grid t_i = t0 + i*dt, i = 0..n-1,
with n a power of two. Amplitudes are in sqrt(W), so sum(|q|^2)*dt is an
energy in J.

The forward transform approximates Q(w) = integral q(t) exp(-jwt) dt as
dt times a shifted DFT, on bins w_m = (m - n/2)*dw with dw = 2*pi/(n*dt).
The inverse carries the 1/(2*pi), so the continuous Parseval identity

    sum |q|^2 dt  =  (1/2*pi) sum |Q|^2 dw

holds exactly (not just to rounding over the analog limit: the discrete
identity is an algebraic consequence of the DFT). Band energies use the
right-hand side restricted to bins whose center frequency lies in the
band; a bin belongs to a closed interval if its center is within
EDGE_TOL of it, which absorbs last-ulp noise when channel edges are
constructed to land exactly on bin centers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bands import BandSet

# Fraction of a bin spacing by which closed-interval membership is
# widened. Must stay well below 1 so it can never capture a neighbour.
EDGE_TOL = 1e-9


class FieldError(ValueError):
    pass


class BandOutOfRange(FieldError):
    pass


class ChannelTooNarrow(FieldError):
    pass


class GridTooCoarse(FieldError):
    pass


def _check_pow2(n: int) -> None:
    if n < 2 or n & (n - 1):
        raise FieldError(f"sample count {n} is not a power of two >= 2")


@dataclass(frozen=True)
class SampledField:
    """Complex baseband field on a uniform time grid.

    samples : complex amplitudes in sqrt(W)
    dt      : sample spacing in s
    t0      : time of the first sample in s
    """

    samples: np.ndarray
    dt: float
    t0: float

    def __post_init__(self):
        arr = np.array(self.samples, dtype=np.complex128)
        _check_pow2(arr.size)
        if not self.dt > 0:
            raise FieldError("dt must be positive")
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)

    @property
    def n(self) -> int:
        return self.samples.size

    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.n)

    def energy(self) -> float:
        """Total energy in J, computed in the time domain."""
        return float(np.sum(np.abs(self.samples) ** 2) * self.dt)


@dataclass(frozen=True)
class Spectrum:
    """Field spectrum on bins increasing from -pi/dt, spacing domega."""

    coefficients: np.ndarray
    domega: float
    t0: float

    def __post_init__(self):
        arr = np.array(self.coefficients, dtype=np.complex128)
        _check_pow2(arr.size)
        arr.flags.writeable = False
        object.__setattr__(self, "coefficients", arr)

    @property
    def n(self) -> int:
        return self.coefficients.size

    @property
    def dt(self) -> float:
        return 2.0 * np.pi / (self.n * self.domega)

    def omegas(self) -> np.ndarray:
        return (np.arange(self.n) - self.n // 2) * self.domega

    def energy(self) -> float:
        """Total energy in J, computed in the frequency domain."""
        return float(np.sum(np.abs(self.coefficients) ** 2) * self.domega / (2.0 * np.pi))


def transform(f: SampledField) -> Spectrum:
    """Forward transform, dt-scaled DFT reordered to increasing frequency."""
    n = f.n
    domega = 2.0 * np.pi / (n * f.dt)
    omegas = (np.arange(n) - n // 2) * domega
    coeff = f.dt * np.exp(-1j * omegas * f.t0) * np.fft.fftshift(np.fft.fft(f.samples))
    return Spectrum(coeff, domega, f.t0)


def inverse(s: Spectrum) -> SampledField:
    """Inverse transform; exact round trip with `transform`."""
    dt = s.dt
    q = np.fft.ifft(np.fft.ifftshift(s.coefficients * np.exp(1j * s.omegas() * s.t0))) / dt
    return SampledField(q, dt, s.t0)


def band_mask(s: Spectrum, band: BandSet) -> np.ndarray:
    """Boolean mask of bins whose center lies in the closed band set."""
    omegas = s.omegas()
    half_span = np.pi / s.dt
    if band.lo < -half_span or band.hi >= half_span:
        raise BandOutOfRange(
            f"band [{band.lo:g}, {band.hi:g}] exceeds represented "
            f"[-{half_span:g}, {half_span:g}) rad/s"
        )
    tol = EDGE_TOL * s.domega
    mask = np.zeros(s.n, dtype=bool)
    for lo, hi in band.intervals:
        mask |= (omegas >= lo - tol) & (omegas <= hi + tol)
    return mask


def spectrum_band_energy(s: Spectrum, band: BandSet) -> float:
    mask = band_mask(s, band)
    return float(
        np.sum(np.abs(s.coefficients[mask]) ** 2) * s.domega / (2.0 * np.pi)
    )


def band_energy(f: SampledField, band: BandSet) -> float:
    """Energy in J carried by the bins inside `band`."""
    return spectrum_band_energy(transform(f), band)


def brickwall_spectrum(
    s: Spectrum, band: BandSet, alpha0: float, dz: float
) -> tuple[Spectrum, float]:
    """Brick-wall mask plus in-band attenuation on a spectrum.

    Bins outside `band` are zeroed; the energy they carried (before any
    decay) is returned as `discarded`. Surviving bins are multiplied by
    exp(-alpha0*dz/2). With alpha0*dz == 0 the surviving bins are
    returned bit-for-bit unchanged, which makes the mask idempotent.
    """
    mask = band_mask(s, band)
    discarded = float(
        np.sum(np.abs(s.coefficients[~mask]) ** 2) * s.domega / (2.0 * np.pi)
    )
    coeff = np.where(mask, s.coefficients, 0.0)
    if alpha0 * dz != 0.0:
        coeff = coeff * np.exp(-0.5 * alpha0 * dz)
    return Spectrum(coeff, s.domega, s.t0), discarded


def apply_brickwall(
    f: SampledField, band: BandSet, alpha0: float, dz: float
) -> tuple[SampledField, float]:
    """Field-level brick-wall step: transform, mask and decay, invert."""
    s, discarded = brickwall_spectrum(transform(f), band, alpha0, dz)
    return inverse(s), discarded


def impulse_response(band: BandSet, t):
    """Time response of the ideal unity-gain filter over `band`.

    h(t) = sum_n (W_n / 2*pi) * exp(j*wbar_n*t) * sinc(W_n * t / 2*pi)
    with sinc(x) = sin(pi x)/(pi x); accepts scalar or array t in s.
    """
    t = np.asarray(t, dtype=float)
    h = np.zeros(t.shape, dtype=complex)
    for (lo, hi) in band.intervals:
        width = hi - lo
        center = 0.5 * (lo + hi)
        h = h + (width / (2.0 * np.pi)) * np.exp(1j * center * t) * np.sinc(
            width * t / (2.0 * np.pi)
        )
    return h if h.shape else complex(h)


def rrc_spectral_amplitude(offset: np.ndarray, bandwidth: float, rolloff: float) -> np.ndarray:
    """Root raised cosine |H(w)| at angular offsets from the carrier.

    The pulse occupies the two-sided bandwidth `bandwidth` (rad/s), so
    the symbol period is T = 2*pi*(1+rolloff)/bandwidth and the response
    is the square root of the standard raised-cosine taper: flat at
    sqrt(T) out to (1-rolloff)/(2T) Hz, a cosine quarter-wave to exactly
    zero at (1+rolloff)/(2T) Hz.
    """
    if not 0.0 <= rolloff <= 1.0:
        raise FieldError(f"rolloff {rolloff} outside [0, 1]")
    T = 2.0 * np.pi * (1.0 + rolloff) / bandwidth
    f = np.abs(np.asarray(offset, dtype=float)) / (2.0 * np.pi)
    f_flat = (1.0 - rolloff) / (2.0 * T)
    f_stop = (1.0 + rolloff) / (2.0 * T)
    amp = np.zeros_like(f)
    amp[f <= f_flat] = np.sqrt(T)
    if rolloff > 0.0:
        taper = (f > f_flat) & (f <= f_stop)
        amp[taper] = np.sqrt(T) * np.cos(
            np.pi * T / (2.0 * rolloff) * (f[taper] - f_flat)
        )
    return amp


def rrc_pulse(
    channel: tuple[float, float],
    rolloff: float,
    energy: float,
    phase: float,
    dt: float,
    n: int,
    t0: float,
    bandwidth: float | None = None,
) -> SampledField:
    """Band-limited root-raised-cosine launch pulse for one channel.

    channel   : (center, width) in rad/s
    energy    : band energy of the result in J (exact by construction)
    phase     : complex phase of the pulse peak in rad
    bandwidth : two-sided pulse bandwidth, defaults to the channel width

    The pulse is synthesized directly in the frequency domain, so its
    spectrum is identically zero outside the channel. The pulse peak
    sits at the center of the time window. Raises ChannelTooNarrow when
    the requested bandwidth exceeds the channel, GridTooCoarse when no
    bin falls inside the pulse support.
    """
    center, width = channel
    _check_pow2(n)
    if bandwidth is None:
        bandwidth = width
    if bandwidth > width * (1.0 + 1e-12):
        raise ChannelTooNarrow(
            f"pulse bandwidth {bandwidth:g} exceeds channel width {width:g}"
        )
    domega = 2.0 * np.pi / (n * dt)
    omegas = (np.arange(n) - n // 2) * domega
    half_span = np.pi / dt
    if center - width / 2 < -half_span or center + width / 2 >= half_span:
        raise BandOutOfRange("channel exceeds the represented bandwidth")

    coeff = np.zeros(n, dtype=complex)
    if energy == 0.0:
        return inverse(Spectrum(coeff, domega, t0))

    tol = EDGE_TOL * domega
    support = np.abs(omegas - center) <= bandwidth / 2 + tol
    amp = np.zeros(n)
    amp[support] = rrc_spectral_amplitude(
        omegas[support] - center, bandwidth, rolloff
    )
    raw = np.sum(amp**2) * domega / (2.0 * np.pi)
    if raw == 0.0:
        raise GridTooCoarse(
            f"no spectral bin falls inside the {bandwidth:g} rad/s pulse support"
        )
    t_center = t0 + (n // 2) * dt
    scale = np.sqrt(energy / raw)
    coeff = scale * np.exp(1j * phase) * amp * np.exp(-1j * omegas * t_center)
    return inverse(Spectrum(coeff, domega, t0))


def parseval_residual(f: SampledField) -> float:
    """Relative disagreement between time- and frequency-domain energy."""
    et = f.energy()
    ef = transform(f).energy()
    if et == 0.0 and ef == 0.0:
        return 0.0
    return abs(et - ef) / max(et, ef)
