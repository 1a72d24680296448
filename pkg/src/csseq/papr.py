"""Oversampled OFDM power envelopes and peak-to-average power ratio.

The complex envelope of a length-L sequence a is sampled on a J*L grid,
S_a(n) = sum_i a(i) exp(2 pi sqrt(-1) i n / (J L)), computed as a
zero-padded inverse DFT.  Average power is the sequence energy
sum |a(i)|^2 (the time average of |S_a|^2 by Parseval), so NULL entries
lengthen the sequence without contributing power.

The grid maximum approximates the continuous-time supremum; bound
checks allow a 1 percent slack for that approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .seqcore import ComplementarySet, QarySequence, to_complex

GRID_SLACK = 0.01


class UndefinedEnergyError(ValueError):
    """PAPR is undefined for a sequence with zero energy."""


@dataclass(frozen=True)
class PaprConfig:
    """oversampling: envelope samples per subcarrier spacing."""

    oversampling: int = 8

    def __post_init__(self):
        if self.oversampling < 1:
            raise ValueError(
                f"oversampling must be at least 1, got {self.oversampling}"
            )


@dataclass(frozen=True)
class PowerEnvelope:
    """Instantaneous power on the oversampled grid plus total energy."""

    samples: np.ndarray
    energy: float

    def __post_init__(self):
        arr = np.array(self.samples, dtype=float)
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)

    @property
    def peak(self) -> float:
        return float(self.samples.max())


def envelope(a: QarySequence, cfg: PaprConfig = PaprConfig()) -> PowerEnvelope:
    """Power samples |S_a(n)|^2 for n = 0 .. J*L - 1."""
    vals = to_complex(a).values
    n = cfg.oversampling * len(a)
    spectrum = np.fft.ifft(vals, n) * n
    samples = np.abs(spectrum) ** 2
    return PowerEnvelope(samples, float(a.energy))


def papr(a: QarySequence, cfg: PaprConfig = PaprConfig()) -> float:
    """Grid peak power divided by average power."""
    env = envelope(a, cfg)
    if env.energy <= 0:
        raise UndefinedEnergyError(
            "sequence has zero energy (every entry is NULL)"
        )
    return env.peak / env.energy


def set_papr(cset: ComplementarySet, cfg: PaprConfig = PaprConfig()) -> float:
    """Largest member PAPR; the figure of merit for a codeword set."""
    return max(papr(s, cfg) for s in cset)


@dataclass(frozen=True)
class PaprBoundReport:
    """Outcome of checking set PAPR against the set-size bound.

    claimed is False when the equal-energy precondition fails, in which
    case the bound is reported for reference but not asserted.
    margins[i] = bound - member i's PAPR (positive means inside).
    """

    claimed: bool
    within_bound: bool
    set_size: int
    bound: float
    set_papr: float
    member_paprs: Tuple[float, ...]
    margins: Tuple[float, ...]

    def __bool__(self):
        return self.claimed and self.within_bound

    def __str__(self):
        if not self.claimed:
            return (
                "BOUND NOT CLAIMED: members have unequal energies "
                f"(set PAPR {self.set_papr:.4f}, reference bound "
                f"{self.bound:.4f})"
            )
        verdict = "WITHIN" if self.within_bound else "EXCEEDS"
        return (
            f"{verdict} BOUND: set PAPR {self.set_papr:.4f} vs "
            f"{self.bound:.4f} (N={self.set_size} + grid slack)"
        )


def check_papr_bound(
    cset: ComplementarySet, cfg: PaprConfig = PaprConfig()
) -> PaprBoundReport:
    """Check set PAPR <= N * (1 + GRID_SLACK).

    The bound presumes equal member energies (identical NULL counts);
    a set violating that yields an unclaimed report, not an exception.
    """
    n = cset.size
    bound = n * (1.0 + GRID_SLACK)
    member = tuple(papr(s, cfg) for s in cset)
    worst = max(member)
    energies = {s.energy for s in cset}
    equal = len(energies) == 1
    return PaprBoundReport(
        claimed=equal,
        within_bound=equal and worst <= bound,
        set_size=n,
        bound=bound,
        set_papr=worst,
        member_paprs=member,
        margins=tuple(bound - p for p in member),
    )
