"""Propagation, jamming and noise descriptions."""

from __future__ import annotations

import dataclasses
import enum
import math
import typing

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities

__all__ = (
    "ChannelRealization",
    "JammerKind",
    "JammerPath",
    "JammerSpec",
    "NoiseSpec",
)


@dataclasses.dataclass(frozen=True, eq=False)
class ChannelRealization(object):
    """Quasi-static flat Rayleigh channel of a 2×2 link.

    :param h: Complex gains ``h[tx, rx]`` (rows = transmit antennas,
        columns = receive antennas, the orientation of ``Y = √P·B·H``).
        Column ``i`` is the channel vector ``h_i`` of receive antenna
        ``i``.
    """

    h: antijam_utilities.Matrix2

    def __post_init__(self):
        object.__setattr__(self, "h", antijam_utilities.as_matrix2(self.h))

    @classmethod
    def draw(cls, generator: np.random.Generator) -> ChannelRealization:
        """Four independent ``CN(0, 1)`` gains."""
        return cls(antijam_utilities.complex_gaussian(generator, (2, 2)))

    def column(self, antenna: int) -> np.ndarray:
        return self.h[:, antenna]

    def transmit_correlation(self) -> antijam_utilities.Matrix2:
        """Transmit side correlation ``H·H^H``.

        With transmit antennas along the rows this is the matrix whose
        eigenvectors ``u`` maximise the received beam energy
        ``‖u^H H‖²``; its eigenvalues are the squared singular values of
        ``H``.
        """
        return self.h @ self.h.conj().T


class JammerKind(enum.Enum):
    NONE = "none"
    ALL_BAND = "all-band"
    MULTI_BAND = "multi-band"
    BARRAGE = "barrage"


class JammerPath(enum.Enum):
    DIRECT = "direct"
    FADED = "faded"


@dataclasses.dataclass(frozen=True)
class JammerSpec(object):
    """Description of the hostile transmitter.

    :param kind: :class:`JammerKind` (or its string value).
    :param jammed_slot_tuple: Jammed data subcarriers (0-based slot
        order of :class:`mutwo.antijam_parameters.OfdmGrid`), only used
        by multi-band jammers.
    :param sjr_db: Signal to jammer ratio at the receive antennas.
    :param path: :class:`JammerPath`: ``faded`` sends one jamming
        waveform through its own ``CN(0, 1)`` channel to each receive
        antenna, ``direct`` adds an independent waveform per receive
        antenna.
    """

    kind: JammerKind = JammerKind.NONE
    jammed_slot_tuple: tuple[int, ...] = ()
    sjr_db: float = 0.0
    path: JammerPath = dataclasses.field(
        default_factory=lambda: JammerPath(
            antijam_parameters.configurations.DEFAULT_JAMMER_PATH
        )
    )

    def __post_init__(self):
        object.__setattr__(self, "kind", JammerKind(self.kind))
        object.__setattr__(self, "path", JammerPath(self.path))
        object.__setattr__(
            self,
            "jammed_slot_tuple",
            tuple(sorted(set(int(slot) for slot in self.jammed_slot_tuple))),
        )
        if self.kind is JammerKind.MULTI_BAND and not self.jammed_slot_tuple:
            raise antijam_utilities.InvalidInputError(
                "jammed_slot_tuple", "a multi-band jammer needs jammed slots"
            )
        if math.isnan(self.sjr_db):
            raise antijam_utilities.InvalidInputError("sjr_db", "is NaN")

    @property
    def is_active(self) -> bool:
        return self.kind is not JammerKind.NONE

    def with_sjr(self, sjr_db: float) -> JammerSpec:
        return dataclasses.replace(self, sjr_db=float(sjr_db))


@dataclasses.dataclass(frozen=True)
class NoiseSpec(object):
    """Additive white Gaussian noise.

    :param n0: Noise power per complex sample. ``0`` is the noiseless
        test mode.
    """

    n0: float

    def __post_init__(self):
        if not self.n0 >= 0 or not math.isfinite(self.n0):
            raise antijam_utilities.InvalidInputError(
                "n0", f"has to be finite and nonnegative, got {self.n0}"
            )

    @classmethod
    def from_es_n0_db(cls, es_n0_db: float, symbol_energy: float) -> NoiseSpec:
        """Noise for an ``Es/N0`` operating point; ``inf`` dB is
        noiseless."""
        if math.isinf(es_n0_db) and es_n0_db > 0:
            return cls.noiseless()
        return cls(
            symbol_energy / antijam_utilities.decibel_to_power_ratio(es_n0_db)
        )

    @classmethod
    def noiseless(cls) -> NoiseSpec:
        return cls(0.0)

    @property
    def is_noiseless(self) -> bool:
        return self.n0 == 0

    def draw(
        self, generator: np.random.Generator, shape: typing.Union[int, tuple[int, ...]]
    ) -> np.ndarray:
        if self.is_noiseless:
            return np.zeros(shape, dtype=complex)
        return antijam_utilities.complex_gaussian(generator, shape, self.n0)
