"""Sweep description and Monte Carlo results."""

from __future__ import annotations

import dataclasses
import enum
import functools
import math
import typing

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities

__all__ = (
    "Scheme",
    "ResourceMapping",
    "FrameGeometry",
    "SweepConfig",
    "TrialRecord",
    "MetricRow",
    "PsdEstimate",
)


class Scheme(enum.Enum):
    RR_FULL = "rr-full"
    RR_MULTI = "rr-multi"
    ALAMOUTI_BF = "alamouti-bf"

    @property
    def is_rate_two(self) -> bool:
        return self is not Scheme.ALAMOUTI_BF

    @property
    def rate(self) -> int:
        if self.is_rate_two:
            return antijam_parameters.constants.RATE_TWO_SYMBOL_RATE
        return antijam_parameters.constants.ALAMOUTI_SYMBOL_RATE

    @property
    def default_qam_order(self) -> int:
        if self.is_rate_two:
            return antijam_parameters.configurations.DEFAULT_RATE_TWO_QAM_ORDER
        return antijam_parameters.configurations.DEFAULT_ALAMOUTI_QAM_ORDER


class ResourceMapping(enum.Enum):
    SF_PAIRS = "sf-pairs"
    TIME_SLOTS = "time-slots"


@dataclasses.dataclass(frozen=True)
class FrameGeometry(object):
    """Placement of code slots on OFDM resources.

    :param mapping: :class:`ResourceMapping`.
    :param grid: :class:`mutwo.antijam_parameters.OfdmGrid`.

    Slot ``2b + t`` is channel use ``t`` of block ``b``. With ``sf-pairs``
    a frame is one OFDM symbol and slot ``k`` sits on data subcarrier
    ``k``. With ``time-slots`` a frame is two OFDM symbols and slot
    ``2b + t`` sits on data subcarrier ``b`` of symbol ``t``.
    """

    mapping: ResourceMapping = ResourceMapping.SF_PAIRS
    grid: antijam_parameters.OfdmGrid = dataclasses.field(
        default_factory=lambda: antijam_parameters.OfdmGrid()
    )

    def __post_init__(self):
        object.__setattr__(self, "mapping", ResourceMapping(self.mapping))
        if self.mapping is ResourceMapping.SF_PAIRS and self.grid.data_count % 2:
            raise antijam_utilities.InvalidInputError(
                "grid", "sf-pairs mapping needs an even data subcarrier count"
            )

    @property
    def symbol_count(self) -> int:
        """OFDM symbols per antenna and frame."""
        return 1 if self.mapping is ResourceMapping.SF_PAIRS else 2

    @property
    def slot_count(self) -> int:
        return self.grid.data_count * self.symbol_count

    @property
    def block_count(self) -> int:
        return self.slot_count // 2

    @property
    def sample_count(self) -> int:
        """Time samples per antenna and frame."""
        return self.symbol_count * self.grid.symbol_length

    @property
    def slot_symbol_array(self) -> np.ndarray:
        """OFDM symbol of each slot."""
        slot = np.arange(self.slot_count)
        if self.mapping is ResourceMapping.SF_PAIRS:
            return np.zeros(self.slot_count, dtype=np.int64)
        return slot % 2

    @property
    def slot_subcarrier_array(self) -> np.ndarray:
        """Data subcarrier (0-based slot order of the grid) of each slot."""
        slot = np.arange(self.slot_count)
        if self.mapping is ResourceMapping.SF_PAIRS:
            return slot
        return slot // 2

    def slots_to_spectrum(self, slot_array: typing.Any) -> np.ndarray:
        """Place slot values with shape ``(..., slot_count)`` on an OFDM
        spectrum with shape ``(..., symbol_count, fft_size)``."""
        slot_array = np.asarray(slot_array, dtype=complex)
        spectrum = np.zeros(
            slot_array.shape[:-1] + (self.symbol_count, self.grid.fft_size),
            dtype=complex,
        )
        spectrum[
            ...,
            self.slot_symbol_array,
            self.grid.data_index_array[self.slot_subcarrier_array],
        ] = slot_array
        return spectrum

    def spectrum_to_slots(self, spectrum: typing.Any) -> np.ndarray:
        """Inverse of :meth:`slots_to_spectrum`."""
        spectrum = np.asarray(spectrum, dtype=complex)
        return spectrum[
            ...,
            self.slot_symbol_array,
            self.grid.data_index_array[self.slot_subcarrier_array],
        ]

    def subcarriers_to_block_tuple(
        self, subcarrier_sequence: typing.Iterable[int]
    ) -> tuple[int, ...]:
        """Blocks with at least one slot on the given data subcarriers."""
        subcarrier_set = set(subcarrier_sequence)
        if subcarrier_set and (
            min(subcarrier_set) < 0 or max(subcarrier_set) >= self.grid.data_count
        ):
            raise antijam_utilities.InvalidInputError(
                "subcarrier_sequence",
                f"data subcarriers have to be within [0, {self.grid.data_count - 1}]",
            )
        hit = np.isin(self.slot_subcarrier_array, tuple(subcarrier_set))
        return tuple(int(block) for block in np.unique(np.flatnonzero(hit) // 2))

    @staticmethod
    def block_tuple_to_slot_tuple(block_tuple: typing.Iterable[int]) -> tuple[int, ...]:
        return tuple(slot for block in block_tuple for slot in (2 * block, 2 * block + 1))


def _enum_value(enum_class: type[enum.Enum], key: str, value: typing.Any):
    try:
        return enum_class(value)
    except ValueError:
        raise antijam_utilities.InvalidConfigurationError(
            key,
            f"'{value}' is none of {', '.join(member.value for member in enum_class)}",
        )


@dataclasses.dataclass(frozen=True)
class SweepConfig(object):
    """Everything which defines a reproducible SJR sweep.

    :param scheme: :class:`Scheme` (or its string value).
    :param jammer: Jammer template; its ``sjr_db`` is replaced by the
        sweep points.
    :param sjr_db_tuple: Signal to jammer ratios in dB.
    :param es_n0_db: Noise operating point, ``inf`` is noiseless.
    :param qam_order: Constellation size, ``None`` picks the scheme
        default (4 for rate-2 schemes, 16 for the benchmark).
    :param frames_per_point: Maximal frame count per SJR point.
    :param phi1: Rate-2 rotation angle, ``None`` takes the table value
        :const:`mutwo.antijam_parameters.configurations.DEFAULT_QAM_ORDER_TO_PHI1_DICT`.
    :param mapping: :class:`ResourceMapping`.
    :param grid: OFDM grid.
    :param seed: Root seed (reduced to 64 bit).
    :param jammed_slot_tuple: Data subcarriers protected by ``rr-multi``.
        Empty means the jammed set of a multi-band jammer (genie
        knowledge).
    :param error_target: Early stop threshold, 0 disables early stopping.
    :param transmit_power: ``P`` of ``Y = √P·B·H + J + N``.
    :param worker_count: Processes of the sweep engine.
    :param frame_chunk_size: Frames scheduled between two early stop
        checks.
    :raises antijam_utilities.InvalidConfigurationError: For any
        inconsistent value.
    """

    scheme: Scheme = Scheme.RR_FULL
    jammer: antijam_parameters.JammerSpec = dataclasses.field(
        default_factory=lambda: antijam_parameters.JammerSpec()
    )
    sjr_db_tuple: tuple[float, ...] = (0.0,)
    es_n0_db: float = dataclasses.field(
        default_factory=lambda: antijam_parameters.configurations.DEFAULT_ES_N0_DB
    )
    qam_order: typing.Optional[int] = None
    frames_per_point: int = dataclasses.field(
        default_factory=lambda: antijam_parameters.configurations.DEFAULT_FRAMES_PER_POINT
    )
    phi1: typing.Optional[float] = None
    mapping: ResourceMapping = dataclasses.field(
        default_factory=lambda: ResourceMapping(
            antijam_parameters.configurations.DEFAULT_MAPPING
        )
    )
    grid: antijam_parameters.OfdmGrid = dataclasses.field(
        default_factory=lambda: antijam_parameters.OfdmGrid()
    )
    seed: int = dataclasses.field(
        default_factory=lambda: antijam_parameters.configurations.DEFAULT_SEED
    )
    jammed_slot_tuple: tuple[int, ...] = ()
    error_target: int = dataclasses.field(
        default_factory=lambda: antijam_parameters.configurations.DEFAULT_ERROR_TARGET
    )
    transmit_power: float = dataclasses.field(
        default_factory=lambda: antijam_parameters.configurations.DEFAULT_TRANSMIT_POWER
    )
    worker_count: int = dataclasses.field(
        default_factory=lambda: antijam_parameters.configurations.DEFAULT_WORKER_COUNT
    )
    frame_chunk_size: int = dataclasses.field(
        default_factory=lambda: antijam_parameters.configurations.DEFAULT_FRAME_CHUNK_SIZE
    )

    def __post_init__(self):
        setattr_ = functools.partial(object.__setattr__, self)
        setattr_("scheme", _enum_value(Scheme, "scheme", self.scheme))
        setattr_("mapping", _enum_value(ResourceMapping, "mapping", self.mapping))
        setattr_("sjr_db_tuple", tuple(float(sjr) for sjr in self.sjr_db_tuple))
        setattr_(
            "jammed_slot_tuple",
            tuple(sorted(set(int(slot) for slot in self.jammed_slot_tuple))),
        )
        if self.qam_order is None:
            setattr_("qam_order", self.scheme.default_qam_order)
        if self.phi1 is None:
            try:
                setattr_(
                    "phi1",
                    antijam_parameters.configurations.DEFAULT_QAM_ORDER_TO_PHI1_DICT[
                        self.qam_order
                    ],
                )
            except KeyError:
                pass

        if not self.sjr_db_tuple:
            raise antijam_utilities.InvalidConfigurationError(
                "sjr points", "at least one SJR point is needed"
            )
        for sjr in self.sjr_db_tuple:
            # +inf is the jam free point, -inf has no finite jam power.
            if math.isnan(sjr) or sjr == -math.inf:
                raise antijam_utilities.InvalidConfigurationError(
                    "sjr points", f"has to be a number or inf, got {sjr}"
                )
        if math.isnan(self.es_n0_db) or self.es_n0_db == -math.inf:
            raise antijam_utilities.InvalidConfigurationError(
                "esn0", f"has to be a number or inf, got {self.es_n0_db}"
            )
        if self.qam_order not in antijam_parameters.constants.SUPPORTED_QAM_ORDER_TUPLE:
            raise antijam_utilities.InvalidConfigurationError(
                "constellation", f"unsupported order {self.qam_order}"
            )
        if self.frames_per_point < 1:
            raise antijam_utilities.InvalidConfigurationError(
                "frames", f"has to be at least 1, got {self.frames_per_point}"
            )
        if self.phi1 is None or not 0 < self.phi1 < math.pi / 2:
            raise antijam_utilities.InvalidConfigurationError(
                "phi1", f"has to be within (0, π/2), got {self.phi1}"
            )
        if self.error_target < 0:
            raise antijam_utilities.InvalidConfigurationError(
                "error target", "has to be nonnegative"
            )
        if not self.transmit_power > 0 or not math.isfinite(self.transmit_power):
            raise antijam_utilities.InvalidConfigurationError(
                "transmit power", f"has to be positive, got {self.transmit_power}"
            )
        if self.worker_count < 1 or self.frame_chunk_size < 1:
            raise antijam_utilities.InvalidConfigurationError(
                "workers", "worker count and chunk size have to be positive"
            )
        if not 0 <= self.seed:
            raise antijam_utilities.InvalidConfigurationError(
                "seed", f"has to be a nonnegative integer, got {self.seed}"
            )
        for slot_tuple in (self.jammed_slot_tuple, self.jammer.jammed_slot_tuple):
            if slot_tuple and (
                slot_tuple[0] < 0 or slot_tuple[-1] >= self.grid.data_count
            ):
                raise antijam_utilities.InvalidConfigurationError(
                    "jammed slots",
                    f"data subcarriers have to be within [0, {self.grid.data_count - 1}]",
                )
        if self.scheme is Scheme.RR_MULTI and not self.protected_subcarrier_tuple:
            raise antijam_utilities.InvalidConfigurationError(
                "jammed slots", "rr-multi needs a jammed subcarrier set"
            )
        try:
            self.frame_geometry
        except antijam_utilities.InvalidInputError as error:
            raise antijam_utilities.InvalidConfigurationError("mapping", str(error))

    @staticmethod
    def make_sjr_tuple(start: float, stop: float, step: float) -> tuple[float, ...]:
        """Inclusive SJR grid ``start, start + step, …, stop``.

        **Example:**

        >>> from mutwo import antijam_parameters
        >>> antijam_parameters.SweepConfig.make_sjr_tuple(-10, 10, 10)
        (-10.0, 0.0, 10.0)
        """
        for key, value in (("sjr start", start), ("sjr stop", stop), ("sjr step", step)):
            if not math.isfinite(value):
                raise antijam_utilities.InvalidConfigurationError(
                    key, f"has to be finite, got {value}"
                )
        if not step > 0:
            raise antijam_utilities.InvalidConfigurationError(
                "sjr step", f"has to be positive, got {step}"
            )
        if stop < start:
            raise antijam_utilities.InvalidConfigurationError(
                "sjr stop", f"{stop} is below the start {start}"
            )
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        return tuple(float(start + index * step) for index in range(count))

    @property
    def protected_subcarrier_tuple(self) -> tuple[int, ...]:
        return self.jammed_slot_tuple or self.jammer.jammed_slot_tuple

    @property
    def frame_geometry(self) -> FrameGeometry:
        return FrameGeometry(self.mapping, self.grid)

    @property
    def constellation(self) -> antijam_parameters.QamConstellation:
        return antijam_parameters.QamConstellation(self.qam_order)

    @property
    def noise(self) -> antijam_parameters.NoiseSpec:
        return antijam_parameters.NoiseSpec.from_es_n0_db(
            self.es_n0_db, self.symbol_energy
        )

    @property
    def symbol_energy(self) -> float:
        """Received energy per subcarrier and antenna ``Es``."""
        return (
            self.transmit_power
            * antijam_parameters.configurations.DEFAULT_BEAM_POWER_BUDGET
        )

    @property
    def rate(self) -> int:
        return self.scheme.rate

    def jammer_at(self, sjr_db: float) -> antijam_parameters.JammerSpec:
        return self.jammer.with_sjr(sjr_db)


@dataclasses.dataclass(frozen=True)
class TrialRecord(object):
    """Outcome of one frame.

    :param bits: Compared information bits.
    :param bit_errors: Wrong bits.
    :param redraw_count: Degenerate channel draws that were rejected.
    """

    bits: int = 0
    bit_errors: int = 0
    redraw_count: int = 0

    def __add__(self, other: TrialRecord) -> TrialRecord:
        return TrialRecord(
            self.bits + other.bits,
            self.bit_errors + other.bit_errors,
            self.redraw_count + other.redraw_count,
        )


@dataclasses.dataclass(frozen=True)
class MetricRow(object):
    """One line of a sweep result.

    ``ber`` is derived from the counts, so it can never disagree with
    them.
    """

    scheme: str
    jammer: str
    sjr_db: float
    es_n0_db: float
    frames: int
    bits: int
    bit_errors: int
    rate: float
    spectral_efficiency: float
    seed: int

    def __post_init__(self):
        if self.bits < 0 or not 0 <= self.bit_errors <= max(self.bits, 0):
            raise antijam_utilities.InvalidInputError(
                "bit_errors", f"{self.bit_errors} errors in {self.bits} bits"
            )

    @property
    def ber(self) -> float:
        if self.bits == 0:
            return 0.0
        return self.bit_errors / self.bits


@dataclasses.dataclass(frozen=True, eq=False)
class PsdEstimate(object):
    """Power spectral density on a normalized frequency axis.

    :param frequency_array: Bin centres in cycles per sample, ascending
        within ``[-0.5, 0.5)``.
    :param density_db_array: Density in dB relative to its mean.
    """

    frequency_array: np.ndarray
    density_db_array: np.ndarray

    def __post_init__(self):
        frequency_array = np.asarray(self.frequency_array, dtype=float)
        density_db_array = np.asarray(self.density_db_array, dtype=float)
        if frequency_array.shape != density_db_array.shape:
            raise antijam_utilities.InvalidInputError(
                "density_db_array", "needs one value per frequency bin"
            )
        if not np.all(np.isfinite(density_db_array)):
            raise antijam_utilities.InvalidInputError(
                "density_db_array", "densities have to be finite"
            )
        object.__setattr__(self, "frequency_array", frequency_array)
        object.__setattr__(self, "density_db_array", density_db_array)

    def __len__(self) -> int:
        return self.frequency_array.size

    def band_mean_db(self, low: float, high: float) -> float:
        """Mean density (dB of mean linear power) within ``[low, high)``."""
        inside = (self.frequency_array >= low) & (self.frequency_array < high)
        if not np.any(inside):
            raise antijam_utilities.InvalidInputError(
                "band", f"no bin within [{low}, {high})"
            )
        return float(10 * np.log10(np.mean(10 ** (self.density_db_array[inside] / 10))))
