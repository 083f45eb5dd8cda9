"""Monte Carlo frames and SJR sweeps."""

from __future__ import annotations

import concurrent.futures
import functools
import itertools
import typing

import numpy as np

from mutwo import antijam_converters
from mutwo import antijam_parameters
from mutwo import antijam_utilities
from mutwo import core_converters

__all__ = ("FrameTrace", "FrameSimulator", "SweepConfigToMetricRowTuple")


class FrameTrace(typing.NamedTuple):
    """Everything :class:`FrameSimulator` produces while sending a frame."""

    tx_index_array: np.ndarray
    """Label indices of the information bits, one row per block."""
    channel: antijam_parameters.ChannelRealization
    beams: antijam_parameters.EigenBeams
    evcm_tuple: tuple[antijam_parameters.Evcm, ...]
    tx_sample_array: np.ndarray
    legit_sample_array: np.ndarray
    jam_sample_array: np.ndarray
    received_sample_array: np.ndarray
    redraw_count: int


class FrameSimulator(core_converters.abc.Converter):
    """Send and detect one frame of a sweep configuration.

    :param config: The sweep configuration.
    :type config: mutwo.antijam_parameters.SweepConfig

    Random numbers come from substreams of ``config.seed``: the bits and
    the channel of frame ``f`` from ``("frame", f)``, jammer and noise
    from ``("frame", f, "sjr", sjr_db)``. All SJR points therefore see
    the same channels and bits.

    **Example:**

    >>> import math
    >>> from mutwo import antijam_converters, antijam_parameters
    >>> config = antijam_parameters.SweepConfig(es_n0_db=math.inf)
    >>> antijam_converters.FrameSimulator(config).convert(0, 0)
    TrialRecord(bits=208, bit_errors=0, redraw_count=0)
    """

    def __init__(self, config: antijam_parameters.SweepConfig):
        self._config = config
        self._geometry = geometry = config.frame_geometry
        self._constellation = constellation = config.constellation
        self._amplitude = float(np.sqrt(config.transmit_power))
        self._noise = config.noise

        scheme = config.scheme
        self._symbols_per_block = 4 if scheme.is_rate_two else 2
        self._bits_per_block = self._symbols_per_block * constellation.bits_per_symbol

        slot_count = geometry.slot_count
        if scheme is antijam_parameters.Scheme.RR_MULTI:
            block_tuple = geometry.subcarriers_to_block_tuple(
                config.protected_subcarrier_tuple
            )
            profile = antijam_parameters.PrecoderProfile.multiband(
                slot_count,
                geometry.block_tuple_to_slot_tuple(block_tuple),
                slot_count,
            )
        else:
            profile = antijam_parameters.PrecoderProfile.full(slot_count, slot_count)
        self._profile = profile

        self._bit_array_to_symbol_array = antijam_converters.BitArrayToSymbolArray(
            constellation
        )
        if scheme.is_rate_two:
            self._framer = antijam_converters.SymbolArrayToRate2Frame(config.phi1)
            self._gray_mapping = antijam_converters.SuperSymbolGrayMapping(
                constellation, config.phi1
            )
            self._detector = antijam_converters.ConditionalMlDetector(constellation)
        else:
            self._detector = antijam_converters.AlamoutiDetector(constellation)
        self._precoder = antijam_converters.AntennaStreamsToPrecodedStreams(profile)
        self._decoder = antijam_converters.SpectrumToDecodedSpectrum(profile)
        self._spectrum_to_ofdm_samples = antijam_converters.SpectrumToOfdmSamples(
            geometry.grid, is_full_band=True
        )
        self._ofdm_samples_to_spectrum = antijam_converters.OfdmSamplesToSpectrum(
            geometry.grid, is_full_band=True
        )
        self._channel = antijam_converters.FlatFadingChannel(config.transmit_power)
        self._jammer_synthesizer = antijam_converters.JammerSynthesizer(
            geometry, constellation
        )

    # ###################################################################### #
    #                          private methods                               #
    # ###################################################################### #

    def _draw_link(
        self, generator: np.random.Generator, frame_index: int
    ) -> tuple[
        antijam_parameters.ChannelRealization,
        antijam_parameters.EigenBeams,
        tuple[antijam_parameters.Evcm, ...],
        int,
    ]:
        water_level = self._noise.n0 / self._config.transmit_power
        maximum_redraw_count = (
            antijam_converters.configurations.DEFAULT_MAXIMUM_REDRAW_COUNT
        )
        for redraw_count in range(maximum_redraw_count + 1):
            channel = antijam_parameters.ChannelRealization.draw(generator)
            try:
                beams = antijam_parameters.EigenBeams.from_correlation(
                    channel.transmit_correlation(), noise_power=water_level
                )
            except antijam_utilities.DegenerateChannelError:
                pass
            else:
                evcm_tuple = tuple(
                    antijam_parameters.Evcm.build(channel, beams, antenna)
                    for antenna in range(2)
                )
                if sum(evcm.psi for evcm in evcm_tuple) > 0:
                    return channel, beams, evcm_tuple, redraw_count
            self._logger.warning(
                f"Degenerate channel in frame {frame_index}, drawing a new one."
            )
        raise antijam_utilities.DegenerateChannelError(
            f"{maximum_redraw_count + 1} degenerate draws in a row"
        )

    def _beamform(
        self, symbol_array: np.ndarray, beams: antijam_parameters.EigenBeams
    ) -> antijam_parameters.AntennaStreams:
        if self._config.scheme.is_rate_two:
            code_streams = antijam_parameters.AntennaStreams.from_code_matrix_array(
                self._framer.code_matrix_array(symbol_array)
            )
            precoded = self._precoder.convert(code_streams)
            return antijam_parameters.AntennaStreams.from_code_matrix_array(
                antijam_converters.RateTwoBeamformer(beams).convert(
                    precoded.to_code_matrix_array()
                )
            )
        # ρ scales whole channel uses, so it commutes with the beam loading.
        beamformed = antijam_converters.AlamoutiBeamformer(beams).convert(
            symbol_array.reshape(-1, 2)
        )
        return self._precoder.convert(
            antijam_parameters.AntennaStreams.from_code_matrix_array(beamformed)
        )

    def _usable_block_array(self, decoded: np.ma.MaskedArray) -> np.ndarray:
        block_mask = np.ma.getmaskarray(decoded).reshape(2, -1, 2)
        partial = block_mask.any(axis=(0, 2)) & ~block_mask.all(axis=(0, 2))
        if np.any(partial):
            self._logger.warning(
                antijam_utilities.UnusableSlotAccessWarning(
                    int(np.sum(block_mask[:, partial]))
                )
            )
        return ~block_mask.any(axis=(0, 2))

    # ###################################################################### #
    #                           public methods                               #
    # ###################################################################### #

    @property
    def config(self) -> antijam_parameters.SweepConfig:
        return self._config

    @property
    def profile(self) -> antijam_parameters.PrecoderProfile:
        return self._profile

    @property
    def bits_per_frame(self) -> int:
        """Bits which are compared per frame (only protected blocks count
        with ``rr-multi``)."""
        return len(self._profile.protected_slot_tuple) // 2 * self._bits_per_block

    def transmit(self, sjr_db: float, frame_index: int) -> FrameTrace:
        """Send frame ``frame_index`` through channel, jammer and noise."""
        config, geometry = self._config, self._geometry
        frame_seed = antijam_utilities.StreamSeed(config.seed, ("frame", frame_index))
        frame_generator = antijam_utilities.derive_stream(frame_seed)

        bit_array = frame_generator.integers(
            0, 2, size=geometry.block_count * self._bits_per_block
        )
        channel, beams, evcm_tuple, redraw_count = self._draw_link(
            frame_generator, frame_index
        )
        symbol_array = self._bit_array_to_symbol_array.convert(bit_array)
        if config.scheme.is_rate_two:
            symbol_array = self._gray_mapping.convert(symbol_array)
        tx_streams = self._beamform(symbol_array, beams)
        tx_sample_array = self._spectrum_to_ofdm_samples.convert(
            geometry.slots_to_spectrum(np.stack((tx_streams.s1, tx_streams.s2)))
        ).reshape(2, -1)

        legit_sample_array = self._channel.propagate(tx_sample_array, channel)
        point_generator = antijam_utilities.derive_stream(
            frame_seed.child("sjr", float(sjr_db))
        )
        jam_sample_array = self._jammer_synthesizer.convert(
            config.jammer_at(sjr_db),
            float(np.mean(np.abs(legit_sample_array) ** 2)),
            point_generator,
        )
        received_sample_array = self._channel.convert(
            tx_sample_array, channel, jam_sample_array, self._noise, point_generator
        )
        return FrameTrace(
            self._constellation.bits_to_indices(bit_array).reshape(
                geometry.block_count, self._symbols_per_block
            ),
            channel,
            beams,
            evcm_tuple,
            tx_sample_array,
            legit_sample_array,
            jam_sample_array,
            received_sample_array,
            redraw_count,
        )

    def receive(self, trace: FrameTrace) -> antijam_parameters.TrialRecord:
        """Detect a transmitted frame and count its bit errors."""
        geometry = self._geometry
        spectrum = self._ofdm_samples_to_spectrum.convert(
            trace.received_sample_array.reshape(
                2, geometry.symbol_count, geometry.grid.symbol_length
            )
        )
        decoded = self._decoder.convert(geometry.spectrum_to_slots(spectrum))
        usable = self._usable_block_array(decoded)
        if not np.any(usable):
            return antijam_parameters.TrialRecord(0, 0, trace.redraw_count)

        pair_array = np.ma.getdata(decoded).reshape(2, -1, 2)[:, usable]
        y_pair_list = [
            antijam_parameters.Evcm.stack_received_pair(
                pair_array[antenna, :, 0], pair_array[antenna, :, 1]
            )
            for antenna in range(2)
        ]
        if self._config.scheme.is_rate_two:
            statistic = antijam_parameters.CombinedStatistic.combine(
                [
                    evcm.equalize(y_pair)
                    for evcm, y_pair in zip(trace.evcm_tuple, y_pair_list)
                ],
                [evcm.psi for evcm in trace.evcm_tuple],
            )
            rx_index_array = self._detector.detect_block(
                statistic, self._config.phi1, self._amplitude
            ).index_array
            rx_index_array = self._constellation.slice_array(
                self._gray_mapping.convert(self._constellation.points[rx_index_array])
            )
        else:
            rx_index_array = self._detector.convert(
                y_pair_list, trace.evcm_tuple, self._amplitude
            ).T

        tx_bit_array = self._constellation.indices_to_bits(trace.tx_index_array[usable])
        rx_bit_array = self._constellation.indices_to_bits(rx_index_array)
        return antijam_parameters.TrialRecord(
            int(tx_bit_array.size),
            int(np.count_nonzero(tx_bit_array != rx_bit_array)),
            trace.redraw_count,
        )

    def convert(self, sjr_db: float, frame_index: int) -> antijam_parameters.TrialRecord:
        """Simulate one frame.

        :param sjr_db: Signal to jammer ratio of the frame.
        :param frame_index: Index of the frame within its sweep point.
        """
        return self.receive(self.transmit(sjr_db, frame_index))


@functools.lru_cache(maxsize=8)
def _get_frame_simulator(config: antijam_parameters.SweepConfig) -> FrameSimulator:
    return FrameSimulator(config)


def _simulate_frame(
    config: antijam_parameters.SweepConfig, sjr_db: float, frame_index: int
) -> antijam_parameters.TrialRecord:
    return _get_frame_simulator(config).convert(sjr_db, frame_index)


class SweepConfigToMetricRowTuple(core_converters.abc.Converter):
    """Run a full SJR sweep.

    :param worker_count: Processes which simulate frames. ``None`` takes
        ``config.worker_count``.

    Frames of a sweep point are scheduled in chunks of
    ``config.frame_chunk_size``. Their records are added in frame order
    and the point stops at the first frame where the error count reaches
    ``config.error_target``, so serial and parallel runs give the same
    rows.
    """

    def __init__(self, worker_count: typing.Optional[int] = None):
        if worker_count is not None and worker_count < 1:
            raise antijam_utilities.InvalidConfigurationError(
                "workers", f"has to be positive, got {worker_count}"
            )
        self._worker_count = worker_count

    def _simulate_point(
        self,
        config: antijam_parameters.SweepConfig,
        sjr_db: float,
        executor: typing.Optional[concurrent.futures.Executor],
    ) -> tuple[antijam_parameters.TrialRecord, int, bool]:
        total, frame_count = antijam_parameters.TrialRecord(), 0
        for chunk_start in range(0, config.frames_per_point, config.frame_chunk_size):
            frame_index_range = range(
                chunk_start,
                min(chunk_start + config.frame_chunk_size, config.frames_per_point),
            )
            argument_iterable = (
                itertools.repeat(config),
                itertools.repeat(sjr_db),
                frame_index_range,
            )
            if executor is None:
                record_iterable = map(_simulate_frame, *argument_iterable)
            else:
                record_iterable = executor.map(_simulate_frame, *argument_iterable)
            for record in record_iterable:
                total, frame_count = total + record, frame_count + 1
                if config.error_target and total.bit_errors >= config.error_target:
                    return total, frame_count, True
        return total, frame_count, False

    def convert(
        self, config_to_convert: antijam_parameters.SweepConfig
    ) -> tuple[antijam_parameters.MetricRow, ...]:
        """Simulate every SJR point of ``config_to_convert``.

        :return: One row per SJR point in ascending SJR order.
        """
        config = config_to_convert
        worker_count = self._worker_count or config.worker_count
        executor = (
            concurrent.futures.ProcessPoolExecutor(max_workers=worker_count)
            if worker_count > 1
            else None
        )
        metric_row_list = []
        try:
            for sjr_db in sorted(config.sjr_db_tuple):
                total, frame_count, is_early_stop = self._simulate_point(
                    config, sjr_db, executor
                )
                if total.redraw_count:
                    self._logger.warning(
                        f"SJR {sjr_db} dB: {total.redraw_count} degenerate channel "
                        "draw(s) were replaced."
                    )
                ber = total.bit_errors / total.bits if total.bits else 0.0
                metric_row = antijam_parameters.MetricRow(
                    scheme=config.scheme.value,
                    jammer=config.jammer.kind.value,
                    sjr_db=sjr_db,
                    es_n0_db=config.es_n0_db,
                    frames=frame_count,
                    bits=total.bits,
                    bit_errors=total.bit_errors,
                    rate=config.rate,
                    spectral_efficiency=antijam_converters.spectral_efficiency(
                        config.rate, config.qam_order, ber
                    ),
                    seed=config.seed,
                )
                self._logger.info(
                    f"{config.scheme.value} / {config.jammer.kind.value} at "
                    f"SJR {sjr_db} dB: {frame_count} frame(s), {total.bits} bits, "
                    f"{total.bit_errors} errors"
                    + (" (error target reached)" if is_early_stop else "")
                )
                metric_row_list.append(metric_row)
        finally:
            if executor is not None:
                executor.shutdown()
        return tuple(metric_row_list)
