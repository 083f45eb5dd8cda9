"""Jamming waveforms and the flat fading propagation of a frame."""

import typing

import numpy as np

from mutwo import antijam_converters
from mutwo import antijam_parameters
from mutwo import antijam_utilities
from mutwo import core_converters

__all__ = ("JammerSynthesizer", "FlatFadingChannel")


class JammerSynthesizer(core_converters.abc.Converter):
    """Generate the jamming samples of one frame at both receive antennas.

    :param geometry: Frame geometry of the legitimate link. Disguised
        jammers use the same OFDM grid and are aligned to its symbols.
    :param constellation: Alphabet of disguised jammers (the one of the
        legitimate link).

    Disguised jammers (``all-band`` and ``multi-band``) put independent
    uniformly drawn constellation points on all data subcarriers or on
    the jammed data subcarriers. The barrage jammer sends white complex
    Gaussian samples which cover all ``fft_size`` bins including DC and
    the guard band.
    """

    def __init__(
        self,
        geometry: antijam_parameters.FrameGeometry,
        constellation: antijam_parameters.QamConstellation,
    ):
        self._geometry = geometry
        self._constellation = constellation
        self._spectrum_to_ofdm_samples = antijam_converters.SpectrumToOfdmSamples(
            geometry.grid
        )

    def _waveform(
        self, jammer: antijam_parameters.JammerSpec, generator: np.random.Generator
    ) -> np.ndarray:
        grid, symbol_count = self._geometry.grid, self._geometry.symbol_count
        if jammer.kind is antijam_parameters.JammerKind.BARRAGE:
            return antijam_utilities.complex_gaussian(
                generator, self._geometry.sample_count
            )
        index = generator.integers(
            0, self._constellation.order, size=(symbol_count, grid.data_count)
        )
        spectrum = self._constellation.points[index]
        if jammer.kind is antijam_parameters.JammerKind.MULTI_BAND:
            silent = np.ones(grid.data_count, dtype=bool)
            silent[list(jammer.jammed_slot_tuple)] = False
            spectrum[:, silent] = 0
        return self._spectrum_to_ofdm_samples.convert(spectrum).ravel()

    def convert(
        self,
        jammer_to_convert: antijam_parameters.JammerSpec,
        signal_power_reference: float,
        generator: np.random.Generator,
    ) -> np.ndarray:
        """Synthesize and calibrate jamming samples.

        :param jammer_to_convert: Jammer kind, path and target SJR.
        :param signal_power_reference: Mean power of the legitimate
            received samples (both antennas).
        :param generator: Random generator of the frame.
        :return: Array with shape ``(2, sample_count)`` whose mean power
            is ``signal_power_reference · 10^(−sjr_db/10)``.
        """
        sample_count = self._geometry.sample_count
        jammer = jammer_to_convert
        if not jammer.is_active or jammer.sjr_db == np.inf:
            return np.zeros((2, sample_count), dtype=complex)
        if not signal_power_reference > 0:
            raise antijam_utilities.InvalidInputError(
                "signal_power_reference",
                f"has to be positive, got {signal_power_reference}",
            )
        if (
            jammer.kind is antijam_parameters.JammerKind.MULTI_BAND
            and jammer.jammed_slot_tuple[-1] >= self._geometry.grid.data_count
        ):
            raise antijam_utilities.InvalidInputError(
                "jammed_slot_tuple", "jammed slot outside of the data subcarriers"
            )

        if jammer.path is antijam_parameters.JammerPath.FADED:
            waveform = self._waveform(jammer, generator)
            gain = antijam_utilities.complex_gaussian(generator, 2)
            jam = gain[:, np.newaxis] * waveform
        else:
            jam = np.stack(
                [self._waveform(jammer, generator) for _ in range(2)]
            )

        measured_power = float(np.mean(np.abs(jam) ** 2))
        target_power = signal_power_reference / antijam_utilities.decibel_to_power_ratio(
            jammer.sjr_db
        )
        if measured_power == 0:
            raise antijam_utilities.DegenerateChannelError(
                "the jammer channel has zero gain"
            )
        return jam * np.sqrt(target_power / measured_power)


class FlatFadingChannel(core_converters.abc.Converter):
    """Received samples ``y_rx = Σ_tx √P·h[tx, rx]·x_tx + j_rx + n_rx``.

    :param transmit_power: ``P``.

    The channel is frequency flat and constant over the frame, each
    antenna pair multiplies the samples by one complex gain.
    """

    def __init__(self, transmit_power: typing.Optional[float] = None):
        if transmit_power is None:
            transmit_power = antijam_parameters.configurations.DEFAULT_TRANSMIT_POWER
        if not transmit_power > 0:
            raise antijam_utilities.InvalidInputError(
                "transmit_power", f"has to be positive, got {transmit_power}"
            )
        self._amplitude = float(np.sqrt(transmit_power))

    @staticmethod
    def _as_sample_array(sample_array: typing.Any, name: str) -> np.ndarray:
        try:
            sample_array = np.asarray(sample_array, dtype=complex)
        except ValueError:
            raise antijam_utilities.InvalidInputError(
                name, "sample lengths differ across antennas"
            )
        if sample_array.ndim != 2 or sample_array.shape[0] != 2:
            raise antijam_utilities.InvalidInputError(
                name, f"expected two equally long sample rows, got {sample_array.shape}"
            )
        return sample_array

    def propagate(
        self,
        tx_sample_array: typing.Any,
        channel: antijam_parameters.ChannelRealization,
    ) -> np.ndarray:
        """Noise and jam free part ``√P·H^T·x`` (rows = receive antennas)."""
        tx_sample_array = FlatFadingChannel._as_sample_array(
            tx_sample_array, "tx_sample_array"
        )
        return self._amplitude * (channel.h.T @ tx_sample_array)

    def convert(
        self,
        tx_sample_array_to_convert: typing.Any,
        channel: antijam_parameters.ChannelRealization,
        jam_sample_array: typing.Optional[typing.Any] = None,
        noise: typing.Optional[antijam_parameters.NoiseSpec] = None,
        generator: typing.Optional[np.random.Generator] = None,
    ) -> np.ndarray:
        """Propagate a frame.

        :param tx_sample_array_to_convert: Samples with shape ``(2, L)``
            (rows = transmit antennas).
        :param channel: Channel realization of the frame.
        :param jam_sample_array: Jamming samples ``(2, L)`` at the receive
            antennas or ``None``.
        :param noise: Noise level or ``None`` for no noise.
        :param generator: Random generator for the noise (needed unless
            the noise is off).
        :return: Received samples ``(2, L)`` (rows = receive antennas).
        """
        received = self.propagate(tx_sample_array_to_convert, channel)
        if jam_sample_array is not None:
            jam_sample_array = FlatFadingChannel._as_sample_array(
                jam_sample_array, "jam_sample_array"
            )
            if jam_sample_array.shape != received.shape:
                raise antijam_utilities.InvalidInputError(
                    "jam_sample_array",
                    f"shape {jam_sample_array.shape} != {received.shape}",
                )
            received = received + jam_sample_array
        if noise is not None and not noise.is_noiseless:
            if generator is None:
                raise antijam_utilities.InvalidInputError(
                    "generator", "noise needs a random generator"
                )
            received = received + noise.draw(generator, received.shape)
        return received
