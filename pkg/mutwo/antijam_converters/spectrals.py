"""Power spectral density estimates of simulated waveforms."""

import csv
import enum
import io
import pathlib
import typing

import numpy as np
from scipy import signal

from mutwo import antijam_converters
from mutwo import antijam_parameters
from mutwo import antijam_utilities
from mutwo import core_converters

__all__ = (
    "SignalComponent",
    "SampleArrayToPsdEstimate",
    "SweepConfigToPsdEstimate",
    "PsdEstimateToCsv",
)


class SignalComponent(enum.Enum):
    RECEIVED = "received"
    LEGIT = "legit"
    JAMMER = "jammer"


class SampleArrayToPsdEstimate(core_converters.abc.Converter):
    """Averaged periodogram (Welch) of complex baseband samples.

    :param segment_length: Samples per segment, which is also the number
        of frequency bins. Segments overlap by one half and are tapered
        with a Hann window.

    The density is two sided, ordered from ``-0.5`` to ``0.5`` cycles per
    sample and given in dB relative to its mean.

    **Example:**

    >>> import numpy as np
    >>> from mutwo import antijam_converters
    >>> tone = np.exp(2j * np.pi * 0.25 * np.arange(4096))
    >>> psd = antijam_converters.SampleArrayToPsdEstimate(64).convert(tone)
    >>> float(psd.frequency_array[np.argmax(psd.density_db_array)])
    0.25
    """

    def __init__(self, segment_length: typing.Optional[int] = None):
        if segment_length is None:
            segment_length = antijam_converters.configurations.DEFAULT_PSD_SEGMENT_LENGTH
        if segment_length < 2:
            raise antijam_utilities.InvalidInputError(
                "segment_length", f"has to be at least 2, got {segment_length}"
            )
        self._segment_length = segment_length

    def convert(self, sample_array_to_convert: typing.Any) -> antijam_parameters.PsdEstimate:
        """Estimate the density of a complex sample sequence.

        :raises antijam_utilities.InvalidInputError: If there are fewer
            samples than one segment or if the samples carry no power.
        """
        sample_array = np.asarray(sample_array_to_convert, dtype=complex).ravel()
        if sample_array.size < self._segment_length:
            raise antijam_utilities.InvalidInputError(
                "sample_array_to_convert",
                f"{sample_array.size} samples are shorter than one segment "
                f"({self._segment_length})",
            )
        frequency_array, density_array = signal.welch(
            sample_array,
            fs=1.0,
            window="hann",
            nperseg=self._segment_length,
            noverlap=self._segment_length // 2,
            detrend=False,
            return_onesided=False,
            scaling="density",
        )
        mean_density = float(np.mean(density_array))
        if not mean_density > 0:
            raise antijam_utilities.InvalidInputError(
                "sample_array_to_convert", "samples carry no power"
            )
        density_array = np.maximum(density_array, np.finfo(float).tiny)
        return antijam_parameters.PsdEstimate(
            np.fft.fftshift(frequency_array),
            np.fft.fftshift(10 * np.log10(density_array / mean_density)),
        )


class SweepConfigToPsdEstimate(core_converters.abc.Converter):
    """Simulate frames and estimate the density of one signal component.

    :param component: ``received`` (legitimate signal, jammer and noise),
        ``legit`` or ``jammer``.
    :param antenna: Receive antenna whose samples are analysed.
    :param frame_count: Frames whose samples are concatenated.
    :param segment_length: See :class:`SampleArrayToPsdEstimate`.
    """

    def __init__(
        self,
        component: typing.Union[SignalComponent, str] = SignalComponent.RECEIVED,
        antenna: int = 0,
        frame_count: typing.Optional[int] = None,
        segment_length: typing.Optional[int] = None,
    ):
        if frame_count is None:
            frame_count = antijam_converters.configurations.DEFAULT_PSD_FRAME_COUNT
        if frame_count < 1:
            raise antijam_utilities.InvalidInputError(
                "frame_count", f"has to be positive, got {frame_count}"
            )
        if antenna not in (0, 1):
            raise antijam_utilities.InvalidInputError(
                "antenna", f"has to be 0 or 1, got {antenna}"
            )
        self._component = SignalComponent(component)
        self._antenna = antenna
        self._frame_count = frame_count
        self._sample_array_to_psd_estimate = SampleArrayToPsdEstimate(segment_length)

    def convert(
        self, config_to_convert: antijam_parameters.SweepConfig, sjr_db: float
    ) -> antijam_parameters.PsdEstimate:
        frame_simulator = antijam_converters.FrameSimulator(config_to_convert)
        sample_array_list = []
        for frame_index in range(self._frame_count):
            trace = frame_simulator.transmit(sjr_db, frame_index)
            match self._component:
                case SignalComponent.RECEIVED:
                    sample_array = trace.received_sample_array
                case SignalComponent.LEGIT:
                    sample_array = trace.legit_sample_array
                case SignalComponent.JAMMER:
                    sample_array = trace.jam_sample_array
            sample_array_list.append(sample_array[self._antenna])
        return self._sample_array_to_psd_estimate.convert(
            np.concatenate(sample_array_list)
        )


class PsdEstimateToCsv(core_converters.abc.Converter):
    """Write a density estimate as ``freq_norm,psd_db`` lines."""

    def convert(
        self,
        psd_estimate_to_convert: antijam_parameters.PsdEstimate,
        destination: typing.Optional[typing.Union[str, pathlib.Path]] = None,
    ) -> str:
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(antijam_parameters.constants.PSD_CSV_HEADER_TUPLE)
        for frequency, density_db in zip(
            psd_estimate_to_convert.frequency_array,
            psd_estimate_to_convert.density_db_array,
        ):
            writer.writerow((repr(float(frequency)), repr(float(density_db))))
        text = stream.getvalue()
        if destination is not None:
            pathlib.Path(destination).write_text(text, encoding="utf-8")
        return text
