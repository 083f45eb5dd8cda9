"""QAM mapping and OFDM (de)modulation."""

import typing

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities
from mutwo import core_converters

__all__ = ("BitArrayToSymbolArray", "SpectrumToOfdmSamples", "OfdmSamplesToSpectrum")


class BitArrayToSymbolArray(core_converters.abc.Converter):
    """Map bits to points of a Gray labelled QAM alphabet.

    :param constellation: The alphabet.
    :type constellation: mutwo.antijam_parameters.QamConstellation

    **Example:**

    >>> from mutwo import antijam_converters, antijam_parameters
    >>> modulator = antijam_converters.BitArrayToSymbolArray(
    ...     antijam_parameters.QamConstellation(4)
    ... )
    >>> modulator.convert([0, 0, 1, 1]).round(3)
    array([ 0.707+0.707j, -0.707-0.707j])
    """

    def __init__(self, constellation: antijam_parameters.QamConstellation):
        self._constellation = constellation

    @property
    def constellation(self) -> antijam_parameters.QamConstellation:
        return self._constellation

    def convert(self, bit_array_to_convert: typing.Any) -> np.ndarray:
        """Modulate a bit sequence.

        :param bit_array_to_convert: Zeros and ones; the length has to be a
            multiple of ``log2 |Q|``.
        :return: One complex point per bit word.
        """
        return self._constellation.points[
            self._constellation.bits_to_indices(bit_array_to_convert)
        ]


class SpectrumToOfdmSamples(core_converters.abc.Converter):
    """Build time domain OFDM symbols from data subcarrier values.

    :param grid: Geometry of the OFDM symbol.
    :param is_full_band: If ``True`` the input already covers all
        ``fft_size`` bins (used for wideband test signals), otherwise it
        covers the data bins of ``grid`` only.
    """

    def __init__(
        self,
        grid: typing.Optional[antijam_parameters.OfdmGrid] = None,
        is_full_band: bool = False,
    ):
        self._grid = grid or antijam_parameters.OfdmGrid()
        self._is_full_band = is_full_band

    def convert(self, spectrum_to_convert: typing.Any) -> np.ndarray:
        """Modulate one or many OFDM symbols.

        :param spectrum_to_convert: Values with shape ``(..., 52)`` (one
            value per data subcarrier in slot order) or ``(..., 64)`` for
            full band input.
        :return: Samples with shape ``(..., fft_size + cp_length)``. The
            cyclic prefix repeats the last ``cp_length`` samples.
        """
        grid = self._grid
        spectrum = np.asarray(spectrum_to_convert, dtype=complex)
        expected_length = grid.fft_size if self._is_full_band else grid.data_count
        if spectrum.ndim == 0 or spectrum.shape[-1] != expected_length:
            raise antijam_utilities.InvalidInputError(
                "spectrum_to_convert",
                f"expected {expected_length} values per symbol, got shape "
                f"{spectrum.shape}",
            )
        if self._is_full_band:
            full_spectrum = spectrum
        else:
            full_spectrum = np.zeros(spectrum.shape[:-1] + (grid.fft_size,), complex)
            full_spectrum[..., grid.data_index_array] = spectrum
        body = antijam_utilities.dft(full_spectrum, inverse=True)
        return np.concatenate(
            (body[..., grid.fft_size - grid.cp_length :], body), axis=-1
        )


class OfdmSamplesToSpectrum(core_converters.abc.Converter):
    """Remove the cyclic prefix and read the data subcarriers.

    :param grid: Geometry of the OFDM symbol.
    :param is_full_band: Return all ``fft_size`` bins instead of the data
        bins.
    """

    def __init__(
        self,
        grid: typing.Optional[antijam_parameters.OfdmGrid] = None,
        is_full_band: bool = False,
    ):
        self._grid = grid or antijam_parameters.OfdmGrid()
        self._is_full_band = is_full_band

    def convert(self, sample_array_to_convert: typing.Any) -> np.ndarray:
        """Demodulate one or many OFDM symbols.

        :param sample_array_to_convert: Samples with shape
            ``(..., fft_size + cp_length)``.
        """
        grid = self._grid
        samples = np.asarray(sample_array_to_convert, dtype=complex)
        if samples.ndim == 0 or samples.shape[-1] != grid.symbol_length:
            raise antijam_utilities.InvalidInputError(
                "sample_array_to_convert",
                f"expected {grid.symbol_length} samples per symbol, got shape "
                f"{samples.shape}",
            )
        spectrum = antijam_utilities.dft(samples[..., grid.cp_length :])
        if self._is_full_band:
            return spectrum
        return spectrum[..., grid.data_index_array]
