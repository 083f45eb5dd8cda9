"""OFDM resource grid."""

from __future__ import annotations

import dataclasses
import typing

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities

__all__ = ("OfdmGrid",)


@dataclasses.dataclass(frozen=True)
class OfdmGrid(object):
    """Geometry of one OFDM symbol.

    :param fft_size: Subcarrier count (power of two).
    :param data_index_tuple: FFT bins which carry data, in slot order.
        Defaults to the 52 occupied IEEE802.11a bins.
    :param cp_length: Cyclic prefix length in samples.
    """

    fft_size: int = dataclasses.field(
        default_factory=lambda: antijam_parameters.configurations.DEFAULT_FFT_SIZE
    )
    data_index_tuple: tuple[int, ...] = dataclasses.field(
        default_factory=lambda: antijam_parameters.constants.IEEE80211A_DATA_BIN_TUPLE
    )
    cp_length: int = dataclasses.field(
        default_factory=lambda: antijam_parameters.configurations.DEFAULT_CP_LENGTH
    )

    def __post_init__(self):
        fft_size, data_index_tuple = self.fft_size, tuple(self.data_index_tuple)
        object.__setattr__(self, "data_index_tuple", data_index_tuple)
        if fft_size < 2 or fft_size & (fft_size - 1):
            raise antijam_utilities.InvalidInputError(
                "fft_size", f"has to be a power of two, got {fft_size}"
            )
        if len(set(data_index_tuple)) != len(data_index_tuple):
            raise antijam_utilities.InvalidInputError(
                "data_index_tuple", "indices have to be distinct"
            )
        if not data_index_tuple or any(
            index <= 0 or index >= fft_size for index in data_index_tuple
        ):
            raise antijam_utilities.InvalidInputError(
                "data_index_tuple",
                f"indices have to be within [1, {fft_size - 1}] (DC stays empty)",
            )
        if not 0 <= self.cp_length <= fft_size:
            raise antijam_utilities.InvalidInputError(
                "cp_length", f"has to be within [0, {fft_size}], got {self.cp_length}"
            )

    @property
    def data_count(self) -> int:
        return len(self.data_index_tuple)

    @property
    def symbol_length(self) -> int:
        """Samples of one OFDM symbol including the cyclic prefix."""
        return self.fft_size + self.cp_length

    @property
    def data_index_array(self) -> np.ndarray:
        return np.array(self.data_index_tuple, dtype=np.int64)

    def bin_to_normalized_frequency(self, bin_index: typing.Any) -> np.ndarray:
        """Map FFT bins to normalized frequency in cycles per sample
        (``[-0.5, 0.5)``)."""
        bin_index = np.asarray(bin_index)
        signed = np.where(bin_index >= self.fft_size // 2, bin_index - self.fft_size, bin_index)
        return signed / self.fft_size
