"""Gray coded quadrature amplitude modulation alphabets."""

from __future__ import annotations

import typing

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities

__all__ = ("QamConstellation",)


class QamConstellation(object):
    """Square QAM alphabet with unit average energy and Gray labels.

    :param order: Number of points ``|Q|`` (4, 16 or 64).
    :type order: int

    Point ``k`` carries the bit word of the integer ``k`` (most
    significant bit first). The first half of the word selects the
    in-phase level, the second half the quadrature level. Along each axis
    the word is Gray decoded to a level position counted from the largest
    positive amplitude, so that neighbouring points differ in exactly one
    bit. With 4-QAM the bits ``00`` map to ``(1+1j)/√2``, ``01`` to
    ``(1-1j)/√2``, ``10`` to ``(-1+1j)/√2`` and ``11`` to ``(-1-1j)/√2``.

    **Example:**

    >>> from mutwo import antijam_parameters
    >>> q = antijam_parameters.QamConstellation(4)
    >>> q.slice(0.9 + 0.8j)
    (0, (0, 0))
    """

    def __init__(self, order: int):
        if order not in antijam_parameters.constants.SUPPORTED_QAM_ORDER_TUPLE:
            raise antijam_utilities.InvalidInputError(
                "order",
                "supported QAM orders are "
                f"{antijam_parameters.constants.SUPPORTED_QAM_ORDER_TUPLE}, got {order}",
            )
        self._order = order
        self._bits_per_symbol = int(order).bit_length() - 1

        bits_per_axis = self._bits_per_symbol // 2
        level_count = 2**bits_per_axis
        position = QamConstellation._gray_to_binary(np.arange(level_count))
        amplitude = (level_count - 1) - 2 * position

        index = np.arange(order)
        points = amplitude[index >> bits_per_axis] + 1j * amplitude[
            index & (level_count - 1)
        ]
        self._points = points / np.sqrt(np.mean(np.abs(points) ** 2))
        self._points.setflags(write=False)

        self._level_array = np.stack(
            (amplitude[index >> bits_per_axis], amplitude[index & (level_count - 1)]),
            axis=-1,
        )
        self._level_array.setflags(write=False)

        shift = np.arange(self._bits_per_symbol - 1, -1, -1)
        self._bit_matrix = ((index[:, np.newaxis] >> shift) & 1).astype(np.uint8)
        self._bit_matrix.setflags(write=False)
        self._bit_weights = 2**shift

    # ###################################################################### #
    #                          static methods                                #
    # ###################################################################### #

    @staticmethod
    def _gray_to_binary(word: np.ndarray) -> np.ndarray:
        position = word.copy()
        shifted = word >> 1
        while np.any(shifted):
            position ^= shifted
            shifted >>= 1
        return position

    # ###################################################################### #
    #                          magic methods                                 #
    # ###################################################################### #

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.order})"

    def __eq__(self, other: typing.Any) -> bool:
        return isinstance(other, QamConstellation) and other.order == self.order

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.order))

    def __len__(self) -> int:
        return self.order

    # ###################################################################### #
    #                             properties                                 #
    # ###################################################################### #

    @property
    def order(self) -> int:
        return self._order

    @property
    def bits_per_symbol(self) -> int:
        return self._bits_per_symbol

    @property
    def points(self) -> np.ndarray:
        """Complex points, indexed by their label value."""
        return self._points

    @property
    def level_count(self) -> int:
        """Amplitude levels per axis (``√order``)."""
        return 2 ** (self._bits_per_symbol // 2)

    @property
    def level_array(self) -> np.ndarray:
        """Integer amplitude levels of each point, shape ``(order, 2)``
        with columns in-phase and quadrature. The levels are the odd
        numbers from ``1 − level_count`` to ``level_count − 1``."""
        return self._level_array

    @property
    def bit_matrix(self) -> np.ndarray:
        """Array with shape ``(order, bits_per_symbol)``; row ``k`` is the
        label of point ``k``."""
        return self._bit_matrix

    @property
    def label_tuple(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(bit) for bit in row) for row in self._bit_matrix)

    # ###################################################################### #
    #               public methods for interaction with the user             #
    # ###################################################################### #

    def bits_to_indices(self, bit_array: typing.Any) -> np.ndarray:
        """Group bits to words and return the point index of each word.

        :raises antijam_utilities.InvalidInputError: If the bit count isn't
            divisible by :attr:`bits_per_symbol`.
        """
        bit_array = np.asarray(bit_array, dtype=np.int64).ravel()
        if bit_array.size % self.bits_per_symbol:
            raise antijam_utilities.InvalidInputError(
                "bit_array",
                f"{bit_array.size} bits can't be grouped into words of "
                f"{self.bits_per_symbol} bits",
            )
        if np.any((bit_array != 0) & (bit_array != 1)):
            raise antijam_utilities.InvalidInputError(
                "bit_array", "bits have to be 0 or 1"
            )
        return bit_array.reshape(-1, self.bits_per_symbol) @ self._bit_weights

    def indices_to_bits(self, index_array: typing.Any) -> np.ndarray:
        """Concatenate the labels of the given point indices."""
        return self._bit_matrix[np.asarray(index_array, dtype=np.int64)].reshape(-1)

    def slice_array(self, value_array: typing.Any) -> np.ndarray:
        """Nearest point index for each complex value.

        Ties go to the lowest point index.

        :raises antijam_utilities.InvalidInputError: For NaN values.
        """
        value_array = np.asarray(value_array, dtype=complex)
        if np.any(np.isnan(value_array)):
            raise antijam_utilities.InvalidInputError(
                "value_array", "can't slice NaN"
            )
        distance = np.abs(value_array[..., np.newaxis] - self._points) ** 2
        return np.argmin(distance, axis=-1)

    def slice(self, value: complex) -> tuple[int, tuple[int, ...]]:
        """Nearest point index and its bit label.

        :param value: Received value (finite).
        """
        index = int(self.slice_array(value))
        return index, self.label_tuple[index]
