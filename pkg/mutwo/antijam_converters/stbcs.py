"""Space-time block encoders and the framing of symbol streams."""

import math
import typing

import numpy as np

from mutwo import antijam_converters
from mutwo import antijam_parameters
from mutwo import antijam_utilities
from mutwo import core_converters

__all__ = (
    "Rate2BlockToCodeMatrix",
    "SymbolPairToAlamoutiMatrix",
    "SymbolArrayToRate2Frame",
    "SymbolArrayToAlamoutiFrame",
    "SuperSymbolGrayMapping",
    "RotationAngleSearch",
)


class Rate2BlockToCodeMatrix(core_converters.abc.Converter):
    """Encode four symbols with the rotated rate-2 code.

    The code matrix is ``[[C1, C2], [−C2*, C1*]]`` (rows = channel uses,
    columns = transmit antennas) with the super-symbols of
    :class:`mutwo.antijam_parameters.SuperSymbolPair`.

    **Example:**

    >>> import math
    >>> from mutwo import antijam_converters, antijam_parameters
    >>> block = antijam_parameters.Rate2Block(1, 0, 0, 0, math.pi / 6)
    >>> matrix = antijam_converters.Rate2BlockToCodeMatrix().convert(block)
    >>> round(float(matrix[1, 1].real), 3)
    0.5
    """

    def convert(
        self, block_to_convert: antijam_parameters.Rate2Block
    ) -> antijam_utilities.Matrix2:
        return antijam_parameters.SuperSymbolPair.from_block(
            block_to_convert
        ).to_code_matrix()


class SymbolPairToAlamoutiMatrix(core_converters.abc.Converter):
    """Alamouti matrix ``[[x1, x2], [−x2*, x1*]]``.

    The input may also be an array with shape ``(B, 2)`` which gives
    ``B`` matrices.
    """

    def convert(self, symbol_pair_to_convert: typing.Any) -> np.ndarray:
        symbol_pair = np.asarray(symbol_pair_to_convert, dtype=complex)
        if symbol_pair.shape[-1:] != (2,):
            raise antijam_utilities.InvalidInputError(
                "symbol_pair_to_convert", f"expected pairs, got shape {symbol_pair.shape}"
            )
        x1, x2 = symbol_pair[..., 0], symbol_pair[..., 1]
        return np.stack(
            (np.stack((x1, x2), axis=-1), np.stack((-np.conj(x2), np.conj(x1)), axis=-1)),
            axis=-2,
        )


class SymbolArrayToRate2Frame(core_converters.abc.Converter):
    """Group ``4N`` symbols into ``N`` rate-2 blocks.

    :param phi1: Rotation angle within ``(0, π/2)``.

    Consecutive 4-tuples ``(x1, x2, x3, x4)`` form the blocks. The
    antenna streams hold the code matrix entries in column-major block
    order (see :class:`mutwo.antijam_parameters.AntennaStreams`).
    """

    def __init__(self, phi1: float):
        # Validates the angle.
        antijam_parameters.Rate2Block(0, 0, 0, 0, phi1)
        self._phi1 = phi1

    @property
    def phi1(self) -> float:
        return self._phi1

    def _symbol_array_to_quadruple_array(self, symbol_array: typing.Any) -> np.ndarray:
        symbol_array = np.asarray(symbol_array, dtype=complex).ravel()
        if symbol_array.size % 4:
            raise antijam_utilities.InvalidInputError(
                "symbol_array", f"{symbol_array.size} symbols can't form blocks of four"
            )
        return symbol_array.reshape(-1, 4)

    def super_symbol_array(self, symbol_array: typing.Any) -> np.ndarray:
        """``(C1, C2)`` of each block as an array with shape ``(N, 2)``."""
        quadruple = self._symbol_array_to_quadruple_array(symbol_array)
        phi1, phi2 = self._phi1, math.pi / 2 - self._phi1
        return np.stack(
            (
                quadruple[:, 0] * math.sin(phi1) - np.conj(quadruple[:, 1]) * math.cos(phi1),
                quadruple[:, 2] * math.sin(phi2) - np.conj(quadruple[:, 3]) * math.cos(phi2),
            ),
            axis=-1,
        )

    def code_matrix_array(self, symbol_array: typing.Any) -> np.ndarray:
        """Code matrices of all blocks, shape ``(N, 2, 2)``."""
        # [[C1, C2], [−C2*, C1*]] is the Alamouti structure of the pair.
        return SymbolPairToAlamoutiMatrix().convert(self.super_symbol_array(symbol_array))

    def convert(
        self, symbol_array_to_convert: typing.Any
    ) -> tuple[
        tuple[antijam_parameters.Rate2Block, ...], antijam_parameters.AntennaStreams
    ]:
        """Frame a symbol sequence.

        :param symbol_array_to_convert: ``4N`` constellation points.
        :return: The ``N`` blocks and the antenna streams of length
            ``2N``.
        """
        quadruple = self._symbol_array_to_quadruple_array(symbol_array_to_convert)
        block_tuple = tuple(
            antijam_parameters.Rate2Block(*(complex(x) for x in row), self._phi1)
            for row in quadruple
        )
        return block_tuple, antijam_parameters.AntennaStreams.from_code_matrix_array(
            self.code_matrix_array(quadruple)
        )


class SymbolArrayToAlamoutiFrame(core_converters.abc.Converter):
    """Group ``2N`` symbols into ``N`` Alamouti blocks."""

    def code_matrix_array(self, symbol_array: typing.Any) -> np.ndarray:
        symbol_array = np.asarray(symbol_array, dtype=complex).ravel()
        if symbol_array.size % 2:
            raise antijam_utilities.InvalidInputError(
                "symbol_array", f"{symbol_array.size} symbols can't form pairs"
            )
        return SymbolPairToAlamoutiMatrix().convert(symbol_array.reshape(-1, 2))

    def convert(
        self, symbol_array_to_convert: typing.Any
    ) -> antijam_parameters.AntennaStreams:
        return antijam_parameters.AntennaStreams.from_code_matrix_array(
            self.code_matrix_array(symbol_array_to_convert)
        )


class SuperSymbolGrayMapping(core_converters.abc.Converter):
    """Relabel rate-2 blocks so that both super-symbols are Gray coded.

    :param constellation: Alphabet of the four symbols of a block.
    :type constellation: mutwo.antijam_parameters.QamConstellation
    :param phi1: Rotation angle within ``(0, π/2)``.

    Each super-symbol ``C = x·sin φ − y*·cos φ`` has a dominant symbol
    (the one with the larger coefficient) and a weak one. With
    ``φ1 = atan(1/√|Q|)`` the points of ``C`` form a square lattice of
    ``|Q|²`` points, per axis the dominant level selects a group of
    ``√|Q|`` neighbouring levels and the weak level the position within
    the group. Plain labels put two bit flips between neighbouring
    groups. The mapping negates an axis of the weak symbol whenever the
    dominant symbol sits at an odd group position along that axis, which
    reflects every second group and turns the lattice labels into a Gray
    code. Dominant symbols are never touched, so the mapping is its own
    inverse.

    **Example:**

    >>> import math
    >>> from mutwo import antijam_converters, antijam_parameters
    >>> q = antijam_parameters.QamConstellation(4)
    >>> mapping = antijam_converters.SuperSymbolGrayMapping(q, math.atan(0.5))
    >>> block = q.points[[0, 3, 0, 0]]
    >>> bool(abs(mapping.convert(block)[0] - q.points[2]) < 1e-12)
    True
    """

    def __init__(
        self, constellation: antijam_parameters.QamConstellation, phi1: float
    ):
        antijam_parameters.Rate2Block(0, 0, 0, 0, phi1)
        self._constellation = constellation
        self._phi1 = phi1
        # (dominant column, weak column, axis signs of the dominant symbol in C)
        if math.cos(phi1) >= math.sin(phi1):
            self._role_tuple = ((1, 0, (-1, 1)), (2, 3, (1, 1)))
        else:
            self._role_tuple = ((0, 1, (1, 1)), (3, 2, (-1, 1)))

    @property
    def constellation(self) -> antijam_parameters.QamConstellation:
        return self._constellation

    @property
    def phi1(self) -> float:
        return self._phi1

    def convert(self, symbol_array_to_convert: typing.Any) -> np.ndarray:
        """Map ``4N`` constellation points (flat or shape ``(N, 4)``).

        :return: The relabelled points in the shape of the input.
        """
        symbol_array = np.asarray(symbol_array_to_convert, dtype=complex)
        if symbol_array.size % 4:
            raise antijam_utilities.InvalidInputError(
                "symbol_array_to_convert",
                f"{symbol_array.size} symbols can't form blocks of four",
            )
        quadruple = symbol_array.reshape(-1, 4).copy()
        level_count = self._constellation.level_count
        for dominant, weak, sign in self._role_tuple:
            level = (
                self._constellation.level_array[
                    self._constellation.slice_array(quadruple[:, dominant])
                ]
                * np.array(sign)
            )
            is_odd = ((level + level_count - 1) // 2) % 2 == 1
            weak_symbol = quadruple[:, weak]
            weak_symbol = np.where(is_odd[:, 0], -np.conj(weak_symbol), weak_symbol)
            weak_symbol = np.where(is_odd[:, 1], np.conj(weak_symbol), weak_symbol)
            quadruple[:, weak] = weak_symbol
        return quadruple.reshape(symbol_array.shape)


class RotationAngleSearch(core_converters.abc.Converter):
    """Find the rotation angle with the largest minimal coding gain.

    :param step_count: The angles ``k·π/(2·step_count)`` for
        ``k = 1 … step_count − 1`` are evaluated.

    For two codewords of the rate-2 code which differ in the symbols
    ``Δx`` the difference matrix again has Alamouti structure, so its
    determinant is ``|ΔC1|² + |ΔC2|²``. The worst case is a difference
    within a single super-symbol, therefore the criterion of an angle is
    the smallest nonzero ``|Δx1·sin φ − Δx2*·cos φ|²`` (and the same with
    ``π/2 − φ``) over all symbol differences. Among equally good angles
    the smallest one wins.

    **Example:**

    >>> from mutwo import antijam_converters, antijam_parameters
    >>> search = antijam_converters.RotationAngleSearch(1024)
    >>> round(search.convert(antijam_parameters.QamConstellation(4)), 2)
    0.46
    """

    def __init__(self, step_count: typing.Optional[int] = None):
        if step_count is None:
            step_count = (
                antijam_converters.configurations.DEFAULT_ROTATION_ANGLE_SEARCH_STEP_COUNT
            )
        if step_count < 2:
            raise antijam_utilities.InvalidInputError(
                "step_count", f"has to be at least 2, got {step_count}"
            )
        self._step_count = step_count

    @staticmethod
    def _difference_array(constellation: antijam_parameters.QamConstellation) -> np.ndarray:
        points = constellation.points
        difference = np.unique(np.round(points[:, np.newaxis] - points, 12))
        first, second = np.meshgrid(difference, difference, indexing="ij")
        first, second = first.ravel(), second.ravel()
        nonzero = (first != 0) | (second != 0)
        return np.stack((first[nonzero], second[nonzero]))

    def minimal_gain(
        self, constellation: antijam_parameters.QamConstellation, phi1: typing.Any
    ) -> np.ndarray:
        """Criterion of the angle(s) ``phi1``."""
        phi1 = np.atleast_1d(np.asarray(phi1, dtype=float))
        first, second = RotationAngleSearch._difference_array(constellation)
        gain_list = []
        for phi_chunk in np.array_split(phi1, max(1, phi1.size // 64)):
            sin, cos = np.sin(phi_chunk)[:, np.newaxis], np.cos(phi_chunk)[:, np.newaxis]
            gain_list.append(
                np.minimum(
                    np.min(np.abs(first * sin - np.conj(second) * cos) ** 2, axis=-1),
                    np.min(np.abs(first * cos - np.conj(second) * sin) ** 2, axis=-1),
                )
            )
        return np.concatenate(gain_list)

    def convert(self, constellation: antijam_parameters.QamConstellation) -> float:
        """Best rotation angle ``φ1`` in radians."""
        phi_array = np.arange(1, self._step_count) * (math.pi / 2 / self._step_count)
        gain_array = self.minimal_gain(constellation, phi_array)
        best_index, best_gain = 0, gain_array[0]
        for index, gain in enumerate(gain_array):
            if gain > best_gain + 1e-12:
                best_index, best_gain = index, gain
        self._logger.info(
            f"rotation angle search for {constellation}: φ1 = "
            f"{phi_array[best_index]:.6f} (minimal gain {best_gain:.6f})"
        )
        return float(phi_array[best_index])
