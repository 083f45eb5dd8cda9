"""Maximum likelihood detection of rate-2 blocks and the linear Alamouti
detector."""

import math
import typing

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities
from mutwo import core_converters

__all__ = ("ConditionalMlDetector", "ExhaustiveMlDetector", "AlamoutiDetector")


class _RateTwoDetector(core_converters.abc.Converter):
    def __init__(self, constellation: antijam_parameters.QamConstellation):
        self._constellation = constellation
        self.evaluation_count = 0

    @property
    def constellation(self) -> antijam_parameters.QamConstellation:
        return self._constellation

    def reset_evaluation_count(self):
        self.evaluation_count = 0

    @staticmethod
    def _epoch_angle(epoch: int, phi1: float) -> float:
        if epoch == 1:
            return phi1
        elif epoch == 2:
            return math.pi / 2 - phi1
        raise antijam_utilities.InvalidInputError(
            "epoch", f"has to be 1 or 2, got {epoch}"
        )

    @staticmethod
    def _effective_gain(
        statistic: antijam_parameters.CombinedStatistic, amplitude: float
    ) -> np.ndarray:
        kappa_effective = amplitude * np.asarray(statistic.kappa, dtype=float)
        if np.any(~(kappa_effective > 0)):
            raise antijam_utilities.DegenerateChannelError(
                "the combined gain is not positive"
            )
        return kappa_effective

    def _detect(
        self, r: np.ndarray, kappa_effective: np.ndarray, phi: float
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        raise NotImplementedError

    def convert(
        self,
        statistic_to_convert: antijam_parameters.CombinedStatistic,
        epoch: int,
        phi1: float,
        amplitude: float = 1,
    ) -> tuple[typing.Any, typing.Any, typing.Any]:
        """Detect the symbol pair of one epoch.

        :param statistic_to_convert: Combined statistic (scalar or one
            value per block).
        :param epoch: ``1`` detects ``(x1, x2)`` from ``r1`` with ``φ1``,
            ``2`` detects ``(x3, x4)`` from ``r2`` with ``φ2 = π/2 − φ1``.
        :param phi1: Rotation angle of the code.
        :param amplitude: Transmit amplitude ``√P``; the effective gain
            is ``amplitude · kappa``.
        :return: Point index of the odd symbol, point index of the even
            symbol and the minimal cost ``Λ``.
        :raises antijam_utilities.DegenerateChannelError: If the
            effective gain isn't positive.
        """
        phi = self._epoch_angle(epoch, phi1)
        kappa_effective = self._effective_gain(statistic_to_convert, amplitude)
        r = np.asarray(statistic_to_convert.select(epoch), dtype=complex)
        shape = np.broadcast_shapes(r.shape, kappa_effective.shape)
        odd, even, cost = self._detect(
            np.broadcast_to(r, shape).ravel(),
            np.broadcast_to(kappa_effective, shape).ravel(),
            phi,
        )
        odd, even, cost = (array.reshape(shape) for array in (odd, even, cost))
        if not shape:
            return int(odd), int(even), float(cost)
        return odd, even, cost

    def detect_block(
        self,
        statistic: antijam_parameters.CombinedStatistic,
        phi1: float,
        amplitude: float = 1,
    ) -> antijam_parameters.DecodedBlock:
        """Detect all four symbols of one or many blocks."""
        x1, x2, cost1 = self.convert(statistic, 1, phi1, amplitude)
        x3, x4, cost2 = self.convert(statistic, 2, phi1, amplitude)
        return antijam_parameters.DecodedBlock(
            np.stack(np.broadcast_arrays(x1, x2, x3, x4), axis=-1),
            np.stack(np.broadcast_arrays(cost1, cost2), axis=-1),
            self._constellation,
        )


class ConditionalMlDetector(_RateTwoDetector):
    """Joint ML decision of a symbol pair with ``|Q|`` cost evaluations.

    :param constellation: Alphabet of the symbols.

    For every candidate ``c`` of the even symbol the odd symbol is
    estimated by slicing ``(r + κ·c*·cos φ) / (κ·sin φ)``; the pair with
    the smallest cost ``Λ = |r − κ·(x_odd·sin φ − c*·cos φ)|²`` wins.
    Because the odd symbol enters ``Λ`` with the positive real scale
    ``κ·sin φ``, slicing gives the exact conditional minimum and the
    result equals an exhaustive search over ``|Q|²`` pairs.
    :attr:`evaluation_count` grows by ``|Q|`` per detected statistic.
    """

    def _detect(self, r, kappa_effective, phi):
        points = self._constellation.points
        sin, cos = math.sin(phi), math.cos(phi)
        kappa = kappa_effective[:, np.newaxis]
        even_term = np.conj(points)[np.newaxis, :] * cos
        intermediate = r[:, np.newaxis] + kappa * even_term
        odd = self._constellation.slice_array(intermediate / (kappa * sin))
        cost = np.abs(r[:, np.newaxis] - kappa * (points[odd] * sin - even_term)) ** 2
        self.evaluation_count += cost.size
        even = np.argmin(cost, axis=-1)
        row = np.arange(r.size)
        return odd[row, even], even, cost[row, even]


class ExhaustiveMlDetector(_RateTwoDetector):
    """Brute force ML decision over all ``|Q|²`` symbol pairs.

    :param constellation: Alphabet of the symbols.

    Ties are resolved to the lexicographically smallest pair of point
    indices ``(odd, even)``. :attr:`evaluation_count` grows by ``|Q|²``
    per detected statistic.
    """

    def _detect(self, r, kappa_effective, phi):
        points = self._constellation.points
        order = self._constellation.order
        candidate = (
            points[:, np.newaxis] * math.sin(phi)
            - np.conj(points)[np.newaxis, :] * math.cos(phi)
        ).ravel()
        cost = (
            np.abs(r[:, np.newaxis] - kappa_effective[:, np.newaxis] * candidate) ** 2
        )
        self.evaluation_count += cost.size
        best = np.argmin(cost, axis=-1)
        return best // order, best % order, cost[np.arange(r.size), best]


class AlamoutiDetector(core_converters.abc.Converter):
    """Linear detector of beamformed Alamouti blocks.

    :param constellation: Alphabet of the symbols.

    The estimate ``x̃ = Σ_i G_i^H [y_i(t=0); y_i(t=1)*] / (√P·Σ_i psi_i)``
    separates both symbols, which are then sliced independently.
    """

    def __init__(self, constellation: antijam_parameters.QamConstellation):
        self._constellation = constellation

    def estimate(
        self,
        y_pair_sequence: typing.Sequence[typing.Any],
        evcm_sequence: typing.Sequence[antijam_parameters.Evcm],
        amplitude: float = 1,
    ) -> np.ndarray:
        """Soft estimates ``x̃`` with shape ``(2,)`` or ``(2, B)``."""
        if len(y_pair_sequence) != len(evcm_sequence) or not evcm_sequence:
            raise antijam_utilities.InvalidInputError(
                "y_pair_sequence", "needs one received pair per EVCM"
            )
        total_gain = amplitude * sum(evcm.psi for evcm in evcm_sequence)
        if not total_gain > 0:
            raise antijam_utilities.DegenerateChannelError(
                "the total Alamouti gain is zero"
            )
        combined = sum(
            evcm.g.conj().T @ np.asarray(y_pair, dtype=complex)
            for y_pair, evcm in zip(y_pair_sequence, evcm_sequence)
        )
        return combined / total_gain

    def convert(
        self,
        y_pair_sequence_to_convert: typing.Sequence[typing.Any],
        evcm_sequence: typing.Sequence[antijam_parameters.Evcm],
        amplitude: float = 1,
    ) -> np.ndarray:
        """Detect ``(x1, x2)``.

        :param y_pair_sequence_to_convert: Per receive antenna the stacked
            pair ``[y(t=0); y(t=1)*]`` with shape ``(2,)`` or ``(2, B)``
            (see :meth:`mutwo.antijam_parameters.Evcm.stack_received_pair`).
        :param evcm_sequence: Matching EVCMs.
        :param amplitude: Transmit amplitude ``√P``.
        :return: Point indices with shape ``(2,)`` or ``(2, B)``.
        """
        return self._constellation.slice_array(
            self.estimate(y_pair_sequence_to_convert, evcm_sequence, amplitude)
        )
