"""Receiver side quantities: equivalent channels and sufficient statistics."""

from __future__ import annotations

import dataclasses
import typing

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities

__all__ = ("Evcm", "CombinedStatistic", "DecodedBlock")


@dataclasses.dataclass(frozen=True, eq=False)
class Evcm(object):
    """Equivalent virtual channel matrix of one receive antenna.

    :param g: ``[[g1, g2], [g2*, −g1*]]`` with ``g1 = √δ1·u_a^H h_i`` and
        ``g2 = √δ2·u_b^H h_i``.
    :param psi: Gain ``|g1|² + |g2|²``.

    The received pair ``[y(t=0); y(t=1)*]`` of a beamformed block equals
    ``√P·g·[C1; C2]`` plus disturbance. Because ``g^H g = psi·I`` the
    two super-symbols separate after :meth:`equalize`.

    **Example:**

    >>> import numpy as np
    >>> from mutwo import antijam_parameters
    >>> beams = antijam_parameters.EigenBeams(np.identity(2), np.ones(2), np.identity(2))
    >>> channel = antijam_parameters.ChannelRealization(np.identity(2))
    >>> antijam_parameters.Evcm.build(channel, beams, 0).g.real
    array([[ 1.,  0.],
           [ 0., -1.]])
    """

    g: antijam_utilities.Matrix2
    psi: float

    @classmethod
    def build(
        cls,
        channel: antijam_parameters.ChannelRealization,
        beams: antijam_parameters.EigenBeams,
        antenna: int,
    ) -> Evcm:
        g1, g2 = beams.loading_matrix @ channel.column(antenna)
        return cls.from_gains(g1, g2)

    @classmethod
    def from_gains(cls, g1: complex, g2: complex) -> Evcm:
        g = np.array([[g1, g2], [np.conj(g2), -np.conj(g1)]], dtype=complex)
        return cls(g, float(abs(g1) ** 2 + abs(g2) ** 2))

    @staticmethod
    def stack_received_pair(
        y_first_epoch: typing.Any, y_second_epoch: typing.Any
    ) -> np.ndarray:
        """``[y(t=0); y(t=1)*]``, the input of :meth:`equalize`."""
        return np.stack(
            (
                np.asarray(y_first_epoch, dtype=complex),
                np.conj(np.asarray(y_second_epoch, dtype=complex)),
            )
        )

    @property
    def is_degenerate(self) -> bool:
        return not self.psi > 0

    def equalize(self, y_pair: typing.Any) -> np.ndarray:
        """Apply ``g^H`` to a stacked received pair.

        :param y_pair: Array with shape ``(2,)`` or ``(2, B)`` (see
            :meth:`stack_received_pair`).
        :raises antijam_utilities.DegenerateChannelError: If ``psi`` is
            zero.
        """
        if self.is_degenerate:
            raise antijam_utilities.DegenerateChannelError(
                "the equivalent virtual channel has zero gain"
            )
        y_pair = np.asarray(y_pair, dtype=complex)
        if y_pair.shape[:1] != (2,):
            raise antijam_utilities.InvalidInputError(
                "y_pair", f"expected a leading axis of length 2, got {y_pair.shape}"
            )
        return self.g.conj().T @ y_pair


@dataclasses.dataclass(frozen=True, eq=False)
class CombinedStatistic(object):
    """Antenna combined statistics of both super-symbols.

    :param r1: Statistic of ``C1`` (scalar or one value per block).
    :param r2: Statistic of ``C2``.
    :param kappa: Gain ``½·Σ psi_i`` relating ``r_j`` to ``C_j`` (before
        the transmit amplitude ``√P``).
    """

    r1: typing.Any
    r2: typing.Any
    kappa: typing.Any

    @classmethod
    def combine(
        cls,
        a_pair_sequence: typing.Sequence[typing.Any],
        psi_sequence: typing.Sequence[float],
    ) -> CombinedStatistic:
        """Average equalized pairs over the receive antennas.

        :param a_pair_sequence: One equalized pair per antenna, each with
            shape ``(2,)`` or ``(2, B)``.
        :param psi_sequence: The matching EVCM gains.
        """
        a_pair_array = np.asarray(a_pair_sequence, dtype=complex)
        psi_array = np.asarray(psi_sequence, dtype=float)
        if a_pair_array.shape[0] == 0 or a_pair_array.shape[0] != psi_array.shape[0]:
            raise antijam_utilities.InvalidInputError(
                "a_pair_sequence", "needs one equalized pair per gain (at least one)"
            )
        r1, r2 = 0.5 * np.sum(a_pair_array, axis=0)
        return cls(r1, r2, 0.5 * np.sum(psi_array, axis=0))

    def select(self, epoch: int) -> typing.Any:
        """Statistic of epoch ``1`` or ``2``."""
        try:
            return {1: self.r1, 2: self.r2}[epoch]
        except KeyError:
            raise antijam_utilities.InvalidInputError(
                "epoch", f"has to be 1 or 2, got {epoch}"
            )


@dataclasses.dataclass(frozen=True, eq=False)
class DecodedBlock(object):
    """Detected symbols of rate-2 blocks.

    :param index_array: Point indices with shape ``(..., 4)`` in the
        order ``x1, x2, x3, x4``.
    :param cost_array: Minimal cost of each epoch, shape ``(..., 2)``.
    :param constellation: The alphabet of the indices.
    """

    index_array: np.ndarray
    cost_array: np.ndarray
    constellation: antijam_parameters.QamConstellation

    @property
    def point_array(self) -> np.ndarray:
        return self.constellation.points[self.index_array]

    @property
    def bit_array(self) -> np.ndarray:
        return self.constellation.indices_to_bits(self.index_array)
