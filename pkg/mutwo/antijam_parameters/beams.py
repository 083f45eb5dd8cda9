"""Eigen beams of a channel realization."""

from __future__ import annotations

import dataclasses
import typing

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities

__all__ = ("EigenBeams",)


@dataclasses.dataclass(frozen=True, eq=False)
class EigenBeams(object):
    """Beam directions and water-filled power loads.

    :param eigenvectors: Unitary matrix ``U_H`` with columns ``u_a`` and
        ``u_b`` (strongest direction first).
    :param delta: Power loads ``(δ1, δ2)`` matching the columns.
    :param source_correlation: The correlation matrix ``R_H`` which was
        decomposed.
    """

    eigenvectors: antijam_utilities.Matrix2
    delta: np.ndarray
    source_correlation: antijam_utilities.Matrix2

    @classmethod
    def from_correlation(
        cls,
        correlation: typing.Any,
        power: typing.Optional[float] = None,
        noise_power: float = 0,
    ) -> EigenBeams:
        """Decompose ``correlation`` and water-fill ``power`` over its
        eigenvalues.

        :param correlation: Hermitian positive semidefinite 2×2 matrix.
        :param power: Beam power budget ``δ1 + δ2``. Defaults to
            :const:`mutwo.antijam_parameters.configurations.DEFAULT_BEAM_POWER_BUDGET`.
        :param noise_power: Noise level of the water-filling. ``0`` is the
            high SNR limit: the budget is split equally over all beams
            with a nonzero eigenvalue.
        :raises antijam_utilities.DegenerateChannelError: If the
            correlation is zero.

        **Example:**

        >>> import numpy as np
        >>> from mutwo import antijam_parameters
        >>> antijam_parameters.EigenBeams.from_correlation(np.diag([4, 0.01]), 2, 1).delta
        array([2., 0.])
        """
        if power is None:
            power = antijam_parameters.configurations.DEFAULT_BEAM_POWER_BUDGET
        correlation = antijam_utilities.as_matrix2(correlation)
        eigen_pair = antijam_utilities.eig_hermitian_2x2(correlation)
        scale = np.max(np.abs(correlation))
        eigenvalues = np.where(
            eigen_pair.eigenvalues > 1e-12 * scale, eigen_pair.eigenvalues, 0
        )
        if scale == 0 or not np.any(eigenvalues > 0):
            raise antijam_utilities.DegenerateChannelError(
                "the channel correlation matrix is zero"
            )
        if noise_power > 0:
            delta = antijam_utilities.water_fill(eigenvalues, power, noise_power)
        elif noise_power == 0:
            active = eigenvalues > 0
            delta = np.where(active, power / np.sum(active), 0.0)
        else:
            raise antijam_utilities.InvalidInputError(
                "noise_power", f"has to be nonnegative, got {noise_power}"
            )
        return cls(eigen_pair.eigenvectors, delta, correlation)

    @property
    def u_a(self) -> np.ndarray:
        return self.eigenvectors[:, 0]

    @property
    def u_b(self) -> np.ndarray:
        return self.eigenvectors[:, 1]

    @property
    def delta1(self) -> float:
        return float(self.delta[0])

    @property
    def delta2(self) -> float:
        return float(self.delta[1])

    @property
    def loading_matrix(self) -> antijam_utilities.Matrix2:
        """``diag(√δ1, √δ2) · U_H^H``, the right factor of both
        beamformers."""
        return np.diag(np.sqrt(self.delta)) @ self.eigenvectors.conj().T
