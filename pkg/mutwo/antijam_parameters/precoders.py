"""Diagonal subcarrier precoders under a total power constraint."""

from __future__ import annotations

import enum
import typing

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities

__all__ = ("PrecodingMode", "PrecoderProfile")


class PrecodingMode(enum.Enum):
    FULL = "full"
    MULTIBAND = "multiband"


class PrecoderProfile(object):
    """Per-slot real weights ``ρ`` of a full or multi-band precoder.

    :param mode: :class:`PrecodingMode`.
    :param rho: One nonnegative weight per slot.
    :param power_budget: Total power ``P`` with ``Σ ρ_k² = P``.

    A full precoder has positive weights on every slot. A multi-band
    precoder is positive exactly on its protected slots and zero
    elsewhere. Any weight vector which satisfies these rules and the
    power constraint (relative tolerance
    :const:`mutwo.antijam_parameters.configurations.POWER_TOLERANCE`) is
    accepted, the alternative constructors :meth:`full` and
    :meth:`multiband` build the uniform allocations.

    **Example:**

    >>> from mutwo import antijam_parameters
    >>> antijam_parameters.PrecoderProfile.full(4, 1).rho
    array([0.5, 0.5, 0.5, 0.5])
    """

    def __init__(
        self, mode: PrecodingMode, rho: typing.Sequence[float], power_budget: float
    ):
        rho = np.array(rho, dtype=float).ravel()
        if not power_budget > 0 or not np.isfinite(power_budget):
            raise antijam_utilities.InvalidInputError(
                "power_budget", f"has to be positive, got {power_budget}"
            )
        if rho.size == 0 or not np.all(np.isfinite(rho)) or np.any(rho < 0):
            raise antijam_utilities.InvalidInputError(
                "rho", "needs at least one finite nonnegative weight per slot"
            )
        tolerance = (
            antijam_parameters.configurations.POWER_TOLERANCE * max(1.0, power_budget)
        )
        if abs(float(np.sum(rho**2)) - power_budget) > tolerance:
            raise antijam_utilities.InvalidInputError(
                "rho",
                f"Σρ² = {np.sum(rho ** 2)} violates the power budget {power_budget}",
            )
        mode = PrecodingMode(mode)
        if mode is PrecodingMode.FULL and np.any(rho == 0):
            raise antijam_utilities.InvalidInputError(
                "rho", "a full precoder needs positive weights on all slots"
            )
        rho.setflags(write=False)
        self._mode, self._rho, self._power_budget = mode, rho, float(power_budget)

    # ###################################################################### #
    #                class methods (alternative constructors)                #
    # ###################################################################### #

    @classmethod
    def full(cls, slot_count: int, power_budget: float) -> PrecoderProfile:
        """Uniform precoder ``ρ_k = √(P/2N)`` over all ``2N`` slots."""
        if slot_count < 1:
            raise antijam_utilities.InvalidInputError(
                "slot_count", f"has to be positive, got {slot_count}"
            )
        if not power_budget > 0:
            raise antijam_utilities.InvalidInputError(
                "power_budget", f"has to be positive, got {power_budget}"
            )
        return cls(
            PrecodingMode.FULL,
            np.full(slot_count, np.sqrt(power_budget / slot_count)),
            power_budget,
        )

    @classmethod
    def multiband(
        cls,
        slot_count: int,
        jammed_slot_sequence: typing.Iterable[int],
        power_budget: float,
    ) -> PrecoderProfile:
        """Uniform precoder ``ρ_k = √(P/|J|)`` on the jammed slots ``J``
        (0-based), zero elsewhere."""
        jammed_slot_tuple = tuple(sorted(set(int(slot) for slot in jammed_slot_sequence)))
        if not jammed_slot_tuple:
            raise antijam_utilities.InvalidInputError(
                "jammed_slot_sequence",
                "a multi-band precoder needs at least one protected slot",
            )
        if jammed_slot_tuple[0] < 0 or jammed_slot_tuple[-1] >= slot_count:
            raise antijam_utilities.InvalidInputError(
                "jammed_slot_sequence",
                f"slots have to be within [0, {slot_count - 1}]",
            )
        if not power_budget > 0:
            raise antijam_utilities.InvalidInputError(
                "power_budget", f"has to be positive, got {power_budget}"
            )
        rho = np.zeros(slot_count)
        rho[list(jammed_slot_tuple)] = np.sqrt(power_budget / len(jammed_slot_tuple))
        return cls(PrecodingMode.MULTIBAND, rho, power_budget)

    # ###################################################################### #
    #                             properties                                 #
    # ###################################################################### #

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}({self.mode.value}, slots={self.slot_count}, "
            f"protected={len(self.protected_slot_tuple)}, P={self.power_budget})"
        )

    @property
    def mode(self) -> PrecodingMode:
        return self._mode

    @property
    def rho(self) -> np.ndarray:
        return self._rho

    @property
    def power_budget(self) -> float:
        return self._power_budget

    @property
    def slot_count(self) -> int:
        return self._rho.size

    @property
    def protected_slot_tuple(self) -> tuple[int, ...]:
        """Slots with a nonzero weight."""
        return tuple(int(slot) for slot in np.flatnonzero(self._rho))

    @property
    def protected_mask(self) -> np.ndarray:
        return self._rho > 0
