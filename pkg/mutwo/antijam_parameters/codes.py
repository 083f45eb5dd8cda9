"""Space-time code containers."""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from mutwo import antijam_utilities

__all__ = ("Rate2Block", "SuperSymbolPair", "AntennaStreams")


@dataclasses.dataclass(frozen=True)
class Rate2Block(object):
    """Four information symbols and the rotation angle of the rate-2 code.

    :param x1: First information symbol.
    :param x2: Second information symbol.
    :param x3: Third information symbol.
    :param x4: Fourth information symbol.
    :param phi1: Rotation angle in radians, within ``(0, π/2)``. The
        second angle is always ``π/2 - phi1``.
    """

    x1: complex
    x2: complex
    x3: complex
    x4: complex
    phi1: float

    def __post_init__(self):
        if not 0 < self.phi1 < math.pi / 2:
            raise antijam_utilities.InvalidInputError(
                "phi1", f"has to be within (0, π/2), got {self.phi1}"
            )

    @property
    def phi2(self) -> float:
        return math.pi / 2 - self.phi1


@dataclasses.dataclass(frozen=True)
class SuperSymbolPair(object):
    """The two rotated super-symbols ``C1`` and ``C2`` of a rate-2 block.

    ``C1 = x1·sin φ1 − x2*·cos φ1`` and ``C2 = x3·sin φ2 − x4*·cos φ2``.
    """

    c1: complex
    c2: complex

    @classmethod
    def from_block(cls, block: Rate2Block) -> SuperSymbolPair:
        return cls(
            block.x1 * math.sin(block.phi1) - np.conj(block.x2) * math.cos(block.phi1),
            block.x3 * math.sin(block.phi2) - np.conj(block.x4) * math.cos(block.phi2),
        )

    def to_code_matrix(self) -> antijam_utilities.Matrix2:
        """``[[C1, C2], [−C2*, C1*]]`` with rows = channel uses and
        columns = transmit antennas."""
        return np.array(
            [[self.c1, self.c2], [-np.conj(self.c2), np.conj(self.c1)]], dtype=complex
        )


@dataclasses.dataclass(frozen=True, eq=False)
class AntennaStreams(object):
    """Code symbol stream of each transmit antenna.

    :param s1: Stream of antenna 1, length ``2N``.
    :param s2: Stream of antenna 2, length ``2N``.

    Slot ``2b + t`` holds the entry of block ``b`` at channel use ``t``:
    the streams are the column-major concatenation of the code matrices.
    """

    s1: np.ndarray
    s2: np.ndarray

    def __post_init__(self):
        s1, s2 = (np.asarray(s, dtype=complex).ravel() for s in (self.s1, self.s2))
        if s1.size != s2.size:
            raise antijam_utilities.InvalidInputError(
                "s2", f"stream lengths differ ({s1.size} != {s2.size})"
            )
        object.__setattr__(self, "s1", s1)
        object.__setattr__(self, "s2", s2)

    def __len__(self) -> int:
        return self.s1.size

    @property
    def slot_count(self) -> int:
        return self.s1.size

    @classmethod
    def from_code_matrix_array(cls, code_matrix_array: np.ndarray) -> AntennaStreams:
        """Flatten code matrices with shape ``(B, 2, 2)`` (block, channel
        use, antenna) to antenna streams."""
        code_matrix_array = np.asarray(code_matrix_array, dtype=complex)
        return cls(code_matrix_array[:, :, 0].ravel(), code_matrix_array[:, :, 1].ravel())

    def to_code_matrix_array(self) -> np.ndarray:
        """Inverse of :meth:`from_code_matrix_array` (requires an even
        slot count)."""
        if self.slot_count % 2:
            raise antijam_utilities.InvalidInputError(
                "streams", f"odd slot count {self.slot_count} can't form blocks"
            )
        return np.stack((self.s1, self.s2), axis=-1).reshape(-1, 2, 2)
