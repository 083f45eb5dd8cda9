"""Numeric building blocks shared by all antijam modules.

The link only ever needs 2×2 linear algebra, therefore matrices are
plain :mod:`numpy` arrays of shape ``(2, 2)`` (see :data:`Matrix2`).
All functions here are pure; random generators are derived from
:class:`StreamSeed` objects so that any part of a simulation can be
reproduced in isolation.
"""

from __future__ import annotations

import dataclasses
import hashlib
import typing

import numpy as np

from mutwo import antijam_utilities

__all__ = (
    "Matrix2",
    "EigenPair2",
    "StreamSeed",
    "as_matrix2",
    "is_hermitian",
    "eig_hermitian_2x2",
    "dft",
    "water_fill",
    "derive_stream",
    "complex_gaussian",
    "decibel_to_power_ratio",
)

Matrix2: typing.TypeAlias = np.ndarray
"""A complex ``numpy`` array with shape ``(2, 2)``."""

HERMITIAN_TOLERANCE = 1e-12
"""Maximal absolute deviation between ``m`` and ``m^H`` which is still
accepted as Hermitian."""

_PHASE_PIVOT_TOLERANCE = 1e-12
_SEED_MASK = 2**64 - 1


def as_matrix2(entries: typing.Any) -> Matrix2:
    """Convert ``entries`` to a finite complex 2×2 array.

    :param entries: Anything :func:`numpy.asarray` understands.
    :raises antijam_utilities.InvalidInputError: If the shape isn't
        ``(2, 2)`` or if any entry is NaN or infinite.
    """
    matrix = np.array(entries, dtype=complex)
    if matrix.shape != (2, 2):
        raise antijam_utilities.InvalidInputError(
            "entries", f"expected shape (2, 2), got {matrix.shape}"
        )
    if not np.all(np.isfinite(matrix)):
        raise antijam_utilities.InvalidInputError(
            "entries", "matrix contains NaN or infinite values"
        )
    return matrix


def is_hermitian(matrix: Matrix2, tolerance: float = HERMITIAN_TOLERANCE) -> bool:
    return bool(np.max(np.abs(matrix - matrix.conj().T)) <= tolerance)


@dataclasses.dataclass(frozen=True, eq=False)
class EigenPair2:
    """Spectral decomposition ``U diag(λ) U^H`` of a Hermitian 2×2 matrix.

    :param eigenvalues: Real eigenvalues, sorted descending.
    :param eigenvectors: Unitary matrix whose columns are the eigenvectors
        belonging to :attr:`eigenvalues`.
    """

    eigenvalues: np.ndarray
    eigenvectors: Matrix2

    def reconstruct(self) -> Matrix2:
        return (
            self.eigenvectors
            @ np.diag(self.eigenvalues)
            @ self.eigenvectors.conj().T
        )


def eig_hermitian_2x2(matrix: Matrix2) -> EigenPair2:
    """Decompose a Hermitian 2×2 matrix.

    :param matrix: Hermitian matrix (within :const:`HERMITIAN_TOLERANCE`).
    :return: Eigenvalues sorted descending and a unitary eigenvector
        matrix. The first component of each eigenvector whose magnitude
        exceeds 1e-12 is real and positive, so results are deterministic.
        Equal eigenvalues keep their original column order.
    :raises antijam_utilities.InvalidInputError: For NaN/Inf entries.
    :raises antijam_utilities.ContractViolationError: For non-Hermitian
        input.

    **Example:**

    >>> from mutwo import antijam_utilities
    >>> pair = antijam_utilities.eig_hermitian_2x2([[2, 1], [1, 2]])
    >>> pair.eigenvalues
    array([3., 1.])
    """
    matrix = as_matrix2(matrix)
    if not is_hermitian(matrix):
        raise antijam_utilities.ContractViolationError(
            "eig_hermitian_2x2", "the matrix is Hermitian within 1e-12"
        )

    if matrix[0, 1] == 0:
        # Already diagonal: keep the decomposition exact.
        eigenvalues = matrix.diagonal().real.copy()
        eigenvectors = np.identity(2, dtype=complex)
    else:
        eigenvalues, eigenvectors = np.linalg.eigh(matrix)

    order = np.argsort(-eigenvalues, kind="stable")
    eigenvalues, eigenvectors = eigenvalues[order], eigenvectors[:, order]

    for column_index in range(2):
        column = eigenvectors[:, column_index]
        pivot = column[np.argmax(np.abs(column) > _PHASE_PIVOT_TOLERANCE)]
        eigenvectors[:, column_index] = column * (np.conj(pivot) / np.abs(pivot))

    return EigenPair2(eigenvalues, eigenvectors)


def dft(sequence: typing.Any, inverse: bool = False) -> np.ndarray:
    """Unitary discrete Fourier transform along the last axis.

    :param sequence: Complex samples. The last axis length has to be a
        power of two.
    :param inverse: Compute the inverse transform instead.

    Both directions are scaled by ``1/√L``, so the transform preserves
    energy and ``dft(dft(x), inverse=True) == x``.

    **Example:**

    >>> import numpy as np
    >>> from mutwo import antijam_utilities
    >>> impulse = np.zeros(64); impulse[0] = 1
    >>> float(antijam_utilities.dft(impulse)[5].real)
    0.125
    """
    sequence = np.asarray(sequence, dtype=complex)
    length = sequence.shape[-1] if sequence.ndim else 0
    if length < 1 or length & (length - 1):
        raise antijam_utilities.InvalidInputError(
            "sequence", f"DFT length {length} is not a power of two"
        )
    transform = np.fft.ifft if inverse else np.fft.fft
    return transform(sequence, norm="ortho")


def water_fill(
    eigenvalues: typing.Sequence[float], total_power: float, noise_power: float
) -> np.ndarray:
    """Spread ``total_power`` over parallel eigen channels.

    :param eigenvalues: Channel power gains (nonnegative, at least one
        positive).
    :param total_power: Power budget which is distributed.
    :param noise_power: Noise power per channel.
    :return: Power loads ``δ_k = max(0, μ − noise_power/λ_k)`` in the
        order of ``eigenvalues``; they sum to ``total_power``.

    **Example:**

    >>> from mutwo import antijam_utilities
    >>> antijam_utilities.water_fill((2, 1), 3, 1)
    array([1.75, 1.25])
    """
    gains = np.asarray(eigenvalues, dtype=float)
    if not np.all(np.isfinite(gains)) or np.any(gains < 0) or not np.any(gains > 0):
        raise antijam_utilities.InvalidInputError(
            "eigenvalues", f"need finite nonnegative gains with one > 0, got {gains}"
        )
    if not total_power > 0 or not np.isfinite(total_power):
        raise antijam_utilities.InvalidInputError(
            "total_power", f"has to be positive and finite, got {total_power}"
        )
    if not noise_power > 0 or not np.isfinite(noise_power):
        raise antijam_utilities.InvalidInputError(
            "noise_power", f"has to be positive and finite, got {noise_power}"
        )

    inverse_gains = np.full(gains.shape, np.inf)
    np.divide(noise_power, gains, out=inverse_gains, where=gains > 0)
    order = np.argsort(inverse_gains, kind="stable")
    sorted_inverse_gains = inverse_gains[order]

    for active_count in range(int(np.sum(gains > 0)), 0, -1):
        active = sorted_inverse_gains[:active_count]
        water_level = (total_power + active.sum()) / active_count
        if water_level > active[-1]:
            break

    power = np.zeros(gains.shape)
    power[order[:active_count]] = water_level - sorted_inverse_gains[:active_count]
    # rounding drift goes to the strongest channel
    power[order[0]] += total_power - power.sum()
    return power


@dataclasses.dataclass(frozen=True)
class StreamSeed:
    """Address of a random substream.

    :param root: Sweep seed (reduced to 64 bit).
    :param path: Labels (strings or numbers) identifying the substream,
        for instance ``("frame", 3)``.
    """

    root: int
    path: tuple[typing.Union[str, int, float], ...] = ()

    def child(self, *label: typing.Union[str, int, float]) -> StreamSeed:
        return StreamSeed(self.root, self.path + label)


def _label_to_word(label: typing.Union[str, int, float]) -> int:
    # 'repr' keeps 1 and 1.0 and "1" apart.
    digest = hashlib.blake2b(
        f"{type(label).__name__}:{label!r}".encode("utf-8"), digest_size=4
    ).digest()
    return int.from_bytes(digest, "little")


def derive_stream(seed: StreamSeed) -> np.random.Generator:
    """Build the random generator which belongs to ``seed``.

    Identical seeds give identical sequences, different paths below the
    same root give independent streams (:class:`numpy.random.SeedSequence`
    spawn keys).
    """
    sequence = np.random.SeedSequence(
        entropy=seed.root & _SEED_MASK,
        spawn_key=tuple(_label_to_word(label) for label in seed.path),
    )
    return np.random.Generator(np.random.PCG64(sequence))


def complex_gaussian(
    generator: np.random.Generator,
    size: typing.Union[int, tuple[int, ...]],
    variance: float = 1.0,
) -> np.ndarray:
    """Circularly symmetric complex Gaussian samples ``CN(0, variance)``."""
    scale = np.sqrt(variance / 2)
    real = generator.standard_normal(size)
    imaginary = generator.standard_normal(size)
    return scale * (real + 1j * imaginary)


def decibel_to_power_ratio(decibel: float) -> float:
    return float(10 ** (decibel / 10))
