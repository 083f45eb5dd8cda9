"""Eigen beamformers of the rate-2 scheme and of the Alamouti benchmark."""

import typing

import numpy as np

from mutwo import antijam_converters
from mutwo import antijam_parameters
from mutwo import antijam_utilities
from mutwo import core_converters

__all__ = ("RateTwoBeamformer", "AlamoutiBeamformer")


class RateTwoBeamformer(core_converters.abc.Converter):
    """Steer rate-2 code matrices along the eigen beams.

    :param beams: Eigen beams of the current channel realization.
    :type beams: mutwo.antijam_parameters.EigenBeams

    A code matrix ``C`` (rows = channel uses) is sent as
    ``C · diag(√δ1, √δ2) · U_H^H``: super-symbol ``C1`` rides on beam
    ``u_a`` and ``C2`` on beam ``u_b`` in the first channel use, their
    conjugates swap beams in the second channel use.

    **Example:**

    >>> import numpy as np
    >>> from mutwo import antijam_converters, antijam_parameters
    >>> beams = antijam_parameters.EigenBeams(np.identity(2), np.ones(2), np.identity(2))
    >>> pair = antijam_parameters.SuperSymbolPair(1, 0)
    >>> antijam_converters.RateTwoBeamformer(beams).convert(pair).real
    array([[1., 0.],
           [0., 1.]])
    """

    def __init__(self, beams: antijam_parameters.EigenBeams):
        self._beams = beams

    @property
    def beams(self) -> antijam_parameters.EigenBeams:
        return self._beams

    def convert(
        self,
        code_to_convert: typing.Union[antijam_parameters.SuperSymbolPair, np.ndarray],
    ) -> np.ndarray:
        """Beamform one code matrix, a super-symbol pair or an array of
        code matrices with shape ``(B, 2, 2)``.

        :return: Antenna samples with the shape of the code matrices
            (``[..., channel use, transmit antenna]``).
        """
        if isinstance(code_to_convert, antijam_parameters.SuperSymbolPair):
            code_to_convert = code_to_convert.to_code_matrix()
        code_array = np.asarray(code_to_convert, dtype=complex)
        if code_array.shape[-2:] != (2, 2):
            raise antijam_utilities.InvalidInputError(
                "code_to_convert", f"expected 2×2 code matrices, got {code_array.shape}"
            )
        return code_array @ self._beams.loading_matrix


class AlamoutiBeamformer(core_converters.abc.Converter):
    """Steer Alamouti blocks along the eigen beams (benchmark scheme).

    :param beams: Eigen beams of the current channel realization.
    :type beams: mutwo.antijam_parameters.EigenBeams

    Symbol ``x1`` rides on beam ``u_a`` and ``x2`` on beam ``u_b``,
    ``X = [[x1, x2], [−x2*, x1*]] · diag(√δ1, √δ2) · U_H^H``.
    """

    def __init__(self, beams: antijam_parameters.EigenBeams):
        self._beams = beams
        self._symbol_pair_to_alamouti_matrix = (
            antijam_converters.SymbolPairToAlamoutiMatrix()
        )

    def convert(self, symbol_pair_to_convert: typing.Any) -> np.ndarray:
        """Beamform one pair ``(x1, x2)`` or an array of pairs with shape
        ``(B, 2)``.

        :return: Antenna samples ``[..., channel use, transmit antenna]``.
        """
        return (
            self._symbol_pair_to_alamouti_matrix.convert(symbol_pair_to_convert)
            @ self._beams.loading_matrix
        )
