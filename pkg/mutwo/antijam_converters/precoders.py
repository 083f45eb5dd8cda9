"""Apply full and multi-band precoders and their decoders."""

import typing

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities
from mutwo import core_converters

__all__ = ("AntennaStreamsToPrecodedStreams", "SpectrumToDecodedSpectrum")


class AntennaStreamsToPrecodedStreams(core_converters.abc.Converter):
    """Scale slot ``k`` of both antenna streams by ``ρ_k``.

    :param profile: The precoder.
    :type profile: mutwo.antijam_parameters.PrecoderProfile
    """

    def __init__(self, profile: antijam_parameters.PrecoderProfile):
        self._profile = profile

    def convert(
        self, streams_to_convert: antijam_parameters.AntennaStreams
    ) -> antijam_parameters.AntennaStreams:
        if streams_to_convert.slot_count != self._profile.slot_count:
            raise antijam_utilities.InvalidInputError(
                "streams_to_convert",
                f"{streams_to_convert.slot_count} slots don't match a precoder "
                f"for {self._profile.slot_count} slots",
            )
        rho = self._profile.rho
        return antijam_parameters.AntennaStreams(
            streams_to_convert.s1 * rho, streams_to_convert.s2 * rho
        )


class SpectrumToDecodedSpectrum(core_converters.abc.Converter):
    """Undo the precoder weights on the received slots.

    :param profile: The precoder which was used at the transmitter.
    :type profile: mutwo.antijam_parameters.PrecoderProfile

    Protected slots are divided by ``ρ_k``. Slots with ``ρ_k = 0`` carry
    no data: they are masked in the returned :class:`numpy.ma.MaskedArray`
    and never divided.

    **Example:**

    >>> from mutwo import antijam_converters, antijam_parameters
    >>> profile = antijam_parameters.PrecoderProfile.multiband(4, (2, 3), 1)
    >>> decoder = antijam_converters.SpectrumToDecodedSpectrum(profile)
    >>> decoder.convert([1, 1, 1, 1]).mask
    array([ True,  True, False, False])
    """

    def __init__(self, profile: antijam_parameters.PrecoderProfile):
        self._profile = profile

    def convert(self, spectrum_to_convert: typing.Any) -> np.ma.MaskedArray:
        """Decode slot values.

        :param spectrum_to_convert: Received slot values with shape
            ``(..., slot_count)`` (for instance one row per receive
            antenna).
        """
        spectrum = np.asarray(spectrum_to_convert, dtype=complex)
        profile = self._profile
        if spectrum.ndim == 0 or spectrum.shape[-1] != profile.slot_count:
            raise antijam_utilities.InvalidInputError(
                "spectrum_to_convert",
                f"expected {profile.slot_count} slots, got shape {spectrum.shape}",
            )
        protected = profile.protected_mask
        decoded = np.zeros(spectrum.shape, dtype=complex)
        decoded[..., protected] = spectrum[..., protected] / profile.rho[protected]
        return np.ma.MaskedArray(
            decoded, mask=np.broadcast_to(~protected, spectrum.shape).copy()
        )
