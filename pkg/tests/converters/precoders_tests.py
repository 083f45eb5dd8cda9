import unittest

import numpy as np

from mutwo import antijam_converters
from mutwo import antijam_parameters
from mutwo import antijam_utilities


class AntennaStreamsToPrecodedStreamsTest(unittest.TestCase):
    def test_convert(self):
        profile = antijam_parameters.PrecoderProfile.multiband(4, (2, 3), 2)
        streams = antijam_converters.AntennaStreamsToPrecodedStreams(profile).convert(
            antijam_parameters.AntennaStreams(np.ones(4), 2 * np.ones(4))
        )
        np.testing.assert_allclose(streams.s1, (0, 0, 1, 1))
        np.testing.assert_allclose(streams.s2, (0, 0, 2, 2))

    def test_slot_count_mismatch(self):
        precoder = antijam_converters.AntennaStreamsToPrecodedStreams(
            antijam_parameters.PrecoderProfile.full(4, 4)
        )
        self.assertRaises(
            antijam_utilities.InvalidInputError,
            precoder.convert,
            antijam_parameters.AntennaStreams(np.ones(2), np.ones(2)),
        )


class SpectrumToDecodedSpectrumTest(unittest.TestCase):
    def test_full_round_trip(self):
        profile = antijam_parameters.PrecoderProfile.full(4, 1)
        streams = antijam_parameters.AntennaStreams((1, 2, 3, 4), (5, 6, 7, 8j))
        precoded = antijam_converters.AntennaStreamsToPrecodedStreams(
            profile
        ).convert(streams)
        decoded = antijam_converters.SpectrumToDecodedSpectrum(profile).convert(
            np.stack((precoded.s1, precoded.s2))
        )
        self.assertFalse(np.ma.is_masked(decoded))
        np.testing.assert_allclose(
            np.ma.getdata(decoded), np.stack((streams.s1, streams.s2))
        )

    def test_multiband_mask(self):
        profile = antijam_parameters.PrecoderProfile.multiband(4, (1,), 4)
        decoded = antijam_converters.SpectrumToDecodedSpectrum(profile).convert(
            [[1, 4, 1, 1], [2, 2, 2, 2]]
        )
        self.assertEqual(
            np.ma.getmaskarray(decoded).tolist(),
            [[True, False, True, True], [True, False, True, True]],
        )
        self.assertEqual(decoded[0, 1], 2)
        self.assertEqual(decoded[1, 1], 1)
        self.assertTrue(np.all(np.isfinite(np.ma.getdata(decoded))))

    def test_wrong_length(self):
        decoder = antijam_converters.SpectrumToDecodedSpectrum(
            antijam_parameters.PrecoderProfile.full(4, 1)
        )
        self.assertRaises(antijam_utilities.InvalidInputError, decoder.convert, [1, 2])


if __name__ == "__main__":
    unittest.main()
