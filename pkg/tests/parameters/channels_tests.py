import math
import unittest

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities


class ChannelRealizationTest(unittest.TestCase):
    def test_column(self):
        channel = antijam_parameters.ChannelRealization([[1, 2], [3, 4]])
        np.testing.assert_array_equal(channel.column(1), (2, 4))

    def test_transmit_correlation(self):
        channel = antijam_parameters.ChannelRealization([[1, 1j], [0, 1]])
        np.testing.assert_allclose(
            channel.transmit_correlation(), [[2, 1j], [-1j, 1]]
        )

    def test_draw_statistics(self):
        generator = np.random.default_rng(2)
        gain_array = np.array(
            [
                antijam_parameters.ChannelRealization.draw(generator).h
                for _ in range(20000)
            ]
        )
        self.assertAlmostEqual(
            float(np.mean(np.abs(gain_array) ** 2)), 1, delta=0.03
        )

    def test_invalid(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError,
            antijam_parameters.ChannelRealization,
            [1, 2],
        )


class JammerSpecTest(unittest.TestCase):
    def test_default(self):
        jammer = antijam_parameters.JammerSpec()
        self.assertFalse(jammer.is_active)
        self.assertEqual(jammer.path, antijam_parameters.JammerPath.FADED)

    def test_string_values(self):
        jammer = antijam_parameters.JammerSpec("multi-band", (25, 12, 12), 5, "direct")
        self.assertEqual(jammer.kind, antijam_parameters.JammerKind.MULTI_BAND)
        self.assertEqual(jammer.path, antijam_parameters.JammerPath.DIRECT)
        self.assertEqual(jammer.jammed_slot_tuple, (12, 25))
        self.assertTrue(jammer.is_active)

    def test_multi_band_without_slots(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError,
            antijam_parameters.JammerSpec,
            antijam_parameters.JammerKind.MULTI_BAND,
        )

    def test_nan_sjr(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError,
            antijam_parameters.JammerSpec,
            "all-band",
            (),
            math.nan,
        )

    def test_with_sjr(self):
        jammer = antijam_parameters.JammerSpec("barrage")
        self.assertEqual(jammer.with_sjr(-10).sjr_db, -10)
        self.assertEqual(jammer.with_sjr(-10).kind, jammer.kind)
        self.assertEqual(jammer.sjr_db, 0)


class NoiseSpecTest(unittest.TestCase):
    def test_from_es_n0_db(self):
        self.assertAlmostEqual(
            antijam_parameters.NoiseSpec.from_es_n0_db(10, 2).n0, 0.2
        )

    def test_infinite_es_n0_is_noiseless(self):
        noise = antijam_parameters.NoiseSpec.from_es_n0_db(math.inf, 2)
        self.assertTrue(noise.is_noiseless)
        np.testing.assert_array_equal(
            noise.draw(np.random.default_rng(0), (2, 3)), np.zeros((2, 3))
        )

    def test_draw(self):
        noise = antijam_parameters.NoiseSpec(0.5)
        samples = noise.draw(np.random.default_rng(4), 100000)
        self.assertAlmostEqual(float(np.mean(np.abs(samples) ** 2)), 0.5, delta=0.02)

    def test_invalid(self):
        for n0 in (-1, math.inf, math.nan):
            self.assertRaises(
                antijam_utilities.InvalidInputError, antijam_parameters.NoiseSpec, n0
            )


if __name__ == "__main__":
    unittest.main()
