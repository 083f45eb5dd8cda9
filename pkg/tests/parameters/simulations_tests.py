import math
import unittest

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities


class SchemeTest(unittest.TestCase):
    def test_rate(self):
        self.assertEqual(antijam_parameters.Scheme.RR_FULL.rate, 2)
        self.assertEqual(antijam_parameters.Scheme.RR_MULTI.rate, 2)
        self.assertEqual(antijam_parameters.Scheme.ALAMOUTI_BF.rate, 1)

    def test_default_qam_order(self):
        self.assertEqual(antijam_parameters.Scheme.RR_FULL.default_qam_order, 4)
        self.assertEqual(antijam_parameters.Scheme.ALAMOUTI_BF.default_qam_order, 16)


class FrameGeometryTest(unittest.TestCase):
    def setUp(self):
        self.sf_pairs = antijam_parameters.FrameGeometry("sf-pairs")
        self.time_slots = antijam_parameters.FrameGeometry("time-slots")

    def test_counts(self):
        self.assertEqual(self.sf_pairs.symbol_count, 1)
        self.assertEqual(self.sf_pairs.slot_count, 52)
        self.assertEqual(self.sf_pairs.block_count, 26)
        self.assertEqual(self.sf_pairs.sample_count, 80)
        self.assertEqual(self.time_slots.symbol_count, 2)
        self.assertEqual(self.time_slots.slot_count, 104)
        self.assertEqual(self.time_slots.block_count, 52)
        self.assertEqual(self.time_slots.sample_count, 160)

    def test_time_slots_placement(self):
        self.assertEqual(self.time_slots.slot_symbol_array[:4].tolist(), [0, 1, 0, 1])
        self.assertEqual(
            self.time_slots.slot_subcarrier_array[:4].tolist(), [0, 0, 1, 1]
        )

    def test_slots_to_spectrum(self):
        for geometry in (self.sf_pairs, self.time_slots):
            slot_array = np.arange(geometry.slot_count) + 1j
            spectrum = geometry.slots_to_spectrum(slot_array)
            self.assertEqual(spectrum.shape, (geometry.symbol_count, 64))
            self.assertEqual(np.count_nonzero(spectrum), geometry.slot_count)
            np.testing.assert_array_equal(
                geometry.spectrum_to_slots(spectrum), slot_array
            )
        spectrum = self.sf_pairs.slots_to_spectrum(np.arange(52) + 1)
        self.assertEqual(spectrum[0, 38], 1)
        self.assertEqual(spectrum[0, 26], 52)
        self.assertEqual(spectrum[0, 0], 0)

    def test_slots_to_spectrum_antennas(self):
        spectrum = self.time_slots.slots_to_spectrum(np.ones((2, 104)))
        self.assertEqual(spectrum.shape, (2, 2, 64))

    def test_subcarriers_to_block_tuple(self):
        self.assertEqual(
            self.sf_pairs.subcarriers_to_block_tuple(range(12, 26)),
            tuple(range(6, 13)),
        )
        self.assertEqual(self.sf_pairs.subcarriers_to_block_tuple((3,)), (1,))
        self.assertEqual(
            self.time_slots.subcarriers_to_block_tuple((3, 5)), (3, 5)
        )
        self.assertEqual(self.sf_pairs.subcarriers_to_block_tuple(()), ())

    def test_subcarriers_to_block_tuple_invalid(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError,
            self.sf_pairs.subcarriers_to_block_tuple,
            (52,),
        )

    def test_block_tuple_to_slot_tuple(self):
        self.assertEqual(
            antijam_parameters.FrameGeometry.block_tuple_to_slot_tuple((1, 3)),
            (2, 3, 6, 7),
        )

    def test_odd_data_count(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError,
            antijam_parameters.FrameGeometry,
            "sf-pairs",
            antijam_parameters.OfdmGrid(16, (1, 2, 3), 4),
        )


class SweepConfigTest(unittest.TestCase):
    def test_defaults(self):
        config = antijam_parameters.SweepConfig()
        self.assertEqual(config.scheme, antijam_parameters.Scheme.RR_FULL)
        self.assertEqual(config.qam_order, 4)
        self.assertAlmostEqual(config.phi1, math.atan(1 / 2))
        self.assertEqual(config.mapping, antijam_parameters.ResourceMapping.SF_PAIRS)
        self.assertEqual(config.symbol_energy, 2)
        self.assertEqual(config.rate, 2)

    def test_alamouti_defaults(self):
        config = antijam_parameters.SweepConfig("alamouti-bf")
        self.assertEqual(config.qam_order, 16)
        self.assertAlmostEqual(config.phi1, math.atan(1 / 4))
        self.assertEqual(config.rate, 1)

    def test_noise(self):
        self.assertTrue(
            antijam_parameters.SweepConfig(es_n0_db=math.inf).noise.is_noiseless
        )
        self.assertAlmostEqual(
            antijam_parameters.SweepConfig(es_n0_db=10).noise.n0, 0.2
        )

    def test_hashable(self):
        self.assertEqual(
            hash(antijam_parameters.SweepConfig(seed=3)),
            hash(antijam_parameters.SweepConfig(seed=3)),
        )

    def test_genie_protection(self):
        jammer = antijam_parameters.JammerSpec("multi-band", range(12, 26))
        config = antijam_parameters.SweepConfig("rr-multi", jammer)
        self.assertEqual(config.protected_subcarrier_tuple, tuple(range(12, 26)))
        config = antijam_parameters.SweepConfig(
            "rr-multi", jammer, jammed_slot_tuple=(0, 1)
        )
        self.assertEqual(config.protected_subcarrier_tuple, (0, 1))

    def test_jammer_at(self):
        config = antijam_parameters.SweepConfig(
            jammer=antijam_parameters.JammerSpec("all-band")
        )
        self.assertEqual(config.jammer_at(-5).sjr_db, -5)

    def test_invalid(self):
        for keyword_dict in (
            {"scheme": "rr-half"},
            {"mapping": "diagonal"},
            {"sjr_db_tuple": ()},
            {"sjr_db_tuple": (math.nan,)},
            {"sjr_db_tuple": (0.0, -math.inf)},
            {"es_n0_db": math.nan},
            {"qam_order": 8},
            {"frames_per_point": 0},
            {"phi1": 0},
            {"phi1": math.pi / 2},
            {"error_target": -1},
            {"transmit_power": 0},
            {"worker_count": 0},
            {"seed": -1},
            {"jammed_slot_tuple": (52,)},
            {"scheme": "rr-multi"},
        ):
            with self.subTest(keyword_dict=keyword_dict):
                self.assertRaises(
                    antijam_utilities.InvalidConfigurationError,
                    antijam_parameters.SweepConfig,
                    **keyword_dict,
                )

    def test_make_sjr_tuple(self):
        self.assertEqual(
            antijam_parameters.SweepConfig.make_sjr_tuple(-20, 30, 5),
            tuple(float(sjr) for sjr in range(-20, 31, 5)),
        )
        self.assertEqual(
            antijam_parameters.SweepConfig.make_sjr_tuple(0, 1, 0.1)[-1], 1.0
        )
        self.assertEqual(antijam_parameters.SweepConfig.make_sjr_tuple(3, 3, 1), (3.0,))

    def test_make_sjr_tuple_invalid(self):
        for argument_tuple in (
            (0, 10, 0),
            (0, 10, -1),
            (10, 0, 1),
            (-math.inf, 10, 5),
            (0, math.inf, 5),
            (0, 10, math.nan),
        ):
            self.assertRaises(
                antijam_utilities.InvalidConfigurationError,
                antijam_parameters.SweepConfig.make_sjr_tuple,
                *argument_tuple,
            )


class TrialRecordTest(unittest.TestCase):
    def test_add(self):
        self.assertEqual(
            antijam_parameters.TrialRecord(10, 1, 0)
            + antijam_parameters.TrialRecord(5, 2, 1),
            antijam_parameters.TrialRecord(15, 3, 1),
        )


class MetricRowTest(unittest.TestCase):
    def make_row(self, bits, bit_errors):
        return antijam_parameters.MetricRow(
            "rr-full", "none", 0.0, 25.0, 1, bits, bit_errors, 2.0, 4.0, 0
        )

    def test_ber(self):
        self.assertEqual(self.make_row(208, 52).ber, 0.25)

    def test_ber_without_bits(self):
        self.assertEqual(self.make_row(0, 0).ber, 0)

    def test_invalid_counts(self):
        self.assertRaises(antijam_utilities.InvalidInputError, self.make_row, 10, 11)
        self.assertRaises(antijam_utilities.InvalidInputError, self.make_row, 10, -1)


class PsdEstimateTest(unittest.TestCase):
    def test_band_mean_db(self):
        psd = antijam_parameters.PsdEstimate(
            (-0.5, -0.25, 0, 0.25), (0, 0, 10 * math.log10(3), -300)
        )
        self.assertEqual(len(psd), 4)
        self.assertAlmostEqual(psd.band_mean_db(-0.5, 0), 0)
        self.assertAlmostEqual(psd.band_mean_db(-0.25, 0.1), math.log10(2) * 10)

    def test_empty_band(self):
        psd = antijam_parameters.PsdEstimate((0, 0.25), (0, 0))
        self.assertRaises(antijam_utilities.InvalidInputError, psd.band_mean_db, 0.3, 0.4)

    def test_invalid(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError,
            antijam_parameters.PsdEstimate,
            (0, 0.25),
            (0,),
        )


if __name__ == "__main__":
    unittest.main()
