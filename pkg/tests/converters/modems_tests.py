import unittest

import numpy as np

from mutwo import antijam_converters
from mutwo import antijam_parameters
from mutwo import antijam_utilities


class BitArrayToSymbolArrayTest(unittest.TestCase):
    def test_convert(self):
        constellation = antijam_parameters.QamConstellation(16)
        converter = antijam_converters.BitArrayToSymbolArray(constellation)
        np.testing.assert_array_equal(
            converter.convert([0, 0, 0, 0, 1, 1, 1, 1]), constellation.points[[0, 15]]
        )

    def test_wrong_bit_count(self):
        converter = antijam_converters.BitArrayToSymbolArray(
            antijam_parameters.QamConstellation(4)
        )
        self.assertRaises(antijam_utilities.InvalidInputError, converter.convert, [1])


class OfdmTest(unittest.TestCase):
    def setUp(self):
        self.grid = antijam_parameters.OfdmGrid()
        self.modulator = antijam_converters.SpectrumToOfdmSamples(self.grid)
        self.demodulator = antijam_converters.OfdmSamplesToSpectrum(self.grid)

    def test_round_trip(self):
        generator = np.random.default_rng(0)
        spectrum = antijam_utilities.complex_gaussian(generator, (5, 52))
        np.testing.assert_allclose(
            self.demodulator.convert(self.modulator.convert(spectrum)),
            spectrum,
            atol=1e-12,
        )

    def test_cyclic_prefix(self):
        samples = self.modulator.convert(np.arange(52) * 1j)
        self.assertEqual(samples.shape, (80,))
        np.testing.assert_allclose(samples[:16], samples[-16:])

    def test_single_subcarrier(self):
        spectrum = np.zeros(52, dtype=complex)
        spectrum[30] = 1
        samples = self.modulator.convert(spectrum)
        np.testing.assert_allclose(np.abs(samples), np.full(80, 1 / 8), atol=1e-15)

    def test_energy(self):
        spectrum = np.ones(52)
        samples = self.modulator.convert(spectrum)
        self.assertAlmostEqual(float(np.sum(np.abs(samples[16:]) ** 2)), 52)

    def test_full_band(self):
        modulator = antijam_converters.SpectrumToOfdmSamples(self.grid, True)
        demodulator = antijam_converters.OfdmSamplesToSpectrum(self.grid, True)
        spectrum = np.arange(64) - 3j
        np.testing.assert_allclose(
            demodulator.convert(modulator.convert(spectrum)), spectrum, atol=1e-12
        )

    def test_guard_bins_stay_empty(self):
        demodulator = antijam_converters.OfdmSamplesToSpectrum(self.grid, True)
        spectrum = demodulator.convert(self.modulator.convert(np.ones(52)))
        np.testing.assert_allclose(spectrum[[0] + list(range(27, 38))], 0, atol=1e-12)

    def test_wrong_length(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError, self.modulator.convert, np.ones(64)
        )
        self.assertRaises(
            antijam_utilities.InvalidInputError, self.demodulator.convert, np.ones(64)
        )


if __name__ == "__main__":
    unittest.main()
