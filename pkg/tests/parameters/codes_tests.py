import math
import unittest

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities


class Rate2BlockTest(unittest.TestCase):
    def test_phi2(self):
        block = antijam_parameters.Rate2Block(1, 1, 1, 1, math.pi / 6)
        self.assertEqual(block.phi2, math.pi / 2 - math.pi / 6)

    def test_invalid_phi1(self):
        for phi1 in (0, math.pi / 2, -0.1, 2):
            self.assertRaises(
                antijam_utilities.InvalidInputError,
                antijam_parameters.Rate2Block,
                1,
                1,
                1,
                1,
                phi1,
            )


class SuperSymbolPairTest(unittest.TestCase):
    def test_from_block_first_symbol(self):
        pair = antijam_parameters.SuperSymbolPair.from_block(
            antijam_parameters.Rate2Block(1, 0, 0, 0, math.pi / 6)
        )
        self.assertAlmostEqual(pair.c1, 0.5)
        self.assertEqual(pair.c2, 0)

    def test_from_block_second_symbol(self):
        pair = antijam_parameters.SuperSymbolPair.from_block(
            antijam_parameters.Rate2Block(0, 1j, 0, 0, math.pi / 3)
        )
        # −(1j)*·cos(π/3) = 0.5j
        self.assertAlmostEqual(pair.c1, 0.5j)

    def test_from_block_second_epoch(self):
        pair = antijam_parameters.SuperSymbolPair.from_block(
            antijam_parameters.Rate2Block(0, 0, 1, 1, math.pi / 6)
        )
        phi2 = math.pi / 3
        self.assertAlmostEqual(pair.c2, math.sin(phi2) - math.cos(phi2))

    def test_to_code_matrix(self):
        matrix = antijam_parameters.SuperSymbolPair(1 + 1j, 2 - 1j).to_code_matrix()
        np.testing.assert_array_equal(
            matrix, [[1 + 1j, 2 - 1j], [-2 - 1j, 1 - 1j]]
        )

    def test_code_matrix_is_orthogonal(self):
        matrix = antijam_parameters.SuperSymbolPair(0.3 - 0.2j, -1 + 0.5j).to_code_matrix()
        gain = abs(0.3 - 0.2j) ** 2 + abs(-1 + 0.5j) ** 2
        np.testing.assert_allclose(
            matrix.conj().T @ matrix, gain * np.identity(2), atol=1e-12
        )


class AntennaStreamsTest(unittest.TestCase):
    def test_from_code_matrix_array(self):
        code_matrix_array = np.arange(8).reshape(2, 2, 2)
        streams = antijam_parameters.AntennaStreams.from_code_matrix_array(
            code_matrix_array
        )
        self.assertEqual(streams.s1.tolist(), [0, 2, 4, 6])
        self.assertEqual(streams.s2.tolist(), [1, 3, 5, 7])
        self.assertEqual(streams.slot_count, 4)
        np.testing.assert_array_equal(
            streams.to_code_matrix_array(), code_matrix_array
        )

    def test_unequal_length(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError,
            antijam_parameters.AntennaStreams,
            [1, 2],
            [1],
        )

    def test_odd_slot_count(self):
        streams = antijam_parameters.AntennaStreams([1, 2, 3], [1, 2, 3])
        self.assertRaises(
            antijam_utilities.InvalidInputError, streams.to_code_matrix_array
        )


if __name__ == "__main__":
    unittest.main()
