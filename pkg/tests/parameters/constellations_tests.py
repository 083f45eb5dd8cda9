import itertools
import math
import unittest

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities


class QamConstellationTest(unittest.TestCase):
    def setUp(self):
        self.qam4 = antijam_parameters.QamConstellation(4)
        self.qam16 = antijam_parameters.QamConstellation(16)
        self.qam64 = antijam_parameters.QamConstellation(64)

    def test_unsupported_order(self):
        for order in (2, 8, 32, 256):
            self.assertRaises(
                antijam_utilities.InvalidInputError,
                antijam_parameters.QamConstellation,
                order,
            )

    def test_bits_per_symbol(self):
        self.assertEqual(self.qam4.bits_per_symbol, 2)
        self.assertEqual(self.qam16.bits_per_symbol, 4)
        self.assertEqual(self.qam64.bits_per_symbol, 6)

    def test_qam4_labels(self):
        s = 1 / math.sqrt(2)
        np.testing.assert_allclose(
            self.qam4.points, (s + s * 1j, s - s * 1j, -s + s * 1j, -s - s * 1j)
        )
        self.assertEqual(self.qam4.label_tuple, ((0, 0), (0, 1), (1, 0), (1, 1)))

    def test_level_array(self):
        np.testing.assert_array_equal(
            self.qam4.level_array, [[1, 1], [1, -1], [-1, 1], [-1, -1]]
        )
        self.assertEqual(self.qam16.level_count, 4)
        for constellation in (self.qam16, self.qam64):
            level_array = constellation.level_array
            scale = constellation.points / (level_array[:, 0] + 1j * level_array[:, 1])
            np.testing.assert_allclose(scale, scale[0])

    def test_unit_energy(self):
        for constellation in (self.qam4, self.qam16, self.qam64):
            self.assertAlmostEqual(
                float(np.mean(np.abs(constellation.points) ** 2)), 1, places=12
            )

    def test_distinct_points(self):
        for constellation in (self.qam4, self.qam16, self.qam64):
            self.assertEqual(
                len(np.unique(np.round(constellation.points, 9))), len(constellation)
            )

    def test_gray_neighbours(self):
        for constellation in (self.qam16, self.qam64):
            distance = np.abs(
                constellation.points[:, np.newaxis] - constellation.points
            )
            minimal_distance = np.min(distance[distance > 1e-9])
            for first, second in itertools.combinations(range(len(constellation)), 2):
                if abs(distance[first, second] - minimal_distance) < 1e-9:
                    self.assertEqual(
                        int(
                            np.sum(
                                constellation.bit_matrix[first]
                                != constellation.bit_matrix[second]
                            )
                        ),
                        1,
                    )

    def test_bits_to_indices(self):
        self.assertEqual(
            self.qam16.bits_to_indices([0, 0, 0, 1, 1, 1, 1, 1]).tolist(), [1, 15]
        )

    def test_bits_to_indices_wrong_length(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError, self.qam16.bits_to_indices, [0, 1, 1]
        )

    def test_bits_to_indices_no_bits(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError, self.qam4.bits_to_indices, [0, 2]
        )

    def test_indices_to_bits(self):
        self.assertEqual(
            self.qam4.indices_to_bits([3, 0, 2]).tolist(), [1, 1, 0, 0, 1, 0]
        )

    def test_slice(self):
        self.assertEqual(self.qam4.slice(0.9 + 0.8j), (0, (0, 0)))
        self.assertEqual(self.qam4.slice(-0.1 - 3j), (3, (1, 1)))

    def test_slice_points(self):
        for constellation in (self.qam4, self.qam16, self.qam64):
            self.assertEqual(
                constellation.slice_array(constellation.points).tolist(),
                list(range(len(constellation))),
            )

    def test_slice_tie_goes_to_lowest_index(self):
        # 0 is equally far from all four points
        self.assertEqual(self.qam4.slice(0), (0, (0, 0)))

    def test_slice_nan(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError, self.qam4.slice, complex(math.nan, 0)
        )

    def test_equality(self):
        self.assertEqual(self.qam16, antijam_parameters.QamConstellation(16))
        self.assertNotEqual(self.qam16, self.qam4)
        self.assertEqual(
            hash(self.qam16), hash(antijam_parameters.QamConstellation(16))
        )


if __name__ == "__main__":
    unittest.main()
