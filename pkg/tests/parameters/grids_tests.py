import unittest

import numpy as np

from mutwo import antijam_parameters
from mutwo import antijam_utilities


class OfdmGridTest(unittest.TestCase):
    def test_default(self):
        grid = antijam_parameters.OfdmGrid()
        self.assertEqual(grid.fft_size, 64)
        self.assertEqual(grid.cp_length, 16)
        self.assertEqual(grid.data_count, 52)
        self.assertEqual(grid.symbol_length, 80)
        self.assertNotIn(0, grid.data_index_tuple)
        for guard_bin in range(27, 38):
            self.assertNotIn(guard_bin, grid.data_index_tuple)

    def test_data_bins_ascend_in_frequency(self):
        grid = antijam_parameters.OfdmGrid()
        frequency = grid.bin_to_normalized_frequency(grid.data_index_array)
        self.assertTrue(np.all(np.diff(frequency) > 0))
        self.assertAlmostEqual(float(frequency[0]), -26 / 64)
        self.assertAlmostEqual(float(frequency[-1]), 26 / 64)

    def test_custom(self):
        grid = antijam_parameters.OfdmGrid(16, (1, 2, 14, 15), 4)
        self.assertEqual(grid.data_count, 4)
        self.assertEqual(grid.symbol_length, 20)

    def test_invalid(self):
        for argument_tuple in (
            (48, (1, 2), 4),
            (16, (0, 1), 4),
            (16, (1, 16), 4),
            (16, (1, 1), 4),
            (16, (), 4),
            (16, (1, 2), 17),
        ):
            self.assertRaises(
                antijam_utilities.InvalidInputError,
                antijam_parameters.OfdmGrid,
                *argument_tuple,
            )


if __name__ == "__main__":
    unittest.main()
