import unittest

from mutwo import antijam_utilities


class ExceptionTest(unittest.TestCase):
    def test_invalid_input_error(self):
        error = antijam_utilities.InvalidInputError("phi1", "out of range")
        self.assertIsInstance(error, ValueError)
        self.assertIn("'phi1'", str(error))

    def test_invalid_configuration_error(self):
        error = antijam_utilities.InvalidConfigurationError("frames", "negative")
        self.assertIsInstance(error, ValueError)
        self.assertIn("'frames'", str(error))

    def test_degenerate_channel_error(self):
        self.assertIsInstance(
            antijam_utilities.DegenerateChannelError("zero"), ArithmeticError
        )

    def test_unusable_slot_access_warning(self):
        warning = antijam_utilities.UnusableSlotAccessWarning(3)
        self.assertIsInstance(warning, RuntimeWarning)
        self.assertIn("3 masked slot(s)", str(warning))


if __name__ == "__main__":
    unittest.main()
