import unittest

from mutwo import antijam_converters


class ValidationSuiteTest(unittest.TestCase):
    def test_convert(self):
        validation_suite = antijam_converters.ValidationSuite(
            statistic_count=200,
            draw_count=50,
            noiseless_bit_count=1000,
            mapping_frame_count=4,
            ordering_frame_count=4,
            psd_frame_count=400,
        )
        validation_result_tuple = validation_suite.convert(seed=1)
        name_to_result = {
            validation_result.name: validation_result
            for validation_result in validation_result_tuple
        }
        self.assertEqual(
            tuple(name_to_result),
            (
                "oracle-equivalence",
                "complexity",
                "evcm-orthogonality",
                "numerics",
                "noiseless-integrity",
                "jammer-calibration",
                "mapping-equivalence",
                "scheme-ordering",
                "psd-sanity",
            ),
        )
        for name in (
            "oracle-equivalence",
            "complexity",
            "evcm-orthogonality",
            "numerics",
            "noiseless-integrity",
            "jammer-calibration",
            "psd-sanity",
        ):
            with self.subTest(name=name):
                self.assertTrue(
                    name_to_result[name].is_passed, name_to_result[name].detail
                )
        # Too few frames to judge, but both schemes have to be reported.
        self.assertIn("rr-full", name_to_result["scheme-ordering"].detail)
        self.assertIn("alamouti-bf", name_to_result["scheme-ordering"].detail)


if __name__ == "__main__":
    unittest.main()
