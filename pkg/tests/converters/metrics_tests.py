import pathlib
import tempfile
import unittest

from mutwo import antijam_converters
from mutwo import antijam_parameters
from mutwo import antijam_utilities

HEADER = "scheme,jammer,sjr_db,es_n0_db,frames,bits,bit_errors,ber,rate,spectral_efficiency,seed"


class SpectralEfficiencyTest(unittest.TestCase):
    def test_spectral_efficiency(self):
        self.assertEqual(antijam_converters.spectral_efficiency(2, 4, 0), 4)
        self.assertAlmostEqual(antijam_converters.spectral_efficiency(1, 16, 0.3), 2.8)
        self.assertEqual(antijam_converters.spectral_efficiency(2, 64, 1), 0)

    def test_invalid(self):
        for argument_tuple in ((2, 4, -0.1), (2, 4, 1.5), (2, 6, 0), (0, 4, 0)):
            self.assertRaises(
                antijam_utilities.InvalidInputError,
                antijam_converters.spectral_efficiency,
                *argument_tuple,
            )


class MetricCsvTest(unittest.TestCase):
    def setUp(self):
        self.metric_row_tuple = (
            antijam_parameters.MetricRow(
                "rr-full", "all-band", -5.0, 25.0, 10, 2080, 13, 2.0, 3.975, 7
            ),
            antijam_parameters.MetricRow(
                "rr-full", "all-band", 0.1, float("inf"), 10, 2080, 0, 2.0, 4.0, 7
            ),
        )

    def test_header_only(self):
        self.assertEqual(
            antijam_converters.MetricRowSequenceToCsv().convert(()), HEADER + "\n"
        )

    def test_convert(self):
        line_list = (
            antijam_converters.MetricRowSequenceToCsv()
            .convert(self.metric_row_tuple)
            .splitlines()
        )
        self.assertEqual(line_list[0], HEADER)
        self.assertEqual(
            line_list[1],
            "rr-full,all-band,-5.0,25.0,10,2080,13,6.250000000000e-03,2.0,3.975,7",
        )
        self.assertEqual(
            line_list[2],
            "rr-full,all-band,0.1,inf,10,2080,0,0.000000000000e+00,2.0,4.0,7",
        )

    def test_round_trip(self):
        with tempfile.TemporaryDirectory() as directory:
            path = pathlib.Path(directory) / "sweep.csv"
            antijam_converters.MetricRowSequenceToCsv().convert(
                self.metric_row_tuple, path
            )
            self.assertEqual(
                antijam_converters.CsvToMetricRowTuple().convert_file(path),
                self.metric_row_tuple,
            )

    def test_unexpected_header(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError,
            antijam_converters.CsvToMetricRowTuple().convert,
            "scheme,ber\nrr-full,0\n",
        )

    def test_broken_line(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError,
            antijam_converters.CsvToMetricRowTuple().convert,
            HEADER + "\nrr-full,none,zero,25.0,1,208,0,0,2.0,4.0,0\n",
        )

    def test_unwritable_destination(self):
        with tempfile.TemporaryDirectory() as directory:
            self.assertRaises(
                OSError,
                antijam_converters.MetricRowSequenceToCsv().convert,
                self.metric_row_tuple,
                pathlib.Path(directory) / "missing" / "sweep.csv",
            )


if __name__ == "__main__":
    unittest.main()
