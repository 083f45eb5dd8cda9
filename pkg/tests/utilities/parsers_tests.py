import pathlib
import tempfile
import unittest

from mutwo import antijam_utilities


class KeyValueConfigParserTest(unittest.TestCase):
    def setUp(self):
        self.parser = antijam_utilities.KeyValueConfigParser()

    def test_parse(self):
        self.assertEqual(
            self.parser.parse("scheme = rr-multi\njammed-slots = 12-25"),
            {"scheme": "rr-multi", "jammed_slots": "12-25"},
        )

    def test_parse_flag_style_keys(self):
        self.assertEqual(
            self.parser.parse("--sjr-start = -10\n--SJR-STOP: 10"),
            {"sjr_start": "-10", "sjr_stop": "10"},
        )

    def test_parse_comments_and_blank_lines(self):
        self.assertEqual(
            self.parser.parse("# sweep\n\n; old\nframes = 10  # per point\n"),
            {"frames": "10"},
        )

    def test_parse_twice_forgets(self):
        self.parser.parse("frames = 10")
        self.assertEqual(self.parser.parse("seed = 3"), {"seed": "3"})

    def test_parse_duplicate_key(self):
        self.assertRaises(
            antijam_utilities.InvalidConfigurationError,
            self.parser.parse,
            "seed = 1\nseed = 2",
        )

    def test_parse_line_without_value(self):
        self.assertRaises(
            antijam_utilities.InvalidConfigurationError,
            self.parser.parse,
            "seed",
        )

    def test_parse_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = pathlib.Path(directory) / "sweep.conf"
            path.write_text("esn0 = inf\n", encoding="utf-8")
            self.assertEqual(self.parser.parse_file(path), {"esn0": "inf"})


class ParseSlotListTest(unittest.TestCase):
    def test_range(self):
        self.assertEqual(
            antijam_utilities.parse_slot_list("12-25"), tuple(range(12, 26))
        )

    def test_mixed(self):
        self.assertEqual(
            antijam_utilities.parse_slot_list("0,3, 10-12"), (0, 3, 10, 11, 12)
        )

    def test_overlap_and_order(self):
        self.assertEqual(
            antijam_utilities.parse_slot_list("5, 1-3, 2-6"), (1, 2, 3, 4, 5, 6)
        )

    def test_empty(self):
        self.assertEqual(antijam_utilities.parse_slot_list(""), ())

    def test_invalid(self):
        for text in ("a", "3-1", "-2", "1-2-3"):
            self.assertRaises(
                antijam_utilities.InvalidInputError,
                antijam_utilities.parse_slot_list,
                text,
            )


if __name__ == "__main__":
    unittest.main()
