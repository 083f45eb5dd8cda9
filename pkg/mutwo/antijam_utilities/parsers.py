import configparser
import pathlib
import re
import typing

import ranges

from mutwo import antijam_utilities

__all__ = ("KeyValueConfigParser", "parse_slot_list")


class KeyValueConfigParser(configparser.ConfigParser):
    """Parse plain ``key = value`` lines to a dict of strings.

    Keys are normalised, so that ``--sjr-start``, ``sjr-start`` and
    ``sjr_start`` all become ``sjr_start``. ``#`` and ``;`` start
    comments. See :class:`configparser.ConfigParser` for provided
    arguments.

    **Example:**

    >>> from mutwo import antijam_utilities
    >>> p = antijam_utilities.KeyValueConfigParser()
    >>> p.parse("scheme = rr-full\\n--frames = 10")
    {'scheme': 'rr-full', 'frames': '10'}
    """

    SECTION_NAME = "antijam"

    def __init__(self, *args, **kwargs):
        super().__init__(
            *args,
            allow_no_value=False,
            empty_lines_in_values=False,
            interpolation=None,
            comment_prefixes=("#", ";"),
            inline_comment_prefixes=("#",),
            **kwargs,
        )

    def optionxform(self, optionstr: str) -> str:
        return optionstr.strip().lstrip("-").replace("-", "_").lower()

    def parse(self, s: str) -> dict[str, str]:
        self.clear()
        try:
            self.read_string(f"[{self.SECTION_NAME}]\n{s}")
        except configparser.Error as error:
            raise antijam_utilities.InvalidConfigurationError(
                "config file", str(error).splitlines()[0]
            )
        return {key: value.strip() for key, value in self[self.SECTION_NAME].items()}

    def parse_file(self, path: typing.Union[str, pathlib.Path]) -> dict[str, str]:
        return self.parse(pathlib.Path(path).read_text(encoding="utf-8"))


_SLOT_TOKEN = re.compile(r"^(\d+)(?:-(\d+))?$")


def parse_slot_list(text: str) -> tuple[int, ...]:
    """Expand a comma separated list of slots and inclusive slot ranges.

    :param text: For instance ``"12-25"`` or ``"0,3,10-12"``.
    :return: Sorted tuple of unique slot indices.

    **Example:**

    >>> from mutwo import antijam_utilities
    >>> antijam_utilities.parse_slot_list("3, 0-1, 2")
    (0, 1, 2, 3)
    """
    range_set = ranges.RangeSet()
    for token in (token.strip() for token in text.split(",")):
        if not token:
            continue
        if (match := _SLOT_TOKEN.match(token)) is None:
            raise antijam_utilities.InvalidInputError(
                "slot list", f"can't parse '{token}'"
            )
        start = int(match.group(1))
        end = int(match.group(2)) if match.group(2) is not None else start
        if end < start:
            raise antijam_utilities.InvalidInputError(
                "slot list", f"range '{token}' is falling"
            )
        range_set.add(ranges.Range(start, end + 1))
    return tuple(
        slot for slot_range in range_set for slot in range(slot_range.start, slot_range.end)
    )
