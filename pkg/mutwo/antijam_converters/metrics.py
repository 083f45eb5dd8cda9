"""Spectral efficiency and the CSV files of sweep results."""

import csv
import io
import math
import pathlib
import typing

from mutwo import antijam_parameters
from mutwo import antijam_utilities
from mutwo import core_converters

__all__ = ("spectral_efficiency", "MetricRowSequenceToCsv", "CsvToMetricRowTuple")


def spectral_efficiency(rate: float, qam_order: int, ber: float) -> float:
    """Useful bits per channel use ``R · log2 |Q| · (1 − BER)``.

    :param rate: Symbols per channel use.
    :param qam_order: Constellation size ``|Q|``.
    :param ber: Bit error rate within ``[0, 1]``.

    **Example:**

    >>> from mutwo import antijam_converters
    >>> antijam_converters.spectral_efficiency(2, 4, 0)
    4.0
    """
    if not 0 <= ber <= 1:
        raise antijam_utilities.InvalidInputError(
            "ber", f"has to be within [0, 1], got {ber}"
        )
    if qam_order < 2 or qam_order & (qam_order - 1):
        raise antijam_utilities.InvalidInputError(
            "qam_order", f"has to be a power of two, got {qam_order}"
        )
    if not rate > 0:
        raise antijam_utilities.InvalidInputError(
            "rate", f"has to be positive, got {rate}"
        )
    return float(rate * math.log2(qam_order) * (1 - ber))


class MetricRowSequenceToCsv(core_converters.abc.Converter):
    """Write sweep results as CSV.

    The header is
    ``scheme,jammer,sjr_db,es_n0_db,frames,bits,bit_errors,ber,rate,spectral_efficiency,seed``.
    Floats are written with :func:`repr`, so they read back exactly,
    ``ber`` is written in scientific notation with 13 significant digits.
    """

    @staticmethod
    def _metric_row_to_field_tuple(
        metric_row: antijam_parameters.MetricRow,
    ) -> tuple[str, ...]:
        return (
            metric_row.scheme,
            metric_row.jammer,
            repr(float(metric_row.sjr_db)),
            repr(float(metric_row.es_n0_db)),
            str(metric_row.frames),
            str(metric_row.bits),
            str(metric_row.bit_errors),
            f"{metric_row.ber:.12e}",
            repr(float(metric_row.rate)),
            repr(float(metric_row.spectral_efficiency)),
            str(metric_row.seed),
        )

    def convert(
        self,
        metric_row_sequence_to_convert: typing.Sequence[antijam_parameters.MetricRow],
        destination: typing.Optional[typing.Union[str, pathlib.Path]] = None,
    ) -> str:
        """Render rows (and write them to ``destination`` if given).

        :raises OSError: If ``destination`` can't be written.
        """
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(antijam_parameters.constants.METRIC_CSV_HEADER_TUPLE)
        for metric_row in metric_row_sequence_to_convert:
            writer.writerow(self._metric_row_to_field_tuple(metric_row))
        text = stream.getvalue()
        if destination is not None:
            pathlib.Path(destination).write_text(text, encoding="utf-8")
        return text


class CsvToMetricRowTuple(core_converters.abc.Converter):
    """Read sweep results written by :class:`MetricRowSequenceToCsv`.

    The ``ber`` column is not read: rows derive it from their counts.
    """

    def convert(self, csv_text_to_convert: str) -> tuple[antijam_parameters.MetricRow, ...]:
        reader = csv.reader(io.StringIO(csv_text_to_convert))
        header = next(reader, None)
        if tuple(header or ()) != antijam_parameters.constants.METRIC_CSV_HEADER_TUPLE:
            raise antijam_utilities.InvalidInputError(
                "csv_text_to_convert", f"unexpected header {header}"
            )
        metric_row_list = []
        for line_number, field_list in enumerate(reader, start=2):
            if not field_list:
                continue
            try:
                field = dict(
                    zip(antijam_parameters.constants.METRIC_CSV_HEADER_TUPLE, field_list)
                )
                metric_row_list.append(
                    antijam_parameters.MetricRow(
                        scheme=field["scheme"],
                        jammer=field["jammer"],
                        sjr_db=float(field["sjr_db"]),
                        es_n0_db=float(field["es_n0_db"]),
                        frames=int(field["frames"]),
                        bits=int(field["bits"]),
                        bit_errors=int(field["bit_errors"]),
                        rate=float(field["rate"]),
                        spectral_efficiency=float(field["spectral_efficiency"]),
                        seed=int(field["seed"]),
                    )
                )
            except (KeyError, ValueError) as error:
                raise antijam_utilities.InvalidInputError(
                    "csv_text_to_convert", f"line {line_number}: {error}"
                )
        return tuple(metric_row_list)

    def convert_file(
        self, path: typing.Union[str, pathlib.Path]
    ) -> tuple[antijam_parameters.MetricRow, ...]:
        return self.convert(pathlib.Path(path).read_text(encoding="utf-8"))
