"""Configure the default behaviour of :mod:`mutwo.antijam_converters`"""

DEFAULT_PSD_SEGMENT_LENGTH = 64
"""Default value for :param:`segment_length` in
:class:`mutwo.antijam_converters.SampleArrayToPsdEstimate` (segment
length of the averaged periodogram and bin count of the estimate)."""

DEFAULT_PSD_FRAME_COUNT = 1000
"""Default value for :param:`frame_count` in
:class:`mutwo.antijam_converters.SweepConfigToPsdEstimate`."""

DEFAULT_ROTATION_ANGLE_SEARCH_STEP_COUNT = 4096
"""Default value for :param:`step_count` in
:class:`mutwo.antijam_converters.RotationAngleSearch`."""

DEFAULT_MAXIMUM_REDRAW_COUNT = 100
"""Degenerate channel draws which
:class:`mutwo.antijam_converters.FrameSimulator` replaces within one
frame before it gives up."""
