"""Configure the default behaviour of :mod:`mutwo.antijam_parameters`.

All values are read at call time, so changing them after import takes
effect.
"""

import math

DEFAULT_FFT_SIZE = 64
"""Subcarrier count of an OFDM symbol (IEEE802.11a like)."""

DEFAULT_CP_LENGTH = 16
"""Cyclic prefix length in samples (a quarter of the FFT size)."""

DEFAULT_ES_N0_DB = 25.0
"""Default noise operating point per receive antenna in dB. ``inf``
switches the noise off."""

DEFAULT_SJR_START_DB = -20.0
"""First signal to jammer ratio of a sweep."""

DEFAULT_SJR_STOP_DB = 30.0
"""Last signal to jammer ratio of a sweep (inclusive)."""

DEFAULT_SJR_STEP_DB = 5.0
"""Distance between two sweep points."""

DEFAULT_FRAMES_PER_POINT = 200
"""Maximal frame count simulated for each sweep point."""

DEFAULT_ERROR_TARGET = 500
"""A sweep point stops early once this many bit errors were counted.
Set to 0 to always run all frames."""

DEFAULT_SEED = 0
"""Root seed of a sweep."""

DEFAULT_TRANSMIT_POWER = 1.0
"""Transmit power ``P`` of the received signal model."""

DEFAULT_BEAM_POWER_BUDGET = 2.0
"""Sum of the eigen beam power loads ``δ1 + δ2`` (unit average power per
transmit antenna)."""

DEFAULT_RATE_TWO_QAM_ORDER = 4
"""Constellation of the rate-2 schemes (4 b/s/Hz with 4-QAM)."""

DEFAULT_ALAMOUTI_QAM_ORDER = 16
"""Constellation of the Alamouti benchmark (4 b/s/Hz with 16-QAM)."""

DEFAULT_JAMMER_PATH = "faded"
"""Propagation of the jamming signal ('faded' or 'direct')."""

DEFAULT_MAPPING = "sf-pairs"
"""Mapping of code blocks onto OFDM resources ('sf-pairs' or
'time-slots')."""

DEFAULT_QAM_ORDER_TO_PHI1_DICT = {
    4: math.atan(1 / 2),
    16: math.atan(1 / 4),
    64: math.atan(1 / 8),
}
"""Rotation angle of the rate-2 code per constellation if no angle is
configured. The values maximise the minimal determinant of codeword
difference matrices; they have been found with
:class:`mutwo.antijam_converters.RotationAngleSearch` (ties resolved to
the smaller angle)."""

DEFAULT_FRAME_CHUNK_SIZE = 32
"""Frames which are scheduled together before the early stop criterion
is evaluated."""

DEFAULT_WORKER_COUNT = 1
"""Processes used by the sweep engine (1 = serial)."""

POWER_TOLERANCE = 1e-12
"""Relative tolerance of power budget checks."""
