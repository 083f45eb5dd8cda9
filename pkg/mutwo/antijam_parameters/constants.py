"""Fixed tables of :mod:`mutwo.antijam_parameters`."""

IEEE80211A_DATA_BIN_TUPLE = tuple(range(38, 64)) + tuple(range(1, 27))
"""FFT bins of the occupied subcarriers of a 64 point IEEE802.11a OFDM
symbol, ordered from the lowest (−26) to the highest (+26) frequency.
DC (bin 0) and the guard bins 27..37 stay empty. Pilot positions are
used as data carriers here, which gives 52 data subcarriers."""

SUPPORTED_QAM_ORDER_TUPLE = (4, 16, 64)
"""Square QAM orders which :class:`mutwo.antijam_parameters.QamConstellation`
can build."""

RATE_TWO_SYMBOL_RATE = 2
"""Information symbols per channel use of the rate-2 code (4 symbols in
2 channel uses)."""

ALAMOUTI_SYMBOL_RATE = 1
"""Information symbols per channel use of the Alamouti code."""

METRIC_CSV_HEADER_TUPLE = (
    "scheme",
    "jammer",
    "sjr_db",
    "es_n0_db",
    "frames",
    "bits",
    "bit_errors",
    "ber",
    "rate",
    "spectral_efficiency",
    "seed",
)
"""Column order of sweep result files."""

PSD_CSV_HEADER_TUPLE = ("freq_norm", "psd_db")
"""Column order of power spectral density files."""

EXIT_CODE_SUCCESS = 0
EXIT_CODE_VALIDATION_FAILURE = 1
EXIT_CODE_INVALID_CONFIGURATION = 2
EXIT_CODE_RUNTIME_FAILURE = 3
