"""Command line interface: ``sweep``, ``psd``, ``validate`` and
``phi-search``.

Every option of ``sweep`` and ``psd`` may also be given in a plain text
file of ``key = value`` lines (``--config``); options on the command
line override the file.
"""

import argparse
import logging
import sys
import typing

from mutwo import antijam_converters
from mutwo import antijam_parameters
from mutwo import antijam_utilities
from mutwo import antijam_version

__all__ = (
    "Option",
    "SWEEP_OPTION_TUPLE",
    "PSD_OPTION_TUPLE",
    "build_argument_parser",
    "resolve_option_dict",
    "main",
)

_logger = logging.getLogger(__name__)


class Option(typing.NamedTuple):
    """A command line option which can also be set in a config file."""

    flag: str
    parse: typing.Callable[[str], typing.Any]
    get_default: typing.Callable[[], typing.Any]
    help: str
    choices: typing.Optional[tuple[typing.Any, ...]] = None

    @property
    def name(self) -> str:
        return self.flag.lstrip("-").replace("-", "_")


def _configurations():
    return antijam_parameters.configurations


def _values(enum_class) -> tuple[str, ...]:
    return tuple(member.value for member in enum_class)


_LINK_OPTION_TUPLE = (
    Option(
        "--scheme",
        str,
        lambda: antijam_parameters.Scheme.RR_FULL.value,
        "transmission scheme",
        _values(antijam_parameters.Scheme),
    ),
    Option(
        "--jammer",
        str,
        lambda: antijam_parameters.JammerKind.NONE.value,
        "jammer kind",
        _values(antijam_parameters.JammerKind),
    ),
    Option(
        "--jammer-path",
        str,
        lambda: _configurations().DEFAULT_JAMMER_PATH,
        "propagation of the jamming signal",
        _values(antijam_parameters.JammerPath),
    ),
    Option(
        "--esn0",
        float,
        lambda: _configurations().DEFAULT_ES_N0_DB,
        "Es/N0 per receive antenna in dB ('inf' switches the noise off)",
    ),
    Option(
        "--constellation",
        int,
        lambda: None,
        "QAM order (default: 4 for rate-2 schemes, 16 for alamouti-bf)",
        antijam_parameters.constants.SUPPORTED_QAM_ORDER_TUPLE,
    ),
    Option(
        "--phi1",
        float,
        lambda: None,
        "rotation angle of the rate-2 code in radians",
    ),
    Option(
        "--mapping",
        str,
        lambda: _configurations().DEFAULT_MAPPING,
        "placement of code blocks on OFDM resources",
        _values(antijam_parameters.ResourceMapping),
    ),
    Option(
        "--jammed-slots",
        antijam_utilities.parse_slot_list,
        tuple,
        "jammed data subcarriers (0-based), for instance '12-25' or '0,3,10-12'",
    ),
    Option(
        "--seed",
        int,
        lambda: _configurations().DEFAULT_SEED,
        "root seed",
    ),
    Option("--out", str, lambda: None, "output CSV file (default: stdout)"),
)

SWEEP_OPTION_TUPLE = _LINK_OPTION_TUPLE + (
    Option(
        "--sjr-start",
        float,
        lambda: _configurations().DEFAULT_SJR_START_DB,
        "first SJR point in dB",
    ),
    Option(
        "--sjr-stop",
        float,
        lambda: _configurations().DEFAULT_SJR_STOP_DB,
        "last SJR point in dB (inclusive)",
    ),
    Option(
        "--sjr-step",
        float,
        lambda: _configurations().DEFAULT_SJR_STEP_DB,
        "SJR step in dB",
    ),
    Option(
        "--frames",
        int,
        lambda: _configurations().DEFAULT_FRAMES_PER_POINT,
        "maximal frames per SJR point",
    ),
    Option(
        "--error-target",
        int,
        lambda: _configurations().DEFAULT_ERROR_TARGET,
        "stop a point after this many bit errors (0: never)",
    ),
    Option(
        "--workers",
        int,
        lambda: _configurations().DEFAULT_WORKER_COUNT,
        "simulation processes",
    ),
)

PSD_OPTION_TUPLE = _LINK_OPTION_TUPLE + (
    Option("--sjr", float, lambda: 0.0, "SJR in dB"),
    Option(
        "--frames",
        int,
        lambda: antijam_converters.configurations.DEFAULT_PSD_FRAME_COUNT,
        "simulated frames",
    ),
    Option(
        "--segment",
        int,
        lambda: antijam_converters.configurations.DEFAULT_PSD_SEGMENT_LENGTH,
        "periodogram segment length (= bin count)",
    ),
    Option(
        "--component",
        str,
        lambda: antijam_converters.SignalComponent.RECEIVED.value,
        "analysed signal",
        _values(antijam_converters.SignalComponent),
    ),
    Option("--antenna", int, lambda: 0, "receive antenna", (0, 1)),
)


def _add_option_tuple(
    parser: argparse.ArgumentParser, option_tuple: tuple[Option, ...]
):
    parser.add_argument(
        "--config", default=None, help="file with 'key = value' lines"
    )
    for option in option_tuple:
        parser.add_argument(
            option.flag,
            dest=option.name,
            type=option.parse,
            choices=option.choices,
            default=None,
            help=option.help,
        )


def build_argument_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mutwo.antijam",
        description="Rate-reliability beamforming under jamming: BER sweeps, "
        "spectra and self checks.",
    )
    parser.add_argument(
        "--version", action="version", version=antijam_version.VERSION
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="logging threshold",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    _add_option_tuple(
        subparsers.add_parser("sweep", help="BER and spectral efficiency over SJR"),
        SWEEP_OPTION_TUPLE,
    )
    _add_option_tuple(
        subparsers.add_parser("psd", help="power spectral density of one SJR point"),
        PSD_OPTION_TUPLE,
    )

    validate_parser = subparsers.add_parser(
        "validate", help="run the oracle and invariant checks"
    )
    validate_parser.add_argument("--seed", type=int, default=0)

    phi_search_parser = subparsers.add_parser(
        "phi-search", help="search the rotation angle of the rate-2 code"
    )
    phi_search_parser.add_argument(
        "--constellation",
        type=int,
        default=antijam_parameters.configurations.DEFAULT_RATE_TWO_QAM_ORDER,
        choices=antijam_parameters.constants.SUPPORTED_QAM_ORDER_TUPLE,
    )
    phi_search_parser.add_argument("--steps", type=int, default=None)
    return parser


def resolve_option_dict(
    namespace: argparse.Namespace, option_tuple: tuple[Option, ...]
) -> dict[str, typing.Any]:
    """Merge command line values, config file values and defaults.

    :raises antijam_utilities.InvalidConfigurationError: For unknown keys
        or unparsable values in the config file.
    """
    option_dict = {option.name: option for option in option_tuple}
    file_value_dict = {}
    if namespace.config is not None:
        file_value_dict = antijam_utilities.KeyValueConfigParser().parse_file(
            namespace.config
        )
    for key in file_value_dict:
        if key not in option_dict:
            raise antijam_utilities.InvalidConfigurationError(key, "unknown key")

    resolved_dict = {}
    for name, option in option_dict.items():
        if (value := getattr(namespace, name)) is not None:
            resolved_dict[name] = value
        elif name in file_value_dict:
            try:
                value = option.parse(file_value_dict[name])
            except (ValueError, antijam_utilities.InvalidInputError) as error:
                raise antijam_utilities.InvalidConfigurationError(name, str(error))
            if option.choices is not None and value not in option.choices:
                raise antijam_utilities.InvalidConfigurationError(
                    name, f"'{value}' is none of {option.choices}"
                )
            resolved_dict[name] = value
        else:
            resolved_dict[name] = option.get_default()
    return resolved_dict


def _option_dict_to_sweep_config(
    option_dict: dict[str, typing.Any], sjr_db_tuple: tuple[float, ...], **kwargs
) -> antijam_parameters.SweepConfig:
    jammer_kind = antijam_parameters.JammerKind(option_dict["jammer"])
    try:
        jammer = antijam_parameters.JammerSpec(
            jammer_kind,
            option_dict["jammed_slots"]
            if jammer_kind is antijam_parameters.JammerKind.MULTI_BAND
            else (),
            path=option_dict["jammer_path"],
        )
    except antijam_utilities.InvalidInputError as error:
        raise antijam_utilities.InvalidConfigurationError("jammed slots", str(error))
    return antijam_parameters.SweepConfig(
        scheme=option_dict["scheme"],
        jammer=jammer,
        sjr_db_tuple=sjr_db_tuple,
        es_n0_db=option_dict["esn0"],
        qam_order=option_dict["constellation"],
        phi1=option_dict["phi1"],
        mapping=option_dict["mapping"],
        seed=option_dict["seed"],
        jammed_slot_tuple=option_dict["jammed_slots"],
        **kwargs,
    )


def _write(text: str, destination: typing.Optional[str]):
    if destination is None:
        sys.stdout.write(text)
    else:
        _logger.info(f"wrote {destination}")


def _run_sweep(namespace: argparse.Namespace) -> int:
    option_dict = resolve_option_dict(namespace, SWEEP_OPTION_TUPLE)
    config = _option_dict_to_sweep_config(
        option_dict,
        antijam_parameters.SweepConfig.make_sjr_tuple(
            option_dict["sjr_start"], option_dict["sjr_stop"], option_dict["sjr_step"]
        ),
        frames_per_point=option_dict["frames"],
        error_target=option_dict["error_target"],
        worker_count=option_dict["workers"],
    )
    metric_row_tuple = antijam_converters.SweepConfigToMetricRowTuple().convert(config)
    _write(
        antijam_converters.MetricRowSequenceToCsv().convert(
            metric_row_tuple, option_dict["out"]
        ),
        option_dict["out"],
    )
    return antijam_parameters.constants.EXIT_CODE_SUCCESS


def _run_psd(namespace: argparse.Namespace) -> int:
    option_dict = resolve_option_dict(namespace, PSD_OPTION_TUPLE)
    config = _option_dict_to_sweep_config(option_dict, (option_dict["sjr"],))
    psd_estimate = antijam_converters.SweepConfigToPsdEstimate(
        option_dict["component"],
        option_dict["antenna"],
        option_dict["frames"],
        option_dict["segment"],
    ).convert(config, option_dict["sjr"])
    _write(
        antijam_converters.PsdEstimateToCsv().convert(psd_estimate, option_dict["out"]),
        option_dict["out"],
    )
    return antijam_parameters.constants.EXIT_CODE_SUCCESS


def _run_validate(namespace: argparse.Namespace) -> int:
    validation_result_tuple = antijam_converters.ValidationSuite().convert(
        namespace.seed
    )
    for validation_result in validation_result_tuple:
        status = "ok" if validation_result.is_passed else "FAILED"
        print(f"{validation_result.name}: {status} ({validation_result.detail})")
    if all(validation_result.is_passed for validation_result in validation_result_tuple):
        return antijam_parameters.constants.EXIT_CODE_SUCCESS
    return antijam_parameters.constants.EXIT_CODE_VALIDATION_FAILURE


def _run_phi_search(namespace: argparse.Namespace) -> int:
    phi1 = antijam_converters.RotationAngleSearch(namespace.steps).convert(
        antijam_parameters.QamConstellation(namespace.constellation)
    )
    print(repr(phi1))
    return antijam_parameters.constants.EXIT_CODE_SUCCESS


_COMMAND_TO_RUNNER_DICT = {
    "sweep": _run_sweep,
    "psd": _run_psd,
    "validate": _run_validate,
    "phi-search": _run_phi_search,
}


def main(argument_sequence: typing.Optional[typing.Sequence[str]] = None) -> int:
    """Entry point of the ``mutwo.antijam`` console script.

    :return: Exit code: 0 success, 1 failed validation, 2 invalid
        configuration, 3 runtime or I/O failure.
    """
    namespace = build_argument_parser().parse_args(argument_sequence)
    logging.basicConfig(
        level=namespace.log_level, format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        return _COMMAND_TO_RUNNER_DICT[namespace.command](namespace)
    except (
        antijam_utilities.InvalidConfigurationError,
        antijam_utilities.InvalidInputError,
    ) as error:
        _logger.error(error)
        return antijam_parameters.constants.EXIT_CODE_INVALID_CONFIGURATION
    except OSError as error:
        _logger.error(f"I/O failure: {error}")
        return antijam_parameters.constants.EXIT_CODE_RUNTIME_FAILURE
    except Exception:
        _logger.exception("simulation failed")
        return antijam_parameters.constants.EXIT_CODE_RUNTIME_FAILURE
