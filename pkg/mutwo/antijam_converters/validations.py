"""Self checks of the link model which run at full statistical size."""

from __future__ import annotations

import dataclasses
import math
import typing

import numpy as np

from mutwo import antijam_converters
from mutwo import antijam_parameters
from mutwo import antijam_utilities
from mutwo import core_converters

__all__ = ("ValidationResult", "ValidationSuite")


@dataclasses.dataclass(frozen=True)
class ValidationResult(object):
    name: str
    is_passed: bool
    detail: str


class ValidationSuite(core_converters.abc.Converter):
    """Oracle equivalence, complexity, orthogonality, numerics, noiseless
    integrity, jammer calibration, mapping equivalence, scheme ordering
    and PSD sanity checks.

    :param statistic_count: Random statistics per constellation of the
        detector checks.
    :param draw_count: Random channels of the EVCM check.
    :param noiseless_bit_count: Bits per scheme of the noiseless check.
    :param mapping_frame_count: ``time-slots`` frames of the mapping
        check (``sf-pairs`` uses twice as many, so both see the same
        bit count).
    :param ordering_frame_count: Frames per SJR point of the scheme
        ordering check.
    :param psd_frame_count: Frames per PSD estimate of the PSD sanity
        check.
    """

    def __init__(
        self,
        statistic_count: int = 10**4,
        draw_count: int = 10**3,
        noiseless_bit_count: int = 10**5,
        mapping_frame_count: int = 100,
        ordering_frame_count: int = 150,
        psd_frame_count: int = 1000,
    ):
        self._statistic_count = statistic_count
        self._draw_count = draw_count
        self._noiseless_bit_count = noiseless_bit_count
        self._mapping_frame_count = mapping_frame_count
        self._ordering_frame_count = ordering_frame_count
        self._psd_frame_count = psd_frame_count

    # ###################################################################### #
    #                               checks                                   #
    # ###################################################################### #

    def _check_oracle_equivalence(self, seed: int) -> ValidationResult:
        mismatch_count = 0
        for order in (4, 16):
            constellation = antijam_parameters.QamConstellation(order)
            generator = antijam_utilities.derive_stream(
                antijam_utilities.StreamSeed(seed, ("validate", "oracle", order))
            )
            phi1 = antijam_parameters.configurations.DEFAULT_QAM_ORDER_TO_PHI1_DICT[order]
            kappa = generator.uniform(0.1, 3, self._statistic_count)
            index = generator.integers(0, order, (2, self._statistic_count))
            x_odd, x_even = constellation.points[index]
            r = kappa * (
                x_odd * math.sin(phi1) - np.conj(x_even) * math.cos(phi1)
            ) + antijam_utilities.complex_gaussian(
                generator, self._statistic_count, 0.5
            )
            statistic = antijam_parameters.CombinedStatistic(r, r, kappa)
            conditional = antijam_converters.ConditionalMlDetector(constellation)
            exhaustive = antijam_converters.ExhaustiveMlDetector(constellation)
            odd, even, cost = conditional.convert(statistic, 1, phi1)
            oracle_odd, oracle_even, oracle_cost = exhaustive.convert(statistic, 1, phi1)
            disagree = ((odd != oracle_odd) | (even != oracle_even)) & (
                np.abs(cost - oracle_cost) > 1e-9
            )
            mismatch_count += int(np.sum(disagree))
        return ValidationResult(
            "oracle-equivalence",
            mismatch_count == 0,
            f"{mismatch_count} disagreeing decision(s) over "
            f"2 × {self._statistic_count} statistics",
        )

    def _check_complexity(self) -> ValidationResult:
        detail_list, is_passed = [], True
        for order in (4, 16):
            constellation = antijam_parameters.QamConstellation(order)
            statistic = antijam_parameters.CombinedStatistic(0.3 + 0.1j, 0.2j, 1.0)
            for detector, expected in (
                (antijam_converters.ConditionalMlDetector(constellation), order),
                (antijam_converters.ExhaustiveMlDetector(constellation), order**2),
            ):
                detector.convert(statistic, 1, math.pi / 8)
                is_passed &= detector.evaluation_count == expected
                detail_list.append(
                    f"{type(detector).__name__}({order}): {detector.evaluation_count}"
                )
        return ValidationResult("complexity", is_passed, ", ".join(detail_list))

    def _check_evcm_orthogonality(self, seed: int) -> ValidationResult:
        generator = antijam_utilities.derive_stream(
            antijam_utilities.StreamSeed(seed, ("validate", "evcm"))
        )
        worst = 0.0
        for _ in range(self._draw_count):
            channel = antijam_parameters.ChannelRealization.draw(generator)
            beams = antijam_parameters.EigenBeams.from_correlation(
                channel.transmit_correlation(), noise_power=generator.uniform(0.01, 2)
            )
            for antenna in range(2):
                evcm = antijam_parameters.Evcm.build(channel, beams, antenna)
                deviation = evcm.g.conj().T @ evcm.g - evcm.psi * np.identity(2)
                worst = max(worst, float(np.max(np.abs(deviation))))
        return ValidationResult(
            "evcm-orthogonality", worst <= 1e-10, f"max |G^H G − ψI| = {worst:.3e}"
        )

    def _check_numerics(self, seed: int) -> ValidationResult:
        generator = antijam_utilities.derive_stream(
            antijam_utilities.StreamSeed(seed, ("validate", "numerics"))
        )
        reconstruction = unitarity = budget = 0.0
        for _ in range(self._draw_count):
            a = antijam_utilities.complex_gaussian(generator, (2, 2))
            hermitian = a + a.conj().T
            pair = antijam_utilities.eig_hermitian_2x2(hermitian)
            reconstruction = max(
                reconstruction, float(np.max(np.abs(pair.reconstruct() - hermitian)))
            )
            unitarity = max(
                unitarity,
                float(
                    np.max(
                        np.abs(
                            pair.eigenvectors.conj().T @ pair.eigenvectors
                            - np.identity(2)
                        )
                    )
                ),
            )
            total_power = generator.uniform(0.1, 10)
            load = antijam_utilities.water_fill(
                generator.uniform(0, 5, 2), total_power, generator.uniform(0.01, 3)
            )
            budget = max(budget, abs(float(np.sum(load)) - total_power))

        grid = antijam_parameters.OfdmGrid()
        spectrum = antijam_utilities.complex_gaussian(
            generator, (self._statistic_count, grid.data_count)
        )
        round_trip = antijam_converters.OfdmSamplesToSpectrum(grid).convert(
            antijam_converters.SpectrumToOfdmSamples(grid).convert(spectrum)
        )
        ofdm = float(np.max(np.abs(round_trip - spectrum)))

        precoder = 0.0
        for slot_count in (1, 4, 52, 104):
            for profile in (
                antijam_parameters.PrecoderProfile.full(slot_count, slot_count),
                antijam_parameters.PrecoderProfile.multiband(
                    slot_count, range(0, slot_count, 3), 1.0
                ),
            ):
                precoder = max(
                    precoder, abs(float(np.sum(profile.rho**2)) - profile.power_budget)
                )

        return ValidationResult(
            "numerics",
            reconstruction <= 1e-10
            and unitarity <= 1e-12
            and ofdm <= 1e-12
            and budget <= 1e-12
            and precoder <= 1e-12 * 104,
            f"eig reconstruction {reconstruction:.1e}, unitarity {unitarity:.1e}, "
            f"OFDM round trip {ofdm:.1e}, water-fill budget {budget:.1e}, "
            f"precoder power {precoder:.1e}",
        )

    def _check_noiseless_integrity(self, seed: int) -> ValidationResult:
        detail_list, is_passed = [], True
        for scheme in antijam_parameters.Scheme:
            config = antijam_parameters.SweepConfig(
                scheme=scheme,
                es_n0_db=math.inf,
                seed=seed,
                jammed_slot_tuple=tuple(range(12, 26)),
            )
            frame_simulator = antijam_converters.FrameSimulator(config)
            frame_count = math.ceil(
                self._noiseless_bit_count / frame_simulator.bits_per_frame
            )
            total = antijam_parameters.TrialRecord()
            for frame_index in range(frame_count):
                total += frame_simulator.convert(math.inf, frame_index)
            is_passed &= total.bit_errors == 0
            detail_list.append(f"{scheme.value}: {total.bit_errors}/{total.bits}")
        return ValidationResult("noiseless-integrity", is_passed, ", ".join(detail_list))

    def _check_jammer_calibration(self, seed: int) -> ValidationResult:
        geometry = antijam_parameters.FrameGeometry()
        synthesizer = antijam_converters.JammerSynthesizer(
            geometry, antijam_parameters.QamConstellation(4)
        )
        generator = antijam_utilities.derive_stream(
            antijam_utilities.StreamSeed(seed, ("validate", "jammer"))
        )
        worst = 0.0
        for kind in (
            antijam_parameters.JammerKind.ALL_BAND,
            antijam_parameters.JammerKind.MULTI_BAND,
            antijam_parameters.JammerKind.BARRAGE,
        ):
            for path in antijam_parameters.JammerPath:
                for sjr_db in (-20.0, 0.0, 30.0):
                    jammer = antijam_parameters.JammerSpec(kind, (12, 13, 14), sjr_db, path)
                    jam = synthesizer.convert(jammer, 1.7, generator)
                    measured_sjr_db = 10 * math.log10(
                        1.7 / float(np.mean(np.abs(jam) ** 2))
                    )
                    worst = max(worst, abs(measured_sjr_db - sjr_db))
        return ValidationResult(
            "jammer-calibration", worst <= 1e-9, f"max SJR deviation {worst:.1e} dB"
        )

    def _check_mapping_equivalence(self, seed: int) -> ValidationResult:
        interval_list = []
        for mapping, frame_count in (
            (antijam_parameters.ResourceMapping.SF_PAIRS, 2 * self._mapping_frame_count),
            (antijam_parameters.ResourceMapping.TIME_SLOTS, self._mapping_frame_count),
        ):
            config = antijam_parameters.SweepConfig(
                jammer=antijam_parameters.JammerSpec(
                    antijam_parameters.JammerKind.ALL_BAND
                ),
                sjr_db_tuple=(5.0,),
                es_n0_db=15.0,
                frames_per_point=frame_count,
                mapping=mapping,
                seed=seed,
                error_target=0,
            )
            (metric_row,) = antijam_converters.SweepConfigToMetricRowTuple(1).convert(
                config
            )
            half_width = 1.96 * math.sqrt(
                max(metric_row.ber * (1 - metric_row.ber), 1 / metric_row.bits)
                / metric_row.bits
            )
            interval_list.append(
                (metric_row.ber - half_width, metric_row.ber + half_width)
            )
        (low0, high0), (low1, high1) = interval_list
        return ValidationResult(
            "mapping-equivalence",
            low0 <= high1 and low1 <= high0,
            "95 % BER intervals "
            + " / ".join(f"[{low:.2e}, {high:.2e}]" for low, high in interval_list),
        )

    def _check_scheme_ordering(self, seed: int) -> ValidationResult:
        # With Gray labelled super symbols both schemes see the same
        # combined lattice, so their BER may not drift apart.
        scheme_to_metric_row_tuple = {}
        for scheme in (
            antijam_parameters.Scheme.RR_FULL,
            antijam_parameters.Scheme.ALAMOUTI_BF,
        ):
            config = antijam_parameters.SweepConfig(
                scheme=scheme,
                jammer=antijam_parameters.JammerSpec(
                    antijam_parameters.JammerKind.ALL_BAND
                ),
                sjr_db_tuple=(0.0, 20.0),
                es_n0_db=25.0,
                frames_per_point=self._ordering_frame_count,
                seed=seed,
                error_target=0,
            )
            scheme_to_metric_row_tuple[scheme] = (
                antijam_converters.SweepConfigToMetricRowTuple(1).convert(config)
            )
        (rr_full_jammed, rr_full_clear), (
            alamouti_jammed,
            alamouti_clear,
        ) = scheme_to_metric_row_tuple.values()
        if rr_full_jammed.bit_errors and alamouti_jammed.bit_errors:
            separation = abs(math.log10(rr_full_jammed.ber / alamouti_jammed.ber))
        else:
            separation = 0.0 if rr_full_jammed.ber == alamouti_jammed.ber else math.inf
        efficiency_ratio = (
            rr_full_clear.spectral_efficiency / alamouti_clear.spectral_efficiency
            if alamouti_clear.spectral_efficiency
            else math.inf
        )
        return ValidationResult(
            "scheme-ordering",
            separation <= math.log10(2),
            f"all-band SJR 0 dB BER rr-full {rr_full_jammed.ber:.2e}, "
            f"alamouti-bf {alamouti_jammed.ber:.2e} "
            f"({separation:.2f} decades apart), η at SJR 20 dB "
            f"{rr_full_clear.spectral_efficiency:.2f} / "
            f"{alamouti_clear.spectral_efficiency:.2f} (ratio {efficiency_ratio:.2f})",
        )

    def _check_psd_sanity(self, seed: int) -> ValidationResult:
        def estimate(kind: antijam_parameters.JammerKind) -> antijam_parameters.PsdEstimate:
            config = antijam_parameters.SweepConfig(
                jammer=antijam_parameters.JammerSpec(kind), seed=seed
            )
            return antijam_converters.SweepConfigToPsdEstimate(
                "jammer", frame_count=self._psd_frame_count
            ).convert(config, 0)

        barrage = estimate(antijam_parameters.JammerKind.BARRAGE)
        ripple = float(np.max(np.abs(barrage.density_db_array)))
        all_band = estimate(antijam_parameters.JammerKind.ALL_BAND)
        coverage = all_band.band_mean_db(-0.25, 0.25) - all_band.band_mean_db(
            -0.5, -29 / 64
        )
        return ValidationResult(
            "psd-sanity",
            ripple <= 1 and coverage >= 10,
            f"barrage ripple {ripple:.2f} dB, "
            f"all-band data band over guard band {coverage:.2f} dB",
        )

    # ###################################################################### #
    #                            public api                                  #
    # ###################################################################### #

    def convert(self, seed: int = 0) -> tuple[ValidationResult, ...]:
        """Run all checks.

        :param seed: Root seed of the random inputs.
        """
        check_tuple: tuple[typing.Callable[[], ValidationResult], ...] = (
            lambda: self._check_oracle_equivalence(seed),
            self._check_complexity,
            lambda: self._check_evcm_orthogonality(seed),
            lambda: self._check_numerics(seed),
            lambda: self._check_noiseless_integrity(seed),
            lambda: self._check_jammer_calibration(seed),
            lambda: self._check_mapping_equivalence(seed),
            lambda: self._check_scheme_ordering(seed),
            lambda: self._check_psd_sanity(seed),
        )
        validation_result_list = []
        for check in check_tuple:
            validation_result = check()
            log = self._logger.info if validation_result.is_passed else self._logger.error
            log(
                f"{validation_result.name}: "
                f"{'ok' if validation_result.is_passed else 'FAILED'} "
                f"({validation_result.detail})"
            )
            validation_result_list.append(validation_result)
        return tuple(validation_result_list)
