import unittest

import numpy as np
import sympy

from mutwo import antijam_parameters
from mutwo import antijam_utilities


class EvcmTest(unittest.TestCase):
    def test_from_gains(self):
        evcm = antijam_parameters.Evcm.from_gains(1 + 1j, 2)
        np.testing.assert_array_equal(evcm.g, [[1 + 1j, 2], [2, -1 + 1j]])
        self.assertAlmostEqual(evcm.psi, 6)

    def test_orthogonality_symbolic(self):
        g1, g2 = sympy.symbols("g1 g2")
        g = sympy.Matrix([[g1, g2], [sympy.conjugate(g2), -sympy.conjugate(g1)]])
        psi = g1 * sympy.conjugate(g1) + g2 * sympy.conjugate(g2)
        self.assertEqual(
            sympy.simplify(g.H * g - psi * sympy.eye(2)), sympy.zeros(2, 2)
        )

    def test_orthogonality(self):
        generator = np.random.default_rng(8)
        for _ in range(200):
            channel = antijam_parameters.ChannelRealization.draw(generator)
            beams = antijam_parameters.EigenBeams.from_correlation(
                channel.transmit_correlation(), 2, generator.uniform(0.01, 2)
            )
            for antenna in range(2):
                evcm = antijam_parameters.Evcm.build(channel, beams, antenna)
                np.testing.assert_allclose(
                    evcm.g.conj().T @ evcm.g,
                    evcm.psi * np.identity(2),
                    atol=1e-10,
                )

    def test_build(self):
        beams = antijam_parameters.EigenBeams(
            np.identity(2, dtype=complex), np.array([4.0, 1.0]), np.identity(2)
        )
        channel = antijam_parameters.ChannelRealization([[1, 0.5], [1j, 2]])
        evcm = antijam_parameters.Evcm.build(channel, beams, 0)
        # g1 = 2·1, g2 = 1·1j
        np.testing.assert_allclose(evcm.g, [[2, 1j], [-1j, -2]])
        self.assertAlmostEqual(evcm.psi, 5)

    def test_equalize_separates_super_symbols(self):
        evcm = antijam_parameters.Evcm.from_gains(0.7 - 0.2j, -0.3 + 1.1j)
        c = np.array([0.4 + 0.1j, -0.8 + 0.5j])
        y_pair = evcm.g @ c
        np.testing.assert_allclose(evcm.equalize(y_pair), evcm.psi * c, atol=1e-12)

    def test_stack_received_pair(self):
        np.testing.assert_array_equal(
            antijam_parameters.Evcm.stack_received_pair([1j, 2], [3j, 4]),
            [[1j, 2], [-3j, 4]],
        )

    def test_degenerate(self):
        evcm = antijam_parameters.Evcm.from_gains(0, 0)
        self.assertTrue(evcm.is_degenerate)
        self.assertRaises(
            antijam_utilities.DegenerateChannelError, evcm.equalize, [1, 1]
        )

    def test_equalize_wrong_shape(self):
        evcm = antijam_parameters.Evcm.from_gains(1, 0)
        self.assertRaises(
            antijam_utilities.InvalidInputError, evcm.equalize, [1, 2, 3]
        )


class CombinedStatisticTest(unittest.TestCase):
    def test_combine(self):
        statistic = antijam_parameters.CombinedStatistic.combine(
            ([2, 4j], [0, 2]), (1, 3)
        )
        self.assertEqual(statistic.r1, 1)
        self.assertEqual(statistic.r2, 1 + 2j)
        self.assertEqual(statistic.kappa, 2)

    def test_combine_blocks(self):
        statistic = antijam_parameters.CombinedStatistic.combine(
            (np.ones((2, 3)), np.ones((2, 3))), (1, 1)
        )
        self.assertEqual(statistic.r1.shape, (3,))
        self.assertEqual(statistic.kappa, 1)

    def test_combine_mismatch(self):
        self.assertRaises(
            antijam_utilities.InvalidInputError,
            antijam_parameters.CombinedStatistic.combine,
            ([1, 1],),
            (1, 1),
        )

    def test_select(self):
        statistic = antijam_parameters.CombinedStatistic(1, 2, 1)
        self.assertEqual(statistic.select(1), 1)
        self.assertEqual(statistic.select(2), 2)
        self.assertRaises(antijam_utilities.InvalidInputError, statistic.select, 3)


class DecodedBlockTest(unittest.TestCase):
    def test_bits(self):
        constellation = antijam_parameters.QamConstellation(4)
        block = antijam_parameters.DecodedBlock(
            np.array([[0, 1, 2, 3]]), np.zeros((1, 2)), constellation
        )
        self.assertEqual(block.bit_array.tolist(), [0, 0, 0, 1, 1, 0, 1, 1])
        np.testing.assert_allclose(block.point_array, constellation.points[None, :])


if __name__ == "__main__":
    unittest.main()
