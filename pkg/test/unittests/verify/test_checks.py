import unittest
from unittest import TestCase
import numpy as np
from fracgal.problem import parse_problem, make_problem
from fracgal.verify import (
    random_battery, battery_problem, run_checks, run_battery,
    picard_refinement)
from fracgal.verify.checks import CROSS_CHECK_GAMMA_DT, MAX_PICARD_STEPS
from fracgal.fode import is_resolved
from fracgal.utils.testing import SCALAR_PROBLEM, SKIP_SLOW_ARGS
from fracgal.exceptions import FracGalInvalidParameterError

ESTIMATES = ['energy_bound', 'h1_bound', 'dual_derivative_bound',
             'dual_derivative_bound_l2', 'comparison_bound', 'convexity',
             'garding', 'continuity', 'yosida_convexity_n1',
             'yosida_convexity_n10', 'yosida_convexity_n100']

CROSS_CHECKS = ['picard_contraction', 'picard_fixed_point',
                'scheme_agreement', 'gronwall_uniqueness',
                'gronwall_uniqueness_defect']


class TestRunChecks(TestCase):

    def test_scalar(self):
        report, info = run_checks(parse_problem(SCALAR_PROBLEM))
        self.assertEqual(report.names, ESTIMATES + CROSS_CHECKS)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(info['l1'], {'scheme': 'l1'})
        self.assertEqual(info['picard']['scheme'], 'picard')
        self.assertEqual(info['picard']['refinement'], 1)
        self.assertIn('l2_distance', report['scheme_agreement'].constants)
        self.assertLess(report['gronwall_uniqueness_defect'].lhs, 2.5e-5)

    def test_refined_picard_grid(self):
        # gamma = 4 and dt = 1 / 8 need a refinement by 2
        problem = parse_problem(SCALAR_PROBLEM).with_overrides(steps=8)
        refined, refined_ivp, factor = picard_refinement(problem)
        self.assertEqual(factor, 2)
        self.assertEqual(refined.steps, 16)
        self.assertTrue(is_resolved(refined_ivp, 4.0,
                                    margin=CROSS_CHECK_GAMMA_DT))
        report, info = run_checks(problem, yosida_indices=(1,))
        self.assertEqual(info['picard']['refinement'], 2)
        self.assertEqual(report['picard_contraction'].constants['refinement'],
                         2)
        self.assertIn('scheme_agreement', report)

    def test_unresolved(self):
        # lambda_4 = 16 pi^2 puts gamma far beyond 1 / dt
        problem = make_problem(0.5, 1.0, 1.0, a='1', forcing={1: '1'},
                               modes=4, steps=32)
        report, info = run_checks(problem, yosida_indices=(10,))
        self.assertTrue(info['picard']['skipped'])
        self.assertGreater(info['picard']['refinement'] * problem.steps,
                           MAX_PICARD_STEPS)
        self.assertEqual(picard_refinement(problem)[:2], (None, None))
        self.assertNotIn('scheme_agreement', report)
        self.assertIn('yosida_convexity_n10', report)
        self.assertTrue(report.passed, report.failures)

    def test_deterministic(self):
        problem = parse_problem(SCALAR_PROBLEM).with_overrides(steps=64)
        self.assertEqual(run_checks(problem, seed=7)[0],
                         run_checks(problem, seed=7)[0])


class TestBattery(TestCase):

    def test_reproducible(self):
        first = random_battery(3, seed=5)
        second = random_battery(3, seed=5)
        self.assertEqual([p.to_dict() for p in first],
                         [p.to_dict() for p in second])
        self.assertEqual([p.name for p in first],
                         ['battery-5-0', 'battery-5-1', 'battery-5-2'])
        self.assertNotEqual(first[0].to_dict(),
                            random_battery(1, seed=6)[0].to_dict())

    def test_assumptions(self):
        for problem in random_battery(5, seed=1, dim=2):
            self.assertEqual(problem.geometry.dim, 2)
            self.assertGreaterEqual(problem.validate(), 0.6 - 1e-12)
            self.assertTrue(0.3 <= problem.alpha <= 0.8)

    def test_invalid(self):
        with self.assertRaises(FracGalInvalidParameterError):
            random_battery(2, dim=3)
        with self.assertRaises(FracGalInvalidParameterError):
            random_battery(2, horizon=3.0)

    def test_run(self):
        problems = random_battery(2, seed=0, modes=3, steps=128)
        reports = run_battery(problems, yosida_indices=(10,))
        self.assertEqual(len(reports), 2)
        for problem, report in zip(problems, reports):
            self.assertTrue(report.passed, (problem, report.failures))


class TestBatteryProblem(TestCase):

    def test_name(self):
        problem = battery_problem(np.random.default_rng(0), 'single')
        self.assertEqual(problem.name, 'single')
        self.assertEqual(problem.modes, 4)
        self.assertEqual(problem.steps, 256)

    def test_picard_resolved_tier(self):
        problems = random_battery(4, seed=2, modes=[4, 8], steps=64,
                                  picard_resolved=True)
        for problem in problems:
            ivp = problem.ivp()
            gamma = problem.picard.resolve_gamma(ivp)
            self.assertTrue(is_resolved(ivp, gamma,
                                        margin=CROSS_CHECK_GAMMA_DT))
            self.assertLessEqual(problem.horizon, 1.0)
            self.assertGreater(problem.horizon, 0.0)
        self.assertEqual([p.modes for p in problems], [4, 8, 4, 8])
        self.assertEqual(problems[0].geometry.lengths, (16.0,))


class TestBatteryStudies(TestCase):

    def test_picard_cross_checks(self):
        problems = random_battery(20, seed=0, modes=4, steps=128,
                                  picard_resolved=True)
        reports = run_battery(problems, yosida_indices=(10,))
        for problem, report in zip(problems, reports):
            for name in CROSS_CHECKS:
                self.assertIn(name, report, (problem, name))
            self.assertTrue(report.passed, (problem, report.failures))
            contraction = report['picard_contraction']
            self.assertLessEqual(contraction.lhs, 0.55)
            self.assertLessEqual(contraction.constants['iterations'], 60)
            self.assertEqual(contraction.constants['refinement'], 1)

    @unittest.skipIf(*SKIP_SLOW_ARGS)
    def test_estimates_across_modes(self):
        problems = random_battery(20, seed=0, modes=[4, 8, 16], steps=256)
        self.assertEqual(sorted(set(p.modes for p in problems)), [4, 8, 16])
        reports = run_battery(problems)
        for problem, report in zip(problems, reports):
            for name in ESTIMATES:
                self.assertIn(name, report, (problem, name))
            self.assertTrue(report.passed, (problem, report.failures))
