from .report import EstimateEntry, EstimateReport
from .estimates import (
    dual_norms, energy_bound_check, h1_bound_check,
    dual_derivative_bound_check, comparison_bound_check, convexity_check,
    garding_check, continuity_check)
from .galerkin import ConvergenceStudy, galerkin_convergence, l2_distance
from .yosida import (
    YosidaEntry, YosidaStudy, kernel_identity_residual,
    yosida_identity_residual, yosida_entry, yosida_study,
    yosida_convexity_check)
from .uniqueness import scheme_distance, gronwall_uniqueness_check
from .battery import random_battery, battery_problem
from .checks import run_checks, run_battery, picard_refinement
