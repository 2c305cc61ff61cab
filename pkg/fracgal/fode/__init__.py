from .trajectory import ModalTrajectory
from .ivp import FractionalIVP, galerkin_ivp
from .picard import (
    PicardConfig, PicardLog, AUTO, auto_gamma, contraction_bound,
    weighted_norm, is_resolved, picard_map, picard_solve,
    fixed_point_residual)
from .l1 import l1_solve, starting_correction
from .oracle import (
    RelaxationKernel, variation_of_constants, relaxation_solution,
    oracle_trajectory)
