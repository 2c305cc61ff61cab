"""
FracGal

Spectral-Galerkin solution of time-fractional elliptic problems

    ^RL D^alpha_{0+} u - div(a Du) + b.Du + c u = f

on boxes with homogeneous Dirichlet conditions and zero initial data,
together with numerical checks of the a priori estimates, Galerkin
convergence, Yosida approximation and uniqueness arguments that establish
existence and uniqueness of weak solutions.
"""

from .__about__ import __version__, __authors__
from .fraccalc import (
    TimeGrid, GridSeries, MLParams, mittag_leffler, Kernel)
from .spectral import (
    DomainGeometry, SpectralBasis, build_basis, CoefficientSet,
    ModalForcing)
from .fode import (
    FractionalIVP, ModalTrajectory, PicardConfig, picard_solve, l1_solve)
from .problem import Problem, make_problem, load_problem, parse_problem
from .processor import SingleProc, MultiProc
from .verify import EstimateReport, run_checks
