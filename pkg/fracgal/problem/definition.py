from builtins import object
from copy import copy
import logging
import numpy as np
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalAssumptionError,
    FracGalEllipticityError, FracGalExpressionError)
from fracgal.fraccalc import TimeGrid
from fracgal.exprfield import CoefficientField
from fracgal.spectral import (
    DomainGeometry, build_basis, CoefficientSet, ModalForcing,
    check_ellipticity, garding_constants, continuity_constant,
    QuadratureRule)
from fracgal.fode import PicardConfig, galerkin_ivp, picard_solve, l1_solve

logger = logging.getLogger('fracgal')


class Problem(object):
    """
    A time-fractional elliptic problem

        ^RL D^alpha_{0+} u - div(a Du) + b.Du + c u = f   in (0, T) x Omega
        u = 0 on (0, T) x dOmega,  u(0) = 0

    on a box Omega, together with its discretisation

    Parameters
    ----------
    alpha : float
        Fractional order in (0, 1)
    horizon : float
        Final time T
    geometry : DomainGeometry
        The box
    coeffs : CoefficientSet
        The coefficients a_ij, b_j and c
    forcing : ModalForcing
        Modal expansion of f
    modes : int
        Number of Galerkin modes N
    steps : int
        Number of time steps M
    scheme : str
        Default solver, 'l1' or 'picard'
    picard : PicardConfig
        Settings of the Picard solver
    theta_min : float
        Lower bound the sampled ellipticity constant must reach
    name : str | None
        Name of the problem (e.g. the file it was loaded from)
    """

    SCHEMES = ('l1', 'picard')
    DEFAULT_SCHEME = 'l1'
    DEFAULT_THETA_MIN = 1e-6
    ELLIPTICITY_SAMPLES = 32

    def __init__(self, alpha, horizon, geometry, coeffs, forcing, modes,
                 steps, scheme=DEFAULT_SCHEME, picard=None,
                 theta_min=DEFAULT_THETA_MIN, name=None):
        alpha = float(alpha)
        if not 0.0 < alpha < 1.0:
            raise FracGalInvalidParameterError(
                "Fractional order alpha must be in (0, 1) ({} provided)"
                .format(alpha))
        if scheme not in self.SCHEMES:
            raise FracGalInvalidParameterError(
                "Unrecognised scheme '{}', can be one of '{}'".format(
                    scheme, "', '".join(self.SCHEMES)))
        if coeffs.lengths != geometry.lengths or coeffs.horizon != horizon:
            raise FracGalInvalidParameterError(
                "Coefficients are declared on a different domain ({}, T={}) "
                "than the problem ({}, T={})".format(
                    coeffs.lengths, coeffs.horizon, geometry.lengths,
                    horizon))
        self._alpha = alpha
        self._horizon = float(horizon)
        self._geometry = geometry
        self._coeffs = coeffs
        self._forcing = forcing if forcing is not None else ModalForcing()
        # Validates the discretisation parameters
        self._grid = TimeGrid(horizon, steps)
        self._basis = build_basis(geometry, modes)
        self._scheme = scheme
        self._picard = picard if picard is not None else PicardConfig()
        self._theta_min = float(theta_min)
        self._name = name
        self._theta_hat = None

    @property
    def alpha(self):
        return self._alpha

    @property
    def horizon(self):
        return self._horizon

    @property
    def geometry(self):
        return self._geometry

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def forcing(self):
        return self._forcing

    @property
    def modes(self):
        return self._basis.size

    @property
    def steps(self):
        return self._grid.steps

    @property
    def scheme(self):
        return self._scheme

    @property
    def picard(self):
        return self._picard

    @property
    def theta_min(self):
        return self._theta_min

    @property
    def name(self):
        return self._name

    @property
    def grid(self):
        return self._grid

    @property
    def basis(self):
        return self._basis

    def with_overrides(self, modes=None, steps=None, scheme=None,
                       picard=None):
        """
        Returns a copy of the problem with its discretisation overridden
        """
        duplicate = copy(self)
        if modes is not None:
            duplicate._basis = build_basis(self._geometry, modes)
        if steps is not None:
            duplicate._grid = TimeGrid(self._horizon, steps)
        if scheme is not None:
            if scheme not in self.SCHEMES:
                raise FracGalInvalidParameterError(
                    "Unrecognised scheme '{}', can be one of '{}'".format(
                        scheme, "', '".join(self.SCHEMES)))
            duplicate._scheme = scheme
        if picard is not None:
            duplicate._picard = picard
        return duplicate

    def validate(self):
        """
        Checks the standing assumptions on the data: (a1) coefficients
        bounded (finite on [0, T] x box), (a2) symmetry (checked when the
        coefficient set is built), (a3) ellipticity and (a4) forcing bounded
        in time

        Returns
        -------
        theta_hat : float
            The sampled ellipticity constant
        """
        for field in self._coeffs.fields():
            try:
                samples = field.tensor_samples()
            except FracGalExpressionError as e:
                raise FracGalAssumptionError(
                    'a1', "Coefficient '{}' cannot be evaluated on the "
                    "domain: {}".format(field.expr, e.msg))
            if not np.all(np.isfinite(samples)):
                raise FracGalAssumptionError(
                    'a1', "Coefficient '{}' is not bounded on the domain"
                    .format(field.expr))
        check_grid = TimeGrid(self._horizon, 256)
        try:
            f = self._forcing.samples(check_grid.nodes,
                                      max(self._forcing.max_mode, 1))
        except FracGalExpressionError as e:
            raise FracGalAssumptionError(
                'a4', "Forcing cannot be evaluated on [0, T]: {}".format(
                    e.msg))
        if not np.all(np.isfinite(f)):
            raise FracGalAssumptionError(
                'a4', "Forcing amplitudes are not bounded on [0, T]")
        report = check_ellipticity(self._coeffs, self._theta_min,
                                   samples=self.ELLIPTICITY_SAMPLES)
        if not report.passed:
            raise FracGalEllipticityError(
                report.theta_hat, "Sampled ellipticity constant {} is below "
                "the required {}".format(report.theta_hat, self._theta_min))
        self._theta_hat = report.theta_hat
        return report.theta_hat

    @property
    def theta_hat(self):
        if self._theta_hat is None:
            self.validate()
        return self._theta_hat

    @property
    def theta(self):
        "Ellipticity constant used in the estimates, discounted for sampling"
        return self.theta_hat / CoefficientField.SAFETY_FACTOR

    def garding_constants(self):
        return garding_constants(self._coeffs, self.theta)

    def continuity_constant(self):
        return continuity_constant(self._coeffs, self._basis)

    def quadrature(self):
        return QuadratureRule.for_basis(self._basis)

    def ivp(self):
        "The Galerkin system of the problem on its basis and grid"
        return galerkin_ivp(self._alpha, self._grid, self._basis,
                            self._coeffs, self._forcing,
                            quad=self.quadrature())

    def solve(self, scheme=None, ivp=None):
        """
        Solves the Galerkin system of the problem

        Parameters
        ----------
        scheme : str | None
            'l1' or 'picard', the problem's scheme if None
        ivp : FractionalIVP | None
            The assembled system, assembled if not provided

        Returns
        -------
        trajectory : ModalTrajectory
            The solution
        info : dict
            Solver details for run records (scheme, gamma, iterations, ...)
        """
        scheme = scheme if scheme is not None else self._scheme
        if ivp is None:
            ivp = self.ivp()
        if scheme == 'picard':
            trajectory, log = picard_solve(ivp, self._picard)
            info = log.to_dict()
        elif scheme == 'l1':
            trajectory = l1_solve(ivp)
            info = {}
        else:
            raise FracGalInvalidParameterError(
                "Unrecognised scheme '{}', can be one of '{}'".format(
                    scheme, "', '".join(self.SCHEMES)))
        info['scheme'] = scheme
        return trajectory, info

    def to_dict(self):
        "Echo of the configuration, used in run records"
        dim = self._geometry.dim
        return {
            'name': self._name,
            'alpha': self._alpha,
            'T': self._horizon,
            'lengths': list(self._geometry.lengths),
            'coefficients': dict(
                [('a{}{}'.format(i, j), str(self._coeffs.a(i, j).expr))
                 for i in range(1, dim + 1) for j in range(i, dim + 1)]
                + [('b{}'.format(j + 1), str(f.expr))
                   for j, f in enumerate(self._coeffs.b)]
                + [('c', str(self._coeffs.c.expr))]),
            'forcing': {str(k): str(v)
                        for k, v in self._forcing.amplitudes.items()},
            'modes': self.modes,
            'steps': self.steps,
            'scheme': self._scheme,
            'gamma': self._picard.gamma,
            'max_iters': self._picard.max_iters,
            'tol': self._picard.tol,
            'theta_min': self._theta_min}

    def __repr__(self):
        return "Problem(name={}, alpha={}, T={}, {}, N={}, M={})".format(
            self._name, self._alpha, self._horizon, self._geometry,
            self.modes, self.steps)


def make_problem(alpha, horizon, lengths, a=None, b=None, c=None,
                 forcing=None, modes=4, steps=256, **kwargs):
    """
    Convenience constructor from raw expressions

    Parameters
    ----------
    lengths : float | tuple[float]
        Side length(s) of the box
    a : dict[tuple[int], str] | str | None
        Diffusion coefficients, a single expression is used for a11
    b : list[str] | None
        Advection coefficients
    c : str | None
        Reaction coefficient
    forcing : dict[int, str] | None
        Forcing amplitudes keyed by mode
    """
    geometry = DomainGeometry(lengths)
    if isinstance(a, str):
        a = {(1, 1): a}
    coeffs = CoefficientSet(geometry.lengths, horizon, a=a, b=b, c=c)
    return Problem(alpha, horizon, geometry, coeffs, ModalForcing(forcing),
                   modes, steps, **kwargs)
