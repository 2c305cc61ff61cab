"""
Assembly of the time-dependent bilinear form

    a(u, v; t) = int sum_kl a_kl d_l u d_k v + sum_k b_k (d_k u) v + c u v

on a spectral basis, together with the constants of the coercivity
(Garding) and continuity estimates of the form
"""
from builtins import object
import math
import logging
import numpy as np
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalEllipticityError,
    FracGalSymmetryError, FracGalUsageError)
from fracgal.exprfield import CoefficientField, parse
from fracgal.fraccalc import GridSeries
from .quadrature import QuadratureRule

logger = logging.getLogger('fracgal')


class CoefficientSet(object):
    """
    The coefficients a_ij (symmetric), b_j and c of the elliptic operator

    Only the upper triangle of a is read. A lower-triangle entry may be
    provided for completeness but must then agree with its transpose.

    Parameters
    ----------
    lengths : tuple[float]
        Side lengths of the spatial box
    horizon : float
        The time horizon T
    a : dict[tuple[int], CoefficientField | str]
        Diffusion coefficients keyed by 1-based (i, j) index pairs. Missing
        diagonal entries default to 1 and missing off-diagonal entries to 0
    b : list[CoefficientField | str] | None
        Advection coefficients, one per dimension (zero if None)
    c : CoefficientField | str | None
        Reaction coefficient (zero if None)
    """

    SYMMETRY_SAMPLES = 16
    SYMMETRY_TOL = 1e-12

    def __init__(self, lengths, horizon, a=None, b=None, c=None):
        lengths = tuple(float(l) for l in lengths)
        self._lengths = lengths
        self._horizon = float(horizon)
        dim = len(lengths)
        a = dict(a) if a is not None else {}
        for (i, j) in a:
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise FracGalInvalidParameterError(
                    "Diffusion coefficient index ({}, {}) out of range for a "
                    "{}-dimensional domain".format(i, j, dim))
        self._a = {}
        for i in range(1, dim + 1):
            for j in range(i, dim + 1):
                default = '1.0' if i == j else '0.0'
                self._a[(i, j)] = self._field(a.get((i, j), default))
        for (i, j), field in a.items():
            if i > j:
                self._check_symmetric(i, j, self._field(field))
        if b is None:
            b = ['0.0'] * dim
        if len(b) != dim:
            raise FracGalInvalidParameterError(
                "Expected {} advection coefficients ({} provided)".format(
                    dim, len(b)))
        self._b = tuple(self._field(f) for f in b)
        self._c = self._field(c if c is not None else '0.0')

    def _field(self, field):
        if isinstance(field, CoefficientField):
            if (field.lengths != self._lengths
                    or field.horizon != self._horizon):
                raise FracGalInvalidParameterError(
                    "{} is not declared on the domain of the coefficient set"
                    " ({}, T={})".format(field, self._lengths, self._horizon))
            return field
        return CoefficientField(field, self._lengths, self._horizon)

    def _check_symmetric(self, i, j, lower):
        upper = self._a[(j, i)]
        if lower.expr == upper.expr:
            return
        diff = np.abs(lower.tensor_samples(self.SYMMETRY_SAMPLES)
                      - upper.tensor_samples(self.SYMMETRY_SAMPLES))
        scale = max(1.0, float(np.max(np.abs(
            upper.tensor_samples(self.SYMMETRY_SAMPLES)))))
        if np.max(diff) > self.SYMMETRY_TOL * scale:
            raise FracGalSymmetryError(
                "Diffusion matrix is not symmetric: a{}{} = '{}' differs from "
                "a{}{} = '{}' (max difference {})".format(
                    i, j, lower.expr, j, i, upper.expr, np.max(diff)))

    @classmethod
    def identity(cls, lengths, horizon, c=None):
        "Laplacian (a = I, b = 0) with an optional reaction coefficient"
        return cls(lengths, horizon, c=c)

    @property
    def lengths(self):
        return self._lengths

    @property
    def dim(self):
        return len(self._lengths)

    @property
    def horizon(self):
        return self._horizon

    def a(self, i, j):
        "Diffusion coefficient a_ij (1-based), mirrored from a_ji for i > j"
        return self._a[(min(i, j), max(i, j))]

    @property
    def b(self):
        return self._b

    @property
    def c(self):
        return self._c

    @property
    def has_advection(self):
        return not all(f.is_constant and f(0.0) == 0.0 for f in self._b)

    def fields(self):
        "All distinct fields, upper triangle of a first"
        return ([self._a[k] for k in sorted(self._a)] + list(self._b)
                + [self._c])

    def min_eigenvalues(self, t, *point):
        """
        Minimum eigenvalue of the diffusion matrix (a_ij(t, x)) on the
        broadcast of the arguments
        """
        a11 = self.a(1, 1).sample(t, *point)
        if self.dim == 1:
            return a11
        a12 = self.a(1, 2).sample(t, *point)
        a22 = self.a(2, 2).sample(t, *point)
        return (0.5 * (a11 + a22)
                - np.sqrt((0.5 * (a11 - a22)) ** 2 + a12 ** 2))

    def b_norm_samples(self, samples=CoefficientField.DEFAULT_SAMPLES):
        "Euclidean norm (sum_j b_j^2)^1/2 on the tensor sampling grid"
        return np.sqrt(sum(f.tensor_samples(samples) ** 2 for f in self._b))

    def __eq__(self, other):
        try:
            return (self._lengths == other._lengths
                    and self._horizon == other._horizon
                    and self._a == other._a
                    and self._b == other._b
                    and self._c == other._c)
        except AttributeError:
            return False

    def __ne__(self, other):
        return not (self == other)

    def __repr__(self):
        return "CoefficientSet(a={}, b={}, c={})".format(
            {k: str(v.expr) for k, v in self._a.items()},
            [str(f.expr) for f in self._b], self._c.expr)


class ModalForcing(object):
    """
    A forcing term given as a finite modal expansion

        f(t) = sum_{j <= N_f} f^j(t) e_j

    with amplitudes f^j given by expressions in t

    Parameters
    ----------
    amplitudes : dict[int, Expr | str]
        Amplitude expressions keyed by 1-based mode index
    """

    def __init__(self, amplitudes=None):
        amplitudes = dict(amplitudes) if amplitudes else {}
        self._amplitudes = {}
        for mode, expr in sorted(amplitudes.items()):
            if int(mode) != mode or mode < 1:
                raise FracGalInvalidParameterError(
                    "Forcing modes must be positive integers ({} provided)"
                    .format(mode))
            if isinstance(expr, (int, float)):
                expr = repr(float(expr))
            if isinstance(expr, str):
                expr = parse(expr, variables=('t',))
            self._amplitudes[int(mode)] = expr

    @classmethod
    def zero(cls):
        return cls()

    @property
    def amplitudes(self):
        return self._amplitudes

    @property
    def max_mode(self):
        return max(self._amplitudes) if self._amplitudes else 0

    @property
    def is_zero(self):
        return all(not e.variables() and e.evaluate({}) == 0.0
                   for e in self._amplitudes.values())

    def vector(self, t, size):
        """
        The load vector (f^1(t), .., f^size(t)), modes above 'size'
        truncated and modes above N_f zero
        """
        return self.samples(np.asarray([t], dtype=float), size)[0]

    def samples(self, times, size):
        "Load vectors at each of the given times, shape (len(times), size)"
        times = np.asarray(times, dtype=float)
        out = np.zeros((len(times), size))
        for mode, expr in self._amplitudes.items():
            if mode <= size:
                with np.errstate(invalid='ignore', divide='ignore'):
                    out[:, mode - 1] = np.broadcast_to(
                        expr.evaluate({'t': times}), times.shape)
        return out

    def series(self, grid, size):
        return GridSeries(grid, self.samples(grid.nodes, size))

    def h_minus1_sup(self, grid, basis):
        """
        sup_m |f(t_m)|_{H^-1} over the grid nodes by the modal formula,
        restricted to the modes of the basis
        """
        f = self.samples(grid.nodes, basis.size)
        return float(np.max(np.sqrt(
            (f ** 2 / basis.eigenvalues).sum(axis=1))))

    def __eq__(self, other):
        try:
            return self._amplitudes == other._amplitudes
        except AttributeError:
            return False

    def __repr__(self):
        return "ModalForcing({})".format(
            {k: str(v) for k, v in self._amplitudes.items()})


class AssembledForm(object):
    """
    The Galerkin matrix A(t)_ij = a(e_j, e_i; t) and load vector
    f^j(t) = <f(t), e_j> at a single time
    """

    def __init__(self, time, matrix, load):
        matrix = np.array(matrix, dtype=float)
        load = np.array(load, dtype=float)
        if not (np.all(np.isfinite(matrix)) and np.all(np.isfinite(load))):
            raise FracGalUsageError(
                "Assembled form at t={} is not finite".format(time))
        matrix.setflags(write=False)
        load.setflags(write=False)
        self._time = float(time)
        self._matrix = matrix
        self._load = load

    @property
    def time(self):
        return self._time

    @property
    def matrix(self):
        return self._matrix

    @property
    def load(self):
        return self._load

    @property
    def size(self):
        return len(self._load)

    def __repr__(self):
        return "AssembledForm(t={}, N={})".format(self._time, self.size)


class FormAssembler(object):
    """
    Evaluates A(t) for a fixed basis and coefficient set, holding the basis
    values and gradients at the quadrature nodes so that repeated assembly
    over the time grid only re-samples the coefficients

    Parameters
    ----------
    basis : SpectralBasis
        The basis
    coeffs : CoefficientSet
        The coefficients
    quad : QuadratureRule | None
        Spatial quadrature, the default rule for the basis if None
    """

    def __init__(self, basis, coeffs, quad=None):
        if coeffs.lengths != basis.geometry.lengths:
            raise FracGalInvalidParameterError(
                "Coefficients ({}) and basis ({}) are declared on different "
                "domains".format(coeffs.lengths, basis.geometry))
        if quad is None:
            quad = QuadratureRule.for_basis(basis)
        self._basis = basis
        self._coeffs = coeffs
        self._quad = quad
        self._points, self._weights = quad.nodes(basis.geometry)
        self._values = basis.values(self._points)
        self._gradients = basis.gradients(self._points)

    @property
    def basis(self):
        return self._basis

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def quad(self):
        return self._quad

    def _weighted(self, field, t):
        return self._weights * field.sample(t, *self._points)

    def matrix(self, t):
        coeffs = self._coeffs
        theta = float(np.min(coeffs.min_eigenvalues(t, *self._points)))
        if not theta > 0.0:
            raise FracGalEllipticityError(
                theta, "Diffusion matrix is not positive definite at the "
                "quadrature nodes at t={} (minimum eigenvalue {})".format(
                    t, theta))
        E = self._values
        G = self._gradients
        dim = coeffs.dim
        A = np.zeros((self._basis.size, self._basis.size))
        for k in range(dim):
            for l in range(dim):
                wa = self._weighted(coeffs.a(k + 1, l + 1), t)
                A += G[k].T.dot(wa[:, None] * G[l])
            if coeffs.has_advection:
                wb = self._weighted(coeffs.b[k], t)
                A += E.T.dot(wb[:, None] * G[k])
        wc = self._weighted(coeffs.c, t)
        A += E.T.dot(wc[:, None] * E)
        return A

    def __call__(self, t, forcing=None):
        load = (forcing.vector(t, self._basis.size) if forcing is not None
                else np.zeros(self._basis.size))
        return AssembledForm(t, self.matrix(t), load)

    def series(self, grid, forcing=None):
        """
        A(t_m) and f(t_m) at every node of the grid

        Returns
        -------
        A : GridSeries
            Matrix-valued series of shape (M + 1, N, N)
        f : GridSeries
            Vector-valued series of shape (M + 1, N)
        """
        logger.debug("Assembling {} at {} time nodes".format(self._basis,
                                                           len(grid)))
        A = np.array([self.matrix(t) for t in grid.nodes])
        if forcing is None:
            forcing = ModalForcing.zero()
        return GridSeries(grid, A), forcing.series(grid, self._basis.size)


def assemble(basis, coeffs, forcing, t, quad=None):
    """
    Assembles the Galerkin matrix and load vector at time t

    Parameters
    ----------
    basis : SpectralBasis
        The basis
    coeffs : CoefficientSet
        Coefficients a_ij, b_j and c
    forcing : ModalForcing | None
        The forcing expansion (zero if None)
    t : float
        The time
    quad : QuadratureRule | None
        Spatial quadrature, the default rule for the basis if None

    Returns
    -------
    form : AssembledForm
        A(t) and f(t)
    """
    return FormAssembler(basis, coeffs, quad=quad)(t, forcing)


class EllipticityReport(object):
    """
    Result of sampling the smallest eigenvalue of the diffusion matrix over
    [0, T] x box
    """

    def __init__(self, theta_hat, theta_min, samples):
        self._theta_hat = float(theta_hat)
        self._theta_min = float(theta_min)
        self._samples = samples

    @property
    def theta_hat(self):
        return self._theta_hat

    @property
    def theta_min(self):
        return self._theta_min

    @property
    def samples(self):
        return self._samples

    @property
    def passed(self):
        return self._theta_hat >= self._theta_min

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return "EllipticityReport(theta_hat={}, theta_min={}, passed={})"\
            .format(self._theta_hat, self._theta_min, self.passed)


def check_ellipticity(coeffs, theta_min, samples=32):
    """
    Samples the minimum eigenvalue of (a_ij(t, x)) on a tensor grid of
    'samples' points per axis over [0, T] x box (end points included) and
    compares its global minimum with theta_min

    Parameters
    ----------
    coeffs : CoefficientSet
        The coefficients (non-symmetric input is rejected on construction)
    theta_min : float
        The required lower bound, positive
    samples : int
        Samples per axis

    Returns
    -------
    report : EllipticityReport
        The sampled minimum and pass flag
    """
    if not theta_min > 0.0:
        raise FracGalInvalidParameterError(
            "Ellipticity bound must be positive ({} provided)".format(
                theta_min))
    axes = [np.linspace(0.0, coeffs.horizon, samples)]
    axes.extend(np.linspace(0.0, l, samples) for l in coeffs.lengths)
    mesh = np.meshgrid(*axes, indexing='ij')
    theta_hat = float(np.min(coeffs.min_eigenvalues(*mesh)))
    report = EllipticityReport(theta_hat, theta_min, samples)
    logger.debug("Sampled ellipticity constant {} (required {})".format(
        theta_hat, theta_min))
    return report


def garding_constants(coeffs, theta):
    """
    Constants of the Garding inequality

        a(u, u; t) >= beta |Du|^2 - nu |u|^2

    From a(u, u) >= theta |Du|^2 - |b| |Du| |u| - |c| |u|^2 and Young's
    inequality |b| |Du| |u| <= theta/2 |Du|^2 + |b|^2 / (2 theta) |u|^2,

        beta = theta / 2,   nu = |b|_inf^2 / (2 theta) + |c|_inf

    where the sup norms are the sampled bounds of the coefficient fields
    (including their safety factor) and |b|_inf = sup (sum_j b_j^2)^1/2

    Parameters
    ----------
    coeffs : CoefficientSet
        The coefficients
    theta : float
        Ellipticity constant, positive

    Returns
    -------
    beta : float
        Coercivity constant
    nu : float
        Shift
    """
    if not theta > 0.0:
        raise FracGalInvalidParameterError(
            "Ellipticity constant must be positive ({} provided)".format(
                theta))
    b_sup = 0.0
    if coeffs.has_advection:
        b_sup = CoefficientField.SAFETY_FACTOR * float(
            np.max(coeffs.b_norm_samples()))
    c_sup = coeffs.c.sup_bound()
    return theta / 2.0, b_sup ** 2 / (2.0 * theta) + c_sup


def poincare_constant(basis):
    "C with |u|_L2 <= C |Du|_L2 on H1_0 of the box, 1/sqrt(lambda_1)"
    return 1.0 / math.sqrt(float(np.min(basis.eigenvalues)))


def continuity_constant(coeffs, basis):
    """
    Bound C2 with |a(u, v; t)| <= C2 |Du| |Dv|

        C2 = sum_ij |a_ij|_inf + C_P sum_j |b_j|_inf + C_P^2 |c|_inf

    with C_P the Poincare constant
    """
    cp = poincare_constant(basis)
    dim = coeffs.dim
    a_sum = sum(coeffs.a(i, j).sup_bound()
                for i in range(1, dim + 1) for j in range(1, dim + 1))
    b_sum = sum(f.sup_bound() for f in coeffs.b)
    return a_sum + cp * b_sum + cp ** 2 * coeffs.c.sup_bound()
