"""
Dirichlet-Laplacian eigenbasis of a box and the modal realisations of the
L2, H1_0 and H^-1 norms
"""
from builtins import object
import math
import itertools
import numpy as np
from fracgal.exceptions import (
    FracGalInvalidParameterError, FracGalUsageError)
from .quadrature import QuadratureRule


class SpectralBasis(object):
    """
    The first N eigenpairs (e_k, lambda_k) of -Laplace with homogeneous
    Dirichlet conditions on a box, ordered by nondecreasing eigenvalue

    In one dimension e_k(x) = sqrt(2/L) sin(k pi x / L), lambda_k = (k pi/L)^2,
    in two dimensions tensor products with eigenvalue ties broken by the
    lexicographic order of the mode pair.

    Parameters
    ----------
    geometry : DomainGeometry
        The box
    modes : list[tuple[int]]
        Mode indices (one per dimension) of each basis function
    """

    def __init__(self, geometry, modes):
        modes = [tuple(int(k) for k in m) for m in modes]
        if not modes:
            raise FracGalInvalidParameterError(
                "Basis requires at least one mode")
        if any(len(m) != geometry.dim or min(m) < 1 for m in modes):
            raise FracGalInvalidParameterError(
                "Invalid mode indices {} for {}".format(modes, geometry))
        self._geometry = geometry
        self._modes = tuple(modes)
        self._eigenvalues = np.array(
            [self._eigenvalue(m) for m in modes])
        self._eigenvalues.setflags(write=False)

    def _eigenvalue(self, mode):
        return sum((k * math.pi / l) ** 2
                   for k, l in zip(mode, self._geometry.lengths))

    @property
    def geometry(self):
        return self._geometry

    @property
    def size(self):
        return len(self._modes)

    def __len__(self):
        return len(self._modes)

    @property
    def modes(self):
        return self._modes

    @property
    def eigenvalues(self):
        return self._eigenvalues

    @property
    def max_indices(self):
        "The largest mode index along each axis"
        return tuple(max(m[i] for m in self._modes)
                     for i in range(self._geometry.dim))

    def _factors(self, points):
        """
        Per-axis sine factors and their derivatives, arrays of shape
        (n_points, N)
        """
        sines = []
        cosines = []
        for axis, (coords, length) in enumerate(zip(points,
                                                    self._geometry.lengths)):
            k = np.array([m[axis] for m in self._modes], dtype=float)
            freq = k * math.pi / length
            norm = math.sqrt(2.0 / length)
            phase = np.asarray(coords, dtype=float)[:, None] * freq[None, :]
            sines.append(norm * np.sin(phase))
            cosines.append(norm * freq[None, :] * np.cos(phase))
        return sines, cosines

    def values(self, points):
        """
        Basis functions at the points, shape (n_points, N)

        Parameters
        ----------
        points : tuple[np.ndarray]
            Coordinate arrays, one per dimension
        """
        sines, _ = self._factors(points)
        out = sines[0]
        for s in sines[1:]:
            out = out * s
        return out

    def gradients(self, points):
        """
        Partial derivatives of the basis functions at the points, a list
        with one (n_points, N) array per dimension
        """
        sines, cosines = self._factors(points)
        grads = []
        for axis in range(len(sines)):
            g = cosines[axis]
            for other in range(len(sines)):
                if other != axis:
                    g = g * sines[other]
            grads.append(g)
        return grads

    def truncated(self, size):
        if size > self.size:
            raise FracGalUsageError(
                "Cannot truncate basis of {} modes to {}".format(self.size,
                                                                 size))
        return type(self)(self._geometry, self._modes[:size])

    def is_prefix_of(self, other):
        return (self._geometry == other._geometry
                and other._modes[:self.size] == self._modes)

    def __eq__(self, other):
        try:
            return (self._geometry == other._geometry
                    and self._modes == other._modes)
        except AttributeError:
            return False

    def __ne__(self, other):
        return not (self == other)

    def __hash__(self):
        return hash((self._geometry, self._modes))

    def __repr__(self):
        return "SpectralBasis({}, N={})".format(self._geometry, self.size)


def build_basis(geometry, size):
    """
    Builds the first 'size' Dirichlet eigenpairs of the geometry

    Parameters
    ----------
    geometry : DomainGeometry
        The box
    size : int
        Number of modes N >= 1

    Returns
    -------
    basis : SpectralBasis
        The basis ordered by nondecreasing eigenvalue
    """
    if int(size) != size or size < 1:
        raise FracGalInvalidParameterError(
            "Number of modes must be a positive integer ({})".format(size))
    size = int(size)
    if geometry.dim == 1:
        modes = [(k,) for k in range(1, size + 1)]
    else:
        # The first N eigenvalues only involve indices up to N on each axis
        candidates = itertools.product(range(1, size + 1), repeat=2)

        def key(mode):
            lam = sum((k * math.pi / l) ** 2
                      for k, l in zip(mode, geometry.lengths))
            return (float('{:.12e}'.format(lam)), mode)

        modes = sorted(candidates, key=key)[:size]
    return SpectralBasis(geometry, modes)


class ModalVector(object):
    """
    Coefficients c^1..c^N of a function sum_i c^i e_i in the span of a basis
    """

    def __init__(self, coefficients, basis):
        coefficients = np.array(coefficients, dtype=float)
        if coefficients.shape != (basis.size,):
            raise FracGalInvalidParameterError(
                "Number of coefficients ({}) does not match the basis size "
                "({})".format(coefficients.shape, basis.size))
        coefficients.setflags(write=False)
        self._coefficients = coefficients
        self._basis = basis

    @classmethod
    def unit(cls, index, basis):
        "The basis function e_index (1-based index)"
        c = np.zeros(basis.size)
        c[index - 1] = 1.0
        return cls(c, basis)

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def basis(self):
        return self._basis

    def __len__(self):
        return len(self._coefficients)

    def embedded(self, basis):
        "Zero-pads the coefficients into a basis this one is a prefix of"
        if not self._basis.is_prefix_of(basis):
            raise FracGalUsageError(
                "{} is not a prefix of {}".format(self._basis, basis))
        c = np.zeros(basis.size)
        c[:self._basis.size] = self._coefficients
        return type(self)(c, basis)

    def restricted(self, basis):
        if not basis.is_prefix_of(self._basis):
            raise FracGalUsageError(
                "{} is not a prefix of {}".format(basis, self._basis))
        return type(self)(self._coefficients[:basis.size], basis)

    def evaluate(self, points):
        return self._basis.values(points).dot(self._coefficients)

    def __eq__(self, other):
        try:
            return (self._basis == other._basis
                    and np.array_equal(self._coefficients,
                                       other._coefficients))
        except AttributeError:
            return False

    def __repr__(self):
        return "ModalVector({}, {})".format(list(self._coefficients),
                                            self._basis)


def modal_norm_squares(coefficients, eigenvalues):
    """
    Squared L2, H1_0 and H^-1 norms of (arrays of) modal coefficient
    vectors along their last axis
    """
    c2 = np.asarray(coefficients, dtype=float) ** 2
    return (c2.sum(axis=-1), (c2 * eigenvalues).sum(axis=-1),
            (c2 / eigenvalues).sum(axis=-1))


def modal_norms(v):
    """
    The norms of a modal vector

        |v|_L2^2   = sum c_k^2
        |v|_H10^2  = sum lambda_k c_k^2      (gradient seminorm)
        |v|_H-1^2  = sum c_k^2 / lambda_k    (dual of the gradient norm)

    Parameters
    ----------
    v : ModalVector
        The vector

    Returns
    -------
    norms : tuple[float]
        (l2, h10, hminus1)
    """
    l2, h10, hm1 = modal_norm_squares(v.coefficients, v.basis.eigenvalues)
    return (math.sqrt(l2), math.sqrt(h10), math.sqrt(hm1))


def project(samples, basis, quad=None):
    """
    L2 projection P_N u = sum c^i e_i of a function sampled on the nodes of
    the quadrature rule, c^i = int u e_i

    Parameters
    ----------
    samples : np.ndarray | callable
        Values of u at the (flattened) quadrature nodes, or a function of
        the coordinates that is evaluated there
    basis : SpectralBasis
        The basis to project onto
    quad : QuadratureRule | None
        The rule, the default rule for the basis if None

    Returns
    -------
    projection : ModalVector
        The coefficients of the projection
    """
    if quad is None:
        quad = QuadratureRule.for_basis(basis)
    points, weights = quad.nodes(basis.geometry)
    if callable(samples):
        samples = samples(*points)
    samples = np.broadcast_to(np.asarray(samples, dtype=float),
                              weights.shape)
    E = basis.values(points)
    return ModalVector(E.T.dot(weights * samples), basis)
