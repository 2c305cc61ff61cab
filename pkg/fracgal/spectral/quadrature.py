from builtins import object
import numpy as np
from fracgal.exceptions import FracGalInvalidParameterError


class QuadratureRule(object):
    """
    Composite Gauss-Legendre rule on a box: P panels per axis with G points
    per panel, tensorised in two dimensions. Exact for polynomials of degree
    2G - 1 on each panel

    Parameters
    ----------
    panels : int | tuple[int]
        Panels per axis (a single value is used for every axis)
    points : int
        Gauss-Legendre points per panel
    """

    DEFAULT_POINTS = 6
    PANELS_PER_MODE = 4

    def __init__(self, panels, points=DEFAULT_POINTS):
        if isinstance(panels, int):
            panels = (panels,)
        panels = tuple(int(p) for p in panels)
        if any(p < 1 for p in panels) or int(points) < 1:
            raise FracGalInvalidParameterError(
                "Quadrature panels and points must be at least 1 ({}, {})"
                .format(panels, points))
        self._panels = panels
        self._points = int(points)

    @classmethod
    def for_basis(cls, basis, points=DEFAULT_POINTS):
        "Default rule, 4 panels per half-wave of the highest mode per axis"
        return cls(tuple(cls.PANELS_PER_MODE * k
                         for k in basis.max_indices), points=points)

    @property
    def panels(self):
        return self._panels

    @property
    def points(self):
        return self._points

    def axis_rule(self, length, axis=0):
        """
        Nodes and weights of the composite rule on [0, length]
        """
        n_panels = self._panels[min(axis, len(self._panels) - 1)]
        x, w = np.polynomial.legendre.leggauss(self._points)
        edges = np.linspace(0.0, length, n_panels + 1)
        half = 0.5 * np.diff(edges)
        nodes = (edges[:-1, None] + half[:, None] * (1.0 + x[None, :]))
        weights = half[:, None] * w[None, :]
        return nodes.ravel(), weights.ravel()

    def nodes(self, geometry):
        """
        Tensor nodes and weights over the geometry

        Returns
        -------
        points : tuple[np.ndarray]
            Flattened coordinate arrays, one per dimension
        weights : np.ndarray
            The flattened weights
        """
        rules = [self.axis_rule(l, axis=i)
                 for i, l in enumerate(geometry.lengths)]
        if len(rules) == 1:
            return (rules[0][0],), rules[0][1]
        (x, wx), (y, wy) = rules
        X, Y = np.meshgrid(x, y, indexing='ij')
        W = np.outer(wx, wy)
        return (X.ravel(), Y.ravel()), W.ravel()

    def integrate(self, func, geometry):
        points, weights = self.nodes(geometry)
        return float(np.dot(weights, func(*points)))

    def __eq__(self, other):
        try:
            return (self._panels == other._panels
                    and self._points == other._points)
        except AttributeError:
            return False

    def __hash__(self):
        return hash((self._panels, self._points))

    def __repr__(self):
        return "QuadratureRule(panels={}, points={})".format(self._panels,
                                                             self._points)
