from builtins import object
import numpy as np
from fracgal.exceptions import FracGalInvalidParameterError
from .parser import parse, evaluate, Expr, DEFAULT_VARIABLES


class CoefficientField(object):
    """
    A coefficient a_ij(t, x), b_j(t, x) or c(t, x) given by an expression,
    together with the box (0, L1) [x (0, L2)] x [0, T] it is declared on

    Parameters
    ----------
    expr : Expr | str
        The expression (parsed if a string is provided)
    lengths : tuple[float]
        Side lengths of the spatial box
    horizon : float
        The time horizon T
    """

    SAFETY_FACTOR = 1.05
    DEFAULT_SAMPLES = 64

    def __init__(self, expr, lengths, horizon):
        lengths = tuple(float(l) for l in lengths)
        if not 1 <= len(lengths) <= 2 or any(l <= 0.0 for l in lengths):
            raise FracGalInvalidParameterError(
                "Coefficient fields are declared on an interval or rectangle "
                "with positive side lengths ({} provided)".format(lengths))
        if not isinstance(expr, Expr):
            expr = parse(expr, variables=DEFAULT_VARIABLES[:len(lengths) + 1])
        self._expr = expr
        self._lengths = lengths
        self._horizon = float(horizon)

    @classmethod
    def constant(cls, value, lengths, horizon):
        return cls(repr(float(value)), lengths, horizon)

    @property
    def expr(self):
        return self._expr

    @property
    def lengths(self):
        return self._lengths

    @property
    def dim(self):
        return len(self._lengths)

    @property
    def horizon(self):
        return self._horizon

    @property
    def is_constant(self):
        return not self._expr.variables()

    def __call__(self, t, *point):
        return evaluate(self._expr, t, point)

    def sample(self, t, *point):
        """
        Evaluates the field on the broadcast of t and the spatial coordinate
        arrays, always returning an array of the broadcast shape
        """
        shape = np.broadcast(t, *point).shape
        return np.broadcast_to(np.asarray(self(t, *point), dtype=float),
                               shape)

    def tensor_samples(self, samples=DEFAULT_SAMPLES):
        """
        Samples the field on a tensor grid of 'samples' points per axis over
        [0, T] x box (end points included)
        """
        axes = [np.linspace(0.0, self._horizon, samples)]
        axes.extend(np.linspace(0.0, l, samples) for l in self._lengths)
        mesh = np.meshgrid(*axes, indexing='ij')
        return self.sample(*mesh)

    def sup_bound(self, samples=DEFAULT_SAMPLES):
        """
        Estimate of the L-infinity norm of the field: the maximum of |f|
        over a tensor grid of samples inflated by the safety factor

        Returns
        -------
        bound : float
            1.05 * max |f| over the samples
        """
        return self.SAFETY_FACTOR * float(
            np.max(np.abs(self.tensor_samples(samples))))

    def __eq__(self, other):
        try:
            return (self._expr == other._expr
                    and self._lengths == other._lengths
                    and self._horizon == other._horizon)
        except AttributeError:
            return False

    def __hash__(self):
        return hash((self._expr, self._lengths, self._horizon))

    def __repr__(self):
        return "CoefficientField('{}', lengths={}, horizon={})".format(
            self._expr, self._lengths, self._horizon)


def sup_bound(field, samples=CoefficientField.DEFAULT_SAMPLES):
    return field.sup_bound(samples=samples)
