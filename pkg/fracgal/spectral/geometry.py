from builtins import object
from fracgal.exceptions import FracGalInvalidParameterError


class DomainGeometry(object):
    """
    A box domain, the interval (0, L) or the rectangle (0, L1) x (0, L2)

    Parameters
    ----------
    lengths : tuple[float]
        The side lengths, one per dimension
    """

    def __init__(self, lengths):
        try:
            lengths = tuple(float(l) for l in lengths)
        except TypeError:
            lengths = (float(lengths),)
        if len(lengths) not in (1, 2):
            raise FracGalInvalidParameterError(
                "Only 1 and 2 dimensional domains are supported ({} side "
                "lengths provided)".format(len(lengths)))
        if any(not l > 0.0 for l in lengths):
            raise FracGalInvalidParameterError(
                "Side lengths must be positive ({})".format(lengths))
        self._lengths = lengths

    @classmethod
    def interval(cls, length=1.0):
        return cls((length,))

    @classmethod
    def rectangle(cls, length1=1.0, length2=1.0):
        return cls((length1, length2))

    @property
    def lengths(self):
        return self._lengths

    @property
    def dim(self):
        return len(self._lengths)

    @property
    def volume(self):
        volume = 1.0
        for l in self._lengths:
            volume *= l
        return volume

    def __eq__(self, other):
        try:
            return self._lengths == other._lengths
        except AttributeError:
            return False

    def __ne__(self, other):
        return not (self == other)

    def __hash__(self):
        return hash(self._lengths)

    def __repr__(self):
        return "DomainGeometry(lengths={})".format(self._lengths)
