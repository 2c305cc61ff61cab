from builtins import object
import json
import math
from collections import OrderedDict
from pprint import pformat
from fracgal.exceptions import FracGalError, FracGalInvalidParameterError
from fracgal.utils import JSON_ENCODING


class EstimateEntry(object):
    """
    The outcome of checking a single inequality lhs <= rhs

    Parameters
    ----------
    name : str
        Name of the check
    lhs : float
        Left-hand value
    rhs : float
        Right-hand value
    constants : dict[str, float] | None
        The constants the right-hand side was evaluated with (theta, beta,
        nu, C2, |f|_{L^inf H^-1}, ...)
    rel_tol : float
        Relative tolerance of the pass criterion, margin >= -rel_tol |rhs|
    """

    DEFAULT_REL_TOL = 1e-9

    def __init__(self, name, lhs, rhs, constants=None,
                 rel_tol=DEFAULT_REL_TOL):
        lhs = float(lhs)
        rhs = float(rhs)
        if math.isnan(lhs) or math.isnan(rhs):
            raise FracGalInvalidParameterError(
                "Sides of check '{}' must be numbers (lhs={}, rhs={})"
                .format(name, lhs, rhs))
        self._name = name
        self._lhs = lhs
        self._rhs = rhs
        self._constants = dict(constants) if constants else {}
        self._rel_tol = float(rel_tol)

    @property
    def name(self):
        return self._name

    @property
    def lhs(self):
        return self._lhs

    @property
    def rhs(self):
        return self._rhs

    @property
    def constants(self):
        return self._constants

    @property
    def margin(self):
        return self._rhs - self._lhs

    @property
    def tolerance(self):
        return self._rel_tol * abs(self._rhs)

    @property
    def passed(self):
        return self.margin >= -self.tolerance

    @property
    def ratio(self):
        "lhs / rhs, the measured constant of the inequality (None if rhs=0)"
        return self._lhs / self._rhs if self._rhs != 0.0 else None

    def __bool__(self):
        return self.passed

    def __eq__(self, other):
        try:
            return (self._name == other._name and self._lhs == other._lhs
                    and self._rhs == other._rhs
                    and self._constants == other._constants)
        except AttributeError:
            return False

    def __ne__(self, other):
        return not (self == other)

    def __repr__(self):
        return "EstimateEntry('{}', lhs={}, rhs={}, {})".format(
            self._name, self._lhs, self._rhs,
            'pass' if self.passed else 'FAIL')

    def to_dict(self):
        return OrderedDict([
            ('name', self._name),
            ('lhs', self._lhs),
            ('rhs', self._rhs),
            ('margin', self.margin),
            ('pass', self.passed),
            ('constants', {k: float(v) for k, v in self._constants.items()})])

    @classmethod
    def from_dict(cls, dct):
        return cls(dct['name'], dct['lhs'], dct['rhs'],
                   constants=dct.get('constants'))


class EstimateReport(object):
    """
    An ordered collection of checked inequalities, serialised to JSON as

        {"checks": [{name, lhs, rhs, margin, pass, constants}, ...],
         "passed": bool}

    Parameters
    ----------
    entries : list[EstimateEntry]
        The checks
    """

    def __init__(self, entries=None):
        self._entries = []
        for entry in (entries or []):
            self.append(entry)

    @property
    def entries(self):
        return list(self._entries)

    @property
    def names(self):
        return [e.name for e in self._entries]

    @property
    def passed(self):
        return all(e.passed for e in self._entries)

    @property
    def failures(self):
        return [e for e in self._entries if not e.passed]

    def append(self, entry):
        if entry.name in self.names:
            raise FracGalInvalidParameterError(
                "Duplicate check '{}' in report".format(entry.name))
        self._entries.append(entry)

    def extend(self, entries):
        for entry in entries:
            self.append(entry)

    def __getitem__(self, name):
        try:
            return next(e for e in self._entries if e.name == name)
        except StopIteration:
            raise KeyError(name)

    def __contains__(self, name):
        return name in self.names

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        try:
            return self._entries == other._entries
        except AttributeError:
            return False

    def __ne__(self, other):
        return not (self == other)

    def __repr__(self):
        return "EstimateReport({} checks, {} failed)".format(
            len(self), len(self.failures))

    def to_dict(self):
        return OrderedDict([
            ('checks', [e.to_dict() for e in self._entries]),
            ('passed', self.passed)])

    @classmethod
    def from_dict(cls, dct):
        return cls([EstimateEntry.from_dict(d) for d in dct['checks']])

    def to_json(self):
        try:
            return json.dumps(self.to_dict(), indent=2, sort_keys=True)
        except TypeError:
            raise FracGalError(
                "Could not serialise estimate report:\n{}".format(
                    pformat(self.to_dict())))

    def save(self, path):
        with open(path, 'w', **JSON_ENCODING) as f:
            f.write(self.to_json())
            f.write('\n')

    @classmethod
    def load(cls, path):
        with open(path, **JSON_ENCODING) as f:
            return cls.from_dict(json.load(f))
