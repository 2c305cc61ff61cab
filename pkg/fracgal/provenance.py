import json
import re
from copy import deepcopy
from pprint import pformat
from datetime import datetime
from deepdiff import DeepDiff
from fracgal.exceptions import FracGalError, FracGalUsageError
from fracgal.__about__ import __version__
from fracgal.utils import JSON_ENCODING


RECORD_VERSION = '1.0'


class RunRecord(object):
    """
    Metadata of a command-line run: the configuration it was run with, the
    solver details (scheme, gamma, iteration counts) and timings. Saved
    alongside, but separately from, the data files of the run so the data
    files are reproducible byte for byte

    Parameters
    ----------
    command : str
        The command that produced the outputs
    config : dict
        Echo of the problem configuration and command options
    prov : dict | None
        Previously recorded information (e.g. when loaded from file)
    """

    # Paths compared when checking whether an output directory was produced
    # by the same configuration
    DEFAULT_INCLUDE = ['command', 'config']
    DEFAULT_EXCLUDE = ['timings', 'datetime', 'version']

    def __init__(self, command, config, prov=None):
        self._prov = deepcopy(prov) if prov is not None else {}
        self._prov['command'] = command
        self._prov['config'] = deepcopy(config)
        self._prov.setdefault('version', __version__)
        self._prov.setdefault('record_version', RECORD_VERSION)
        self._prov.setdefault('solver', {})
        self._prov.setdefault('timings', {})
        if 'datetime' not in self._prov:
            self._prov['datetime'] = datetime.now().isoformat()

    def __repr__(self):
        return "{}(command='{}')".format(type(self).__name__, self.command)

    def __eq__(self, other):
        try:
            return self._prov == other._prov
        except AttributeError:
            return False

    @property
    def prov(self):
        return self._prov

    @property
    def command(self):
        return self._prov['command']

    @property
    def config(self):
        return self._prov['config']

    @property
    def solver(self):
        return self._prov['solver']

    @property
    def timings(self):
        return self._prov['timings']

    @property
    def datetime(self):
        return self._prov['datetime']

    def record_solver(self, **kwargs):
        "Adds solver details (scheme, gamma, iterations, ...)"
        self._prov['solver'].update(kwargs)

    def record_timing(self, name, seconds):
        self._prov['timings'][name] = seconds

    def save(self, path):
        """
        Saves the record to a JSON file

        Parameters
        ----------
        path : str
            Path to save the generated JSON file
        """
        with open(path, 'w', **JSON_ENCODING) as f:
            try:
                json.dump(self._prov, f, indent=2, sort_keys=True)
            except TypeError:
                raise FracGalError(
                    "Could not serialise run record dictionary:\n{}"
                    .format(pformat(self._prov)))

    @classmethod
    def load(cls, path):
        """
        Loads a saved run record from a JSON file

        Parameters
        ----------
        path : str
            Path to the record file

        Returns
        -------
        record : RunRecord
            The loaded record
        """
        with open(path, **JSON_ENCODING) as f:
            prov = json.load(f)
        return cls(prov.get('command'), prov.get('config', {}), prov=prov)

    def mismatches(self, other, include=DEFAULT_INCLUDE,
                   exclude=DEFAULT_EXCLUDE):
        """
        Compares the information stored in two records. Matches are
        constrained to the paths passed to the 'include' kwarg, with the
        exception of sub-paths passed to the 'exclude' kwarg

        Parameters
        ----------
        other : RunRecord
            The record to compare against
        include : list[str] | None
            Paths in the record to include in the match. If None all are
            included
        exclude : list[str] | None
            Paths in the record to exclude from the match

        Returns
        -------
        mismatches : dict
            The filtered DeepDiff of the two records, empty if they match
        """
        if include is not None:
            include_res = [self._gen_path_regex(p) for p in include]
        if exclude is not None:
            exclude_res = [self._gen_path_regex(p) for p in exclude]
        diff = DeepDiff(self._prov, other._prov, ignore_order=True)

        def include_change(change):
            if include is None:
                included = True
            else:
                included = any(rx.match(change) for rx in include_res)
            if included and exclude is not None:
                included = not any(rx.match(change) for rx in exclude_res)
            return included

        filtered_diff = {}
        for change_type, changes in diff.items():
            if isinstance(changes, dict):
                filtered = dict((k, v) for k, v in changes.items()
                                if include_change(k))
            else:
                filtered = [c for c in changes if include_change(c)]
            if filtered:
                filtered_diff[change_type] = filtered
        return filtered_diff

    @classmethod
    def _gen_path_regex(cls, path):
        if isinstance(path, str):
            if path.startswith('/'):
                path = path[1:]
            return re.compile(r"root\['{}'\].*"
                              .format(r"'\]\['".join(path.split('/'))))
        elif isinstance(path, re.Pattern):
            return path
        raise FracGalUsageError(
            "Record in/exclude paths can either be path strings or regexes, "
            "not '{}'".format(path))
