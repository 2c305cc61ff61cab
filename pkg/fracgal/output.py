"""
Writing of run outputs: CSV tables with a header row, '.' decimals and LF
line endings, JSON reports and the run record (metadata.json), all within
an output directory that is locked while it is written
"""
import os
import os.path as op
import csv
import json
import math
import logging
from fasteners import InterProcessLock
from fracgal.utils import JSON_ENCODING
from fracgal.provenance import RunRecord

logger = logging.getLogger('fracgal')


METADATA_FNAME = 'metadata.json'
LOCK_SUFFIX = '.lock'


def format_float(value):
    "Shortest representation that round-trips, 'nan' for missing values"
    value = float(value)
    if math.isnan(value):
        return 'nan'
    return repr(value)


def write_csv(path, header, rows):
    """
    Writes a table, floats in their shortest round-trip representation

    Parameters
    ----------
    path : str
        Path of the file
    header : list[str]
        Column names
    rows : iterable[list]
        The rows, ints are written as is, other numbers as floats
    """
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([v if isinstance(v, (int, str)) else
                             format_float(v) for v in row])


def read_csv(path):
    "Reads a table written by write_csv, returning the header and rows"
    with open(path, newline='', encoding='utf-8') as f:
        rows = list(csv.reader(f))
    return rows[0], rows[1:]


def write_json(path, obj):
    with open(path, 'w', **JSON_ENCODING) as f:
        json.dump(obj, f, indent=2, sort_keys=True)
        f.write('\n')


class OutputDir(object):
    """
    An output directory of a run, locked against concurrent writers while
    open. The run record is written to metadata.json on exit

    Parameters
    ----------
    path : str
        Path of the directory (created if it doesn't exist)
    record : RunRecord
        The record of the run writing to the directory
    """

    def __init__(self, path, record):
        self._path = path
        self._record = record
        self._lock = None

    @property
    def path(self):
        return self._path

    @property
    def record(self):
        return self._record

    def __repr__(self):
        return "OutputDir('{}')".format(self._path)

    def join(self, fname):
        return op.join(self._path, fname)

    def __enter__(self):
        os.makedirs(self._path, exist_ok=True)
        self._lock = InterProcessLock(op.normpath(self._path) + LOCK_SUFFIX,
                                      logger=logger)
        self._lock.acquire()
        self._check_previous()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        try:
            if exc_type is None:
                self._record.save(self.join(METADATA_FNAME))
        finally:
            self._lock.release()

    def _check_previous(self):
        metadata = self.join(METADATA_FNAME)
        if not op.exists(metadata):
            return
        try:
            previous = RunRecord.load(metadata)
        except ValueError:
            logger.warning("Could not read existing run record '{}', it "
                           "will be overwritten".format(metadata))
            return
        mismatches = self._record.mismatches(previous)
        if mismatches:
            logger.warning(
                "Overwriting outputs in '{}' that were produced by a "
                "different configuration: {}".format(self._path,
                                                      mismatches))
