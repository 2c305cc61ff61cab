import os.path as op
import json
from fracgal.output import (
    format_float, write_csv, read_csv, write_json, OutputDir,
    METADATA_FNAME)
from fracgal.provenance import RunRecord
from fracgal.utils.testing import BaseTestCase
from fracgal.exceptions import FracGalUsageError


class TestFormat(BaseTestCase):

    def test_format_float(self):
        self.assertEqual(format_float(0.1), '0.1')
        self.assertEqual(format_float(1), '1.0')
        self.assertEqual(format_float(1e-20), '1e-20')
        self.assertEqual(format_float(float('nan')), 'nan')

    def test_write_csv(self):
        path = op.join(self.work_dir, 'table.csv')
        write_csv(path, ['n', 'd'], [[1, 0.25], [2, float('nan')]])
        with open(path, 'rb') as f:
            self.assertEqual(f.read(), b'n,d\n1,0.25\n2,nan\n')
        header, rows = read_csv(path)
        self.assertEqual(header, ['n', 'd'])
        self.assertEqual(rows, [['1', '0.25'], ['2', 'nan']])

    def test_write_json(self):
        path = op.join(self.work_dir, 'out.json')
        write_json(path, {'b': 1, 'a': [0.5]})
        with open(path) as f:
            text = f.read()
        self.assertTrue(text.endswith('\n'))
        self.assertEqual(json.loads(text), {'a': [0.5], 'b': 1})


class TestRunRecord(BaseTestCase):

    def test_save_load(self):
        record = RunRecord('solve', {'problem': {'alpha': 0.5}})
        record.record_solver(scheme='l1')
        record.record_timing('solve', 0.1)
        path = op.join(self.work_dir, 'record.json')
        record.save(path)
        loaded = RunRecord.load(path)
        self.assertEqual(loaded, record)
        self.assertEqual(loaded.solver, {'scheme': 'l1'})

    def test_mismatches(self):
        record = RunRecord('solve', {'steps': 64})
        other = RunRecord('solve', {'steps': 64})
        other.record_timing('solve', 3.0)
        self.assertFalse(record.mismatches(other))
        self.assertTrue(record.mismatches(RunRecord('solve', {'steps': 32})))
        self.assertTrue(record.mismatches(RunRecord('verify',
                                                    {'steps': 64})))
        with self.assertRaises(FracGalUsageError):
            record.mismatches(other, include=[1])


class TestOutputDir(BaseTestCase):

    def test_metadata(self):
        path = op.join(self.work_dir, 'run')
        record = RunRecord('solve', {'steps': 64})
        with OutputDir(path, record) as out:
            self.assertEqual(out.join('a.csv'), op.join(path, 'a.csv'))
            record.record_timing('solve', 0.5)
        metadata = RunRecord.load(op.join(path, METADATA_FNAME))
        self.assertEqual(metadata.timings, {'solve': 0.5})
        self.assertEqual(metadata.config, {'steps': 64})

    def test_failed_run(self):
        path = op.join(self.work_dir, 'run')
        with self.assertRaises(RuntimeError):
            with OutputDir(path, RunRecord('solve', {})):
                raise RuntimeError("failed")
        self.assertFalse(op.exists(op.join(path, METADATA_FNAME)))
        # The lock is released
        with OutputDir(path, RunRecord('solve', {})):
            pass
        self.assertTrue(op.exists(op.join(path, METADATA_FNAME)))

    def test_overwrite_warning(self):
        path = op.join(self.work_dir, 'run')
        with OutputDir(path, RunRecord('solve', {'steps': 64})):
            pass
        with self.assertLogs('fracgal', level='WARNING'):
            with OutputDir(path, RunRecord('solve', {'steps': 32})):
                pass
