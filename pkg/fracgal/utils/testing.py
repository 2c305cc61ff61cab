import os
import os.path as op
import shutil
import logging
from unittest import TestCase
import numpy as np
import fracgal

logger = logging.getLogger('fracgal')
logger.setLevel(logging.WARNING)
handler = logging.StreamHandler()
formatter = logging.Formatter("%(levelname)s - %(message)s")
handler.setFormatter(formatter)
logger.addHandler(handler)

SKIP_SLOW_ARGS = ('FRACGAL_SKIP_SLOW' in os.environ,
                  "Skipping as FRACGAL_SKIP_SLOW env var set")


# A problem with the scalar relaxation equation D^alpha c + c = 1 as its
# only forced mode: on (0, pi) the first Dirichlet eigenvalue is 1
SCALAR_PROBLEM = """
[problem]
format = 1
alpha = 0.5
T = 1.0

[domain]
dim = 1
lengths = 3.141592653589793

[coefficients]
a11 = 1
b1 = 0
c = 0

[forcing]
1 = 1

[discretization]
modes = 1
steps = 512
scheme = l1
"""


class BaseTestCase(TestCase):
    """
    Base class of the tests, providing a clean work directory per test and
    the location of the reference data
    """

    # The path to the test directory, which should sit along side the
    # package directory
    BASE_TEST_DIR = op.abspath(op.join(
        op.dirname(fracgal.__file__), '..', 'test'))

    @classmethod
    def test_data_dir(cls):
        try:
            return cls._test_data_dir
        except AttributeError:
            try:
                cls._test_data_dir = os.environ['FRACGAL_TEST_DATA']
            except KeyError:
                cls._test_data_dir = op.join(cls.BASE_TEST_DIR, 'data')
            os.makedirs(cls._test_data_dir, exist_ok=True)
            return cls._test_data_dir

    @property
    def work_dir(self):
        return op.join(self.test_data_dir(), 'work', self.id())

    def setUp(self):
        self.reset_dirs()

    def reset_dirs(self):
        shutil.rmtree(self.work_dir, ignore_errors=True)
        os.makedirs(self.work_dir)

    def write_problem(self, text, fname='problem.ini'):
        "Writes a problem file into the work directory, returning its path"
        path = op.join(self.work_dir, fname)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def assertAllClose(self, actual, desired, rtol=1e-7, atol=0.0):
        np.testing.assert_allclose(actual, desired, rtol=rtol, atol=atol)
