__version__ = '0.1.0'

__authors__ = [
    ("FracGal developers", None)]

install_requires = [
    'numpy>=1.16',
    'scipy>=1.6',
    'fasteners>=0.7.0',
    'deepdiff>=3.3',
    'tqdm>=4.25.0']


tests_require = [
    'pytest>=4.0',
    'pytest-env>=0.6.2']
