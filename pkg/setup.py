import sys
import os.path
from setuptools import setup, find_packages

PACKAGE_NAME = 'fracgal'

# Get version from module inside package
sys.path.insert(0, os.path.join(os.path.dirname(__file__),
                                PACKAGE_NAME))
from __about__ import __version__, install_requires, tests_require  # noqa pylint: disable=no-name-in-module
sys.path.pop(0)


setup(
    name=PACKAGE_NAME,
    version=__version__,
    author='FracGal developers',
    packages=find_packages(exclude=['test', 'test.*']),
    license='The Apache Software Licence 2.0',
    description=(
        'Spectral-Galerkin solution and verification of time-fractional '
        'elliptic problems'),
    long_description=open('README.rst').read(),
    install_requires=install_requires,
    tests_require=tests_require,
    extras_require={
        'test': tests_require},
    entry_points={
        'console_scripts': ['fracgal=fracgal.cli:main']},
    python_requires='>=3.7',
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Mathematics"],
    keywords='fractional calculus galerkin mittag-leffler')
