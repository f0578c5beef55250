"""Builds the optional Cython kernel; the package still installs (pure Python) without a compiler."""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("LPASPEC_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/lpaspec/_kernels.pyx"],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
