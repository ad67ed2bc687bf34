"""Build script for the optional compiled region kernel.

The package is pure Python except for one hot spot: the exact integer
classifier that places a rational angle triple in its region of the
angle cube.  That kernel ships twice, as seifertgeo._kernel_py (always
available) and as the Cython module seifertgeo._kernel_c built here.
If Cython is missing, or SEIFERTGEO_PURE_PYTHON=1 is set, the extension
is skipped and the package falls back to the Python kernel at import.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("SEIFERTGEO_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "seifertgeo._kernel_c",
                    sources=["src/seifertgeo/_kernel_c.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
