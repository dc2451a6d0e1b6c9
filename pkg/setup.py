"""Build script.

The compiled Smith-normal-form kernel is a best-effort accelerator: if
Cython or a C++ toolchain is missing the build falls through to the pure
Python implementation, which homkn.snf selects automatically at import.
Set HOMKN_NO_EXT=1 to skip the extension on purpose.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HOMKN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "homkn._snf_core",
                    sources=["src/homkn/_snf_core.pyx"],
                    language="c++",
                    extra_compile_args=["-O2", "-std=c++17"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
