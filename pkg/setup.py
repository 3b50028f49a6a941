"""Build script: compiles the optional fast kernel extension.

The package works without the extension (pure-Python kernels are selected
at import time when sgq._kernels._fast is missing), so extension build
failures downgrade to a warning instead of aborting the install.
"""
import sys

from setuptools import setup
from setuptools.extension import Extension

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "sgq._kernels._fast",
                ["src/sgq/_kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    print("warning: Cython not available, installing with pure-Python kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
