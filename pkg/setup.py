"""Builds the optional compiled tableau kernel.

If Cython or a C compiler is missing the package installs without it and
falls back to the pure-Python kernel at import time.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "ocmeaning.reasoner._kernel_c",
                ["src/ocmeaning/reasoner/_kernel_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
