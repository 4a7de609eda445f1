"""Builds the optional compiled kernel extension.

If Cython or a C compiler is unavailable the install still succeeds and the
package falls back to the pure-numpy kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext = Extension(
        "costgraph._ckernels",
        ["src/costgraph/_ckernels.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
    ext_modules = cythonize([ext], language_level="3")

setup(ext_modules=ext_modules)
