from setuptools import setup
from setuptools.extension import Extension

# The compiled kernel is optional: if Cython (or a C compiler) is missing,
# the package still installs and falls back to the pure-Python kernels.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("bimeta._native", ["src/bimeta/_native.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
