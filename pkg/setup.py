"""Build script for the optional compiled clique-enumeration kernel.

The package is fully functional without the extension; coxcat.kernels
falls back to the pure-Python implementation when the import fails.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("coxcat._kernels", ["src/coxcat/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
