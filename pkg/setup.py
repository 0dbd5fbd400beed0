"""Build script: compiles the optional fast-scan extension.

The package is fully functional without the extension (a pure-Python
twin of every kernel ships in disjhull._kernels.reference); the build
therefore degrades gracefully when Cython or a C compiler is missing.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/disjhull/_kernels/_fastscan.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
