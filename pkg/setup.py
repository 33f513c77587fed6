"""Build script: compiles the optional Cython kernels.

The package works without the extension (pure-Python fallbacks are selected
at import time), so a failed cythonize is tolerated rather than fatal.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "extburnside._kernels_c",
                ["src/extburnside/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
