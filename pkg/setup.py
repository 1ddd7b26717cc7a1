"""Build script for the optional compiled convolution kernels.

The package works without the extension (a pure-Python backend is selected
at import time), so a failed build only costs speed, not functionality.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "qbracelet._kernel._speedups",
                ["src/qbracelet/_kernel/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
