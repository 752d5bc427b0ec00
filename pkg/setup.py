"""Build the optional Cython kernel extension.

The package works without it: pardec.kernels falls back to the numpy
implementation when pardec._kernels is missing.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "pardec._kernels",
                ["src/pardec/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("Cython not available; building pure-python pardec")

setup(ext_modules=ext_modules)
