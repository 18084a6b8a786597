import os

from setuptools import Extension, setup

# The compiled kernels are an optional accelerator; the package runs on the
# pure-Python fallback when Cython (or a C compiler) is unavailable.
ext_modules = []
if os.environ.get("FURTHERNESS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "furtherness._kernels._ckern",
                    ["src/furtherness/_kernels/_ckern.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
