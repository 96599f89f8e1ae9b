# The compiled kernels are optional: if Cython or a C compiler is missing the
# package still installs and falls back to indpoly._kernels_py at import.
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "indpoly._ckernels",
                ["src/indpoly/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
