import os

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

use_openmp = os.getenv("LRCOHERENCE_NO_OPENMP") != "1"
omp_flags = ["-fopenmp"] if use_openmp else []

extensions = [
    Extension(
        "lrcoherence._ckernels",
        ["src/lrcoherence/_ckernels.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        # no -ffast-math: results must stay bit-reproducible
        extra_compile_args=["-O3"] + omp_flags,
        extra_link_args=omp_flags,
        # a failed compile leaves the numpy fallback in charge
        optional=True,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )
)
