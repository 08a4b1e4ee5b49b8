import os

import numpy as np
from setuptools import Extension, setup

# The compiled kernels are an optional speedup; the package falls back to the
# numpy implementation in kstab._kernels_py when the extension is absent.
# Set KSTAB_PURE=1 to skip compilation entirely.
extensions = []
if not os.environ.get("KSTAB_PURE"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "kstab._kernels",
                    ["src/kstab/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        extensions = []

setup(ext_modules=extensions)
