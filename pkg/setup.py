"""Build script: compiles the Cython kernel extension when Cython is
available, otherwise installs the pure-Python package (the numpy fallback
is selected automatically at import time)."""

import numpy as np
from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/mmdnmf/_kernels_cy.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(
    ext_modules=ext_modules,
    include_dirs=[np.get_include()],
)
