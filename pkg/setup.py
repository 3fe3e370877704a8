"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a pure NumPy
fallback is selected at import time); building it just makes the dense
symplectic-spectrum kernels faster on small matrices.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "symgauss._kernels_cy",
                ["src/symgauss/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )

setup(ext_modules=ext_modules)
