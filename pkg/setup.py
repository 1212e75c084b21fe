"""Build script: compiles the optional Cython mining kernel.

The package is pure Python by default; if Cython and a C compiler are
available the closed-pattern enumeration kernel is compiled and picked up
at import time.  A failed extension build must never fail the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "biclust.fca._lcm_cy",
                sources=["src/biclust/fca/_lcm_cy.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
