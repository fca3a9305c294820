"""Build script: compiles the optional term-arithmetic kernel.

The compiled extension is a pure accelerator; if Cython or a C compiler is
unavailable the package installs with the pure-Python kernel only.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "singmin.exact._termops_cy",
        sources=["src/singmin/exact/_termops_cy.pyx"],
    )
    ext.optional = True
    ext_modules = cythonize(
        [ext],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
