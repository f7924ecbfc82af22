"""Build script: compiles the optional fast kernel.

The package works without the extension (a pure-Python twin of the kernel is
bundled); if Cython or a C compiler is unavailable the build silently skips it.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("equicolor._core", ["src/equicolor/_core.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
