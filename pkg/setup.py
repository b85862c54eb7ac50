"""Build script: compiles the optional integer-polynomial kernel.

The compiled extension is a performance twin of torigcd.kernel.intpoly_py;
the package works without it.  Set TORIGCD_NO_EXT=1 to skip compilation.
"""

import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("TORIGCD_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("torigcd.kernel._intpoly", ["src/torigcd/kernel/_intpoly.pyx"])
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
