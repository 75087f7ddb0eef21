"""Build script: compiles the optional fast kernels when Cython is available.

The package works without the extension (a pure numpy fallback is selected
at import time), so the extension is marked optional and any build failure
degrades to the fallback instead of breaking the install.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("LUNEKIT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools.extension import Extension

        ext = Extension(
            "lunekit._kernels._core",
            sources=["src/lunekit/_kernels/_core.pyx"],
            extra_compile_args=["-O3"],
            optional=True,
        )
        ext_modules = cythonize(
            [ext],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
