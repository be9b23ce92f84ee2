"""Build the optional Cython enumeration kernel.

The package works without it: ``planepart.kernel`` falls back to the
pure-Python implementation when the extension cannot be imported.

    pip install -e . --no-build-isolation
    python setup.py build_ext --inplace      # rebuild the kernel only
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PLANEPART_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("planepart._kernel", ["src/planepart/_kernel.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "language_level": "3",
            },
        )

setup(ext_modules=ext_modules)
