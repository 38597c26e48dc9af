"""Build hook: compiles the optional Cython kernel.

The package is fully functional without the extension (pure-Python kernels
are selected at import time), so a missing Cython or a failing C toolchain
should not block installation. Set RAAGDECOMP_SKIP_EXTENSION=1 to force a
pure build.
"""

import os
import sys

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("RAAGDECOMP_SKIP_EXTENSION", "") not in ("1", "true"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("raagdecomp._kernel", ["src/raagdecomp/_kernel.pyx"])],
            language_level=3,
        )
    except ImportError as exc:
        sys.stderr.write("Cython unavailable, building without the compiled "
                         "kernel: %s\n" % exc)

setup(ext_modules=ext_modules)
