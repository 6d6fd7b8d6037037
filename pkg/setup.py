"""Build script: compiles the scan kernel when Cython + a C compiler are available.

The package works without the extension (srcodes.scan falls back to the
pure-numpy kernel), so a failed extension build is downgraded to a warning
rather than aborting the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "srcodes._scan",
                ["src/srcodes/_scan.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    sys.stderr.write(f"warning: building without compiled scan kernel ({exc})\n")

setup(ext_modules=ext_modules)
