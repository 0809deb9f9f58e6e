"""Build hook for the optional compiled search kernels.

The package is fully functional without the extension (a pure-Python/numpy
fallback is selected at import time), so any failure to cythonize or compile
degrades to a pure build instead of aborting the install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/monotri/_kernels/_speedups.pyx",
        language_level="3",
        compiler_directives={"boundscheck": False, "wraparound": False, "cdivision": True},
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    print(f"warning: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
