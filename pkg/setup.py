"""Build script: compiles the optional fast-path kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so a failed compile only costs speed.  Set
MINERTIA_SKIP_EXT=1 to skip the extension build entirely.
"""

import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as non-fatal."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            warnings.warn(f"skipping fast-path extension: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping fast-path extension {ext.name}: {exc}")


def extensions():
    if os.environ.get("MINERTIA_SKIP_EXT") == "1":
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        warnings.warn(f"fast-path extension not built: {exc}")
        return []
    ext = Extension(
        "minertia._kernels",
        ["src/minertia/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
