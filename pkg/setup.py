"""Build script for the compiled code-map kernel.

The extension is optional: when Cython or a C compiler is unavailable the
package installs anyway and falls back to the pure-numpy kernel at import
time (see rocktex._kernels).
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class _OptionalBuildExt(build_ext):
    """Build the extension if possible, otherwise warn and continue."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # missing compiler and friends
            self._warn(exc)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: compiled kernel skipped ({exc}); "
              "rocktex will use the numpy fallback")


def _extensions():
    if os.environ.get("ROCKTEX_NO_EXTENSION"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        print(f"WARNING: compiled kernel skipped ({exc})")
        return []
    from setuptools import Extension

    ext = Extension(
        "rocktex._kernels._codemap_cy",
        sources=["src/rocktex/_kernels/_codemap_cy.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        # -ffp-contract=off keeps the interpolation arithmetic bit-identical
        # to the numpy fallback (no fused multiply-add).
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": _OptionalBuildExt},
)
