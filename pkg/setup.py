"""Build script: compiles the optional bitmask kernels.

The extension is a pure speedup; if Cython or a C compiler is missing the
install still succeeds and homtopo falls back to the pure-Python kernels.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that degrades to the pure-Python kernels on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print("*" * 72)
        print("WARNING: building the compiled kernels failed; homtopo will")
        print("use the pure-Python fallback. Reason: %s" % (exc,))
        print("*" * 72)


def extensions():
    if os.environ.get("HOMTOPO_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "homtopo._kernels._core",
        sources=["src/homtopo/_kernels/_core.pyx"],
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
