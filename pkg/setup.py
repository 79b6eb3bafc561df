"""Builds the optional compiled kernel extension.

The package is fully functional without it (carrymul.kernels falls back to
the pure-Python backend), so a missing compiler or Cython only costs speed.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing; wheel still works
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: building carrymul._speedups failed ({exc}); "
            "falling back to the pure-Python kernels",
            file=sys.stderr,
        )


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("carrymul._speedups", ["src/carrymul/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("warning: Cython not found; skipping the compiled kernels", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
