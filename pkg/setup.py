"""Build hooks for the optional compiled matching kernel.

The package is pure Python plus one optional Cython extension for the
matching inner loops. When Cython or a C toolchain is missing the build
falls through to the pure-Python backend selected at import time.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


def extensions():
    if os.environ.get("OMPMENTOR_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    return cythonize(
        [
            Extension(
                "ompmentor.matching._speedups",
                ["src/ompmentor/matching/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )


class optional_build_ext(build_ext):
    """Never fail the install because the extension would not compile."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain
            print(f"warning: skipping compiled kernel ({exc}); using pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); using pure-Python backend")


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
