"""Build script for the optional compiled elimination kernel.

If Cython or a C++ compiler is unavailable the package installs without the
extension and falls back to the pure-Python kernel at import time.
"""
import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            self.warn(f"skipping compiled kernel: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self.warn(f"skipping {ext.name}: {exc}")


def extensions():
    if os.environ.get("WEDGELAB_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    ext = Extension(
        "wedgelab.homology._elim",
        ["src/wedgelab/homology/_elim.pyx"],
        extra_compile_args=["-O3", "-std=c++17"],
    )
    try:
        return cythonize([ext], language_level=3, quiet=True)
    except Exception as exc:
        print(f"skipping compiled kernel: {exc}")
        return []


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
