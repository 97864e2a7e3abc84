"""Build hooks for the optional compiled search kernel.

The package is pure Python plus one accelerator module; if Cython or a C
compiler is unavailable the build falls back to the interpreted kernel and
everything still works (slower).
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler: ship pure Python
            print(f"warning: compiled kernel skipped ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: compiled kernel skipped ({exc})")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("latgate._speedups", ["src/latgate/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
