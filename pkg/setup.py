"""Build script: compiles the optional speedup extension.

The package is pure Python plus one optional Cython extension holding the
hot enumeration kernels.  If Cython or a C compiler is unavailable the
extension is skipped and the pure-Python twin in coxshuffle._kernels_py is
used at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping speedup extension ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc})")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "coxshuffle._kernels",
                ["src/coxshuffle/_kernels.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("warning: Cython not available, building without speedup extension")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
