"""Build script: compiles the optional search accelerator.

The compiled kernel is a nice-to-have; if Cython or a C compiler is missing
the install falls back to the pure-Python kernel with identical behavior.
Set GYROKIT_PURE=1 to skip the extension on purpose.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: compiled kernel skipped ({exc}); using pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} skipped ({exc}); using pure-Python kernel")


def extensions():
    if os.environ.get("GYROKIT_PURE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("gyrokit._search_c", ["src/gyrokit/_search_c.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
