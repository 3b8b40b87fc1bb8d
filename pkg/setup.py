"""Builds the optional compiled flip kernel.

If Cython or a C compiler is missing the package still installs and the
sampler falls back to the pure-Python kernel.
"""
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure means fallback
            print(f"warning: compiled flip kernel not built ({exc}); using the Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: could not build {ext.name} ({exc}); using the Python kernel")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not found; the compiled flip kernel is skipped")
        return []
    ext = Extension("dentile.sampler._flipcore", ["src/dentile/sampler/_flipcore.pyx"])
    return cythonize([ext], language_level=3, quiet=True)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
